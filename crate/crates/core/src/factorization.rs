//! The queer crystal on signed unimodal factorizations.

use crate::crystal::{Color, Crystal, Weight};
use crate::error::{Error, Result};
use crate::kraskiewicz::{pkr, pkr_inverse};
use crate::pt_operators::signed_op;
use crate::tableau::is_unimodal;
use crate::type_b::{Factor, Factorization, Sign};
use crate::word::Word;

fn checked(sign: Sign, letters: Vec<u32>) -> Result<Factor> {
    Factor::new(sign, Word(letters)).map_err(|e| Error::Internal(format!("odd operator produced a bad factor: {e}")))
}

fn with_first_two(f: &Factorization, a1: Factor, a2: Factor) -> Factorization {
    let mut factors = f.factors.clone();
    factors[0] = a1;
    factors[1] = a2;
    Factorization::new(factors)
}

/// Explicit `ẽ_1̄`: moves the first letter of the second factor to the end
/// of the first.
pub fn e_bar1_fact(f: &Factorization) -> Result<Option<Factorization>> {
    if f.m() < 2 {
        return Ok(None);
    }
    let (a1, a2) = (&f.factors[0], &f.factors[1]);
    let (w1, w2) = (a1.word.letters(), a2.word.letters());
    if w2.is_empty() {
        return Ok(None);
    }
    let mut new1 = w1.to_vec();
    new1.push(w2[0]);
    let new2 = w2[1..].to_vec();
    let joined: Vec<u32> = w1.iter().chain(w2).copied().collect();
    if !is_unimodal(&joined) {
        if !is_unimodal(&new1) {
            return Ok(None);
        }
        return Ok(Some(with_first_two(
            f,
            checked(a1.sign, new1)?,
            checked(a2.sign, new2)?,
        )));
    }
    if a1.sign != Sign::Zero && a2.sign == Sign::Plus {
        return Ok(None);
    }
    let lead = if w1.is_empty() { a2.sign } else { a1.sign };
    let tail = if w2.len() == 1 { Sign::Zero } else { Sign::Plus };
    Ok(Some(with_first_two(f, checked(lead, new1)?, checked(tail, new2)?)))
}

/// Explicit `f̃_1̄`: moves the last letter of the first factor to the front
/// of the second.
pub fn f_bar1_fact(f: &Factorization) -> Result<Option<Factorization>> {
    if f.m() < 2 {
        return Ok(None);
    }
    let (a1, a2) = (&f.factors[0], &f.factors[1]);
    let (w1, w2) = (a1.word.letters(), a2.word.letters());
    let Some((&last, rest)) = w1.split_last() else {
        return Ok(None);
    };
    let new1 = rest.to_vec();
    let new2: Vec<u32> = std::iter::once(last).chain(w2.iter().copied()).collect();
    let joined: Vec<u32> = w1.iter().chain(w2).copied().collect();
    if !is_unimodal(&joined) {
        if !is_unimodal(&new2) {
            return Ok(None);
        }
        return Ok(Some(with_first_two(
            f,
            checked(a1.sign, new1)?,
            checked(a2.sign, new2)?,
        )));
    }
    if !w2.is_empty() && a2.sign == Sign::Minus {
        return Ok(None);
    }
    let (lead, tail) = if w1.len() == 1 {
        (Sign::Zero, a1.sign)
    } else {
        (a1.sign, Sign::Minus)
    };
    Ok(Some(with_first_two(f, checked(lead, new1)?, checked(tail, new2)?)))
}

/// Any operator moved through primed insertion: act on the recording
/// tableau and invert.
pub fn transport_fact(c: Color, up: bool, f: &Factorization) -> Result<Option<Factorization>> {
    let m = f.m();
    let (p, t) = pkr(f)?;
    match signed_op(c, up, &t, m)? {
        None => Ok(None),
        Some(t2) => Ok(Some(pkr_inverse(&p, &t2, m)?)),
    }
}

/// `U_m^±(w)` with even operators by transport and odd operators by the
/// explicit rules.
#[derive(Clone, Copy, Debug)]
pub struct FactorizationCrystal {
    pub m: usize,
}

impl Crystal for FactorizationCrystal {
    type Elem = Factorization;

    fn rank(&self) -> usize {
        self.m
    }

    fn weight(&self, x: &Factorization) -> Weight {
        x.weight()
    }

    fn raise(&self, c: Color, x: &Factorization) -> Result<Option<Factorization>> {
        match c {
            Color::Bar1 => e_bar1_fact(x),
            Color::Even(_) => transport_fact(c, true, x),
        }
    }

    fn lower(&self, c: Color, x: &Factorization) -> Result<Option<Factorization>> {
        match c {
            Color::Bar1 => f_bar1_fact(x),
            Color::Even(_) => transport_fact(c, false, x),
        }
    }

    fn encode(&self, x: &Factorization) -> String {
        x.to_string()
    }
}
