//! Crystal operators on primed tableaux: explicit rules for `f_i` and the
//! odd operators, transport through mixed insertion for `e_i`, and the
//! signed variants obtained by stripping diagonal primes.

use std::collections::BTreeMap;

use crate::crystal::{Color, Crystal, Weight};
use crate::error::{Error, Result};
use crate::mixed_insertion::{hm, hm_inverse};
use crate::tableau::{
    canonical_standard, dpr, pr, pt_weight, rw_pt_cells, PrimedLetter, PrimedTableau, StandardTableau,
};
use crate::word::{self, unbracketed, Word};

pub fn e_bar1_pt(t: &PrimedTableau) -> Option<PrimedTableau> {
    if t.num_rows() == 0 {
        return None;
    }
    let one = PrimedLetter::unprimed(1);
    if t.get(1, 1) == Some(PrimedLetter::unprimed(2)) {
        let mut out = t.clone();
        out.set(1, 1, one);
        return Some(out);
    }
    let c = (2..=t.row_end(1)).find(|&c| t.get(1, c) == Some(PrimedLetter::primed(2)))?;
    let mut out = t.clone();
    out.set(1, c, one);
    Some(out)
}

pub fn f_bar1_pt(t: &PrimedTableau, n: usize) -> Option<PrimedTableau> {
    if n < 2 || t.num_rows() == 0 {
        return None;
    }
    let c = (1..=t.row_end(1))
        .rev()
        .find(|&c| t.get(1, c) == Some(PrimedLetter::unprimed(1)))?;
    if t.get(1, c + 1) == Some(PrimedLetter::primed(2)) {
        return None;
    }
    let mut out = t.clone();
    out.set(1, c, PrimedLetter::unprimed(2).with_prime(c > 1));
    Some(out)
}

type Grid = BTreeMap<(usize, usize), u32>;

fn to_grid(t: &PrimedTableau) -> Grid {
    t.cells()
        .into_iter()
        .map(|(r, c)| ((r, c), t.get(r, c).unwrap().0))
        .collect()
}

/// Reflects in the diagonal, sending `k'` to `k` and `k` to `(k+1)'`.
fn conjugate(g: &Grid) -> Grid {
    g.iter().map(|(&(r, c), &v)| ((c, r), v + 1)).collect()
}

fn unconjugate(g: &Grid) -> Grid {
    g.iter().map(|(&(r, c), &v)| ((c, r), v - 1)).collect()
}

/// The box rules for `f_i` applied at the cell `x` holding the letter `i`.
fn ribbon_rule(g: &mut Grid, x: (usize, usize), i: u32, diagonal_rule: bool) {
    let next_primed = 2 * i + 1;
    let next = 2 * i + 2;
    let east = (x.0, x.1 + 1);
    if g.get(&east) == Some(&next_primed) {
        g.insert(x, next_primed);
        g.insert(east, next);
        return;
    }
    let in_family = |g: &Grid, cell: (usize, usize)| matches!(g.get(&cell), Some(&v) if v == next_primed || v == next);
    let mut head = x;
    loop {
        let south = (head.0 + 1, head.1);
        if in_family(g, south) {
            head = south;
            continue;
        }
        if head.1 > 1 && in_family(g, (head.0, head.1 - 1)) {
            head = (head.0, head.1 - 1);
            continue;
        }
        break;
    }
    if head == x {
        g.insert(x, next);
    } else if diagonal_rule && head.0 == head.1 {
        g.insert(x, next_primed);
    } else {
        g.insert(x, next_primed);
        g.insert(head, next);
    }
}

/// `f_i` on primed tableaux by the ribbon rules.
pub fn f_even_pt(i: usize, t: &PrimedTableau, n: usize) -> Result<Option<PrimedTableau>> {
    if i == 0 || i >= n {
        return Ok(None);
    }
    let i32_ = i as u32;
    let (w, cells) = rw_pt_cells(t);
    let (free, _) = unbracketed(w.letters(), i32_);
    let Some(&pos) = free.last() else {
        return Ok(None);
    };
    let (r, c) = cells[pos];
    let primed = t.get(r, c).unwrap().is_primed();
    let mut g = to_grid(t);
    if primed {
        let mut star = conjugate(&g);
        ribbon_rule(&mut star, (c, r), i32_, false);
        g = unconjugate(&star);
    } else {
        ribbon_rule(&mut g, (r, c), i32_, true);
    }
    let mut out = t.clone();
    for (&(r, c), &v) in &g {
        if !out.contains(r, c) {
            return Err(Error::Internal(format!("ribbon left the shape of {t}")));
        }
        out.set(r, c, PrimedLetter(v));
    }
    Ok(Some(out))
}

/// Applies a word operator to a primed tableau through mixed insertion with
/// recording tableau `q`.
pub fn transport(
    t: &PrimedTableau,
    q: &StandardTableau,
    op: impl Fn(&Word) -> Option<Word>,
) -> Result<Option<PrimedTableau>> {
    let w = hm_inverse(t, q)?;
    match op(&w) {
        None => Ok(None),
        Some(w2) => Ok(Some(hm(&w2)?.0)),
    }
}

/// `e_i` on primed tableaux, transported through mixed insertion with the
/// row-reading standard tableau.
pub fn e_even_pt(i: usize, t: &PrimedTableau, n: usize) -> Result<Option<PrimedTableau>> {
    if i == 0 || i >= n {
        return Ok(None);
    }
    transport(t, &canonical_standard(&t.shape()), |w| word::e_even(i as u32, w))
}

/// Word operator for a colour on `B_n^{⊗m}`.
pub fn word_op(c: Color, up: bool, n: usize) -> impl Fn(&Word) -> Option<Word> {
    move |w: &Word| match (c, up) {
        (Color::Even(i), _) if i == 0 || i >= n => None,
        (Color::Even(i), true) => word::e_even(i as u32, w),
        (Color::Even(i), false) => word::f_even(i as u32, w),
        (Color::Bar1, _) if n < 2 => None,
        (Color::Bar1, true) => word::e_bar1(w),
        (Color::Bar1, false) => word::f_bar1(w),
    }
}

/// Primed tableau operator for any colour.
pub fn pt_op(c: Color, up: bool, t: &PrimedTableau, n: usize) -> Result<Option<PrimedTableau>> {
    match (c, up) {
        (Color::Even(i), true) => e_even_pt(i, t, n),
        (Color::Even(i), false) => f_even_pt(i, t, n),
        (Color::Bar1, true) => Ok(if n >= 2 { e_bar1_pt(t) } else { None }),
        (Color::Bar1, false) => Ok(f_bar1_pt(t, n)),
    }
}

/// Signed primed tableau operator: strip diagonal primes, act, restore them.
pub fn signed_op(c: Color, up: bool, t: &PrimedTableau, n: usize) -> Result<Option<PrimedTableau>> {
    let (plain, primes) = dpr(t);
    match pt_op(c, up, &plain, n)? {
        None => Ok(None),
        Some(u) => Ok(Some(pr(&u, &primes)?)),
    }
}

/// `PT_n(λ)` for all shapes, with the explicit operators.
#[derive(Clone, Copy, Debug)]
pub struct PtCrystal {
    pub n: usize,
}

impl Crystal for PtCrystal {
    type Elem = PrimedTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &PrimedTableau) -> Weight {
        pt_weight(x, self.n)
    }

    fn raise(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        pt_op(c, true, x, self.n)
    }

    fn lower(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        pt_op(c, false, x, self.n)
    }

    fn encode(&self, x: &PrimedTableau) -> String {
        x.to_string()
    }
}

/// Primed tableaux with every operator transported through mixed insertion
/// against a fixed recording tableau per shape (row reading when `q` is
/// `None`).
#[derive(Clone, Debug)]
pub struct PtTransportCrystal {
    pub n: usize,
    pub q: Option<StandardTableau>,
}

impl PtTransportCrystal {
    fn apply(&self, c: Color, up: bool, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        let q = match &self.q {
            Some(q) => q.clone(),
            None => canonical_standard(&x.shape()),
        };
        transport(x, &q, word_op(c, up, self.n))
    }
}

impl Crystal for PtTransportCrystal {
    type Elem = PrimedTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &PrimedTableau) -> Weight {
        pt_weight(x, self.n)
    }

    fn raise(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        self.apply(c, true, x)
    }

    fn lower(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        self.apply(c, false, x)
    }

    fn encode(&self, x: &PrimedTableau) -> String {
        x.to_string()
    }
}

/// Signed primed tableaux; components are indexed by prime type.
#[derive(Clone, Copy, Debug)]
pub struct SptCrystal {
    pub n: usize,
}

impl Crystal for SptCrystal {
    type Elem = PrimedTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &PrimedTableau) -> Weight {
        pt_weight(x, self.n)
    }

    fn raise(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        signed_op(c, true, x, self.n)
    }

    fn lower(&self, c: Color, x: &PrimedTableau) -> Result<Option<PrimedTableau>> {
        signed_op(c, false, x, self.n)
    }

    fn encode(&self, x: &PrimedTableau) -> String {
        x.to_string()
    }
}
