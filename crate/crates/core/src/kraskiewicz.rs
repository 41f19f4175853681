//! Kraśkiewicz insertion of type B reduced words, its inverse, vee
//! detection, and the primed variant on signed unimodal factorizations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tableau::{
    is_unimodal, longest_unimodal_subword_len, position_of, unimodal_split, validate_standard, PrimedLetter,
    PrimedTableau, ShiftedTableau, StandardTableau,
};
use crate::type_b::{is_reduced, Factor, Factorization, Sign};
use crate::word::Word;

/// Decomposition tableau with entries in `{0, 1, ...}`.
pub type DecompositionTableau = ShiftedTableau<u32>;

/// Which branch of the row rule fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KrCase {
    /// The letter extends the row.
    Append,
    /// A `0` meets a row containing `1 0 1`; the row is untouched.
    SkipZero,
    /// `b ≠ a` in the increasing part, then `d ≠ c` in the decreasing part.
    ReplaceReplace,
    ReplaceKeep,
    KeepReplace,
    KeepKeep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KrStep {
    pub row: usize,
    pub letter: u32,
    pub case: KrCase,
    pub bumped: Option<u32>,
}

fn contains_101(row: &[u32]) -> bool {
    let Some(first) = row.iter().position(|&a| a == 1) else {
        return false;
    };
    let Some(zero) = row[first..].iter().position(|&a| a == 0) else {
        return false;
    };
    row[first + zero..].contains(&1)
}

/// Inserts `a` into one row. Returns the case and the letter passed to the
/// next row, if any.
pub fn kr_row_insert(row: &mut Vec<u32>, a: u32) -> Result<(KrCase, Option<u32>)> {
    row.push(a);
    if is_unimodal(row) {
        return Ok((KrCase::Append, None));
    }
    row.pop();
    if a == 0 && contains_101(row) {
        return Ok((KrCase::SkipZero, Some(0)));
    }
    let before = Word(row.clone());
    let not_reduced = || Error::NotReduced(format!("{before} then {a}"));
    let (down, up) = unimodal_split(row).map_err(|_| not_reduced())?;
    let k = down.len();
    let b_pos = (0..up.len()).find(|&p| up[p] >= a).ok_or_else(not_reduced)?;
    let b = up[b_pos];
    let c = if b != a {
        row[k + b_pos] = a;
        b
    } else {
        a + 1
    };
    let d_pos = (0..k).find(|&p| down[p] <= c).ok_or_else(not_reduced)?;
    let d = down[d_pos];
    let out = if d != c {
        row[d_pos] = c;
        d
    } else {
        c.checked_sub(1).ok_or_else(not_reduced)?
    };
    let case = match (b != a, d != c) {
        (true, true) => KrCase::ReplaceReplace,
        (true, false) => KrCase::ReplaceKeep,
        (false, true) => KrCase::KeepReplace,
        (false, false) => KrCase::KeepKeep,
    };
    Ok((case, Some(out)))
}

/// Inserts `a` into `p`, returning the new tableau, the new cell and the
/// per-row trace.
pub fn kr_insert(p: &DecompositionTableau, a: u32) -> Result<(DecompositionTableau, (usize, usize), Vec<KrStep>)> {
    let mut rows: Vec<Vec<u32>> = p.rows().to_vec();
    let mut letter = a;
    let mut trace = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let (case, out) = kr_row_insert(&mut rows[r], letter)?;
        trace.push(KrStep {
            row: r + 1,
            letter,
            case,
            bumped: out,
        });
        match out {
            None => {
                let cell = (r + 1, r + rows[r].len());
                let t = ShiftedTableau::from_rows(rows)
                    .map_err(|e| Error::Internal(format!("insertion broke the shape: {e}")))?;
                return Ok((t, cell, trace));
            }
            Some(next) => {
                letter = next;
                r += 1;
            }
        }
    }
}

/// `(P, Q)` for a reduced word.
pub fn kr(word: &Word) -> Result<(DecompositionTableau, StandardTableau)> {
    kr_traced(word).map(|(p, q, _)| (p, q))
}

/// As [`kr`], also returning every row step.
pub fn kr_traced(word: &Word) -> Result<(DecompositionTableau, StandardTableau, Vec<KrStep>)> {
    if !is_reduced(word) {
        return Err(Error::NotReduced(word.to_string()));
    }
    let mut p = DecompositionTableau::empty();
    let mut q = StandardTableau::empty();
    let mut trace = Vec::new();
    for (k, &a) in word.letters().iter().enumerate() {
        let (next, (r, _), steps) = kr_insert(&p, a)?;
        p = next;
        q.push_to_row(r, k as u32 + 1);
        trace.extend(steps);
    }
    Ok((p, q, trace))
}

/// Every `(row, a)` that the row rule sends to `(after, Some(out))`.
fn kr_row_preimages(after: &[u32], out: u32) -> Vec<(Vec<u32>, u32)> {
    let mut cands: Vec<(Vec<u32>, u32)> = Vec::new();
    if out == 0 {
        cands.push((after.to_vec(), 0));
    }
    let len = after.len();
    for s in 1..=len {
        let mut downs: Vec<(Vec<u32>, u32)> = Vec::new();
        if let Some(p) = (0..s).rev().find(|&p| after[p] > out) {
            let mut before = after.to_vec();
            let c = before[p];
            before[p] = out;
            downs.push((before, c));
        }
        if after[..s].contains(&(out + 1)) {
            downs.push((after.to_vec(), out + 1));
        }
        for (before, c) in downs {
            if let Some(q) = (s..len).rev().find(|&q| before[q] < c) {
                let mut row = before.clone();
                let a = row[q];
                row[q] = c;
                cands.push((row, a));
            }
            if c >= 1 && before[s..].contains(&(c - 1)) {
                cands.push((before.clone(), c - 1));
            }
        }
    }
    let mut verified = Vec::new();
    for (row, a) in cands {
        if !is_unimodal(&row) || verified.contains(&(row.clone(), a)) {
            continue;
        }
        let mut trial = row.clone();
        if matches!(kr_row_insert(&mut trial, a), Ok((_, Some(o)))if o == out && trial == after) {
            verified.push((row, a));
        }
    }
    verified
}

/// Undoes the insertion that created the corner `cell`.
pub fn kr_remove(p: &DecompositionTableau, cell: (usize, usize)) -> Result<(DecompositionTableau, u32)> {
    let (r0, c0) = cell;
    let not_image = || Error::NotInImage(format!("cannot remove ({r0},{c0}) from {p}"));
    if !p.contains(r0, c0) || p.row_end(r0) != c0 || p.contains(r0 + 1, c0) {
        return Err(not_image());
    }
    let mut rows: Vec<Vec<u32>> = p.rows().to_vec();
    let v = rows[r0 - 1].pop().unwrap();
    if rows[r0 - 1].is_empty() {
        rows.pop();
    }
    let mut found: Vec<(Vec<Vec<u32>>, u32)> = Vec::new();
    fn climb(rows: &mut Vec<Vec<u32>>, r: usize, v: u32, found: &mut Vec<(Vec<Vec<u32>>, u32)>) {
        if r == 1 {
            found.push((rows.clone(), v));
            return;
        }
        let after = rows[r - 2].clone();
        for (before, a) in kr_row_preimages(&after, v) {
            rows[r - 2] = before;
            climb(rows, r - 1, a, found);
        }
        rows[r - 2] = after;
    }
    climb(&mut rows, r0, v, &mut found);
    let mut results = Vec::new();
    for (rows, a) in found {
        let Ok(smaller) = ShiftedTableau::from_rows(rows) else {
            continue;
        };
        if let Ok((again, again_cell, _)) = kr_insert(&smaller, a) {
            if again == *p && again_cell == cell && !results.contains(&(smaller.clone(), a)) {
                results.push((smaller, a));
            }
        }
    }
    results.retain(|(t, a)| {
        let mut w = rw_sdt(t).0;
        w.push(*a);
        is_reduced(&Word(w))
    });
    match results.len() {
        0 => Err(not_image()),
        1 => Ok(results.pop().unwrap()),
        k => Err(Error::Internal(format!(
            "{k} preimages when removing ({r0},{c0}) from {p}: {:?}",
            results.iter().map(|(t, a)| format!("{t} + {a}")).collect::<Vec<_>>()
        ))),
    }
}

/// Recovers the reduced word from `(P, Q)`.
pub fn kr_inverse(p: &DecompositionTableau, q: &StandardTableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::Invalid("tableaux have different shapes".into()));
    }
    validate_sdt(p)?;
    validate_standard(q)?;
    let mut p = p.clone();
    let mut letters = Vec::with_capacity(q.size());
    for k in (1..=q.size() as u32).rev() {
        let cell = position_of(q, k).expect("standard tableau holds every entry");
        let (smaller, a) = kr_remove(&p, cell)?;
        p = smaller;
        letters.push(a);
    }
    letters.reverse();
    Ok(Word(letters))
}

/// Row reading word `P_l ... P_1`.
pub fn rw_sdt(p: &DecompositionTableau) -> Word {
    Word(p.rows().iter().rev().flatten().copied().collect())
}

/// Unimodal rows, each a longest unimodal subword of the row below joined to
/// it, and a reduced reading word.
pub fn validate_sdt(p: &DecompositionTableau) -> Result<()> {
    for (i, row) in p.rows().iter().enumerate() {
        if !is_unimodal(row) {
            return Err(Error::Invalid(format!("row {} is not unimodal", i + 1)));
        }
        if let Some(next) = p.rows().get(i + 1) {
            let joined: Vec<u32> = next.iter().chain(row).copied().collect();
            if longest_unimodal_subword_len(&joined) != row.len() {
                return Err(Error::Invalid(format!(
                    "row {} is not a longest unimodal subword",
                    i + 1
                )));
            }
        }
    }
    let w = rw_sdt(p);
    if !is_reduced(&w) {
        return Err(Error::NotReduced(w.to_string()));
    }
    Ok(())
}

/// 1-based index `k` with `x` strictly increasing and `y` weakly decreasing
/// up to `k`, then `x` weakly decreasing and `y` strictly increasing.
pub fn bottom_index(cells: &[(usize, usize)]) -> Option<usize> {
    if cells.is_empty() {
        return None;
    }
    let mut k = 1;
    while k < cells.len() && cells[k].0 > cells[k - 1].0 && cells[k].1 <= cells[k - 1].1 {
        k += 1;
    }
    let rest_ok = cells[k - 1..].windows(2).all(|p| p[0].0 >= p[1].0 && p[0].1 < p[1].1);
    rest_ok.then_some(k)
}

/// Bottom index of the vee formed by the entries `i..=j` of `q`, counted
/// from `i` (so the first entry has index 1).
pub fn vee_bottom(q: &StandardTableau, i: u32, j: u32) -> Option<usize> {
    let cells: Option<Vec<_>> = (i..=j).map(|v| position_of(q, v)).collect();
    bottom_index(&cells?)
}

/// Primed insertion `(P, T)` of a signed unimodal factorization.
pub fn pkr(f: &Factorization) -> Result<(DecompositionTableau, PrimedTableau)> {
    let word = f.word();
    if !is_reduced(&word) {
        return Err(Error::NotReduced(word.to_string()));
    }
    let mut p = DecompositionTableau::empty();
    let mut marks: HashMap<(usize, usize), PrimedLetter> = HashMap::new();
    for (idx, factor) in f.factors.iter().enumerate() {
        let i = idx as u32 + 1;
        let mut cells = Vec::new();
        for &a in factor.word.letters() {
            let (next, cell, _) = kr_insert(&p, a)?;
            p = next;
            cells.push(cell);
        }
        if cells.is_empty() {
            continue;
        }
        let k = bottom_index(&cells)
            .ok_or_else(|| Error::Internal(format!("factor {} did not insert as a vee", factor.word)))?;
        for (j, &cell) in cells.iter().enumerate() {
            let primed = match (j + 1).cmp(&k) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => factor.sign == Sign::Minus,
                std::cmp::Ordering::Greater => false,
            };
            marks.insert(cell, PrimedLetter::unprimed(i).with_prime(primed));
        }
    }
    let t = PrimedTableau::with_shape(&p.shape(), |r, c| marks[&(r, c)]);
    Ok((p, t))
}

/// Recovers the factorization with `m` factors from `(P, T)`.
pub fn pkr_inverse(p: &DecompositionTableau, t: &PrimedTableau, m: usize) -> Result<Factorization> {
    if p.shape() != t.shape() {
        return Err(Error::Invalid("tableaux have different shapes".into()));
    }
    validate_sdt(p)?;
    if t.rows().iter().flatten().any(|v| v.value() as usize > m) {
        return Err(Error::Invalid(format!("recording tableau has entries above {m}")));
    }
    let not_image = |why: String| Error::NotInImage(why);
    let mut p = p.clone();
    let mut factors = vec![Factor::empty(); m];
    for i in (1..=m as u32).rev() {
        let mut primed: Vec<(usize, usize)> = Vec::new();
        let mut plain: Vec<(usize, usize)> = Vec::new();
        for (r, c) in t.cells() {
            let v = t.get(r, c).unwrap();
            if v.value() == i {
                if v.is_primed() {
                    primed.push((r, c));
                } else {
                    plain.push((r, c));
                }
            }
        }
        if primed.is_empty() && plain.is_empty() {
            continue;
        }
        primed.sort();
        plain.sort_by_key(|&(r, c)| (c, r));
        let cells: Vec<_> = primed.iter().chain(&plain).copied().collect();
        let k = bottom_index(&cells).ok_or_else(|| not_image(format!("entries {i} do not form a vee")))?;
        let k_primed = t.get(cells[k - 1].0, cells[k - 1].1).unwrap().is_primed();
        if primed.len() != k - 1 + k_primed as usize {
            return Err(not_image(format!("primes of entry {i} are not before the bottom")));
        }
        let sign = if k_primed { Sign::Minus } else { Sign::Plus };
        let mut letters = Vec::with_capacity(cells.len());
        for &cell in cells.iter().rev() {
            let (smaller, a) = kr_remove(&p, cell)?;
            p = smaller;
            letters.push(a);
        }
        letters.reverse();
        factors[i as usize - 1] = Factor {
            sign,
            word: Word(letters),
        };
    }
    if p.size() != 0 {
        return Err(Error::Internal("insertion tableau not exhausted".into()));
    }
    Ok(Factorization::new(factors))
}
