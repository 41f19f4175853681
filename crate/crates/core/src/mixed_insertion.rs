//! Haiman mixed insertion of words into primed tableaux, and its inverse.

use crate::error::{Error, Result};
use crate::tableau::{position_of, validate_pt, validate_standard, PrimedLetter, PrimedTableau, StandardTableau};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Row(usize),
    Column(usize),
}

/// One step of an insertion: `letter` entered `mode` and either bumped
/// `bumped` out of `cell` or was appended there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HmStep {
    pub mode: Mode,
    pub letter: PrimedLetter,
    pub cell: (usize, usize),
    pub bumped: Option<PrimedLetter>,
}

/// Inserts the letter `b` into `t`, returning the new tableau, the new cell
/// and the bumping path.
pub fn hm_insert(t: &PrimedTableau, b: u32) -> Result<(PrimedTableau, (usize, usize), Vec<HmStep>)> {
    if b == 0 {
        return Err(Error::Invalid("letters start at 1".into()));
    }
    let mut t = t.clone();
    let mut x = PrimedLetter::unprimed(b);
    let mut mode = Mode::Row(1);
    let mut trace = Vec::new();
    loop {
        let hit = match mode {
            Mode::Row(r) => {
                if r > t.num_rows() {
                    None
                } else {
                    (r..=t.row_end(r)).find(|&c| t.get(r, c).unwrap() > x).map(|c| (r, c))
                }
            }
            Mode::Column(c) => (1..=t.num_rows().min(c))
                .find(|&r| t.get(r, c).is_some_and(|v| v > x))
                .map(|r| (r, c)),
        };
        let Some((r, c)) = hit else {
            let cell = append(&mut t, mode, x)?;
            trace.push(HmStep {
                mode,
                letter: x,
                cell,
                bumped: None,
            });
            return Ok((t, cell, trace));
        };
        let a = t.get(r, c).unwrap();
        t.set(r, c, x);
        trace.push(HmStep {
            mode,
            letter: x,
            cell: (r, c),
            bumped: Some(a),
        });
        if r == c {
            x = a.with_prime(true);
            mode = Mode::Column(c + 1);
        } else if a.is_primed() {
            x = a;
            mode = Mode::Column(c + 1);
        } else {
            x = a;
            mode = Mode::Row(r + 1);
        }
    }
}

fn append(t: &mut PrimedTableau, mode: Mode, x: PrimedLetter) -> Result<(usize, usize)> {
    match mode {
        Mode::Row(r) if r <= t.num_rows() + 1 => Ok(t.push_to_row(r, x)),
        Mode::Column(c) => {
            let r = t.column_len(c) + 1;
            let fits = r < c && r <= t.num_rows() && t.row_end(r) + 1 == c;
            if !fits {
                return Err(Error::Internal(format!("cannot append {x} to column {c}")));
            }
            Ok(t.push_to_row(r, x))
        }
        Mode::Row(r) => Err(Error::Internal(format!("cannot append {x} to row {r}"))),
    }
}

/// Undoes the insertion that created the corner `cell`, returning the
/// smaller tableau and the inserted letter.
pub fn hm_remove(t: &PrimedTableau, cell: (usize, usize)) -> Result<(PrimedTableau, u32)> {
    let (r0, c0) = cell;
    let not_image = |why: &str| Error::NotInImage(format!("{why} while removing ({r0},{c0}) from {t}"));
    if t.contains(r0 + 1, c0) {
        return Err(not_image("cell is not a corner"));
    }
    let mut p = t.clone();
    let mut z = p
        .remove_corner(r0, c0)
        .ok_or_else(|| not_image("cell is not a corner"))?;
    let mut mode = if z.is_primed() { Mode::Column(c0) } else { Mode::Row(r0) };
    loop {
        match mode {
            Mode::Row(1) => {
                if z.is_primed() {
                    return Err(not_image("primed letter reached the first row"));
                }
                break;
            }
            Mode::Row(r) => {
                let c = (r - 1..=p.row_end(r - 1))
                    .rev()
                    .find(|&c| p.get(r - 1, c).unwrap() < z)
                    .ok_or_else(|| not_image("no smaller entry in the row above"))?;
                if c == r - 1 {
                    return Err(not_image("unprimed letter left the diagonal"));
                }
                let x = p.get(r - 1, c).unwrap();
                p.set(r - 1, c, z);
                z = x;
                mode = if x.is_primed() {
                    Mode::Column(c)
                } else {
                    Mode::Row(r - 1)
                };
            }
            Mode::Column(c) => {
                if c < 2 {
                    return Err(not_image("primed letter reached the first column"));
                }
                let r = (1..=p.num_rows().min(c - 1))
                    .rev()
                    .find(|&r| p.get(r, c - 1).is_some_and(|v| v < z))
                    .ok_or_else(|| not_image("no smaller entry in the column to the left"))?;
                let x = p.get(r, c - 1).unwrap();
                if r == c - 1 {
                    p.set(r, c - 1, z.with_prime(false));
                } else {
                    p.set(r, c - 1, z);
                }
                z = x;
                mode = if x.is_primed() {
                    Mode::Column(c - 1)
                } else {
                    Mode::Row(r)
                };
            }
        }
    }
    let letter = z.value();
    let (again, again_cell, _) = hm_insert(&p, letter)?;
    if again != *t || again_cell != cell {
        return Err(not_image("reverse bumping does not invert"));
    }
    Ok((p, letter))
}

/// Mixed insertion of a word over `{1, 2, ...}`: `(P, Q)`.
pub fn hm(word: &Word) -> Result<(PrimedTableau, StandardTableau)> {
    let mut p = PrimedTableau::empty();
    let mut q = StandardTableau::empty();
    for (k, &b) in word.letters().iter().enumerate() {
        let (next, (r, _), _) = hm_insert(&p, b)?;
        p = next;
        q.push_to_row(r, k as u32 + 1);
    }
    Ok((p, q))
}

/// Recovers the word from its insertion and recording tableaux.
pub fn hm_inverse(p: &PrimedTableau, q: &StandardTableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::Invalid("tableaux have different shapes".into()));
    }
    let n = p.rows().iter().flatten().map(|v| v.value() as usize).max().unwrap_or(1);
    validate_pt(p, n, false)?;
    validate_standard(q)?;
    let mut p = p.clone();
    let mut letters = Vec::with_capacity(q.size());
    for k in (1..=q.size() as u32).rev() {
        let cell = position_of(q, k).expect("standard tableau holds every entry");
        let (smaller, letter) = hm_remove(&p, cell)?;
        p = smaller;
        letters.push(letter);
    }
    letters.reverse();
    Ok(Word(letters))
}
