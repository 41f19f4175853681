//! Words over `{1, ..., n}` as tensor powers of the standard crystal.

use std::fmt;
use std::str::FromStr;

use crate::crystal::{Color, Crystal, Weight};
use crate::error::{Error, Result};

/// A finite word. Letters are stored as given; whether the alphabet starts at
/// 0 or 1 is up to the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks every letter lies in `base..base + size`.
    pub fn check_alphabet(&self, base: u32, size: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a < base || (a - base) as usize >= size) {
            Some(a) => Err(Error::Invalid(format!("letter {a} outside alphabet of size {size}"))),
            None => Ok(()),
        }
    }

    fn replaced(&self, pos: usize, letter: u32) -> Word {
        let mut out = self.0.clone();
        out[pos] = letter;
        Word(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&a| a < 10) { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let bad = || Error::Parse(format!("bad word {s:?}"));
        if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

/// Positions of the letters `i` and `i + 1` left unbracketed when every
/// `i + 1` is paired with the nearest free `i` to its right.
///
/// Returns `(free_i, free_i_plus_1)` in left-to-right order; all free `i`
/// precede all free `i + 1`.
pub fn unbracketed(word: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut free_low = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (p, &a) in word.iter().enumerate() {
        if a == i + 1 {
            open.push(p);
        } else if a == i && open.pop().is_none() {
            free_low.push(p);
        }
    }
    (free_low, open)
}

pub fn e_even(i: u32, w: &Word) -> Option<Word> {
    let (_, high) = unbracketed(&w.0, i);
    high.first().map(|&p| w.replaced(p, i))
}

pub fn f_even(i: u32, w: &Word) -> Option<Word> {
    let (low, _) = unbracketed(&w.0, i);
    low.last().map(|&p| w.replaced(p, i + 1))
}

pub fn epsilon_word(i: u32, w: &Word) -> usize {
    unbracketed(&w.0, i).1.len()
}

pub fn phi_word(i: u32, w: &Word) -> usize {
    unbracketed(&w.0, i).0.len()
}

/// Reflection `S_i` on words: the free letters `i^a (i+1)^b` become
/// `i^b (i+1)^a`.
pub fn reflect_word(i: u32, w: &Word) -> Word {
    let (low, high) = unbracketed(&w.0, i);
    let free: Vec<usize> = low.iter().chain(&high).copied().collect();
    let mut out = w.0.clone();
    for (k, &p) in free.iter().enumerate() {
        out[p] = if k < high.len() { i } else { i + 1 };
    }
    Word(out)
}

fn first_of_one_or_two(w: &Word) -> Option<usize> {
    w.0.iter().position(|&a| a == 1 || a == 2)
}

pub fn e_bar1(w: &Word) -> Option<Word> {
    let p = first_of_one_or_two(w)?;
    (w.0[p] == 2).then(|| w.replaced(p, 1))
}

pub fn f_bar1(w: &Word) -> Option<Word> {
    let p = first_of_one_or_two(w)?;
    (w.0[p] == 1).then(|| w.replaced(p, 2))
}

pub fn weight(w: &Word, n: usize) -> Weight {
    let mut wt = vec![0; n];
    for &a in &w.0 {
        wt[a as usize - 1] += 1;
    }
    wt
}

fn is_partition(wt: &[i64]) -> bool {
    wt.windows(2).all(|p| p[0] >= p[1])
}

/// Every suffix has partition weight.
pub fn is_yamanouchi(w: &Word, n: usize) -> bool {
    let mut wt = vec![0i64; n];
    for &a in w.0.iter().rev() {
        wt[a as usize - 1] += 1;
        if !is_partition(&wt) {
            return false;
        }
    }
    true
}

/// The crystal `B_n^{⊗m}` of words over `{1, ..., n}`.
#[derive(Clone, Copy, Debug)]
pub struct WordCrystal {
    pub n: usize,
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &Word) -> Weight {
        weight(x, self.n)
    }

    fn raise(&self, c: Color, x: &Word) -> Result<Option<Word>> {
        Ok(match c {
            Color::Even(i) if i < self.n => e_even(i as u32, x),
            Color::Bar1 if self.n >= 2 => e_bar1(x),
            _ => None,
        })
    }

    fn lower(&self, c: Color, x: &Word) -> Result<Option<Word>> {
        Ok(match c {
            Color::Even(i) if i < self.n => f_even(i as u32, x),
            Color::Bar1 if self.n >= 2 => f_bar1(x),
            _ => None,
        })
    }

    fn encode(&self, x: &Word) -> String {
        x.to_string()
    }
}

/// All words of length `m` over `{1, ..., n}` in lexicographic order.
pub fn all_words(n: usize, m: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n as u32).map(move |a| {
                    let mut v = w.0.clone();
                    v.push(a);
                    Word(v)
                })
            })
            .collect();
    }
    out
}
