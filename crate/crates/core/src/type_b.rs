//! Signed permutations, reduced words and signed unimodal factorizations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableau::is_unimodal;
use crate::word::Word;

/// Element of `W_B^n` in one-line notation `w(1), ..., w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::Invalid(format!("{images:?} is not a signed permutation")));
            }
        }
        Ok(SignedPermutation(images))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i32).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.0
    }

    /// `w s_i`: `s_0` negates the first entry, `s_i` swaps entries `i` and `i+1`.
    pub fn times_generator(&self, i: u32) -> Result<Self> {
        let n = self.0.len();
        if i as usize >= n {
            return Err(Error::Invalid(format!("generator s_{i} out of range for rank {n}")));
        }
        let mut out = self.0.clone();
        if i == 0 {
            out[0] = -out[0];
        } else {
            out.swap(i as usize - 1, i as usize);
        }
        Ok(SignedPermutation(out))
    }

    /// Coxeter length: inversions plus the absolute values of negative entries.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let inv = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count();
        let neg: i32 = w.iter().filter(|&&v| v < 0).map(|v| -v).sum();
        inv + neg as usize
    }

    pub fn right_descents(&self) -> Vec<u32> {
        let here = self.length();
        (0..self.0.len() as u32)
            .filter(|&i| self.times_generator(i).unwrap().length() < here)
            .collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad signed permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(images)
    }
}

/// `s_{a_1} ... s_{a_l}` in `W_B^n`.
pub fn apply_word(n: usize, word: &Word) -> Result<SignedPermutation> {
    let mut w = SignedPermutation::identity(n);
    for &a in word.letters() {
        w = w.times_generator(a)?;
    }
    Ok(w)
}

/// Smallest rank whose generators cover the word.
pub fn rank_of(word: &Word) -> usize {
    word.letters().iter().max().map_or(1, |&a| a as usize + 1)
}

pub fn is_reduced(word: &Word) -> bool {
    apply_word(rank_of(word), word).is_ok_and(|w| w.length() == word.len())
}

/// Every element of `W_B^n`.
pub fn all_elements(n: usize) -> Vec<SignedPermutation> {
    fn go(n: i32, cur: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
        if cur.len() == n as usize {
            out.push(SignedPermutation(cur.clone()));
            return;
        }
        for v in 1..=n {
            if cur.iter().any(|u| u.abs() == v) {
                continue;
            }
            for s in [v, -v] {
                cur.push(s);
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n as i32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All reduced words of `w`, in lexicographic order.
pub fn enumerate_reduced(w: &SignedPermutation, cap: usize) -> Result<Vec<Word>> {
    fn go(
        w: &SignedPermutation,
        memo: &mut HashMap<SignedPermutation, Vec<Vec<u32>>>,
        cap: usize,
    ) -> Result<Vec<Vec<u32>>> {
        if let Some(found) = memo.get(w) {
            return Ok(found.clone());
        }
        let mut out = Vec::new();
        if w.length() == 0 {
            out.push(Vec::new());
        }
        for i in w.right_descents() {
            for mut prefix in go(&w.times_generator(i)?, memo, cap)? {
                prefix.push(i);
                out.push(prefix);
                if out.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        Ok(out)
    }
    let mut words = go(w, &mut HashMap::new(), cap)?;
    words.sort();
    Ok(words.into_iter().map(Word).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Zero => "",
        }
    }
}

/// One factor `(s, a)`: a unimodal word with a sign, zero exactly when the
/// word is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub sign: Sign,
    pub word: Word,
}

impl Factor {
    pub fn empty() -> Self {
        Factor {
            sign: Sign::Zero,
            word: Word::default(),
        }
    }

    pub fn new(sign: Sign, word: Word) -> Result<Self> {
        if (sign == Sign::Zero) != word.is_empty() {
            return Err(Error::Invalid(format!("sign {sign:?} does not suit factor {word}")));
        }
        if !is_unimodal(word.letters()) {
            return Err(Error::Invalid(format!("factor {word} is not unimodal")));
        }
        Ok(Factor { sign, word })
    }
}

/// Signed unimodal factorization `(s_1 a_1) ... (s_m a_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(factors: Vec<Factor>) -> Self {
        Factorization { factors }
    }

    pub fn m(&self) -> usize {
        self.factors.len()
    }

    /// The concatenated word `a_1 ... a_m`.
    pub fn word(&self) -> Word {
        Word(
            self.factors
                .iter()
                .flat_map(|f| f.word.letters().iter().copied())
                .collect(),
        )
    }

    /// Factor lengths.
    pub fn weight(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.word.len() as i64).collect()
    }

    /// Checks the factorization lies in `U_m^±(w)`.
    pub fn validate(&self, w: &SignedPermutation) -> Result<()> {
        for f in &self.factors {
            Factor::new(f.sign, f.word.clone())?;
        }
        let word = self.word();
        let image = apply_word(w.rank(), &word)?;
        if image != *w || image.length() != word.len() {
            return Err(Error::Invalid(format!("{self} is not a reduced factorization of {w}")));
        }
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            write!(f, "({}{})", factor.sign.symbol(), factor.word)?;
        }
        Ok(())
    }
}

impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad factorization {s:?}"));
        let mut rest = s.trim();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let inner = &inner[..inner_end - 1];
            let (sign, body) = match inner.chars().next() {
                Some('+') => (Sign::Plus, &inner[1..]),
                Some('-') => (Sign::Minus, &inner[1..]),
                _ => (Sign::Zero, inner),
            };
            let word: Word = body.parse()?;
            factors.push(Factor::new(sign, word)?);
            rest = rest[inner_end + 1..].trim_start();
        }
        Ok(Factorization { factors })
    }
}

/// All of `U_m^±(w)`, sorted by text encoding.
pub fn enumerate_factorizations(w: &SignedPermutation, m: usize, cap: usize) -> Result<Vec<Factorization>> {
    let mut out = Vec::new();
    for word in enumerate_reduced(w, cap)? {
        let letters = word.letters();
        let mut cuts = vec![0usize; m + 1];
        cuts[m] = letters.len();
        split(letters, m, 1, &mut cuts, &mut |pieces| {
            let nonempty = pieces.iter().filter(|p| !p.is_empty()).count();
            for mask in 0..1u32 << nonempty {
                let mut k = 0;
                let factors = pieces
                    .iter()
                    .map(|p| {
                        if p.is_empty() {
                            return Factor::empty();
                        }
                        let sign = if mask >> k & 1 == 0 { Sign::Plus } else { Sign::Minus };
                        k += 1;
                        Factor {
                            sign,
                            word: Word(p.to_vec()),
                        }
                    })
                    .collect();
                out.push(Factorization { factors });
            }
        });
        if out.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    out.sort_by_key(|f| f.to_string());
    Ok(out)
}

fn split(letters: &[u32], m: usize, k: usize, cuts: &mut Vec<usize>, emit: &mut dyn FnMut(Vec<&[u32]>)) {
    if m == 0 {
        if letters.is_empty() {
            emit(Vec::new());
        }
        return;
    }
    if k == m {
        let pieces: Vec<&[u32]> = (0..m).map(|j| &letters[cuts[j]..cuts[j + 1]]).collect();
        if pieces.iter().all(|p| is_unimodal(p)) {
            emit(pieces);
        }
        return;
    }
    for c in cuts[k - 1]..=letters.len() {
        if !is_unimodal(&letters[cuts[k - 1]..c]) {
            break;
        }
        cuts[k] = c;
        split(letters, m, k + 1, cuts, emit);
    }
}
