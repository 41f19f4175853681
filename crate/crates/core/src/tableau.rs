//! Shifted tableaux: semistandard decomposition tableaux, primed tableaux
//! (plain and signed), standard shifted tableaux, plus the hook and unimodal
//! word utilities they rely on.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{Color, Crystal, Weight};
use crate::error::{Error, Result};
use crate::word::{self, Word};

/// Strictly decreasing sequence of positive parts.
pub type StrictPartition = Vec<usize>;

pub fn is_strict_partition(lambda: &[usize]) -> bool {
    lambda.iter().all(|&p| p > 0) && lambda.windows(2).all(|w| w[0] > w[1])
}

pub fn parse_partition(s: &str) -> Result<StrictPartition> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if !is_strict_partition(&parts) {
        return Err(Error::Invalid(format!("{parts:?} is not a strict partition")));
    }
    Ok(parts)
}

/// Strict partitions of `size`, largest first part first.
pub fn strict_partitions(size: usize) -> Vec<StrictPartition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

/// Letter of the primed alphabet `1' < 1 < 2' < 2 < ...`, stored as its code
/// (`2k - 1` for `k'`, `2k` for `k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimedLetter(pub u32);

impl PrimedLetter {
    pub fn unprimed(k: u32) -> Self {
        PrimedLetter(2 * k)
    }

    pub fn primed(k: u32) -> Self {
        PrimedLetter(2 * k - 1)
    }

    pub fn value(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn with_prime(self, primed: bool) -> Self {
        if primed {
            PrimedLetter::primed(self.value())
        } else {
            PrimedLetter::unprimed(self.value())
        }
    }
}

impl fmt::Display for PrimedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value(), if self.is_primed() { "'" } else { "" })
    }
}

impl FromStr for PrimedLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(k) if k >= 1 => Ok(PrimedLetter::unprimed(k).with_prime(primed)),
            _ => Err(Error::Parse(format!("bad letter {s:?}"))),
        }
    }
}

/// Filling of a shifted diagram. Row `r` (1-based) occupies columns
/// `r ..= r + λ_r - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTableau<L> {
    rows: Vec<Vec<L>>,
}

pub type Ssdt = ShiftedTableau<u32>;
pub type StandardTableau = ShiftedTableau<u32>;
/// Primed tableau; the signed variant uses the same representation.
pub type PrimedTableau = ShiftedTableau<PrimedLetter>;

impl<L: Copy> ShiftedTableau<L> {
    pub fn from_rows(rows: Vec<Vec<L>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if !is_strict_partition(&shape) {
            return Err(Error::Invalid(format!(
                "row lengths {shape:?} do not form a strict partition"
            )));
        }
        Ok(ShiftedTableau { rows })
    }

    pub fn empty() -> Self {
        ShiftedTableau { rows: Vec::new() }
    }

    pub fn shape(&self) -> StrictPartition {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<L>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, r: usize) -> &[L] {
        &self.rows[r - 1]
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.rows.len() && c >= r && c < r + self.rows[r - 1].len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<L> {
        self.contains(r, c).then(|| self.rows[r - 1][c - r])
    }

    pub fn set(&mut self, r: usize, c: usize, v: L) {
        assert!(self.contains(r, c), "cell ({r},{c}) outside the shape");
        self.rows[r - 1][c - r] = v;
    }

    /// Column index of the last cell in row `r`.
    pub fn row_end(&self, r: usize) -> usize {
        r + self.rows[r - 1].len() - 1
    }

    /// Number of cells in column `c`.
    pub fn column_len(&self, c: usize) -> usize {
        (1..=self.rows.len().min(c)).filter(|&r| self.contains(r, c)).count()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, row) in self.rows.iter().enumerate() {
            for j in 0..row.len() {
                out.push((i + 1, i + 1 + j));
            }
        }
        out
    }

    /// Adds a cell at the end of row `r`, creating the row if needed.
    pub fn push_to_row(&mut self, r: usize, v: L) -> (usize, usize) {
        if r > self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[r - 1].push(v);
        (r, self.row_end(r))
    }

    /// Removes the cell `(r, c)`, which must end its row.
    pub fn remove_corner(&mut self, r: usize, c: usize) -> Option<L> {
        if !self.contains(r, c) || self.row_end(r) != c {
            return None;
        }
        let v = self.rows[r - 1].pop();
        if self.rows[r - 1].is_empty() {
            self.rows.pop();
        }
        v
    }

    pub fn map<M: Copy>(&self, f: impl Fn(L) -> M) -> ShiftedTableau<M> {
        ShiftedTableau {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&v| f(v)).collect())
                .collect(),
        }
    }

    /// Same shape, given filling.
    pub fn with_shape(shape: &[usize], fill: impl Fn(usize, usize) -> L) -> Self {
        let rows = shape
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| fill(i + 1, i + 1 + j)).collect())
            .collect();
        ShiftedTableau { rows }
    }
}

impl<L: fmt::Display> fmt::Display for ShiftedTableau<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl<L: FromStr<Err = Error> + Copy> FromStr for ShiftedTableau<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ShiftedTableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| row.split_whitespace().map(str::parse).collect::<Result<Vec<L>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in {s:?}")));
        }
        ShiftedTableau::from_rows(rows)
    }
}

/// Parses a tableau with plain integer entries.
pub fn parse_plain(s: &str) -> Result<ShiftedTableau<u32>> {
    let t: ShiftedTableau<PlainEntry> = s.parse()?;
    Ok(t.map(|e| e.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct PlainEntry(u32);

impl FromStr for PlainEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<u32>()
            .map(PlainEntry)
            .map_err(|_| Error::Parse(format!("bad entry {s:?}")))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<String>>,
}

impl<L: Copy + fmt::Display> ShiftedTableau<L> {
    pub fn to_json(&self) -> serde_json::Value {
        let json = TableauJson {
            shape: self.shape(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_value(json).expect("tableau serialises")
    }
}

impl<L: Copy> ShiftedTableau<L> {
    pub fn from_json_with(value: &serde_json::Value, parse: impl Fn(&str) -> Result<L>) -> Result<Self> {
        let json: TableauJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = json
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let t = ShiftedTableau::from_rows(rows)?;
        if t.shape() != json.shape {
            return Err(Error::Parse("shape does not match rows".into()));
        }
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// Hook and unimodal words

/// `a_1 ≥ ... ≥ a_k < a_{k+1} < ... < a_s` for some `k ≥ 1`.
pub fn is_hook(w: &[u32]) -> bool {
    hook_split(w).is_ok()
}

/// Splits a hook word into its weakly decreasing and strictly increasing
/// parts.
pub fn hook_split(w: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
    if w.is_empty() {
        return Err(Error::Invalid("empty word is not a hook word".into()));
    }
    let mut k = 1;
    while k < w.len() && w[k - 1] >= w[k] {
        k += 1;
    }
    if w[k - 1..].windows(2).all(|p| p[0] < p[1]) {
        Ok((w[..k].to_vec(), w[k..].to_vec()))
    } else {
        Err(Error::Invalid(format!("{} is not a hook word", Word(w.to_vec()))))
    }
}

/// Length of a longest hook subsequence.
pub fn longest_hook_subword_len(w: &[u32]) -> usize {
    longest_peak(w, |a, b| a >= b)
}

/// Longest subsequence that falls by `falls` up to a pivot and then rises
/// strictly above it.
fn longest_peak(w: &[u32], falls: impl Fn(u32, u32) -> bool) -> usize {
    let m = w.len();
    let mut down = vec![1usize; m];
    for p in 0..m {
        for q in 0..p {
            if falls(w[q], w[p]) {
                down[p] = down[p].max(down[q] + 1);
            }
        }
    }
    let mut up = vec![1usize; m];
    for p in (0..m).rev() {
        for q in p + 1..m {
            if w[p] < w[q] {
                up[p] = up[p].max(up[q] + 1);
            }
        }
    }
    (0..m)
        .map(|p| {
            let tail = (p + 1..m).filter(|&q| w[q] > w[p]).map(|q| up[q]).max().unwrap_or(0);
            down[p] + tail
        })
        .max()
        .unwrap_or(0)
}

/// `a_1 > ... > a_k < ... < a_l`; the empty word counts as unimodal.
pub fn is_unimodal(w: &[u32]) -> bool {
    unimodal_split(w).is_ok()
}

/// Splits a unimodal word into the strictly decreasing part (ending at the
/// minimum) and the strictly increasing remainder.
pub fn unimodal_split(w: &[u32]) -> Result<(Vec<u32>, Vec<u32>)> {
    if w.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut k = 1;
    while k < w.len() && w[k - 1] > w[k] {
        k += 1;
    }
    if w[k - 1..].windows(2).all(|p| p[0] < p[1]) {
        Ok((w[..k].to_vec(), w[k..].to_vec()))
    } else {
        Err(Error::Invalid(format!("{} is not unimodal", Word(w.to_vec()))))
    }
}

pub fn longest_unimodal_subword_len(w: &[u32]) -> usize {
    longest_peak(w, |a, b| a > b)
}

// ---------------------------------------------------------------------------
// Semistandard decomposition tableaux

/// Rows read right to left, top row first.
pub fn rw_ssdt(t: &Ssdt) -> Word {
    Word(t.rows().iter().flat_map(|row| row.iter().rev().copied()).collect())
}

/// Reading-word position of every cell.
pub fn ssdt_reading_cells(t: &Ssdt) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(t.size());
    for r in 1..=t.num_rows() {
        for c in (r..=t.row_end(r)).rev() {
            out.push((r, c));
        }
    }
    out
}

pub fn validate_ssdt(t: &Ssdt, n: usize) -> Result<()> {
    for &v in t.rows().iter().flatten() {
        if v < 1 || v as usize > n {
            return Err(Error::Invalid(format!("entry {v} outside 1..={n}")));
        }
    }
    for (i, row) in t.rows().iter().enumerate() {
        if !is_hook(row) {
            return Err(Error::Invalid(format!("row {} is not a hook word", i + 1)));
        }
        if let Some(next) = t.rows().get(i + 1) {
            let joined: Vec<u32> = next.iter().chain(row).copied().collect();
            if longest_hook_subword_len(&joined) != row.len() {
                return Err(Error::Invalid(format!("row {} is not a longest hook subword", i + 1)));
            }
        }
    }
    Ok(())
}

fn check_fits(n: usize, lambda: &[usize]) -> Result<()> {
    if !is_strict_partition(lambda) {
        return Err(Error::Invalid(format!("{lambda:?} is not a strict partition")));
    }
    if lambda.len() > n {
        return Err(Error::Invalid(format!("{lambda:?} has more than {n} parts")));
    }
    Ok(())
}

/// Strip `k` (1-based) of the shape: the cells of `(λ_k, ..., λ_l)` not in
/// `(λ_{k+1}, ..., λ_l)`, both drawn from the corner.
fn strip(lambda: &[usize], k: usize) -> Vec<(usize, usize)> {
    let part = |j: usize| lambda.get(j - 1).copied().unwrap_or(0);
    let mut out = Vec::new();
    for r in 1..=lambda.len() + 1 - k {
        for c in r + part(k + r)..r + part(k + r - 1) {
            out.push((r, c));
        }
    }
    out
}

pub fn highest_ssdt(n: usize, lambda: &[usize]) -> Result<Ssdt> {
    check_fits(n, lambda)?;
    let mut t = Ssdt::with_shape(lambda, |_, _| 0);
    for k in 1..=lambda.len() {
        for (r, c) in strip(lambda, k) {
            t.set(r, c, k as u32);
        }
    }
    Ok(t)
}

pub fn lowest_ssdt(n: usize, lambda: &[usize]) -> Result<Ssdt> {
    check_fits(n, lambda)?;
    Ok(Ssdt::with_shape(lambda, |r, _| (n + 1 - r) as u32))
}

pub fn ssdt_weight(t: &Ssdt, n: usize) -> Weight {
    let mut wt = vec![0; n];
    for &v in t.rows().iter().flatten() {
        wt[v as usize - 1] += 1;
    }
    wt
}

/// Every SSDT of shape `λ` with entries at most `n`.
pub fn enumerate_ssdt(n: usize, lambda: &[usize]) -> Result<Vec<Ssdt>> {
    check_fits(n, lambda)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = lambda.iter().map(|&len| Vec::with_capacity(len)).collect();
    fn go(n: u32, lambda: &[usize], r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Ssdt>) {
        if r == lambda.len() {
            let t = Ssdt { rows: rows.clone() };
            if validate_ssdt(&t, n as usize).is_ok() {
                out.push(t);
            }
            return;
        }
        if rows[r].len() == lambda[r] {
            if r > 0 {
                let joined: Vec<u32> = rows[r].iter().chain(&rows[r - 1]).copied().collect();
                if longest_hook_subword_len(&joined) != lambda[r - 1] {
                    return;
                }
            }
            go(n, lambda, r + 1, rows, out);
            return;
        }
        for v in 1..=n {
            rows[r].push(v);
            if is_hook(&rows[r]) {
                go(n, lambda, r, rows, out);
            }
            rows[r].pop();
        }
    }
    go(n as u32, lambda, 0, &mut rows, &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Primed tableaux

/// Checks the primed tableau conditions. With `signed`, primes are allowed on
/// the main diagonal.
pub fn validate_pt(t: &PrimedTableau, n: usize, signed: bool) -> Result<()> {
    for (r, c) in t.cells() {
        let v = t.get(r, c).unwrap();
        if v.value() < 1 || v.value() as usize > n {
            return Err(Error::Invalid(format!("entry {v} at ({r},{c}) outside 1..={n}")));
        }
        if let Some(left) = t.get(r, c.wrapping_sub(1)) {
            if left > v {
                return Err(Error::Invalid(format!("row {r} decreases at column {c}")));
            }
            if left == v && v.is_primed() {
                return Err(Error::Invalid(format!("row {r} repeats {v}")));
            }
        }
        if r > 1 {
            if let Some(above) = t.get(r - 1, c) {
                if above > v {
                    return Err(Error::Invalid(format!("column {c} decreases at row {r}")));
                }
                if above == v && !v.is_primed() {
                    return Err(Error::Invalid(format!("column {c} repeats {v}")));
                }
            }
        }
        if !signed && r == c && v.is_primed() {
            return Err(Error::Invalid(format!("primed entry {v} on the diagonal")));
        }
    }
    Ok(())
}

/// Reading word of a primed tableau with the cell each letter comes from.
///
/// Primed letters are read down each column, rightmost column first; then
/// unprimed letters along each row, bottom row first.
pub fn rw_pt_cells(t: &PrimedTableau) -> (Word, Vec<(usize, usize)>) {
    let mut letters = Vec::with_capacity(t.size());
    let mut cells = Vec::with_capacity(t.size());
    let width = t.rows().first().map_or(0, Vec::len);
    for c in (1..=width).rev() {
        for r in 1..=t.num_rows().min(c) {
            if let Some(v) = t.get(r, c) {
                if v.is_primed() {
                    letters.push(v.value());
                    cells.push((r, c));
                }
            }
        }
    }
    for r in (1..=t.num_rows()).rev() {
        for c in r..=t.row_end(r) {
            let v = t.get(r, c).unwrap();
            if !v.is_primed() {
                letters.push(v.value());
                cells.push((r, c));
            }
        }
    }
    (Word(letters), cells)
}

pub fn rw_pt(t: &PrimedTableau) -> Word {
    rw_pt_cells(t).0
}

pub fn pt_weight(t: &PrimedTableau, n: usize) -> Weight {
    let mut wt = vec![0; n];
    for v in t.rows().iter().flatten() {
        wt[v.value() as usize - 1] += 1;
    }
    wt
}

pub fn highest_pt(n: usize, lambda: &[usize]) -> Result<PrimedTableau> {
    check_fits(n, lambda)?;
    Ok(PrimedTableau::with_shape(lambda, |r, _| {
        PrimedLetter::unprimed(r as u32)
    }))
}

pub fn lowest_pt(n: usize, lambda: &[usize]) -> Result<PrimedTableau> {
    check_fits(n, lambda)?;
    let l = lambda.len();
    let mut t = PrimedTableau::with_shape(lambda, |_, _| PrimedLetter(0));
    for k in 1..=l {
        let cells = strip(lambda, k);
        let value = (n + 1 - k) as u32;
        for &(r, c) in &cells {
            let primed = cells.contains(&(r + 1, c));
            t.set(r, c, PrimedLetter::unprimed(value).with_prime(primed));
        }
    }
    Ok(t)
}

/// Every (signed, if asked) primed tableau of shape `λ` with entries at most `n`.
pub fn enumerate_pt(n: usize, lambda: &[usize], signed: bool) -> Result<Vec<PrimedTableau>> {
    check_fits(n, lambda)?;
    let mut t = PrimedTableau::with_shape(lambda, |_, _| PrimedLetter(0));
    let cells = t.cells();
    let mut out = Vec::new();
    fn go(
        t: &mut PrimedTableau,
        cells: &[(usize, usize)],
        k: usize,
        n: u32,
        signed: bool,
        out: &mut Vec<PrimedTableau>,
    ) {
        let Some(&(r, c)) = cells.get(k) else {
            out.push(t.clone());
            return;
        };
        for code in 1..=2 * n {
            let v = PrimedLetter(code);
            if !signed && r == c && v.is_primed() {
                continue;
            }
            if let Some(left) = t.get(r, c.wrapping_sub(1)) {
                if left > v || (left == v && v.is_primed()) {
                    continue;
                }
            }
            if r > 1 {
                if let Some(above) = t.get(r - 1, c) {
                    if above > v || (above == v && !v.is_primed()) {
                        continue;
                    }
                }
            }
            t.set(r, c, v);
            go(t, cells, k + 1, n, signed, out);
        }
        t.set(r, c, PrimedLetter(0));
    }
    go(&mut t, &cells, 0, n as u32, signed, &mut out);
    Ok(out)
}

/// Rows (1-based) whose diagonal entry is primed.
pub type PrimeType = BTreeSet<usize>;

/// Removes the primes on the main diagonal, reporting where they were.
pub fn dpr(t: &PrimedTableau) -> (PrimedTableau, PrimeType) {
    let mut out = t.clone();
    let mut primes = PrimeType::new();
    for r in 1..=t.num_rows() {
        let v = t.get(r, r).unwrap();
        if v.is_primed() {
            primes.insert(r);
            out.set(r, r, v.with_prime(false));
        }
    }
    (out, primes)
}

/// Restores diagonal primes in the given rows.
pub fn pr(t: &PrimedTableau, primes: &PrimeType) -> Result<PrimedTableau> {
    let mut out = t.clone();
    for &r in primes {
        let v = t
            .get(r, r)
            .ok_or_else(|| Error::Invalid(format!("prime type names row {r} outside the shape")))?;
        out.set(r, r, v.with_prime(true));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Standard shifted tableaux

pub fn validate_standard(t: &StandardTableau) -> Result<()> {
    let total = t.size() as u32;
    let mut seen = vec![false; total as usize + 1];
    for (r, c) in t.cells() {
        let v = t.get(r, c).unwrap();
        if v < 1 || v > total || std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::Invalid(format!("entries are not a permutation of 1..={total}")));
        }
        if t.get(r, c.wrapping_sub(1)).is_some_and(|left| left >= v) {
            return Err(Error::Invalid(format!("row {r} does not increase at column {c}")));
        }
        if r > 1 && t.get(r - 1, c).is_some_and(|above| above >= v) {
            return Err(Error::Invalid(format!("column {c} does not increase at row {r}")));
        }
    }
    Ok(())
}

/// Fills the shape row by row with `1, 2, ..., |λ|`.
pub fn canonical_standard(lambda: &[usize]) -> StandardTableau {
    let mut next = 0;
    let mut t = StandardTableau::with_shape(lambda, |_, _| 0);
    for (r, c) in t.cells() {
        next += 1;
        t.set(r, c, next);
    }
    t
}

/// Every standard shifted tableau of shape `λ`.
pub fn enumerate_standard(lambda: &[usize]) -> Vec<StandardTableau> {
    fn go(shape: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>, path: &mut Vec<(usize, usize)>) {
        if shape.is_empty() {
            out.push(path.clone());
            return;
        }
        for r in 0..shape.len() {
            let removable = shape.get(r + 1).is_none_or(|&next| next + 1 < shape[r]);
            if !removable {
                continue;
            }
            let cell = (r + 1, r + shape[r]);
            shape[r] -= 1;
            let popped = shape[r] == 0;
            if popped {
                shape.pop();
            }
            path.push(cell);
            go(shape, out, path);
            path.pop();
            if popped {
                shape.push(0);
            }
            shape[r] += 1;
        }
    }
    let mut paths = Vec::new();
    go(&mut lambda.to_vec(), &mut paths, &mut Vec::new());
    let total = lambda.iter().sum::<usize>() as u32;
    paths
        .into_iter()
        .map(|path| {
            let mut t = StandardTableau::with_shape(lambda, |_, _| 0);
            for (k, &(r, c)) in path.iter().enumerate() {
                t.set(r, c, total - k as u32);
            }
            t
        })
        .collect()
}

/// Cell holding entry `v`.
pub fn position_of<L: Copy + PartialEq>(t: &ShiftedTableau<L>, v: L) -> Option<(usize, usize)> {
    t.cells().into_iter().find(|&(r, c)| t.get(r, c) == Some(v))
}

/// `SSDT_n(λ)` with operators read off the reading word.
#[derive(Clone, Copy, Debug)]
pub struct SsdtCrystal {
    pub n: usize,
}

impl SsdtCrystal {
    fn apply(&self, x: &Ssdt, op: impl Fn(&Word) -> Option<Word>) -> Option<Ssdt> {
        let w = op(&rw_ssdt(x))?;
        let mut out = x.clone();
        for (&(r, c), &v) in ssdt_reading_cells(x).iter().zip(w.letters()) {
            out.set(r, c, v);
        }
        Some(out)
    }
}

impl Crystal for SsdtCrystal {
    type Elem = Ssdt;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &Ssdt) -> Weight {
        ssdt_weight(x, self.n)
    }

    fn raise(&self, c: Color, x: &Ssdt) -> Result<Option<Ssdt>> {
        Ok(match c {
            Color::Even(i) if i < self.n => self.apply(x, |w| word::e_even(i as u32, w)),
            Color::Bar1 if self.n >= 2 => self.apply(x, word::e_bar1),
            _ => None,
        })
    }

    fn lower(&self, c: Color, x: &Ssdt) -> Result<Option<Ssdt>> {
        Ok(match c {
            Color::Even(i) if i < self.n => self.apply(x, |w| word::f_even(i as u32, w)),
            Color::Bar1 if self.n >= 2 => self.apply(x, word::f_bar1),
            _ => None,
        })
    }

    fn encode(&self, x: &Ssdt) -> String {
        x.to_string()
    }
}
