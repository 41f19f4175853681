//! Exhaustive checks over bounded families, reported as JSON-ready records.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::crystal::Color;
use crate::crystal::{
    check_q_axioms, colors, explore, find_highest_of, find_lowest_of, w0, weyl_w, AxiomReport, Crystal,
};
use crate::error::Result;
use crate::factorization::{e_bar1_fact, f_bar1_fact, transport_fact, FactorizationCrystal};
use crate::kraskiewicz::{kr, kr_inverse, pkr, pkr_inverse, validate_sdt};
use crate::mixed_insertion::{hm, hm_inverse};
use crate::pt_operators::{pt_op, transport, word_op, PtCrystal};
use crate::tableau::{
    enumerate_pt, enumerate_standard, highest_pt, highest_ssdt, lowest_pt, lowest_ssdt, strict_partitions, validate_pt,
    validate_standard, SsdtCrystal, StrictPartition,
};
use crate::type_b::{all_elements, enumerate_factorizations, is_reduced, SignedPermutation};
use crate::word::{all_words, Word, WordCrystal};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, ok: bool, check: &str, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                check: check.into(),
                witness: witness(),
            });
        }
    }

    pub fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn absorb_axioms(&mut self, what: &str, report: &AxiomReport) {
        for c in &report.conditions {
            self.checked += c.checked;
            if !c.passed() {
                self.failures.push(Failure {
                    check: format!("{what}: condition {}", c.condition),
                    witness: c.witness.clone().unwrap_or_default(),
                });
            }
        }
    }
}

/// Bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest alphabet size for words and tableaux.
    pub n: usize,
    /// Largest `|λ|`, and largest word length for mixed insertion.
    pub max_size: usize,
    /// Rank of the type B group.
    pub rank_b: usize,
    /// Largest Coxeter length.
    pub max_len: usize,
    /// Largest number of factors.
    pub m: usize,
    /// Restricts the factorization checks to one element.
    pub perm: Option<SignedPermutation>,
    pub cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n: 3,
            max_size: 5,
            rank_b: 3,
            max_len: 4,
            m: 3,
            perm: None,
            cap: crate::crystal::DEFAULT_VERTEX_CAP,
        }
    }
}

/// `(n, λ)` with `n ≤ max_n`, `1 ≤ |λ| ≤ max_size` and `ℓ(λ) ≤ n`.
pub fn shapes(max_n: usize, max_size: usize) -> Vec<(usize, StrictPartition)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for size in 1..=max_size {
            for lambda in strict_partitions(size) {
                if lambda.len() <= n {
                    out.push((n, lambda));
                }
            }
        }
    }
    out
}

fn perms(b: &Bounds) -> Vec<SignedPermutation> {
    match &b.perm {
        Some(w) => vec![w.clone()],
        None => all_elements(b.rank_b)
            .into_iter()
            .filter(|w| w.length() <= b.max_len)
            .collect(),
    }
}

/// Components of `U_m^±(w)`, each given by its sorted vertex list.
pub fn factorization_components(
    w: &SignedPermutation,
    m: usize,
    cap: usize,
) -> Result<Vec<Vec<crate::type_b::Factorization>>> {
    let cr = FactorizationCrystal { m };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in enumerate_factorizations(w, m, cap)? {
        if seen.contains(&f) {
            continue;
        }
        let ex = explore(&cr, &f, cap)?;
        seen.extend(ex.elements.iter().cloned());
        out.push(ex.elements);
    }
    Ok(out)
}

/// Word components of `B_n^{⊗m}`.
pub fn word_components(n: usize, m: usize, cap: usize) -> Result<Vec<Vec<Word>>> {
    let cr = WordCrystal { n };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in all_words(n, m) {
        if seen.contains(&w) {
            continue;
        }
        let ex = explore(&cr, &w, cap)?;
        seen.extend(ex.elements.iter().cloned());
        out.push(ex.elements);
    }
    Ok(out)
}

pub fn axioms(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("axioms");
    for (n, lambda) in shapes(b.n, b.max_size) {
        let pt = PtCrystal { n };
        let ex = explore(&pt, &highest_pt(n, &lambda)?, b.cap)?;
        rep.absorb_axioms(&format!("PT_{n}({lambda:?})"), &check_q_axioms(&pt, &ex.elements));
        let ss = SsdtCrystal { n };
        let ex = explore(&ss, &highest_ssdt(n, &lambda)?, b.cap)?;
        rep.absorb_axioms(&format!("SSDT_{n}({lambda:?})"), &check_q_axioms(&ss, &ex.elements));
    }
    for n in 1..=b.n {
        for len in 1..=b.max_size {
            for comp in word_components(n, len, b.cap)? {
                let cr = WordCrystal { n };
                rep.absorb_axioms(&format!("words n={n} length {len}"), &check_q_axioms(&cr, &comp));
            }
        }
    }
    for w in perms(b) {
        for m in 1..=b.m {
            let cr = FactorizationCrystal { m };
            for comp in factorization_components(&w, m, b.cap)? {
                rep.absorb_axioms(&format!("U_{m}({w})"), &check_q_axioms(&cr, &comp));
            }
        }
    }
    Ok(rep)
}

pub fn hm_bijection(max_n: usize, max_len: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bijections");
    for n in 1..=max_n {
        for len in 0..=max_len {
            let mut images = HashSet::new();
            for w in all_words(n, len) {
                let (p, q) = hm(&w)?;
                let valid = validate_pt(&p, n, false).is_ok() && validate_standard(&q).is_ok();
                rep.check(valid, "hm image", || w.to_string());
                let back = hm_inverse(&p, &q);
                rep.check(back.as_ref() == Ok(&w), "hm round trip", || w.to_string());
                images.insert((p, q));
            }
            let expected: usize = strict_partitions(len)
                .into_iter()
                .filter(|l| l.len() <= n)
                .map(|l| Ok(enumerate_pt(n, &l, false)?.len() * enumerate_standard(&l).len()))
                .sum::<Result<usize>>()?;
            let expected = if len == 0 { 1 } else { expected };
            rep.check(images.len() == expected, "hm onto", || format!("n={n} length {len}"));
        }
    }
    Ok(rep)
}

/// Reduced words of rank `rank` with length at most `max_len`.
pub fn reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut level = vec![Vec::new()];
    let mut out = vec![Word::default()];
    for _ in 0..max_len {
        level = level
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (0..rank as u32).filter_map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    is_reduced(&Word(v.clone())).then_some(v)
                })
            })
            .collect();
        out.extend(level.iter().cloned().map(Word));
    }
    out
}

pub fn kr_bijection(rank: usize, max_len: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bijections");
    for w in reduced_words(rank, max_len) {
        let (p, q) = kr(&w)?;
        let valid = validate_sdt(&p).is_ok() && validate_standard(&q).is_ok();
        rep.check(valid, "kr image", || w.to_string());
        let back = kr_inverse(&p, &q);
        rep.check(back.as_ref() == Ok(&w), "kr round trip", || w.to_string());
    }
    Ok(rep)
}

pub fn pkr_bijection(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("bijections");
    for w in perms(b) {
        for m in 1..=b.m {
            let mut images = HashSet::new();
            for f in enumerate_factorizations(&w, m, b.cap)? {
                let (p, t) = pkr(&f)?;
                rep.check(validate_pt(&t, m, true).is_ok(), "pkr image", || f.to_string());
                let back = pkr_inverse(&p, &t, m);
                rep.check(back.as_ref() == Ok(&f), "pkr round trip", || f.to_string());
                images.insert((p, t));
            }
        }
    }
    Ok(rep)
}

pub fn bijections(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = hm_bijection(b.n, b.max_size)?;
    rep.absorb(kr_bijection(b.rank_b, b.max_len)?);
    rep.absorb(pkr_bijection(b)?);
    Ok(rep)
}

/// Explicit primed tableau operators against transport through every
/// recording tableau.
pub fn pt_equivalence(max_n: usize, max_size: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("equivalence");
    for (n, lambda) in shapes(max_n, max_size) {
        let qs = enumerate_standard(&lambda);
        for t in enumerate_pt(n, &lambda, false)? {
            for c in colors(n) {
                for up in [true, false] {
                    let explicit = pt_op(c, up, &t, n)?;
                    if let Some(u) = &explicit {
                        rep.check(
                            validate_pt(u, n, false).is_ok(),
                            "explicit result is a primed tableau",
                            || format!("{c} on {t}"),
                        );
                    }
                    for q in &qs {
                        let moved = transport(&t, q, word_op(c, up, n))?;
                        let dir = if up { "e" } else { "f" };
                        rep.check(moved == explicit, &format!("{dir}_{c} independent of Q"), || {
                            format!("T={t} Q={q}")
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Explicit odd operators on factorizations against transport.
pub fn fact_equivalence(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("equivalence");
    for w in perms(b) {
        for m in 1..=b.m {
            for f in enumerate_factorizations(&w, m, b.cap)? {
                let e = e_bar1_fact(&f)?;
                rep.check(
                    e == transport_fact(Color::Bar1, true, &f)?,
                    "e_b1 explicit = transported",
                    || f.to_string(),
                );
                let d = f_bar1_fact(&f)?;
                rep.check(
                    d == transport_fact(Color::Bar1, false, &f)?,
                    "f_b1 explicit = transported",
                    || f.to_string(),
                );
            }
        }
    }
    Ok(rep)
}

pub fn equivalence(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = pt_equivalence(b.n, b.max_size)?;
    rep.absorb(fact_equivalence(b)?);
    Ok(rep)
}

/// Highest and lowest elements of a component against closed forms.
pub fn check_high_low<C: Crystal>(
    rep: &mut SuiteReport,
    what: &str,
    cr: &C,
    elems: &[C::Elem],
    high: &C::Elem,
    low: &C::Elem,
) -> Result<()> {
    let found_high = find_highest_of(cr, elems);
    rep.check(found_high.as_ref() == Ok(high), &format!("{what} highest"), || {
        found_high
            .as_ref()
            .map(|x| cr.encode(x))
            .unwrap_or_else(|e| e.to_string())
    });
    let found_low = find_lowest_of(cr, elems);
    rep.check(found_low.as_ref() == Ok(low), &format!("{what} lowest"), || {
        found_low
            .as_ref()
            .map(|x| cr.encode(x))
            .unwrap_or_else(|e| e.to_string())
    });
    let image = weyl_w(cr, &w0(cr.rank()), low)?;
    rep.check(image == *high, &format!("{what} S_w0 of lowest"), || cr.encode(&image));
    Ok(())
}

pub fn highlow(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("highlow");
    for (n, lambda) in shapes(b.n, b.max_size) {
        let pt = PtCrystal { n };
        let ex = explore(&pt, &highest_pt(n, &lambda)?, b.cap)?;
        let what = format!("PT_{n}({lambda:?})");
        check_high_low(
            &mut rep,
            &what,
            &pt,
            &ex.elements,
            &highest_pt(n, &lambda)?,
            &lowest_pt(n, &lambda)?,
        )?;
        let ss = SsdtCrystal { n };
        let ex = explore(&ss, &highest_ssdt(n, &lambda)?, b.cap)?;
        let what = format!("SSDT_{n}({lambda:?})");
        check_high_low(
            &mut rep,
            &what,
            &ss,
            &ex.elements,
            &highest_ssdt(n, &lambda)?,
            &lowest_ssdt(n, &lambda)?,
        )?;
    }
    Ok(rep)
}

/// Connected components of factorizations keep the insertion tableau and
/// the diagonal prime type.
pub fn component_invariants(w: &SignedPermutation, m: usize, cap: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("equivalence");
    let mut labels = BTreeSet::new();
    for comp in factorization_components(w, m, cap)? {
        let mut keys = BTreeSet::new();
        for f in &comp {
            let (p, t) = pkr(f)?;
            let primes = crate::tableau::dpr(&t).1;
            keys.insert((p.to_string(), primes.into_iter().collect::<Vec<_>>()));
        }
        let one = keys.len() == 1;
        rep.check(one, "component has constant P and prime type", || {
            format!("{:?}", comp.first().map(|f| f.to_string()))
        });
        if one {
            rep.check(
                labels.insert(keys.into_iter().next().unwrap()),
                "distinct components have distinct labels",
                || format!("{:?}", comp.first().map(|f| f.to_string())),
            );
        }
    }
    Ok(rep)
}

pub fn all(b: &Bounds) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("all");
    rep.absorb(axioms(b)?);
    rep.absorb(bijections(b)?);
    rep.absorb(equivalence(b)?);
    rep.absorb(highlow(b)?);
    Ok(rep)
}
