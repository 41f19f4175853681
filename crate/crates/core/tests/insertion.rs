use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;

use qcrystal::kraskiewicz::{kr, kr_inverse, kr_traced, pkr, pkr_inverse, validate_sdt, vee_bottom, KrCase};
use qcrystal::mixed_insertion::{hm, hm_inverse};
use qcrystal::tableau::{
    enumerate_pt, enumerate_standard, is_unimodal, strict_partitions, validate_pt, validate_standard,
};
use qcrystal::type_b::{all_elements, enumerate_factorizations, enumerate_reduced, is_reduced, SignedPermutation};
use qcrystal::word::{all_words, Word};

#[test]
fn hm_is_a_bijection_onto_pairs() {
    for n in 1..=3 {
        for m in 0..=5 {
            let mut seen = HashSet::new();
            for w in all_words(n, m) {
                let (p, q) = hm(&w).unwrap();
                validate_pt(&p, n, false).unwrap();
                validate_standard(&q).unwrap();
                assert_eq!(hm_inverse(&p, &q).unwrap(), w);
                assert!(seen.insert((p, q)));
            }
            let pairs: usize = (0..=m)
                .flat_map(strict_partitions)
                .filter(|l| l.iter().sum::<usize>() == m && l.len() <= n)
                .map(|l| enumerate_pt(n, &l, false).unwrap().len() * enumerate_standard(&l).len())
                .sum();
            assert_eq!(pairs, seen.len(), "n={n} m={m}");
        }
    }
}

#[test]
fn hm_inverse_rejects_pairs_outside_the_image() {
    let p = "1 1".parse().unwrap();
    let q = qcrystal::tableau::parse_plain("1 3").unwrap();
    assert!(hm_inverse(&p, &q).is_err());
}

fn reduced_words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w: Vec<u32>| {
                    (0..n as u32).filter_map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        is_reduced(&Word(v.clone())).then_some(v)
                    })
                })
                .collect();
        }
        out.extend(words.into_iter().map(Word));
    }
    out
}

#[test]
fn kr_round_trips_on_short_reduced_words() {
    let mut skip_zero = 0;
    let mut fibers: BTreeMap<String, usize> = BTreeMap::new();
    for w in reduced_words_up_to(4, 6) {
        let (p, q, trace) = kr_traced(&w).unwrap();
        validate_sdt(&p).unwrap();
        validate_standard(&q).unwrap();
        assert_eq!(kr_inverse(&p, &q).unwrap(), w, "P={p} Q={q}");
        skip_zero += trace.iter().filter(|s| s.case == KrCase::SkipZero).count();
        *fibers.entry(p.to_string()).or_default() += 1;
    }
    assert!(skip_zero > 0);
    for (p, count) in fibers {
        let p = qcrystal::tableau::parse_plain(&p).unwrap();
        assert_eq!(count, enumerate_standard(&p.shape()).len(), "fiber of {p}");
    }
}

#[test]
fn reduced_words_split_into_fibers() {
    for w in all_elements(3) {
        let words = enumerate_reduced(&w, 100_000).unwrap();
        let mut by_p: BTreeMap<String, usize> = BTreeMap::new();
        for word in &words {
            *by_p.entry(kr(word).unwrap().0.to_string()).or_default() += 1;
        }
        let total: usize = by_p
            .keys()
            .map(|p| enumerate_standard(&qcrystal::tableau::parse_plain(p).unwrap().shape()).len())
            .sum();
        assert_eq!(total, words.len(), "{w}");
    }
}

#[test]
fn unimodal_factors_insert_as_vees() {
    for w in reduced_words_up_to(3, 6) {
        let (_, q) = kr(&w).unwrap();
        let l = w.len() as u32;
        for i in 1..=l {
            for j in i..=l {
                let piece = &w.letters()[i as usize - 1..j as usize];
                assert_eq!(is_unimodal(piece), vee_bottom(&q, i, j).is_some(), "{w} [{i},{j}]");
            }
        }
    }
}

#[test]
fn pkr_round_trips() {
    for w in all_elements(3).into_iter().filter(|w| w.length() <= 5) {
        for m in 1..=3 {
            for f in enumerate_factorizations(&w, m, 1_000_000).unwrap() {
                let (p, t) = pkr(&f).unwrap();
                validate_pt(&t, m, true).unwrap();
                assert_eq!(pkr_inverse(&p, &t, m).unwrap(), f);
            }
        }
    }
}

#[test]
fn example_permutation_has_three_reduced_words() {
    let w: SignedPermutation = "3,2,-1".parse().unwrap();
    assert_eq!(enumerate_reduced(&w, 10).unwrap().len(), 3);
}

proptest! {
    #[test]
    fn hm_round_trips_on_longer_words(letters in prop::collection::vec(1u32..=5, 0..12)) {
        let w = Word(letters);
        let (p, q) = hm(&w).unwrap();
        prop_assert!(validate_pt(&p, 5, false).is_ok());
        prop_assert_eq!(hm_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn kr_round_trips_on_random_reduced_words(letters in prop::collection::vec(0u32..5, 0..12)) {
        let w = Word(letters);
        prop_assume!(is_reduced(&w));
        let (p, q) = kr(&w).unwrap();
        prop_assert_eq!(kr_inverse(&p, &q).unwrap(), w);
    }
}
