use std::collections::{BTreeSet, HashMap, VecDeque};

use qcrystal::crystal::{check_q_axioms, explore, find_highest_of, find_lowest_of, Color, Crystal, DEFAULT_VERTEX_CAP};
use qcrystal::factorization::FactorizationCrystal;
use qcrystal::kraskiewicz::{kr, pkr};
use qcrystal::pt_operators::PtCrystal;
use qcrystal::tableau::{
    enumerate_pt, enumerate_ssdt, highest_pt, highest_ssdt, is_unimodal, lowest_ssdt, ssdt_weight, strict_partitions,
    validate_ssdt, SsdtCrystal,
};
use qcrystal::type_b::{
    all_elements, apply_word, enumerate_factorizations, enumerate_reduced, Factorization, SignedPermutation,
};
use qcrystal::verify::{component_invariants, factorization_components};

fn fact(s: &str) -> Factorization {
    s.parse().unwrap()
}

#[test]
fn lengths_match_cayley_graph_distance() {
    for n in 1..=3 {
        let mut dist: HashMap<SignedPermutation, usize> = HashMap::new();
        let id = SignedPermutation::identity(n);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in 0..n as u32 {
                let v = w.times_generator(s).unwrap();
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), dist[&w] + 1);
                    queue.push_back(v);
                }
            }
        }
        let all = all_elements(n);
        assert_eq!(all.len(), dist.len());
        for w in all {
            assert_eq!(w.length(), dist[&w], "{w}");
        }
    }
}

#[test]
fn reduced_words_multiply_back() {
    for w in all_elements(3) {
        for word in enumerate_reduced(&w, 100_000).unwrap() {
            assert_eq!(word.len(), w.length());
            assert_eq!(apply_word(3, &word).unwrap(), w);
        }
    }
}

#[test]
fn factorization_count_matches_insertion() {
    for w in all_elements(3).into_iter().filter(|w| w.length() <= 5) {
        for m in 1..=3 {
            let facts = enumerate_factorizations(&w, m, DEFAULT_VERTEX_CAP).unwrap();
            for f in &facts {
                f.validate(&w).unwrap();
                assert!(f.factors.iter().all(|a| is_unimodal(a.word.letters())));
            }
            let shapes: BTreeSet<String> = enumerate_reduced(&w, 100_000)
                .unwrap()
                .iter()
                .map(|word| kr(word).unwrap().0.to_string())
                .collect();
            let expected: usize = shapes
                .iter()
                .map(|p| qcrystal::tableau::parse_plain(p).unwrap().shape())
                .filter(|shape| shape.len() <= m)
                .map(|shape| enumerate_pt(m, &shape, true).unwrap().len())
                .sum();
            assert_eq!(facts.len(), expected, "{w} m={m}");
            let covered: usize = factorization_components(&w, m, DEFAULT_VERTEX_CAP)
                .unwrap()
                .iter()
                .map(Vec::len)
                .sum();
            assert_eq!(covered, facts.len());
        }
    }
}

#[test]
fn edges_out_of_the_small_example() {
    let cr = FactorizationCrystal { m: 3 };
    let f = fact("(+012)(+1)()");
    f.validate(&"3,2,-1".parse().unwrap()).unwrap();
    assert_eq!(cr.lower(Color::Even(1), &f).unwrap(), Some(fact("(+02)(+12)()")));
    assert_eq!(cr.lower(Color::Bar1, &f).unwrap(), Some(fact("(+01)(+21)()")));
    assert_eq!(cr.lower(Color::Even(2), &f).unwrap(), Some(fact("(+012)()(+1)")));
}

#[test]
fn component_of_2012() {
    let cr = FactorizationCrystal { m: 3 };
    let seed = fact("(+2012)()()");
    let ex = explore(&cr, &seed, DEFAULT_VERTEX_CAP).unwrap();
    assert_eq!(ex.elements.len(), 33);
    assert!(check_q_axioms(&cr, &ex.elements).passed());
    assert_eq!(find_highest_of(&cr, &ex.elements).unwrap(), seed);
    let low = find_lowest_of(&cr, &ex.elements).unwrap();
    assert_eq!(low.weight(), vec![0, 0, 4]);
    let t = pkr(&seed).unwrap().1;
    assert_eq!(t.to_string(), "1 1 1 1");
}

#[test]
fn components_carry_distinct_labels() {
    for w in all_elements(3).into_iter().filter(|w| w.length() <= 5) {
        let rep = component_invariants(&w, 3, DEFAULT_VERTEX_CAP).unwrap();
        assert!(rep.passed(), "{w}: {:?}", rep.failures);
    }
}

#[test]
fn ssdt_components_are_whole_sets() {
    for n in 1..=4 {
        for size in 1..=5 {
            for lambda in strict_partitions(size).into_iter().filter(|l| l.len() <= n) {
                let cr = SsdtCrystal { n };
                let top = highest_ssdt(n, &lambda).unwrap();
                let ex = explore(&cr, &top, DEFAULT_VERTEX_CAP).unwrap();
                for t in &ex.elements {
                    validate_ssdt(t, n).unwrap();
                    assert_eq!(cr.weight(t), ssdt_weight(t, n));
                }
                let all = enumerate_ssdt(n, &lambda).unwrap();
                assert_eq!(ex.elements.len(), all.len(), "n={n} {lambda:?}");
                assert_eq!(all.len(), enumerate_pt(n, &lambda, false).unwrap().len());
                assert!(ex.elements.contains(&lowest_ssdt(n, &lambda).unwrap()));
            }
        }
    }
}

#[test]
fn pt_and_ssdt_characters_agree() {
    let n = 3;
    for lambda in [vec![3, 1], vec![4, 2], vec![3, 2, 1]] {
        let mut ss: Vec<_> = enumerate_ssdt(n, &lambda)
            .unwrap()
            .iter()
            .map(|t| ssdt_weight(t, n))
            .collect();
        let cr = PtCrystal { n };
        let ex = explore(&cr, &highest_pt(n, &lambda).unwrap(), DEFAULT_VERTEX_CAP).unwrap();
        let mut pt: Vec<_> = ex.elements.iter().map(|t| cr.weight(t)).collect();
        ss.sort();
        pt.sort();
        assert_eq!(ss, pt, "{lambda:?}");
    }
}
