use proptest::prelude::*;

use qcrystal::crystal::{
    check_component, check_q_axioms, epsilon, explore, odd_lower, odd_raise, phi, w_i, Color, Crystal,
    CrystalComponent, DEFAULT_VERTEX_CAP,
};
use qcrystal::word::{
    all_words, e_bar1, e_even, epsilon_word, f_bar1, f_even, phi_word, reflect_word, Word, WordCrystal,
};
use qcrystal::Error;

// Tensor rule, splitting off the first letter.
fn tensor_lower(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (&a, rest) = w.split_first()?;
    let eps_a = usize::from(a == i + 1);
    let phi_rest = phi_word(i, &Word(rest.to_vec()));
    if phi_rest > eps_a {
        let mut out = vec![a];
        out.extend(tensor_lower(i, rest)?);
        Some(out)
    } else if a == i {
        let mut out = vec![i + 1];
        out.extend_from_slice(rest);
        Some(out)
    } else {
        None
    }
}

fn tensor_raise(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (&a, rest) = w.split_first()?;
    let eps_a = usize::from(a == i + 1);
    let phi_rest = phi_word(i, &Word(rest.to_vec()));
    if eps_a > phi_rest {
        let mut out = vec![i];
        out.extend_from_slice(rest);
        Some(out)
    } else {
        let mut out = vec![a];
        out.extend(tensor_raise(i, rest)?);
        Some(out)
    }
}

fn tensor_odd(w: &[u32], from: u32, to: u32) -> Option<Vec<u32>> {
    let (&a, rest) = w.split_first()?;
    if a == 1 || a == 2 {
        return (a == from).then(|| std::iter::once(to).chain(rest.iter().copied()).collect());
    }
    let tail = tensor_odd(rest, from, to)?;
    Some(std::iter::once(a).chain(tail).collect())
}

#[test]
fn word_operators_follow_the_tensor_rule() {
    for n in 2..=4u32 {
        for m in 0..=5 {
            for w in all_words(n as usize, m) {
                for i in 1..n {
                    assert_eq!(f_even(i, &w).map(|x| x.0), tensor_lower(i, &w.0), "f_{i} {w}");
                    assert_eq!(e_even(i, &w).map(|x| x.0), tensor_raise(i, &w.0), "e_{i} {w}");
                }
                assert_eq!(f_bar1(&w).map(|x| x.0), tensor_odd(&w.0, 1, 2), "f_b1 {w}");
                assert_eq!(e_bar1(&w).map(|x| x.0), tensor_odd(&w.0, 2, 1), "e_b1 {w}");
            }
        }
    }
}

#[test]
fn string_lengths_match_weight() {
    let cr = WordCrystal { n: 3 };
    for w in all_words(3, 4) {
        let wt = cr.weight(&w);
        for i in 1..3u32 {
            let c = Color::Even(i as usize);
            let (e, f) = (epsilon(&cr, c, &w).unwrap(), phi(&cr, c, &w).unwrap());
            assert_eq!((e, f), (epsilon_word(i, &w), phi_word(i, &w)));
            assert_eq!(f as i64 - e as i64, wt[i as usize - 1] - wt[i as usize]);
        }
    }
}

// S_{w_i^{-1}} g S_{w_i} computed by direct reflection of words.
fn oracle_odd(i: usize, w: &Word, g: fn(&Word) -> Option<Word>) -> Option<Word> {
    let word = w_i(i);
    let mut cur = w.clone();
    for &j in word.iter().rev() {
        cur = reflect_word(j as u32, &cur);
    }
    let mut cur = g(&cur)?;
    for &j in &word {
        cur = reflect_word(j as u32, &cur);
    }
    Some(cur)
}

#[test]
fn conjugated_odd_operators_match_reflection_oracle() {
    let cr = WordCrystal { n: 4 };
    for m in 0..=4 {
        for w in all_words(4, m) {
            for i in 1..4 {
                assert_eq!(odd_raise(&cr, i, &w).unwrap(), oracle_odd(i, &w, e_bar1), "e_b{i} {w}");
                assert_eq!(odd_lower(&cr, i, &w).unwrap(), oracle_odd(i, &w, f_bar1), "f_b{i} {w}");
            }
        }
    }
}

#[test]
fn odd_raise_two_on_32() {
    let cr = WordCrystal { n: 3 };
    assert_eq!(
        odd_raise(&cr, 2, &"32".parse().unwrap()).unwrap(),
        Some("22".parse().unwrap())
    );
}

#[test]
fn word_components_satisfy_axioms() {
    let cr = WordCrystal { n: 3 };
    let ex = explore(&cr, &"1121".parse().unwrap(), DEFAULT_VERTEX_CAP).unwrap();
    let report = check_q_axioms(&cr, &ex.elements);
    assert!(report.passed(), "{:?}", report.failures());
    assert!(check_component(&ex.component, true).passed());
}

#[test]
fn explore_reports_cap() {
    let cr = WordCrystal { n: 3 };
    let err = explore(&cr, &"111111".parse().unwrap(), 10).err();
    assert_eq!(err, Some(Error::CapExceeded { cap: 10 }));
}

fn sample_component() -> CrystalComponent {
    let cr = WordCrystal { n: 3 };
    explore(&cr, &"112".parse().unwrap(), DEFAULT_VERTEX_CAP)
        .unwrap()
        .component
}

#[test]
fn json_round_trip() {
    let comp = sample_component();
    let back = CrystalComponent::from_json(&comp.to_json()).unwrap();
    assert_eq!(back.vertices(), comp.vertices());
    assert_eq!(back.edges(), comp.edges());
    let mut raising = back.raising_edges().to_vec();
    let mut expected = comp.raising_edges().to_vec();
    raising.sort();
    expected.sort();
    assert_eq!(raising, expected);
}

#[test]
fn dot_lists_every_vertex_and_edge() {
    let comp = sample_component();
    let dot = comp.to_dot();
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches(" -> ").count(), comp.edges().len());
    for v in comp.vertices() {
        assert!(dot.contains(&format!("\"{v}\";")));
    }
}

#[test]
fn corrupted_component_fails_condition_four() {
    let mut comp = sample_component();
    assert!(check_component(&comp, true).passed());
    let src = comp.edges()[0].src;
    let color = comp.edges()[0].color;
    let other = (0..comp.len())
        .find(|&v| comp.edges().iter().any(|e| e.dst == v && e.color == color) && v != comp.edges()[0].dst)
        .unwrap();
    assert!(comp.retarget_edge(src, color, other));
    let report = check_component(&comp, true);
    let gl4 = report.get("gl4").unwrap();
    assert!(gl4.violations > 0);
    assert!(gl4.witness.is_some());
}

#[test]
fn corrupted_json_fixture_is_caught() {
    let mut json = sample_component().to_json();
    let edges = json["edges"].as_array_mut().unwrap();
    let first = edges[0].clone();
    let clash = edges
        .iter()
        .find(|e| e["color"] == first["color"] && e["dst"] != first["dst"])
        .cloned()
        .unwrap();
    edges[0]["dst"] = clash["dst"].clone();
    let comp = CrystalComponent::from_json(&json).unwrap();
    let report = check_component(&comp, true);
    assert!(!report.get("gl4").unwrap().passed());
}

proptest! {
    #[test]
    fn operators_invert(letters in prop::collection::vec(1u32..=4, 0..10), i in 1usize..4) {
        let cr = WordCrystal { n: 4 };
        let w = Word(letters);
        for c in [Color::Even(i), Color::Bar1] {
            if let Some(y) = cr.lower(c, &w).unwrap() {
                prop_assert_eq!(cr.raise(c, &y).unwrap(), Some(w.clone()));
            }
        }
        if let Some(y) = odd_lower(&cr, i, &w).unwrap() {
            prop_assert_eq!(odd_raise(&cr, i, &y).unwrap(), Some(w.clone()));
        }
    }
}
