//! Acceptance run: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qcrystal::crystal::{check_q_axioms, explore, Color, Crystal, DEFAULT_VERTEX_CAP};
use qcrystal::factorization::FactorizationCrystal;
use qcrystal::kraskiewicz::{kr, kr_inverse, kr_traced, pkr, pkr_inverse, vee_bottom, KrCase};
use qcrystal::mixed_insertion::{hm, hm_inverse};
use qcrystal::pt_operators::{PtCrystal, SptCrystal};
use qcrystal::tableau::is_unimodal;
use qcrystal::tableau::{highest_pt, highest_ssdt, lowest_pt, lowest_ssdt, rw_ssdt, PrimedTableau, SsdtCrystal};
use qcrystal::type_b::{all_elements, enumerate_reduced, Factorization, SignedPermutation};
use qcrystal::verify::{self, check_high_low, factorization_components, shapes, Bounds, SuiteReport};
use qcrystal::word::Word;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn within(what: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    }
}

fn suite(rep: SuiteReport) -> Outcome {
    if rep.passed() {
        Ok(format!("{} checks", rep.checked))
    } else {
        let first = &rep.failures[0];
        Err(format!(
            "{} failures of {} checks; first: {} on {}",
            rep.failures.len(),
            rep.checked,
            first.check,
            first.witness
        ))
    }
}

fn err(e: qcrystal::Error) -> String {
    e.to_string()
}

fn fact(s: &str) -> Factorization {
    s.parse().unwrap()
}

fn pt(s: &str) -> PrimedTableau {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let w: Word = "333323212".parse().unwrap();
    let start = Instant::now();
    let (p, q) = hm(&w).map_err(err)?;
    let elapsed = start.elapsed();
    expect("P", p.to_string().as_str(), "1 2' 2 3' 3 / 2 3' 3 / 3")?;
    expect("Q", q.to_string().as_str(), "1 2 3 4 6 / 5 7 9 / 8")?;
    expect("inverse", hm_inverse(&p, &q).map_err(err)?, w)?;
    within("insertion", elapsed, Duration::from_millis(1))?;
    Ok(format!("exact match in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (p, q) = kr(&"012013".parse().unwrap()).map_err(err)?;
    let f = fact("(+01)(-2013)");
    let (pp, t) = pkr(&f).map_err(err)?;
    let elapsed = start.elapsed();
    expect("KR P", p.to_string().as_str(), "2 0 1 3 / 0 1")?;
    expect("KR Q", q.to_string().as_str(), "1 2 3 6 / 4 5")?;
    expect("PKR P", pp.to_string().as_str(), "2 0 1 3 / 0 1")?;
    expect("PKR T", t.to_string().as_str(), "1 1 2' 2 / 2' 2")?;
    expect(
        "KR inverse",
        kr_inverse(&p, &q).map_err(err)?.to_string(),
        "012013".into(),
    )?;
    expect("PKR inverse", pkr_inverse(&pp, &t, 2).map_err(err)?, f)?;
    within("insertion", elapsed, Duration::from_millis(1))?;
    Ok(format!("exact match in {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let w: SignedPermutation = "3,2,-1".parse().unwrap();
    let words: Vec<String> = enumerate_reduced(&w, 1000)
        .map_err(err)?
        .iter()
        .map(Word::to_string)
        .collect();
    expect("R(3 2 -1)", words, vec!["0121".into(), "0212".into(), "2012".into()])?;
    Ok("{0121, 0212, 2012}".into())
}

fn criterion_4() -> Outcome {
    let cr = FactorizationCrystal { m: 3 };
    let ex = explore(&cr, &fact("(+2012)()()"), DEFAULT_VERTEX_CAP).map_err(err)?;
    expect("vertices", ex.elements.len(), 33)?;
    let comp = &ex.component;
    let edges = [
        ("(+2012)()()", Color::Bar1, "(+201)(-2)()"),
        ("(+2012)()()", Color::Even(1), "(+201)(+2)()"),
        ("(+201)(-2)()", Color::Even(2), "(+201)()(-2)"),
        ("(+201)(-2)()", Color::Even(1), "(+20)(-12)()"),
        ("(+201)(+2)()", Color::Bar1, "(+20)(-12)()"),
        ("(+201)(+2)()", Color::Even(1), "(+20)(+12)()"),
        ("(+201)(+2)()", Color::Even(2), "(+201)()(+2)"),
    ];
    for (src, c, dst) in edges {
        let got = comp
            .index_of(src)
            .and_then(|s| cr.lower(c, &ex.elements[s]).ok().flatten());
        expect(&format!("{src} -{c}->"), got, Some(fact(dst)))?;
    }
    for f in &ex.elements {
        expect(
            "insertion tableau",
            pkr(f).map_err(err)?.0.to_string(),
            "2 0 1 2".into(),
        )?;
    }
    let second = [
        (Color::Even(1), "(+02)(+12)()"),
        (Color::Bar1, "(+01)(+21)()"),
        (Color::Even(2), "(+012)()(+1)"),
    ];
    for (c, dst) in second {
        expect(
            &format!("(+012)(+1)() -{c}->"),
            cr.lower(c, &fact("(+012)(+1)()")).map_err(err)?,
            Some(fact(dst)),
        )?;
    }
    Ok("33 vertices, listed edges present".into())
}

fn criterion_5() -> Outcome {
    let mut rep = verify::highlow(&Bounds {
        n: 4,
        max_size: 5,
        ..Bounds::default()
    })
    .map_err(err)?;
    expect(
        "highest SSDT",
        highest_ssdt(4, &[5, 3, 1]).map_err(err)?.to_string(),
        "3 2 2 1 1 / 2 1 1 / 1".into(),
    )?;
    expect(
        "lowest SSDT",
        lowest_ssdt(4, &[5, 3, 1]).map_err(err)?.to_string(),
        "4 4 4 4 4 / 3 3 3 / 2".into(),
    )?;
    expect(
        "reading word",
        rw_ssdt(&highest_ssdt(4, &[5, 3, 1]).map_err(err)?).to_string(),
        "112231121".into(),
    )?;
    expect(
        "highest PT",
        highest_pt(5, &[5, 3, 1]).map_err(err)?.to_string(),
        "1 1 1 1 1 / 2 2 2 / 3".into(),
    )?;
    expect(
        "lowest PT",
        lowest_pt(5, &[5, 3, 1]).map_err(err)?.to_string(),
        "3 4' 4 5' 5 / 4 5' 5 / 5".into(),
    )?;
    expect(
        "lowest PT (3,1)",
        lowest_pt(3, &[3, 1]).map_err(err)?.to_string(),
        "2 3' 3 / 3".into(),
    )?;

    let ss = SsdtCrystal { n: 4 };
    let top = highest_ssdt(4, &[5, 3, 1]).map_err(err)?;
    let ex = explore(&ss, &top, DEFAULT_VERTEX_CAP).map_err(err)?;
    check_high_low(
        &mut rep,
        "SSDT_4(5,3,1)",
        &ss,
        &ex.elements,
        &top,
        &lowest_ssdt(4, &[5, 3, 1]).map_err(err)?,
    )
    .map_err(err)?;

    let pc = PtCrystal { n: 5 };
    let top = highest_pt(5, &[5, 3, 1]).map_err(err)?;
    let ex = explore(&pc, &top, DEFAULT_VERTEX_CAP).map_err(err)?;
    check_high_low(
        &mut rep,
        "PT_5(5,3,1)",
        &pc,
        &ex.elements,
        &top,
        &lowest_pt(5, &[5, 3, 1]).map_err(err)?,
    )
    .map_err(err)?;

    let sc = SptCrystal { n: 5 };
    let top = pt("1' 1 1 1 1 / 2 2 2 / 3'");
    let ex = explore(&sc, &top, DEFAULT_VERTEX_CAP).map_err(err)?;
    check_high_low(
        &mut rep,
        "SPT_5(5,3,1) type {1,3}",
        &sc,
        &ex.elements,
        &top,
        &pt("3' 4' 4 5' 5 / 4 5' 5 / 5'"),
    )
    .map_err(err)?;
    suite(rep)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let out = suite(verify::pt_equivalence(3, 5).map_err(err)?)?;
    within("run", start.elapsed(), Duration::from_secs(600))?;
    Ok(out)
}

fn bounds_7() -> Bounds {
    Bounds {
        rank_b: 3,
        max_len: 5,
        m: 3,
        ..Bounds::default()
    }
}

fn criterion_7() -> Outcome {
    suite(verify::fact_equivalence(&bounds_7()).map_err(err)?)
}

fn criterion_8() -> Outcome {
    let mut rep = verify::hm_bijection(3, 5).map_err(err)?;
    rep.absorb(verify::kr_bijection(4, 6).map_err(err)?);
    rep.absorb(verify::pkr_bijection(&bounds_7()).map_err(err)?);
    let skip_zero = verify::reduced_words(4, 6)
        .iter()
        .map(|w| kr_traced(w).map(|(_, _, t)| t.iter().filter(|s| s.case == KrCase::SkipZero).count()))
        .sum::<qcrystal::Result<usize>>()
        .map_err(err)?;
    Ok(format!(
        "{}; the 0-into-101 branch fired {skip_zero} times",
        suite(rep)?
    ))
}

fn criterion_9() -> Outcome {
    let mut rep = SuiteReport::new("axioms");
    let mut absorb = |what: String, r: qcrystal::crystal::AxiomReport| rep.absorb_axioms(&what, &r);
    let cr = FactorizationCrystal { m: 3 };
    let ex = explore(&cr, &fact("(+2012)()()"), DEFAULT_VERTEX_CAP).map_err(err)?;
    absorb("criterion 4 component".into(), check_q_axioms(&cr, &ex.elements));
    for (n, lambda) in shapes(4, 5) {
        let pc = PtCrystal { n };
        let ex = explore(&pc, &highest_pt(n, &lambda).map_err(err)?, DEFAULT_VERTEX_CAP).map_err(err)?;
        absorb(format!("PT_{n}({lambda:?})"), check_q_axioms(&pc, &ex.elements));
        let ss = SsdtCrystal { n };
        let ex = explore(&ss, &highest_ssdt(n, &lambda).map_err(err)?, DEFAULT_VERTEX_CAP).map_err(err)?;
        absorb(format!("SSDT_{n}({lambda:?})"), check_q_axioms(&ss, &ex.elements));
    }
    for n in [4usize, 5] {
        let pc = PtCrystal { n };
        let ex = explore(&pc, &highest_pt(n, &[5, 3, 1]).map_err(err)?, DEFAULT_VERTEX_CAP).map_err(err)?;
        absorb(format!("PT_{n}((5,3,1))"), check_q_axioms(&pc, &ex.elements));
    }
    for w in all_elements(3).into_iter().filter(|w| w.length() <= 4) {
        let cr = FactorizationCrystal { m: 4 };
        for comp in factorization_components(&w, 4, DEFAULT_VERTEX_CAP).map_err(err)? {
            absorb(format!("U_4({w})"), check_q_axioms(&cr, &comp));
        }
    }
    suite(rep)
}

fn criterion_10() -> Outcome {
    let (_, q) = kr(&"012013".parse().unwrap()).map_err(err)?;
    expect("bottom index", vee_bottom(&q, 3, 6), Some(2))?;
    let mut rep = SuiteReport::new("vee");
    for w in verify::reduced_words(3, 6) {
        let (_, q) = kr(&w).map_err(err)?;
        let l = w.len() as u32;
        for i in 1..=l {
            for j in i..=l {
                let piece = &w.letters()[i as usize - 1..j as usize];
                rep.check(
                    is_unimodal(piece) == vee_bottom(&q, i, j).is_some(),
                    "unimodal iff vee",
                    || format!("{w} [{i},{j}]"),
                );
            }
        }
    }
    suite(rep)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden mixed insertion", criterion_1),
        ("golden Kraśkiewicz and primed insertion", criterion_2),
        ("reduced words of (3,2,-1)", criterion_3),
        ("33-vertex factorization component", criterion_4),
        ("highest and lowest weight forms", criterion_5),
        ("primed operators independent of the recording tableau", criterion_6),
        ("explicit odd factorization operators match transport", criterion_7),
        ("insertion bijections round trip", criterion_8),
        ("crystal axioms on generated components", criterion_9),
        ("unimodal subwords insert as vees", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
