//! Acceptance gate: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use isoproj::census::{all_homogeneous, enumerate_foliations, export, homogeneity, is_prime, ExportFormat};
use isoproj::fkmproj::{
    admissible_points_fkm, admissible_points_fkm_bounded, closed_form_n, count_classes_fkm, diagram_automorphism_count,
    exceptional_multiplicities, families, outpm_group, realizable_automorphisms,
};
use isoproj::golden::{literal_j_fkm, literal_j_pair, tabulated_n};
use isoproj::rootsys::TorusPoint;
use isoproj::symcat::catalog;
use isoproj::voganproj::{admissible_points, admissible_points_oracle, count_classes, induced_maps};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    ok: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn pair_n() -> Outcome {
    let mut rows = 0;
    let mut bad = Vec::new();
    for r in catalog(8) {
        let Some(want) = tabulated_n(r.label, r.p, r.nu) else { continue };
        rows += 1;
        match count_classes(&r) {
            Ok(c) if c.n == want => {}
            Ok(c) => bad.push(format!("{r}: N={} want {want}", c.n)),
            Err(e) => bad.push(format!("{r}: {e}")),
        }
    }
    outcome(bad.is_empty(), format!("{rows} rows, mismatches {bad:?}"))
}

fn pair_fixtures() -> Outcome {
    let mut rows = 0;
    let mut bad = Vec::new();
    for r in catalog(8) {
        rows += 1;
        let pts = admissible_points(&r);
        if pts != admissible_points_oracle(&r, 2) {
            bad.push(format!("{r}: oracle"));
        }
        if let Some(lit) = literal_j_pair(r.label, r.p, r.nu) {
            if pts != lit {
                bad.push(format!("{r}: literal"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{rows} records, mismatches {bad:?}"))
}

fn fkm_n() -> Outcome {
    let fams = families(18, 9);
    let classes: BTreeSet<u8> = fams.iter().map(|f| (f.m % 8) as u8).collect();
    let mut bad = Vec::new();
    for f in &fams {
        match (count_classes_fkm(f), closed_form_n(f)) {
            (Ok(c), Ok(n)) if c.n == n => {}
            (c, n) => bad.push(format!("{f}: {:?} vs {:?}", c.map(|c| c.n), n)),
        }
    }
    outcome(
        bad.is_empty() && classes.len() == 8,
        format!("{} families, m mod 8 classes {}, mismatches {bad:?}", fams.len(), classes.len()),
    )
}

fn fkm_fixtures() -> Outcome {
    let fams = families(18, 9);
    let bad: Vec<String> = fams
        .iter()
        .filter(|f| admissible_points_fkm(f).map(|p| p != literal_j_fkm(f)).unwrap_or(true))
        .map(|f| f.name())
        .collect();
    outcome(bad.is_empty(), format!("{} families, mismatches {bad:?}", fams.len()))
}

fn diagram_orders() -> Outcome {
    let mut checked = 0;
    let mut raw_differs = 0;
    let mut bad = Vec::new();
    for f in families(18, 10).iter().filter(|f| f.p <= 5 && f.q() <= 5) {
        checked += 1;
        let (Ok(group), Ok(real), Ok(raw)) =
            (outpm_group(f), realizable_automorphisms(f), diagram_automorphism_count(f))
        else {
            bad.push(f.name());
            continue;
        };
        let g: BTreeSet<_> = group.into_iter().collect();
        let r: BTreeSet<_> = real.into_iter().collect();
        if g != r {
            bad.push(format!("{f}: group {} realizable {}", g.len(), r.len()));
        }
        if raw != g.len() {
            raw_differs += 1;
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checked} families, mismatches {bad:?}; bare graph count exceeds group on {raw_differs} small-k shapes"
        ),
    )
}

fn prime_criterion() -> Outcome {
    let bad: Vec<u64> = (1..=200).filter(|&n| all_homogeneous(n) != is_prime(n + 1)).collect();
    outcome(bad.is_empty(), format!("n in 1..=200, mismatches {bad:?}"))
}

fn homogeneity_ledger() -> Outcome {
    let mut bad = Vec::new();
    let mut rows = 0;
    for r in catalog(8).into_iter().filter(|r| r.projective_census) {
        rows += 1;
        let Ok(c) = count_classes(&r) else {
            bad.push(r.name());
            continue;
        };
        let homog = c.representatives().iter().filter(|t| homogeneity(&r, t).unwrap_or(false)).count();
        let want = usize::from(r.hermitian || r.is_rank_one());
        if homog != want {
            bad.push(format!("{r}: {homog} homogeneous of {}", c.n));
        }
    }
    outcome(bad.is_empty(), format!("{rows} records, mismatches {bad:?}"))
}

fn exceptional_pairs() -> Outcome {
    let (pairs, classes) = exceptional_multiplicities(10, 4);
    let want: BTreeSet<(i64, i64)> = [(2, 1), (4, 3), (5, 2), (6, 1), (8, 7), (9, 6)].into_iter().collect();
    outcome(pairs == want, format!("{pairs:?} from {} classes", classes.len()))
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    let recs = catalog(7);
    let fams = families(10, 6);
    let mut failures = Vec::new();

    let r = runner.run(&(0..recs.len(), 2i64..=3), |(i, bound)| {
        let rec = &recs[i];
        prop_assert_eq!(admissible_points(rec), admissible_points_oracle(rec, bound), "{}", rec);
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("pair bound: {e}"));
    }

    let r = runner.run(&(0..fams.len(), 2i64..=3), |(i, bound)| {
        let f = &fams[i];
        prop_assert_eq!(admissible_points_fkm(f).unwrap(), admissible_points_fkm_bounded(f, bound).unwrap(), "{}", f);
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("fkm bound: {e}"));
    }

    let r = runner.run(&(0..recs.len()), |i| {
        let rec = &recs[i];
        let pts: BTreeSet<TorusPoint> = admissible_points(rec).into_iter().collect();
        for m in induced_maps(rec).unwrap() {
            let img: BTreeSet<TorusPoint> = pts.iter().map(|t| m.apply(t)).collect();
            prop_assert_eq!(&img, &pts, "{}", rec);
        }
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("induced maps: {e}"));
    }

    let r = runner.run(&(1u64..=64), |n| {
        let a = export(&enumerate_foliations(n).unwrap(), ExportFormat::Json).unwrap();
        let b = export(&enumerate_foliations(n).unwrap(), ExportFormat::Json).unwrap();
        prop_assert_eq!(a, b);
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("census determinism: {e}"));
    }

    outcome(failures.is_empty(), format!("4 properties x 64 cases, failures {failures:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 pair N reproduction", pair_n, Some(Duration::from_secs(10))),
        ("2 pair J∩C̄ fixtures", pair_fixtures, None),
        ("3 FKM N reproduction", fkm_n, Some(Duration::from_secs(60))),
        ("4 FKM J∩C̄ fixtures", fkm_fixtures, None),
        ("5 Out± order equality", diagram_orders, None),
        ("6 prime criterion", prime_criterion, Some(Duration::from_secs(5))),
        ("7 homogeneity ledger", homogeneity_ledger, None),
        ("8 exceptional multiplicity pairs", exceptional_pairs, None),
        ("9 property suite", properties, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took <= l);
        let ok = out.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!("{} {name}: {} [{:.2}s{budget}]", if ok { "PASS" } else { "FAIL" }, out.detail, took.as_secs_f64());
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
