use std::collections::BTreeSet;

use isoproj::fkmproj::*;
use isoproj::golden::literal_j_fkm;
use isoproj::rootsys::{Basis, TorusPoint};
use isoproj::Error;
use num_rational::Rational64;

fn fam(m: usize, k: usize) -> FkmFamily {
    clifford_family(m, Split::K(k)).unwrap()
}

fn fam_pm(m: usize, plus: usize, minus: usize) -> FkmFamily {
    clifford_family(m, Split::PlusMinus { plus, minus }).unwrap()
}

fn pts(f: &FkmFamily) -> Vec<String> {
    admissible_points_fkm(f).unwrap().iter().map(|t| format_point(f, t)).collect()
}

#[test]
fn family_arithmetic() {
    let f = fam(3, 2);
    assert_eq!((f.delta, f.dim_v, f.n, f.mult), (8, 16, 7, (3, 4)));
    assert!(f.in_scope);
    assert_eq!(f.p, 2);

    let f = fam(2, 2);
    assert_eq!((f.dim_v, f.n, f.mult), (8, 3, (2, 1)));
    assert!(!f.in_scope);
    assert!(matches!(admissible_points_fkm(&f), Err(Error::OutOfScope { .. })));
    assert!(weight_system(&f).is_err());

    let f = fam_pm(4, 1, 1);
    assert_eq!((f.delta, f.dim_v, f.n, f.mult), (8, 16, 7, (4, 3)));
}

#[test]
fn delta_periodicity() {
    let base = [2, 4, 8, 8, 16, 16, 16, 16];
    for m in 1..=8 {
        assert_eq!(delta(m), Some(base[m - 1]));
    }
    for m in 1..=40 {
        assert_eq!(delta(m + 8), delta(m).map(|d| 16 * d), "m={m}");
    }
    assert_eq!(delta(200), None);
}

#[test]
fn rejected_shapes() {
    assert!(matches!(clifford_family(4, Split::K(2)), Err(Error::SplitShape(_))));
    assert!(matches!(clifford_family(3, Split::PlusMinus { plus: 1, minus: 1 }), Err(Error::SplitShape(_))));
    assert!(matches!(clifford_family(1, Split::K(1)), Err(Error::NotFkm { .. })));
    assert!(matches!(clifford_family(2, Split::K(1)), Err(Error::NotFkm { .. })));
    assert!(clifford_family(0, Split::K(3)).is_err());
    assert!(clifford_family(5, Split::K(0)).is_err());
}

#[test]
fn weights() {
    // m≡3,5: spin weights shifted by ±ω_j.
    let f = fam(3, 2);
    let w = weight_system(&f).unwrap();
    assert_eq!(w.len(), 4 * 2 * 2);
    let half = Rational64::new(1, 2);
    let want = vec![half, half, Rational64::from_integer(1), Rational64::from_integer(0)];
    assert!(w.contains(&want));

    // m≡1,7 with k odd: the bare spin weights appear.
    let f = fam(7, 3);
    let w = weight_system(&f).unwrap();
    assert_eq!(w.len(), 16 * (2 + 1));
    let bare = vec![half; 4].into_iter().chain([Rational64::from_integer(0)]).collect::<Vec<_>>();
    assert!(w.contains(&bare));
    let f = fam(7, 4);
    assert_eq!(weight_system(&f).unwrap().len(), 16 * 4);

    // Weight sets are symmetric.
    for f in families(10, 8) {
        let w: BTreeSet<Vec<i64>> = doubled_weights(&f).into_iter().collect();
        for x in &w {
            assert!(w.contains(&x.iter().map(|c| -c).collect::<Vec<_>>()), "{f}");
        }
    }
}

#[test]
fn admissible_point_examples() {
    assert_eq!(pts(&fam(3, 2)), ["e1+e2", "2es1"]);
    assert_eq!(pts(&fam(5, 3)), ["e1+e2+e3", "2es1"]);
    let mut six = pts(&fam(6, 2));
    six.sort();
    let mut want = vec!["2es1", "e1+e2", "e1-e2", "-e1-e2"];
    want.sort();
    assert_eq!(six, want);
    let one = pts(&fam(1, 4));
    assert!(one.contains(&"2es1".to_string()) && one.contains(&"-2es1".to_string()));
    assert_eq!(pts(&fam_pm(8, 2, 1)), ["2es1"]);
}

#[test]
fn search_matches_literal_sets() {
    for f in families(18, 9) {
        assert_eq!(admissible_points_fkm(&f).unwrap(), literal_j_fkm(&f), "{f}");
    }
}

#[test]
fn wider_search_finds_nothing_new() {
    for f in families(12, 7) {
        let a = admissible_points_fkm(&f).unwrap();
        assert_eq!(admissible_points_fkm_bounded(&f, 3).unwrap(), a, "{f}");
    }
}

#[test]
fn admissible_points_satisfy_the_weight_condition() {
    for f in families(10, 7) {
        let w = doubled_weights(&f);
        for t in admissible_points_fkm(&f).unwrap() {
            let x: Vec<i64> = t.coords().iter().map(|c| (c * 2).to_integer()).collect();
            for wt in &w {
                let v: i64 = wt.iter().zip(&x).map(|(a, b)| a * b).sum();
                assert_eq!(v.abs(), 4, "{f}");
            }
        }
    }
}

#[test]
fn generators() {
    let names = |f: &FkmFamily| -> Vec<String> { outpm_generators(f).unwrap().into_iter().map(|g| g.name).collect() };
    assert_eq!(names(&fam(3, 2)), ["sigma"]);
    assert_eq!(names(&fam(5, 2)), ["sigma"]);
    assert_eq!(names(&fam_pm(4, 2, 2)), ["tau"]);
    assert!(names(&fam_pm(4, 2, 1)).is_empty());
    assert!(names(&fam_pm(12, 3, 1)).is_empty());

    let f = fam(3, 2);
    let g = &outpm_generators(&f).unwrap()[0];
    let es2 = TorusPoint::from_ints(Basis::Epsilon, &[0, 1, 0, 0]);
    assert_eq!(g.matrix.apply(es2.coords()), TorusPoint::from_ints(Basis::Epsilon, &[0, -1, 0, 0]).coords());

    let f = fam_pm(4, 2, 2);
    let g = &outpm_generators(&f).unwrap()[0];
    let plus1 = TorusPoint::from_ints(Basis::Epsilon, &[0, 0, 1, 0, 0, 0]);
    assert_eq!(g.matrix.apply(plus1.coords()), TorusPoint::from_ints(Basis::Epsilon, &[0, 0, 0, 0, 1, 0]).coords());
}

#[test]
fn generators_permute_admissible_points() {
    for f in families(18, 9) {
        let a: BTreeSet<TorusPoint> = admissible_points_fkm(&f).unwrap().into_iter().collect();
        for g in outpm_generators(&f).unwrap() {
            let img: BTreeSet<TorusPoint> =
                a.iter().map(|t| TorusPoint::new(Basis::Epsilon, g.matrix.apply(t.coords())).unwrap()).collect();
            assert_eq!(img, a, "{f} {}", g.name);
        }
    }
}

#[test]
fn n_examples() {
    assert_eq!(count_classes_fkm(&fam(2, 5)).unwrap().n, 4);
    assert_eq!(count_classes_fkm(&fam(2, 3)).unwrap().n, 3);
    assert_eq!(count_classes_fkm(&fam_pm(8, 2, 2)).unwrap().n, 2);
    assert_eq!(count_classes_fkm(&fam_pm(8, 2, 1)).unwrap().n, 1);
    assert_eq!(count_classes_fkm(&fam(3, 2)).unwrap().n, 2);
    assert_eq!(count_classes_fkm(&fam(7, 3)).unwrap().n, 1);
}

#[test]
fn orbit_count_matches_closed_form() {
    for f in families(18, 9) {
        let c = count_classes_fkm(&f).unwrap();
        assert_eq!(c.n, closed_form_n(&f).unwrap(), "{f}");
        let covered: usize = c.orbits.iter().map(Vec::len).sum();
        assert_eq!(covered, c.points.len());
    }
}

#[test]
fn empty_block_is_legal() {
    let f = fam_pm(8, 4, 0);
    assert!(f.empty_block);
    assert_eq!(f.dim_v, 64);
    assert_eq!(count_classes_fkm(&f).unwrap().n, closed_form_n(&f).unwrap());
}

#[test]
fn small_k_diagrams() {
    let f = fam_pm(8, 2, 1);
    let d = lowest_weight_diagram(&f).unwrap();
    assert_eq!(d.black.len(), 3);
    let edges = d.edges();
    assert_eq!(edges.len(), 3);
    assert!(edges.iter().all(|(w, _, c)| w == "as4" && *c == -1));
    assert_eq!(diagram_automorphism_count(&f).unwrap(), 6);
    assert_eq!(realizable_automorphisms(&f).unwrap().len(), 2);
    assert_eq!(outpm_group(&f).unwrap().len(), 2);

    // m=1, k=4: both black nodes are joined to both white nodes, a 4-cycle.
    let f = fam(1, 4);
    let d = lowest_weight_diagram(&f).unwrap();
    assert_eq!((d.white.len(), d.black.len()), (2, 2));
    let edges = d.edges();
    assert_eq!(edges.len(), 4);
    for b in &d.black {
        let nbrs: BTreeSet<&str> = edges.iter().filter(|e| e.1 == b.name).map(|e| e.0.as_str()).collect();
        assert_eq!(nbrs, ["a1", "a2"].into_iter().collect());
    }
}

#[test]
fn generated_group_equals_realizable_automorphisms() {
    for f in families(18, 10) {
        if f.p > 5 || f.q() > 5 {
            continue;
        }
        let g: BTreeSet<_> = outpm_group(&f).unwrap().into_iter().collect();
        let r: BTreeSet<_> = realizable_automorphisms(&f).unwrap().into_iter().collect();
        assert_eq!(g, r, "{f}");
    }
}

#[test]
fn exceptional_pairs() {
    let (pairs, classes) = exceptional_multiplicities(10, 4);
    let want: BTreeSet<(i64, i64)> = [(2, 1), (4, 3), (5, 2), (6, 1), (8, 7), (9, 6)].into_iter().collect();
    assert_eq!(pairs, want);
    assert_eq!(classes.len(), 8);
}

#[test]
fn descriptors_and_names() {
    assert_eq!(fam(3, 2).descriptor, "Pin(4)·Sp(2) on d⊗H^2");
    assert_eq!(fam(2, 3).name(), "FKM m=2 k=3");
    assert_eq!(fam_pm(8, 2, 1).name(), "FKM m=8 k+=2 k-=1");
    assert_eq!(Split::PlusMinus { plus: 1, minus: 3 }.normalized(), Split::PlusMinus { plus: 3, minus: 1 });
    assert_eq!(fam_pm(4, 1, 2).coordinate_names(), ["es1", "es2", "e+1", "e-1", "e-2"]);
}
