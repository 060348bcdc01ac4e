//! Literal reference data: the N column for symmetric pairs, the J∩C̄ sets per
//! family and per FKM case, and a driver that checks the computations against them.

use std::collections::BTreeSet;

use crate::census::{all_homogeneous, homogeneity, is_prime};
use crate::error::Result;
use crate::fkmproj::{
    self, admissible_points_fkm, admissible_points_fkm_bounded, closed_form_n, count_classes_fkm, outpm_group,
    realizable_automorphisms, CaseClass, FkmFamily, Split,
};
use crate::rootsys::{Basis, TorusPoint};
use crate::symcat::{catalog, Label, SymmetricPairRecord};
use crate::voganproj::{admissible_points, admissible_points_oracle, count_classes};

/// Tabulated N for a symmetric pair; None for F II.
pub fn tabulated_n(label: Label, p: usize, nu: usize) -> Option<usize> {
    Some(match label {
        Label::AIII => {
            if 2 * nu == p + 1 {
                1 + nu / 2
            } else {
                1 + nu / 2 + (p - nu).div_ceil(2)
            }
        }
        Label::CII | Label::DI => {
            if 2 * nu == p {
                1
            } else {
                2
            }
        }
        Label::DIII | Label::EII | Label::EIII | Label::EVI => 2,
        Label::FII => return None,
        _ => 1,
    })
}

fn h(p: usize, terms: &[(usize, i64)]) -> TorusPoint {
    let mut v = vec![0; p];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    TorusPoint::from_ints(Basis::DualH, &v)
}

fn sorted(mut v: Vec<TorusPoint>) -> Vec<TorusPoint> {
    v.sort();
    v.dedup();
    v
}

/// J∩C̄ as listed family by family; None for F II.
pub fn literal_j_pair(label: Label, p: usize, nu: usize) -> Option<Vec<TorusPoint>> {
    let neg = |i: usize| h(p, &[(i, -1)]);
    let pos = |i: usize| h(p, &[(i, 1)]);
    let shift = |i: usize, j: usize| h(p, &[(i, -1), (j, 2)]);
    let pts = match label {
        Label::AIII => {
            let mut v = vec![neg(nu), pos(nu)];
            v.extend((1..=p).filter(|&i| i != nu).map(|i| shift(nu, i)));
            v
        }
        Label::BI if nu == 1 => vec![neg(1), pos(1)],
        Label::BI => vec![neg(nu), shift(nu, 1)],
        Label::CI => vec![neg(p), pos(p)],
        Label::CII => vec![neg(nu), shift(nu, p)],
        Label::DI if nu == 1 => vec![neg(1), pos(1), shift(1, p - 1), shift(1, p)],
        Label::DI => vec![neg(nu), shift(nu, 1), shift(nu, p - 1), shift(nu, p)],
        Label::DIII => vec![neg(p), pos(p), shift(p, 1), shift(p, p - 1)],
        Label::EII => vec![neg(2), shift(2, 1), shift(2, 6)],
        Label::EIII => vec![neg(6), pos(6), shift(6, 1)],
        Label::EV => vec![neg(2), shift(2, 7)],
        Label::EVI => vec![neg(1), shift(1, 7)],
        Label::EVII => vec![neg(7), pos(7)],
        Label::EVIII => vec![neg(1)],
        Label::EIX => vec![neg(8)],
        Label::FI => vec![neg(4)],
        Label::G => vec![neg(2)],
        Label::FII => return None,
    };
    Some(sorted(pts))
}

/// J∩C̄ as listed per FKM case; coordinates `(x^s | blocks)`.
pub fn literal_j_fkm(f: &FkmFamily) -> Vec<TorusPoint> {
    let d = f.dim();
    let e = |terms: &[(usize, i64)]| {
        let mut v = vec![0; d];
        for &(i, c) in terms {
            v[i] += c;
        }
        TorusPoint::from_ints(Basis::Epsilon, &v)
    };
    let two_s = e(&[(0, 2)]);
    let minus_two_s = e(&[(0, -2)]);
    // Sum of the block coordinates, optionally with the last coordinate of
    // the given blocks negated.
    let block_sum = |flip: &[usize]| {
        let mut terms = Vec::new();
        for (bi, b) in f.blocks.iter().enumerate() {
            for j in 0..b.rank {
                let last = j + 1 == b.rank;
                terms.push((b.offset + j, if last && flip.contains(&bi) { -1 } else { 1 }));
            }
        }
        e(&terms)
    };
    let mut pts = vec![two_s];
    match (f.class(), f.split) {
        (CaseClass::M0, Split::PlusMinus { plus, minus }) => {
            if plus % 2 == 0 && minus % 2 == 0 {
                pts.extend([block_sum(&[]), block_sum(&[0]), block_sum(&[1]), block_sum(&[0, 1])]);
            }
        }
        (CaseClass::M17, Split::K(k)) => {
            if k % 2 == 0 {
                pts.extend([block_sum(&[]), block_sum(&[0])]);
            }
            if f.m == 1 {
                pts.push(minus_two_s);
            }
        }
        (CaseClass::M26, Split::K(k)) => {
            let o = f.blocks[0].offset;
            for plus in 0..=k {
                let terms: Vec<(usize, i64)> = (0..k).map(|j| (o + j, if j < plus { 1 } else { -1 })).collect();
                pts.push(e(&terms));
            }
        }
        _ => pts.push(block_sum(&[])),
    }
    sorted(pts)
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub section: &'static str,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_rank: usize,
    pub bound: i64,
    pub fkm_max_m: usize,
    pub fkm_max_dim: usize,
    pub prime_max_n: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_rank: 8, bound: 2, fkm_max_m: 18, fkm_max_dim: 9, prime_max_n: 200 }
    }
}

fn line(section: &'static str, name: String, ok: bool, detail: String) -> CheckLine {
    CheckLine { section, name, ok, detail }
}

/// N against the table, J∩C̄ against the oracle and the literal sets, and the
/// homogeneity count, for every catalog record.
pub fn check_pair(rec: &SymmetricPairRecord, bound: i64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let name = rec.name();
    let pts = admissible_points(rec);
    let oracle = admissible_points_oracle(rec, bound);
    out.push(line("J∩C̄ oracle", name.clone(), pts == oracle, format!("{} points", pts.len())));
    if let Some(lit) = literal_j_pair(rec.label, rec.p, rec.nu) {
        out.push(line("J∩C̄ literal", name.clone(), pts == lit, format!("{} points", lit.len())));
    }
    if let Some(expected) = tabulated_n(rec.label, rec.p, rec.nu) {
        let c = count_classes(rec)?;
        out.push(line("pair N", name.clone(), c.n == expected, format!("N={} expected {expected}", c.n)));
        let mut homog = 0;
        for t in c.representatives() {
            if homogeneity(rec, &t)? {
                homog += 1;
            }
        }
        let want = usize::from(rec.hermitian || rec.is_rank_one());
        out.push(line("homogeneity", name, homog == want, format!("{homog} of {} homogeneous", c.n)));
    }
    Ok(out)
}

/// Orbit N against the closed form, J∩C̄ against the literal sets and a wider
/// search, and optionally the group against realizable diagram automorphisms.
pub fn check_fkm(f: &FkmFamily, bound: i64, diagram: bool) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let name = f.name();
    let pts = admissible_points_fkm(f)?;
    let lit = literal_j_fkm(f);
    out.push(line("FKM J∩C̄ literal", name.clone(), pts == lit, format!("{} points", pts.len())));
    let wide = admissible_points_fkm_bounded(f, bound.max(fkmproj::DEFAULT_BOUND) + 1)?;
    out.push(line("FKM J∩C̄ wide search", name.clone(), wide == pts, format!("{} points", wide.len())));
    let cf = closed_form_n(f)?;
    let detail = match count_classes_fkm(f) {
        Ok(c) => (true, format!("N={} closed form {cf}", c.n)),
        Err(e) => (false, e.to_string()),
    };
    out.push(line("FKM N", name.clone(), detail.0, detail.1));
    if diagram {
        let group = outpm_group(f)?;
        let real = realizable_automorphisms(f)?;
        out.push(line(
            "diagram automorphisms",
            name,
            real == group,
            format!("group order {} realizable {}", group.len(), real.len()),
        ));
    }
    Ok(out)
}

/// Runs every check; the report lists one line per item.
pub fn check_tables(opts: &CheckOptions) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for rec in catalog(opts.max_rank) {
        out.extend(check_pair(&rec, opts.bound)?);
    }
    for f in fkmproj::families(opts.fkm_max_m, opts.fkm_max_dim) {
        let small = f.p <= 5 && f.q() <= 5;
        out.extend(check_fkm(&f, opts.bound, small)?);
    }
    let bad: Vec<u64> = (1..=opts.prime_max_n).filter(|&n| all_homogeneous(n) != is_prime(n + 1)).collect();
    out.push(line(
        "prime criterion",
        format!("1..={}", opts.prime_max_n),
        bad.is_empty(),
        format!("mismatches {bad:?}"),
    ));
    let (pairs, classes) = fkmproj::exceptional_multiplicities(10, 4);
    let want: BTreeSet<(i64, i64)> = [(2, 1), (4, 3), (5, 2), (6, 1), (8, 7), (9, 6)].into_iter().collect();
    out.push(line(
        "exceptional pairs",
        "m<=10".into(),
        pairs == want,
        format!("{pairs:?} from {} classes", classes.len()),
    ));
    Ok(out)
}
