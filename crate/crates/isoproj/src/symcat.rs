//! Irreducible inner compact symmetric pairs in Borel–de Siebenthal form.
//!
//! Each record carries the painted node ν, the highest root μ and the highest
//! noncompact root λ. The literal μ, λ columns are embedded below and checked
//! against values recomputed from the root system when a record is built.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::ColoredGraph;
use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, pairing_coords, CartanType, Root, RootSystem, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    AIII,
    BI,
    CI,
    CII,
    DI,
    DIII,
    EII,
    EIII,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

impl Label {
    pub const ALL: [Label; 16] = [
        Label::AIII,
        Label::BI,
        Label::CI,
        Label::CII,
        Label::DI,
        Label::DIII,
        Label::EII,
        Label::EIII,
        Label::EV,
        Label::EVI,
        Label::EVII,
        Label::EVIII,
        Label::EIX,
        Label::FI,
        Label::FII,
        Label::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Label::AIII => "A III",
            Label::BI => "B I",
            Label::CI => "C I",
            Label::CII => "C II",
            Label::DI => "D I",
            Label::DIII => "D III",
            Label::EII => "E II",
            Label::EIII => "E III",
            Label::EV => "E V",
            Label::EVI => "E VI",
            Label::EVII => "E VII",
            Label::EVIII => "E VIII",
            Label::EIX => "E IX",
            Label::FI => "F I",
            Label::FII => "F II",
            Label::G => "G",
        }
    }

    pub fn series(self) -> Series {
        match self {
            Label::AIII => Series::A,
            Label::BI => Series::B,
            Label::CI | Label::CII => Series::C,
            Label::DI | Label::DIII => Series::D,
            Label::EII | Label::EIII => Series::E,
            Label::EV | Label::EVI | Label::EVII => Series::E,
            Label::EVIII | Label::EIX => Series::E,
            Label::FI | Label::FII => Series::F,
            Label::G => Series::G,
        }
    }

    /// (p, ν) for the exceptional labels.
    pub fn fixed(self) -> Option<(usize, usize)> {
        match self {
            Label::EII => Some((6, 2)),
            Label::EIII => Some((6, 6)),
            Label::EV => Some((7, 2)),
            Label::EVI => Some((7, 1)),
            Label::EVII => Some((7, 7)),
            Label::EVIII => Some((8, 1)),
            Label::EIX => Some((8, 8)),
            Label::FI => Some((4, 4)),
            Label::FII => Some((4, 1)),
            Label::G => Some((2, 2)),
            _ => None,
        }
    }

    /// Parameter constraints as text.
    pub fn constraint(self) -> &'static str {
        match self {
            Label::AIII => "p>=3, 2<=nu<=p-1",
            Label::BI => "p>=3, 1<=nu<=p; rank one nu=p>=1",
            Label::CI => "nu=p>=2",
            Label::CII => "p>=4, 2<=nu<=p-2",
            Label::DI => "p>=4, 1<=nu<=p-2",
            Label::DIII => "nu=p>=4",
            _ => "fixed",
        }
    }

    fn check(self, p: usize, nu: usize) -> Result<()> {
        let ok = match self {
            Label::AIII => p >= 3 && (2..p).contains(&nu),
            Label::BI => (p >= 2 && (1..=p).contains(&nu)) || (p == 1 && nu == 1),
            Label::CI => p >= 2 && nu == p,
            Label::CII => p >= 4 && nu >= 2 && nu + 2 <= p,
            Label::DI => p >= 4 && nu >= 1 && nu + 2 <= p,
            Label::DIII => p >= 4 && nu == p,
            other => other.fixed() == Some((p, nu)),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IllegalParameters {
                label: self.name().to_string(),
                reason: format!("p={p}, nu={nu} violates {}", self.constraint()),
            })
        }
    }

    /// Catalog parameters (p, ν) with p ≤ max_rank.
    pub fn parameters(self, max_rank: usize) -> Vec<(usize, usize)> {
        if let Some((p, nu)) = self.fixed() {
            return if p <= max_rank { vec![(p, nu)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for p in 1..=max_rank {
            for nu in 1..=p {
                let catalogued = match self {
                    Label::BI => p >= 3 || nu == p,
                    _ => true,
                };
                if catalogued && self.check(p, nu).is_ok() {
                    out.push((p, nu));
                }
            }
        }
        out
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        Label::ALL
            .iter()
            .copied()
            .find(|l| l.name().replace(' ', "") == key)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// The μ column: highest root of the Cartan type of g.
pub fn table_mu(series: Series, p: usize) -> Vec<i64> {
    match series {
        Series::A => vec![1; p],
        Series::B => (1..=p).map(|i| if i == 1 { 1 } else { 2 }).collect(),
        Series::C => (1..=p).map(|i| if i == p { 1 } else { 2 }).collect(),
        Series::D => (1..=p).map(|i| if i == 1 || i + 1 >= p { 1 } else { 2 }).collect(),
        Series::E => match p {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
        },
        Series::F => vec![2, 4, 3, 2],
        Series::G => vec![3, 2],
    }
}

/// The λ column: highest noncompact root.
pub fn table_lambda(label: Label, p: usize, nu: usize) -> Vec<i64> {
    match label {
        Label::AIII => vec![1; p],
        Label::BI => (1..=p).map(|i| if i <= nu { 1 } else { 2 }).collect(),
        Label::CI => table_mu(Series::C, p),
        Label::CII => (1..=p).map(|i| if i <= nu || i == p { 1 } else { 2 }).collect(),
        Label::DI => (1..=p).map(|i| if i <= nu || i + 1 >= p { 1 } else { 2 }).collect(),
        Label::DIII => table_mu(Series::D, p),
        Label::EII => vec![1, 1, 2, 3, 2, 1],
        Label::EIII => vec![1, 2, 2, 3, 2, 1],
        Label::EV => vec![1, 1, 2, 3, 3, 2, 1],
        Label::EVI => vec![1, 2, 3, 4, 3, 2, 1],
        Label::EVII => vec![2, 2, 3, 4, 3, 2, 1],
        Label::EVIII => vec![1, 3, 3, 5, 4, 3, 2, 1],
        Label::EIX => vec![2, 3, 4, 6, 5, 4, 3, 1],
        Label::FI => vec![2, 4, 3, 1],
        Label::FII => vec![1, 3, 2, 1],
        Label::G => vec![3, 1],
    }
}

/// Real dimension of G/K by the classical formulas.
pub fn family_dim(label: Label, p: usize, nu: usize) -> usize {
    match label {
        Label::AIII => 2 * nu * (p + 1 - nu),
        Label::BI => 2 * nu * (2 * p - 2 * nu + 1),
        Label::CI => p * (p + 1),
        Label::CII | Label::DI => 4 * nu * (p - nu),
        Label::DIII => p * (p - 1),
        Label::EII => 40,
        Label::EIII => 32,
        Label::EV => 70,
        Label::EVI => 64,
        Label::EVII => 54,
        Label::EVIII => 128,
        Label::EIX => 112,
        Label::FI => 28,
        Label::FII => 16,
        Label::G => 8,
    }
}

/// Rank of G/K by the classical formulas.
pub fn family_rank(label: Label, p: usize, nu: usize) -> usize {
    match label {
        Label::AIII => nu.min(p + 1 - nu),
        Label::BI => (2 * nu).min(2 * p - 2 * nu + 1),
        Label::CI => p,
        Label::CII => nu.min(p - nu),
        Label::DI => (2 * nu).min(2 * p - 2 * nu),
        Label::DIII => p / 2,
        Label::EII | Label::EVI | Label::EIX | Label::FI => 4,
        Label::EIII | Label::G => 2,
        Label::EV => 7,
        Label::EVII => 3,
        Label::EVIII => 8,
        Label::FII => 1,
    }
}

fn root_system(ct: CartanType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rs) = cache.lock().expect("root system cache").get(&ct) {
        return rs.clone();
    }
    let rs = Arc::new(build_root_system(ct));
    cache.lock().expect("root system cache").insert(ct, rs.clone());
    rs
}

#[derive(Debug, Clone)]
pub struct SymmetricPairRecord {
    pub label: Label,
    pub cartan_type: CartanType,
    pub p: usize,
    pub nu: usize,
    pub hermitian: bool,
    pub mu: Root,
    pub lambda_nc: Root,
    pub params: &'static str,
    /// Name of an earlier catalog record describing the same symmetric space.
    pub duplicate_of: Option<String>,
    /// False for F II, which carries no N.
    pub projective_census: bool,
    rs: Arc<RootSystem>,
}

impl SymmetricPairRecord {
    /// Builds and validates a record, recomputing μ and λ from the root system.
    pub fn new(label: Label, p: usize, nu: usize) -> Result<Self> {
        label.check(p, nu)?;
        let ct = if label == Label::BI && p == 1 {
            CartanType::new(Series::A, 1)?
        } else {
            CartanType::new(label.series(), p)?
        };
        let rs = root_system(ct);
        let literal_mu = if label == Label::BI && p == 1 { vec![1] } else { table_mu(label.series(), p) };
        let literal_lambda = table_lambda(label, p, nu);
        let mu = rs.highest_root().clone();
        let name = record_name(label, p, nu);
        if mu.coords() != literal_mu.as_slice() {
            return Err(Error::Invariant(format!(
                "{name}: tabulated mu {literal_mu:?} differs from computed highest root {mu}"
            )));
        }
        let lambda_nc = highest_noncompact(&rs, nu)
            .ok_or_else(|| Error::Invariant(format!("{name}: no noncompact root dominates all others")))?;
        if lambda_nc.coords() != literal_lambda.as_slice() {
            return Err(Error::Invariant(format!(
                "{name}: tabulated lambda {literal_lambda:?} differs from computed {lambda_nc}"
            )));
        }
        let y_nu = mu.coords()[nu - 1];
        let hermitian = y_nu == 1;
        if !(y_nu == 1 || y_nu == 2) || lambda_nc.coords()[nu - 1] != 1 {
            return Err(Error::Invariant(format!("{name}: painted coefficients out of range")));
        }
        Ok(SymmetricPairRecord {
            label,
            cartan_type: ct,
            p,
            nu,
            hermitian,
            mu,
            lambda_nc,
            params: label.constraint(),
            duplicate_of: duplicate_of(label, p, nu),
            projective_census: label != Label::FII,
            rs,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Coefficient y_i of μ (1-based i).
    pub fn y(&self, i: usize) -> i64 {
        self.mu.coords()[i - 1]
    }

    /// Coefficient z_i of λ (1-based i).
    pub fn z(&self, i: usize) -> i64 {
        self.lambda_nc.coords()[i - 1]
    }

    pub fn is_rank_one(&self) -> bool {
        family_rank(self.label, self.p, self.nu) == 1
    }

    pub fn name(&self) -> String {
        record_name(self.label, self.p, self.nu)
    }

    pub fn is_compact(&self, root: &Root) -> bool {
        root.coords()[self.nu - 1] % 2 == 0
    }
}

impl fmt::Display for SymmetricPairRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn record_name(label: Label, p: usize, nu: usize) -> String {
    if label.fixed().is_some() {
        label.name().to_string()
    } else {
        format!("{} p={p} nu={nu}", label.name())
    }
}

fn duplicate_of(label: Label, p: usize, nu: usize) -> Option<String> {
    match label {
        Label::AIII if nu > p + 1 - nu => Some(record_name(label, p, p + 1 - nu)),
        Label::CII if nu > p - nu => Some(record_name(label, p, p - nu)),
        Label::DI if nu >= 2 && nu > p - nu => Some(record_name(label, p, p - nu)),
        Label::DIII if p == 4 => Some(record_name(Label::DI, 4, 1)),
        Label::BI if p == 2 && nu == 1 => Some(record_name(Label::CI, 2, 2)),
        _ => None,
    }
}

fn highest_noncompact(rs: &RootSystem, nu: usize) -> Option<Root> {
    let nc: Vec<&Root> = rs.positive_roots().iter().filter(|r| r.coords()[nu - 1] % 2 != 0).collect();
    let best = nc.iter().max_by(|a, b| a.coords().cmp(b.coords()))?;
    if nc.iter().all(|r| best.dominates(r)) {
        Some((*best).clone())
    } else {
        None
    }
}

/// Every catalog record with p ≤ max_rank. Panics if a tabulated μ or λ
/// disagrees with the recomputed value.
pub fn catalog(max_rank: usize) -> Vec<SymmetricPairRecord> {
    try_catalog(max_rank).unwrap_or_else(|e| panic!("catalog table mismatch: {e}"))
}

pub fn try_catalog(max_rank: usize) -> Result<Vec<SymmetricPairRecord>> {
    let mut out = Vec::new();
    for label in Label::ALL {
        for (p, nu) in label.parameters(max_rank) {
            out.push(SymmetricPairRecord::new(label, p, nu)?);
        }
    }
    Ok(out)
}

/// Positive roots with odd m_ν: the weights of the isotropy representation.
pub fn noncompact_positive_roots(rec: &SymmetricPairRecord) -> Vec<Root> {
    rec.rs.positive_roots().iter().filter(|r| !rec.is_compact(r)).cloned().collect()
}

pub fn compact_positive_roots(rec: &SymmetricPairRecord) -> Vec<Root> {
    rec.rs.positive_roots().iter().filter(|r| rec.is_compact(r)).cloned().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub dim_p: usize,
    /// Rank of g.
    pub rank_g: usize,
    /// Rank of the symmetric space G/K.
    pub rank: usize,
    pub n: usize,
    pub codim: usize,
}

pub fn dims(rec: &SymmetricPairRecord) -> Dims {
    let dim_p = 2 * noncompact_positive_roots(rec).len();
    assert!(dim_p.is_multiple_of(2));
    let rank = family_rank(rec.label, rec.p, rec.nu);
    Dims { dim_p, rank_g: rec.p, rank, n: dim_p / 2 - 1, codim: rank - 1 }
}

/// Largest set of mutually strongly orthogonal noncompact positive roots.
pub fn strongly_orthogonal_rank(rec: &SymmetricPairRecord) -> usize {
    let rs = &rec.rs;
    let nc = noncompact_positive_roots(rec);
    assert!(nc.len() <= 128, "too many noncompact roots for bitset search");
    let n = nc.len();
    let mut adj = vec![0u128; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = nc[i].coords();
            let b = nc[j].coords();
            let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if rs.inner(a, b).is_zero() && !rs.is_root(&sum) && !rs.is_root(&diff) {
                adj[i] |= 1u128 << j;
            }
        }
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = 0;
    clique(&adj, 0, all, rec.p, &mut best);
    best
}

fn clique(adj: &[u128], size: usize, cand: u128, cap: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if *best >= cap || size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= !(1u128 << v);
        clique(adj, size + 1, rest & adj[v], cap, best);
        if *best >= cap {
            return;
        }
    }
}

/// Extended Dynkin diagram of g with painted noncompact nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDiagram {
    vectors: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    painted: Vec<usize>,
}

impl ExtendedDiagram {
    pub fn node_count(&self) -> usize {
        self.vectors.len()
    }

    /// Simple-root coordinates of node i (node 0 is −μ).
    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    /// a_ij = 2⟨v_i, v_j⟩/⟨v_j, v_j⟩.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    /// Bonded node pairs i < j with their Cartan integers (a_ij, a_ji).
    pub fn edges(&self) -> Vec<((usize, usize), (i64, i64))> {
        let n = self.node_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.cartan[i][j] != 0 || self.cartan[j][i] != 0 {
                    out.push(((i, j), (self.cartan[i][j], self.cartan[j][i])));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> ColoredGraph {
        let n = self.node_count();
        let colors = (0..n).map(|i| u32::from(self.painted.contains(&i))).collect();
        let labels = (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { self.cartan[i][j] }).collect()).collect();
        ColoredGraph { colors, labels }
    }

    /// The diagram with node 0 removed and painting forgotten.
    pub fn without_affine_node(&self) -> ColoredGraph {
        let n = self.node_count();
        let colors = vec![0; n - 1];
        let labels = (1..n).map(|i| (1..n).map(|j| if i == j { 0 } else { self.cartan[i][j] }).collect()).collect();
        ColoredGraph { colors, labels }
    }
}

pub fn build_extended_vogan(rec: &SymmetricPairRecord) -> ExtendedDiagram {
    let p = rec.p;
    let mut vectors = vec![rec.mu.neg().coords().to_vec()];
    for i in 0..p {
        vectors.push(rec.rs.simple_root(i).coords().to_vec());
    }
    let cartan =
        (0..=p).map(|i| (0..=p).map(|j| pairing_coords(&rec.rs, &vectors[i], &vectors[j])).collect()).collect();
    let painted = if rec.hermitian { vec![0, rec.nu] } else { vec![rec.nu] };
    ExtendedDiagram { vectors, cartan, painted }
}

/// Dynkin diagram of g as a coloured graph.
pub fn dynkin_graph(rs: &RootSystem) -> ColoredGraph {
    let a = rs.cartan_matrix();
    let n = a.len();
    let labels = (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { a[i][j] }).collect()).collect();
    ColoredGraph { colors: vec![0; n], labels }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_labels() {
        assert_eq!("E II".parse::<Label>().unwrap(), Label::EII);
        assert_eq!("eviii".parse::<Label>().unwrap(), Label::EVIII);
        assert_eq!(" D  III ".parse::<Label>().unwrap(), Label::DIII);
        assert!("E X".parse::<Label>().is_err());
    }

    #[test]
    fn g_is_in_rank_two_catalog() {
        let cat = catalog(2);
        let g = cat.iter().find(|r| r.label == Label::G).unwrap();
        assert_eq!(g.nu, 2);
        assert_eq!(g.lambda_nc.coords(), &[3, 1]);
    }

    #[test]
    fn illegal_parameters_rejected() {
        assert!(SymmetricPairRecord::new(Label::AIII, 3, 1).is_err());
        assert!(SymmetricPairRecord::new(Label::DI, 4, 3).is_err());
        assert!(SymmetricPairRecord::new(Label::EII, 6, 1).is_err());
        assert!(SymmetricPairRecord::new(Label::CII, 3, 1).is_err());
    }

    #[test]
    fn duplicates_marked() {
        let r = SymmetricPairRecord::new(Label::AIII, 5, 4).unwrap();
        assert_eq!(r.duplicate_of.as_deref(), Some("A III p=5 nu=2"));
        let d = SymmetricPairRecord::new(Label::DIII, 4, 4).unwrap();
        assert_eq!(d.duplicate_of.as_deref(), Some("D I p=4 nu=1"));
        assert!(SymmetricPairRecord::new(Label::DI, 6, 3).unwrap().duplicate_of.is_none());
    }
}
