//! FKM Clifford families: module dimensions, weight systems of the leaf-preserving
//! group, admissible complex structures by search, the Out± generators and the
//! lowest weight diagram.
//!
//! Torus coordinates are ordered `(x^s_1..x^s_p | block coordinates)`. Internally
//! torus points are carried doubled (`X = 2x`) and weights doubled (`W = 2w`) so
//! that everything is an integer; then `w(x) = W·X / 4`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{automorphisms, ColoredGraph};
use crate::error::{Error, Result};
use crate::group::{close_group, orbits, IntMatrix};
use crate::rootsys::{format_combination, Basis, TorusPoint};
use crate::search::{Constraint, GridSearch};

/// Default half-integer search bound for J∩C̄.
pub const DEFAULT_BOUND: i64 = 2;

const GROUP_CAP: usize = 4096;

/// Real dimension δ(m) of an irreducible Cl*_{m+1}-module.
pub fn delta(m: usize) -> Option<u64> {
    const BASE: [u64; 8] = [1, 2, 4, 8, 8, 16, 16, 16];
    let mut d = BASE[m % 8];
    for _ in 0..m / 8 {
        d = d.checked_mul(16)?;
    }
    Some(d)
}

/// Multiplicity data of the representation space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Split {
    /// `V = d^k`, used when m ≢ 0 mod 4.
    K(usize),
    /// `V = d₊^{k₊} ⊕ d₋^{k₋}`, used when m ≡ 0 mod 4.
    PlusMinus { plus: usize, minus: usize },
}

impl Split {
    pub fn k(&self) -> usize {
        match *self {
            Split::K(k) => k,
            Split::PlusMinus { plus, minus } => plus + minus,
        }
    }

    /// The congruent split with k₊ and k₋ exchanged, normalised so k₊ ≥ k₋.
    pub fn normalized(&self) -> Split {
        match *self {
            Split::PlusMinus { plus, minus } if minus > plus => Split::PlusMinus { plus: minus, minus: plus },
            s => s,
        }
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Split::K(k) => write!(f, "k={k}"),
            Split::PlusMinus { plus, minus } => write!(f, "k+={plus} k-={minus}"),
        }
    }
}

/// Residue class of m mod 8 as it governs the case split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseClass {
    M0,
    M17,
    M26,
    M35,
    M4,
}

impl CaseClass {
    pub fn of(m: usize) -> Self {
        match m % 8 {
            0 => CaseClass::M0,
            1 | 7 => CaseClass::M17,
            2 | 6 => CaseClass::M26,
            3 | 5 => CaseClass::M35,
            _ => CaseClass::M4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseClass::M0 => "m=0 mod 8",
            CaseClass::M17 => "m=1,7 mod 8",
            CaseClass::M26 => "m=2,6 mod 8",
            CaseClass::M35 => "m=3,5 mod 8",
            CaseClass::M4 => "m=4 mod 8",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    Orthogonal,
    Unitary,
    Symplectic,
}

/// One simple factor of h together with its torus coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HBlock {
    pub kind: BlockKind,
    /// k, k₊ or k₋.
    pub size: usize,
    /// Rank of the factor.
    pub rank: usize,
    /// Index of the first coordinate of this block in the full torus vector.
    pub offset: usize,
    /// "", "+" or "-".
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FkmFamily {
    pub m: usize,
    pub split: Split,
    pub delta: u64,
    pub dim_v: u64,
    pub n: u64,
    pub mult: (i64, i64),
    /// Rank of so(m+1).
    pub p: usize,
    pub blocks: Vec<HBlock>,
    /// Whether m₁ ≤ m₂.
    pub in_scope: bool,
    /// Group acting on V, e.g. `Pin(4)·Sp(2) on d⊗H^2`.
    pub descriptor: String,
    /// k₋ = 0 (or k₊ = 0): legal input, treated as an even block of size zero.
    pub empty_block: bool,
}

/// Builds the family and its derived data.
pub fn clifford_family(m: usize, split: Split) -> Result<FkmFamily> {
    if m == 0 {
        return Err(Error::IllegalParameters { label: "FKM".into(), reason: "m must be positive".into() });
    }
    let class = CaseClass::of(m);
    let four = m.is_multiple_of(4);
    match (four, split) {
        (true, Split::K(_)) => {
            return Err(Error::SplitShape(format!("m={m} needs a split (k+, k-)")));
        }
        (false, Split::PlusMinus { .. }) => {
            return Err(Error::SplitShape(format!("m={m} takes a single k")));
        }
        _ => {}
    }
    let k = split.k();
    if k == 0 {
        return Err(Error::SplitShape("k must be positive".into()));
    }
    let overflow = || Error::IllegalParameters { label: "FKM".into(), reason: format!("m={m}, {split} overflows") };
    let delta = delta(m).ok_or_else(overflow)?;
    let dim_v = delta.checked_mul(k as u64).ok_or_else(overflow)?;
    let n = dim_v / 2 - 1;
    let m2 = i64::try_from(n).map_err(|_| overflow())? - m as i64;
    if m2 <= 0 {
        return Err(Error::NotFkm { m2 });
    }
    let p = m.div_ceil(2);
    let mut blocks = Vec::new();
    let mut offset = p;
    let mut push = |kind: BlockKind, size: usize, tag: &str| {
        let rank = match kind {
            BlockKind::Orthogonal => size / 2,
            _ => size,
        };
        blocks.push(HBlock { kind, size, rank, offset, tag: tag.to_string() });
        offset += rank;
    };
    match split {
        Split::K(k) => {
            let kind = match class {
                CaseClass::M17 => BlockKind::Orthogonal,
                CaseClass::M26 => BlockKind::Unitary,
                _ => BlockKind::Symplectic,
            };
            push(kind, k, "");
        }
        Split::PlusMinus { plus, minus } => {
            let kind = if class == CaseClass::M0 { BlockKind::Orthogonal } else { BlockKind::Symplectic };
            push(kind, plus, "+");
            push(kind, minus, "-");
        }
    }
    let descriptor = descriptor(m, split);
    let empty_block = matches!(split, Split::PlusMinus { plus, minus } if plus == 0 || minus == 0);
    Ok(FkmFamily {
        m,
        split,
        delta,
        dim_v,
        n,
        mult: (m as i64, m2),
        p,
        blocks,
        in_scope: (m as i64) <= m2,
        descriptor,
        empty_block,
    })
}

fn descriptor(m: usize, split: Split) -> String {
    let g = if m % 2 == 1 { "Pin" } else { "Spin" };
    let m1 = m + 1;
    match (CaseClass::of(m), split) {
        (CaseClass::M17, Split::K(k)) => format!("{g}({m1})·O({k}) on d⊗R^{k}"),
        (CaseClass::M35, Split::K(k)) => format!("{g}({m1})·Sp({k}) on d⊗H^{k}"),
        (CaseClass::M26, Split::K(k)) => format!("{g}({m1})·U({k}) on d⊗C^{k}"),
        (CaseClass::M0, Split::PlusMinus { plus, minus }) => {
            format!("{g}({m1})·(O({plus})×O({minus})) on (d+⊗R^{plus})⊕(d-⊗R^{minus})")
        }
        (_, Split::PlusMinus { plus, minus }) => {
            format!("{g}({m1})·(Sp({plus})×Sp({minus})) on (d+⊗H^{plus})⊕(d-⊗H^{minus})")
        }
        (_, Split::K(k)) => format!("{g}({m1}) on d^{k}"),
    }
}

impl FkmFamily {
    pub fn class(&self) -> CaseClass {
        CaseClass::of(self.m)
    }

    /// Rank of h.
    pub fn q(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    /// Torus dimension p + q.
    pub fn dim(&self) -> usize {
        self.p + self.q()
    }

    pub fn require_scope(&self) -> Result<()> {
        if self.in_scope {
            Ok(())
        } else {
            Err(Error::OutOfScope { m1: self.mult.0, m2: self.mult.1 })
        }
    }

    /// Coordinate names `es1..esp` followed by the block coordinates.
    pub fn coordinate_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.p).map(|i| format!("es{i}")).collect();
        for b in &self.blocks {
            names.extend((1..=b.rank).map(|j| format!("e{}{j}", b.tag)));
        }
        names
    }

    pub fn name(&self) -> String {
        format!("FKM m={} {}", self.m, self.split)
    }

    fn s_is_d_type(&self) -> bool {
        self.m % 2 == 1
    }
}

impl fmt::Display for FkmFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn spin_vectors(p: usize) -> Vec<Vec<i64>> {
    (0..1u32 << p).map(|mask| (0..p).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()).collect()
}

/// Doubled weights `2w`, sorted and deduplicated.
pub fn doubled_weights(f: &FkmFamily) -> Vec<Vec<i64>> {
    let d = f.dim();
    let mut out = BTreeSet::new();
    for s in spin_vectors(f.p) {
        let mut base = s.clone();
        base.resize(d, 0);
        for b in &f.blocks {
            if b.size == 0 {
                continue;
            }
            for j in 0..b.rank {
                for sign in [-2, 2] {
                    let mut w = base.clone();
                    w[b.offset + j] = sign;
                    out.insert(w);
                }
            }
            if b.kind == BlockKind::Orthogonal && b.size % 2 == 1 {
                out.insert(base.clone());
            }
        }
    }
    out.into_iter().collect()
}

/// The weights of the complexified representation on V, in ε-dual coordinates.
pub fn weight_system(f: &FkmFamily) -> Result<Vec<Vec<Rational64>>> {
    f.require_scope()?;
    Ok(doubled_weights(f).iter().map(|w| w.iter().map(|&c| Rational64::new(c, 2)).collect()).collect())
}

/// Simple roots of so(m+1) ⊕ h, undoubled, with display names.
pub fn simple_roots(f: &FkmFamily) -> Vec<(String, Vec<i64>)> {
    let d = f.dim();
    let e = |i: usize, c: i64| {
        let mut v = vec![0; d];
        v[i] = c;
        v
    };
    let add = |mut a: Vec<i64>, b: Vec<i64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    let mut out = Vec::new();
    let p = f.p;
    for i in 0..p.saturating_sub(1) {
        out.push((format!("as{}", i + 1), add(e(i, 1), e(i + 1, -1))));
    }
    if f.s_is_d_type() {
        if p >= 2 {
            out.push((format!("as{p}"), add(e(p - 2, 1), e(p - 1, 1))));
        }
    } else {
        out.push((format!("as{p}"), e(p - 1, 1)));
    }
    for b in &f.blocks {
        let o = b.offset;
        let r = b.rank;
        let name = |j: usize| format!("a{}{}", b.tag, j);
        for j in 0..r.saturating_sub(1) {
            out.push((name(j + 1), add(e(o + j, 1), e(o + j + 1, -1))));
        }
        match b.kind {
            BlockKind::Orthogonal if b.size % 2 == 1 && r >= 1 => out.push((name(r), e(o + r - 1, 1))),
            BlockKind::Orthogonal if b.size % 2 == 0 && r >= 2 => {
                out.push((name(r), add(e(o + r - 2, 1), e(o + r - 1, 1))))
            }
            BlockKind::Symplectic if r >= 1 => out.push((name(r), e(o + r - 1, 2))),
            _ => {}
        }
    }
    out
}

/// Doubled lowest weights, with multiplicity, and display names.
pub fn lowest_weights(f: &FkmFamily) -> Vec<(String, Vec<i64>)> {
    let d = f.dim();
    let p = f.p;
    let s_parts: Vec<(String, Vec<i64>)> = if f.s_is_d_type() {
        let mut a = vec![-1; p];
        let mut b = vec![-1; p];
        b[p - 1] = 1;
        a.resize(d, 0);
        b.resize(d, 0);
        vec![("s+".to_string(), a), ("s-".to_string(), b)]
    } else {
        let mut a = vec![-1; p];
        a.resize(d, 0);
        vec![("s".to_string(), a)]
    };
    let mut out = Vec::new();
    for b in &f.blocks {
        if b.size == 0 {
            continue;
        }
        let o = b.offset;
        let consts: Vec<(String, usize, i64)> = match b.kind {
            BlockKind::Unitary => vec![(format!("+w{}", b.rank), o + b.rank - 1, 2), ("-w1".to_string(), o, -2)],
            BlockKind::Symplectic => vec![(format!("-w{}1", b.tag), o, -2)],
            BlockKind::Orthogonal => match b.size {
                1 => vec![("0".to_string(), usize::MAX, 0)],
                2 => vec![(format!("-w{}1", b.tag), o, -2), (format!("+w{}1", b.tag), o, 2)],
                _ => vec![(format!("-w{}1", b.tag), o, -2)],
            },
        };
        for (sname, s) in &s_parts {
            for (cname, idx, c) in &consts {
                let mut v = s.clone();
                if *idx != usize::MAX {
                    v[*idx] += c;
                }
                out.push((format!("{sname}{cname}"), v));
            }
        }
    }
    out
}

/// J∩C̄ with the default half-integer bound.
pub fn admissible_points_fkm(f: &FkmFamily) -> Result<Vec<TorusPoint>> {
    admissible_points_fkm_bounded(f, DEFAULT_BOUND)
}

/// J∩C̄ by depth-first search over coordinates in `{-bound, .., bound}` in steps
/// of one half: each simple root nonnegative, each weight in {±1}.
pub fn admissible_points_fkm_bounded(f: &FkmFamily, bound: i64) -> Result<Vec<TorusPoint>> {
    f.require_scope()?;
    let d = f.dim();
    let mut s = GridSearch::new(d, (-2 * bound..=2 * bound).collect());
    for (_, r) in simple_roots(f) {
        s.push(Constraint::at_least(r, 0));
    }
    let mut seen = BTreeSet::new();
    for w in doubled_weights(f) {
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        if seen.contains(&neg) {
            continue;
        }
        seen.insert(w.clone());
        s.push(Constraint::one_of(w, vec![-4, 4]));
    }
    Ok(s.solve().iter().map(|x| TorusPoint::from_halves(Basis::Epsilon, x)).collect())
}

/// A named linear map on torus coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkmGenerator {
    pub name: String,
    pub matrix: IntMatrix,
}

/// Generators of Out±: σ for odd m, the reversal σ for m ≡ 2,6, φ (φ±) for
/// nonempty even orthogonal blocks, and τ when k₊ = k₋.
pub fn outpm_generators(f: &FkmFamily) -> Result<Vec<FkmGenerator>> {
    f.require_scope()?;
    let d = f.dim();
    let id: Vec<(usize, i64)> = (0..d).map(|i| (i, 1)).collect();
    let mut out = Vec::new();
    if f.m % 2 == 1 {
        let mut img = id.clone();
        img[f.p - 1] = (f.p - 1, -1);
        out.push(FkmGenerator { name: "sigma".into(), matrix: IntMatrix::signed_permutation(&img) });
    }
    for b in &f.blocks {
        match b.kind {
            BlockKind::Unitary => {
                let mut img = id.clone();
                for j in 0..b.rank {
                    img[b.offset + j] = (b.offset + b.rank - 1 - j, -1);
                }
                out.push(FkmGenerator { name: "sigma".into(), matrix: IntMatrix::signed_permutation(&img) });
            }
            BlockKind::Orthogonal if b.size >= 2 && b.size % 2 == 0 => {
                let mut img = id.clone();
                let last = b.offset + b.rank - 1;
                img[last] = (last, -1);
                out.push(FkmGenerator { name: format!("phi{}", b.tag), matrix: IntMatrix::signed_permutation(&img) });
            }
            _ => {}
        }
    }
    if let Split::PlusMinus { plus, minus } = f.split {
        if plus == minus {
            let (a, b) = (&f.blocks[0], &f.blocks[1]);
            let mut img = id.clone();
            for j in 0..a.rank {
                img[a.offset + j] = (b.offset + j, 1);
                img[b.offset + j] = (a.offset + j, 1);
            }
            out.push(FkmGenerator { name: "tau".into(), matrix: IntMatrix::signed_permutation(&img) });
        }
    }
    Ok(out)
}

/// The group generated by `outpm_generators`.
pub fn outpm_group(f: &FkmFamily) -> Result<Vec<IntMatrix>> {
    let gens: Vec<IntMatrix> = outpm_generators(f)?.into_iter().map(|g| g.matrix).collect();
    close_group(&gens, f.dim(), GROUP_CAP)
}

/// Closed-form N for a family with m₁ ≤ m₂. An empty block counts as even.
pub fn closed_form_n(f: &FkmFamily) -> Result<usize> {
    f.require_scope()?;
    Ok(match (f.class(), f.split) {
        (CaseClass::M0, Split::PlusMinus { plus, minus }) => {
            if plus % 2 == 0 && minus % 2 == 0 {
                2
            } else {
                1
            }
        }
        (CaseClass::M17, Split::K(k)) => {
            if k % 2 == 0 {
                2
            } else {
                1
            }
        }
        (CaseClass::M26, Split::K(k)) => 2 + k / 2,
        (CaseClass::M35, _) | (CaseClass::M4, _) => 2,
        _ => unreachable!("split shape validated at construction"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkmClassCount {
    pub n: usize,
    pub points: Vec<TorusPoint>,
    pub orbits: Vec<Vec<usize>>,
    pub group_order: usize,
}

impl FkmClassCount {
    pub fn representatives(&self) -> Vec<TorusPoint> {
        self.orbits.iter().map(|o| self.points[o[0]].clone()).collect()
    }
}

/// Orbits of the Out± group on J∩C̄. Fails if N disagrees with the closed form.
pub fn count_classes_fkm(f: &FkmFamily) -> Result<FkmClassCount> {
    let points = admissible_points_fkm(f)?;
    let group = outpm_group(f)?;
    let coords: Vec<Vec<Rational64>> = points.iter().map(|t| t.coords().to_vec()).collect();
    let orbits = orbits(&group, &coords)?;
    let count = FkmClassCount { n: orbits.len(), points, orbits, group_order: group.len() };
    let expected = closed_form_n(f)?;
    if count.n != expected {
        return Err(Error::Invariant(format!("{f}: orbit count {} but closed form gives {expected}", count.n)));
    }
    Ok(count)
}

/// Formats an FKM torus point as a combination of `es1.., e1..` (or `e+1.., e-1..`).
pub fn format_point(f: &FkmFamily, t: &TorusPoint) -> String {
    format_combination(t.coords(), &f.coordinate_names())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramNode {
    pub name: String,
    /// Doubled coordinates in the ω-basis of t*.
    pub vector: Vec<i64>,
}

/// White nodes are simple roots of k, black nodes lowest weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowestWeightDiagram {
    pub white: Vec<DiagramNode>,
    pub black: Vec<DiagramNode>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// 2⟨a,b⟩/⟨b,b⟩ for vectors in an orthonormal basis.
fn pairing(a: &[i64], b: &[i64]) -> i64 {
    let num = 2 * dot(a, b);
    let den = dot(b, b);
    assert!(num % den == 0, "non-integral pairing");
    num / den
}

impl LowestWeightDiagram {
    pub fn node_count(&self) -> usize {
        self.white.len() + self.black.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &DiagramNode> {
        self.white.iter().chain(self.black.iter())
    }

    /// Label matrix: Cartan integers between white nodes, 2⟨α,λ⟩/⟨α,α⟩ on both
    /// directions of a white–black edge, nothing between black nodes.
    pub fn graph(&self) -> ColoredGraph {
        let w = self.white.len();
        let nodes: Vec<&DiagramNode> = self.nodes().collect();
        let n = nodes.len();
        let mut labels = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                labels[i][j] = match (i < w, j < w) {
                    (true, true) => pairing(&nodes[i].vector, &nodes[j].vector),
                    (true, false) => pairing(&nodes[j].vector, &nodes[i].vector),
                    (false, true) => pairing(&nodes[i].vector, &nodes[j].vector),
                    (false, false) => 0,
                };
            }
        }
        let colors = (0..n).map(|i| u32::from(i >= w)).collect();
        ColoredGraph { colors, labels }
    }

    /// White–black edges with their labels.
    pub fn edges(&self) -> Vec<(String, String, i64)> {
        let mut out = Vec::new();
        for b in &self.black {
            for a in &self.white {
                let l = pairing(&b.vector, &a.vector);
                if l != 0 {
                    out.push((a.name.clone(), b.name.clone(), l));
                }
            }
        }
        out
    }
}

pub fn lowest_weight_diagram(f: &FkmFamily) -> Result<LowestWeightDiagram> {
    f.require_scope()?;
    let white = simple_roots(f)
        .into_iter()
        .map(|(name, v)| DiagramNode { name, vector: v.iter().map(|x| 2 * x).collect() })
        .collect();
    let black = lowest_weights(f).into_iter().map(|(name, vector)| DiagramNode { name, vector }).collect();
    Ok(LowestWeightDiagram { white, black })
}

/// Every permutation of the diagram preserving colours and labels.
pub fn diagram_automorphism_count(f: &FkmFamily) -> Result<usize> {
    Ok(automorphisms(&lowest_weight_diagram(f)?.graph()).len())
}

/// Torus maps induced by diagram automorphisms that extend to a linear map of
/// t* preserving the weight set, as distinct matrices acting on t.
pub fn realizable_automorphisms(f: &FkmFamily) -> Result<Vec<IntMatrix>> {
    let diag = lowest_weight_diagram(f)?;
    let nodes: Vec<Vec<i64>> = diag.nodes().map(|n| n.vector.clone()).collect();
    let weights: BTreeSet<Vec<i64>> = doubled_weights(f).into_iter().collect();
    let mut out = BTreeSet::new();
    for perm in automorphisms(&diag.graph()) {
        let dst: Vec<Vec<i64>> = perm.iter().map(|&j| nodes[j].clone()).collect();
        // φ on t with λ∘φ⁻¹ = image of λ: rows satisfy dst · M = src.
        let m = match solve_right(&dst, &nodes, f.dim())? {
            Some(m) => m,
            None => continue,
        };
        let mt = m.transpose();
        if weights.iter().all(|w| weights.contains(&mt.apply_int(w))) {
            out.insert(m);
        }
    }
    Ok(out.into_iter().collect())
}

/// Solves `a · M = b` for a d×d integer matrix M, where `a` and `b` list row
/// vectors. Returns None if the system is inconsistent or M is not integral;
/// fails if `a` does not have full column rank.
fn solve_right(a: &[Vec<i64>], b: &[Vec<i64>], d: usize) -> Result<Option<IntMatrix>> {
    let r = |x: i64| Rational64::from_integer(x);
    let mut rows: Vec<Vec<Rational64>> =
        a.iter().zip(b).map(|(x, y)| x.iter().chain(y.iter()).map(|&v| r(v)).collect()).collect();
    let mut rank = 0;
    for col in 0..d {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::Invariant("diagram nodes do not span the dual torus".into()));
        };
        rows.swap(rank, piv);
        let inv = Rational64::one() / rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col];
                let pivot_row = rows[rank].clone();
                for (v, pv) in rows[i].iter_mut().zip(pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        rank += 1;
    }
    if rows[rank..].iter().any(|row| row[d..].iter().any(|v| !v.is_zero())) {
        return Ok(None);
    }
    let mut m = Vec::with_capacity(d);
    for row in rows.iter().take(d) {
        let mut out = Vec::with_capacity(d);
        for v in &row[d..] {
            if !v.is_integer() {
                return Ok(None);
            }
            out.push(v.to_integer());
        }
        m.push(out);
    }
    Ok(Some(IntMatrix::from_rows(m)))
}

/// All in-scope families with m ≤ `max_m` and p + q ≤ `max_dim`, including both
/// orders of each split.
pub fn families(max_m: usize, max_dim: usize) -> Vec<FkmFamily> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let p = m.div_ceil(2);
        if p > max_dim {
            continue;
        }
        let splits: Vec<Split> = if m % 4 == 0 {
            let mut v = Vec::new();
            for plus in 0..=4 * max_dim {
                for minus in 0..=4 * max_dim {
                    v.push(Split::PlusMinus { plus, minus });
                }
            }
            v
        } else {
            (1..=4 * max_dim + 1).map(Split::K).collect()
        };
        for s in splits {
            if let Ok(f) = clifford_family(m, s) {
                if f.in_scope && f.dim() <= max_dim {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// Pairs (m₁, m₂) and the classes (m, split) that realise them.
pub type ExceptionalSweep = (BTreeSet<(i64, i64)>, Vec<(usize, Split)>);

/// Multiplicity pairs with m₁ > m₂ among families with m ≤ `max_m` and k ≤ `max_k`,
/// together with the congruence classes realising them (splits taken up to
/// exchanging k₊ and k₋).
pub fn exceptional_multiplicities(max_m: usize, max_k: usize) -> ExceptionalSweep {
    let mut pairs = BTreeSet::new();
    let mut classes = BTreeSet::new();
    for m in 1..=max_m {
        let splits: Vec<Split> = if m % 4 == 0 {
            (0..=max_k).flat_map(|plus| (0..=max_k - plus).map(move |minus| Split::PlusMinus { plus, minus })).collect()
        } else {
            (1..=max_k).map(Split::K).collect()
        };
        for s in splits {
            if let Ok(f) = clifford_family(m, s) {
                if !f.in_scope {
                    pairs.insert(f.mult);
                    classes.insert((m, s.normalized()));
                }
            }
        }
    }
    (pairs, classes.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_table() {
        let d: Vec<u64> = (1..=8).map(|m| delta(m).unwrap()).collect();
        assert_eq!(d, vec![2, 4, 8, 8, 16, 16, 16, 16]);
        assert_eq!(delta(9), Some(32));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(clifford_family(4, Split::K(3)), Err(Error::SplitShape(_))));
        assert!(matches!(clifford_family(3, Split::PlusMinus { plus: 1, minus: 1 }), Err(Error::SplitShape(_))));
        assert!(matches!(clifford_family(1, Split::K(2)), Err(Error::NotFkm { m2: 0 })));
        assert!(matches!(clifford_family(4, Split::PlusMinus { plus: 0, minus: 0 }), Err(Error::SplitShape(_))));
    }

    #[test]
    fn solve_right_identity() {
        let a = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let m = solve_right(&a, &a, 2).unwrap().unwrap();
        assert!(m.is_identity());
        let b = vec![vec![1, 0], vec![0, 1], vec![1, 2]];
        assert!(solve_right(&a, &b, 2).unwrap().is_none());
    }
}
