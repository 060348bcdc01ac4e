//! Finite reduced root systems of types A through G in simple-root coordinates.
//!
//! Numbering is Bourbaki's except for F₄, whose short simple roots come first
//! (α₁, α₂ short, α₃, α₄ long), so that the highest root reads (2,4,3,2).

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let legal = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if legal {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::IllegalCartanType { series: series.letter(), rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the classical closed forms.
    pub fn positive_root_count(&self) -> usize {
        let p = self.rank;
        match self.series {
            Series::A => p * (p + 1) / 2,
            Series::B | Series::C => p * p,
            Series::D => p * (p - 1),
            Series::E => match p {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// A root written as Σ m_j α_j over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        let nonneg = coords.iter().all(|&c| c >= 0);
        let nonpos = coords.iter().all(|&c| c <= 0);
        if coords.iter().all(|&c| c == 0) || !(nonneg || nonpos) {
            return Err(Error::NotARoot(coords));
        }
        Ok(Root { coords })
    }

    pub(crate) fn from_raw(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Coefficientwise domination: every m_j of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Root) -> bool {
        self.coords.len() == other.coords.len() && self.coords.iter().zip(&other.coords).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Dual basis h_1..h_p of the torus, α_i(h_j) = δ_ij.
    DualH,
    /// Orthonormal ε-basis used for FKM families.
    Epsilon,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::DualH => write!(f, "h"),
            Basis::Epsilon => write!(f, "e"),
        }
    }
}

/// An element of the torus algebra with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    basis: Basis,
    coords: Vec<Rational64>,
}

impl TorusPoint {
    pub fn new(basis: Basis, coords: Vec<Rational64>) -> Result<Self> {
        for c in &coords {
            let d = *c.denom();
            if d != 1 && d != 2 {
                return Err(Error::BadDenominator(c.to_string()));
            }
        }
        Ok(TorusPoint { basis, coords })
    }

    pub fn from_ints(basis: Basis, coords: &[i64]) -> Self {
        TorusPoint { basis, coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect() }
    }

    /// Coordinates given in halves: `halves[i] / 2`.
    pub fn from_halves(basis: Basis, halves: &[i64]) -> Self {
        TorusPoint { basis, coords: halves.iter().map(|&c| Rational64::new(c, 2)).collect() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn neg(&self) -> TorusPoint {
        TorusPoint { basis: self.basis, coords: self.coords.iter().map(|c| -c).collect() }
    }

    /// Writes the point as a signed combination such as `-h2+2h1`.
    pub fn combination(&self, names: &[String]) -> String {
        format_combination(&self.coords, names)
    }

    /// Combination in the dual basis, `h1 .. hp`.
    pub fn h_combination(&self) -> String {
        let names: Vec<String> = (1..=self.coords.len()).map(|i| format!("h{i}")).collect();
        format_combination(&self.coords, &names)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn format_combination(coords: &[Rational64], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let a = c.abs();
        let coef = if a.is_one() { String::new() } else { a.to_string() };
        out.push_str(&format!("{sign}{coef}{name}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    simple_gram: Vec<Vec<Rational64>>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    index: HashMap<Vec<i64>, usize>,
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn chain_gram(p: usize) -> Vec<Vec<Rational64>> {
    let mut g = vec![vec![Rational64::zero(); p]; p];
    for i in 0..p {
        g[i][i] = q(2, 1);
        if i + 1 < p {
            g[i][i + 1] = q(-1, 1);
            g[i + 1][i] = q(-1, 1);
        }
    }
    g
}

fn set_sym(g: &mut [Vec<Rational64>], i: usize, j: usize, v: Rational64) {
    g[i][j] = v;
    g[j][i] = v;
}

/// Gram matrix ⟨α_i, α_j⟩ normalised so that long roots have squared length 2.
fn simple_gram(ct: CartanType) -> Vec<Vec<Rational64>> {
    let p = ct.rank;
    match ct.series {
        Series::A => chain_gram(p),
        Series::B => {
            let mut g = chain_gram(p);
            g[p - 1][p - 1] = q(1, 1);
            g
        }
        Series::C => {
            let mut g = vec![vec![Rational64::zero(); p]; p];
            for i in 0..p - 1 {
                g[i][i] = q(1, 1);
                if i + 2 < p {
                    set_sym(&mut g, i, i + 1, q(-1, 2));
                }
            }
            g[p - 1][p - 1] = q(2, 1);
            set_sym(&mut g, p - 2, p - 1, q(-1, 1));
            g
        }
        Series::D => {
            let mut g = chain_gram(p);
            set_sym(&mut g, p - 2, p - 1, Rational64::zero());
            set_sym(&mut g, p - 3, p - 1, q(-1, 1));
            g
        }
        Series::E => {
            let mut g = vec![vec![Rational64::zero(); p]; p];
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = q(2, 1);
            }
            // 1-3-4-5-...-p with 2 attached to 4 (1-based).
            set_sym(&mut g, 0, 2, q(-1, 1));
            set_sym(&mut g, 1, 3, q(-1, 1));
            for i in 2..p - 1 {
                set_sym(&mut g, i, i + 1, q(-1, 1));
            }
            g
        }
        Series::F => {
            let mut g = vec![vec![Rational64::zero(); 4]; 4];
            g[0][0] = q(1, 1);
            g[1][1] = q(1, 1);
            g[2][2] = q(2, 1);
            g[3][3] = q(2, 1);
            set_sym(&mut g, 0, 1, q(-1, 2));
            set_sym(&mut g, 1, 2, q(-1, 1));
            set_sym(&mut g, 2, 3, q(-1, 1));
            g
        }
        Series::G => {
            let mut g = vec![vec![Rational64::zero(); 2]; 2];
            g[0][0] = q(2, 3);
            g[1][1] = q(2, 1);
            set_sym(&mut g, 0, 1, q(-1, 1));
            g
        }
    }
}

fn bilinear(gram: &[Vec<Rational64>], a: &[i64], b: &[i64]) -> Rational64 {
    let mut acc = Rational64::zero();
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                acc += gram[i][j] * Rational64::from_integer(ai * bj);
            }
        }
    }
    acc
}

fn to_integer(r: Rational64) -> Option<i64> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// Builds the positive roots of `ct` by root-string closure from the simple roots.
pub fn build_root_system(ct: CartanType) -> RootSystem {
    let p = ct.rank;
    let gram = simple_gram(ct);
    let cartan: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            (0..p).map(|j| to_integer(q(2, 1) * gram[i][j] / gram[j][j]).expect("integral Cartan entry")).collect()
        })
        .collect();

    let mut found: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..p)
        .map(|i| {
            let mut v = vec![0; p];
            v[i] = 1;
            v
        })
        .collect();
    for v in &level {
        found.insert(v.clone(), ());
    }
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for j in 0..p {
                let mut r = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if found.contains_key(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..p).map(|i| beta[i] * cartan[i][j]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if !found.contains_key(&up) {
                        found.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    let positive_roots: Vec<Root> = all.into_iter().map(Root::from_raw).collect();
    let highest_root = positive_roots.last().expect("nonempty root system").clone();
    let index = positive_roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
    RootSystem { cartan_type: ct, simple_gram: gram, positive_roots, highest_root, index }
}

impl RootSystem {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn simple_gram(&self) -> &[Vec<Rational64>] {
        &self.simple_gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root::from_raw(v)
    }

    /// ⟨a, b⟩ for arbitrary integer combinations of simple roots.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational64 {
        bilinear(&self.simple_gram, a, b)
    }

    /// Whether `coords` is a root (positive or negative).
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// All roots, positive first, then their negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(Root::neg));
        v
    }

    /// Cartan matrix a_ij = 2⟨α_i,α_j⟩/⟨α_j,α_j⟩.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let p = self.rank();
        (0..p)
            .map(|i| (0..p).map(|j| cartan_pairing(self, &self.simple_root(i), &self.simple_root(j))).collect())
            .collect()
    }
}

/// 2⟨a,b⟩/⟨b,b⟩; integral whenever both arguments are roots.
pub fn cartan_pairing(rs: &RootSystem, a: &Root, b: &Root) -> i64 {
    pairing_coords(rs, a.coords(), b.coords())
}

pub(crate) fn pairing_coords(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    let num = rs.inner(a, b) * q(2, 1);
    let den = rs.inner(b, b);
    assert!(!den.is_zero(), "pairing against a zero vector");
    to_integer(num / den).expect("Cartan pairing of roots is integral")
}

/// Σ m_j x_j for `root` = Σ m_j α_j and `t` = Σ x_j h_j.
pub fn eval_root(root: &Root, t: &TorusPoint) -> Result<Rational64> {
    if t.basis() != Basis::DualH {
        return Err(Error::WrongBasis { expected: Basis::DualH.to_string(), got: t.basis().to_string() });
    }
    if t.dim() != root.rank() {
        return Err(Error::DimensionMismatch { expected: root.rank(), got: t.dim() });
    }
    Ok(root
        .coords()
        .iter()
        .zip(t.coords())
        .fold(Rational64::zero(), |acc, (&m, x)| acc + Rational64::from_integer(m) * x))
}
