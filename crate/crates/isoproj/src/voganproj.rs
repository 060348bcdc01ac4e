//! Admissible complex structures for symmetric pairs and their congruence
//! classes under automorphisms of the extended Vogan diagram.

use std::collections::BTreeSet;

use num_rational::Rational64;

use crate::diagram::automorphisms;
use crate::error::{Error, Result};
use crate::group::{close_group, orbits, permutes, IntMatrix};
use crate::rootsys::{Basis, TorusPoint};
use crate::search::{Constraint, GridSearch};
use crate::symcat::{build_extended_vogan, noncompact_positive_roots, ExtendedDiagram, SymmetricPairRecord};

/// Closure cap for the induced group; the largest group in the catalog has order 24.
const GROUP_CAP: usize = 1024;

/// A permutation of the nodes `0..=p` of an extended Vogan diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(nodes: usize) -> Self {
        DiagramAutomorphism { perm: (0..nodes).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle notation over nonfixed nodes, e.g. `(1 6)(3 5)`.
    pub fn cycles(&self) -> String {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.perm[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            let parts: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("({})", parts.join(" ")));
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

/// Which branch of the induced-map formula applies, by the image of node 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedCase {
    /// σ(0) = 0.
    FixesAffine,
    /// σ(0) = ν.
    ToPainted,
    /// σ(0) = k with k ∉ {0, ν}.
    ToCompact(usize),
}

/// Linear map on the torus in the dual basis; column i holds the image of h_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedTorusMap {
    pub matrix: IntMatrix,
    pub case: InducedCase,
}

impl InducedTorusMap {
    pub fn apply(&self, t: &TorusPoint) -> TorusPoint {
        TorusPoint::new(Basis::DualH, self.matrix.apply(t.coords())).expect("integral map keeps denominators")
    }
}

fn sorted_points(mut pts: Vec<TorusPoint>) -> Vec<TorusPoint> {
    pts.sort();
    pts.dedup();
    pts
}

fn unit(p: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; p];
    v[i - 1] = c;
    v
}

/// J∩C̄ from the closed form. Points are sorted by coordinates.
pub fn admissible_points(rec: &SymmetricPairRecord) -> Vec<TorusPoint> {
    let (p, nu) = (rec.p, rec.nu);
    let mut pts = vec![TorusPoint::from_ints(Basis::DualH, &unit(p, nu, -1))];
    if rec.hermitian {
        pts.push(TorusPoint::from_ints(Basis::DualH, &unit(p, nu, 1)));
    }
    for i in (1..=p).filter(|&i| i != nu) {
        if rec.y(i) == 1 && (rec.hermitian || rec.z(i) == 1) {
            let mut v = unit(p, nu, -1);
            v[i - 1] = 2;
            pts.push(TorusPoint::from_ints(Basis::DualH, &v));
        }
    }
    sorted_points(pts)
}

/// J∩C̄ by exhaustive search over integer coordinates in `[-bound, bound]`:
/// every noncompact positive root takes the value ±1 and every simple root
/// of k is nonnegative.
pub fn admissible_points_oracle(rec: &SymmetricPairRecord, bound: i64) -> Vec<TorusPoint> {
    let p = rec.p;
    let mut s = GridSearch::new(p, (-bound..=bound).collect());
    for i in (1..=p).filter(|&i| i != rec.nu) {
        s.push(Constraint::at_least(unit(p, i, 1), 0));
    }
    if !rec.hermitian {
        s.push(Constraint::at_least(rec.mu.neg().coords().to_vec(), 0));
    }
    for a in noncompact_positive_roots(rec) {
        s.push(Constraint::one_of(a.coords().to_vec(), vec![-1, 1]));
    }
    sorted_points(s.solve().iter().map(|v| TorusPoint::from_ints(Basis::DualH, v)).collect())
}

/// Node permutations preserving the Cartan integers and the painted set,
/// sorted with the identity first.
pub fn diagram_automorphisms(d: &ExtendedDiagram) -> Vec<DiagramAutomorphism> {
    automorphisms(&d.graph()).into_iter().map(|perm| DiagramAutomorphism { perm }).collect()
}

/// The torus map induced by a diagram automorphism σ:
/// φ(h_i) = h_{σ(i)} − y_i h_{σ(0)}, reading h_0 as 0.
pub fn induced_map(rec: &SymmetricPairRecord, a: &DiagramAutomorphism) -> Result<InducedTorusMap> {
    let p = rec.p;
    let sigma = &a.perm;
    if sigma.len() != p + 1 {
        return Err(Error::DimensionMismatch { expected: p + 1, got: sigma.len() });
    }
    let k = sigma[0];
    let case = if k == 0 {
        InducedCase::FixesAffine
    } else if k == rec.nu {
        if !rec.hermitian {
            return Err(Error::Invariant(format!("{rec}: automorphism moves the affine node onto the painted node")));
        }
        InducedCase::ToPainted
    } else {
        InducedCase::ToCompact(k)
    };
    let mut rows = vec![vec![0i64; p]; p];
    for i in 1..=p {
        if sigma[i] != 0 {
            rows[sigma[i] - 1][i - 1] += 1;
        }
        if k != 0 {
            rows[k - 1][i - 1] -= rec.y(i);
        }
    }
    Ok(InducedTorusMap { matrix: IntMatrix::from_rows(rows), case })
}

/// Outcome of the orbit computation for one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub n: usize,
    pub points: Vec<TorusPoint>,
    /// Indices into `points`; each orbit sorted, orbits ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    pub group_order: usize,
}

impl ClassCount {
    /// Lexicographically least point of each orbit.
    pub fn representatives(&self) -> Vec<TorusPoint> {
        self.orbits.iter().map(|o| self.points[o[0]].clone()).collect()
    }
}

/// Induced maps of every diagram automorphism.
pub fn induced_maps(rec: &SymmetricPairRecord) -> Result<Vec<InducedTorusMap>> {
    diagram_automorphisms(&build_extended_vogan(rec)).iter().map(|a| induced_map(rec, a)).collect()
}

/// The group generated by the induced maps, as sorted matrices.
pub fn induced_group(rec: &SymmetricPairRecord) -> Result<Vec<IntMatrix>> {
    let gens: Vec<IntMatrix> = induced_maps(rec)?.into_iter().map(|m| m.matrix).collect();
    close_group(&gens, rec.p, GROUP_CAP)
}

/// N and the orbit partition of J∩C̄ under the induced group.
pub fn count_classes(rec: &SymmetricPairRecord) -> Result<ClassCount> {
    let group = induced_group(rec)?;
    count_with_group(rec, &group)
}

/// Orbit partition under the group generated by `gens` (used to check that
/// generator order does not matter).
pub fn count_classes_with(rec: &SymmetricPairRecord, gens: &[IntMatrix]) -> Result<ClassCount> {
    let group = close_group(gens, rec.p, GROUP_CAP)?;
    count_with_group(rec, &group)
}

fn count_with_group(rec: &SymmetricPairRecord, group: &[IntMatrix]) -> Result<ClassCount> {
    let points = admissible_points(rec);
    let coords: Vec<Vec<Rational64>> = points.iter().map(|t| t.coords().to_vec()).collect();
    if !permutes(group, &coords) {
        return Err(Error::Invariant(format!("{rec}: induced group does not preserve J∩C̄")));
    }
    let orbits = orbits(group, &coords)?;
    Ok(ClassCount { n: orbits.len(), points, orbits, group_order: group.len() })
}

/// Whether the transpose of `m` sends each noncompact positive root to ± a
/// noncompact root.
pub fn preserves_noncompact_roots(rec: &SymmetricPairRecord, m: &IntMatrix) -> bool {
    let nc: BTreeSet<Vec<i64>> = noncompact_positive_roots(rec).iter().map(|r| r.coords().to_vec()).collect();
    let mt = m.transpose();
    nc.iter().all(|a| {
        let img = mt.apply_int(a);
        let neg: Vec<i64> = img.iter().map(|x| -x).collect();
        nc.contains(&img) || nc.contains(&neg)
    })
}
