//! Integer matrix groups acting on coordinate vectors: closure and orbits.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix { dim, entries: rows.into_iter().flatten().collect() }
    }

    /// Matrix of the map sending basis vector `j` to `±basis[target]`, given as
    /// `(target, sign)` per column.
    pub fn signed_permutation(images: &[(usize, i64)]) -> Self {
        let dim = images.len();
        let mut m = IntMatrix { dim, entries: vec![0; dim * dim] };
        for (j, &(t, s)) in images.iter().enumerate() {
            m.entries[t * dim + j] = s;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim.max(1)).map(|c| c.to_vec()).take(self.dim).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entries[k * n + j];
                }
            }
        }
        IntMatrix { dim: n, entries }
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        IntMatrix { dim: n, entries }
    }

    pub fn apply(&self, v: &[Rational64]) -> Vec<Rational64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(Rational64::zero(), |acc, j| {
                    let a = self.entries[i * self.dim + j];
                    if a == 0 {
                        acc
                    } else {
                        acc + Rational64::from_integer(a) * v[j]
                    }
                })
            })
            .collect()
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.entries[i * self.dim + j] * v[j]).sum()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Closes `gens` under multiplication. Fails if the group exceeds `cap` elements.
pub fn close_group(gens: &[IntMatrix], dim: usize, cap: usize) -> Result<Vec<IntMatrix>> {
    let id = IntMatrix::identity(dim);
    let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                if seen.len() > cap {
                    return Err(Error::Invariant(format!("group closure exceeded {cap} elements")));
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Orbits of `group` on `points`, as sorted index lists ordered by least member.
/// Every image must lie in `points`.
pub fn orbits(group: &[IntMatrix], points: &[Vec<Rational64>]) -> Result<Vec<Vec<usize>>> {
    let position: BTreeMap<&[Rational64], usize> = points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut owner: Vec<Option<usize>> = vec![None; points.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    for &start in &order {
        if owner[start].is_some() {
            continue;
        }
        let id = out.len();
        let mut orbit = BTreeSet::new();
        for g in group {
            let img = g.apply(&points[start]);
            match position.get(img.as_slice()) {
                Some(&j) => {
                    orbit.insert(j);
                }
                None => {
                    return Err(Error::Invariant(format!(
                        "map {g} carries an admissible point outside the admissible set"
                    )))
                }
            }
        }
        let mut members: Vec<usize> = orbit.into_iter().collect();
        members.sort_by(|&a, &b| points[a].cmp(&points[b]));
        for &j in &members {
            if let Some(prev) = owner[j] {
                return Err(Error::Invariant(format!("orbits {prev} and {id} overlap")));
            }
            owner[j] = Some(id);
        }
        out.push(members);
    }
    Ok(out)
}

/// Checks that each element maps `points` bijectively onto itself.
pub fn permutes(group: &[IntMatrix], points: &[Vec<Rational64>]) -> bool {
    let set: BTreeSet<&[Rational64]> = points.iter().map(|p| p.as_slice()).collect();
    group.iter().all(|g| {
        let imgs: BTreeSet<Vec<Rational64>> = points.iter().map(|p| g.apply(p)).collect();
        imgs.len() == points.len() && imgs.iter().all(|i| set.contains(i.as_slice()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn dihedral_closure() {
        let rot = IntMatrix::from_rows(vec![vec![0, -1], vec![1, 0]]);
        let flip = IntMatrix::from_rows(vec![vec![1, 0], vec![0, -1]]);
        let g = close_group(&[rot, flip], 2, 100).unwrap();
        assert_eq!(g.len(), 8);
    }

    #[test]
    fn orbits_are_ordered() {
        let flip = IntMatrix::signed_permutation(&[(1, 1), (0, 1)]);
        let g = close_group(&[flip], 2, 10).unwrap();
        let pts = vec![r(&[1, 0]), r(&[0, 1]), r(&[2, 2])];
        let o = orbits(&g, &pts).unwrap();
        assert_eq!(o, vec![vec![1, 0], vec![2]]);
    }

    #[test]
    fn escape_is_reported() {
        let neg = IntMatrix::from_rows(vec![vec![-1]]);
        let g = close_group(&[neg], 1, 10).unwrap();
        assert!(orbits(&g, &[r(&[1])]).is_err());
        assert!(!permutes(&g, &[r(&[1])]));
    }
}
