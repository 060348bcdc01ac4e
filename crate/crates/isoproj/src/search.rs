//! Depth-first enumeration of integer grid points subject to linear constraints,
//! pruned by interval feasibility of the partial sums.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Σ a_c x_c must be one of these values.
    OneOf(Vec<i64>),
    /// Σ a_c x_c must be at least this value.
    AtLeast(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub target: Target,
}

impl Constraint {
    pub fn one_of(coeffs: Vec<i64>, values: Vec<i64>) -> Self {
        Constraint { coeffs, target: Target::OneOf(values) }
    }

    pub fn at_least(coeffs: Vec<i64>, bound: i64) -> Self {
        Constraint { coeffs, target: Target::AtLeast(bound) }
    }

    fn admits_range(&self, lo: i64, hi: i64) -> bool {
        match &self.target {
            Target::OneOf(vals) => vals.iter().any(|&t| lo <= t && t <= hi),
            Target::AtLeast(b) => hi >= *b,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GridSearch {
    dim: usize,
    values: Vec<i64>,
    constraints: Vec<Constraint>,
}

struct Prepared {
    suffix_lo: Vec<Vec<i64>>,
    suffix_hi: Vec<Vec<i64>>,
    touching: Vec<Vec<usize>>,
}

impl GridSearch {
    /// Every coordinate ranges over `values`.
    pub fn new(dim: usize, mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        values.dedup();
        GridSearch { dim, values, constraints: Vec::new() }
    }

    pub fn push(&mut self, c: Constraint) {
        assert_eq!(c.coeffs.len(), self.dim, "constraint length");
        self.constraints.push(c);
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    fn prepare(&self) -> Prepared {
        let vmin = *self.values.first().unwrap_or(&0);
        let vmax = *self.values.last().unwrap_or(&0);
        let mut suffix_lo = Vec::with_capacity(self.constraints.len());
        let mut suffix_hi = Vec::with_capacity(self.constraints.len());
        for c in &self.constraints {
            let mut lo = vec![0; self.dim + 1];
            let mut hi = vec![0; self.dim + 1];
            for l in (0..self.dim).rev() {
                let a = c.coeffs[l];
                lo[l] = lo[l + 1] + (a * vmin).min(a * vmax);
                hi[l] = hi[l + 1] + (a * vmin).max(a * vmax);
            }
            suffix_lo.push(lo);
            suffix_hi.push(hi);
        }
        let touching = (0..self.dim)
            .map(|l| (0..self.constraints.len()).filter(|&k| self.constraints[k].coeffs[l] != 0).collect())
            .collect();
        Prepared { suffix_lo, suffix_hi, touching }
    }

    /// All grid points satisfying every constraint, in lexicographic order.
    pub fn solve(&self) -> Vec<Vec<i64>> {
        let prep = self.prepare();
        for (k, c) in self.constraints.iter().enumerate() {
            if !c.admits_range(prep.suffix_lo[k][0], prep.suffix_hi[k][0]) {
                return Vec::new();
            }
        }
        let mut partial = vec![0i64; self.constraints.len()];
        let mut point = vec![0i64; self.dim];
        let mut out = Vec::new();
        self.descend(&prep, 0, &mut partial, &mut point, &mut out);
        out
    }

    fn descend(&self, prep: &Prepared, l: usize, partial: &mut [i64], point: &mut [i64], out: &mut Vec<Vec<i64>>) {
        if l == self.dim {
            out.push(point.to_vec());
            return;
        }
        for &v in &self.values {
            let touch = &prep.touching[l];
            for &k in touch {
                partial[k] += self.constraints[k].coeffs[l] * v;
            }
            let ok = touch.iter().all(|&k| {
                self.constraints[k]
                    .admits_range(partial[k] + prep.suffix_lo[k][l + 1], partial[k] + prep.suffix_hi[k][l + 1])
            });
            if ok {
                point[l] = v;
                self.descend(prep, l + 1, partial, point, out);
            }
            for &k in touch {
                partial[k] -= self.constraints[k].coeffs[l] * v;
            }
        }
    }
}
