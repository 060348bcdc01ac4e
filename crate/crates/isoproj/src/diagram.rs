//! Automorphisms of small node-coloured graphs with integer edge labels.

/// Node colours plus a directed label matrix (`labels[i][j] == 0` means no edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub colors: Vec<u32>,
    pub labels: Vec<Vec<i64>>,
}

impl ColoredGraph {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    fn signature(&self, v: usize) -> (u32, Vec<(i64, i64)>) {
        let mut s: Vec<(i64, i64)> = (0..self.len())
            .filter(|&w| w != v)
            .map(|w| (self.labels[v][w], self.labels[w][v]))
            .filter(|&(a, b)| a != 0 || b != 0)
            .collect();
        s.sort_unstable();
        (self.colors[v], s)
    }

    /// Whether `perm` preserves colours and every directed label.
    pub fn preserved_by(&self, perm: &[usize]) -> bool {
        let n = self.len();
        perm.len() == n
            && (0..n).all(|i| self.colors[perm[i]] == self.colors[i])
            && (0..n).all(|i| (0..n).all(|j| i == j || self.labels[perm[i]][perm[j]] == self.labels[i][j]))
    }
}

/// All automorphisms, sorted lexicographically as image lists.
pub fn automorphisms(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(g, g, usize::MAX, &mut out);
    out.sort();
    out
}

/// Whether some bijection carries `a` onto `b` preserving colours and labels.
pub fn isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut out = Vec::new();
    search(a, b, 1, &mut out);
    !out.is_empty()
}

type Signature = (u32, Vec<(i64, i64)>);

fn search(a: &ColoredGraph, b: &ColoredGraph, limit: usize, out: &mut Vec<Vec<usize>>) {
    let n = a.len();
    let sa: Vec<Signature> = (0..n).map(|v| a.signature(v)).collect();
    let sb: Vec<Signature> = (0..n).map(|v| b.signature(v)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ctx = Ctx { a, b, sa: &sa, sb: &sb, limit };
    ctx.extend(0, &mut perm, &mut used, out);
}

struct Ctx<'a> {
    a: &'a ColoredGraph,
    b: &'a ColoredGraph,
    sa: &'a [Signature],
    sb: &'a [Signature],
    limit: usize,
}

impl Ctx<'_> {
    fn extend(&self, i: usize, perm: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = self.a.len();
        if out.len() >= self.limit {
            return;
        }
        if i == n {
            out.push(perm.to_vec());
            return;
        }
        for v in 0..n {
            if used[v] || self.sb[v] != self.sa[i] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                self.a.labels[i][j] == self.b.labels[v][perm[j]] && self.a.labels[j][i] == self.b.labels[perm[j]][v]
            });
            if !consistent {
                continue;
            }
            perm[i] = v;
            used[v] = true;
            self.extend(i + 1, perm, used, out);
            used[v] = false;
            perm[i] = usize::MAX;
        }
    }
}
