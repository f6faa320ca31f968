use std::collections::BTreeMap;

/// A set of pairwise noncrossing diagonals of the convex `n`-gon with
/// vertices `0..n` in cyclic order. Diagonals are stored as `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

fn cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize| a.0 < x && x < a.1;
    let shares = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shares && inside(b.0) != inside(b.1)
}

impl Dissection {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Vertex cycles of the polygons cut out by the diagonals.
    pub fn polygons(&self) -> Vec<Vec<usize>> {
        let mut faces = vec![(0..self.n).collect::<Vec<_>>()];
        for &(a, b) in &self.diagonals {
            let idx = faces
                .iter()
                .position(|f| f.contains(&a) && f.contains(&b))
                .expect("noncrossing diagonal lies in one face");
            let face = faces.swap_remove(idx);
            let ia = face.iter().position(|&v| v == a).unwrap();
            let ib = face.iter().position(|&v| v == b).unwrap();
            let (lo, hi) = (ia.min(ib), ia.max(ib));
            let first: Vec<usize> = face[lo..=hi].to_vec();
            let second: Vec<usize> = face[hi..].iter().chain(&face[..=lo]).copied().collect();
            faces.push(first);
            faces.push(second);
        }
        faces
    }

    /// `r[i]` polygons with `i + 3` sides, for sides `3..=n`.
    pub fn type_vector(&self) -> Vec<usize> {
        let mut r = vec![0; self.n.saturating_sub(2)];
        for p in self.polygons() {
            r[p.len() - 3] += 1;
        }
        r
    }
}

/// All dissections of the convex `n`-gon, `n >= 3`.
pub fn enumerate_dissections(n: usize) -> Vec<Dissection> {
    let mut all = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) {
                all.push((i, j));
            }
        }
    }
    let mut out = Vec::new();
    fn go(
        k: usize,
        all: &[(usize, usize)],
        cur: &mut Vec<(usize, usize)>,
        n: usize,
        out: &mut Vec<Dissection>,
    ) {
        if k == all.len() {
            out.push(Dissection {
                n,
                diagonals: cur.clone(),
            });
            return;
        }
        go(k + 1, all, cur, n, out);
        if cur.iter().all(|&d| !cross(d, all[k])) {
            cur.push(all[k]);
            go(k + 1, all, cur, n, out);
            cur.pop();
        }
    }
    go(0, &all, &mut Vec::new(), n, &mut out);
    out
}

/// Number of dissections of each type vector.
pub fn dissections_by_type(n: usize) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    for d in enumerate_dissections(n) {
        *out.entry(d.type_vector()).or_insert(0) += 1;
    }
    out
}
