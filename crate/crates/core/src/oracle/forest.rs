use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::ops::Range;

use serde::Serialize;

use super::nc::{enumerate_nc_partitions, NcPartition};
use super::schroeder::{schroeder_table, SchroederTree};
use crate::error::{Error, Result};

/// A series-reduced planar forest embedded in a disk.
///
/// Vertices `0..n` are the boundary vertices, vertex `i` carrying label
/// `i + 1` in clockwise order; internal vertices follow. Every vertex keeps
/// its neighbours in clockwise order. Internal vertices have degree at least
/// 3, except the degree-1 leaf that a singleton component hangs from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarForest {
    n: usize,
    adj: Vec<Vec<usize>>,
}

/// A connected component: its vertices and its boundary labels, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub labels: Vec<usize>,
}

impl PlanarForest {
    /// Assembles a forest from a noncrossing partition and, for each block of
    /// size `m >= 2`, a Schröder tree with `m - 1` leaves (its root sits next
    /// to the block's smallest label). Singleton blocks take `None`.
    pub fn from_blocks(partition: &NcPartition, trees: &[Option<&SchroederTree>]) -> Result<Self> {
        if trees.len() != partition.blocks().len() {
            return Err(Error::InvalidDecoration(
                "one tree per block required".into(),
            ));
        }
        let n = partition.n();
        let mut f = PlanarForest {
            n,
            adj: vec![Vec::new(); n],
        };
        for (block, tree) in partition.blocks().iter().zip(trees) {
            let first = block[0] - 1;
            match tree {
                None if block.len() == 1 => {
                    let leaf = f.push_vertex(vec![first]);
                    f.adj[first] = vec![leaf];
                }
                Some(t) if t.leaves() + 1 == block.len() => {
                    let mut labels = block[1..].iter().map(|l| l - 1);
                    let root = f.grow(t, first, &mut labels);
                    f.adj[first] = vec![root];
                }
                _ => {
                    return Err(Error::InvalidDecoration(format!(
                        "tree does not fit block of size {}",
                        block.len()
                    )))
                }
            }
        }
        Ok(f)
    }

    fn push_vertex(&mut self, nbrs: Vec<usize>) -> usize {
        self.adj.push(nbrs);
        self.adj.len() - 1
    }

    fn grow(
        &mut self,
        t: &SchroederTree,
        parent: usize,
        labels: &mut impl Iterator<Item = usize>,
    ) -> usize {
        match t {
            SchroederTree::Leaf => {
                let b = labels.next().expect("leaf count matches block size");
                self.adj[b] = vec![parent];
                b
            }
            SchroederTree::Node(children) => {
                let v = self.push_vertex(vec![parent]);
                for c in children {
                    let id = self.grow(c, v, labels);
                    self.adj[v].push(id);
                }
                v
            }
        }
    }

    /// Builds a forest from raw clockwise adjacency lists, checking the
    /// structural invariants.
    pub fn from_adjacency(n: usize, adj: Vec<Vec<usize>>) -> Result<Self> {
        let f = PlanarForest { n, adj };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecoration(m));
        if self.adj.len() < self.n {
            return bad("fewer vertices than boundary labels".into());
        }
        let mut edges = 0;
        for (v, nbrs) in self.adj.iter().enumerate() {
            for &u in nbrs {
                if u >= self.adj.len() || u == v {
                    return bad(format!("vertex {v} has an invalid neighbour"));
                }
                if self.adj[u].iter().filter(|&&w| w == v).count() != 1 {
                    return bad(format!("edge {v}-{u} is not symmetric"));
                }
            }
            edges += nbrs.len();
            let d = nbrs.len();
            if v < self.n && d != 1 {
                return bad(format!("boundary vertex {} has degree {d}", v + 1));
            }
            if v >= self.n && !(d == 1 && nbrs[0] < self.n || d >= 3) {
                return bad(format!("internal vertex {v} has degree {d}"));
            }
        }
        let comps = self.components();
        if edges / 2 + comps.len() != self.adj.len() {
            return bad("graph has a cycle".into());
        }
        let blocks: Vec<Vec<usize>> = comps.into_iter().map(|c| c.labels).collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return bad("component without boundary vertices".into());
        }
        if NcPartition::new(self.n, blocks).is_none() {
            return bad("components cross".into());
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn internal_vertices(&self) -> Range<usize> {
        self.n..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for start in 0..self.adj.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut vertices = Vec::new();
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            vertices.sort_unstable();
            let labels = vertices
                .iter()
                .filter(|&&v| v < self.n)
                .map(|v| v + 1)
                .collect();
            out.push(Component { vertices, labels });
        }
        out.sort_by(|a, b| a.labels.cmp(&b.labels));
        out
    }

    /// The partition of boundary labels into components.
    pub fn partition(&self) -> NcPartition {
        let blocks = self.components().into_iter().map(|c| c.labels).collect();
        NcPartition::new(self.n, blocks).expect("components of a planar forest are noncrossing")
    }

    /// Number of internal vertices of each degree `>= 3`.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for v in self.internal_vertices() {
            if self.degree(v) >= 3 {
                *out.entry(self.degree(v)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Copy whose clockwise lists start at a different reference edge:
    /// vertex `v`'s list is rotated left by `shift(v)`.
    pub fn with_rotated_references(&self, shift: impl Fn(usize) -> usize) -> Self {
        let mut adj = self.adj.clone();
        for (v, nbrs) in adj.iter_mut().enumerate() {
            if !nbrs.is_empty() {
                let s = shift(v) % nbrs.len();
                nbrs.rotate_left(s);
            }
        }
        PlanarForest { n: self.n, adj }
    }
}

/// All series-reduced planar trees on boundary labels `1..=n`.
pub fn enumerate_trees(n: usize) -> Vec<PlanarForest> {
    if n == 0 {
        return Vec::new();
    }
    let partition = NcPartition::new(n, vec![(1..=n).collect()]).expect("single block");
    if n == 1 {
        return vec![PlanarForest::from_blocks(&partition, &[None]).expect("singleton")];
    }
    schroeder_table(n - 1)
        .swap_remove(n - 1)
        .iter()
        .map(|t| PlanarForest::from_blocks(&partition, &[Some(t)]).expect("tree fits block"))
        .collect()
}

/// Calls `visit` on every forest whose component partition is `partition`.
pub fn for_each_forest_on(
    partition: &NcPartition,
    table: &[Vec<SchroederTree>],
    visit: &mut dyn FnMut(PlanarForest),
) {
    let blocks = partition.blocks();
    let choices: Vec<Vec<Option<&SchroederTree>>> = blocks
        .iter()
        .map(|b| {
            if b.len() == 1 {
                vec![None]
            } else {
                table[b.len() - 1].iter().map(Some).collect()
            }
        })
        .collect();
    let mut pick = vec![0usize; blocks.len()];
    loop {
        let trees: Vec<Option<&SchroederTree>> =
            pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        visit(PlanarForest::from_blocks(partition, &trees).expect("trees fit blocks"));
        let mut i = 0;
        loop {
            if i == pick.len() {
                return;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// All series-reduced planar forests on `[n]`; with `allow_singletons`
/// false, partitions with singleton blocks are skipped.
pub fn enumerate_forests(n: usize, allow_singletons: bool) -> Vec<PlanarForest> {
    let table = schroeder_table(n.saturating_sub(1));
    let mut out = Vec::new();
    for p in enumerate_nc_partitions(n) {
        if !allow_singletons && p.block_sizes().any(|s| s == 1) {
            continue;
        }
        for_each_forest_on(&p, &table, &mut |f| out.push(f));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexColor {
    White,
    Black,
    Generic,
}

/// Colour of an internal vertex of degree `degree` and helicity `h`.
pub fn color_of(degree: usize, h: u32) -> VertexColor {
    let h = h as usize;
    if degree == 1 {
        if h == 1 {
            VertexColor::White
        } else {
            VertexColor::Black
        }
    } else if h == 1 {
        VertexColor::White
    } else if h + 1 == degree {
        VertexColor::Black
    } else {
        VertexColor::Generic
    }
}

/// Momentum-dimension weight `m(v)` of an internal vertex.
pub fn vertex_mom_weight(degree: usize, h: u32) -> usize {
    if color_of(degree, h) == VertexColor::Generic {
        2 * degree - 4
    } else {
        degree - 1
    }
}

/// A planar forest with a helicity on every internal vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassForest {
    shape: PlanarForest,
    helicity: Vec<u32>,
}

#[derive(Serialize)]
struct ForestJson<'a> {
    n: usize,
    adjacency: &'a [Vec<usize>],
    helicity: BTreeMap<usize, u32>,
}

impl GrassForest {
    /// `helicity[i]` belongs to internal vertex `n + i`.
    pub fn new(shape: PlanarForest, helicity: Vec<u32>) -> Result<Self> {
        let internal = shape.internal_vertices();
        if helicity.len() != internal.len() {
            return Err(Error::InvalidDecoration(format!(
                "{} helicities for {} internal vertices",
                helicity.len(),
                internal.len()
            )));
        }
        for (v, &h) in internal.zip(&helicity) {
            let d = shape.degree(v);
            let ok = if d == 1 {
                h <= 1
            } else {
                h >= 1 && (h as usize) < d
            };
            if !ok {
                return Err(Error::InvalidDecoration(format!(
                    "vertex {v} of degree {d} has helicity {h}"
                )));
            }
        }
        Ok(GrassForest { shape, helicity })
    }

    pub fn shape(&self) -> &PlanarForest {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    /// Helicity of internal vertex `v`.
    pub fn vertex_helicity(&self, v: usize) -> u32 {
        self.helicity[v - self.shape.n]
    }

    pub fn helicities(&self) -> &[u32] {
        &self.helicity
    }

    pub fn color(&self, v: usize) -> VertexColor {
        color_of(self.shape.degree(v), self.vertex_helicity(v))
    }

    /// `sum (h(v) - deg(v)/2) + n/2` over internal vertices.
    pub fn helicity(&self) -> u32 {
        forest_helicity(&self.shape, &self.helicity)
    }

    /// Sum over components of `n_T - 1` (if `n_T <= 2`) or `1 + sum (m(v) - 1)`.
    pub fn mom_dimension(&self) -> u32 {
        let comps = self.shape.components();
        forest_mom_dimension(&self.shape, &comps, &self.helicity, 0)
    }

    fn same_color_edge(&self, u: usize, v: usize) -> bool {
        let (cu, cv) = (self.color(u), self.color(v));
        cu == cv && cu != VertexColor::Generic
    }

    /// No two adjacent internal vertices are both white or both black.
    pub fn is_contracted(&self) -> bool {
        self.contractible_edges().is_empty()
    }

    /// Every internal vertex is white or black.
    pub fn is_plabic(&self) -> bool {
        self.shape
            .internal_vertices()
            .all(|v| self.color(v) != VertexColor::Generic)
    }

    /// Internal edges `(u, v)`, `u < v`, joining two vertices of one colour.
    pub fn contractible_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.shape.internal_vertices() {
            for &v in self.shape.neighbors(u) {
                if v > u && !self.shape.is_boundary(v) && self.same_color_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Contracts the edge between two adjacent white (or two adjacent black)
    /// internal vertices into a single vertex of that colour.
    pub fn contract_move(&self, u: usize, v: usize) -> Result<GrassForest> {
        let s = &self.shape;
        let internal = |w: usize| w >= s.n && w < s.adj.len();
        if !internal(u) || !internal(v) || !s.adj[u].contains(&v) {
            return Err(Error::InvalidMove(format!(
                "{u}-{v} is not an internal edge"
            )));
        }
        if !self.same_color_edge(u, v) {
            return Err(Error::InvalidMove(format!(
                "vertices {u} and {v} are {:?} and {:?}",
                self.color(u),
                self.color(v)
            )));
        }
        let after = |list: &[usize], x: usize| -> Vec<usize> {
            let i = list.iter().position(|&w| w == x).expect("adjacent");
            list[i + 1..].iter().chain(&list[..i]).copied().collect()
        };
        let mut merged = after(&s.adj[u], v);
        merged.extend(after(&s.adj[v], u));
        let new_h = self.vertex_helicity(u) + self.vertex_helicity(v) - 1;

        let (keep, drop) = (u.min(v), u.max(v));
        let renumber = |w: usize| -> usize {
            if w == drop {
                keep
            } else if w > drop {
                w - 1
            } else {
                w
            }
        };
        let mut adj = Vec::with_capacity(s.adj.len() - 1);
        let mut helicity = Vec::with_capacity(self.helicity.len() - 1);
        for (w, nbrs) in s.adj.iter().enumerate() {
            if w == drop {
                continue;
            }
            let list = if w == keep { &merged } else { nbrs };
            adj.push(list.iter().map(|&x| renumber(x)).collect());
            if w >= s.n {
                helicity.push(if w == keep {
                    new_h
                } else {
                    self.vertex_helicity(w)
                });
            }
        }
        Ok(GrassForest {
            shape: PlanarForest { n: s.n, adj },
            helicity,
        })
    }

    /// Applies contraction moves, always the first available edge, until the
    /// forest is contracted.
    pub fn contract_fully(&self) -> GrassForest {
        let mut g = self.clone();
        while let Some(&(u, v)) = g.contractible_edges().first() {
            g = g
                .contract_move(u, v)
                .expect("listed edges are contractible");
        }
        g
    }

    /// A string that determines the forest up to renumbering of internal
    /// vertices: each component is walked from its smallest boundary label,
    /// visiting neighbours clockwise after the edge of arrival.
    pub fn canonical_key(&self) -> String {
        let s = &self.shape;
        let mut out = String::new();
        for comp in s.components() {
            let start = comp.labels[0] - 1;
            let _ = write!(out, "[{}", comp.labels[0]);
            self.walk(s.adj[start][0], start, &mut out);
            out.push(']');
        }
        out
    }

    fn walk(&self, v: usize, from: usize, out: &mut String) {
        let s = &self.shape;
        if s.is_boundary(v) {
            let _ = write!(out, " {}", v + 1);
            return;
        }
        let _ = write!(out, " (h{}", self.vertex_helicity(v));
        let nbrs = &s.adj[v];
        let i = nbrs
            .iter()
            .position(|&w| w == from)
            .expect("arrived along an edge");
        for k in 1..nbrs.len() {
            self.walk(nbrs[(i + k) % nbrs.len()], v, out);
        }
        out.push(')');
    }

    /// One JSON object describing the forest, for line-oriented dumps.
    pub fn to_json_line(&self) -> String {
        let helicity = self
            .shape
            .internal_vertices()
            .map(|v| (v, self.vertex_helicity(v)))
            .collect();
        serde_json::to_string(&ForestJson {
            n: self.shape.n,
            adjacency: &self.shape.adj,
            helicity,
        })
        .expect("serialisable")
    }
}

/// Doubled-sum helicity of a decoration given as a slice over internal vertices.
pub(crate) fn forest_helicity(shape: &PlanarForest, helicity: &[u32]) -> u32 {
    let twice: i64 = shape
        .internal_vertices()
        .zip(helicity)
        .map(|(v, &h)| 2 * h as i64 - shape.degree(v) as i64)
        .sum::<i64>()
        + shape.n as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as u32
}

/// Mom-dimension; `offset` is added once for every component with at least
/// three boundary vertices (zero except in fault-injection runs).
pub(crate) fn forest_mom_dimension(
    shape: &PlanarForest,
    components: &[Component],
    helicity: &[u32],
    offset: i64,
) -> u32 {
    let mut total: i64 = 0;
    for c in components {
        let nt = c.labels.len();
        if nt <= 2 {
            total += nt as i64 - 1;
            continue;
        }
        let mut dim: i64 = 1 + offset;
        for &v in c.vertices.iter().filter(|&&v| v >= shape.n) {
            dim += vertex_mom_weight(shape.degree(v), helicity[v - shape.n]) as i64 - 1;
        }
        total += dim;
    }
    total.max(0) as u32
}

/// Calls `visit` with every admissible helicity assignment of `shape`
/// (indexed by internal vertex). `contracted_only` forbids adjacent
/// same-colour vertices; `plabic_only` restricts to white and black.
pub fn for_each_decoration(
    shape: &PlanarForest,
    contracted_only: bool,
    plabic_only: bool,
    visit: &mut dyn FnMut(&[u32]),
) {
    let internal: Vec<usize> = shape.internal_vertices().collect();
    let mut h = vec![0u32; internal.len()];
    fn go(
        i: usize,
        shape: &PlanarForest,
        internal: &[usize],
        h: &mut Vec<u32>,
        contracted_only: bool,
        plabic_only: bool,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if i == internal.len() {
            visit(h);
            return;
        }
        let v = internal[i];
        let d = shape.degree(v);
        let options: Vec<u32> = if d == 1 {
            vec![0, 1]
        } else if plabic_only {
            vec![1, d as u32 - 1]
        } else {
            (1..d as u32).collect()
        };
        'next: for cand in options {
            let color = color_of(d, cand);
            if contracted_only && color != VertexColor::Generic {
                for &u in shape.neighbors(v) {
                    if u >= shape.n && u < v && color_of(shape.degree(u), h[u - shape.n]) == color {
                        continue 'next;
                    }
                }
            }
            h[i] = cand;
            go(
                i + 1,
                shape,
                internal,
                h,
                contracted_only,
                plabic_only,
                visit,
            );
        }
    }
    go(
        0,
        shape,
        &internal,
        &mut h,
        contracted_only,
        plabic_only,
        visit,
    );
}

/// All admissible decorations of `shape` as Grassmannian forests.
pub fn decorate_grassmannian(
    shape: &PlanarForest,
    contracted_only: bool,
    plabic_only: bool,
) -> Vec<GrassForest> {
    let mut out = Vec::new();
    for_each_decoration(shape, contracted_only, plabic_only, &mut |h| {
        out.push(GrassForest {
            shape: shape.clone(),
            helicity: h.to_vec(),
        })
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::tree_type_count;

    fn star(n: usize) -> PlanarForest {
        let mut adj: Vec<Vec<usize>> = (0..n).map(|_| vec![n]).collect();
        adj.push((0..n).collect());
        PlanarForest::from_adjacency(n, adj).unwrap()
    }

    // two trivalent vertices: a carries labels 1, 2; b carries 3, 4
    fn double_star() -> PlanarForest {
        PlanarForest::from_adjacency(
            4,
            vec![
                vec![4],
                vec![4],
                vec![5],
                vec![5],
                vec![0, 1, 5],
                vec![4, 2, 3],
            ],
        )
        .unwrap()
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 3, 11, 45, 197, 903]);
        for n in 1..=7 {
            for t in enumerate_trees(n) {
                t.validate().unwrap();
                assert_eq!(t.components().len(), 1);
            }
        }
    }

    #[test]
    fn forest_shape_counts() {
        assert_eq!(enumerate_forests(0, true).len(), 1);
        assert_eq!(enumerate_forests(2, true).len(), 2);
        assert_eq!(enumerate_forests(3, true).len(), 5);
        // F = 0 with singletons removed: NC pair partitions on trees of size 2
        assert_eq!(enumerate_forests(4, false).len(), 3 + 2);
        for f in enumerate_forests(6, true) {
            f.validate().unwrap();
        }
    }

    #[test]
    fn type_vectors_match_formula() {
        for n in 3..=9 {
            let mut by_type: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for t in enumerate_trees(n) {
                let prof = t.degree_profile();
                let r: Vec<usize> = (3..=n)
                    .map(|d| prof.get(&d).copied().unwrap_or(0))
                    .collect();
                *by_type.entry(r).or_insert(0) += 1;
            }
            for (r, c) in by_type {
                assert_eq!(tree_type_count(n, &r), c.into(), "n = {n}, r = {r:?}");
            }
        }
    }

    #[test]
    fn signed_white_trees_collapse_to_one() {
        for n in 2..=9 {
            let net: i64 = enumerate_trees(n)
                .iter()
                .map(|t| {
                    t.internal_vertices()
                        .map(|v| if t.degree(v) % 2 == 0 { -1 } else { 1 })
                        .product::<i64>()
                })
                .sum();
            assert_eq!(net, 1, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(PlanarForest::from_adjacency(2, vec![vec![2], vec![2], vec![0, 1]]).is_err());
        assert!(PlanarForest::from_adjacency(2, vec![vec![1], vec![]]).is_err());
        // components {1,3} and {2,4} cross
        assert!(PlanarForest::from_adjacency(4, vec![vec![2], vec![3], vec![0], vec![1]]).is_err());
    }

    #[test]
    fn star_decorations() {
        assert_eq!(decorate_grassmannian(&star(3), true, false).len(), 2);
        assert_eq!(decorate_grassmannian(&star(4), true, false).len(), 3);
        assert_eq!(decorate_grassmannian(&star(4), true, true).len(), 2);
        let all = decorate_grassmannian(&double_star(), false, false);
        assert_eq!(all.len(), 4);
        assert_eq!(decorate_grassmannian(&double_star(), true, false).len(), 2);
    }

    #[test]
    fn statistics_of_small_forests() {
        let white = GrassForest::new(star(3), vec![1]).unwrap();
        let black = GrassForest::new(star(3), vec![2]).unwrap();
        assert_eq!((white.helicity(), white.mom_dimension()), (1, 2));
        assert_eq!((black.helicity(), black.mom_dimension()), (2, 2));
        let generic = GrassForest::new(star(4), vec![2]).unwrap();
        assert_eq!(generic.mom_dimension(), 4);
        let partition = NcPartition::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        let leaves = PlanarForest::from_blocks(&partition, &[None, None, None]).unwrap();
        let all_white = GrassForest::new(leaves.clone(), vec![1, 1, 1]).unwrap();
        assert_eq!((all_white.helicity(), all_white.mom_dimension()), (3, 0));
        let edge = enumerate_trees(2).pop().unwrap();
        let edge = GrassForest::new(edge, vec![]).unwrap();
        assert_eq!((edge.helicity(), edge.mom_dimension()), (1, 1));
        assert!(GrassForest::new(star(3), vec![3]).is_err());
        assert!(GrassForest::new(leaves, vec![2, 1, 1]).is_err());
    }

    #[test]
    fn contraction_of_white_pair() {
        let g = GrassForest::new(double_star(), vec![1, 1]).unwrap();
        assert!(!g.is_contracted());
        assert_eq!(g.contractible_edges(), [(4, 5)]);
        let c = g.contract_move(4, 5).unwrap();
        assert_eq!(c.shape().neighbors(4), [0, 1, 2, 3]);
        assert_eq!(c.vertex_helicity(4), 1);
        assert_eq!(
            (c.helicity(), c.mom_dimension()),
            (g.helicity(), g.mom_dimension())
        );
        assert_eq!(c.mom_dimension(), 3);
        let b = GrassForest::new(double_star(), vec![2, 2])
            .unwrap()
            .contract_move(5, 4)
            .unwrap();
        assert_eq!(b.vertex_helicity(4), 3);
        let mixed = GrassForest::new(double_star(), vec![1, 2]).unwrap();
        assert!(matches!(
            mixed.contract_move(4, 5),
            Err(Error::InvalidMove(_))
        ));
        assert!(mixed.contract_move(0, 4).is_err());
    }

    #[test]
    fn contracted_plabic_forests_are_bipartite() {
        for n in 1..=7 {
            for shape in enumerate_forests(n, true) {
                for g in decorate_grassmannian(&shape, true, true) {
                    for u in shape.internal_vertices() {
                        for &v in shape.neighbors(u) {
                            if !shape.is_boundary(v) {
                                assert_ne!(g.color(u), g.color(v));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_key_ignores_internal_numbering() {
        let g = GrassForest::new(double_star(), vec![1, 2]).unwrap();
        let swapped = PlanarForest::from_adjacency(
            4,
            vec![
                vec![5],
                vec![5],
                vec![4],
                vec![4],
                vec![5, 2, 3],
                vec![0, 1, 4],
            ],
        )
        .unwrap();
        let h = GrassForest::new(swapped, vec![2, 1]).unwrap();
        assert_eq!(g.canonical_key(), h.canonical_key());
        assert_eq!(g.canonical_key(), "[1 (h1 2 (h2 3 4))]");
        let rotated =
            GrassForest::new(double_star().with_rotated_references(|v| v), vec![1, 2]).unwrap();
        assert_eq!(rotated.canonical_key(), g.canonical_key());
    }

    #[test]
    fn json_line() {
        let g = GrassForest::new(star(3), vec![1]).unwrap();
        assert_eq!(
            g.to_json_line(),
            r#"{"n":3,"adjacency":[[3],[3],[3],[0,1,2]],"helicity":{"3":1}}"#
        );
    }
}
