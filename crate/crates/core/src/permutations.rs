//! Decorated permutations, trip permutations of Grassmannian forests,
//! direct sum, amalgamation and cyclic rotation, and separable permutations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::oracle::nc::enumerate_nc_partitions;
use crate::oracle::GrassForest;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedColor {
    Black,
    White,
}

impl FixedColor {
    fn name(self) -> &'static str {
        match self {
            FixedColor::Black => "black",
            FixedColor::White => "white",
        }
    }
}

/// A permutation of `1..=n` whose fixed points are coloured black or white.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    images: Vec<usize>,
    colors: BTreeMap<usize, FixedColor>,
}

impl DecoratedPermutation {
    /// `images[i - 1] = w(i)`; `colors` must decorate exactly the fixed points.
    pub fn new(images: Vec<usize>, colors: BTreeMap<usize, FixedColor>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &w in &images {
            if w == 0 || w > n || seen[w] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[w] = true;
        }
        let fixed: BTreeSet<usize> = (1..=n).filter(|&i| images[i - 1] == i).collect();
        if fixed.iter().ne(colors.keys()) {
            return Err(Error::InvalidPermutation(
                "decorations must cover exactly the fixed points".into(),
            ));
        }
        Ok(DecoratedPermutation { images, colors })
    }

    /// A permutation without fixed points.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        Self::new(images, BTreeMap::new())
    }

    /// The one-letter permutation with a fixed point of the given colour.
    pub fn singleton(color: FixedColor) -> Self {
        DecoratedPermutation {
            images: vec![1],
            colors: BTreeMap::from([(1, color)]),
        }
    }

    /// `pi_{k,n} = (k+1, ..., n, 1, ..., k)` for `1 <= k <= n - 1`.
    pub fn pi(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidPermutation(format!(
                "pi_{{{k},{n}}} needs 1 <= k < n"
            )));
        }
        Self::from_images((1..=n).map(|i| (i + k - 1) % n + 1).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn decoration(&self, i: usize) -> Option<FixedColor> {
        self.colors.get(&i).copied()
    }

    pub fn inverse_images(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (i, &w) in self.images.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        inv
    }

    /// Positions `i` with `w^-1(i) > i` or with `i` a white fixed point.
    pub fn antiexcedances(&self) -> usize {
        let inv = self.inverse_images();
        (1..=self.len())
            .filter(|&i| inv[i - 1] > i || self.decoration(i) == Some(FixedColor::White))
            .count()
    }

    /// Positions `i < n` with `w(i) > w(i + 1)`.
    pub fn descents(&self) -> usize {
        self.images.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Block-diagonal concatenation, `t` shifted past `s`.
    pub fn direct_sum(&self, t: &Self) -> Self {
        let ns = self.len();
        let mut images = self.images.clone();
        images.extend(t.images.iter().map(|w| w + ns));
        let mut colors = self.colors.clone();
        colors.extend(t.colors.iter().map(|(i, c)| (i + ns, *c)));
        DecoratedPermutation { images, colors }
    }

    /// The amalgamation `s * t` on `n_s + n_t - 2` letters, modelling the
    /// tree obtained by gluing leaf `n_s` of `s` to leaf 1 of `t`.
    pub fn amalgamation(&self, t: &Self) -> Result<Self> {
        let (ns, nt) = (self.len(), t.len());
        if ns < 2 || nt < 2 {
            return Err(Error::SizeTooSmall {
                left: ns,
                right: nt,
            });
        }
        let shift = ns - 2;
        let images: Vec<usize> = (1..=ns + nt - 2)
            .map(|i| {
                if i < ns {
                    match self.apply(i) {
                        w if w == ns => t.apply(1) + shift,
                        w => w,
                    }
                } else {
                    match t.apply(i - shift) {
                        1 => self.apply(ns),
                        w => w + shift,
                    }
                }
            })
            .collect();
        Self::from_images(images)
    }

    /// `cyc(w)(i) = w(i - 1) + 1` modulo `n`; decorations move with their
    /// fixed points.
    pub fn cyclic_rotation(&self) -> Self {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let images = (1..=n)
            .map(|i| {
                let prev = if i == 1 { n } else { i - 1 };
                self.apply(prev) % n + 1
            })
            .collect();
        let colors = self.colors.iter().map(|(i, c)| (i % n + 1, *c)).collect();
        DecoratedPermutation { images, colors }
    }

    /// Relabels `self` onto the sorted label set `labels` inside `[n]`
    /// and merges it into `target`.
    fn embed_into(
        &self,
        labels: &[usize],
        target: &mut [usize],
        colors: &mut BTreeMap<usize, FixedColor>,
    ) {
        for (i, &w) in self.images.iter().enumerate() {
            target[labels[i] - 1] = labels[w - 1];
        }
        for (i, c) in &self.colors {
            colors.insert(labels[i - 1], *c);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serialisable")
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match self.decoration(i + 1) {
                Some(FixedColor::Black) => write!(f, "_{w}")?,
                Some(FixedColor::White) => write!(f, "^{w}")?,
                None => write!(f, "{w}")?,
            }
        }
        f.write_str(")")
    }
}

struct Decorations<'a>(&'a BTreeMap<usize, FixedColor>);

impl Serialize for Decorations<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, c) in self.0 {
            map.serialize_entry(&i.to_string(), c.name())?;
        }
        map.end()
    }
}

impl Serialize for DecoratedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DecoratedPermutation", 2)?;
        st.serialize_field("images", &self.images)?;
        st.serialize_field("decorations", &Decorations(&self.colors))?;
        st.end()
    }
}

/// The rules-of-the-road permutation: a trip entering internal vertex `v`
/// along its `i`-th edge (clockwise) leaves along edge `i + h(v) mod deg(v)`.
/// A trip returning to its start is a fixed point, black when the leaf it
/// bounced off has helicity 0.
pub fn trip_permutation(g: &GrassForest) -> DecoratedPermutation {
    let shape = g.shape();
    let n = shape.n();
    let mut images = vec![0; n];
    let mut colors = BTreeMap::new();
    for (start, image) in images.iter_mut().enumerate() {
        let mut from = start;
        let mut at = shape.neighbors(start)[0];
        let mut bounced = None;
        while !shape.is_boundary(at) {
            let nbrs = shape.neighbors(at);
            let i = nbrs
                .iter()
                .position(|&u| u == from)
                .expect("arrived along an edge");
            let h = g.vertex_helicity(at) as usize;
            if nbrs.len() == 1 {
                bounced = Some(h);
            }
            from = at;
            at = nbrs[(i + h) % nbrs.len()];
        }
        *image = at + 1;
        if at == start {
            let color = if bounced == Some(0) {
                FixedColor::Black
            } else {
                FixedColor::White
            };
            colors.insert(start + 1, color);
        }
    }
    DecoratedPermutation::new(images, colors)
        .expect("trips of a forest form a decorated permutation")
}

fn contains_pattern(w: &[usize], last: usize, pattern: [usize; 4]) -> bool {
    // occurrences whose final letter is w[last]
    let rank_ok = |idx: [usize; 4]| {
        (0..4).all(|a| (0..4).all(|b| (pattern[a] < pattern[b]) == (w[idx[a]] < w[idx[b]])))
    };
    for i in 0..last {
        for j in i + 1..last {
            for k in j + 1..last {
                if rank_ok([i, j, k, last]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Histogram of separable permutations of `[n]` (those avoiding 2413 and
/// 3142) by number of descents, or by antiexcedances when `by_descents` is
/// false. Prefixes are extended one letter at a time and discarded as soon as
/// the new letter completes a forbidden pattern.
pub fn enumerate_separable(
    n: usize,
    by_descents: bool,
    budget: u64,
) -> Result<BTreeMap<usize, u64>> {
    let mut hist = BTreeMap::new();
    let mut visited = 0u64;
    let mut w = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(
        n: usize,
        w: &mut Vec<usize>,
        used: &mut Vec<bool>,
        by_descents: bool,
        visited: &mut u64,
        budget: u64,
        hist: &mut BTreeMap<usize, u64>,
    ) -> Result<()> {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        if w.len() == n {
            let p = DecoratedPermutation::new(
                w.clone(),
                (1..=n)
                    .filter(|&i| w[i - 1] == i)
                    .map(|i| (i, FixedColor::Black))
                    .collect(),
            )
            .expect("a permutation");
            let stat = if by_descents {
                p.descents()
            } else {
                p.antiexcedances()
            };
            *hist.entry(stat).or_insert(0) += 1;
            return Ok(());
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            w.push(v);
            let last = w.len() - 1;
            if !contains_pattern(w, last, [2, 4, 1, 3]) && !contains_pattern(w, last, [3, 1, 4, 2])
            {
                used[v] = true;
                go(n, w, used, by_descents, visited, budget, hist)?;
                used[v] = false;
            }
            w.pop();
        }
        Ok(())
    }
    go(
        n,
        &mut w,
        &mut used,
        by_descents,
        &mut visited,
        budget,
        &mut hist,
    )?;
    Ok(hist)
}

/// A Grassmannian tree or forest permutation with the mom-dimension of the
/// forests it labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledPermutation {
    pub perm: DecoratedPermutation,
    pub mom_dimension: usize,
}

fn star_dimension(k: usize, m: usize) -> usize {
    if k == 1 || k + 1 == m {
        m - 1
    } else {
        2 * m - 4
    }
}

fn insert_checked(
    level: &mut BTreeMap<DecoratedPermutation, usize>,
    perm: DecoratedPermutation,
    dim: usize,
) -> Result<bool> {
    match level.get(&perm) {
        Some(&d) if d != dim => Err(Error::InvalidPermutation(format!(
            "{perm} reached with mom-dimensions {d} and {dim}"
        ))),
        Some(_) => Ok(false),
        None => {
            level.insert(perm, dim);
            Ok(true)
        }
    }
}

/// Grassmannian tree permutations on `1..=max_n` letters: the closure of
/// `(_1)`, `(^1)`, `(2,1)` and every `pi_{k,m}` under amalgamation and cyclic
/// rotation. Index `m` of the result holds the permutations on `m` letters.
pub fn grass_tree_permutation_levels(
    max_n: usize,
    budget: u64,
) -> Result<Vec<BTreeMap<DecoratedPermutation, usize>>> {
    let mut levels: Vec<BTreeMap<DecoratedPermutation, usize>> = vec![BTreeMap::new(); max_n + 1];
    let mut work = 0u64;
    if max_n >= 1 {
        levels[1].insert(DecoratedPermutation::singleton(FixedColor::Black), 0);
        levels[1].insert(DecoratedPermutation::singleton(FixedColor::White), 0);
    }
    if max_n >= 2 {
        levels[2].insert(DecoratedPermutation::from_images(vec![2, 1])?, 1);
    }
    for m in 3..=max_n {
        let mut level = BTreeMap::new();
        for k in 1..m {
            insert_checked(
                &mut level,
                DecoratedPermutation::pi(k, m)?,
                star_dimension(k, m),
            )?;
        }
        for a in 3..m {
            let b = m + 2 - a;
            for (s, ds) in &levels[a] {
                for (t, dt) in &levels[b] {
                    work += 1;
                    if work > budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    insert_checked(&mut level, s.amalgamation(t)?, ds + dt - 1)?;
                }
            }
        }
        // close under rotation and gluing an edge on either side
        let edge = DecoratedPermutation::from_images(vec![2, 1])?;
        let mut frontier: Vec<(DecoratedPermutation, usize)> =
            level.iter().map(|(p, d)| (p.clone(), *d)).collect();
        while let Some((p, d)) = frontier.pop() {
            for q in [
                p.cyclic_rotation(),
                p.amalgamation(&edge)?,
                edge.amalgamation(&p)?,
            ] {
                work += 1;
                if work > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                if insert_checked(&mut level, q.clone(), d)? {
                    frontier.push((q, d));
                }
            }
        }
        levels[m] = level;
    }
    Ok(levels)
}

/// Grassmannian tree permutations on exactly `n` letters.
pub fn enumerate_grass_tree_permutations(
    n: usize,
    budget: u64,
) -> Result<Vec<LabelledPermutation>> {
    let mut levels = grass_tree_permutation_levels(n, budget)?;
    Ok(levels
        .swap_remove(n)
        .into_iter()
        .map(|(perm, mom_dimension)| LabelledPermutation {
            perm,
            mom_dimension,
        })
        .collect())
}

/// Grassmannian forest permutations on `n` letters, assembled from tree
/// permutations placed on the blocks of each noncrossing partition of `[n]`.
pub fn enumerate_grass_forest_permutations(
    n: usize,
    budget: u64,
) -> Result<Vec<LabelledPermutation>> {
    let levels = grass_tree_permutation_levels(n, budget)?;
    let mut out = Vec::new();
    for partition in enumerate_nc_partitions(n) {
        let choices: Vec<Vec<(&DecoratedPermutation, usize)>> = partition
            .blocks()
            .iter()
            .map(|b| levels[b.len()].iter().map(|(p, d)| (p, *d)).collect())
            .collect();
        let mut pick = vec![0usize; choices.len()];
        'outer: loop {
            if out.len() as u64 > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            let mut images = vec![0; n];
            let mut colors = BTreeMap::new();
            let mut dim = 0;
            for ((block, c), &i) in partition.blocks().iter().zip(&choices).zip(&pick) {
                c[i].0.embed_into(block, &mut images, &mut colors);
                dim += c[i].1;
            }
            out.push(LabelledPermutation {
                perm: DecoratedPermutation::new(images, colors)?,
                mom_dimension: dim,
            });
            for j in 0..pick.len() {
                pick[j] += 1;
                if pick[j] < choices[j].len() {
                    continue 'outer;
                }
                pick[j] = 0;
            }
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Closure of the tree permutations on at most `n` letters under direct sum
/// and cyclic rotation, restricted to `n` letters.
pub fn forest_permutation_closure(n: usize, budget: u64) -> Result<BTreeSet<DecoratedPermutation>> {
    let levels = grass_tree_permutation_levels(n, budget)?;
    let mut by_size: Vec<BTreeSet<DecoratedPermutation>> =
        levels.iter().map(|l| l.keys().cloned().collect()).collect();
    let mut work = 0u64;
    for m in 2..=n {
        for a in 1..m {
            let (left, right): (Vec<_>, Vec<_>) = (
                by_size[a].iter().cloned().collect(),
                by_size[m - a].iter().cloned().collect(),
            );
            for s in &left {
                for t in &right {
                    work += 1;
                    if work > budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    by_size[m].insert(s.direct_sum(t));
                }
            }
        }
        let mut frontier: Vec<DecoratedPermutation> = by_size[m].iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            let r = p.cyclic_rotation();
            if by_size[m].insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    Ok(by_size.swap_remove(n))
}

/// Histogram of labelled permutations by (antiexcedances, mom-dimension).
pub fn histogram_by_statistics(perms: &[LabelledPermutation]) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for p in perms {
        *out.entry((p.perm.antiexcedances(), p.mom_dimension))
            .or_insert(0) += 1;
    }
    out
}
