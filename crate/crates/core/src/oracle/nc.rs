use std::fmt;

use serde::Serialize;

/// A noncrossing partition of `{1, ..., n}`. Blocks are sorted internally
/// and listed by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NcPartition {
    /// Builds a partition from arbitrary blocks, normalising their order.
    /// Returns `None` unless the blocks are nonempty, disjoint, cover
    /// `1..=n` and pairwise noncrossing.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return None;
        }
        blocks.sort();
        let mut seen = vec![false; n + 1];
        for &i in blocks.iter().flatten() {
            if i == 0 || i > n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return None;
        }
        let p = NcPartition { n, blocks };
        p.is_noncrossing().then_some(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Vec::len)
    }

    fn is_noncrossing(&self) -> bool {
        is_noncrossing(&self.blocks)
    }
}

/// Pairwise noncrossing: every other block lies inside a single gap of
/// each block, a gap being the labels strictly between two cyclically
/// consecutive elements.
pub fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    let gap_of = |block: &[usize], x: usize| block.iter().filter(|&&e| e < x).count() % block.len();
    blocks.iter().enumerate().all(|(i, p)| {
        blocks
            .iter()
            .enumerate()
            .all(|(j, r)| i == j || r.iter().all(|&x| gap_of(p, x) == gap_of(p, r[0])))
    })
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// All noncrossing partitions of `[n]`, each exactly once. The block
/// containing the smallest element splits the rest into independent gaps.
pub fn enumerate_nc_partitions(n: usize) -> Vec<NcPartition> {
    let mut memo: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![vec![]]];
    for len in 1..=n {
        let mut out = Vec::new();
        // block containing 0 is {0} plus a subset of 1..len
        for mask in 0u64..(1u64 << (len - 1)) {
            let mut block = vec![0];
            block.extend((1..len).filter(|i| mask >> (i - 1) & 1 == 1));
            let mut gaps = Vec::new();
            for w in block.windows(2) {
                gaps.push((w[0] + 1, w[1]));
            }
            gaps.push((*block.last().unwrap() + 1, len));
            let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block.clone()]];
            for (lo, hi) in gaps {
                let mut next = Vec::new();
                for base in &partial {
                    for gap in &memo[hi - lo] {
                        let mut p = base.clone();
                        p.extend(gap.iter().map(|b| b.iter().map(|i| i + lo).collect()));
                        next.push(p);
                    }
                }
                partial = next;
            }
            out.extend(partial);
        }
        memo.push(out);
    }
    memo.swap_remove(n)
        .into_iter()
        .map(|blocks| {
            let blocks = blocks
                .into_iter()
                .map(|b| b.into_iter().map(|i| i + 1).collect())
                .collect();
            NcPartition::new(n, blocks).expect("generated partitions are noncrossing")
        })
        .collect()
}
