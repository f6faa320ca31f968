/// A rooted ordered tree in which every internal node has at least two
/// children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchroederTree {
    Leaf,
    Node(Vec<SchroederTree>),
}

impl SchroederTree {
    pub fn leaves(&self) -> usize {
        match self {
            SchroederTree::Leaf => 1,
            SchroederTree::Node(c) => c.iter().map(SchroederTree::leaves).sum(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            SchroederTree::Leaf => 0,
            SchroederTree::Node(c) => {
                1 + c.iter().map(SchroederTree::internal_nodes).sum::<usize>()
            }
        }
    }
}

/// All Schröder trees with `leaves` leaves for each size `0..=max_leaves`
/// (the entry for zero leaves is empty).
pub fn schroeder_table(max_leaves: usize) -> Vec<Vec<SchroederTree>> {
    let mut table: Vec<Vec<SchroederTree>> = vec![Vec::new(); max_leaves + 1];
    if max_leaves >= 1 {
        table[1].push(SchroederTree::Leaf);
    }
    for m in 2..=max_leaves {
        let mut out = Vec::new();
        // ordered sequences of at least two subtrees with m leaves in total
        fn sequences(
            left: usize,
            table: &[Vec<SchroederTree>],
            cur: &mut Vec<SchroederTree>,
            out: &mut Vec<SchroederTree>,
        ) {
            if left == 0 {
                if cur.len() >= 2 {
                    out.push(SchroederTree::Node(cur.clone()));
                }
                return;
            }
            for first in 1..=left {
                if cur.is_empty() && first == left {
                    continue;
                }
                for t in &table[first] {
                    cur.push(t.clone());
                    sequences(left - first, table, cur, out);
                    cur.pop();
                }
            }
        }
        sequences(m, &table, &mut Vec::new(), &mut out);
        table[m] = out;
    }
    table
}

pub fn enumerate_schroeder(leaves: usize) -> Vec<SchroederTree> {
    schroeder_table(leaves).swap_remove(leaves)
}
