use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::forest::{
    for_each_decoration, for_each_forest_on, forest_helicity, forest_mom_dimension,
};
use super::nc::{enumerate_nc_partitions, NcPartition};
use super::schroeder::schroeder_table;
use crate::error::{Error, Result};
use crate::genfun::{Family, GFKind};

/// Default ceiling on decorated objects visited by one histogram run.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub budget: u64,
    /// Fault injection for negative-control runs: added to the
    /// mom-dimension of every component with three or more boundary
    /// vertices. Zero in normal use.
    pub mom_dimension_offset: i64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            mom_dimension_offset: 0,
        }
    }
}

pub type Histogram = BTreeMap<(u32, u32), BigUint>;

/// Exact histogram over (helicity, mom-dimension) of the Grassmannian or
/// plabic trees or forests on `n` boundary vertices, by literal enumeration
/// of shapes and decorations.
pub fn count_by_statistics(
    n: usize,
    kind: GFKind,
    contracted_only: bool,
    config: &OracleConfig,
) -> Result<Histogram> {
    let partitions: Vec<NcPartition> = if kind.is_forest() {
        enumerate_nc_partitions(n)
    } else if n == 0 {
        Vec::new()
    } else {
        vec![NcPartition::new(n, vec![(1..=n).collect()]).expect("single block")]
    };
    let plabic = kind.family() == Family::Plabic;
    let table = schroeder_table(n.saturating_sub(1));
    let visited = AtomicU64::new(0);
    let exceeded = AtomicBool::new(false);

    let partial: Vec<BTreeMap<(u32, u32), u64>> = partitions
        .par_iter()
        .map(|p| {
            let mut hist = BTreeMap::new();
            if exceeded.load(Ordering::Relaxed) {
                return hist;
            }
            for_each_forest_on(p, &table, &mut |shape| {
                if exceeded.load(Ordering::Relaxed) {
                    return;
                }
                let comps = shape.components();
                let mut local = 0u64;
                for_each_decoration(&shape, contracted_only, plabic, &mut |h| {
                    local += 1;
                    let k = forest_helicity(&shape, h);
                    let r = forest_mom_dimension(&shape, &comps, h, config.mom_dimension_offset);
                    *hist.entry((k, r)).or_insert(0u64) += 1;
                });
                if visited.fetch_add(local, Ordering::Relaxed) + local > config.budget {
                    exceeded.store(true, Ordering::Relaxed);
                }
            });
            hist
        })
        .collect();

    if exceeded.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            budget: config.budget,
        });
    }
    let mut out: Histogram = BTreeMap::new();
    for hist in partial {
        for (key, c) in hist {
            *out.entry(key).or_default() += BigUint::from(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist(entries: &[((u32, u32), u32)]) -> Histogram {
        entries
            .iter()
            .map(|&(k, c)| (k, BigUint::from(c)))
            .collect()
    }

    #[test]
    fn small_trees() {
        let cfg = OracleConfig::default();
        assert_eq!(
            count_by_statistics(1, GFKind::GrassTree, true, &cfg).unwrap(),
            hist(&[((0, 0), 1), ((1, 0), 1)])
        );
        assert_eq!(
            count_by_statistics(2, GFKind::GrassTree, true, &cfg).unwrap(),
            hist(&[((1, 1), 1)])
        );
        assert_eq!(
            count_by_statistics(3, GFKind::GrassTree, true, &cfg).unwrap(),
            hist(&[((1, 2), 1), ((2, 2), 1)])
        );
    }

    #[test]
    fn golden_rows() {
        let cfg = OracleConfig::default();
        let f4 = count_by_statistics(4, GFKind::GrassForest, true, &cfg).unwrap();
        let row: Vec<u32> = (0..=4)
            .map(|r| f4.get(&(2, r)).map_or(0, |c| c.try_into().unwrap()))
            .collect();
        assert_eq!(row, [6, 12, 10, 4, 1]);
        let f5 = count_by_statistics(5, GFKind::GrassForest, true, &cfg).unwrap();
        let row: Vec<u32> = (0..=6)
            .map(|r| f5.get(&(2, r)).map_or(0, |c| c.try_into().unwrap()))
            .collect();
        assert_eq!(row, [10, 30, 40, 30, 15, 5, 1]);
    }

    #[test]
    fn budget_and_fault_injection() {
        let tight = OracleConfig {
            budget: 10,
            ..OracleConfig::default()
        };
        assert_eq!(
            count_by_statistics(6, GFKind::GrassForest, true, &tight),
            Err(Error::BudgetExceeded { budget: 10 })
        );
        let skewed = OracleConfig {
            mom_dimension_offset: 1,
            ..OracleConfig::default()
        };
        assert_eq!(
            count_by_statistics(3, GFKind::GrassTree, true, &skewed).unwrap(),
            hist(&[((1, 3), 1), ((2, 3), 1)])
        );
    }
}
