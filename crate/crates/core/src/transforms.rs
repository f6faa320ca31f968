//! Exponential-formula analogues for noncrossing partitions, series-reduced
//! planar trees, planar forests and polygon dissections.
//!
//! Each transform maps the generating function of a per-block (or
//! per-vertex) weight to the generating function of the aggregate objects.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::BivarPoly;
use crate::series::TruncSeries;

/// A weight attached to a block of a given size or a vertex of a given degree.
#[derive(Clone, Debug)]
pub enum WeightFunction {
    /// Explicit values by size/degree; sizes below `min_degree` are ignored.
    Tabulated {
        min_degree: usize,
        values: BTreeMap<usize, BivarPoly>,
    },
    /// A closed-form generating function `sum f(n) x^n`.
    Series(TruncSeries),
}

impl WeightFunction {
    /// Tabulates `f(d)` for `min_degree <= d <= order`.
    pub fn from_fn(min_degree: usize, order: usize, f: impl Fn(usize) -> BivarPoly) -> Self {
        WeightFunction::Tabulated {
            min_degree,
            values: (min_degree..=order).map(|d| (d, f(d))).collect(),
        }
    }

    /// `sum_{d >= min_degree} f(d) x^d` truncated at `order`.
    pub fn to_series(&self, order: usize) -> TruncSeries {
        match self {
            WeightFunction::Tabulated { min_degree, values } => TruncSeries::polynomial(
                order,
                values.range(*min_degree..).map(|(d, v)| (*d, v.clone())),
            ),
            WeightFunction::Series(s) => s.truncate(order),
        }
    }

    /// `1 + sum_{n >= 1} f(n) x^n`, the block series used by the
    /// noncrossing-partition transform.
    pub fn to_block_series(&self, order: usize) -> TruncSeries {
        let mut s = self.to_series(order);
        s.add_monomial(0, &(&BivarPoly::one() - s.coeff(0)));
        s
    }
}

/// Noncrossing-partition transform: from `F = 1 + sum f(n) x^n` returns
/// `H = 1 + sum h(n) x^n` with `h(n)` the sum over noncrossing partitions of
/// `[n]` of the product of `f(|block|)`. Uses `x H(x) = (x / F(x))^<-1>`.
pub fn speicher_transform(block: &TruncSeries) -> Result<TruncSeries> {
    if !block.coeff(0).is_one() {
        return Err(Error::InvalidWeight { degree: 0 });
    }
    let kernel = block.inverse()?.shift_up(1);
    kernel.reversion()?.shift_down(1)
}

fn check_tree_weight(weight: &TruncSeries) -> Result<()> {
    for degree in 0..=weight.order().min(2) {
        if !weight.coeff(degree).is_zero() {
            return Err(Error::InvalidWeight { degree });
        }
    }
    Ok(())
}

/// Series-reduced planar tree transform: from `F = sum_{d >= 3} f(d) x^d`
/// returns `H = x^2 + sum_{n >= 3} h(n) x^n`, where `h(n)` sums the product
/// of `f(deg v)` over internal vertices of every tree with `n` leaves.
/// Uses `H(x) / x = (x - F(x) / x)^<-1>`.
pub fn tree_transform(weight: &TruncSeries) -> Result<TruncSeries> {
    check_tree_weight(weight)?;
    let order = weight.order();
    if order < 2 {
        return Err(Error::InsufficientOrder {
            needed: 2,
            available: order,
        });
    }
    let reduced = weight.shift_down(1)?;
    let kernel = &TruncSeries::x(order - 1) - &reduced;
    Ok(kernel.reversion()?.shift_up(1))
}

/// Polygon-dissection transform: `h(n)` sums the product of `f(#P)` over the
/// polygons `P` of every dissection of the `n`-gon. Same functional equation
/// as [`tree_transform`], through the tree/dissection duality.
pub fn dissection_transform(weight: &TruncSeries) -> Result<TruncSeries> {
    tree_transform(weight)
}

/// Planar-forest transform: `h(n)` sums, over series-reduced planar forests
/// on `n` boundary vertices, the product of `g(deg v)` over internal vertices;
/// a one-leaf component carries weight `single_leaf`.
pub fn forest_transform(weight: &TruncSeries, single_leaf: &BivarPoly) -> Result<TruncSeries> {
    let trees = tree_transform(weight)?;
    let mut block = trees;
    block.add_monomial(1, single_leaf);
    block.add_monomial(0, &BivarPoly::one());
    speicher_transform(&block)
}

/// Number of series-reduced planar trees with `n` leaves and `r[i]` internal
/// vertices of degree `i + 3`: `(n + |r| - 2)! / ((n - 1)! r_3! ... r_n!)`,
/// or zero when the type is inconsistent with `n`.
pub fn tree_type_count(n: usize, r: &[usize]) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let excess: usize = r.iter().enumerate().map(|(i, &c)| c * (i + 1)).sum();
    if excess + 2 != n || r.iter().enumerate().any(|(i, &c)| c > 0 && i + 3 > n) {
        return BigUint::zero();
    }
    let vertices: usize = r.iter().sum();
    let mut out = factorial(n + vertices - 2) / factorial(n - 1);
    for &c in r {
        out /= factorial(c);
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
