//! Rank generating functions of contracted plabic and Grassmannian trees
//! and forests, refined by boundary size (`x`), helicity (`y`) and
//! mom-dimension (`q`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{rat, BivarPoly, Rational};
use crate::series::TruncSeries;
use crate::transforms::{speicher_transform, tree_transform, WeightFunction};

/// Working order used when nothing else is configured; covers `n <= 12`
/// with guard terms.
pub const DEFAULT_ORDER: usize = 14;

/// Plabic graphs only allow white and black vertices; Grassmannian graphs
/// also allow generic helicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Plabic,
    Grassmannian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GFKind {
    PlabicTree,
    PlabicForest,
    GrassTree,
    GrassForest,
}

impl GFKind {
    pub const ALL: [GFKind; 4] = [
        GFKind::PlabicTree,
        GFKind::PlabicForest,
        GFKind::GrassTree,
        GFKind::GrassForest,
    ];

    pub fn family(self) -> Family {
        match self {
            GFKind::PlabicTree | GFKind::PlabicForest => Family::Plabic,
            GFKind::GrassTree | GFKind::GrassForest => Family::Grassmannian,
        }
    }

    pub fn is_forest(self) -> bool {
        matches!(self, GFKind::PlabicForest | GFKind::GrassForest)
    }

    pub fn tree_kind(self) -> GFKind {
        match self.family() {
            Family::Plabic => GFKind::PlabicTree,
            Family::Grassmannian => GFKind::GrassTree,
        }
    }

    pub fn forest_kind(self) -> GFKind {
        match self.family() {
            Family::Plabic => GFKind::PlabicForest,
            Family::Grassmannian => GFKind::GrassForest,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GFKind::PlabicTree => "plabic-tree",
            GFKind::PlabicForest => "plabic-forest",
            GFKind::GrassTree => "grass-tree",
            GFKind::GrassForest => "grass-forest",
        }
    }
}

impl fmt::Display for GFKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GFKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GFKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown kind `{s}`")))
    }
}

fn xpoly(order: usize, terms: &[(usize, BivarPoly)]) -> TruncSeries {
    TruncSeries::polynomial(order, terms.iter().cloned())
}

fn p(terms: &[(i64, u32, u32)]) -> BivarPoly {
    BivarPoly::from_terms(terms.iter().map(|&(c, dy, dq)| (rat(c), dy, dq)))
}

/// The kernel `C(x, y, q)` whose compositional inverse gives the tree series.
///
/// Plabic: `x(1 - q^2 x^2 y) / ((1 + xq)(1 + xyq))`.
/// Grassmannian: `x(1 - x(1+y)q^2 - x^2 y q^2 (1+q-q^2) - x^4 y^2 q^5 (1+q))
/// / ((1 + xq)(1 + xyq)(1 - xq^2)(1 - xyq^2))`.
pub fn build_c(family: Family, order: usize) -> TruncSeries {
    let one = BivarPoly::one();
    let (num, den) = match family {
        Family::Plabic => {
            let num = xpoly(order, &[(1, one.clone()), (3, p(&[(-1, 1, 2)]))]);
            let den = xpoly(order, &[(0, one.clone()), (1, p(&[(1, 0, 1)]))])
                .mul(&xpoly(order, &[(0, one.clone()), (1, p(&[(1, 1, 1)]))]));
            (num, den)
        }
        Family::Grassmannian => {
            let num = xpoly(
                order,
                &[
                    (1, one.clone()),
                    (2, p(&[(-1, 0, 2), (-1, 1, 2)])),
                    (3, p(&[(-1, 1, 2), (-1, 1, 3), (1, 1, 4)])),
                    (5, p(&[(-1, 2, 5), (-1, 2, 6)])),
                ],
            );
            let factors = [
                p(&[(1, 0, 1)]),
                p(&[(1, 1, 1)]),
                p(&[(-1, 0, 2)]),
                p(&[(-1, 1, 2)]),
            ];
            let den = factors.iter().fold(TruncSeries::one(order), |acc, c| {
                acc.mul(&xpoly(order, &[(0, one.clone()), (1, c.clone())]))
            });
            (num, den)
        }
    };
    num.div(&den).expect("denominator has constant term 1")
}

/// Per-vertex weight `f(d)` for internal vertices of degree `d >= 3`.
///
/// Non-generic colourings carry `q^(d-2) (-1)^(d-1) (1 + y^(d-2))`, the sign
/// collapsing each same-colour refinement class to a single contribution;
/// Grassmannian vertices add `q^(2d-5) (y + ... + y^(d-3))` for the generic
/// helicities.
pub fn vertex_weight(family: Family, order: usize) -> WeightFunction {
    WeightFunction::from_fn(3, order, move |d| {
        let d32 = d as u32;
        let sign = if d % 2 == 1 { 1 } else { -1 };
        let mut w = p(&[(sign, 0, d32 - 2), (sign, d32 - 2, d32 - 2)]);
        if family == Family::Grassmannian {
            for k in 2..=d32.saturating_sub(2) {
                w += &BivarPoly::term(1, k - 1, 2 * d32 - 5);
            }
        }
        w
    })
}

/// `x (1 + y + y q C^<-1>(x))`.
pub fn build_tree_gf(family: Family, order: usize) -> Result<TruncSeries> {
    let c = build_c(family, order.max(1));
    let inv = c.reversion()?;
    let mut inner = inv.scale(&BivarPoly::term(1, 1, 1));
    inner.add_monomial(0, &p(&[(1, 0, 0), (1, 1, 0)]));
    Ok(inner.shift_up(1).truncate(order))
}

/// Second route to the tree series: `x(1 + y) + y q H(x)` with `H` the tree
/// transform of [`vertex_weight`].
pub fn build_tree_gf_via_transform(family: Family, order: usize) -> Result<TruncSeries> {
    let order_w = order.max(2);
    let h = tree_transform(&vertex_weight(family, order_w).to_series(order_w))?;
    let mut g = h.scale(&BivarPoly::term(1, 1, 1));
    g.add_monomial(1, &p(&[(1, 0, 0), (1, 1, 0)]));
    Ok(g.truncate(order))
}

/// `x G_forest(x) = (x / (1 + G_tree(x)))^<-1>`.
pub fn build_forest_gf(family: Family, order: usize) -> Result<TruncSeries> {
    let tree = build_tree_gf(family, order)?;
    forest_from_tree(&tree)
}

/// Forest series from an already built tree series of the same family.
pub fn forest_from_tree(tree: &TruncSeries) -> Result<TruncSeries> {
    let mut block = tree.clone();
    block.add_monomial(0, &BivarPoly::one());
    speicher_transform(&block)
}

pub fn build(kind: GFKind, order: usize) -> Result<TruncSeries> {
    if kind.is_forest() {
        build_forest_gf(kind.family(), order)
    } else {
        build_tree_gf(kind.family(), order)
    }
}

/// `[x^n]` of the forest series through `(1 / (n+1)) [x^n] (1 + G_tree)^(n+1)`,
/// bypassing the second reversion.
pub fn forest_coefficient_via_lagrange(family: Family, n: usize) -> Result<BivarPoly> {
    let tree = build_tree_gf(family, n)?;
    forest_coefficient_from_tree(&tree, n)
}

/// As [`forest_coefficient_via_lagrange`], reusing a tree series of order `>= n`.
pub fn forest_coefficient_from_tree(tree: &TruncSeries, n: usize) -> Result<BivarPoly> {
    if tree.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: tree.order(),
        });
    }
    let mut base = tree.truncate(n);
    base.add_monomial(0, &BivarPoly::one());
    let power = base.pow(n as u32 + 1);
    let coeff = power
        .coeff(n)
        .scale(&Rational::new(BigInt::from(1), BigInt::from(n + 1)));
    if !coeff.is_integral() {
        return Err(Error::IntegralityViolation {
            n,
            detail: coeff.to_string(),
        });
    }
    Ok(coeff)
}

/// Forest coefficient table `(k, r) -> count` via the Lagrange route.
pub fn forest_gf_via_lagrange(family: Family, n: usize) -> Result<BTreeMap<(u32, u32), BigUint>> {
    let coeff = forest_coefficient_via_lagrange(family, n)?;
    counts_of(&coeff, n)
}

/// `(helicity k, mom-dimension r) -> count` table of `[x^n]`, asserting the
/// counting constraints: integral, nonnegative, `k <= n`.
pub fn coefficient_counts(series: &TruncSeries, n: usize) -> Result<BTreeMap<(u32, u32), BigUint>> {
    if series.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: series.order(),
        });
    }
    counts_of(series.coeff(n), n)
}

fn counts_of(coeff: &BivarPoly, n: usize) -> Result<BTreeMap<(u32, u32), BigUint>> {
    let ints = coeff
        .integer_terms()
        .ok_or_else(|| Error::IntegralityViolation {
            n,
            detail: coeff.to_string(),
        })?;
    let mut out = BTreeMap::new();
    for ((k, r), v) in ints {
        if v.is_negative() {
            return Err(Error::CountingViolation {
                n,
                detail: format!("negative coefficient {v} at y^{k} q^{r}"),
            });
        }
        if k as usize > n {
            return Err(Error::CountingViolation {
                n,
                detail: format!("helicity {k} exceeds {n}"),
            });
        }
        out.insert((k, r), v.magnitude().clone());
    }
    Ok(out)
}

/// `[x^n y^k]` as a polynomial in `q`.
pub fn q_polynomial(series: &TruncSeries, n: usize, k: u32) -> Result<BivarPoly> {
    if series.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: series.order(),
        });
    }
    Ok(series.coeff(n).y_slice(k))
}

/// `[x^n y^k] G_forest(x, y, -1)`.
pub fn euler_characteristic(n: usize, k: u32) -> Result<Rational> {
    let forest = build_forest_gf(Family::Grassmannian, n)?;
    euler_from_forest(&forest, n, k)
}

/// As [`euler_characteristic`], reusing a built Grassmannian forest series.
pub fn euler_from_forest(forest: &TruncSeries, n: usize, k: u32) -> Result<Rational> {
    let row = q_polynomial(forest, n, k)?;
    Ok(row.eval_q(&rat(-1)).constant_term())
}

/// All four series built once at a common order.
#[derive(Clone, Debug)]
pub struct GfTables {
    pub order: usize,
    pub plabic_tree: TruncSeries,
    pub plabic_forest: TruncSeries,
    pub grass_tree: TruncSeries,
    pub grass_forest: TruncSeries,
}

impl GfTables {
    pub fn build(order: usize) -> Result<Self> {
        let (plabic, grass) = rayon::join(
            || -> Result<_> {
                let t = build_tree_gf(Family::Plabic, order)?;
                let f = forest_from_tree(&t)?;
                Ok((t, f))
            },
            || -> Result<_> {
                let t = build_tree_gf(Family::Grassmannian, order)?;
                let f = forest_from_tree(&t)?;
                Ok((t, f))
            },
        );
        let (plabic_tree, plabic_forest) = plabic?;
        let (grass_tree, grass_forest) = grass?;
        Ok(GfTables {
            order,
            plabic_tree,
            plabic_forest,
            grass_tree,
            grass_forest,
        })
    }

    pub fn get(&self, kind: GFKind) -> &TruncSeries {
        match kind {
            GFKind::PlabicTree => &self.plabic_tree,
            GFKind::PlabicForest => &self.plabic_forest,
            GFKind::GrassTree => &self.grass_tree,
            GFKind::GrassForest => &self.grass_forest,
        }
    }
}

/// Total of all counts in a table.
pub fn total(table: &BTreeMap<(u32, u32), BigUint>) -> BigUint {
    table.values().fold(BigUint::zero(), |a, b| a + b)
}
