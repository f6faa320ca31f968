//! Truncated power series in `x` with [`BivarPoly`] coefficients.
//!
//! A series of order `N` knows its coefficients of `x^0..=x^N` exactly and
//! nothing beyond. Binary operations truncate to the smaller order.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{rat, BivarPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BivarPoly>,
}

impl TruncSeries {
    /// Series with the given coefficients of `x^0, x^1, ...`, known to
    /// order `order`; missing coefficients are zero, extra ones are dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BivarPoly>) -> Self {
        coeffs.resize(order + 1, BivarPoly::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BivarPoly::one())
    }

    pub fn constant(order: usize, c: BivarPoly) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, BivarPoly::one())
    }

    /// `c * x^k`.
    pub fn monomial(order: usize, k: usize, c: BivarPoly) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series of a polynomial in `x`, given as `(power, coefficient)` pairs.
    pub fn polynomial<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, BivarPoly)>,
    {
        let mut s = Self::zero(order);
        for (k, c) in terms {
            if k <= order {
                s.coeffs[k] += &c;
            }
        }
        s
    }

    /// Series with coefficient `f(k)` at `x^k`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BivarPoly) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.
    ///
    /// # Panics
    /// If `k` exceeds the known order.
    pub fn coeff(&self, k: usize) -> &BivarPoly {
        assert!(
            k <= self.order(),
            "x^{k} is beyond the known order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BivarPoly::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map_coeffs(&self, f: impl Fn(&BivarPoly) -> BivarPoly) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &BivarPoly) -> Self {
        self.map_coeffs(|a| a * c)
    }

    /// Substitutes `q := v` in every coefficient.
    pub fn eval_q(&self, v: &Rational) -> Self {
        self.map_coeffs(|a| a.eval_q(v))
    }

    pub fn eval_y(&self, v: &Rational) -> Self {
        self.map_coeffs(|a| a.eval_y(v))
    }

    /// Multiplies by `x^k`; the known order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BivarPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs }
    }

    /// Divides by `x^k`; the known order shrinks by `k`.
    ///
    /// Fails if a coefficient below `x^k` is nonzero or the series is too short.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.order() < k {
            return Err(Error::InsufficientOrder {
                needed: k,
                available: self.order(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotInvertible(
                "series is not divisible by the requested power of x",
            ));
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: (1..=self.order())
                .map(|k| self.coeffs[k].scale(&rat(k as i64)))
                .collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BivarPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TruncSeries { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; `[x^0]` must be a nonzero rational constant.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonUnitConstantTerm)?;
        let inv0 = c0.recip();
        let mut out = vec![BivarPoly::constant(inv0.clone())];
        for n in 1..=self.order() {
            let mut acc = BivarPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !out[n - i].is_zero() {
                    acc += &(&self.coeffs[i] * &out[n - i]);
                }
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self / rhs` to the common order.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let order = self.order().min(rhs.order());
        Ok(self.truncate(order).mul(&rhs.truncate(order).inverse()?))
    }

    /// `self(inner(x))`, truncated to the smaller order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner; each multiplication by `inner` raises the valuation by one,
        // so terms above x^order never contribute.
        let mut acc = Self::zero(order);
        for k in (0..=order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse by Newton iteration, doubling the number of
    /// correct coefficients per step.
    ///
    /// Requires `[x^0] = 0` and `[x^1]` a nonzero rational constant.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("constant term is nonzero"));
        }
        if self.order() < 1 {
            return Err(Error::NotInvertible("order below 1"));
        }
        let lead = self.coeffs[1]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NotInvertible(
                "linear coefficient is not a nonzero constant",
            ))?;
        let n = self.order();
        let deriv = self.derivative();
        let x_full = Self::x(n);
        let mut g = Self::monomial(1, 1, BivarPoly::constant(lead.recip()));
        let mut known = 1;
        while known < n {
            let target = (2 * known).min(n);
            let g_ext = TruncSeries::from_coeffs(target, g.coeffs.clone());
            let residual = self
                .truncate(target)
                .compose(&g_ext)?
                .sub(&x_full.truncate(target));
            debug_assert!(residual.coeffs[..=known].iter().all(BivarPoly::is_zero));
            let reduced = residual.shift_down(known + 1)?;
            let slope = deriv
                .truncate(reduced.order())
                .compose(&g_ext.truncate(reduced.order()))?;
            let step = reduced.div(&slope)?.shift_up(known + 1);
            g = g_ext.sub(&step);
            known = target;
        }
        Ok(g)
    }

    /// Adds `c * x^k` in place (ignored beyond the known order).
    pub fn add_monomial(&mut self, k: usize, c: &BivarPoly) {
        if k <= self.order() {
            self.coeffs[k] += c;
        }
    }
}

/// `[x^n]` of the `k`-th power of the compositional inverse of `c`, computed
/// through `(k/n) [x^(n-k)] (x / c(x))^n` without building the inverse.
pub fn lagrange_coefficient(c: &TruncSeries, n: usize, k: usize) -> Result<BivarPoly> {
    if k == 0 || n < k {
        return Err(Error::Config(format!(
            "Lagrange coefficient needs n >= k >= 1, got n={n}, k={k}"
        )));
    }
    if !c.coeffs[0].is_zero() {
        return Err(Error::NotInvertible("constant term is nonzero"));
    }
    let needed = n - k + 1;
    if c.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            available: c.order(),
        });
    }
    // c = x * c1 with c1(0) = [x^1]c, so x / c = 1 / c1
    let c1 = c.shift_down(1)?.truncate(n - k);
    let ratio = c1
        .inverse()
        .map_err(|_| Error::NotInvertible("linear coefficient is not a nonzero constant"))?;
    let power = ratio.pow(n as u32);
    Ok(power.coeff(n - k).scale(&Rational::new(k.into(), n.into())))
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl TruncSeries {
    pub fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        self.map_coeffs(|c| -c)
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries::mul(self, rhs)
    }
}

/// Geometric series `1 / (1 - c x)` to the given order.
pub fn geometric(order: usize, c: &BivarPoly) -> TruncSeries {
    let mut acc = BivarPoly::one();
    TruncSeries::from_fn(order, |k| {
        if k == 0 {
            return BivarPoly::one();
        }
        acc = &acc * c;
        acc.clone()
    })
}

/// True when the two series agree on every coefficient of the smaller order.
pub fn agree(a: &TruncSeries, b: &TruncSeries) -> bool {
    let order = a.order().min(b.order());
    (0..=order).all(|k| a.coeff(k) == b.coeff(k))
}
