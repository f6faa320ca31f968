//! Exact coefficient ring: arbitrary-precision rationals and sparse
//! polynomials in the helicity marker `y` and the dimension marker `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exponent pair of a monomial `y^dy q^dq`.
///
/// Ordered by q-degree first, then y-degree; this is the ordering used for
/// every serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub dq: u32,
    pub dy: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { dq: 0, dy: 0 };

    pub fn new(dy: u32, dq: u32) -> Self {
        Monomial { dq, dy }
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        Monomial {
            dq: self.dq + rhs.dq,
            dy: self.dy + rhs.dy,
        }
    }
}

/// Sparse polynomial in `y` and `q` with rational coefficients.
///
/// No stored coefficient is zero, so structural equality of the term maps is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    /// `c * y^dy * q^dq`.
    pub fn monomial(c: Rational, dy: u32, dq: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(dy, dq), c);
        }
        BivarPoly { terms }
    }

    /// `c * y^dy * q^dq` with an integer coefficient.
    pub fn term(c: i64, dy: u32, dq: u32) -> Self {
        Self::monomial(rat(c), dy, dq)
    }

    pub fn y() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn q() -> Self {
        Self::term(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, dy, dq)` triples, merging
    /// repeated monomials.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, u32, u32)>,
    {
        let mut p = BivarPoly::zero();
        for (c, dy, dq) in terms {
            p.add_term(Monomial::new(dy, dq), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing `(dq, dy)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dy: u32, dq: u32) -> Rational {
        self.terms
            .get(&Monomial::new(dy, dq))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The coefficient of `y^0 q^0`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    /// `Some(c)` when the polynomial is the constant `c` (possibly zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dy).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dq).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BivarPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q := v`, leaving a polynomial in `y` alone.
    pub fn eval_q(&self, v: &Rational) -> Self {
        let mut out = BivarPoly::zero();
        for (m, c) in &self.terms {
            let factor = pow_rational(v, m.dq);
            out.add_term(Monomial::new(m.dy, 0), c * factor);
        }
        out
    }

    /// Substitutes `y := v`, leaving a polynomial in `q` alone.
    pub fn eval_y(&self, v: &Rational) -> Self {
        let mut out = BivarPoly::zero();
        for (m, c) in &self.terms {
            let factor = pow_rational(v, m.dy);
            out.add_term(Monomial::new(0, m.dq), c * factor);
        }
        out
    }

    /// The coefficient of `y^k`, as a polynomial in `q`.
    pub fn y_slice(&self, k: u32) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.dy == k)
                .map(|(m, c)| (Monomial::new(0, m.dq), c.clone()))
                .collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficients keyed by `(dy, dq)`; `None` if some coefficient is
    /// not an integer.
    pub fn integer_terms(&self) -> Option<BTreeMap<(u32, u32), BigInt>> {
        self.terms
            .iter()
            .map(|(m, c)| c.is_integer().then(|| ((m.dy, m.dq), c.to_integer())))
            .collect()
    }

    /// JSON-friendly term list in increasing `(dq, dy)` order.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                dy: m.dy,
                dq: m.dq,
                num: json_int(c.numer()),
                den: json_int(c.denom()),
            })
            .collect()
    }

    /// Renders a polynomial in `q` alone the way the coefficient tables are
    /// typeset: `q^4+4 q^3+10 q^2+12 q+6`, with exponents of two or more
    /// digits braced.
    pub fn to_latex_q(&self) -> String {
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            debug_assert_eq!(m.dy, 0);
            push_coefficient(&mut s, c, m.dq == 0, " ");
            if m.dq > 0 {
                s.push('q');
                if m.dq > 1 {
                    if m.dq >= 10 {
                        s.push_str(&format!("^{{{}}}", m.dq));
                    } else {
                        s.push_str(&format!("^{}", m.dq));
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn json_int(v: &BigInt) -> serde_json::Number {
    // arbitrary_precision keeps big integers exact
    v.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

/// One `{dy, dq, num, den}` entry of the JSON rendering.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct JsonTerm {
    pub dy: u32,
    pub dq: u32,
    pub num: serde_json::Number,
    pub den: serde_json::Number,
}

pub(crate) fn pow_rational(v: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(v.clone(), e as usize)
}

fn push_coefficient(s: &mut String, c: &Rational, bare: bool, sep: &str) {
    let negative = c.is_negative();
    if negative {
        s.push('-');
    } else if !s.is_empty() {
        s.push('+');
    }
    let abs = c.abs();
    if bare {
        s.push_str(&abs.to_string());
    } else if !abs.is_one() {
        if abs.is_integer() {
            s.push_str(&abs.to_string());
        } else {
            s.push_str(&format!("({abs})"));
        }
        s.push_str(sep);
    }
}

impl fmt::Display for BivarPoly {
    /// Canonical text form: decreasing q-degree, then decreasing y-degree,
    /// e.g. `y^2q^3+4yq^2-q+6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            push_coefficient(&mut s, c, m.dq == 0 && m.dy == 0, "");
            for (var, e) in [('y', m.dy), ('q', m.dq)] {
                match e {
                    0 => {}
                    1 => s.push(var),
                    _ => s.push_str(&format!("{var}^{e}")),
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        f.write_str(&s)
    }
}

impl From<Rational> for BivarPoly {
    fn from(c: Rational) -> Self {
        BivarPoly::constant(c)
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        BivarPoly::from_int(c)
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(mut self, rhs: BivarPoly) -> BivarPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        if self.is_integral() && rhs.is_integral() {
            return mul_integral(self, rhs);
        }
        let mut out = BivarPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma + *mb, ca * cb);
            }
        }
        out
    }
}

// Integer-only products skip the gcd normalisation of every partial product.
fn mul_integral(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    let small = |p: &BivarPoly| -> Option<Vec<(Monomial, i64)>> {
        p.terms
            .iter()
            .map(|(m, c)| c.numer().to_i64().map(|v| (*m, v)))
            .collect()
    };
    let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    if let (Some(sa), Some(sb)) = (small(a), small(b)) {
        {
            let mut wide: BTreeMap<Monomial, i128> = BTreeMap::new();
            let mut overflow = false;
            'outer: for (ma, ca) in &sa {
                for (mb, cb) in &sb {
                    let prod = (*ca as i128) * (*cb as i128);
                    let slot = wide.entry(*ma + *mb).or_insert(0);
                    match slot.checked_add(prod) {
                        Some(v) => *slot = v,
                        None => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
            }
            if !overflow {
                return BivarPoly {
                    terms: wide
                        .into_iter()
                        .filter(|(_, v)| *v != 0)
                        .map(|(m, v)| (m, Rational::from_integer(BigInt::from(v))))
                        .collect(),
                };
            }
        }
    }
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            *acc.entry(*ma + *mb).or_insert_with(BigInt::zero) += ca.numer() * cb.numer();
        }
    }
    BivarPoly {
        terms: acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, v)| (m, Rational::from_integer(v)))
            .collect(),
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}
