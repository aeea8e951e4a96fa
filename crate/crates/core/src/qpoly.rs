//! Dense univariate polynomials in `q` and the q-analog coefficients.
//!
//! A [`Poly`] stores its coefficients in ascending degree and is kept in
//! canonical form: the last stored coefficient is nonzero, and the zero
//! polynomial has no coefficients at all. Equality is therefore plain
//! vector equality.
//!
//! q-binomial coefficients are produced by the Pascal recursion
//!
//! ```text
//! [n, r] = [n-1, r-1] + q^r [n-1, r]
//! ```
//!
//! so no polynomial division is ever needed. [`QBinomials`] memoizes the rows;
//! the free functions [`qbinomial`] and [`qmultinomial`] build a throwaway
//! table.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c * q^degree`
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| C::from_i64(c).expect("coefficient ring cannot represent i64"))
                .collect(),
        )
    }

    /// `1 - q^i`
    pub fn one_minus_q_pow(i: usize) -> Self {
        if i == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); i + 1];
        coeffs[0] = C::one();
        coeffs[i] = -C::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant term if this polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<C> {
        match self.coeffs.len() {
            0 => Some(C::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += c;
        }
        acc
    }

    /// Horner evaluation in a ring that contains this one, e.g. integer
    /// polynomials at a rational point.
    pub fn eval_in<X>(&self, x: &X) -> X
    where
        X: Coeff + From<C>,
    {
        let mut acc = X::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc += &X::from(c.clone());
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn sum_of_coeffs(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// The polynomial as a factor in a product: bare when it is a single
    /// positive term, parenthesized otherwise.
    pub(crate) fn as_factor(&self) -> String {
        let mut nonzero = self.coeffs.iter().filter(|c| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some(c), None) if c.is_positive() => self.to_string(),
            _ => format!("({self})"),
        }
    }

    /// Maps every coefficient through `f`, e.g. to change the coefficient ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> From<C> for Poly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<'a, C: Coeff> AddAssign<&'a Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &'a Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl<'a, C: Coeff> SubAssign<&'a Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &'a Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -self.clone()
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &a.mul_ref(b);
            }
        }
        // a product over a ring with zero divisors could still cancel the top
        Poly::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Ascending powers of `q` with explicit signs, e.g. `1 - q + 2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: array of decimal strings in ascending degree, no trailing zeros.
impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| {
                s.parse::<C>()
                    .map_err(|_| de::Error::custom(format!("invalid coefficient {s:?}")))
            })
            .collect::<std::result::Result<Vec<C>, D::Error>>()?;
        if coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(de::Error::custom(
                "polynomial has a trailing zero coefficient",
            ));
        }
        Ok(Poly { coeffs })
    }
}

/// Memo table of q-Pochhammer symbols and q-binomial coefficients.
///
/// Rows of the q-binomial triangle are extended on demand. The table is a
/// plain value; share it by giving each thread its own copy.
#[derive(Clone, Debug)]
pub struct QBinomials<C> {
    rows: Vec<Vec<Poly<C>>>,
    poch: Vec<Poly<C>>,
    zero: Poly<C>,
}

impl<C: Coeff> Default for QBinomials<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> QBinomials<C> {
    pub fn new() -> Self {
        Self {
            rows: vec![vec![Poly::one()]],
            poch: vec![Poly::one()],
            zero: Poly::zero(),
        }
    }

    fn extend_rows(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 is always present");
            let m = prev.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(Poly::one());
            for r in 1..m {
                let mut c = prev[r].shift(r);
                c += &prev[r - 1];
                row.push(c);
            }
            row.push(Poly::one());
            self.rows.push(row);
        }
    }

    /// `[n choose r]_q`, zero when `r < 0`, `r > n` or `n < 0`.
    pub fn get(&mut self, n: i64, r: i64) -> &Poly<C> {
        if n < 0 || r < 0 || r > n {
            return &self.zero;
        }
        self.extend_rows(n as usize);
        &self.rows[n as usize][r as usize]
    }

    /// `(q)_n = (1-q)(1-q^2)…(1-q^n)`, with `(q)_0 = 1`.
    pub fn pochhammer(&mut self, n: usize) -> &Poly<C> {
        while self.poch.len() <= n {
            let i = self.poch.len();
            let next = &self.poch[i - 1] * &Poly::one_minus_q_pow(i);
            self.poch.push(next);
        }
        &self.poch[n]
    }

    /// `[n; r_1, …, r_s]_q = (q)_n / ∏ (q)_{r_i}` as a telescoping product of
    /// q-binomials.
    pub fn multinomial(&mut self, n: u64, parts: &[u64]) -> Result<Poly<C>> {
        let sum: u64 = parts.iter().sum();
        if sum != n {
            return Err(Error::PartsSum { n, sum });
        }
        let mut acc = Poly::one();
        let mut running = 0u64;
        for &p in parts {
            running += p;
            if p == 0 || p == running {
                continue;
            }
            acc = &acc * self.get(running as i64, p as i64);
        }
        Ok(acc)
    }
}

/// `(q)_n`
pub fn pochhammer<C: Coeff>(n: usize) -> Poly<C> {
    QBinomials::new().pochhammer(n).clone()
}

/// `[n choose r]_q`; zero outside `0 ≤ r ≤ n`.
pub fn qbinomial<C: Coeff>(n: i64, r: i64) -> Poly<C> {
    QBinomials::new().get(n, r).clone()
}

/// `[n; parts]_q`; the parts must sum to `n`.
pub fn qmultinomial<C: Coeff>(n: u64, parts: &[u64]) -> Result<Poly<C>> {
    QBinomials::new().multinomial(n, parts)
}
