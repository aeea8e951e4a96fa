//! Sparse polynomials in `t_1, …, t_l` with coefficients in `Z[q]`.
//!
//! This is the brute-force layer: products are expanded term by term, and the
//! homogeneous Rogers-Szegő polynomial is built straight from its defining
//! sum over compositions. Everything cleverer in the crate is checked
//! against it.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{Poly, QBinomials};
use crate::scalar::Coeff;

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

/// A polynomial in `nvars` variables over `Z[q]`.
///
/// Terms are kept in a map ordered lexicographically by exponent vector and
/// no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponents, Poly<C>>,
}

/// One term in the JSON form of an [`MPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
pub struct MPolyTerm<C> {
    pub exponents: Exponents,
    pub coeff: Poly<C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Poly::one())
    }

    pub fn constant(nvars: usize, c: Poly<C>) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    /// The variable `t_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, Poly::one())
    }

    pub fn monomial(exps: Exponents, c: Poly<C>) -> Self {
        let mut out = Self::zero(exps.len());
        out.add_term(exps, c);
        out
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = MPolyTerm<C>>) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(Error::ExponentLength {
                    expected: nvars,
                    found: t.exponents.len(),
                });
            }
            out.add_term(t.exponents, t.coeff);
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Poly<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Poly<C> {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `c * t^exps` in place.
    ///
    /// Panics if `exps` has the wrong length; this is an internal invariant
    /// for every caller in the crate.
    pub fn add_term(&mut self, exps: Exponents, c: Poly<C>) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// `c * self`
    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same variable count");
        }
        acc
    }

    /// Total degree of every term, if they all agree. `None` for zero or for
    /// an inhomogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Renames variables: `t_i` becomes `t_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] = x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Sets `t_{i+1} = 0`, dropping that variable.
    pub fn set_var_zero(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                let mut ne = e.clone();
                ne.remove(i);
                out.add_term(ne, c.clone());
            }
        }
        out
    }

    /// Sets `t_{i+1} = 1`, dropping that variable.
    pub fn set_var_one(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.remove(i);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Embeds into a ring with more variables; the new ones do not occur.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.resize(nvars, 0);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Value at `t_1 = … = t_l = 1`: the sum of all coefficients.
    pub fn specialize_all_ones(&self) -> Poly<C> {
        let mut acc = Poly::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    pub fn to_terms(&self) -> Vec<MPolyTerm<C>> {
        self.terms
            .iter()
            .map(|(e, c)| MPolyTerm {
                exponents: e.clone(),
                coeff: c.clone(),
            })
            .collect()
    }
}

/// JSON form: a list of `{exponents, coeff}` sorted lexicographically by
/// exponents.
impl<C: Coeff> Serialize for MPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&MPolyTermRef {
                exponents: e,
                coeff: c,
            })?;
        }
        seq.end()
    }
}

#[derive(Serialize)]
#[serde(bound = "C: Coeff")]
struct MPolyTermRef<'a, C> {
    exponents: &'a Exponents,
    coeff: &'a Poly<C>,
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    /// Human-readable form with the leading monomial first in lex order,
    /// e.g. `t1^2 + (1 + q)*t1*t2 + t2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let single = self.terms.len() == 1;
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| match x {
                    1 => format!("t{}", i + 1),
                    _ => format!("t{}^{}", i + 1, x),
                })
                .join("*");
            let (neg, body) = match c.as_constant() {
                Some(k) => (k.is_negative(), Poly::constant(k.abs())),
                None => (false, c.clone()),
            };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = if single && vars.is_empty() {
                body.to_string()
            } else {
                body.as_factor()
            };
            match (vars.is_empty(), body.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&vars)?,
                (false, false) => write!(f, "{coeff}*{vars}")?,
            }
        }
        Ok(())
    }
}

/// All compositions of `n` into `l` non-negative parts, in lexicographic order.
pub fn compositions(n: u32, l: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, l: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if l == 0 {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if l == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=n {
            prefix.push(first);
            go(n - first, l - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, l, &mut Vec::with_capacity(l), &mut out);
    out
}

/// The elementary symmetric polynomial `e_i(t_1, …, t_l)`.
pub fn elementary<C: Coeff>(i: usize, l: usize) -> MPoly<C> {
    let mut out = MPoly::zero(l);
    if i > l {
        return out;
    }
    for subset in (0..l).combinations(i) {
        let mut e = vec![0; l];
        for v in subset {
            e[v] = 1;
        }
        out.add_term(e, Poly::one());
    }
    out
}

/// `H̃_n(t_1, …, t_l)` expanded from its defining sum over compositions
/// `r_1 + … + r_l = n` with q-multinomial coefficients.
pub fn htilde_direct<C: Coeff>(n: u32, l: usize) -> MPoly<C> {
    htilde_direct_with(n, l, &mut QBinomials::new())
}

pub(crate) fn htilde_direct_with<C: Coeff>(
    n: u32,
    l: usize,
    binom: &mut QBinomials<C>,
) -> MPoly<C> {
    let mut out = MPoly::zero(l);
    for comp in compositions(n, l) {
        let parts: Vec<u64> = comp.iter().map(|&r| r as u64).collect();
        let c = binom
            .multinomial(n as u64, &parts)
            .expect("composition parts sum to n");
        out.add_term(comp, c);
    }
    out
}
