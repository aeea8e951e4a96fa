//! Rogers-Szegő polynomials and their product formulas.
//!
//! The univariate `H_n(t) = Σ_r [n choose r]_q t^r` is a [`TPoly`]. The
//! homogeneous multivariate `H̃_n(t_1, …, t_l)` is produced by the recursion
//!
//! ```text
//! H̃_{n+1} = Σ_{j=0}^{l-1} (-1)^j e_{j+1} [n choose j]_q (q)_j H̃_{n-j}
//! ```
//!
//! inside an [`RsContext`], which caches both `H̃_n` and the elementary
//! symmetric polynomials for its `l`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipoly::{compositions, elementary, MPoly};
use crate::qpoly::{Poly, QBinomials};
use crate::scalar::{binomial, Coeff};
use crate::theta::{MVec, ThetaTable};

/// A polynomial in one variable `t` over `Z[q]`; entry `r` is the
/// coefficient of `t^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent, bound = "C: Coeff")]
pub struct TPoly<C> {
    coeffs: Vec<Poly<C>>,
}

impl<C: Coeff> TPoly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<Poly<C>>) -> Self {
        let mut out = Self { coeffs };
        while out.coeffs.last().is_some_and(|c| c.is_zero()) {
            out.coeffs.pop();
        }
        out
    }

    pub fn coeffs(&self) -> &[Poly<C>] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> Poly<C> {
        self.coeffs.get(r).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|r| &self.coeff(r) + &other.coeff(r)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    /// `c · t^r · self`
    pub fn scale_shift(&self, c: &Poly<C>, r: usize) -> Self {
        let mut out = vec![Poly::zero(); r];
        out.extend(self.coeffs.iter().map(|a| a * c));
        Self::from_coeffs(out)
    }

    /// Converts a one-variable [`MPoly`].
    pub fn from_mpoly(p: &MPoly<C>) -> Result<Self> {
        if p.nvars() != 1 {
            return Err(Error::VariableCount {
                expected: 1,
                found: p.nvars(),
            });
        }
        let mut coeffs = Vec::new();
        for (e, c) in p.terms() {
            let r = e[0] as usize;
            if coeffs.len() <= r {
                coeffs.resize(r + 1, Poly::zero());
            }
            coeffs[r] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl<C: Coeff> fmt::Display for TPoly<C> {
    /// Ascending powers of `t`, e.g. `1 + (1 + q)*t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match r {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{r}"),
            };
            match (r, c.is_one()) {
                (0, _) => f.write_str(&c.as_factor())?,
                (_, true) => f.write_str(&var)?,
                (_, false) => write!(f, "{}*{var}", c.as_factor())?,
            }
        }
        Ok(())
    }
}

/// `H_n(t) = Σ_{r=0}^{n} [n choose r]_q t^r`
pub fn h_univariate<C: Coeff>(n: u32) -> TPoly<C> {
    h_univariate_with(n, &mut QBinomials::new())
}

fn h_univariate_with<C: Coeff>(n: u32, b: &mut QBinomials<C>) -> TPoly<C> {
    TPoly::from_coeffs((0..=n as i64).map(|r| b.get(n as i64, r).clone()).collect())
}

/// The right-hand side of the classical product formula,
/// `Σ_{r=0}^{k} [k choose r]_q [n choose r]_q (q)_r t^r H_{k+n-2r}(t)`.
///
/// Equal to `H_k(t) · H_n(t)`.
pub fn product_classical<C: Coeff>(k: u32, n: u32) -> TPoly<C> {
    let mut b = QBinomials::new();
    let mut out = TPoly::zero();
    for r in 0..=k.min(n) {
        let kr = b.get(k as i64, r as i64).clone();
        let nr = b.get(n as i64, r as i64).clone();
        let c = &(&kr * &nr) * b.pochhammer(r as usize);
        let h = h_univariate_with(k + n - 2 * r, &mut b);
        out = out.add(&h.scale_shift(&c, r as usize));
    }
    out
}

/// The generalized Galois number `G_n^{(l)}(q) = H̃_n(1, …, 1)`, summed
/// directly over compositions of `n` into `l` parts.
pub fn galois<C: Coeff>(n: u32, l: usize) -> Poly<C> {
    galois_with(n, l, &mut QBinomials::new())
}

fn galois_with<C: Coeff>(n: u32, l: usize, b: &mut QBinomials<C>) -> Poly<C> {
    let mut acc = Poly::zero();
    for comp in compositions(n, l) {
        let parts: Vec<u64> = comp.iter().map(|&r| r as u64).collect();
        acc += &b.multinomial(n as u64, &parts).expect("parts sum to n");
    }
    acc
}

/// Caches `H̃_n` and `e_i` for a fixed number of variables.
#[derive(Clone, Debug)]
pub struct RsContext<C> {
    l: usize,
    htilde: Vec<MPoly<C>>,
    elementary: Vec<MPoly<C>>,
    e_products: HashMap<MVec, MPoly<C>>,
    binom: QBinomials<C>,
}

impl<C: Coeff> RsContext<C> {
    pub fn new(l: usize) -> Self {
        assert!(l >= 1, "need at least one variable");
        Self {
            l,
            htilde: vec![MPoly::one(l)],
            elementary: (0..=l).map(|i| elementary(i, l)).collect(),
            e_products: HashMap::new(),
            binom: QBinomials::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.l
    }

    /// `e_i(t_1, …, t_l)`; zero for `i > l`.
    pub fn elementary(&self, i: usize) -> MPoly<C> {
        self.elementary
            .get(i)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.l))
    }

    /// `H̃_n` by the recursion; zero for negative `n`.
    pub fn htilde(&mut self, n: i64) -> MPoly<C> {
        if n < 0 {
            return MPoly::zero(self.l);
        }
        self.htilde_ref(n as usize).clone()
    }

    fn htilde_ref(&mut self, n: usize) -> &MPoly<C> {
        while self.htilde.len() <= n {
            // build H̃_{cur+1}
            let cur = self.htilde.len() - 1;
            let mut next = MPoly::zero(self.l);
            for j in 0..self.l.min(cur + 1) {
                let c = &self.binom.get(cur as i64, j as i64).clone() * self.binom.pochhammer(j);
                let c = if j % 2 == 1 { -c } else { c };
                let term = self.elementary[j + 1]
                    .try_mul(&self.htilde[cur - j])
                    .expect("same variable count")
                    .scale(&c);
                next = next.try_add(&term).expect("same variable count");
            }
            self.htilde.push(next);
        }
        &self.htilde[n]
    }

    /// `∏_{i=2}^{l} e_i^{m_i}`
    pub fn e_product(&mut self, m: &MVec) -> Result<MPoly<C>> {
        if m.num_vars() != self.l {
            return Err(Error::VariableCount {
                expected: self.l,
                found: m.num_vars(),
            });
        }
        if let Some(p) = self.e_products.get(m) {
            return Ok(p.clone());
        }
        let mut acc = MPoly::one(self.l);
        for (idx, &mi) in m.entries().iter().enumerate() {
            if mi > 0 {
                let factor = self.elementary[idx + 2].pow(mi);
                acc = acc.try_mul(&factor)?;
            }
        }
        self.e_products.insert(m.clone(), acc.clone());
        Ok(acc)
    }

    /// The right-hand side of the generalized product formula,
    /// `Σ_m (-1)^{wt(m)} θ_{m,k,n} (∏ e_i^{m_i}) H̃_{k+n-wt(m)}`.
    ///
    /// Equal to `H̃_k · H̃_n`. Only vectors with `wt(m) ≤ k + n` can
    /// contribute, so the sum is finite.
    pub fn product_general(
        &mut self,
        k: u32,
        n: u32,
        table: &mut ThetaTable<C>,
    ) -> Result<MPoly<C>> {
        if table.num_vars() != self.l {
            return Err(Error::VariableCount {
                expected: self.l,
                found: table.num_vars(),
            });
        }
        let total = (k + n) as u64;
        let mut out = MPoly::zero(self.l);
        for m in MVec::all_with_weight_at_most(self.l, total) {
            let theta = table.theta(&m, k, n)?;
            if theta.is_zero() {
                continue;
            }
            let wt = m.weight();
            let theta = if wt % 2 == 1 { -theta } else { theta };
            let e = self.e_product(&m)?;
            let h = self.htilde_ref((total - wt) as usize);
            let term = e.try_mul(h)?.scale(&theta);
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    /// The product formula specialized at `t_1 = … = t_l = 1`, computed
    /// without expanding any polynomial in `t`:
    /// `Σ_m (-1)^{wt(m)} θ_{m,k,n} ∏ (l choose i)^{m_i} G^{(l)}_{k+n-wt(m)}`.
    ///
    /// Equal to `G^{(l)}_k · G^{(l)}_n`.
    pub fn product_general_at_ones(
        &mut self,
        k: u32,
        n: u32,
        table: &mut ThetaTable<C>,
    ) -> Result<Poly<C>> {
        if table.num_vars() != self.l {
            return Err(Error::VariableCount {
                expected: self.l,
                found: table.num_vars(),
            });
        }
        let total = (k + n) as u64;
        let mut out = Poly::zero();
        for m in MVec::all_with_weight_at_most(self.l, total) {
            let theta = table.theta(&m, k, n)?;
            if theta.is_zero() {
                continue;
            }
            let wt = m.weight();
            let mut scalar = if wt % 2 == 1 { -C::one() } else { C::one() };
            for (idx, &mi) in m.entries().iter().enumerate() {
                let e_at_ones: C = binomial(self.l as i64, idx as i64 + 2);
                for _ in 0..mi {
                    scalar = scalar.mul_ref(&e_at_ones);
                }
            }
            let g = galois_with((total - wt) as u32, self.l, &mut self.binom);
            out += &(&theta * &g).scale(&scalar);
        }
        Ok(out)
    }
}
