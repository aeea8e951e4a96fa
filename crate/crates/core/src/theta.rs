//! The coefficient polynomials `θ_{m,k,n}(q)` of the generalized product
//! formula.
//!
//! `θ` is defined by a recursion stepping `k → k+1`:
//!
//! ```text
//! θ_{m,k+1,n} = θ_{m,k,n}
//!             + Σ_{j=1}^{l-1} [n+k-wt(m)+j+1 choose j]_q (q)_j θ_{m-u_j,k,n}
//!             - Σ_{j=1}^{l-1} [k choose j]_q (q)_j θ_{m-u_j,k-j,n}
//! ```
//!
//! with `θ_{0,k,n} = 1`, `θ = 0` whenever `|m| > min(k, n)` or
//! `wt(m) > k + n`, and `θ = 0` for any negative argument. [`ThetaTable`]
//! evaluates it top-down with memoization.
//!
//! Three families have closed forms ([`theta_closed_uj`],
//! [`theta_closed_full`], [`theta_closed_ru1`]); they are computed without the
//! recursion and serve as cross-checks.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{Poly, QBinomials};
use crate::scalar::{multinomial, Coeff};

/// The vector `[m_2, m_3, …, m_l]`; entry `i` holds `m_{i+2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MVec(Vec<u32>);

impl MVec {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    /// The zero vector for `l` variables.
    pub fn zero(l: usize) -> Self {
        Self(vec![0; l.saturating_sub(1)])
    }

    /// `u_j` for `l` variables: a single 1 in coordinate `j` (1-based), which
    /// is the slot of `m_{j+1}`.
    pub fn unit(j: usize, l: usize) -> Self {
        assert!(
            j >= 1 && j < l,
            "unit vector u_{j} needs 1 ≤ j ≤ l-1 = {}",
            l - 1
        );
        let mut v = vec![0; l - 1];
        v[j - 1] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of variables `l` this vector belongs to.
    pub fn num_vars(&self) -> usize {
        self.0.len() + 1
    }

    /// `m_i` for `2 ≤ i ≤ l`; zero beyond the stored length.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 2);
        self.0.get(i - 2).copied().unwrap_or(0)
    }

    /// `|m| = Σ m_i`
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `wt(m) = Σ i·m_i`
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(idx, &x)| (idx as u64 + 2) * x as u64)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `m - u_j`, or `None` if that would make a coordinate negative.
    pub fn minus_unit(&self, j: usize) -> Option<Self> {
        let slot = self.0.get(j - 1)?;
        if *slot == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[j - 1] -= 1;
        Some(Self(v))
    }

    /// The same vector viewed with `l` variables, padding or trimming zeros.
    ///
    /// Panics if trimming would drop a nonzero entry.
    pub fn with_num_vars(&self, l: usize) -> Self {
        let len = l.saturating_sub(1);
        assert!(
            self.0.iter().skip(len).all(|&x| x == 0),
            "cannot drop nonzero entries of {self}"
        );
        let mut v = self.0.clone();
        v.resize(len, 0);
        Self(v)
    }

    /// All vectors for `l` variables with `wt(m) ≤ max_weight`, in
    /// lexicographic order.
    pub fn all_with_weight_at_most(l: usize, max_weight: u64) -> Vec<Self> {
        fn go(idx: usize, len: usize, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<MVec>) {
            if idx == len {
                out.push(MVec(cur.clone()));
                return;
            }
            let w = idx as u64 + 2;
            for x in 0..=budget / w {
                cur.push(x as u32);
                go(idx + 1, len, budget - x * w, cur, out);
                cur.pop();
            }
        }
        let len = l.saturating_sub(1);
        let mut out = Vec::new();
        go(0, len, max_weight, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

impl fmt::Display for MVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// True when the vanishing rules force `θ_{m,k,n} = 0`.
pub fn theta_vanishes(m: &MVec, k: u64, n: u64) -> bool {
    m.size() > k.min(n) || m.weight() > k + n
}

/// Memoized evaluation of `θ_{m,k,n}` for a fixed number of variables `l`.
///
/// The memo is mutable, so a table belongs to one thread at a time; the
/// values it produces are pure functions of `(m, k, n)`.
#[derive(Clone, Debug)]
pub struct ThetaTable<C> {
    l: usize,
    memo: HashMap<(MVec, u32, u32), Poly<C>>,
    binom: QBinomials<C>,
}

impl<C: Coeff> ThetaTable<C> {
    pub fn new(l: usize) -> Self {
        assert!(l >= 1, "need at least one variable");
        Self {
            l,
            memo: HashMap::new(),
            binom: QBinomials::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.l
    }

    /// Number of memoized entries.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn theta(&mut self, m: &MVec, k: u32, n: u32) -> Result<Poly<C>> {
        if m.num_vars() != self.l {
            return Err(Error::VariableCount {
                expected: self.l,
                found: m.num_vars(),
            });
        }
        Ok(self.value(m, k as i64, n as i64))
    }

    fn value(&mut self, m: &MVec, k: i64, n: i64) -> Poly<C> {
        if k < 0 || n < 0 || theta_vanishes(m, k as u64, n as u64) {
            return Poly::zero();
        }
        if m.is_zero() {
            return Poly::one();
        }
        // here |m| ≥ 1 and |m| ≤ min(k, n), so k ≥ 1
        let key = (m.clone(), k as u32, n as u32);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let prev = k - 1;
        let wt = m.weight() as i64;
        let mut acc = self.value(m, prev, n);
        for j in 1..self.l {
            let Some(reduced) = m.minus_unit(j) else {
                continue;
            };
            let jj = j as i64;
            let poch = self.binom.pochhammer(j).clone();

            let up = self.value(&reduced, prev, n);
            if !up.is_zero() {
                let c = self.binom.get(n + prev - wt + jj + 1, jj);
                acc += &(&(c * &poch) * &up);
            }
            let down = self.value(&reduced, prev - jj, n);
            if !down.is_zero() {
                let c = self.binom.get(prev, jj);
                acc -= &(&(c * &poch) * &down);
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    /// Every nonzero `θ_{m,k,n}` with `k ≤ k_max`, `n ≤ n_max`, sorted by
    /// `(k, n, wt(m), m)`.
    pub fn dump(&mut self, k_max: u32, n_max: u32) -> Vec<ThetaRecord<C>> {
        let mut out = Vec::new();
        for k in 0..=k_max {
            for n in 0..=n_max {
                let mut ms = MVec::all_with_weight_at_most(self.l, (k + n) as u64);
                ms.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
                for m in ms {
                    let theta = self.value(&m, k as i64, n as i64);
                    if !theta.is_zero() {
                        out.push(ThetaRecord { m, k, n, theta });
                    }
                }
            }
        }
        out
    }
}

/// One row of a θ table dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
pub struct ThetaRecord<C> {
    pub m: MVec,
    pub k: u32,
    pub n: u32,
    pub theta: Poly<C>,
}

/// `θ_{u_j,k,n} = (q)_j Σ_{i=0}^{k-1} ([n+i choose j]_q - [i choose j]_q)`
pub fn theta_closed_uj<C: Coeff>(j: usize, k: u32, n: u32) -> Poly<C> {
    let mut b = QBinomials::new();
    let mut sum = Poly::zero();
    for i in 0..k as i64 {
        sum += b.get(n as i64 + i, j as i64);
        sum -= b.get(i, j as i64);
    }
    b.pochhammer(j) * &sum
}

/// Closed form when `|m| = k`:
/// `(k choose m_2, …, m_l) · [n choose wt(m)-k]_q · (q)_{wt(m)-k}`,
/// where the leading multinomial is the ordinary integer one.
pub fn theta_closed_full<C: Coeff>(m: &MVec, k: u32, n: u32) -> Result<Poly<C>> {
    let size = m.size();
    if size != k as u64 {
        return Err(Error::SizeMismatch { size, k: k as u64 });
    }
    // wt(m) ≥ 2|m| = 2k, so wt(m) - k ≥ k ≥ 0
    let d = (m.weight() - k as u64) as i64;
    let parts: Vec<u64> = m.entries().iter().map(|&x| x as u64).collect();
    let lead: C = multinomial(k as u64, &parts);
    let mut b = QBinomials::new();
    let binom = b.get(n as i64, d).clone();
    let tail = &binom * b.pochhammer(d as usize);
    Ok(tail.scale(&lead))
}

/// `θ_{r·u_1,k,n} = [k choose r]_q [n choose r]_q (q)_r`
pub fn theta_closed_ru1<C: Coeff>(r: u32, k: u32, n: u32) -> Poly<C> {
    let mut b = QBinomials::new();
    let kr = b.get(k as i64, r as i64).clone();
    let nr = b.get(n as i64, r as i64).clone();
    &(&kr * &nr) * b.pochhammer(r as usize)
}
