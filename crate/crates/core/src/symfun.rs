//! Symmetric functions over `Z[q]`, one homogeneous degree at a time.
//!
//! An element of degree `d` is a finite combination of basis elements indexed
//! by partitions of `d`. Two bases are supported:
//!
//! - `E`: the elementary basis `e_λ = e_{λ_1} e_{λ_2} ⋯`;
//! - `R`: the Rogers-Szegő basis `R_λ = H̃_{m_1(λ)} e_{λ̃}`, where `λ̃` is `λ`
//!   with its parts equal to 1 removed.
//!
//! Passing from `R` to `E` only needs the `e`-expansion of each `H̃_n`. The
//! reverse direction is a back-substitution: in the order used by
//! [`Partition`]'s `Ord`, `R_λ` expands to `e_λ` plus terms with strictly
//! fewer parts equal to 1, so the change of basis is unitriangular and never
//! divides.
//!
//! Concrete polynomials are recovered with [`Evaluator`], which maps an
//! expansion into `l` variables. For `l` at least the degree this map is
//! injective, which is what makes the per-degree model faithful.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipoly::{elementary, htilde_direct_with, MPoly};
use crate::qpoly::{Poly, QBinomials};
use crate::scalar::Coeff;
use crate::theta::{MVec, ThetaTable};

/// An integer partition stored as part multiplicities.
///
/// `Ord` is the presentation and elimination order of this module: more
/// parts equal to 1 first, then the remaining parts compared as descending
/// lists, larger first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    mults: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// From a list of parts in any order; zero parts are ignored.
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut mults = BTreeMap::new();
        for &p in parts.iter().filter(|&&p| p > 0) {
            *mults.entry(p).or_insert(0) += 1;
        }
        Self { mults }
    }

    /// From `(part, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_mults(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut mults = BTreeMap::new();
        for (part, m) in pairs {
            if part > 0 && m > 0 {
                *mults.entry(part).or_insert(0) += m;
            }
        }
        Self { mults }
    }

    /// `(1^n)`
    pub fn ones(n: u32) -> Self {
        Self::from_mults([(1, n)])
    }

    /// Parts in descending order.
    pub fn parts(&self) -> Vec<u32> {
        self.mults
            .iter()
            .rev()
            .flat_map(|(&p, &m)| std::iter::repeat_n(p, m as usize))
            .collect()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.mults.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in ascending order of part.
    pub fn mults(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mults.iter().map(|(&p, &m)| (p, m))
    }

    pub fn m1(&self) -> u32 {
        self.multiplicity(1)
    }

    /// `|λ|`
    pub fn size(&self) -> u64 {
        self.mults.iter().map(|(&p, &m)| p as u64 * m as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> u64 {
        self.mults.values().map(|&m| m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.mults.keys().next_back().copied().unwrap_or(0)
    }

    /// `λ̃`: the partition with every part equal to 1 removed.
    pub fn reduced(&self) -> Self {
        let mut mults = self.mults.clone();
        mults.remove(&1);
        Self { mults }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut mults = self.mults.clone();
        for (&p, &m) in &other.mults {
            *mults.entry(p).or_insert(0) += m;
        }
        Self { mults }
    }

    /// Multiset difference, or `None` if `other` is not contained in `self`.
    pub fn difference(&self, other: &Self) -> Option<Self> {
        let mut mults = self.mults.clone();
        for (&p, &m) in &other.mults {
            let slot = mults.get_mut(&p)?;
            match (*slot).cmp(&m) {
                Ordering::Less => return None,
                Ordering::Equal => {
                    mults.remove(&p);
                }
                Ordering::Greater => *slot -= m,
            }
        }
        Some(Self { mults })
    }

    /// Every partition of `n`, sorted in this module's order.
    pub fn all_of_size(n: u32) -> Vec<Self> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_parts(cur));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .m1()
            .cmp(&self.m1())
            .then_with(|| other.reduced().parts().cmp(&self.reduced().parts()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Self::from_parts(&parts))
    }
}

/// `m ↦ λ` with `m_j(λ) = m_j` for `j ≥ 2` and `m_1(λ) = k + n - wt(m)`.
pub fn mvec_to_partition(m: &MVec, k: u32, n: u32) -> Result<Partition> {
    let bound = k as u64 + n as u64;
    let weight = m.weight();
    if weight > bound {
        return Err(Error::WeightTooLarge { weight, bound });
    }
    let ones = (bound - weight) as u32;
    let rest = m
        .entries()
        .iter()
        .enumerate()
        .map(|(idx, &x)| (idx as u32 + 2, x));
    Ok(Partition::from_mults(
        std::iter::once((1, ones)).chain(rest),
    ))
}

/// `λ ↦ [m_2(λ), …, m_l(λ)]`; fails if `λ` has a part larger than `l`.
pub fn partition_to_mvec(lambda: &Partition, l: usize) -> Result<MVec> {
    let part = lambda.largest_part();
    if part as usize > l.max(1) {
        return Err(Error::PartTooLarge { part, l });
    }
    Ok(MVec::new(
        (2..=l as u32).map(|i| lambda.multiplicity(i)).collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// elementary symmetric functions `e_λ`
    E,
    /// Rogers-Szegő basis `R_λ`
    R,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::E => "E",
            Basis::R => "R",
        }
    }
}

/// A finite `Z[q]`-combination of basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    bound = "C: Coeff",
    into = "SymExpansionRepr<C>",
    try_from = "SymExpansionRepr<C>"
)]
pub struct SymExpansion<C> {
    basis: Basis,
    terms: BTreeMap<Partition, Poly<C>>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
struct SymExpansionRepr<C> {
    basis: Basis,
    terms: Vec<SymTerm<C>>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
struct SymTerm<C> {
    partition: Partition,
    coeff: Poly<C>,
}

impl<C: Coeff> From<SymExpansion<C>> for SymExpansionRepr<C> {
    fn from(x: SymExpansion<C>) -> Self {
        Self {
            basis: x.basis,
            terms: x
                .terms
                .into_iter()
                .map(|(partition, coeff)| SymTerm { partition, coeff })
                .collect(),
        }
    }
}

impl<C: Coeff> TryFrom<SymExpansionRepr<C>> for SymExpansion<C> {
    type Error = Error;
    fn try_from(r: SymExpansionRepr<C>) -> Result<Self> {
        let mut out = SymExpansion::zero(r.basis);
        for t in r.terms {
            out.add_term(t.partition, t.coeff);
        }
        out.degree()?;
        Ok(out)
    }
}

impl<C: Coeff> SymExpansion<C> {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, Poly::one());
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in this module's partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Poly<C>)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly<C> {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Poly<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    /// The common degree of all terms; `None` for zero.
    pub fn degree(&self) -> Result<Option<u64>> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let Some(first) = sizes.next() else {
            return Ok(None);
        };
        match sizes.find(|&s| s != first) {
            Some(second) => Err(Error::Inhomogeneous { first, second }),
            None => Ok(Some(first)),
        }
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis {
                expected: basis.name(),
                found: self.basis.name(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        other.expect_basis(self.basis)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = Self::zero(self.basis);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), a * c);
        }
        out
    }

    /// Multiplies every basis label by `e_μ`, i.e. `λ ↦ λ ∪ μ`. In the `E`
    /// basis this is multiplication by `e_μ`; in the `R` basis it is
    /// multiplication by `e_μ` when `μ` has no parts equal to 1.
    pub fn union_labels(&self, mu: &Partition) -> Self {
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.union(mu), c.clone()))
                .collect(),
        }
    }

    /// Product of two `E`-basis expansions: `e_λ e_μ = e_{λ ∪ μ}`.
    pub fn mul_e(&self, other: &Self) -> Result<Self> {
        self.expect_basis(Basis::E)?;
        other.expect_basis(Basis::E)?;
        let mut out = Self::zero(Basis::E);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for SymExpansion<C> {
    /// e.g. `e(1,1) + (-1 + q)*e(2)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = match self.basis {
            Basis::E => "e",
            Basis::R => "R",
        };
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}{p}")?;
            } else {
                write!(f, "{}*{sym}{p}", c.as_factor())?;
            }
        }
        Ok(())
    }
}

/// Change-of-basis machinery; caches the `e`-expansions of `H̃_n`.
#[derive(Clone, Debug)]
pub struct SymAlgebra<C> {
    htilde_e: Vec<SymExpansion<C>>,
    binom: QBinomials<C>,
}

impl<C: Coeff> Default for SymAlgebra<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> SymAlgebra<C> {
    pub fn new() -> Self {
        Self {
            htilde_e: vec![SymExpansion::basis_element(Basis::E, Partition::empty())],
            binom: QBinomials::new(),
        }
    }

    /// `H̃_n` in the `e_λ` basis, from
    /// `H̃_{n+1} = Σ_{j=0}^{n} (-1)^j e_{j+1} [n choose j]_q (q)_j H̃_{n-j}`.
    pub fn expand_htilde_in_e(&mut self, n: u32) -> &SymExpansion<C> {
        while self.htilde_e.len() <= n as usize {
            let cur = self.htilde_e.len() - 1;
            let mut next = SymExpansion::zero(Basis::E);
            for j in 0..=cur {
                let c = &self.binom.get(cur as i64, j as i64).clone() * self.binom.pochhammer(j);
                let c = if j % 2 == 1 { -c } else { c };
                let part = Partition::from_parts(&[j as u32 + 1]);
                let term = self.htilde_e[cur - j].union_labels(&part).scale(&c);
                next = next.try_add(&term).expect("both in the E basis");
            }
            self.htilde_e.push(next);
        }
        &self.htilde_e[n as usize]
    }

    /// `R_μ` in the `e` basis: the expansion of `H̃_{m_1(μ)}` with `μ̃`
    /// appended to every label.
    pub fn r_element_in_e(&mut self, mu: &Partition) -> SymExpansion<C> {
        let reduced = mu.reduced();
        self.expand_htilde_in_e(mu.m1()).union_labels(&reduced)
    }

    pub fn r_to_e(&mut self, x: &SymExpansion<C>) -> Result<SymExpansion<C>> {
        x.expect_basis(Basis::R)?;
        x.degree()?;
        let mut out = SymExpansion::zero(Basis::E);
        for (mu, c) in &x.terms {
            let img = self.r_element_in_e(mu).scale(c);
            out = out.try_add(&img)?;
        }
        Ok(out)
    }

    /// Back-substitution along the partition order: the first remaining term
    /// `c·e_μ` is accounted for by `c·R_μ`, whose other terms come strictly
    /// later.
    pub fn e_to_r(&mut self, x: &SymExpansion<C>) -> Result<SymExpansion<C>> {
        x.expect_basis(Basis::E)?;
        x.degree()?;
        let mut rest = x.clone();
        let mut out = SymExpansion::zero(Basis::R);
        while let Some((mu, c)) = rest
            .terms
            .first_key_value()
            .map(|(p, c)| (p.clone(), c.clone()))
        {
            let img = self.r_element_in_e(&mu);
            debug_assert!(img.coeff(&mu).is_one(), "unit pivot at {mu}");
            rest = rest.try_add(&img.scale(&-c.clone()))?;
            debug_assert!(rest.coeff(&mu).is_zero());
            out.add_term(mu, c);
        }
        Ok(out)
    }
}

/// Source of `θ_{λ,k,n}`, where `λ` stands for the vector
/// `[m_2(λ), m_3(λ), …]`.
pub trait ThetaProvider<C: Coeff> {
    fn theta_of_partition(&mut self, lambda: &Partition, k: u32, n: u32) -> Result<Poly<C>>;
}

impl<C: Coeff> ThetaProvider<C> for ThetaTable<C> {
    fn theta_of_partition(&mut self, lambda: &Partition, k: u32, n: u32) -> Result<Poly<C>> {
        let m = partition_to_mvec(lambda, self.num_vars())?;
        self.theta(&m, k, n)
    }
}

/// θ tables for as many variables as a partition needs, created on demand.
#[derive(Clone, Debug, Default)]
pub struct ThetaBank<C> {
    tables: BTreeMap<usize, ThetaTable<C>>,
}

impl<C: Coeff> ThetaBank<C> {
    pub fn new() -> Self {
        Self {
            tables: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> ThetaProvider<C> for ThetaBank<C> {
    fn theta_of_partition(&mut self, lambda: &Partition, k: u32, n: u32) -> Result<Poly<C>> {
        // θ does not depend on trailing zero coordinates, so the smallest
        // table that fits λ is enough
        let l = (lambda.largest_part() as usize).max(2);
        self.tables
            .entry(l)
            .or_insert_with(|| ThetaTable::new(l))
            .theta_of_partition(lambda, k, n)
    }
}

/// `R_κ R_ν` in the `R` basis:
/// `Σ_{|λ| = k+n} (-1)^{|λ̃|} θ_{λ,k,n} R_{λ ∪ κ̃ ∪ ν̃}` with
/// `k = m_1(κ)`, `n = m_1(ν)`.
pub fn product_r<C: Coeff>(
    kappa: &Partition,
    nu: &Partition,
    thetas: &mut impl ThetaProvider<C>,
) -> Result<SymExpansion<C>> {
    let (k, n) = (kappa.m1(), nu.m1());
    let extra = kappa.reduced().union(&nu.reduced());
    let mut out = SymExpansion::zero(Basis::R);
    for lambda in Partition::all_of_size(k + n) {
        let theta = thetas.theta_of_partition(&lambda, k, n)?;
        if theta.is_zero() {
            continue;
        }
        let theta = if lambda.reduced().size() % 2 == 1 {
            -theta
        } else {
            theta
        };
        out.add_term(lambda.union(&extra), theta);
    }
    Ok(out)
}

/// `Θ_{κ,ν,γ}`: the coefficient of `R_γ` in `R_κ R_ν`.
///
/// Nonzero only if `γ = λ ∪ κ̃ ∪ ν̃` for a partition `λ` of
/// `m_1(κ) + m_1(ν)`, in which case it is `(-1)^{|λ̃|} θ_{λ,k,n}`.
pub fn structure_constant<C: Coeff>(
    kappa: &Partition,
    nu: &Partition,
    gamma: &Partition,
    thetas: &mut impl ThetaProvider<C>,
) -> Result<Poly<C>> {
    if gamma.size() != kappa.size() + nu.size() {
        return Ok(Poly::zero());
    }
    let extra = kappa.reduced().union(&nu.reduced());
    let Some(lambda) = gamma.difference(&extra) else {
        return Ok(Poly::zero());
    };
    let theta = thetas.theta_of_partition(&lambda, kappa.m1(), nu.m1())?;
    Ok(if lambda.reduced().size() % 2 == 1 {
        -theta
    } else {
        theta
    })
}

/// Maps expansions to polynomials in `t_1, …, t_l`.
///
/// `R_λ` is evaluated directly as `H̃_{m_1(λ)}(t) · e_{λ̃}(t)`, with `H̃` taken
/// from its defining sum, so evaluating an `R`-expansion does not go through
/// [`SymAlgebra::r_to_e`].
#[derive(Clone, Debug)]
pub struct Evaluator<C> {
    l: usize,
    elementary: Vec<MPoly<C>>,
    e_products: HashMap<Partition, MPoly<C>>,
    htilde: HashMap<u32, MPoly<C>>,
    binom: QBinomials<C>,
}

impl<C: Coeff> Evaluator<C> {
    pub fn new(l: usize) -> Self {
        Self {
            l,
            elementary: (0..=l).map(|i| elementary(i, l)).collect(),
            e_products: HashMap::new(),
            htilde: HashMap::new(),
            binom: QBinomials::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.l
    }

    /// `e_λ(t_1, …, t_l)`
    pub fn e_lambda(&mut self, lambda: &Partition) -> MPoly<C> {
        if let Some(p) = self.e_products.get(lambda) {
            return p.clone();
        }
        let mut acc = MPoly::one(self.l);
        for (part, m) in lambda.mults() {
            let Some(e) = self.elementary.get(part as usize) else {
                acc = MPoly::zero(self.l);
                break;
            };
            for _ in 0..m {
                acc = acc.try_mul(e).expect("same variable count");
            }
        }
        self.e_products.insert(lambda.clone(), acc.clone());
        acc
    }

    pub fn htilde(&mut self, n: u32) -> MPoly<C> {
        if let Some(h) = self.htilde.get(&n) {
            return h.clone();
        }
        let h = htilde_direct_with(n, self.l, &mut self.binom);
        self.htilde.insert(n, h.clone());
        h
    }

    /// `R_λ(t_1, …, t_l)`
    pub fn r_lambda(&mut self, lambda: &Partition) -> MPoly<C> {
        let h = self.htilde(lambda.m1());
        let e = self.e_lambda(&lambda.reduced());
        h.try_mul(&e).expect("same variable count")
    }

    pub fn eval(&mut self, x: &SymExpansion<C>) -> MPoly<C> {
        let mut out = MPoly::zero(self.l);
        for (p, c) in x.terms() {
            let b = match x.basis() {
                Basis::E => self.e_lambda(p),
                Basis::R => self.r_lambda(p),
            };
            out = out.try_add(&b.scale(c)).expect("same variable count");
        }
        out
    }
}
