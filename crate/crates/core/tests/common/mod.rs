//! Independent reference arithmetic for the integration tests.
//!
//! Nothing here calls into the library's algorithms. q-binomials come from
//! exact division of q-Pochhammer products, not the Pascal recursion, and
//! polynomials in `t` are plain maps from exponent vectors.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rogers_szego::{MultiPoly, QPoly, RsPoly};

/// Ascending coefficients in `q`, no trailing zeros.
pub type Q = Vec<i128>;

pub fn trim(mut a: Q) -> Q {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn add(a: &Q, b: &Q) -> Q {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub fn neg(a: &Q) -> Q {
    a.iter().map(|x| -x).collect()
}

pub fn mul(a: &Q, b: &Q) -> Q {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scalar(c: i128) -> Q {
    trim(vec![c])
}

/// Exact quotient `a / b` for `b(0) = 1`; panics if `b` does not divide `a`.
pub fn div_exact(a: &Q, b: &Q) -> Q {
    assert_eq!(b.first(), Some(&1));
    if a.is_empty() {
        return Vec::new();
    }
    assert!(a.len() >= b.len(), "degree too small to divide");
    let len = a.len() - b.len() + 1;
    let mut quot = vec![0i128; len];
    for i in 0..len {
        let mut c = a[i];
        for j in 1..b.len().min(i + 1) {
            c -= b[j] * quot[i - j];
        }
        quot[i] = c;
    }
    assert_eq!(mul(&quot, b), trim(a.clone()), "inexact division");
    trim(quot)
}

/// `(q)_n = (1-q)(1-q^2)⋯(1-q^n)`
pub fn poch(n: u32) -> Q {
    let mut acc = vec![1];
    for i in 1..=n as usize {
        let mut f = vec![0; i + 1];
        f[0] = 1;
        f[i] = -1;
        acc = mul(&acc, &f);
    }
    acc
}

/// q-binomial as `(q)_n / ((q)_r (q)_{n-r})`, zero outside `0 ≤ r ≤ n`.
pub fn qbinom(n: i64, r: i64) -> Q {
    if n < 0 || r < 0 || r > n {
        return Vec::new();
    }
    div_exact(
        &poch(n as u32),
        &mul(&poch(r as u32), &poch((n - r) as u32)),
    )
}

pub fn qmultinom(parts: &[u32]) -> Q {
    let total: u32 = parts.iter().sum();
    let den = parts.iter().fold(vec![1], |acc, &p| mul(&acc, &poch(p)));
    div_exact(&poch(total), &den)
}

pub fn eval(a: &Q, x: i128) -> i128 {
    a.iter().rev().fold(0, |acc, c| acc * x + c)
}

pub fn binom(n: u64, r: u64) -> i128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Polynomial in `t_1, …, t_l` over `Z[q]`.
pub type MP = BTreeMap<Vec<u32>, Q>;

pub fn mp_add_term(p: &mut MP, e: Vec<u32>, c: Q) {
    let slot = p.entry(e.clone()).or_default();
    *slot = add(slot, &c);
    if slot.is_empty() {
        p.remove(&e);
    }
}

pub fn mp_add(a: &MP, b: &MP) -> MP {
    let mut out = a.clone();
    for (e, c) in b {
        mp_add_term(&mut out, e.clone(), c.clone());
    }
    out
}

pub fn mp_mul(a: &MP, b: &MP) -> MP {
    let mut out = MP::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            mp_add_term(&mut out, e, mul(ca, cb));
        }
    }
    out
}

pub fn mp_scale(a: &MP, c: &Q) -> MP {
    let mut out = MP::new();
    for (e, x) in a {
        mp_add_term(&mut out, e.clone(), mul(x, c));
    }
    out
}

pub fn mp_one(l: usize) -> MP {
    MP::from([(vec![0; l], vec![1])])
}

fn compositions(n: u32, l: usize) -> Vec<Vec<u32>> {
    if l == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, l - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `H̃_n(t_1, …, t_l)` from its defining sum over compositions.
pub fn htilde(n: u32, l: usize) -> MP {
    let mut out = MP::new();
    for c in compositions(n, l) {
        let coeff = qmultinom(&c);
        mp_add_term(&mut out, c, coeff);
    }
    out
}

/// `e_i(t_1, …, t_l)` as the sum over 0/1 exponent vectors of weight `i`.
pub fn elem(i: u32, l: usize) -> MP {
    let mut out = MP::new();
    for mask in 0u32..(1 << l) {
        if mask.count_ones() == i {
            let e = (0..l).map(|b| (mask >> b) & 1).collect();
            out.insert(e, vec![1]);
        }
    }
    out
}

pub fn elem_product(parts: &[u32], l: usize) -> MP {
    parts
        .iter()
        .fold(mp_one(l), |acc, &p| mp_mul(&acc, &elem(p, l)))
}

/// `H_n(t) = Σ_r [n choose r]_q t^r`, as a list of coefficients of `t^r`.
pub fn h_classical(n: u32) -> Vec<Q> {
    (0..=n as i64).map(|r| qbinom(n as i64, r)).collect()
}

pub fn tpoly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = add(&out[i + j], &mul(x, y));
        }
    }
    while out.last().is_some_and(|c| c.is_empty()) {
        out.pop();
    }
    out
}

pub fn from_qpoly(p: &QPoly) -> Q {
    p.coeffs()
        .iter()
        .map(|c| c.to_i128().expect("fits in i128"))
        .collect()
}

pub fn from_mpoly(p: &MultiPoly) -> MP {
    p.terms().map(|(e, c)| (e.clone(), from_qpoly(c))).collect()
}

pub fn from_rspoly(p: &RsPoly) -> Vec<Q> {
    p.coeffs().iter().map(from_qpoly).collect()
}
