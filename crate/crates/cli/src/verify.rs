//! Identity sweeps for `rszego verify`.
//!
//! Cell checks run over every `(k, n)` with `k ≤ kmax`, `n ≤ nmax`. Checks on a
//! single degree (`htilde_recursion`, `e_leading`, `basis_inverse`) run over
//! `d ≤ max(kmax, nmax)`. Everything is sequential, so the report is
//! byte-for-byte reproducible.

use std::collections::HashMap;
use std::fmt::Display;
use std::io::Write;

use anyhow::{bail, Result};
use rogers_szego::{
    h_univariate, htilde_direct, product_classical, product_r, theta_closed_full, theta_closed_ru1,
    theta_closed_uj, theta_vanishes, Basis, BigInt, MVec, MultiPoly, Partition, QPoly, RsPoly,
    ZRsContext, ZSymAlgebra, ZSymExpansion, ZThetaBank, ZThetaTable,
};

pub const CHECKS: &[&str] = &[
    "product_general",
    "product_classical",
    "specialization",
    "htilde_recursion",
    "theta_uj",
    "theta_full",
    "theta_ru1",
    "theta_symmetry",
    "theta_vanishing",
    "e_leading",
    "basis_inverse",
    "structure_commutative",
    "structure_theta",
    "galois_alternating",
];

pub struct SweepSpec {
    pub l: usize,
    pub k_max: u32,
    pub n_max: u32,
    pub checks: Vec<String>,
}

impl SweepSpec {
    pub fn new(l: usize, k_max: u32, n_max: u32, checks: Vec<String>) -> Result<Self> {
        if l < 2 {
            bail!("verify needs l ≥ 2");
        }
        if let Some(bad) = checks.iter().find(|c| !CHECKS.contains(&c.as_str())) {
            bail!("unknown check {bad:?}; known checks: {}", CHECKS.join(", "));
        }
        Ok(Self {
            l,
            k_max,
            n_max,
            checks,
        })
    }

    fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..=self.k_max).flat_map(move |k| (0..=self.n_max).map(move |n| (k, n)))
    }

    fn degrees(&self) -> std::ops::RangeInclusive<u32> {
        0..=self.k_max.max(self.n_max)
    }
}

#[derive(Default)]
struct Tally {
    passed: usize,
    total: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record<T: PartialEq + Display>(&mut self, case: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.total += 1;
        if lhs == rhs {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(format!("{}: lhs = {lhs}, rhs = {rhs}", case()));
        }
    }
}

/// Shared caches for one run.
struct Ctx {
    l: usize,
    rs: ZRsContext,
    table: ZThetaTable,
    htilde: HashMap<u32, MultiPoly>,
    alg: ZSymAlgebra,
    bank: ZThetaBank,
}

impl Ctx {
    fn new(l: usize) -> Self {
        Self {
            l,
            rs: ZRsContext::new(l),
            table: ZThetaTable::new(l),
            htilde: HashMap::new(),
            alg: ZSymAlgebra::new(),
            bank: ZThetaBank::new(),
        }
    }

    fn htilde(&mut self, n: u32) -> MultiPoly {
        let l = self.l;
        self.htilde
            .entry(n)
            .or_insert_with(|| htilde_direct(n, l))
            .clone()
    }

    fn theta(&mut self, m: &MVec, k: u32, n: u32) -> Result<QPoly> {
        Ok(self.table.theta(m, k, n)?)
    }
}

pub fn run(spec: &SweepSpec, out: &mut impl Write) -> Result<bool> {
    let mut ctx = Ctx::new(spec.l);
    let mut all_ok = true;
    for name in &spec.checks {
        let tally = run_check(name, spec, &mut ctx)?;
        let ok = tally.passed == tally.total;
        all_ok &= ok;
        writeln!(
            out,
            "{name}: {}/{} pass{}",
            tally.passed,
            tally.total,
            if ok { "" } else { " FAILED" }
        )?;
        if let Some(f) = tally.first_failure {
            writeln!(out, "  first failure at {f}")?;
        }
    }
    Ok(all_ok)
}

fn run_check(name: &str, spec: &SweepSpec, ctx: &mut Ctx) -> Result<Tally> {
    let l = spec.l;
    let mut t = Tally::default();
    match name {
        "product_general" => {
            for (k, n) in spec.cells() {
                let lhs = ctx.rs.product_general(k, n, &mut ctx.table)?;
                let rhs = ctx.htilde(k).try_mul(&ctx.htilde(n))?;
                t.record(|| format!("k={k} n={n}"), &lhs, &rhs);
            }
        }
        "product_classical" => {
            for (k, n) in spec.cells() {
                let lhs = product_classical::<BigInt>(k, n);
                let rhs = h_univariate(k).mul(&h_univariate(n));
                t.record(|| format!("k={k} n={n}"), &lhs, &rhs);
            }
        }
        "specialization" => {
            // t_3 = … = t_l = 0 and then t_2 = 1
            for (k, n) in spec.cells() {
                let mut p = ctx.rs.product_general(k, n, &mut ctx.table)?;
                for i in (2..l).rev() {
                    p = p.set_var_zero(i);
                }
                let lhs = RsPoly::from_mpoly(&p.set_var_one(1))?;
                let rhs = product_classical(k, n);
                t.record(|| format!("k={k} n={n}"), &lhs, &rhs);
            }
        }
        "htilde_recursion" => {
            for d in spec.degrees() {
                let lhs = ctx.rs.htilde(d as i64);
                let rhs = ctx.htilde(d);
                t.record(|| format!("n={d}"), &lhs, &rhs);
            }
        }
        "theta_uj" => {
            for (k, n) in spec.cells() {
                for j in 1..l {
                    let lhs = ctx.theta(&MVec::unit(j, l), k, n)?;
                    let rhs = theta_closed_uj(j, k, n);
                    t.record(|| format!("j={j} k={k} n={n}"), &lhs, &rhs);
                }
            }
        }
        "theta_full" => {
            for (k, n) in spec.cells() {
                for m in MVec::all_with_weight_at_most(l, (k + n) as u64) {
                    if m.size() != k as u64 {
                        continue;
                    }
                    let lhs = ctx.theta(&m, k, n)?;
                    let rhs = theta_closed_full(&m, k, n)?;
                    t.record(|| format!("m={m} k={k} n={n}"), &lhs, &rhs);
                }
            }
        }
        "theta_ru1" => {
            for (k, n) in spec.cells() {
                for r in 0..=k.max(n) {
                    let mut v = vec![0; l - 1];
                    v[0] = r;
                    let lhs = ctx.theta(&MVec::new(v), k, n)?;
                    let rhs = theta_closed_ru1(r, k, n);
                    t.record(|| format!("r={r} k={k} n={n}"), &lhs, &rhs);
                }
            }
        }
        "theta_symmetry" => {
            for (k, n) in spec.cells() {
                for m in MVec::all_with_weight_at_most(l, (k + n) as u64) {
                    let lhs = ctx.theta(&m, k, n)?;
                    let rhs = ctx.theta(&m, n, k)?;
                    t.record(|| format!("m={m} k={k} n={n}"), &lhs, &rhs);
                }
            }
        }
        "theta_vanishing" => {
            for (k, n) in spec.cells() {
                for m in MVec::all_with_weight_at_most(l, (k + n + 2) as u64) {
                    let lhs = ctx.theta(&m, k, n)?.is_zero();
                    let rhs = theta_vanishes(&m, k as u64, n as u64);
                    t.record(|| format!("m={m} k={k} n={n} (θ = 0 vs rule)"), &lhs, &rhs);
                }
            }
        }
        "e_leading" => {
            for d in spec.degrees() {
                let lhs = ctx.alg.expand_htilde_in_e(d).coeff(&Partition::ones(d));
                t.record(|| format!("n={d}"), &lhs, &QPoly::one());
            }
        }
        "basis_inverse" => {
            for d in spec.degrees() {
                for lambda in Partition::all_of_size(d) {
                    let r = ZSymExpansion::basis_element(Basis::R, lambda.clone());
                    let back = ctx.alg.r_to_e(&r)?;
                    let back = ctx.alg.e_to_r(&back)?;
                    t.record(|| format!("R{lambda}"), &back, &r);
                    let e = ZSymExpansion::basis_element(Basis::E, lambda.clone());
                    let back = ctx.alg.e_to_r(&e)?;
                    let back = ctx.alg.r_to_e(&back)?;
                    t.record(|| format!("e{lambda}"), &back, &e);
                }
            }
        }
        "structure_commutative" => {
            for (k, n) in spec.cells() {
                for kappa in Partition::all_of_size(k) {
                    for nu in Partition::all_of_size(n) {
                        let lhs = product_r(&kappa, &nu, &mut ctx.bank)?;
                        let rhs = product_r(&nu, &kappa, &mut ctx.bank)?;
                        t.record(|| format!("κ={kappa} ν={nu}"), &lhs, &rhs);
                    }
                }
            }
        }
        "structure_theta" => {
            // R_{1^k} R_{1^n} = H̃_k H̃_n, so its coefficients are ±θ
            for (k, n) in spec.cells() {
                let prod = product_r(&Partition::ones(k), &Partition::ones(n), &mut ctx.bank)?;
                for lambda in Partition::all_of_size(k + n) {
                    let lhs = prod.coeff(&lambda);
                    let m = MVec::new((2..=k + n).map(|i| lambda.multiplicity(i)).collect());
                    let theta = ZThetaTable::new(m.num_vars().max(2)).theta(
                        &m.with_num_vars(m.num_vars().max(2)),
                        k,
                        n,
                    )?;
                    let rhs = if m.weight() % 2 == 1 { -theta } else { theta };
                    t.record(|| format!("k={k} n={n} λ={lambda}"), &lhs, &rhs);
                }
            }
        }
        "galois_alternating" => {
            for (k, n) in spec.cells() {
                let lhs = ctx.rs.product_general_at_ones(k, n, &mut ctx.table)?;
                let rhs = ctx.htilde(k).specialize_all_ones() * ctx.htilde(n).specialize_all_ones();
                t.record(|| format!("k={k} n={n}"), &lhs, &rhs);
            }
        }
        other => bail!("unknown check {other:?}"),
    }
    Ok(t)
}
