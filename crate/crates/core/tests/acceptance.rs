//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p rogers-szego --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rogers_szego::{
    galois, product_classical, product_r, qbinomial, theta_closed_full, theta_closed_ru1,
    theta_closed_uj, Basis, BigInt, MVec, Partition, QPoly, RsPoly, ZRsContext, ZSymAlgebra,
    ZSymExpansion, ZThetaBank, ZThetaTable,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Product formula against the product of the defining sums.
fn criterion_1() -> Outcome {
    let mut cases = 0;
    for l in [2usize, 3, 4] {
        let mut ctx = ZRsContext::new(l);
        let mut table = ZThetaTable::new(l);
        let h: Vec<MP> = (0..=6).map(|n| htilde(n, l)).collect();
        for k in 0..=6u32 {
            for n in 0..=6u32 {
                let lhs = from_mpoly(&ctx.product_general(k, n, &mut table).unwrap());
                let rhs = mp_mul(&h[k as usize], &h[n as usize]);
                check!(lhs == rhs, "l={l} k={k} n={n}");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} products"))
}

/// Classical product, and the same coefficients recovered from two variables
/// by setting t_2 = 1.
fn criterion_2() -> Outcome {
    let mut cases = 0;
    for k in 0..=8u32 {
        for n in 0..=8u32 {
            let lhs = from_rspoly(&product_classical(k, n));
            let rhs = tpoly_mul(&h_classical(k), &h_classical(n));
            check!(lhs == rhs, "classical k={k} n={n}");
            cases += 1;
        }
    }
    let mut ctx = ZRsContext::new(2);
    let mut table = ZThetaTable::new(2);
    for k in 0..=6u32 {
        for n in 0..=6u32 {
            let p = ctx.product_general(k, n, &mut table).unwrap();
            let lhs = RsPoly::from_mpoly(&p.set_var_one(1)).unwrap();
            check!(lhs == product_classical(k, n), "t_2 = 1 chain k={k} n={n}");
            cases += 1;
        }
    }
    Ok(format!("{cases} identities"))
}

fn oracle_theta_uj(j: u32, k: u32, n: u32) -> Q {
    let mut sum = Vec::new();
    for i in 0..k as i64 {
        sum = add(&sum, &qbinom(n as i64 + i, j as i64));
        sum = add(&sum, &neg(&qbinom(i, j as i64)));
    }
    mul(&poch(j), &sum)
}

fn oracle_theta_full(m: &[u32], k: u32, n: u32) -> Q {
    let wt: u32 = m.iter().enumerate().map(|(i, &x)| (i as u32 + 2) * x).sum();
    let d = wt - k;
    let mut lead = 1i128;
    let mut rest = k as u64;
    for &x in m {
        lead *= binom(rest, x as u64);
        rest -= x as u64;
    }
    mul(&scalar(lead), &mul(&qbinom(n as i64, d as i64), &poch(d)))
}

fn oracle_theta_ru1(r: u32, k: u32, n: u32) -> Q {
    mul(
        &mul(&qbinom(k as i64, r as i64), &qbinom(n as i64, r as i64)),
        &poch(r),
    )
}

/// Closed forms against the recursion. Both the library closed forms and
/// the reference evaluations are checked.
fn criterion_3() -> Outcome {
    let mut cases = 0;
    for l in 2..=4usize {
        let mut table = ZThetaTable::new(l);
        for k in 0..=8u32 {
            for n in 0..=8u32 {
                for j in 1..l.min(4) {
                    let rec = table.theta(&MVec::unit(j, l), k, n).unwrap();
                    check!(
                        from_qpoly(&rec) == oracle_theta_uj(j as u32, k, n),
                        "u_{j} l={l} k={k} n={n}"
                    );
                    check!(
                        rec == theta_closed_uj(j, k, n),
                        "library u_{j} l={l} k={k} n={n}"
                    );
                    cases += 1;
                }
                for r in 0..=4u32 {
                    let mut v = vec![0; l - 1];
                    v[0] = r;
                    let rec = table.theta(&MVec::new(v), k, n).unwrap();
                    check!(
                        from_qpoly(&rec) == oracle_theta_ru1(r, k, n),
                        "r u_1 r={r} l={l} k={k} n={n}"
                    );
                    check!(
                        rec == theta_closed_ru1(r, k, n),
                        "library r u_1 r={r} l={l} k={k} n={n}"
                    );
                    cases += 1;
                }
                if k <= 4 {
                    for m in MVec::all_with_weight_at_most(l, (l * 4) as u64) {
                        if m.size() != k as u64 {
                            continue;
                        }
                        let rec = table.theta(&m, k, n).unwrap();
                        check!(
                            from_qpoly(&rec) == oracle_theta_full(m.entries(), k, n),
                            "|m| = k m={m} k={k} n={n}"
                        );
                        check!(
                            rec == theta_closed_full(&m, k, n).unwrap(),
                            "library |m| = k m={m} k={k} n={n}"
                        );
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} closed-form values"))
}

fn criterion_4() -> Outcome {
    let mut cases = 0;
    for l in 2..=4usize {
        let mut table = ZThetaTable::new(l);
        for k in 0..=12u32 {
            for n in 0..=12 - k {
                for m in MVec::all_with_weight_at_most(l, (k + n) as u64) {
                    let a = table.theta(&m, k, n).unwrap();
                    let b = table.theta(&m, n, k).unwrap();
                    check!(a == b, "m={m} k={k} n={n}: {a} vs {b}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} pairs"))
}

/// Leading coefficient of the e-expansion, which is also checked to evaluate
/// to the defining sum.
fn criterion_5() -> Outcome {
    let mut alg = ZSymAlgebra::new();
    for n in 0..=8u32 {
        let x = alg.expand_htilde_in_e(n).clone();
        let c = x.coeff(&Partition::ones(n));
        check!(c.is_one(), "n={n}: coefficient {c}");
        let l = n.max(1) as usize;
        check!(
            eval_e(&x, l) == htilde(n, l),
            "n={n}: expansion does not evaluate to H̃_{n}"
        );
    }
    Ok("n ≤ 8".into())
}

fn eval_e(x: &ZSymExpansion, l: usize) -> MP {
    assert_eq!(x.basis(), Basis::E);
    let mut out = MP::new();
    for (lambda, c) in x.terms() {
        out = mp_add(
            &out,
            &mp_scale(&elem_product(&lambda.parts(), l), &from_qpoly(c)),
        );
    }
    out
}

/// `R_λ = H̃_{m_1(λ)} e_{λ̃}` from the reference arithmetic.
fn r_direct(lambda: &Partition, l: usize) -> MP {
    mp_mul(
        &htilde(lambda.m1(), l),
        &elem_product(&lambda.reduced().parts(), l),
    )
}

fn criterion_6() -> Outcome {
    let mut alg = ZSymAlgebra::new();
    let mut slices = 0;
    for d in 0..=8u32 {
        for lambda in Partition::all_of_size(d) {
            let r = ZSymExpansion::basis_element(Basis::R, lambda.clone());
            let e = ZSymExpansion::basis_element(Basis::E, lambda.clone());
            let r2 = alg.r_to_e(&r).unwrap();
            check!(
                alg.e_to_r(&r2).unwrap() == r,
                "e_to_r ∘ r_to_e at R{lambda}"
            );
            let e2 = alg.e_to_r(&e).unwrap();
            check!(
                alg.r_to_e(&e2).unwrap() == e,
                "r_to_e ∘ e_to_r at e{lambda}"
            );
        }
        slices += 1;
    }

    let mut bank = ZThetaBank::new();
    let small: Vec<Partition> = (0..=4).flat_map(Partition::all_of_size).collect();
    let l = 8;
    let direct: Vec<MP> = small.iter().map(|p| r_direct(p, l)).collect();
    let mut pairs = 0;
    for (i, kappa) in small.iter().enumerate() {
        for (j, nu) in small.iter().enumerate() {
            let prod = product_r(kappa, nu, &mut bank).unwrap();
            let lhs = eval_e(&alg.r_to_e(&prod).unwrap(), l);
            let rhs = mp_mul(&direct[i], &direct[j]);
            check!(lhs == rhs, "κ={kappa} ν={nu}");
            pairs += 1;
        }
    }
    Ok(format!(
        "{slices} slices, {pairs} products in {l} variables"
    ))
}

/// Subspaces of `F_2^n`, as subsets of vectors (bit masks) containing 0 and
/// closed under addition.
fn subspaces_f2(n: u32) -> Vec<u32> {
    let size = 1u32 << n;
    let mut out = Vec::new();
    for set in 0u64..(1u64 << size) {
        if set & 1 == 0 {
            continue;
        }
        let members: Vec<u32> = (0..size).filter(|v| set >> v & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|a| members.iter().all(|b| set >> (a ^ b) & 1 == 1));
        if closed {
            out.push(set as u32);
        }
    }
    out
}

fn criterion_7() -> Outcome {
    for n in 0..=4u32 {
        let subspaces = subspaces_f2(n);
        let g2 = galois::<BigInt>(n, 2).eval(&BigInt::from(2));
        check!(
            g2 == BigInt::from(subspaces.len()),
            "n={n}: G^(2)(2) = {g2}, count {}",
            subspaces.len()
        );
        let nested = subspaces
            .iter()
            .map(|&u| subspaces.iter().filter(|&&w| u & w == u).count())
            .sum::<usize>();
        let g3 = galois::<BigInt>(n, 3).eval(&BigInt::from(2));
        check!(
            g3 == BigInt::from(nested),
            "n={n}: G^(3)(2) = {g3}, nested pairs {nested}"
        );
    }
    for l in 2..=3usize {
        let mut ctx = ZRsContext::new(l);
        let mut table = ZThetaTable::new(l);
        for k in 0..=5u32 {
            for n in 0..=5u32 {
                let lhs = ctx
                    .product_general(k, n, &mut table)
                    .unwrap()
                    .specialize_all_ones();
                let at_ones = ctx.product_general_at_ones(k, n, &mut table).unwrap();
                let rhs = mp_mul(&htilde(k, l), &htilde(n, l))
                    .values()
                    .fold(Vec::new(), |acc, c| add(&acc, c));
                check!(from_qpoly(&lhs) == rhs, "l={l} k={k} n={n}");
                check!(
                    from_qpoly(&at_ones) == rhs,
                    "alternating sum l={l} k={k} n={n}"
                );
            }
        }
    }
    Ok("subspaces of F_2^n for n ≤ 4, flags of length 2, 72 products at t = 1".into())
}

fn poly_strategy() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-50i64..50, 0..10).prop_map(|v| QPoly::from_i64s(&v))
}

#[allow(clippy::eq_op)]
fn criterion_8() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(
            &(poly_strategy(), poly_strategy(), poly_strategy()),
            |(a, b, c)| {
                let zero = QPoly::zero();
                let one = QPoly::one();
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &zero, a.clone());
                prop_assert_eq!(&a * &one, a.clone());
                prop_assert_eq!(&a - &a, zero.clone());
                prop_assert_eq!(&a + &(-a.clone()), zero);
                prop_assert_eq!(
                    from_qpoly(&(&a * &b)),
                    mul(&from_qpoly(&a), &from_qpoly(&b))
                );
                Ok(())
            },
        )
        .map_err(|e| format!("ring axioms: {e}"))?;
    runner
        .run(&(0i64..=60, 0i64..=60), |(n, r)| {
            let lhs = qbinomial::<BigInt>(n + 1, r + 1);
            let rhs =
                &qbinomial::<BigInt>(n, r) + &qbinomial::<BigInt>(n, r + 1).shift(r as usize + 1);
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| format!("Pascal: {e}"))?;

    for n in 0..=30i64 {
        for r in -1..=n + 1 {
            let b = qbinomial::<BigInt>(n, r);
            check!(
                from_qpoly(&b) == qbinom(n, r),
                "quotient of Pochhammers n={n} r={r}"
            );
            check!(b == qbinomial(n, n - r), "symmetry n={n} r={r}");
            if n > 0 {
                let p1 = &qbinomial::<BigInt>(n - 1, r - 1)
                    + &qbinomial::<BigInt>(n - 1, r).shift(r.max(0) as usize);
                let p2 = &qbinomial::<BigInt>(n - 1, r)
                    + &qbinomial::<BigInt>(n - 1, r - 1).shift((n - r).max(0) as usize);
                check!(b == p1 && b == p2, "Pascal n={n} r={r}");
            }
            let at_one = b.eval(&BigInt::from(1));
            let expected = if (0..=n).contains(&r) {
                binom(n as u64, r as u64)
            } else {
                0
            };
            check!(at_one == BigInt::from(expected), "q = 1 n={n} r={r}");
        }
    }
    Ok("2 × 1000 random cases, exhaustive n ≤ 30".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("product formula, k,n ≤ 6, l ∈ {2,3,4}", criterion_1),
        ("classical product and t_2 = 1 chain", criterion_2),
        ("θ closed forms against the recursion", criterion_3),
        ("θ symmetric in k and n, k+n ≤ 12, l ≤ 4", criterion_4),
        ("coefficient of e_(1^n) in H̃_n is 1, n ≤ 8", criterion_5),
        ("R/e basis inverses and R-basis products", criterion_6),
        (
            "Galois numbers count subspaces; products at t = 1",
            criterion_7,
        ),
        ("ring axioms and q-binomial properties", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
