use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rogers_szego::{
    galois, htilde_direct, product_classical, product_r, structure_constant, Basis, BigInt, MVec,
    Partition, ZRsContext, ZSymAlgebra, ZSymExpansion, ZThetaBank, ZThetaTable,
};
use serde::Serialize;

mod verify;

#[derive(Parser)]
#[command(
    name = "rszego",
    version,
    about = "Exact computations with multivariate Rogers-Szegő polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// θ_{m,k,n}; the number of variables is one more than the length of m
    Theta {
        /// comma-separated [m_2, …, m_l]
        #[arg(long)]
        m: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// All nonzero θ_{m,k,n} for k ≤ kmax, n ≤ nmax
    ThetaTable {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        json: bool,
    },
    /// H̃_n(t_1, …, t_l)
    Htilde {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generalized Galois number H̃_n(1, …, 1), optionally evaluated at q
    Galois {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// H̃_k H̃_n via the θ expansion, in l variables
    Product {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        json: bool,
    },
    /// H_k(t) H_n(t) for the univariate polynomials
    Classical {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// H̃_n in the elementary basis
    Expand {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Rewrites a single basis element in the other basis
    Convert {
        /// comma-separated parts
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum)]
        from: BasisArg,
        #[arg(long)]
        json: bool,
    },
    /// R_κ R_ν in the R basis
    ProductR {
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient of R_γ in R_κ R_ν
    Structure {
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        json: bool,
    },
    /// Checks identities over a box of (k, n); exits nonzero on any failure
    Verify {
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        /// comma-separated check names; all registered checks by default
        #[arg(long)]
        checks: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    E,
    R,
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .with_context(|| format!("not a non-negative integer: {x:?}"))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = parse_list(s)?;
    if parts.contains(&0) {
        bail!("partition parts must be positive: {s:?}");
    }
    Ok(Partition::from_parts(&parts))
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(value)?);
    } else {
        println!("{value}");
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Theta { m, k, n, json } => {
            let m = MVec::new(parse_list(&m)?);
            let mut table = ZThetaTable::new(m.num_vars());
            emit(&table.theta(&m, k, n)?, json)?;
        }
        Command::ThetaTable {
            l,
            kmax,
            nmax,
            json,
        } => {
            if l < 1 {
                bail!("l must be positive");
            }
            let records = ZThetaTable::new(l).dump(kmax, nmax);
            if json {
                println!("{}", serde_json::to_string(&records)?);
            } else {
                for r in records {
                    println!("k={} n={} m={}: {}", r.k, r.n, r.m, r.theta);
                }
            }
        }
        Command::Htilde { n, l, json } => {
            if l < 1 {
                bail!("l must be positive");
            }
            let h = htilde_direct::<BigInt>(n, l);
            if json {
                println!("{}", serde_json::to_string(&h)?);
            } else {
                println!("{h}");
            }
        }
        Command::Galois { n, l, q, json } => {
            if l < 1 {
                bail!("l must be positive");
            }
            let g = galois::<BigInt>(n, l);
            match q {
                Some(q) => {
                    let v = g.eval(&BigInt::from(q));
                    if json {
                        println!("{}", serde_json::to_string(&v.to_string())?);
                    } else {
                        println!("{v}");
                    }
                }
                None => emit(&g, json)?,
            }
        }
        Command::Product { k, n, l, json } => {
            if l < 1 {
                bail!("l must be positive");
            }
            let mut ctx = ZRsContext::new(l);
            let mut table = ZThetaTable::new(l);
            let p = ctx.product_general(k, n, &mut table)?;
            if json {
                println!("{}", serde_json::to_string(&p)?);
            } else {
                println!("{p}");
            }
        }
        Command::Classical { k, n, json } => emit(&product_classical::<BigInt>(k, n), json)?,
        Command::Expand { n, json } => {
            let mut alg = ZSymAlgebra::new();
            emit(alg.expand_htilde_in_e(n), json)?;
        }
        Command::Convert { lambda, from, json } => {
            let lambda = parse_partition(&lambda)?;
            let mut alg = ZSymAlgebra::new();
            let out = match from {
                BasisArg::E => alg.e_to_r(&ZSymExpansion::basis_element(Basis::E, lambda))?,
                BasisArg::R => alg.r_to_e(&ZSymExpansion::basis_element(Basis::R, lambda))?,
            };
            emit(&out, json)?;
        }
        Command::ProductR { kappa, nu, json } => {
            let (kappa, nu) = (parse_partition(&kappa)?, parse_partition(&nu)?);
            emit(&product_r(&kappa, &nu, &mut ZThetaBank::new())?, json)?;
        }
        Command::Structure {
            kappa,
            nu,
            gamma,
            json,
        } => {
            let (kappa, nu, gamma) = (
                parse_partition(&kappa)?,
                parse_partition(&nu)?,
                parse_partition(&gamma)?,
            );
            let c = structure_constant(&kappa, &nu, &gamma, &mut ZThetaBank::new())?;
            emit(&c, json)?;
        }
        Command::Verify {
            l,
            kmax,
            nmax,
            checks,
        } => {
            let checks = match checks {
                Some(list) => list.split(',').map(|s| s.trim().to_string()).collect(),
                None => verify::CHECKS.iter().map(|s| s.to_string()).collect(),
            };
            let spec = verify::SweepSpec::new(l, kmax, nmax, checks)?;
            let ok = verify::run(&spec, &mut std::io::stdout().lock())?;
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
