//! Exact computer algebra for Rogers-Szegő polynomials.
//!
//! Everything is computed over polynomials in a single indeterminate `q`
//! with exact coefficients. The building blocks are:
//!
//! - [`qpoly`]: dense polynomials in `q`, q-Pochhammer symbols, q-binomial
//!   and q-multinomial coefficients.
//! - [`multipoly`]: sparse polynomials in `t_1, …, t_l` with coefficients in
//!   `Z[q]`, used as a brute-force oracle (elementary symmetric polynomials,
//!   the homogeneous Rogers-Szegő polynomial expanded from its defining sum).
//! - [`theta`]: the recursively defined coefficient polynomials `θ_{m,k,n}(q)`
//!   of the generalized product formula, with the known closed forms.
//! - [`rspoly`]: the Rogers-Szegő recursion and both product formulas.
//! - [`symfun`]: partitions, the elementary basis `e_λ`, the Rogers-Szegő
//!   basis `R_λ` and its structure constants.
//!
//! All of the types are generic over the coefficient ring through the
//! [`Coeff`] trait. The aliases at the crate root fix the ring to
//! arbitrary-precision integers, which is what every identity in this crate
//! is stated over.

pub mod error;
pub mod multipoly;
pub mod qpoly;
pub mod rspoly;
pub mod scalar;
pub mod symfun;
pub mod theta;

pub use error::{Error, Result};
pub use multipoly::{compositions, elementary, htilde_direct, MPoly, MPolyTerm};

pub use qpoly::{pochhammer, qbinomial, qmultinomial, Poly, QBinomials};

pub use rspoly::{galois, h_univariate, product_classical, RsContext, TPoly};
pub use scalar::Coeff;
pub use symfun::{
    mvec_to_partition, partition_to_mvec, product_r, structure_constant, Basis, Evaluator,
    Partition, SymAlgebra, SymExpansion, ThetaBank, ThetaProvider,
};
pub use theta::{
    theta_closed_full, theta_closed_ru1, theta_closed_uj, theta_vanishes, MVec, ThetaRecord,
    ThetaTable,
};

pub use num_bigint::BigInt;

/// A polynomial in `q` with arbitrary-precision integer coefficients.
pub type QPoly = Poly<BigInt>;
/// A polynomial in `t_1, …, t_l` over `Z[q]`.
pub type MultiPoly = MPoly<BigInt>;
/// A polynomial in a single variable `t` over `Z[q]`.
pub type RsPoly = TPoly<BigInt>;
pub type ZThetaTable = ThetaTable<BigInt>;
pub type ZRsContext = RsContext<BigInt>;
pub type ZThetaBank = ThetaBank<BigInt>;
pub type ZSymAlgebra = SymAlgebra<BigInt>;
pub type ZSymExpansion = SymExpansion<BigInt>;
pub type ZEvaluator = Evaluator<BigInt>;
