//! Exact computer algebra for a rank-two truncated power-series ring with
//! a distinguished automorphism, built to machine-check, at configurable
//! desk scale, that the fixed subring fails the ascending chain condition.
//!
//! The tower of structures, bottom up:
//!
//! - [`Scalar`]: the ground field F — arbitrary-precision rationals in
//!   characteristic 0, prime residues in characteristic p.
//! - [`Poly`] over the indeterminates `a1, b1, a2, b2, ...` ([`VarRef`]),
//!   and the fraction field K as [`RatFunc`] with cross-multiplication
//!   equality (no multivariate gcd anywhere).
//! - [`PowerSeries`]: `R = K[[x,y]]` truncated at a total degree, with unit
//!   inversion and normal forms modulo m^k and (x^2, y^2).
//! - [`Sigma`]: the automorphism fixing x, y, and every f_n = a_n x + b_n y,
//!   acting on polynomials, fractions, and series; integer powers by
//!   iteration or closed form.
//! - [`KMatrix`]: exact linear algebra over K — fraction-free Bareiss
//!   elimination with a naive fraction oracle.
//! - The derivation engine ([`theorem`]): congruence checks, ideal
//!   membership with non-invariant coefficients, relation shifting with
//!   pollution accounting, and [`ChainCertificate`]s that the membership
//!   equations are infeasible with one coefficient vector.
//! - [`report`]: deterministic verification suites behind the `verify`,
//!   `certify`, and `bench` commands.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example polynomial_arithmetic`.

pub mod certificate;
pub mod digest;
pub mod error;
pub mod invariant;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod series;
pub mod sigma;
pub mod theorem;
pub mod var;

pub use certificate::{chain_certificate, dvr_classify, ChainCertificate, DvrClass};
pub use error::{Error, Result};
pub use invariant::InvariantSample;
pub use linalg::{DetMode, KMatrix};
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_ratfunc};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use report::{run_bench, run_certify, run_verify, Config, Report, ReportFormat};
pub use scalar::{Char, Scalar};
pub use series::{parse_series, substitute, Bideg, PowerSeries};
pub use sigma::{check_group_order, sigma_power, PowerMode, Sigma};
pub use theorem::{
    check_eq1, check_eq2, express_f_in_ideal, extract_constant_relation, make_f,
    sigma_step, LinearRelation, PollutionVector,
};
pub use var::{Family, VarRef, VarRegistry};
