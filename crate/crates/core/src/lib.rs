//! Generalized (p,q)-trigonometric functions.
//!
//! The forward functions `arcsin_pq`, `arccos_pq` and `arsinh_pq` are driven
//! by a real-argument Gauss hypergeometric evaluator with an independent
//! tanh-sinh quadrature oracle; the inverse functions `sin_pq`, `cos_pq` and
//! `sinh_pq` are obtained by safeguarded Newton inversion. The `bounds`
//! module evaluates the closed-form envelopes for these functions and for
//! the half-period constant, and `propcheck` sweeps every inequality and
//! identity predicate over parameter grids.

// negated comparisons are used deliberately throughout: `!(x > 0.0)` must
// reject NaN, which `x <= 0.0` would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod inverse;
pub mod propcheck;
pub mod quad;
pub mod special;
pub mod trig;

pub use bounds::{
    arcsin_envelope, arsinh_envelope, carlson_envelope, gamma_bound, pi_conj_envelope,
    pi_dual_envelope, pi_pq_envelope, Envelope, GammaBound,
};
pub use error::{Error, Result};
pub use inverse::{cos_pq, invert_monotone, sin_pq, sinh_pq, GuessPolicy, RootConfig, X_MAX};
pub use quad::{arcsin_quad, arsinh_quad, integrate_de, integrate_de_sing, QuadResult};
pub use special::{beta, gauss_2f1, gauss_series, ln_gamma, EvalResult, HypTriple, Method};
pub use trig::{
    arccos_pq, arcsin_pq, arcsin_pq_eval, arsinh_pq, arsinh_pq_eval, constants, m_pq, pi_pq,
    PqConstants, PqParams,
};
