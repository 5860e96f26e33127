//! Forward (p,q)-trigonometric functions and constants.
//!
//! arcsin_{p,q} x = x·F(1/p, 1/q; 1+1/q; x^q) on [0,1],
//! arsinh_{p,q} x = x·F(1/p, 1/q; 1+1/q; −x^q) on [0,∞),
//! π_{p,q} = (2/q)·B(1−1/p, 1/q), m_{p,q} = 2^{−1/p}·F(1, 1/p; 1+1/q; 1/2).

use crate::error::{domain, Error, Result};
use crate::quad;
use crate::special::{self, EvalResult, HypTriple, Method};

/// Validated exponent pair with p, q > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqParams {
    p: f64,
    q: f64,
}

impl PqParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && q.is_finite() && p > 1.0 && q > 1.0) {
            return Err(domain(format!("require p, q > 1, got ({p}, {q})")));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Conjugate exponent p' = p/(p−1).
    pub fn p_conj(&self) -> f64 {
        self.p / (self.p - 1.0)
    }
}

/// Constants attached to one (p,q) pair.
#[derive(Debug, Clone, Copy)]
pub struct PqConstants {
    /// π_{p,q}/2, the right endpoint of arcsin's range.
    pub pi_half: f64,
    /// m_{p,q} = arsinh_{p,q}(1).
    pub m: f64,
    /// q(p−1)/p, the eigenvalue for which sin_{p,q} satisfies the
    /// displayed boundary value problem.
    pub lambda_star: f64,
}

/// π_{p,q} = (2/q)·B(1−1/p, 1/q).
pub fn pi_pq(pq: &PqParams) -> f64 {
    let b = special::beta(1.0 - 1.0 / pq.p, 1.0 / pq.q).expect("positive beta arguments");
    2.0 / pq.q * b
}

pub fn constants(pq: &PqParams) -> PqConstants {
    PqConstants {
        pi_half: 0.5 * pi_pq(pq),
        m: m_pq(pq),
        lambda_star: pq.q * (pq.p - 1.0) / pq.p,
    }
}

fn arcsin_triple(pq: &PqParams) -> HypTriple {
    HypTriple::new(1.0 / pq.p, 1.0 / pq.q, 1.0 + 1.0 / pq.q).expect("valid arcsin triple")
}

/// arcsin_{p,q} with the evaluation route and error estimate.
pub fn arcsin_pq_eval(pq: &PqParams, x: f64) -> Result<EvalResult> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain(format!("arcsin_pq requires x in [0,1], got {x}")));
    }
    let z = x.powf(pq.q);
    match special::gauss_2f1(&arcsin_triple(pq), z) {
        Ok(f) => Ok(EvalResult {
            value: x * f.value,
            abs_err_est: x * f.abs_err_est,
            method: f.method,
        }),
        Err(Error::NonConvergent { .. }) | Err(Error::NoConvergence { .. }) => {
            let r = quad::arcsin_quad(pq, x)?;
            Ok(EvalResult {
                value: r.value,
                abs_err_est: r.abs_err_est,
                method: Method::Quadrature,
            })
        }
        Err(e) => Err(e),
    }
}

pub fn arcsin_pq(pq: &PqParams, x: f64) -> Result<f64> {
    arcsin_pq_eval(pq, x).map(|r| r.value)
}

/// arccos_{p,q} x = arcsin_{p,q}((1−x^p)^{1/q}).
pub fn arccos_pq(pq: &PqParams, x: f64) -> Result<f64> {
    arccos_pq_eval(pq, x).map(|r| r.value)
}

pub fn arccos_pq_eval(pq: &PqParams, x: f64) -> Result<EvalResult> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain(format!("arccos_pq requires x in [0,1], got {x}")));
    }
    let y = (-(pq.p * x.ln()).exp_m1()).powf(1.0 / pq.q);
    // x = 0 gives ln x = -inf, exp_m1 -> -1, y = 1 exactly
    let y = if x == 0.0 { 1.0 } else { y.clamp(0.0, 1.0) };
    arcsin_pq_eval(pq, y)
}

/// arsinh_{p,q} through the Pfaff-transformed representation
/// (x^p/(1+x^q))^{1/p}·F(1, 1/p; 1+1/q; x^q/(1+x^q)), valid for all x ≥ 0.
pub fn arsinh_pq_eval(pq: &PqParams, x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x < 0.0 {
        return Err(domain(format!("arsinh_pq requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult {
            value: 0.0,
            abs_err_est: 0.0,
            method: Method::DirectSeries,
        });
    }
    let (p, q) = (pq.p, pq.q);
    // z = x^q/(1+x^q) and prefactor x/(1+x^q)^{1/p}, stable for large x
    let (z, prefactor) = if x <= 1.0 {
        let xq = x.powf(q);
        (xq / (1.0 + xq), x / (1.0 + xq).powf(1.0 / p))
    } else {
        let xmq = x.powf(-q);
        let ln1pxq = q * x.ln() + xmq.ln_1p();
        (1.0 / (1.0 + xmq), (x.ln() - ln1pxq / p).exp())
    };
    // F is ill-conditioned as z -> 1 (dF/dz ~ F/(1-z)), so the rounding of
    // z alone costs ~eps/(1-z) relative error; hand those x to quadrature
    if 1.0 - z < 1e-5 {
        let r = quad::arsinh_quad(pq, x)?;
        return Ok(EvalResult {
            value: r.value,
            abs_err_est: r.abs_err_est,
            method: Method::Quadrature,
        });
    }
    let triple = HypTriple::new(1.0, 1.0 / p, 1.0 + 1.0 / q).expect("valid arsinh triple");
    match special::gauss_2f1(&triple, z) {
        Ok(f) => Ok(EvalResult {
            value: prefactor * f.value,
            abs_err_est: prefactor * f.abs_err_est,
            method: f.method,
        }),
        Err(Error::NonConvergent { .. }) | Err(Error::NoConvergence { .. }) => {
            let r = quad::arsinh_quad(pq, x)?;
            Ok(EvalResult {
                value: r.value,
                abs_err_est: r.abs_err_est,
                method: Method::Quadrature,
            })
        }
        Err(e) => Err(e),
    }
}

pub fn arsinh_pq(pq: &PqParams, x: f64) -> Result<f64> {
    arsinh_pq_eval(pq, x).map(|r| r.value)
}

/// m_{p,q} = 2^{−1/p}·F(1, 1/p; 1+1/q; 1/2) = arsinh_{p,q}(1).
pub fn m_pq(pq: &PqParams) -> f64 {
    let triple =
        HypTriple::new(1.0, 1.0 / pq.p, 1.0 + 1.0 / pq.q).expect("valid arsinh triple");
    let f = special::gauss_2f1(&triple, 0.5).expect("direct series at 1/2 converges");
    0.5_f64.powf(1.0 / pq.p) * f.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pq(p: f64, q: f64) -> PqParams {
        PqParams::new(p, q).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(PqParams::new(1.0, 2.0).is_err());
        assert!(PqParams::new(2.0, 0.5).is_err());
        assert!(PqParams::new(f64::NAN, 2.0).is_err());
        assert!((pq(2.0, 2.0).p_conj() - 2.0).abs() < 1e-15);
        assert!((pq(4.0, 2.0).p_conj() - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn pi_pq_classical() {
        assert!((pi_pq(&pq(2.0, 2.0)) - PI).abs() < 1e-12);
    }

    #[test]
    fn pi_pq_table_constant() {
        assert!((pi_pq(&pq(2.5, 3.0)) - 2.5496).abs() < 1e-4);
    }

    #[test]
    fn pi_pq_is_twice_arcsin_at_one() {
        for &(p, q) in &[(1.5, 2.5), (3.0, 1.2), (2.5, 3.0), (10.0, 1.1)] {
            let params = pq(p, q);
            let half = arcsin_pq(&params, 1.0).unwrap();
            assert!(
                (pi_pq(&params) - 2.0 * half).abs() < 1e-10 * pi_pq(&params),
                "(p,q)=({p},{q})"
            );
        }
    }

    #[test]
    fn arcsin_table_points() {
        let params = pq(2.5, 3.0);
        assert!((arcsin_pq(&params, 0.75).unwrap() - 0.7887).abs() < 5e-5);
        assert_eq!(arcsin_pq(&params, 0.0).unwrap(), 0.0);
        assert!((arcsin_pq(&pq(2.0, 2.0), 0.5).unwrap() - PI / 6.0).abs() < 1e-13);
        assert!(arcsin_pq(&params, 1.01).is_err());
        assert!(arcsin_pq(&params, -0.1).is_err());
    }

    #[test]
    fn arccos_table_points() {
        let params = pq(2.5, 3.0);
        assert!((arccos_pq(&params, 0.5).unwrap() - 1.0688).abs() < 5e-5);
        assert!((arccos_pq(&params, 0.25).unwrap() - 1.2048).abs() < 5e-5);
        assert_eq!(arccos_pq(&params, 1.0).unwrap(), 0.0);
        let half = 0.5 * pi_pq(&params);
        assert!((arccos_pq(&params, 0.0).unwrap() - half).abs() < 1e-10);
    }

    #[test]
    fn arsinh_table_points() {
        let params = pq(2.5, 3.0);
        assert!((arsinh_pq(&params, 0.5).unwrap() - 0.4940).abs() < 5e-5);
        assert!((arsinh_pq(&params, 1.0).unwrap() - 0.9262).abs() < 5e-5);
        assert_eq!(arsinh_pq(&params, 0.0).unwrap(), 0.0);
        assert!(arsinh_pq(&params, -1.0).is_err());
    }

    #[test]
    fn arsinh_classical() {
        let p22 = pq(2.0, 2.0);
        for &x in &[0.1_f64, 0.5, 1.0, 3.0, 10.0] {
            let want = x.asinh();
            let got = arsinh_pq(&p22, x).unwrap();
            assert!((got - want).abs() < 1e-12 * (1.0 + want), "x={x}: {got}");
        }
    }

    #[test]
    fn m_is_arsinh_at_one() {
        for &(p, q) in &[(2.0, 2.0), (2.5, 3.0), (1.5, 5.0), (10.0, 1.5)] {
            let params = pq(p, q);
            let m = m_pq(&params);
            assert!((m - arsinh_pq(&params, 1.0).unwrap()).abs() < 1e-11);
        }
        assert!((m_pq(&pq(2.0, 2.0)) - (1.0 + 2.0_f64.sqrt()).ln()).abs() < 1e-13);
    }

    #[test]
    fn constants_invariants() {
        for &(p, q) in &[(1.1, 10.0), (2.5, 3.0), (10.0, 1.1)] {
            let c = constants(&pq(p, q));
            assert!(c.pi_half > 1.0);
            assert!(c.m < 1.0 && c.m < c.pi_half);
            assert!((c.lambda_star - q * (p - 1.0) / p).abs() < 1e-15);
        }
    }

    #[test]
    fn ordering_arsinh_below_arcsin() {
        for &(p, q) in &[(1.1, 1.1), (2.5, 3.0), (5.0, 2.0)] {
            let params = pq(p, q);
            let mut x = 0.05;
            while x < 1.0 {
                let a = arcsin_pq(&params, x).unwrap();
                let b = arsinh_pq(&params, x).unwrap();
                assert!(b < a, "(p,q,x)=({p},{q},{x})");
                x += 0.05;
            }
        }
    }

    #[test]
    fn complement_identity() {
        // arccos((1-x^q)^(1/p)) recovers arcsin(x)
        for &(p, q) in &[(2.0, 2.0), (2.5, 3.0), (1.5, 4.0)] {
            let params = pq(p, q);
            let mut x = 0.0_f64;
            while x <= 1.0 {
                let y = (1.0 - x.powf(q)).powf(1.0 / p);
                let lhs = arccos_pq(&params, y).unwrap();
                let rhs = arcsin_pq(&params, x).unwrap();
                assert!((lhs - rhs).abs() < 1e-10, "(p,q,x)=({p},{q},{x}): {lhs} vs {rhs}");
                x += 0.125;
            }
        }
    }

    #[test]
    fn arsinh_large_argument_matches_quadrature() {
        // z = 256/257: exercises the transformed-series route
        let params = pq(1.5, 8.0);
        let got = arsinh_pq(&params, 2.0).unwrap();
        let want = quad::arsinh_quad(&params, 2.0).unwrap().value;
        assert!((got - want).abs() < 1e-10, "got {got} want {want}");
        // z within 1e-5 of 1: must reroute to quadrature
        let r = arsinh_pq_eval(&params, 10.0).unwrap();
        assert_eq!(r.method, Method::Quadrature);
        assert!((r.value - 1.1404939307409372).abs() < 1e-10, "got {}", r.value);
    }
}
