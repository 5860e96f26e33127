//! Closed-form bound evaluators: the arcsin/arsinh envelopes, the π_{p,q}
//! bounds, the Carlson hypergeometric bounds and the gamma-ratio bounds.
//!
//! Every operation returns the raw bound values; strictness tolerances live
//! in the predicate sweeps.

use crate::error::{domain, Result};
use crate::special::ln_gamma;
use crate::trig::{self, PqParams};

/// Two-sided bound; one-sided bounds carry ±∞ on the missing side.
#[derive(Debug, Clone, Copy)]
pub struct Envelope {
    pub lower: f64,
    pub upper: f64,
}

impl Envelope {
    /// True iff lower < v < upper with slack at least −tol on either side.
    pub fn brackets(&self, v: f64, tol: f64) -> bool {
        v - self.lower >= -tol && self.upper - v >= -tol
    }
}

/// x(1 + x^q/(p(1+q))) < arcsin_{p,q} x < min{π_{p,q} x/2, (1−x^q)^{−1/(p(1+q))} x}.
pub fn arcsin_envelope(pq: &PqParams, x: f64) -> Result<Envelope> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("arcsin_envelope requires x in (0,1), got {x}")));
    }
    let (p, q) = (pq.p(), pq.q());
    let xq = x.powf(q);
    let lower = x * (1.0 + xq / (p * (1.0 + q)));
    let u1 = 0.5 * trig::pi_pq(pq) * x;
    let u2 = (1.0 - xq).powf(-1.0 / (p * (1.0 + q))) * x;
    Ok(Envelope {
        lower,
        upper: u1.min(u2),
    })
}

/// (x^p/(1+x^q))^{1/p} L(p,q,x) < arsinh_{p,q} x < (x^p/(1+x^q))^{1/p} U(p,q,x).
pub fn arsinh_envelope(pq: &PqParams, x: f64) -> Result<Envelope> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("arsinh_envelope requires x in (0,1), got {x}")));
    }
    let (p, q) = (pq.p(), pq.q());
    let xq = x.powf(q);
    let prefactor = x / (1.0 + xq).powf(1.0 / p);
    let l1 = 1.0 / (1.0 - q * xq / (p * (1.0 + q) * (1.0 + xq)));
    let l2 = (xq + 1.0).powf(1.0 / p) * ((p * q + p + q * xq) / (p * (q + 1.0))).powf(-1.0 / q);
    let u = (1.0 - xq / (1.0 + xq)).powf(-q / (p * (q + 1.0)));
    Ok(Envelope {
        lower: prefactor * l1.max(l2),
        upper: prefactor * u,
    })
}

/// α(c,q) = 2√π/(eq)^{1/q} · ((q(q+4)+8)/q³ + c)^{1/6}.
pub fn alpha(c: f64, q: f64) -> Result<f64> {
    if !(c > 0.0 && q > 1.0) {
        return Err(domain(format!("alpha requires c > 0, q > 1, got ({c}, {q})")));
    }
    let root = ((q * (q + 4.0) + 8.0) / (q * q * q) + c).powf(1.0 / 6.0);
    Ok(2.0 * std::f64::consts::PI.sqrt() / (std::f64::consts::E * q).powf(1.0 / q) * root)
}

/// (p/(p−1))^{1/q} α(1/100,q) < π_{p,q}
/// < ((pq+p−q)/(q(p−1)))^{1−1/q} (p/(p−1))^{1/q} α(1/30,q).
pub fn pi_pq_envelope(pq: &PqParams) -> Envelope {
    let (p, q) = (pq.p(), pq.q());
    let base = (p / (p - 1.0)).powf(1.0 / q);
    let lower = base * alpha(0.01, q).expect("valid alpha arguments");
    let upper = ((p * q + p - q) / (q * (p - 1.0))).powf(1.0 - 1.0 / q)
        * base
        * alpha(1.0 / 30.0, q).expect("valid alpha arguments");
    Envelope { lower, upper }
}

/// Bounds for π_{p′,p}:
/// 2^{1−2/p}√((π/p)(4+p)) < π_{p′,p} < 2^{1−2/p}√((π/p)(4+p) + (2√π Γ(3/4)/Γ(1/4))²).
pub fn pi_dual_envelope(p: f64) -> Result<Envelope> {
    if !(p > 1.0) {
        return Err(domain(format!("pi_dual_envelope requires p > 1, got {p}")));
    }
    let pi = std::f64::consts::PI;
    let base = (pi / p) * (4.0 + p);
    let gamma_term = (2.0 * pi.sqrt()
        * (ln_gamma(0.75)? - ln_gamma(0.25)?).exp())
    .powi(2);
    let scale = 2.0_f64.powf(1.0 - 2.0 / p);
    Ok(Envelope {
        lower: scale * base.sqrt(),
        upper: scale * (base + gamma_term).sqrt(),
    })
}

/// Bounds for π_{p,p′} (the p-circle area constant):
/// 2^{2/p}√π √(5/4 − 1/p) < π_{p,p′} < 2^{2/p}√π (2−1/p)^{3/2−1/p}/(√e (3/2−1/p)^{1−1/p}).
pub fn pi_conj_envelope(p: f64) -> Result<Envelope> {
    if !(p > 1.0) {
        return Err(domain(format!("pi_conj_envelope requires p > 1, got {p}")));
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let scale = 2.0_f64.powf(2.0 / p) * sqrt_pi;
    let lower = scale * (1.25 - 1.0 / p).sqrt();
    let upper = scale * (2.0 - 1.0 / p).powf(1.5 - 1.0 / p)
        / (std::f64::consts::E.sqrt() * (1.5 - 1.0 / p).powf(1.0 - 1.0 / p));
    Ok(Envelope { lower, upper })
}

/// Carlson bounds for F(a,b;c;x), 0 < a < c, 0 < b < c, −∞ < x < 1:
/// max{(1−bx/c)^{−a}, (1−x)^{c−a−b}(1−x+bx/c)^{a−c}} < F < (1−x)^{−ab/c}.
pub fn carlson_envelope(a: f64, b: f64, c: f64, x: f64) -> Result<Envelope> {
    if !(a > 0.0 && a < c && b > 0.0 && b < c) {
        return Err(domain(format!(
            "carlson_envelope requires 0 < a < c and 0 < b < c, got ({a}, {b}, {c})"
        )));
    }
    if !(x < 1.0) {
        return Err(domain(format!("carlson_envelope requires x < 1, got {x}")));
    }
    let l1 = (1.0 - b * x / c).powf(-a);
    let l2 = (1.0 - x).powf(c - a - b) * (1.0 - x + b * x / c).powf(a - c);
    let upper = (1.0 - x).powf(-a * b / c);
    Ok(Envelope {
        lower: l1.max(l2),
        upper,
    })
}

/// Gamma-function bound families.
#[derive(Debug, Clone, Copy)]
pub enum GammaBound {
    /// √π (x/e)^x (8x³+4x²+x+1/100)^{1/6} < Γ(1+x) < same with 1/30; x ≥ 0.
    AlzerSixthRoot { x: f64 },
    /// (x+s/2)^{1−s} < Γ(x+1)/Γ(x+s) < (x − 1/2 + (1/4+s)^{1/2})^{1−s}; x>0, s∈(0,1).
    KershawRatio { x: f64, s: f64 },
    /// Γ(b)/Γ(a) < b^{b−1/2}/a^{a−1/2} e^{a−b}; b > a > 0. One-sided.
    StirlingRatio { a: f64, b: f64 },
    /// (x/(x+s))^{1−s} ≤ Γ(x+s)/(x^s Γ(x)) ≤ 1; x>0, s∈(0,1).
    WendelRatio { x: f64, s: f64 },
}

/// Bound value(s) for the chosen variant; the target the envelope brackets
/// is available from `gamma_bound_target`.
pub fn gamma_bound(variant: GammaBound) -> Result<Envelope> {
    match variant {
        GammaBound::AlzerSixthRoot { x } => {
            if !(x >= 0.0) {
                return Err(domain(format!("AlzerSixthRoot requires x >= 0, got {x}")));
            }
            // log-space: x ln(x/e) overflows long before Γ does
            let xlx = if x == 0.0 { 0.0 } else { x * (x.ln() - 1.0) };
            let poly = 8.0 * x.powi(3) + 4.0 * x * x + x;
            let half_ln_pi = 0.5 * std::f64::consts::PI.ln();
            let side = |c: f64| (half_ln_pi + xlx + (poly + c).ln() / 6.0).exp();
            Ok(Envelope {
                lower: side(0.01),
                upper: side(1.0 / 30.0),
            })
        }
        GammaBound::KershawRatio { x, s } => {
            if !(x > 0.0 && s > 0.0 && s < 1.0) {
                return Err(domain(format!(
                    "KershawRatio requires x > 0, s in (0,1), got ({x}, {s})"
                )));
            }
            Ok(Envelope {
                lower: (x + 0.5 * s).powf(1.0 - s),
                upper: (x - 0.5 + (0.25 + s).sqrt()).powf(1.0 - s),
            })
        }
        GammaBound::StirlingRatio { a, b } => {
            if !(b > a && a > 0.0) {
                return Err(domain(format!(
                    "StirlingRatio requires b > a > 0, got ({a}, {b})"
                )));
            }
            let upper =
                ((b - 0.5) * b.ln() - (a - 0.5) * a.ln() + a - b).exp();
            Ok(Envelope {
                lower: f64::NEG_INFINITY,
                upper,
            })
        }
        GammaBound::WendelRatio { x, s } => {
            if !(x > 0.0 && s > 0.0 && s < 1.0) {
                return Err(domain(format!(
                    "WendelRatio requires x > 0, s in (0,1), got ({x}, {s})"
                )));
            }
            Ok(Envelope {
                lower: (x / (x + s)).powf(1.0 - s),
                upper: 1.0,
            })
        }
    }
}

/// The quantity each gamma-bound variant brackets, from `ln_gamma`.
pub fn gamma_bound_target(variant: GammaBound) -> Result<f64> {
    match variant {
        GammaBound::AlzerSixthRoot { x } => Ok(ln_gamma(1.0 + x)?.exp()),
        GammaBound::KershawRatio { x, s } => Ok((ln_gamma(x + 1.0)? - ln_gamma(x + s)?).exp()),
        GammaBound::StirlingRatio { a, b } => Ok((ln_gamma(b)? - ln_gamma(a)?).exp()),
        GammaBound::WendelRatio { x, s } => {
            Ok((ln_gamma(x + s)? - s * x.ln() - ln_gamma(x)?).exp())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::{arcsin_pq, arsinh_pq, pi_pq};
    use std::f64::consts::PI;

    fn pq(p: f64, q: f64) -> PqParams {
        PqParams::new(p, q).unwrap()
    }

    #[test]
    fn arcsin_envelope_brackets_table_value() {
        let params = pq(2.5, 3.0);
        let e = arcsin_envelope(&params, 0.5).unwrap();
        assert!((e.lower - 0.50625).abs() < 1e-10);
        let v = arcsin_pq(&params, 0.5).unwrap();
        assert!(e.lower < v && v < e.upper);
        assert!(arcsin_envelope(&params, 0.0).is_err());
        assert!(arcsin_envelope(&params, 1.0).is_err());
    }

    #[test]
    fn arcsin_envelope_classical() {
        let e = arcsin_envelope(&pq(2.0, 2.0), 0.5).unwrap();
        let v = 0.5_f64.asin();
        assert!(e.lower < v && v < e.upper, "{e:?} vs {v}");
    }

    #[test]
    fn arsinh_envelope_brackets() {
        let params = pq(2.5, 3.0);
        for &(x, want) in &[(0.5, 0.4940), (0.25, 0.2496)] {
            let e = arsinh_envelope(&params, x).unwrap();
            assert!(e.lower < want + 5e-5 && want - 5e-5 < e.upper, "x={x} {e:?}");
            let v = arsinh_pq(&params, x).unwrap();
            assert!(e.lower < v && v < e.upper, "x={x} {e:?} vs {v}");
        }
        let e = arsinh_envelope(&pq(2.0, 2.0), 0.5).unwrap();
        let v = 0.5_f64.asinh();
        assert!(e.lower < v && v < e.upper);
    }

    #[test]
    fn alpha_values() {
        // extended-precision evaluation of the closed form
        assert!((alpha(0.01, 3.0).unwrap() - 1.78495).abs() < 1e-3);
        assert!(alpha(1.0 / 30.0, 3.0).unwrap() > alpha(0.01, 3.0).unwrap());
        let want = 2.0 * PI.sqrt() / (2.0 * std::f64::consts::E).sqrt()
            * (20.0_f64 / 8.0 + 0.01).powf(1.0 / 6.0);
        assert!((alpha(0.01, 2.0).unwrap() - want).abs() < 1e-12);
        assert!(alpha(-0.1, 2.0).is_err());
    }

    #[test]
    fn pi_envelope_brackets_pi() {
        let e = pi_pq_envelope(&pq(2.0, 2.0));
        assert!(e.lower < PI && PI < e.upper, "{e:?}");
        let params = pq(2.5, 3.0);
        let e = pi_pq_envelope(&params);
        let v = pi_pq(&params);
        assert!((v - 2.5496).abs() < 1e-4);
        assert!(e.lower < v && v < e.upper, "{e:?} vs {v}");
        let params = pq(10.0, 1.5);
        let e = pi_pq_envelope(&params);
        let v = pi_pq(&params);
        assert!(e.lower < v && v < e.upper, "{e:?} vs {v}");
    }

    #[test]
    fn dual_envelope_spot_values() {
        let e = pi_dual_envelope(2.0).unwrap();
        assert!((e.lower - (3.0 * PI).sqrt()).abs() < 1e-12);
        assert!((e.lower - 3.0700).abs() < 1e-4);
        assert!((e.upper - 3.2955).abs() < 1e-4);
        assert!(e.lower < PI && PI < e.upper);
        // p = 4: brackets π_{4/3,4}
        let v = pi_pq(&pq(4.0 / 3.0, 4.0));
        let e = pi_dual_envelope(4.0).unwrap();
        assert!(e.lower < v && v < e.upper, "{e:?} vs {v}");
    }

    #[test]
    fn conj_envelope_spot_values() {
        let e = pi_conj_envelope(2.0).unwrap();
        assert!((e.lower - (3.0 * PI).sqrt()).abs() < 1e-12);
        assert!(e.lower < PI && PI < e.upper);
        for &p in &[1.5, 3.0, 5.0, 10.0] {
            let v = pi_pq(&pq(p, p / (p - 1.0)));
            let e = pi_conj_envelope(p).unwrap();
            assert!(e.lower < v && v < e.upper, "p={p}: {e:?} vs {v}");
            assert!((e.upper - e.lower).is_finite() && e.upper > e.lower);
        }
    }

    #[test]
    fn carlson_envelope_brackets() {
        use crate::special::{gauss_2f1, HypTriple};
        // table-derived ₂F₁ point
        let e = carlson_envelope(0.4, 1.0 / 3.0, 4.0 / 3.0, 0.125).unwrap();
        assert!(e.brackets(1.01318, 2e-5), "{e:?}");
        // classical value on the x < 0 branch
        let f = (1.0 + 2.0_f64.sqrt()).ln();
        let e = carlson_envelope(0.5, 0.5, 1.5, -1.0).unwrap();
        assert!(e.lower < f && f < e.upper, "{e:?} vs {f}");
        // near-origin collapse
        let e = carlson_envelope(0.5, 0.5, 1.5, 1e-12).unwrap();
        let t = HypTriple::new(0.5, 0.5, 1.5).unwrap();
        let v = gauss_2f1(&t, 1e-12).unwrap().value;
        assert!((e.lower - 1.0).abs() < 1e-11 && (e.upper - 1.0).abs() < 1e-11);
        assert!((v - 1.0).abs() < 1e-11);
        assert!(carlson_envelope(2.0, 0.5, 1.5, 0.5).is_err());
        assert!(carlson_envelope(0.5, 0.5, 1.5, 1.0).is_err());
    }

    #[test]
    fn gamma_bounds_spot_values() {
        let e = gamma_bound(GammaBound::AlzerSixthRoot { x: 1.0 }).unwrap();
        assert!(e.lower < 1.0 && 1.0 < e.upper, "{e:?}");
        assert!((e.lower - 0.99998).abs() < 5e-5);
        assert!((e.upper - 1.00030).abs() < 5e-5);

        let e = gamma_bound(GammaBound::WendelRatio { x: 1.0, s: 0.5 }).unwrap();
        let t = gamma_bound_target(GammaBound::WendelRatio { x: 1.0, s: 0.5 }).unwrap();
        assert!((e.lower - (1.0_f64 / 1.5).sqrt()).abs() < 1e-14);
        assert!((t - 0.5 * PI.sqrt()).abs() < 1e-13); // Γ(3/2) = √π/2
        assert!(e.lower <= t && t <= e.upper);

        let v = GammaBound::KershawRatio { x: 0.5, s: 0.5 };
        let e = gamma_bound(v).unwrap();
        let t = gamma_bound_target(v).unwrap();
        assert!(e.lower < t && t < e.upper, "{e:?} vs {t}");

        let v = GammaBound::StirlingRatio { a: 1.0, b: 1.5 };
        let e = gamma_bound(v).unwrap();
        let t = gamma_bound_target(v).unwrap();
        assert!(e.lower == f64::NEG_INFINITY && t < e.upper);

        assert!(gamma_bound(GammaBound::AlzerSixthRoot { x: -0.5 }).is_err());
        assert!(gamma_bound(GammaBound::KershawRatio { x: 1.0, s: 1.5 }).is_err());
        assert!(gamma_bound(GammaBound::StirlingRatio { a: 2.0, b: 1.0 }).is_err());
    }
}
