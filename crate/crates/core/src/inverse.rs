//! Numerical inverses sin_{p,q}, cos_{p,q}, sinh_{p,q} by safeguarded
//! Newton iteration on the forward maps.

use crate::error::{domain, Error, Result};
use crate::trig::{self, PqParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuessPolicy {
    /// x₀ proportional to y over the bracket image.
    LinearScale,
    /// x₀ at the bracket midpoint.
    Midpoint,
}

#[derive(Debug, Clone, Copy)]
pub struct RootConfig {
    pub abs_tol: f64,
    pub max_iter: usize,
    pub guess: GuessPolicy,
}

impl Default for RootConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            max_iter: 200,
            guess: GuessPolicy::LinearScale,
        }
    }
}

impl RootConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1e-15..=1e-6).contains(&self.abs_tol) {
            return Err(domain(format!(
                "abs_tol must lie in [1e-15, 1e-6], got {}",
                self.abs_tol
            )));
        }
        if self.max_iter < 8 {
            return Err(domain("max_iter must be at least 8".to_string()));
        }
        Ok(())
    }
}

/// Solves f(x) = y for a strictly increasing f on the bracket.
///
/// A Newton step is taken when it stays inside the current bracket,
/// bisection otherwise; the bracket invariant f(lo) <= y <= f(hi) is
/// maintained every iteration. Convergence is declared on the residual
/// |f(x) − y| <= abs_tol·(1+|y|), or when the bracket collapses to
/// adjacent floats (no representable argument does better — this happens
/// where f has an enormous derivative and the residual tolerance is below
/// one ulp of granularity).
pub fn invert_monotone<F, D>(
    f: F,
    f_deriv: D,
    y: f64,
    bracket: (f64, f64),
    cfg: &RootConfig,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> f64,
{
    cfg.validate()?;
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) {
        return Err(domain(format!("invalid bracket ({lo}, {hi})")));
    }
    let tol = cfg.abs_tol * (1.0 + y.abs());
    let f_lo = f(lo)?;
    if (f_lo - y).abs() <= tol {
        return Ok(lo);
    }
    let f_hi = f(hi)?;
    if (f_hi - y).abs() <= tol {
        return Ok(hi);
    }
    if y < f_lo || y > f_hi {
        return Err(Error::BracketInvalid { y, f_lo, f_hi });
    }

    let mut x = match cfg.guess {
        GuessPolicy::LinearScale => {
            let t = (y - f_lo) / (f_hi - f_lo);
            lo + (hi - lo) * t.clamp(1e-6, 1.0 - 1e-6)
        }
        GuessPolicy::Midpoint => 0.5 * (lo + hi),
    };
    let mut best = (x, f64::INFINITY);
    for _ in 0..cfg.max_iter {
        let fx = f(x)?;
        let r = fx - y;
        if r.abs() <= tol {
            return Ok(x);
        }
        if r.abs() < best.1 {
            best = (x, r.abs());
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        // bracket collapsed: return the argument with the smallest residual
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            let (r_lo, r_hi) = ((f(lo)? - y).abs(), (f(hi)? - y).abs());
            let (xc, rc) = if r_lo <= r_hi { (lo, r_lo) } else { (hi, r_hi) };
            return Ok(if rc <= best.1 { xc } else { best.0 });
        }
        let d = f_deriv(x);
        let newton = x - r / d;
        x = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            mid
        };
    }
    Err(Error::MaxIterExceeded(cfg.max_iter))
}

/// sin_{p,q}(y) on [0, π_{p,q}/2], the inverse of arcsin_{p,q}.
pub fn sin_pq(pq: &PqParams, y: f64) -> Result<f64> {
    let pi_half = 0.5 * trig::pi_pq(pq);
    if !y.is_finite() || y < 0.0 || y > pi_half * (1.0 + 4.0 * f64::EPSILON) {
        return Err(domain(format!(
            "sin_pq requires y in [0, {pi_half}], got {y}"
        )));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    if y >= pi_half {
        return Ok(1.0);
    }
    let (p, q) = (pq.p(), pq.q());
    invert_monotone(
        |x| trig::arcsin_pq(pq, x),
        |x| (1.0 - x.powf(q)).powf(-1.0 / p),
        y,
        (0.0, 1.0),
        &RootConfig::default(),
    )
}

/// cos_{p,q}(y) = (1 − sin_{p,q}(y)^q)^{1/p}.
pub fn cos_pq(pq: &PqParams, y: f64) -> Result<f64> {
    let s = sin_pq(pq, y)?;
    if s == 0.0 {
        return Ok(1.0);
    }
    Ok((-(pq.q() * s.ln()).exp_m1()).powf(1.0 / pq.p()))
}

/// Default cap on the sinh bracket; arsinh may tend to a finite limit, so
/// the inverse is only offered up to Y_max = arsinh_{p,q}(X_MAX).
pub const X_MAX: f64 = 10.0;

/// Y_max for the default bracket cap.
pub fn sinh_y_max(pq: &PqParams) -> f64 {
    trig::arsinh_pq(pq, X_MAX).expect("arsinh at X_MAX")
}

/// sinh_{p,q}(y) on [0, Y_max], the inverse of arsinh_{p,q}.
pub fn sinh_pq(pq: &PqParams, y: f64) -> Result<f64> {
    sinh_pq_capped(pq, y, X_MAX)
}

pub fn sinh_pq_capped(pq: &PqParams, y: f64, x_max: f64) -> Result<f64> {
    if !y.is_finite() || y < 0.0 {
        return Err(domain(format!("sinh_pq requires y >= 0, got {y}")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let y_max = trig::arsinh_pq(pq, x_max)?;
    if y > y_max * (1.0 + 4.0 * f64::EPSILON) {
        return Err(domain(format!(
            "sinh_pq requires y <= Y_max = {y_max}, got {y}"
        )));
    }
    let (p, q) = (pq.p(), pq.q());
    let cfg = RootConfig::default();
    // arsinh is near-identity at the origin, so x0 = y is a good start
    let x0 = y.clamp(1e-6 * x_max, (1.0 - 1e-6) * x_max);
    let mut lo = 0.0;
    let mut hi = x_max;
    // one pre-step tightens the bracket around the linear guess
    let f0 = trig::arsinh_pq(pq, x0)?;
    if f0 < y {
        lo = x0;
    } else {
        hi = x0;
    }
    invert_monotone(
        |x| trig::arsinh_pq(pq, x),
        |x| (1.0 + x.powf(q)).powf(-1.0 / p),
        y,
        (lo, hi),
        &cfg,
    )
}
