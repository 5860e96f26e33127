//! Inversion round-trip and structural invariants, both on fixed grids and
//! under randomized parameters.

use proptest::prelude::*;
use pqtrig::{arcsin_pq, arsinh_pq, cos_pq, pi_pq, sin_pq, sinh_pq, PqParams, X_MAX};

const GRID: [f64; 7] = [1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0];

fn fracs() -> Vec<f64> {
    (1..=19)
        .map(|i| i as f64 * 0.05)
        .chain([0.99, 0.999])
        .collect()
}

#[test]
fn arcsin_round_trip_within_float_granularity() {
    // Near x = 1 the derivative of arcsin blows up like (1-x^q)^(-1/p), so
    // the inverse cannot distinguish y values mapping to the same f64 x.
    // The honest bound is the derivative times one ulp of x, plus the
    // root-finder tolerance.
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            let half = 0.5 * pi_pq(&pq);
            for f in fracs() {
                let y = f * half;
                let x = sin_pq(&pq, y).unwrap();
                let back = arcsin_pq(&pq, x).unwrap();
                let granularity = if x < 1.0 {
                    (1.0 - x.powf(q)).powf(-1.0 / p) * x * f64::EPSILON
                } else {
                    f64::INFINITY
                };
                let bound = 2.0 * granularity + 1e-11 * (1.0 + y);
                assert!(
                    (back - y).abs() <= bound,
                    "(p,q,f)=({p},{q},{f}): err {:e} > bound {bound:e}",
                    (back - y).abs()
                );
            }
        }
    }
}

#[test]
fn arcsin_round_trip_tight_away_from_small_p() {
    for &p in &GRID {
        if p < 2.0 {
            continue;
        }
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            let half = 0.5 * pi_pq(&pq);
            for f in fracs() {
                let y = f * half;
                let back = arcsin_pq(&pq, sin_pq(&pq, y).unwrap()).unwrap();
                assert!(
                    (back - y).abs() <= 1e-12 * (1.0 + y),
                    "(p,q,f)=({p},{q},{f}): err {:e}",
                    (back - y).abs()
                );
            }
        }
    }
}

#[test]
fn arsinh_round_trip() {
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            let y_max = arsinh_pq(&pq, X_MAX).unwrap();
            for f in fracs() {
                let y = f * y_max;
                let back = arsinh_pq(&pq, sinh_pq(&pq, y).unwrap()).unwrap();
                assert!(
                    (back - y).abs() <= 1e-11 * (1.0 + y),
                    "(p,q,f)=({p},{q},{f}): err {:e}",
                    (back - y).abs()
                );
            }
        }
    }
}

#[test]
fn sin_hits_endpoints() {
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            let half = 0.5 * pi_pq(&pq);
            assert_eq!(sin_pq(&pq, 0.0).unwrap(), 0.0);
            assert_eq!(sin_pq(&pq, half).unwrap(), 1.0);
            assert_eq!(cos_pq(&pq, 0.0).unwrap(), 1.0);
            assert_eq!(cos_pq(&pq, half).unwrap(), 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_round_trip(
        p in 1.2f64..10.0,
        q in 1.2f64..10.0,
        f in 0.01f64..0.95,
    ) {
        let pq = PqParams::new(p, q).unwrap();
        let y = f * 0.5 * pi_pq(&pq);
        let back = arcsin_pq(&pq, sin_pq(&pq, y).unwrap()).unwrap();
        prop_assert!((back - y).abs() <= 1e-9 * (1.0 + y));
    }

    #[test]
    fn random_pythagorean_identity(
        p in 1.2f64..10.0,
        q in 1.2f64..10.0,
        f in 0.01f64..0.99,
    ) {
        let pq = PqParams::new(p, q).unwrap();
        let y = f * 0.5 * pi_pq(&pq);
        let s = sin_pq(&pq, y).unwrap();
        let c = cos_pq(&pq, y).unwrap();
        prop_assert!((c.powf(p) + s.powf(q) - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn random_monotone_and_ordered(
        p in 1.2f64..10.0,
        q in 1.2f64..10.0,
        f in 0.02f64..0.98,
    ) {
        let pq = PqParams::new(p, q).unwrap();
        let half = 0.5 * pi_pq(&pq);
        let (y1, y2) = (f * half, (f + 0.01) * half);
        prop_assert!(sin_pq(&pq, y1).unwrap() < sin_pq(&pq, y2).unwrap());
        // forward ordering: arsinh <= arcsin on (0,1); the analytic gap
        // ~2x^{q+1}/(p(q+1)) can sit below one ulp for small x, large q
        let x = f;
        prop_assert!(arsinh_pq(&pq, x).unwrap() <= arcsin_pq(&pq, x).unwrap());
    }
}
