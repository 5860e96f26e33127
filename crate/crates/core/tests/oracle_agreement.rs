//! Cross-checks the hypergeometric evaluation path against the independent
//! tanh-sinh quadrature oracle over the full default parameter grid.

use pqtrig::{arcsin_pq, arcsin_quad, arsinh_pq, arsinh_quad, PqParams};

const GRID: [f64; 7] = [1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0];

fn xs() -> Vec<f64> {
    (1..=19).map(|i| i as f64 * 0.05).collect()
}

#[test]
fn arcsin_series_agrees_with_quadrature() {
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            for x in xs() {
                let series = arcsin_pq(&pq, x).unwrap();
                let oracle = arcsin_quad(&pq, x).unwrap().value;
                assert!(
                    (series - oracle).abs() <= 1e-10,
                    "(p,q,x)=({p},{q},{x}): series {series} oracle {oracle}"
                );
            }
        }
    }
}

#[test]
fn arsinh_series_agrees_with_quadrature() {
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            for x in xs() {
                let series = arsinh_pq(&pq, x).unwrap();
                let oracle = arsinh_quad(&pq, x).unwrap().value;
                assert!(
                    (series - oracle).abs() <= 1e-10,
                    "(p,q,x)=({p},{q},{x}): series {series} oracle {oracle}"
                );
            }
        }
    }
}

#[test]
fn half_period_agrees_with_quadrature_endpoint() {
    for &p in &GRID {
        for &q in &GRID {
            let pq = PqParams::new(p, q).unwrap();
            let closed = 0.5 * pqtrig::pi_pq(&pq);
            let oracle = arcsin_quad(&pq, 1.0).unwrap().value;
            assert!(
                (closed - oracle).abs() <= 1e-9 * (1.0 + closed),
                "(p,q)=({p},{q}): closed {closed} oracle {oracle}"
            );
        }
    }
}
