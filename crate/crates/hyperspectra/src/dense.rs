//! Dense symmetric eigensolver (cyclic Jacobi rotations), built from scratch
//! so the k=2 spectral radius has an oracle that shares no code with the
//! tensor power iteration.

use crate::hypergraph::Hypergraph;
use crate::spectral::SpectralError;

/// Largest matrix order accepted by the dense oracle.
pub const MAX_DENSE_ORDER: usize = 64;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a symmetric matrix given in row-major order, ascending.
///
/// Cyclic Jacobi: sweep all (p, q) pairs, annihilating each off-diagonal
/// entry with a plane rotation, until the off-diagonal norm falls below
/// 1e-14 relative to the Frobenius norm. Quadratic convergence makes a
/// handful of sweeps enough for any order this module accepts.
pub fn symmetric_eigenvalues(matrix: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    if n == 0 {
        return Vec::new();
    }
    let mut a = matrix.to_vec();
    let frobenius: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-14 * frobenius.max(1.0);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller root of t^2 + 2 t theta - 1 = 0
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                let rotate = |a: &mut [f64], i: usize, j: usize, k: usize, l: usize| {
                    let g = a[i * n + j];
                    let h = a[k * n + l];
                    a[i * n + j] = g - s * (h + g * tau);
                    a[k * n + l] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, j, p, j, q);
                }
                for j in (p + 1)..q {
                    rotate(&mut a, p, j, j, q);
                }
                for j in (q + 1)..n {
                    rotate(&mut a, p, j, q, j);
                }
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigenvalues
}

/// Spectral radius of the ordinary adjacency matrix of a 2-uniform
/// hypergraph. For a nonnegative symmetric matrix this is the largest
/// eigenvalue, so no modulus comparison is needed.
pub fn spectral_radius_dense(h: &Hypergraph) -> Result<f64, SpectralError> {
    if h.k() != 2 {
        return Err(SpectralError::NotAGraph { k: h.k() });
    }
    let n = h.n();
    if n > MAX_DENSE_ORDER {
        return Err(SpectralError::TooLargeForDense {
            n,
            max: MAX_DENSE_ORDER,
        });
    }
    let mut a = vec![0.0; n * n];
    for edge in h.edges() {
        let (u, v) = (edge[0] - 1, edge[1] - 1);
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let eigenvalues = symmetric_eigenvalues(&a, n);
    Ok(*eigenvalues.last().expect("n >= 1"))
}
