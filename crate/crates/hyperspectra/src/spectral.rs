//! Principal eigenpair of the adjacency tensor by certified power iteration.
//!
//! The adjacency tensor is never materialized: for a vector x, component i of
//! the tensor contraction is the sum over edges e containing i of the product
//! of x over the other k-1 vertices of e, which costs O(k m) per application.
//!
//! Certification is separate from iteration. For every strictly positive x,
//! the ratios (Ax^{k-1})_i / x_i^{k-1} bracket the spectral radius of a
//! nonnegative weakly irreducible tensor between their minimum and maximum,
//! so the returned bracket is valid no matter how the iterate was produced.

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::MAX_EDGE_CARDINALITY;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("spectral analysis requires a connected hypergraph")]
    Disconnected,
    #[error("spectral analysis requires at least one edge")]
    NoEdges,
    #[error("edge cardinality {k} exceeds the supported maximum {max}")]
    EdgeCardinalityTooLarge { k: usize, max: usize },
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector entry {index} is not strictly positive")]
    NonpositiveEntry { index: usize },
    #[error("vector is not normalized: sum of k-th powers is {sum}")]
    Unnormalized { sum: f64 },
    #[error(
        "power iteration did not converge within {iterations} iterations \
         (bracket [{lower}, {upper}])"
    )]
    NotConverged {
        iterations: usize,
        lower: f64,
        upper: f64,
    },
    #[error("dense oracle requires k = 2, got k = {k}")]
    NotAGraph { k: usize },
    #[error("dense oracle supports at most {max} vertices, got {n}")]
    TooLargeForDense { n: usize, max: usize },
}

/// Convergence parameters for [`principal_eigenpair`].
#[derive(Debug, Clone, Copy)]
pub struct SpectralOptions {
    /// Target width of the certified bracket around the spectral radius.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tolerance: 1e-10,
            max_iterations: 100_000,
        }
    }
}

/// Min/max of the per-vertex ratios (Ax^{k-1})_i / x_i^{k-1} for a strictly
/// positive x. Always contains the spectral radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CwBracket {
    pub lower: f64,
    pub upper: f64,
}

impl CwBracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Certified principal eigenpair.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Midpoint of the final bracket.
    pub rho: f64,
    pub rho_lower: f64,
    pub rho_upper: f64,
    /// Strictly positive, normalized so the k-th powers of entries sum to 1;
    /// entry i belongs to vertex label i+1.
    pub eigenvector: Vec<f64>,
    /// Principal ratio: max entry over min entry of the eigenvector.
    pub gamma: f64,
    pub iterations: usize,
    /// max_i |(Ax^{k-1})_i - rho x_i^{k-1}| at the returned iterate.
    pub residual: f64,
}

impl SpectralResult {
    pub fn bracket_width(&self) -> f64 {
        self.rho_upper - self.rho_lower
    }

    pub fn x_max(&self) -> f64 {
        self.eigenvector.iter().cloned().fold(f64::MIN, f64::max)
    }

    pub fn x_min(&self) -> f64 {
        self.eigenvector.iter().cloned().fold(f64::MAX, f64::min)
    }
}

fn check_dimensions(h: &Hypergraph, x: &[f64]) -> Result<(), SpectralError> {
    if x.len() != h.n() {
        return Err(SpectralError::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    Ok(())
}

fn check_cardinality(h: &Hypergraph) -> Result<(), SpectralError> {
    if h.k() > MAX_EDGE_CARDINALITY {
        return Err(SpectralError::EdgeCardinalityTooLarge {
            k: h.k(),
            max: MAX_EDGE_CARDINALITY,
        });
    }
    Ok(())
}

fn check_positive(x: &[f64]) -> Result<(), SpectralError> {
    for (index, &v) in x.iter().enumerate() {
        if v <= 0.0 || v.is_nan() {
            return Err(SpectralError::NonpositiveEntry { index });
        }
    }
    Ok(())
}

/// Applies the adjacency tensor: component i of the result is the sum over
/// edges e containing vertex i+1 of the product of x over the other vertices
/// of e. Nonnegative input gives nonnegative output.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    check_dimensions(h, x)?;
    check_cardinality(h)?;
    let k = h.k();
    let mut out = vec![0.0; h.n()];
    // leave-one-out products per edge via prefix/suffix scans
    let mut prefix = vec![1.0; k + 1];
    let mut suffix = vec![1.0; k + 1];
    for edge in h.edges() {
        for (i, &v) in edge.iter().enumerate() {
            prefix[i + 1] = prefix[i] * x[v - 1];
        }
        for (i, &v) in edge.iter().enumerate().rev() {
            suffix[i] = suffix[i + 1] * x[v - 1];
        }
        for (i, &v) in edge.iter().enumerate() {
            out[v - 1] += prefix[i] * suffix[i + 1];
        }
    }
    Ok(out)
}

/// Bracket of the spectral radius obtained from one strictly positive vector.
pub fn collatz_wielandt(h: &Hypergraph, x: &[f64]) -> Result<CwBracket, SpectralError> {
    check_dimensions(h, x)?;
    check_positive(x)?;
    let z = apply_adjacency(h, x)?;
    Ok(bracket_from_ratios(h.k(), x, &z))
}

fn bracket_from_ratios(k: usize, x: &[f64], z: &[f64]) -> CwBracket {
    let mut lower = f64::INFINITY;
    let mut upper = f64::NEG_INFINITY;
    for (xi, zi) in x.iter().zip(z) {
        let ratio = zi / xi.powi(k as i32 - 1);
        lower = lower.min(ratio);
        upper = upper.max(ratio);
    }
    CwBracket { lower, upper }
}

/// max entry / min entry of a strictly positive vector; at least 1.
pub fn principal_ratio(x: &[f64]) -> Result<f64, SpectralError> {
    if x.is_empty() {
        return Err(SpectralError::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    check_positive(x)?;
    let max = x.iter().cloned().fold(f64::MIN, f64::max);
    let min = x.iter().cloned().fold(f64::MAX, f64::min);
    Ok(max / min)
}

/// k times the sum over edges of the product of x over the edge's vertices.
/// Equals the spectral radius when x is the principal eigenvector; requires
/// the normalization sum x_i^k = 1 to hold within 1e-9.
pub fn rayleigh_identity(h: &Hypergraph, x: &[f64]) -> Result<f64, SpectralError> {
    check_dimensions(h, x)?;
    check_cardinality(h)?;
    let k = h.k();
    let sum: f64 = x.iter().map(|v| v.abs().powi(k as i32)).sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(SpectralError::Unnormalized { sum });
    }
    let mut total = 0.0;
    for edge in h.edges() {
        let mut product = 1.0;
        for &v in edge {
            product *= x[v - 1];
        }
        total += product;
    }
    Ok(k as f64 * total)
}

/// One power-iteration step of the shifted tensor A + I, in place.
///
/// With z = Ax^{k-1} already computed, the next iterate is
/// (z_i + x_i^{k-1})^{1/(k-1)}, renormalized so the k-th powers sum to 1.
/// The unit shift makes the iteration convergent for every weakly
/// irreducible nonnegative tensor, hence for every connected hypergraph.
fn advance(k: usize, x: &mut [f64], z: &[f64]) {
    let exponent = 1.0 / (k as f64 - 1.0);
    for (xi, zi) in x.iter_mut().zip(z) {
        let y = zi + xi.powi(k as i32 - 1);
        *xi = if k == 2 { y } else { y.powf(exponent) };
    }
    let sum: f64 = x.iter().map(|v| v.powi(k as i32)).sum();
    let scale = sum.powf(1.0 / k as f64);
    for xi in x.iter_mut() {
        *xi /= scale;
    }
}

/// Computes the certified principal eigenpair of a connected hypergraph.
///
/// Iterates the shifted power method from the uniform positive vector and
/// declares convergence when the bracket of unshifted ratios is narrower
/// than `opts.tolerance`. The certificate does not depend on the iteration:
/// any strictly positive vector brackets the spectral radius, the iteration
/// only drives the bracket shut.
pub fn principal_eigenpair(
    h: &Hypergraph,
    opts: &SpectralOptions,
) -> Result<SpectralResult, SpectralError> {
    let (result, _) = power_iteration(h, opts, false)?;
    Ok(result)
}

/// As [`principal_eigenpair`], also returning the bracket after every
/// iteration when `trace` is set (used to test bracket monotonicity).
pub(crate) fn power_iteration(
    h: &Hypergraph,
    opts: &SpectralOptions,
    trace: bool,
) -> Result<(SpectralResult, Vec<CwBracket>), SpectralError> {
    check_cardinality(h)?;
    if h.m() == 0 {
        return Err(SpectralError::NoEdges);
    }
    if !h.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let (k, n) = (h.k(), h.n());
    let mut x = vec![(n as f64).powf(-1.0 / k as f64); n];
    let mut brackets = Vec::new();
    let mut last = CwBracket {
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
    };
    for iteration in 1..=opts.max_iterations {
        let z = apply_adjacency(h, &x)?;
        let bracket = bracket_from_ratios(k, &x, &z);
        if trace {
            brackets.push(bracket);
        }
        last = bracket;
        if bracket.width() <= opts.tolerance {
            let rho = 0.5 * (bracket.lower + bracket.upper);
            let residual = x
                .iter()
                .zip(&z)
                .map(|(xi, zi)| (zi - rho * xi.powi(k as i32 - 1)).abs())
                .fold(0.0, f64::max);
            let gamma = principal_ratio(&x)?;
            return Ok((
                SpectralResult {
                    rho,
                    rho_lower: bracket.lower,
                    rho_upper: bracket.upper,
                    eigenvector: x,
                    gamma,
                    iterations: iteration,
                    residual,
                },
                brackets,
            ));
        }
        advance(k, &mut x, &z);
    }
    Err(SpectralError::NotConverged {
        iterations: opts.max_iterations,
        lower: last.lower,
        upper: last.upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::spectral_radius_dense;
    use crate::hypergraph::Hypergraph;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn p3() -> Hypergraph {
        Hypergraph::parse("2 3 2\n1 2\n2 3\n").unwrap()
    }

    fn loose_path_3() -> Hypergraph {
        Hypergraph::new(3, 5, vec![vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
    }

    fn complete_graph_4() -> Hypergraph {
        let edges = vec![
            vec![1, 2],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ];
        Hypergraph::new(2, 4, edges).unwrap()
    }

    #[test]
    fn apply_single_edge_identity_vector() {
        let h = Hypergraph::new(2, 2, vec![vec![1, 2]]).unwrap();
        assert_eq!(apply_adjacency(&h, &[1.0, 1.0]).unwrap(), vec![1.0, 1.0]);
    }

    #[test]
    fn apply_all_ones_gives_degrees() {
        let h = loose_path_3();
        let out = apply_adjacency(&h, &[1.0; 5]).unwrap();
        assert_eq!(out, vec![1.0, 1.0, 2.0, 1.0, 1.0]);
    }

    #[test]
    fn apply_p3_eigenvector() {
        // oracle: dense adjacency-matrix multiply of (1, sqrt2, 1)
        let h = p3();
        let x = [1.0, 2f64.sqrt(), 1.0];
        let out = apply_adjacency(&h, &x).unwrap();
        let expected = [2f64.sqrt(), 2.0, 2f64.sqrt()];
        for (o, e) in out.iter().zip(expected) {
            assert_close(*o, e, 1e-15);
        }
    }

    #[test]
    fn apply_checks_length() {
        let h = p3();
        assert!(matches!(
            apply_adjacency(&h, &[1.0, 1.0]),
            Err(SpectralError::DimensionMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn apply_scale_covariance() {
        let h = loose_path_3();
        let x = [0.3, 1.1, 0.7, 0.2, 0.9];
        let c = 1.7;
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let lhs = apply_adjacency(&h, &scaled).unwrap();
        let rhs = apply_adjacency(&h, &x).unwrap();
        let factor = c.powi(h.k() as i32 - 1);
        for (l, r) in lhs.iter().zip(rhs) {
            assert_close(*l, factor * r, 1e-12);
        }
    }

    #[test]
    fn eigenpair_complete_graph() {
        let s = principal_eigenpair(&complete_graph_4(), &SpectralOptions::default()).unwrap();
        assert_close(s.rho, 3.0, 1e-10);
        assert_close(s.gamma, 1.0, 1e-12);
        assert!(s.bracket_width() <= 1e-10);
    }

    #[test]
    fn eigenpair_loose_path_matches_analytic() {
        // symmetry classes center/leaf give rho^3 = 2
        let s = principal_eigenpair(&loose_path_3(), &SpectralOptions::default()).unwrap();
        let rho = 2f64.cbrt();
        assert_close(s.rho, rho, 1e-9);
        assert_close(s.gamma, rho, 1e-9);
        // analytic eigenvector: leaves 6^{-1/3}, center 3^{-1/3}
        assert_close(s.x_max(), 3f64.powf(-1.0 / 3.0), 1e-9);
        assert_close(s.x_min(), 6f64.powf(-1.0 / 3.0), 1e-9);
        let norm: f64 = s.eigenvector.iter().map(|v| v.powi(3)).sum();
        assert_close(norm, 1.0, 1e-12);
        assert!(s.residual <= 1e-9);
    }

    #[test]
    fn eigenpair_hyperstar_matches_analytic() {
        // t edges through one center: rho^k = t
        let h = Hypergraph::new(3, 7, vec![vec![1, 2, 3], vec![1, 4, 5], vec![1, 6, 7]]).unwrap();
        let s = principal_eigenpair(&h, &SpectralOptions::default()).unwrap();
        assert_close(s.rho, 3f64.cbrt(), 1e-9);
        assert_close(s.gamma, 3f64.cbrt(), 1e-9);
    }

    #[test]
    fn eigenpair_rejects_disconnected_and_empty() {
        let disjoint = Hypergraph::new(3, 6, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(matches!(
            principal_eigenpair(&disjoint, &SpectralOptions::default()),
            Err(SpectralError::Disconnected)
        ));
        let empty = Hypergraph::new(2, 1, vec![]).unwrap();
        assert!(matches!(
            principal_eigenpair(&empty, &SpectralOptions::default()),
            Err(SpectralError::NoEdges)
        ));
    }

    #[test]
    fn eigenpair_reports_nonconvergence() {
        let opts = SpectralOptions {
            tolerance: 1e-10,
            max_iterations: 2,
        };
        match principal_eigenpair(&p3(), &opts) {
            Err(SpectralError::NotConverged {
                iterations,
                lower,
                upper,
            }) => {
                assert_eq!(iterations, 2);
                assert!(lower <= 2f64.sqrt() && 2f64.sqrt() <= upper);
            }
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn cw_bracket_all_ones_gives_degree_range() {
        let b = collatz_wielandt(&loose_path_3(), &[1.0; 5]).unwrap();
        assert_close(b.lower, 1.0, 1e-15);
        assert_close(b.upper, 2.0, 1e-15);
        // regular instance: bracket collapses to the degree
        let b = collatz_wielandt(&complete_graph_4(), &[1.0; 4]).unwrap();
        assert_close(b.lower, 3.0, 1e-15);
        assert_close(b.upper, 3.0, 1e-15);
    }

    #[test]
    fn cw_bracket_collapses_on_eigenvector() {
        let x = [0.5, 0.5 * 2f64.sqrt(), 0.5];
        let b = collatz_wielandt(&p3(), &x).unwrap();
        assert_close(b.lower, 2f64.sqrt(), 1e-12);
        assert_close(b.upper, 2f64.sqrt(), 1e-12);
    }

    #[test]
    fn cw_bracket_rejects_nonpositive() {
        assert!(matches!(
            collatz_wielandt(&p3(), &[1.0, 0.0, 1.0]),
            Err(SpectralError::NonpositiveEntry { index: 1 })
        ));
    }

    #[test]
    fn cw_bracket_width_is_monotone() {
        let mut cases = vec![loose_path_3(), p3()];
        for seed in 0..6 {
            cases.push(crate::generators::random_connected(9, 3, 7, seed).unwrap());
            cases.push(crate::generators::random_connected(8, 2, 10, seed).unwrap());
        }
        for h in cases {
            let (_, brackets) = power_iteration(&h, &SpectralOptions::default(), true).unwrap();
            assert!(brackets.len() >= 2);
            for pair in brackets.windows(2) {
                assert!(pair[1].width() <= pair[0].width() + 1e-14);
            }
        }
    }

    #[test]
    fn rayleigh_identity_cases() {
        let h = Hypergraph::new(2, 2, vec![vec![1, 2]]).unwrap();
        let x = [std::f64::consts::FRAC_1_SQRT_2; 2];
        assert_close(rayleigh_identity(&h, &x).unwrap(), 1.0, 1e-14);

        let x = [0.5, 0.5 * 2f64.sqrt(), 0.5];
        assert_close(rayleigh_identity(&p3(), &x).unwrap(), 2f64.sqrt(), 1e-14);

        assert!(matches!(
            rayleigh_identity(&p3(), &[1.0, 1.0, 1.0]),
            Err(SpectralError::Unnormalized { .. })
        ));
    }

    #[test]
    fn rayleigh_value_of_converged_eigenvector_matches_rho() {
        let s = principal_eigenpair(&loose_path_3(), &SpectralOptions::default()).unwrap();
        let value = rayleigh_identity(&loose_path_3(), &s.eigenvector).unwrap();
        assert_close(value, s.rho, 1e-9);
    }

    #[test]
    fn rayleigh_of_non_eigenvector_stays_below_cw_upper() {
        let h = loose_path_3();
        let mut x: Vec<f64> = vec![0.9, 0.4, 1.3, 0.8, 0.6];
        let sum: f64 = x.iter().map(|v| v.powi(3)).sum();
        let scale = sum.cbrt();
        for v in &mut x {
            *v /= scale;
        }
        let value = rayleigh_identity(&h, &x).unwrap();
        let bracket = collatz_wielandt(&h, &x).unwrap();
        assert!(value <= bracket.upper + 1e-12);
    }

    #[test]
    fn principal_ratio_cases() {
        assert_close(principal_ratio(&[0.7, 0.7, 0.7]).unwrap(), 1.0, 1e-15);
        assert_close(
            principal_ratio(&[1.0, 2f64.sqrt(), 1.0]).unwrap(),
            2f64.sqrt(),
            1e-15,
        );
        assert!(matches!(
            principal_ratio(&[1.0, -0.1]),
            Err(SpectralError::NonpositiveEntry { index: 1 })
        ));
    }

    #[test]
    fn tensor_and_dense_radii_agree_on_graphs() {
        for h in [p3(), complete_graph_4()] {
            let s = principal_eigenpair(&h, &SpectralOptions::default()).unwrap();
            let dense = spectral_radius_dense(&h).unwrap();
            assert_close(s.rho, dense, 1e-9);
            assert!(s.rho_lower - 1e-10 <= dense && dense <= s.rho_upper + 1e-10);
        }
    }

    #[test]
    fn rejects_oversized_edge_cardinality() {
        let edge: Vec<usize> = (1..=17).collect();
        let h = Hypergraph::new(17, 17, vec![edge]).unwrap();
        assert!(matches!(
            principal_eigenpair(&h, &SpectralOptions::default()),
            Err(SpectralError::EdgeCardinalityTooLarge { k: 17, .. })
        ));
    }
}
