//! Closed-form bounds relating the spectral radius, the principal
//! eigenvector, degrees, diameter and the vertex/edge counts of a connected
//! k-uniform hypergraph, plus the machinery that evaluates all of them
//! against a computed eigenpair and checks every inequality.
//!
//! Formulas are evaluated exactly as displayed, without algebraic
//! rearrangement, in binary64.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::spectral::SpectralResult;

/// Guard band for strict inequalities: a strict bound counts as satisfied
/// only when the margin exceeds this, so a rounding-level coincidence is
/// never reported as a strict win.
pub const STRICT_GUARD: f64 = 1e-12;

/// Relative tolerance for flagging equality cases.
pub const EQUALITY_TOL: f64 = 1e-8;

/// Tolerance for the spectral-radius identity that an equality case of the
/// principal-ratio lower bound implies.
pub const EQUALITY_CONSEQUENCE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("minimum degree must be positive (isolated vertex)")]
    IsolatedVertex,
    #[error("need at least two values")]
    TooFewValues,
    #[error("arguments must be strictly positive")]
    NonpositiveArgument,
}

// ---------------------------------------------------------------------------
// Bound calculators
// ---------------------------------------------------------------------------

/// Lower bound on the principal ratio: (dmax/dmin)^(1/(2(k-1))).
///
/// When the principal ratio equals this value, the spectral radius equals
/// sqrt(dmax * dmin); see [`verify_instance`], which checks that consequence.
pub fn ratio_lower_bound(dmax: f64, dmin: f64, k: usize) -> Result<f64, BoundsError> {
    if dmin <= 0.0 {
        return Err(BoundsError::IsolatedVertex);
    }
    Ok((dmax / dmin).powf(1.0 / (2.0 * (k as f64 - 1.0))))
}

/// Lower bound on the largest eigenvector entry from the degree extremes:
/// [(dmin/dmax)^(k/(2(k-1))) + n - 1]^(-1/k).
pub fn xmax_lower_from_degrees(dmax: f64, dmin: f64, k: usize, n: usize) -> f64 {
    let kf = k as f64;
    ((dmin / dmax).powf(kf / (2.0 * (kf - 1.0))) + n as f64 - 1.0).powf(-1.0 / kf)
}

/// Upper bound on the smallest eigenvector entry, mirror image of
/// [`xmax_lower_from_degrees`]: [(dmax/dmin)^(k/(2(k-1))) + n - 1]^(-1/k).
pub fn xmin_upper_from_degrees(dmax: f64, dmin: f64, k: usize, n: usize) -> f64 {
    let kf = k as f64;
    ((dmax / dmin).powf(kf / (2.0 * (kf - 1.0))) + n as f64 - 1.0).powf(-1.0 / kf)
}

/// Lower bound on the largest eigenvector entry from the spectral radius and
/// edge count: (rho/(k m))^(1/k). Equality holds exactly for regular
/// hypergraphs.
pub fn xmax_lower_from_rho(rho: f64, k: usize, m: usize) -> f64 {
    (rho / (k as f64 * m as f64)).powf(1.0 / k as f64)
}

/// Two-sided bracket of the spectral radius from the principal ratio:
/// dmax / gamma^(k-1) <= rho <= dmin * gamma^(k-1).
pub fn rho_bracket_from_ratio(dmax: f64, dmin: f64, gamma: f64, k: usize) -> (f64, f64) {
    let g = gamma.powi(k as i32 - 1);
    (dmax / g, dmin * g)
}

/// Strict upper bound on rho for irregular connected input, edge-count form:
/// k m dmax / (k m + (n dmax - k m) gamma^-k + k/(2(k-1)D) (1 - gamma^(-k/2))^2).
pub fn rho_upper_gamma_size(
    n: usize,
    m: usize,
    k: usize,
    dmax: f64,
    diameter: usize,
    gamma: f64,
) -> f64 {
    let (nf, mf, kf, df) = (n as f64, m as f64, k as f64, diameter as f64);
    let excess = nf * dmax - kf * mf;
    kf * mf * dmax
        / (kf * mf
            + excess * gamma.powf(-kf)
            + kf / (2.0 * (kf - 1.0) * df) * (1.0 - gamma.powf(-kf / 2.0)).powi(2))
}

/// Strict upper bound on rho for irregular connected input, deduction form:
/// dmax - [2(k-1)D (n dmax - k m) gamma^-k + k (1 - gamma^(-k/2))^2]
///        / [2 (gamma^-k + n - 1)(k-1) D].
pub fn rho_upper_gamma_order(
    n: usize,
    m: usize,
    k: usize,
    dmax: f64,
    diameter: usize,
    gamma: f64,
) -> f64 {
    let (nf, mf, kf, df) = (n as f64, m as f64, k as f64, diameter as f64);
    let excess = nf * dmax - kf * mf;
    let numerator = 2.0 * (kf - 1.0) * df * excess * gamma.powf(-kf)
        + kf * (1.0 - gamma.powf(-kf / 2.0)).powi(2);
    let denominator = 2.0 * (gamma.powf(-kf) + nf - 1.0) * (kf - 1.0) * df;
    dmax - numerator / denominator
}

/// Strict upper bound on rho that needs no eigenvector data:
/// dmax - k (n dmax - k m)
///        / ([2(k-1)D (n dmax - k m) + k][(dmin/dmax)^(k/(2(k-1))) + n - 1]).
pub fn rho_upper_degrees_order(
    n: usize,
    m: usize,
    k: usize,
    dmax: f64,
    dmin: f64,
    diameter: usize,
) -> f64 {
    let (nf, mf, kf, df) = (n as f64, m as f64, k as f64, diameter as f64);
    let excess = nf * dmax - kf * mf;
    dmax - kf * excess
        / ((2.0 * (kf - 1.0) * df * excess + kf)
            * ((dmin / dmax).powf(kf / (2.0 * (kf - 1.0))) + nf - 1.0))
}

/// Strict upper bound on rho using only counts, the maximum degree and the
/// diameter:
/// [2 m dmax (k-1) D (n dmax - k m) + k m dmax]
/// / [2 m (k-1) D (n dmax - k m) + n dmax].
pub fn rho_upper_size_only(n: usize, m: usize, k: usize, dmax: f64, diameter: usize) -> f64 {
    let (nf, mf, kf, df) = (n as f64, m as f64, k as f64, diameter as f64);
    let excess = nf * dmax - kf * mf;
    (2.0 * mf * dmax * (kf - 1.0) * df * excess + kf * mf * dmax)
        / (2.0 * mf * (kf - 1.0) * df * excess + nf * dmax)
}

/// Strict lower bound on the gap dmax - rho for irregular connected graphs
/// (k = 2): (n dmax - 2m) / ([D(n dmax - 2m) + 1][dmin/dmax + n - 1]).
pub fn gap_lower_degrees(n: usize, m: usize, dmax: f64, dmin: f64, diameter: usize) -> f64 {
    let (nf, mf, df) = (n as f64, m as f64, diameter as f64);
    let excess = nf * dmax - 2.0 * mf;
    excess / ((df * excess + 1.0) * (dmin / dmax + nf - 1.0))
}

/// Strict lower bound on the gap dmax - rho for irregular connected graphs
/// (k = 2): dmax - [2 m dmax D (n dmax - 2m) + 2 m dmax]
///                 / [2 m D (n dmax - 2m) + n dmax].
pub fn gap_lower_size(n: usize, m: usize, dmax: f64, diameter: usize) -> f64 {
    let (nf, mf, df) = (n as f64, m as f64, diameter as f64);
    let excess = nf * dmax - 2.0 * mf;
    dmax - (2.0 * mf * dmax * df * excess + 2.0 * mf * dmax) / (2.0 * mf * df * excess + nf * dmax)
}

/// Baseline gap bound that both graph gap bounds must beat:
/// (n dmax - 2m) / (n (D(n dmax - 2m) + 1)).
pub fn gap_lower_baseline(n: usize, m: usize, dmax: f64, diameter: usize) -> f64 {
    let (nf, mf, df) = (n as f64, m as f64, diameter as f64);
    let excess = nf * dmax - 2.0 * mf;
    excess / (nf * (df * excess + 1.0))
}

/// Arithmetic-geometric mean refinement: for nonnegative y (len >= 2),
/// mean(y) - geomean(y) >= (1/(n(n-1))) sum_{i<j} (sqrt(y_i) - sqrt(y_j))^2.
/// Returns (lhs, rhs).
pub fn amgm_refinement(y: &[f64]) -> Result<(f64, f64), BoundsError> {
    let n = y.len();
    if n < 2 {
        return Err(BoundsError::TooFewValues);
    }
    if y.iter().any(|&v| v < 0.0) {
        return Err(BoundsError::NonpositiveArgument);
    }
    let nf = n as f64;
    let mean = y.iter().sum::<f64>() / nf;
    let geomean = y.iter().product::<f64>().powf(1.0 / nf);
    let mut pair_sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            pair_sum += (y[i].sqrt() - y[j].sqrt()).powi(2);
        }
    }
    Ok((mean - geomean, pair_sum / (nf * (nf - 1.0))))
}

/// Weighted quadratic split: for positive a, b, y1, y2,
/// a (y1-y2)^2 + b y2^2 >= (a b / (a+b)) y1^2,
/// with equality exactly at y2 = a y1 / (a+b). Returns (lhs, rhs).
pub fn quadratic_split(a: f64, b: f64, y1: f64, y2: f64) -> Result<(f64, f64), BoundsError> {
    if a <= 0.0 || b <= 0.0 || y1 <= 0.0 || y2 <= 0.0 {
        return Err(BoundsError::NonpositiveArgument);
    }
    Ok((
        a * (y1 - y2).powi(2) + b * y2 * y2,
        a * b / (a + b) * y1 * y1,
    ))
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Identifies one inequality in a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// gamma >= (dmax/dmin)^(1/(2(k-1)))
    RatioLower,
    /// x_max >= [(dmin/dmax)^(k/(2(k-1))) + n - 1]^(-1/k)
    XmaxLowerDegrees,
    /// x_min <= [(dmax/dmin)^(k/(2(k-1))) + n - 1]^(-1/k)
    XminUpperDegrees,
    /// x_max >= (rho/(k m))^(1/k), equality iff regular
    XmaxLowerSize,
    /// rho >= dmax / gamma^(k-1)
    RhoLowerGamma,
    /// rho <= dmin * gamma^(k-1)
    RhoUpperGamma,
    /// rho < edge-count form upper bound (irregular only)
    RhoUpperGammaSize,
    /// rho < deduction form upper bound (irregular only)
    RhoUpperGammaOrder,
    /// rho < eigenvector-free upper bound (irregular only)
    RhoUpperDegreesOrder,
    /// rho < counts-only upper bound (irregular only)
    RhoUpperSizeOnly,
    /// rho < dmax - degree-form gap (k = 2, irregular only)
    GapLowerDegrees,
    /// rho < dmax - size-form gap (k = 2, irregular only)
    GapLowerSize,
    /// rho < dmax - baseline gap (k = 2, irregular only)
    GapLowerBaseline,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::RatioLower,
        BoundId::XmaxLowerDegrees,
        BoundId::XminUpperDegrees,
        BoundId::XmaxLowerSize,
        BoundId::RhoLowerGamma,
        BoundId::RhoUpperGamma,
        BoundId::RhoUpperGammaSize,
        BoundId::RhoUpperGammaOrder,
        BoundId::RhoUpperDegreesOrder,
        BoundId::RhoUpperSizeOnly,
        BoundId::GapLowerDegrees,
        BoundId::GapLowerSize,
        BoundId::GapLowerBaseline,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::RatioLower => "ratio_lower",
            BoundId::XmaxLowerDegrees => "xmax_lower_degrees",
            BoundId::XminUpperDegrees => "xmin_upper_degrees",
            BoundId::XmaxLowerSize => "xmax_lower_size",
            BoundId::RhoLowerGamma => "rho_lower_gamma",
            BoundId::RhoUpperGamma => "rho_upper_gamma",
            BoundId::RhoUpperGammaSize => "rho_upper_gamma_size",
            BoundId::RhoUpperGammaOrder => "rho_upper_gamma_order",
            BoundId::RhoUpperDegreesOrder => "rho_upper_degrees_order",
            BoundId::RhoUpperSizeOnly => "rho_upper_size_only",
            BoundId::GapLowerDegrees => "gap_lower_degrees",
            BoundId::GapLowerSize => "gap_lower_size",
            BoundId::GapLowerBaseline => "gap_lower_baseline",
        }
    }
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The computed quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Rho,
    Gamma,
    Xmax,
    Xmin,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::Rho => "rho",
            Quantity::Gamma => "gamma",
            Quantity::Xmax => "x_max",
            Quantity::Xmin => "x_min",
        }
    }
}

/// Direction of the constraint, read as `target RELATION value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Gt => ">",
        }
    }

    fn is_strict(&self) -> bool {
        matches!(self, Relation::Lt | Relation::Gt)
    }

    /// Signed slack, positive when the relation holds.
    fn slack(&self, target: f64, value: f64) -> f64 {
        match self {
            Relation::Ge | Relation::Gt => target - value,
            Relation::Le | Relation::Lt => value - target,
        }
    }
}

/// Outcome of evaluating one bound against one computed quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    /// Which computed quantity the bound constrains.
    pub quantity: Quantity,
    pub relation: Relation,
    /// False when the bound's preconditions (irregularity, k = 2) fail;
    /// inapplicable bounds are reported but carry no verdict.
    pub applicable: bool,
    /// The bound's numeric value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    /// The computed value of `quantity`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
    /// |value - target| signed so that positive means satisfied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<f64>,
    /// True when target and value agree to [`EQUALITY_TOL`] (relative).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
}

impl BoundReport {
    fn inapplicable(bound_id: BoundId, quantity: Quantity, relation: Relation) -> Self {
        BoundReport {
            bound_id,
            quantity,
            relation,
            applicable: false,
            value: None,
            target: None,
            satisfied: None,
            slack: None,
            equality: None,
        }
    }

    /// `certified` is the numerical allowance granted to non-strict
    /// relations: the eigenpair is only certified to the bracket width, so a
    /// mathematically tight bound may cross by that much in binary64.
    fn evaluate(
        bound_id: BoundId,
        quantity: Quantity,
        relation: Relation,
        target: f64,
        value: f64,
        certified: f64,
    ) -> Self {
        let slack = relation.slack(target, value);
        let satisfied = if relation.is_strict() {
            slack >= STRICT_GUARD
        } else {
            slack >= -(STRICT_GUARD + certified)
        };
        let equality = (target - value).abs() <= EQUALITY_TOL * value.abs().max(1.0);
        BoundReport {
            bound_id,
            quantity,
            relation,
            applicable: true,
            value: Some(value),
            target: Some(target),
            satisfied: Some(satisfied),
            slack: Some(slack),
            equality: Some(equality),
        }
    }
}

/// Evaluates every bound against a computed eigenpair.
///
/// One report per inequality, always all thirteen: bounds whose
/// preconditions fail (irregularity for the strict upper bounds, k = 2 for
/// the gap bounds) are marked inapplicable, never dropped. The spectral
/// result must have been computed on `h` (hence `h` is connected).
pub fn full_report(h: &Hypergraph, s: &SpectralResult) -> Vec<BoundReport> {
    let k = h.k();
    let n = h.n();
    let m = h.m();
    let dmax = h.max_degree() as f64;
    let dmin = h.min_degree() as f64;
    let regular = h.is_regular();
    let gamma = s.gamma;
    let rho = s.rho;
    let x_max = s.x_max();
    let x_min = s.x_min();
    // Non-strict relations can be crossed by up to the certification error of
    // the eigenpair; scale the allowance with the bound's magnitude.
    let width = s.bracket_width();
    let cert = |value: f64| width * (1.0 + value.abs());

    let mut reports = Vec::with_capacity(BoundId::ALL.len());

    let ratio_bound =
        ratio_lower_bound(dmax, dmin, k).expect("connected hypergraph has positive minimum degree");
    reports.push(BoundReport::evaluate(
        BoundId::RatioLower,
        Quantity::Gamma,
        Relation::Ge,
        gamma,
        ratio_bound,
        cert(ratio_bound),
    ));

    let v = xmax_lower_from_degrees(dmax, dmin, k, n);
    reports.push(BoundReport::evaluate(
        BoundId::XmaxLowerDegrees,
        Quantity::Xmax,
        Relation::Ge,
        x_max,
        v,
        cert(v),
    ));

    let v = xmin_upper_from_degrees(dmax, dmin, k, n);
    reports.push(BoundReport::evaluate(
        BoundId::XminUpperDegrees,
        Quantity::Xmin,
        Relation::Le,
        x_min,
        v,
        cert(v),
    ));

    let v = xmax_lower_from_rho(rho, k, m);
    reports.push(BoundReport::evaluate(
        BoundId::XmaxLowerSize,
        Quantity::Xmax,
        Relation::Ge,
        x_max,
        v,
        cert(v),
    ));

    let (lower, upper) = rho_bracket_from_ratio(dmax, dmin, gamma, k);
    reports.push(BoundReport::evaluate(
        BoundId::RhoLowerGamma,
        Quantity::Rho,
        Relation::Ge,
        rho,
        lower,
        cert(lower),
    ));
    reports.push(BoundReport::evaluate(
        BoundId::RhoUpperGamma,
        Quantity::Rho,
        Relation::Le,
        rho,
        upper,
        cert(upper),
    ));

    // The strict upper bounds require irregular input; on regular input the
    // excess n*dmax - k*m vanishes and the formulas degenerate.
    if regular {
        reports.push(BoundReport::inapplicable(
            BoundId::RhoUpperGammaSize,
            Quantity::Rho,
            Relation::Lt,
        ));
        reports.push(BoundReport::inapplicable(
            BoundId::RhoUpperGammaOrder,
            Quantity::Rho,
            Relation::Lt,
        ));
        reports.push(BoundReport::inapplicable(
            BoundId::RhoUpperDegreesOrder,
            Quantity::Rho,
            Relation::Lt,
        ));
        reports.push(BoundReport::inapplicable(
            BoundId::RhoUpperSizeOnly,
            Quantity::Rho,
            Relation::Lt,
        ));
    } else {
        let diameter = h
            .diameter()
            .expect("spectral result implies connected input");
        let v = rho_upper_gamma_size(n, m, k, dmax, diameter, gamma);
        reports.push(BoundReport::evaluate(
            BoundId::RhoUpperGammaSize,
            Quantity::Rho,
            Relation::Lt,
            rho,
            v,
            0.0,
        ));
        let v = rho_upper_gamma_order(n, m, k, dmax, diameter, gamma);
        reports.push(BoundReport::evaluate(
            BoundId::RhoUpperGammaOrder,
            Quantity::Rho,
            Relation::Lt,
            rho,
            v,
            0.0,
        ));
        let v = rho_upper_degrees_order(n, m, k, dmax, dmin, diameter);
        reports.push(BoundReport::evaluate(
            BoundId::RhoUpperDegreesOrder,
            Quantity::Rho,
            Relation::Lt,
            rho,
            v,
            0.0,
        ));
        let v = rho_upper_size_only(n, m, k, dmax, diameter);
        reports.push(BoundReport::evaluate(
            BoundId::RhoUpperSizeOnly,
            Quantity::Rho,
            Relation::Lt,
            rho,
            v,
            0.0,
        ));
    }

    // Gap bounds are graph-only (k = 2) and need irregularity as well.
    if k == 2 && !regular {
        let diameter = h
            .diameter()
            .expect("spectral result implies connected input");
        let gap = gap_lower_degrees(n, m, dmax, dmin, diameter);
        reports.push(BoundReport::evaluate(
            BoundId::GapLowerDegrees,
            Quantity::Rho,
            Relation::Lt,
            rho,
            dmax - gap,
            0.0,
        ));
        let gap = gap_lower_size(n, m, dmax, diameter);
        reports.push(BoundReport::evaluate(
            BoundId::GapLowerSize,
            Quantity::Rho,
            Relation::Lt,
            rho,
            dmax - gap,
            0.0,
        ));
        let gap = gap_lower_baseline(n, m, dmax, diameter);
        reports.push(BoundReport::evaluate(
            BoundId::GapLowerBaseline,
            Quantity::Rho,
            Relation::Lt,
            rho,
            dmax - gap,
            0.0,
        ));
    } else {
        reports.push(BoundReport::inapplicable(
            BoundId::GapLowerDegrees,
            Quantity::Rho,
            Relation::Lt,
        ));
        reports.push(BoundReport::inapplicable(
            BoundId::GapLowerSize,
            Quantity::Rho,
            Relation::Lt,
        ));
        reports.push(BoundReport::inapplicable(
            BoundId::GapLowerBaseline,
            Quantity::Rho,
            Relation::Lt,
        ));
    }

    debug_assert_eq!(reports.len(), BoundId::ALL.len());
    reports
}

/// One failed check from [`verify_instance`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

/// Runs every consistency check on a computed instance:
///
/// * all applicable bounds are satisfied;
/// * an equality case of the principal-ratio lower bound forces
///   rho = sqrt(dmax * dmin);
/// * the equality flag of the size-based x_max bound coincides with
///   regularity;
/// * for irregular graphs (k = 2) both gap bounds strictly beat the
///   baseline gap bound.
pub fn verify_instance(
    h: &Hypergraph,
    s: &SpectralResult,
    reports: &[BoundReport],
) -> Vec<Violation> {
    let mut violations = Vec::new();
    for report in reports {
        if report.applicable && report.satisfied != Some(true) {
            violations.push(Violation {
                check: report.bound_id.to_string(),
                detail: format!(
                    "{} {} {} fails (target {:?}, value {:?}, slack {:?})",
                    report.quantity.as_str(),
                    report.relation.as_str(),
                    report.bound_id,
                    report.target,
                    report.value,
                    report.slack,
                ),
            });
        }
    }

    let dmax = h.max_degree() as f64;
    let dmin = h.min_degree() as f64;

    if let Some(ratio) = reports.iter().find(|r| r.bound_id == BoundId::RatioLower) {
        if ratio.equality == Some(true) {
            let expected = (dmax * dmin).sqrt();
            if (s.rho - expected).abs() > EQUALITY_CONSEQUENCE_TOL {
                violations.push(Violation {
                    check: "ratio_lower_equality_consequence".to_string(),
                    detail: format!(
                        "ratio bound is tight but rho = {} differs from sqrt(dmax dmin) = {}",
                        s.rho, expected
                    ),
                });
            }
        }
    }

    if let Some(size) = reports
        .iter()
        .find(|r| r.bound_id == BoundId::XmaxLowerSize)
    {
        if let Some(equality) = size.equality {
            if equality != h.is_regular() {
                violations.push(Violation {
                    check: "xmax_lower_size_equality_iff_regular".to_string(),
                    detail: format!(
                        "equality flag {} does not match regularity {}",
                        equality,
                        h.is_regular()
                    ),
                });
            }
        }
    }

    if h.k() == 2 && !h.is_regular() {
        let diameter = h
            .diameter()
            .expect("spectral result implies connected input");
        let baseline = gap_lower_baseline(h.n(), h.m(), dmax, diameter);
        let by_degrees = gap_lower_degrees(h.n(), h.m(), dmax, dmin, diameter);
        let by_size = gap_lower_size(h.n(), h.m(), dmax, diameter);
        if by_degrees <= baseline {
            violations.push(Violation {
                check: "gap_improvement_degrees".to_string(),
                detail: format!("degree gap {by_degrees} does not beat baseline {baseline}"),
            });
        }
        if by_size <= baseline {
            violations.push(Violation {
                check: "gap_improvement_size".to_string(),
                detail: format!("size gap {by_size} does not beat baseline {baseline}"),
            });
        }
    }

    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::spectral::{principal_eigenpair, SpectralOptions};

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

    fn analyzed(h: &Hypergraph) -> (SpectralResult, Vec<BoundReport>) {
        let s = principal_eigenpair(h, &SpectralOptions::default()).unwrap();
        let reports = full_report(h, &s);
        (s, reports)
    }

    fn report(reports: &[BoundReport], id: BoundId) -> &BoundReport {
        reports.iter().find(|r| r.bound_id == id).unwrap()
    }

    // Every expected value below was recomputed independently (dense matrix
    // eigensolve for k = 2, the analytic symmetry-class equations otherwise)
    // before being frozen.

    #[test]
    fn ratio_lower_bound_values() {
        assert_close(ratio_lower_bound(3.0, 3.0, 3).unwrap(), 1.0, 1e-15);
        assert_close(ratio_lower_bound(2.0, 1.0, 2).unwrap(), 2f64.sqrt(), 1e-15);
        assert_close(
            ratio_lower_bound(2.0, 1.0, 3).unwrap(),
            2f64.powf(0.25),
            1e-15,
        );
        assert!(matches!(
            ratio_lower_bound(2.0, 0.0, 2),
            Err(BoundsError::IsolatedVertex)
        ));
    }

    #[test]
    fn xmax_xmin_degree_bounds_values() {
        // regular: both collapse to n^{-1/k}
        assert_close(xmax_lower_from_degrees(3.0, 3.0, 2, 4), 0.5, 1e-15);
        assert_close(xmin_upper_from_degrees(3.0, 3.0, 2, 4), 0.5, 1e-15);
        // path on three vertices
        assert_close(
            xmax_lower_from_degrees(2.0, 1.0, 2, 3),
            2.5f64.powf(-0.5),
            1e-15,
        );
        assert_close(xmin_upper_from_degrees(2.0, 1.0, 2, 3), 0.5, 1e-15);
        // 3-uniform loose path
        assert_close(
            xmax_lower_from_degrees(2.0, 1.0, 3, 5),
            0.6015208033470716,
            1e-12,
        );
        assert_close(
            xmin_upper_from_degrees(2.0, 1.0, 3, 5),
            0.5604086996152292,
            1e-12,
        );
    }

    #[test]
    fn xmax_rho_bound_values() {
        assert_close(xmax_lower_from_rho(1.0, 3, 1), 3f64.powf(-1.0 / 3.0), 1e-15);
        assert_close(
            xmax_lower_from_rho(2f64.sqrt(), 2, 2),
            (2f64.sqrt() / 4.0).sqrt(),
            1e-15,
        );
        assert_close(xmax_lower_from_rho(3.0, 2, 6), 0.5, 1e-15);
    }

    #[test]
    fn rho_bracket_values() {
        let (lo, hi) = rho_bracket_from_ratio(3.0, 3.0, 1.0, 2);
        assert_close(lo, 3.0, 1e-15);
        assert_close(hi, 3.0, 1e-15);
        let (lo, hi) = rho_bracket_from_ratio(2.0, 1.0, 2f64.cbrt(), 3);
        assert_close(lo, 2f64.cbrt(), 1e-14);
        assert_close(hi, 2f64.powf(2.0 / 3.0), 1e-14);
        let (lo, hi) = rho_bracket_from_ratio(2.0, 1.0, 2f64.sqrt(), 2);
        assert_close(lo, 2f64.sqrt(), 1e-15);
        assert_close(hi, 2f64.sqrt(), 1e-15);
    }

    #[test]
    fn strict_upper_bound_values_loose_path() {
        let g = 2f64.cbrt();
        assert_close(
            rho_upper_gamma_size(5, 2, 3, 2.0, 2, g),
            1.493992299505472,
            1e-12,
        );
        assert_close(
            rho_upper_gamma_order(5, 2, 3, 2.0, 2, g),
            1.5484066857533136,
            1e-12,
        );
        assert_close(
            rho_upper_degrees_order(5, 2, 3, 2.0, 1.0, 2),
            1.9253782968288138,
            1e-12,
        );
        assert_close(rho_upper_size_only(5, 2, 3, 2.0, 2), 140.0 / 74.0, 1e-12);
        let rho = 2f64.cbrt();
        for value in [
            rho_upper_gamma_size(5, 2, 3, 2.0, 2, g),
            rho_upper_gamma_order(5, 2, 3, 2.0, 2, g),
            rho_upper_degrees_order(5, 2, 3, 2.0, 1.0, 2),
            rho_upper_size_only(5, 2, 3, 2.0, 2),
        ] {
            assert!(rho < value);
        }
    }

    #[test]
    fn strict_upper_bound_values_p3() {
        let g = 2f64.sqrt();
        assert_close(
            rho_upper_gamma_size(3, 2, 2, 2.0, 2, g),
            1.5863909174508217,
            1e-12,
        );
        assert_close(
            rho_upper_gamma_order(3, 2, 2, 2.0, 2, g),
            1.5828427124746192,
            1e-12,
        );
        assert_close(rho_upper_degrees_order(3, 2, 2, 2.0, 1.0, 2), 1.84, 1e-12);
        assert_close(rho_upper_size_only(3, 2, 2, 2.0, 2), 40.0 / 22.0, 1e-12);
    }

    #[test]
    fn gap_bound_values() {
        // path on three vertices
        assert_close(gap_lower_degrees(3, 2, 2.0, 1.0, 2), 0.16, 1e-15);
        assert_close(gap_lower_size(3, 2, 2.0, 2), 2.0 - 40.0 / 22.0, 1e-14);
        assert_close(gap_lower_baseline(3, 2, 2.0, 2), 2.0 / 15.0, 1e-15);
        // star on four vertices
        assert_close(
            gap_lower_degrees(4, 3, 3.0, 1.0, 2),
            6.0 / (13.0 * (1.0 / 3.0 + 3.0)),
            1e-14,
        );
        assert_close(gap_lower_size(4, 3, 3.0, 2), 3.0 - 234.0 / 84.0, 1e-14);
        assert_close(gap_lower_baseline(4, 3, 3.0, 2), 6.0 / 52.0, 1e-15);
        // gaps must stay below the actual gap dmax - rho
        assert!(gap_lower_degrees(3, 2, 2.0, 1.0, 2) < 2.0 - 2f64.sqrt());
        assert!(gap_lower_size(3, 2, 2.0, 2) < 2.0 - 2f64.sqrt());
        assert!(gap_lower_degrees(4, 3, 3.0, 1.0, 2) < 3.0 - 3f64.sqrt());
        assert!(gap_lower_size(4, 3, 3.0, 2) < 3.0 - 3f64.sqrt());
    }

    #[test]
    fn amgm_refinement_cases() {
        let (lhs, rhs) = amgm_refinement(&[2.0, 2.0, 2.0]).unwrap();
        assert_close(lhs, 0.0, 1e-15);
        assert_close(rhs, 0.0, 1e-15);
        let (lhs, rhs) = amgm_refinement(&[1.0, 0.0]).unwrap();
        assert_close(lhs, 0.5, 1e-15);
        assert_close(rhs, 0.5, 1e-15);
        let (lhs, rhs) = amgm_refinement(&[4.0, 1.0, 1.0]).unwrap();
        assert_close(lhs, 2.0 - 4f64.cbrt(), 1e-14);
        assert_close(rhs, 1.0 / 3.0, 1e-14);
        assert!(lhs >= rhs);
        assert!(matches!(
            amgm_refinement(&[1.0]),
            Err(BoundsError::TooFewValues)
        ));
        assert!(matches!(
            amgm_refinement(&[1.0, -1.0]),
            Err(BoundsError::NonpositiveArgument)
        ));
    }

    #[test]
    fn quadratic_split_cases() {
        let (lhs, rhs) = quadratic_split(1.0, 1.0, 2.0, 1.0).unwrap();
        assert_close(lhs, 2.0, 1e-15);
        assert_close(rhs, 2.0, 1e-15);
        let (lhs, rhs) = quadratic_split(1.0, 1.0, 1.0, 1.0).unwrap();
        assert_close(lhs, 1.0, 1e-15);
        assert_close(rhs, 0.5, 1e-15);
        let (lhs, rhs) = quadratic_split(2.0, 3.0, 5.0, 2.0).unwrap();
        assert_close(lhs, 30.0, 1e-13);
        assert_close(rhs, 30.0, 1e-13);
        assert!(matches!(
            quadratic_split(0.0, 1.0, 1.0, 1.0),
            Err(BoundsError::NonpositiveArgument)
        ));
    }

    #[test]
    fn full_report_loose_path() {
        let h = loose_path_3();
        let (_, reports) = analyzed(&h);
        assert_eq!(reports.len(), 13);
        let applicable: Vec<_> = reports.iter().filter(|r| r.applicable).collect();
        assert_eq!(applicable.len(), 10);
        assert!(applicable.iter().all(|r| r.satisfied == Some(true)));
        // gap bounds need k = 2
        for id in [
            BoundId::GapLowerDegrees,
            BoundId::GapLowerSize,
            BoundId::GapLowerBaseline,
        ] {
            assert!(!report(&reports, id).applicable);
        }
        // irregular, so strictly below every diameter bound
        assert_eq!(
            report(&reports, BoundId::XmaxLowerSize).equality,
            Some(false)
        );
    }

    #[test]
    fn full_report_p3_all_applicable() {
        let h = p3();
        let (s, reports) = analyzed(&h);
        assert_eq!(reports.iter().filter(|r| r.applicable).count(), 13);
        assert!(reports
            .iter()
            .filter(|r| r.applicable)
            .all(|r| r.satisfied == Some(true)));
        // ratio bound is tight here and rho = sqrt(dmax dmin) = sqrt(2)
        assert_eq!(report(&reports, BoundId::RatioLower).equality, Some(true));
        assert_close(s.rho, 2f64.sqrt(), 1e-9);
        // x_min bound is tight as well
        assert_eq!(
            report(&reports, BoundId::XminUpperDegrees).equality,
            Some(true)
        );
        assert!(verify_instance(&h, &s, &reports).is_empty());
    }

    #[test]
    fn full_report_regular_marks_inapplicable() {
        let h = complete_graph_4();
        let (s, reports) = analyzed(&h);
        let applicable: Vec<_> = reports.iter().filter(|r| r.applicable).collect();
        assert_eq!(applicable.len(), 6);
        for r in &applicable {
            assert_eq!(r.satisfied, Some(true));
            assert_eq!(r.equality, Some(true), "{} should be tight", r.bound_id);
        }
        for id in [
            BoundId::RhoUpperGammaSize,
            BoundId::RhoUpperGammaOrder,
            BoundId::RhoUpperDegreesOrder,
            BoundId::RhoUpperSizeOnly,
            BoundId::GapLowerDegrees,
            BoundId::GapLowerSize,
            BoundId::GapLowerBaseline,
        ] {
            let r = report(&reports, id);
            assert!(!r.applicable);
            assert!(r.satisfied.is_none() && r.slack.is_none());
        }
        assert!(verify_instance(&h, &s, &reports).is_empty());
    }

    #[test]
    fn verify_instance_detects_doctored_results() {
        let h = p3();
        let (s, _) = analyzed(&h);
        // understate gamma: the ratio lower bound must now fail
        let mut bad = s.clone();
        bad.gamma = 1.0;
        let reports = full_report(&h, &bad);
        let violations = verify_instance(&h, &bad, &reports);
        assert!(violations
            .iter()
            .any(|v| v.check == BoundId::RatioLower.to_string()));

        // overstate rho: strict upper bounds must fail
        let mut bad = s.clone();
        bad.rho = 10.0;
        let reports = full_report(&h, &bad);
        let violations = verify_instance(&h, &bad, &reports);
        assert!(violations
            .iter()
            .any(|v| v.check == BoundId::RhoUpperSizeOnly.to_string()));
    }
}
