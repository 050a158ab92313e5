//! Machine-readable analysis reports.
//!
//! Floats are emitted in scientific notation with 17 significant digits,
//! which round-trips every finite binary64 value exactly; two runs of the
//! same analysis therefore produce byte-identical JSON.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::generators::GeneratorSpec;
use crate::hypergraph::Hypergraph;
use crate::spectral::{SpectralOptions, SpectralResult};

/// Version of the JSON layout below. Bump on any field change.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputSource {
    File { path: String },
    Generator { spec: GeneratorSpec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceBlock {
    /// Target width of the certified spectral-radius bracket.
    pub bracket_width: f64,
    pub max_iterations: usize,
    pub strict_guard: f64,
    pub equality: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergraphSummary {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: usize,
    pub regular: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralBlock {
    pub rho: f64,
    pub rho_lower: f64,
    pub rho_upper: f64,
    pub gamma: f64,
    pub iterations: usize,
    pub residual: f64,
    /// Included on request only; large for big instances.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvector: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub input: InputSource,
    pub tolerances: ToleranceBlock,
    pub hypergraph: HypergraphSummary,
    pub spectral: SpectralBlock,
    pub bounds: Vec<BoundReport>,
}

impl AnalysisReport {
    /// Assembles the full report. The hypergraph must be the one the
    /// spectral result was computed on (connected, so the diameter exists).
    pub fn build(
        input: InputSource,
        h: &Hypergraph,
        s: &SpectralResult,
        bounds: Vec<BoundReport>,
        opts: &SpectralOptions,
        include_eigenvector: bool,
    ) -> Self {
        AnalysisReport {
            schema_version: SCHEMA_VERSION,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            tolerances: ToleranceBlock {
                bracket_width: opts.tolerance,
                max_iterations: opts.max_iterations,
                strict_guard: crate::bounds::STRICT_GUARD,
                equality: crate::bounds::EQUALITY_TOL,
            },
            hypergraph: HypergraphSummary {
                k: h.k(),
                n: h.n(),
                m: h.m(),
                max_degree: h.max_degree(),
                min_degree: h.min_degree(),
                diameter: h.diameter().expect("analyzed hypergraphs are connected"),
                regular: h.is_regular(),
            },
            spectral: SpectralBlock {
                rho: s.rho,
                rho_lower: s.rho_lower,
                rho_upper: s.rho_upper,
                gamma: s.gamma,
                iterations: s.iterations,
                residual: s.residual,
                eigenvector: include_eigenvector.then(|| s.eigenvector.clone()),
            },
            bounds,
        }
    }

    pub fn to_json(&self) -> String {
        to_json_string(self)
    }
}

/// JSON formatter that writes every float as `{:.16e}` (17 significant
/// digits), enough to reconstruct the exact bit pattern on parse.
struct FullPrecision;

impl serde_json::ser::Formatter for FullPrecision {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.8e}")
    }
}

/// Serializes any value to JSON with full-precision float formatting.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut buffer = Vec::new();
    let mut serializer = serde_json::Serializer::with_formatter(&mut buffer, FullPrecision);
    value
        .serialize(&mut serializer)
        .expect("report serialization cannot fail");
    String::from_utf8(buffer).expect("serde_json emits UTF-8")
}
