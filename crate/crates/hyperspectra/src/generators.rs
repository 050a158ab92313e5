//! Hypergraph families with known spectral answers plus seeded random
//! connected instances for ensemble verification.
//!
//! The deterministic families cover the regimes the bound suite needs:
//! regular instances (equality cases), irregular instances with analytic
//! spectral radius (strictness checks) and stars with growing edge counts
//! (large principal ratio).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::rng::SplitMix64;
use crate::MAX_EDGE_CARDINALITY;

/// Vertex cap for deterministic families.
pub const MAX_VERTICES: usize = 10_000;
/// Vertex cap for random instances (ensemble scale).
pub const MAX_RANDOM_VERTICES: usize = 64;
/// Edge cap for complete hypergraphs.
pub const MAX_COMPLETE_EDGES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("edge cardinality k must be at least {min}, got {k}")]
    EdgeSizeTooSmall { k: usize, min: usize },
    #[error("edge cardinality k must be at most {max}, got {k}")]
    EdgeSizeTooLarge { k: usize, max: usize },
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("complete hypergraph requires n > k, got n = {n}, k = {k}")]
    CompleteTooSmall { n: usize, k: usize },
    #[error("complete hypergraph on {n} vertices with k = {k} exceeds the edge cap {cap}")]
    TooManyEdges { n: usize, k: usize, cap: u64 },
    #[error("at least one edge is required")]
    NoEdges,
    #[error("infeasible parameters: {reason}")]
    Infeasible { reason: String },
    #[error("exhausted retries placing {m} distinct edges (seed {seed})")]
    RetriesExhausted { m: usize, seed: u64 },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

/// Parameters identifying one generated instance; serializable so reports
/// can identify their input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GeneratorSpec {
    SingleEdge {
        k: usize,
    },
    Complete {
        n: usize,
        k: usize,
    },
    LoosePath {
        k: usize,
        edges: usize,
    },
    Hyperstar {
        k: usize,
        t: usize,
    },
    RandomConnected {
        n: usize,
        k: usize,
        m: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Hypergraph, GeneratorError> {
        match *self {
            GeneratorSpec::SingleEdge { k } => single_edge(k),
            GeneratorSpec::Complete { n, k } => complete(n, k),
            GeneratorSpec::LoosePath { k, edges } => loose_path(k, edges),
            GeneratorSpec::Hyperstar { k, t } => hyperstar(k, t),
            GeneratorSpec::RandomConnected { n, k, m, seed } => random_connected(n, k, m, seed),
        }
    }

    /// Short human-readable identification, used in summaries.
    pub fn describe(&self) -> String {
        match *self {
            GeneratorSpec::SingleEdge { k } => format!("single_edge(k={k})"),
            GeneratorSpec::Complete { n, k } => format!("complete(n={n}, k={k})"),
            GeneratorSpec::LoosePath { k, edges } => format!("loose_path(k={k}, l={edges})"),
            GeneratorSpec::Hyperstar { k, t } => format!("hyperstar(k={k}, t={t})"),
            GeneratorSpec::RandomConnected { n, k, m, seed } => {
                format!("random_connected(n={n}, k={k}, m={m}, seed={seed})")
            }
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            GeneratorSpec::RandomConnected { seed, .. } => Some(seed),
            _ => None,
        }
    }
}

fn check_k(k: usize, min: usize) -> Result<(), GeneratorError> {
    if k < min {
        return Err(GeneratorError::EdgeSizeTooSmall { k, min });
    }
    if k > MAX_EDGE_CARDINALITY {
        return Err(GeneratorError::EdgeSizeTooLarge {
            k,
            max: MAX_EDGE_CARDINALITY,
        });
    }
    Ok(())
}

fn check_n(n: usize, max: usize) -> Result<(), GeneratorError> {
    if n > max {
        return Err(GeneratorError::TooManyVertices { n, max });
    }
    Ok(())
}

/// Binomial coefficient, `None` on overflow past the complete-edge cap.
fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
        if result > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(result as u64)
}

/// One edge on k vertices: the smallest regular hypergraph, spectral radius 1.
pub fn single_edge(k: usize) -> Result<Hypergraph, GeneratorError> {
    check_k(k, 2)?;
    Ok(Hypergraph::new(k, k, vec![(1..=k).collect()])?)
}

/// All k-subsets of n vertices; regular of degree C(n-1, k-1), so the
/// spectral radius equals that degree.
pub fn complete(n: usize, k: usize) -> Result<Hypergraph, GeneratorError> {
    check_k(k, 2)?;
    check_n(n, MAX_VERTICES)?;
    if n <= k {
        return Err(GeneratorError::CompleteTooSmall { n, k });
    }
    match binomial(n, k) {
        Some(edges) if edges <= MAX_COMPLETE_EDGES => {}
        _ => {
            return Err(GeneratorError::TooManyEdges {
                n,
                k,
                cap: MAX_COMPLETE_EDGES,
            })
        }
    }
    // lexicographic enumeration of k-subsets
    let mut edges = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        edges.push(current.clone());
        // advance to the next combination
        let mut i = k;
        while i > 0 && current[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
        for j in i..k {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(Hypergraph::new(k, n, edges)?)
}

/// `edges` edges in a row, consecutive edges sharing exactly one vertex;
/// n = edges*(k-1) + 1 vertices, diameter = edges.
pub fn loose_path(k: usize, edges: usize) -> Result<Hypergraph, GeneratorError> {
    check_k(k, 3)?;
    if edges == 0 {
        return Err(GeneratorError::NoEdges);
    }
    let n = edges * (k - 1) + 1;
    check_n(n, MAX_VERTICES)?;
    let edge_list: Vec<Vec<usize>> = (0..edges)
        .map(|i| (i * (k - 1) + 1..=i * (k - 1) + k).collect())
        .collect();
    Ok(Hypergraph::new(k, n, edge_list)?)
}

/// `t` edges all containing vertex 1 and otherwise disjoint;
/// n = 1 + t*(k-1), spectral radius and principal ratio both t^(1/k).
pub fn hyperstar(k: usize, t: usize) -> Result<Hypergraph, GeneratorError> {
    check_k(k, 2)?;
    if t == 0 {
        return Err(GeneratorError::NoEdges);
    }
    let n = 1 + t * (k - 1);
    check_n(n, MAX_VERTICES)?;
    let edge_list: Vec<Vec<usize>> = (0..t)
        .map(|i| {
            let mut edge = vec![1];
            edge.extend(i * (k - 1) + 2..=(i + 1) * (k - 1) + 1);
            edge
        })
        .collect();
    Ok(Hypergraph::new(k, n, edge_list)?)
}

/// Connected k-uniform hypergraph with exactly m distinct edges,
/// deterministic per seed.
///
/// Construction: shuffle the vertices, then chain them into a connected
/// spanning assembly (each spanning edge takes as many fresh vertices as
/// possible plus already-covered ones), then fill the remaining edge budget
/// with uniform k-subsets, rejecting duplicates.
pub fn random_connected(
    n: usize,
    k: usize,
    m: usize,
    seed: u64,
) -> Result<Hypergraph, GeneratorError> {
    check_k(k, 2)?;
    check_n(n, MAX_RANDOM_VERTICES)?;
    if n < k {
        return Err(GeneratorError::Infeasible {
            reason: format!("need n >= k, got n = {n}, k = {k}"),
        });
    }
    let spanning = (n - 1).div_ceil(k - 1);
    if m < spanning {
        return Err(GeneratorError::Infeasible {
            reason: format!(
                "connectivity needs at least {spanning} edges for n = {n}, k = {k}, got m = {m}"
            ),
        });
    }
    let total = binomial(n, k).unwrap_or(u64::MAX);
    if (m as u64) > total {
        return Err(GeneratorError::Infeasible {
            reason: format!("only {total} distinct edges exist for n = {n}, k = {k}, got m = {m}"),
        });
    }

    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<usize> = (1..=n).collect();
    rng.shuffle(&mut order);

    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut seen: std::collections::HashSet<Vec<usize>> =
        std::collections::HashSet::with_capacity(m);
    let mut covered = k.min(n);

    let mut first: Vec<usize> = order[..covered].to_vec();
    first.sort_unstable();
    seen.insert(first.clone());
    edges.push(first);

    while covered < n {
        let fresh = (k - 1).min(n - covered);
        let mut edge: Vec<usize> = order[covered..covered + fresh].to_vec();
        // fill up with distinct already-covered vertices
        let mut fill: Vec<usize> = Vec::with_capacity(k - fresh);
        while fill.len() < k - fresh {
            let candidate = order[rng.next_below(covered as u64) as usize];
            if !fill.contains(&candidate) {
                fill.push(candidate);
            }
        }
        edge.extend(fill);
        edge.sort_unstable();
        covered += fresh;
        // every spanning edge contains a fresh vertex, so no duplicates here
        let inserted = seen.insert(edge.clone());
        debug_assert!(inserted);
        edges.push(edge);
    }

    let mut attempts: u64 = 0;
    let max_attempts = 10_000 * (m as u64 + 1);
    while edges.len() < m {
        attempts += 1;
        if attempts > max_attempts {
            return Err(GeneratorError::RetriesExhausted { m, seed });
        }
        // uniform k-subset by partial Fisher-Yates over a scratch copy
        let mut scratch: Vec<usize> = (1..=n).collect();
        for i in 0..k {
            let j = i + rng.next_below((n - i) as u64) as usize;
            scratch.swap(i, j);
        }
        let mut edge: Vec<usize> = scratch[..k].to_vec();
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }

    let h = Hypergraph::new(k, n, edges)?;
    debug_assert!(h.is_connected());
    Ok(h)
}

/// Deterministic verification ensemble: `count` random connected instances
/// cycling through the cardinalities in `kset`, with n up to `nmax` and a
/// feasible, moderately dense edge budget. Returns each instance with the
/// spec that reproduces it.
pub fn ensemble(
    count: usize,
    seed: u64,
    kset: &[usize],
    nmax: usize,
) -> Result<Vec<(GeneratorSpec, Hypergraph)>, GeneratorError> {
    if kset.is_empty() {
        return Err(GeneratorError::Infeasible {
            reason: "kset must not be empty".to_string(),
        });
    }
    for &k in kset {
        check_k(k, 2)?;
        if k + 1 > nmax {
            return Err(GeneratorError::Infeasible {
                reason: format!("nmax = {nmax} leaves no room for k = {k}"),
            });
        }
    }
    check_n(nmax, MAX_RANDOM_VERTICES)?;

    let mut rng = SplitMix64::new(seed);
    let mut instances = Vec::with_capacity(count);
    for i in 0..count {
        let k = kset[i % kset.len()];
        let n = rng.next_range(k as u64 + 1, nmax as u64) as usize;
        let m_min = (n - 1).div_ceil(k - 1);
        let m_cap = binomial(n, k)
            .unwrap_or(u64::MAX)
            .min((m_min + 2 * n) as u64) as usize;
        let m = rng.next_range(m_min as u64, m_cap as u64) as usize;
        let instance_seed = rng.next_u64();
        let spec = GeneratorSpec::RandomConnected {
            n,
            k,
            m,
            seed: instance_seed,
        };
        let h = spec.build()?;
        instances.push((spec, h));
    }
    Ok(instances)
}
