//! k-uniform hypergraphs: validated construction, text format, degrees,
//! connectivity, BFS distances and diameter.
//!
//! Vertices are labeled 1..=n in all public interfaces and in the text
//! format. Edges are stored canonically: each edge sorted ascending, the edge
//! list sorted lexicographically, so equal hypergraphs serialize to identical
//! bytes regardless of input order.

use std::collections::HashSet;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("line {line}: malformed header, expected \"k n m\" ({detail})")]
    MalformedHeader { line: usize, detail: String },
    #[error("line {line}: invalid vertex label {token:?}")]
    InvalidLabel { line: usize, token: String },
    #[error("line {line}: expected {expected} vertex labels, found {found}")]
    EdgeCardinality {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: repeated vertex {vertex} in edge")]
    RepeatedVertex { line: usize, vertex: usize },
    #[error("line {line}: vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: duplicate edge")]
    DuplicateEdge { line: usize },
    #[error("line {line}: unexpected content after {expected} edges")]
    TrailingContent { line: usize, expected: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("edge cardinality k must be at least 2, got {k}")]
    EdgeSizeTooSmall { k: usize },
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("edge {index}: expected {expected} vertices, found {found}")]
    InvalidEdgeSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {index}: repeated vertex {vertex}")]
    InvalidRepeatedVertex { index: usize, vertex: usize },
    #[error("edge {index}: vertex label {label} out of range 1..={n}")]
    InvalidLabelRange {
        index: usize,
        label: usize,
        n: usize,
    },
    #[error("edge {index} duplicates an earlier edge")]
    InvalidDuplicateEdge { index: usize },
    #[error("vertex label {label} out of range 1..={n}")]
    VertexOutOfRange { label: usize, n: usize },
    #[error("diameter undefined: hypergraph is disconnected")]
    Disconnected,
}

/// A validated k-uniform hypergraph with cached degrees and incidence lists.
///
/// Immutable after construction; cheap to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    /// Canonical edge list: each edge sorted ascending (1-based labels),
    /// edges sorted lexicographically.
    edges: Vec<Vec<usize>>,
    /// degrees[v-1] = number of edges containing vertex v.
    degrees: Vec<usize>,
    /// incidence[v-1] = indices into `edges` of the edges containing v.
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from 1-based edge vertex lists, validating every
    /// structural invariant (cardinality, label range, no repeats, no
    /// duplicate edges).
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::EdgeSizeTooSmall { k });
        }
        if n == 0 {
            return Err(HypergraphError::NoVertices);
        }
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: HashSet<Vec<usize>> = HashSet::with_capacity(edges.len());
        for (index, edge) in edges.into_iter().enumerate() {
            if edge.len() != k {
                return Err(HypergraphError::InvalidEdgeSize {
                    index,
                    expected: k,
                    found: edge.len(),
                });
            }
            let mut e = edge;
            for &label in &e {
                if label < 1 || label > n {
                    return Err(HypergraphError::InvalidLabelRange { index, label, n });
                }
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::InvalidRepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::InvalidDuplicateEdge { index });
            }
            canonical.push(e);
        }
        Ok(Self::from_canonical(k, n, canonical))
    }

    /// Edges must already be individually sorted, distinct and in range.
    fn from_canonical(k: usize, n: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_unstable();
        let mut degrees = vec![0usize; n];
        let mut incidence = vec![Vec::new(); n];
        for (idx, edge) in edges.iter().enumerate() {
            for &v in edge {
                degrees[v - 1] += 1;
                incidence[v - 1].push(idx);
            }
        }
        debug_assert_eq!(degrees.iter().sum::<usize>(), k * edges.len());
        Hypergraph {
            k,
            n,
            edges,
            degrees,
            incidence,
        }
    }

    /// Parses the line-oriented text format.
    ///
    /// `#` starts a comment; blank lines are ignored. The first data line is
    /// the header `k n m`; each of the next m data lines lists the k vertex
    /// labels of one edge. Errors carry the 1-based offending line number.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut data_lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                None
            } else {
                Some((i + 1, content))
            }
        });

        let (header_line, header) = data_lines.next().ok_or(HypergraphError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(HypergraphError::MalformedHeader {
                line: header_line,
                detail: format!("expected 3 integers, found {}", fields.len()),
            });
        }
        let parse_field = |s: &str| -> Result<usize, HypergraphError> {
            s.parse().map_err(|_| HypergraphError::MalformedHeader {
                line: header_line,
                detail: format!("invalid integer {s:?}"),
            })
        };
        let k = parse_field(fields[0])?;
        let n = parse_field(fields[1])?;
        let m = parse_field(fields[2])?;
        if k < 2 {
            return Err(HypergraphError::MalformedHeader {
                line: header_line,
                detail: format!("edge cardinality k must be at least 2, got {k}"),
            });
        }
        if n == 0 {
            return Err(HypergraphError::MalformedHeader {
                line: header_line,
                detail: "vertex count must be at least 1".to_string(),
            });
        }

        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut seen: HashSet<Vec<usize>> = HashSet::with_capacity(m);
        for (line, content) in data_lines {
            if edges.len() == m {
                return Err(HypergraphError::TrailingContent { line, expected: m });
            }
            let mut edge = Vec::with_capacity(k);
            for token in content.split_whitespace() {
                let label: usize = token.parse().map_err(|_| HypergraphError::InvalidLabel {
                    line,
                    token: token.to_string(),
                })?;
                edge.push(label);
            }
            if edge.len() != k {
                return Err(HypergraphError::EdgeCardinality {
                    line,
                    expected: k,
                    found: edge.len(),
                });
            }
            for &label in &edge {
                if label < 1 || label > n {
                    return Err(HypergraphError::LabelOutOfRange { line, label, n });
                }
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { line, vertex: w[0] });
            }
            if !seen.insert(edge.clone()) {
                return Err(HypergraphError::DuplicateEdge { line });
            }
            edges.push(edge);
        }
        if edges.len() != m {
            return Err(HypergraphError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Self::from_canonical(k, n, edges))
    }

    /// Canonical serialization of the text format; `parse` of the output
    /// reproduces `self`, and serializing again is byte-identical.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {} {}\n", self.k, self.n, self.edges.len()));
        for edge in &self.edges {
            let labels: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list (1-based labels, sorted).
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Per-vertex degrees, indexed by `label - 1`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, label: usize) -> Result<usize, HypergraphError> {
        self.check_label(label)?;
        Ok(self.degrees[label - 1])
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    fn check_label(&self, label: usize) -> Result<(), HypergraphError> {
        if label < 1 || label > self.n {
            Err(HypergraphError::VertexOutOfRange { label, n: self.n })
        } else {
            Ok(())
        }
    }

    /// True iff every vertex is reachable from vertex 1 through shared edges.
    pub fn is_connected(&self) -> bool {
        let table = self.bfs(1);
        table.dist.iter().all(|d| d.is_some())
    }

    /// BFS over the relation "u and v share an edge"; a shortest walk in this
    /// relation is always realizable as a path with distinct vertices and
    /// edges, so the result is the exact path distance.
    fn bfs(&self, source: usize) -> DistanceTable {
        let mut dist: Vec<Option<usize>> = vec![None; self.n];
        let mut edge_done = vec![false; self.edges.len()];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].expect("queued vertices have distances");
            for &ei in &self.incidence[u - 1] {
                if edge_done[ei] {
                    continue;
                }
                edge_done[ei] = true;
                for &v in &self.edges[ei] {
                    if dist[v - 1].is_none() {
                        dist[v - 1] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceTable { source, dist }
    }

    /// All shortest-path lengths from `source` (edge count metric).
    pub fn distances_from(&self, source: usize) -> Result<DistanceTable, HypergraphError> {
        self.check_label(source)?;
        Ok(self.bfs(source))
    }

    /// Shortest-path length between two vertices, `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, HypergraphError> {
        self.check_label(u)?;
        self.check_label(v)?;
        Ok(self.bfs(u).dist[v - 1])
    }

    /// Maximum distance over all vertex pairs; errors on disconnected input.
    pub fn diameter(&self) -> Result<usize, HypergraphError> {
        let mut diameter = 0;
        for source in 1..=self.n {
            let table = self.bfs(source);
            for d in &table.dist {
                match d {
                    Some(d) => diameter = diameter.max(*d),
                    None => return Err(HypergraphError::Disconnected),
                }
            }
        }
        Ok(diameter)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_file_string())
    }
}

impl FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Hypergraph::parse(s)
    }
}

/// Shortest-path lengths from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    source: usize,
    /// dist[v-1] = length in edges, `None` when unreachable.
    dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn source(&self) -> usize {
        self.source
    }

    /// Distances indexed by `label - 1`; `None` marks unreachable vertices.
    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }

    pub fn get(&self, label: usize) -> Result<Option<usize>, HypergraphError> {
        if label < 1 || label > self.dist.len() {
            return Err(HypergraphError::VertexOutOfRange {
                label,
                n: self.dist.len(),
            });
        }
        Ok(self.dist[label - 1])
    }
}
