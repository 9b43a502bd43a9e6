//! k-uniform hypergraphs on the vertex set `0..n`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// A k-uniform hypergraph without repeated edges.
///
/// Every edge is kept as a sorted list of `k` distinct vertex indices, in the
/// order the edges were supplied. The vertex-to-edge incidence lists are
/// built once at construction.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Validates and builds a hypergraph. Edge order is preserved; the vertex
    /// order inside each edge is not.
    pub fn new<E>(k: usize, n: usize, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: IntoIterator<Item = usize>,
    {
        if k < 2 {
            return Err(Error::UniformityTooSmall(k));
        }
        if n < k {
            return Err(Error::TooFewVertices { n, k });
        }
        let mut sorted = Vec::new();
        let mut lookup = HashMap::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let mut edge: Vec<usize> = edge.into_iter().collect();
            edge.sort_unstable();
            edge.dedup();
            if edge.len() != k {
                return Err(Error::EdgeCardinality {
                    index,
                    found: edge.len(),
                    expected: k,
                });
            }
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { index, vertex, n });
            }
            if let Some(&first) = lookup.get(&edge) {
                return Err(Error::DuplicateEdge { index, first, edge });
            }
            lookup.insert(edge.clone(), index);
            sorted.push(edge);
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in sorted.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
        }
        Ok(Self {
            k,
            n,
            edges: sorted,
            incidence,
            lookup,
        })
    }

    /// Uniformity.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Index of the edge with exactly these vertices, if present.
    pub fn find_edge(&self, vertices: &[usize]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.lookup.get(&key).copied()
    }

    pub fn contains_edge(&self, vertices: &[usize]) -> bool {
        self.find_edge(vertices).is_some()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.incidence
            .get(v)
            .map(Vec::len)
            .ok_or(Error::NoSuchVertex { vertex: v, n: self.n })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True iff the vertex/edge incidence graph is a single component that
    /// covers every vertex. Connectivity is exactly weak irreducibility of
    /// the adjacency tensor.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut edge_seen = vec![false; self.m()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incidence[v] {
                if std::mem::replace(&mut edge_seen[e], true) {
                    continue;
                }
                for &u in &self.edges[e] {
                    if !std::mem::replace(&mut seen[u], true) {
                        reached += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        reached == self.n
    }

    /// True iff any two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let mut shared = HashMap::new();
        for edge in &self.edges {
            for (i, &a) in edge.iter().enumerate() {
                for &b in &edge[i + 1..] {
                    if shared.insert((a, b), ()).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected with `m(k - 1) - n = 1`.
    pub fn is_bicyclic(&self) -> bool {
        self.is_connected() && (self.m() * (self.k - 1)) as i64 - self.n as i64 == 1
    }

    /// Deletes `swap.remove` and appends `swap.add`, keeping the vertex set.
    /// Surviving edges keep their relative order.
    pub fn edge_swap(&self, swap: &EdgeSwap) -> Result<Hypergraph> {
        let mut removed = vec![false; self.m()];
        for edge in &swap.remove {
            match self.find_edge(edge) {
                Some(i) if !removed[i] => removed[i] = true,
                _ => return Err(Error::MissingEdge(sorted(edge))),
            }
        }
        let kept = self
            .edges
            .iter()
            .zip(&removed)
            .filter(|(_, &gone)| !gone)
            .map(|(e, _)| e.clone());
        let added = swap.add.iter().cloned();
        // Validation of the added edges (size, range, duplicates) happens in
        // the constructor.
        Hypergraph::new(self.k, self.n, kept.chain(added))
    }
}

fn sorted(edge: &[usize]) -> Vec<usize> {
    let mut e = edge.to_vec();
    e.sort_unstable();
    e
}

/// Edge surgery `G - e_1 - ... + f_1 + ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeSwap {
    pub remove: Vec<Vec<usize>>,
    pub add: Vec<Vec<usize>>,
}

impl EdgeSwap {
    pub fn new(remove: Vec<Vec<usize>>, add: Vec<Vec<usize>>) -> Self {
        Self { remove, add }
    }
}
