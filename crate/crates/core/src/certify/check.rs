use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Positive weights `B(v, e)` on the incident (vertex, edge) pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightedIncidence {
    weights: BTreeMap<(usize, usize), f64>,
}

impl WeightedIncidence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut b = Self::new();
        for (v, e, w) in triples {
            b.insert(v, e, w)?;
        }
        Ok(b)
    }

    /// Sets `B(vertex, edge)`; the weight must be strictly positive.
    pub fn insert(&mut self, vertex: usize, edge: usize, weight: f64) -> Result<()> {
        if !(weight > 0.0) || !weight.is_finite() {
            return Err(Error::NonPositiveWeight {
                vertex,
                edge,
                weight,
            });
        }
        self.weights.insert((vertex, edge), weight);
        Ok(())
    }

    pub fn get(&self, vertex: usize, edge: usize) -> Option<f64> {
        self.weights.get(&(vertex, edge)).copied()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `(vertex, edge, weight)` in (vertex, edge) order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.weights.iter().map(|(&(v, e), &w)| (v, e, w))
    }

    /// The support must be exactly the incidences of `h`.
    pub fn check_support(&self, h: &Hypergraph) -> Result<()> {
        for &(vertex, edge) in self.weights.keys() {
            if edge >= h.m() || !h.edge(edge).contains(&vertex) {
                return Err(Error::WeightOffSupport { vertex, edge });
            }
        }
        for (edge, vertices) in h.edges().iter().enumerate() {
            for &vertex in vertices {
                if !self.weights.contains_key(&(vertex, edge)) {
                    return Err(Error::MissingWeight { vertex, edge });
                }
            }
        }
        Ok(())
    }

    fn at(&self, vertex: usize, edge: usize) -> f64 {
        self.weights[&(vertex, edge)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    ConsistentlyNormal,
    NormalNotConsistent,
    StrictlySubnormal,
    Subnormal,
    Invalid,
}

/// What the verdict implies about `rho(H)`, with `bound = alpha^{-1/k}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "relation", content = "bound")]
pub enum RhoBound {
    Equal(f64),
    AtMost(f64),
    LessThan(f64),
    None,
}

/// A cycle `v_0 e_1 v_1 e_2 ... e_l v_0` of the incidence graph, where
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % l]`, together with
/// `prod_i B(v_i, e_i) / B(v_{i-1}, e_i)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub product: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    VertexSum { vertex: usize, sum: f64 },
    EdgeProduct { edge: usize, product: f64 },
    Cycle(CycleWitness),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateVerdict {
    pub kind: VerdictKind,
    pub alpha: f64,
    pub rho_bound: RhoBound,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    /// Absolute tolerance for `sum = 1`, `product = alpha` and cycle products.
    pub tol: f64,
    /// A constraint counts as strict only when its slack exceeds this.
    /// Slack in `(tol, strict_margin]` yields [`VerdictKind::Subnormal`].
    pub strict_margin: f64,
}

impl CheckOptions {
    pub fn new(tol: f64) -> Self {
        Self {
            tol,
            strict_margin: tol,
        }
    }
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self::new(1e-9)
    }
}

/// Classifies `B` as a (sub)normal labeling of `h` for the given `alpha`.
pub fn check_alpha_normal(
    h: &Hypergraph,
    b: &WeightedIncidence,
    alpha: f64,
    tol: f64,
) -> Result<CertificateVerdict> {
    check_alpha_normal_with(h, b, alpha, &CheckOptions::new(tol))
}

pub fn check_alpha_normal_with(
    h: &Hypergraph,
    b: &WeightedIncidence,
    alpha: f64,
    opts: &CheckOptions,
) -> Result<CertificateVerdict> {
    if !(alpha > 0.0) {
        return Err(Error::NonPositiveAlpha(alpha));
    }
    b.check_support(h)?;
    let bound = alpha.powf(-1.0 / h.k() as f64);

    let sums: Vec<f64> = (0..h.n())
        .map(|v| h.incident_edges(v).iter().map(|&e| b.at(v, e)).sum())
        .collect();
    let products: Vec<f64> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(e, vs)| vs.iter().map(|&v| b.at(v, e)).product())
        .collect();

    // Each constraint as (witness, slack); slack >= 0 is the subnormal side.
    let constraints = sums
        .iter()
        .enumerate()
        .map(|(vertex, &sum)| (Witness::VertexSum { vertex, sum }, 1.0 - sum))
        .chain(
            products
                .iter()
                .enumerate()
                .map(|(edge, &product)| (Witness::EdgeProduct { edge, product }, product - alpha)),
        )
        .collect::<Vec<_>>();

    let violated: Vec<Witness> = constraints
        .iter()
        .filter(|(_, slack)| *slack < -opts.tol)
        .map(|(w, _)| w.clone())
        .collect();
    if !violated.is_empty() {
        return Ok(CertificateVerdict {
            kind: VerdictKind::Invalid,
            alpha,
            rho_bound: RhoBound::None,
            witnesses: violated,
        });
    }

    let loose = |limit: f64| -> Vec<Witness> {
        constraints
            .iter()
            .filter(|(_, slack)| *slack > limit)
            .map(|(w, _)| w.clone())
            .collect()
    };

    if loose(opts.tol).is_empty() {
        let (consistent, cycles) = check_consistent(h, b, opts.tol)?;
        return Ok(if consistent {
            CertificateVerdict {
                kind: VerdictKind::ConsistentlyNormal,
                alpha,
                rho_bound: RhoBound::Equal(bound),
                witnesses: Vec::new(),
            }
        } else {
            CertificateVerdict {
                kind: VerdictKind::NormalNotConsistent,
                alpha,
                rho_bound: RhoBound::LessThan(bound),
                witnesses: cycles.into_iter().map(Witness::Cycle).collect(),
            }
        });
    }

    let strict = loose(opts.strict_margin);
    Ok(if strict.is_empty() {
        CertificateVerdict {
            kind: VerdictKind::Subnormal,
            alpha,
            rho_bound: RhoBound::AtMost(bound),
            witnesses: loose(opts.tol),
        }
    } else {
        CertificateVerdict {
            kind: VerdictKind::StrictlySubnormal,
            alpha,
            rho_bound: RhoBound::LessThan(bound),
            witnesses: strict,
        }
    })
}

/// Consistency over a fundamental cycle basis of the incidence graph.
///
/// The cycle product is multiplicative under composition of cycles (each
/// one is a signed sum of `log B` along its incidences), so it equals 1 on
/// every cycle iff it does on a basis. Returns the violating basis cycles.
pub fn check_consistent(
    h: &Hypergraph,
    b: &WeightedIncidence,
    tol: f64,
) -> Result<(bool, Vec<CycleWitness>)> {
    let bad: Vec<CycleWitness> = cycle_basis(h, b)?
        .into_iter()
        .filter(|c| (c.product - 1.0).abs() > tol)
        .collect();
    Ok((bad.is_empty(), bad))
}

/// Fundamental cycles of a BFS spanning forest of the incidence graph, one
/// per non-tree incidence, with their products under `b`.
pub fn cycle_basis(h: &Hypergraph, b: &WeightedIncidence) -> Result<Vec<CycleWitness>> {
    b.check_support(h)?;
    let n = h.n();
    // nodes 0..n are vertices, n..n+m are edges
    let total = n + h.m();
    let mut parent = vec![usize::MAX; total];
    let mut depth = vec![0usize; total];
    let mut visited = vec![false; total];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(node) = queue.pop_front() {
            let neighbours: Vec<usize> = if node < n {
                h.incident_edges(node).iter().map(|&e| n + e).collect()
            } else {
                h.edge(node - n).to_vec()
            };
            for next in neighbours {
                if !visited[next] {
                    visited[next] = true;
                    parent[next] = node;
                    depth[next] = depth[node] + 1;
                    queue.push_back(next);
                }
            }
        }
    }

    let mut cycles = Vec::new();
    for (e, vertices) in h.edges().iter().enumerate() {
        let en = n + e;
        for &v in vertices {
            if parent[en] == v || parent[v] == en {
                continue;
            }
            // tree path v -> lca -> e, closed by the link e - v
            let (mut a, mut c) = (v, en);
            let mut up = vec![a];
            let mut down = vec![c];
            while a != c {
                if depth[a] >= depth[c] {
                    a = parent[a];
                    up.push(a);
                } else {
                    c = parent[c];
                    down.push(c);
                }
            }
            down.pop();
            up.extend(down.into_iter().rev());
            let vertices: Vec<usize> = up.iter().step_by(2).copied().collect();
            let edges: Vec<usize> = up.iter().skip(1).step_by(2).map(|&x| x - n).collect();
            let product = cycle_product(b, &vertices, &edges);
            cycles.push(CycleWitness {
                vertices,
                edges,
                product,
            });
        }
    }
    Ok(cycles)
}

/// `prod_i B(v_i, e_i) / B(v_{i-1}, e_i)` for the closed walk described in
/// [`CycleWitness`].
pub fn cycle_product(b: &WeightedIncidence, vertices: &[usize], edges: &[usize]) -> f64 {
    let l = vertices.len();
    (0..l)
        .map(|i| {
            let e = edges[i];
            b.at(vertices[(i + 1) % l], e) / b.at(vertices[i], e)
        })
        .product()
}
