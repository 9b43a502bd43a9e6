//! Generalized power hypergraphs `G^{k,s}` of a t-uniform seed `G`.
//!
//! Every seed vertex `v` becomes a block `V_v` of `s` vertices and every seed
//! edge `e` gains a block `V_e` of `k - t*s` fresh vertices; the edge
//! `{v_1, .., v_t}` becomes `V_{v_1} ∪ .. ∪ V_{v_t} ∪ V_e`. Blocks are
//! numbered seed vertices first, then seed edges, both in seed order.
//!
//! For connected `G`, `rho(G^{k,s}) = rho(G)^{ts/k}`, and a positive
//! eigenpair `(mu, x)` of `G` lifts to `(mu^{ts/k}, y)` with
//! `y_w = x_v^{t/k}` on `V_v` and `y_w = (x^e / mu)^{1/k}` on `V_e`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::spectral::eigen_residual;

/// Largest eigen-residual accepted for the eigenpair handed to
/// [`lift_eigenvector`].
pub const LIFT_RESIDUAL_LIMIT: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerSpec {
    t: usize,
    k: usize,
    s: usize,
}

impl PowerSpec {
    /// Requires `k >= t >= 2` and `1 <= s <= floor(k / t)`.
    pub fn new(t: usize, k: usize, s: usize) -> Result<Self> {
        let fail = |reason| Err(Error::PowerSpec { t, k, s, reason });
        if t < 2 {
            return fail("seed uniformity t must be at least 2");
        }
        if k < t {
            return fail("target uniformity k must be at least t");
        }
        if s == 0 || s > k / t {
            return fail("s must lie in 1..=floor(k/t)");
        }
        Ok(Self { t, k, s })
    }

    /// The k-th power of a graph: `t = 2`, `s = 1`.
    pub fn graph_power(k: usize) -> Result<Self> {
        Self::new(2, k, 1)
    }

    /// Generalized power of a graph: `t = 2`.
    pub fn graph_generalized_power(k: usize, s: usize) -> Result<Self> {
        Self::new(2, k, s)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Size of each edge block, `k - t*s`.
    pub fn filler(&self) -> usize {
        self.k - self.t * self.s
    }

    /// `t*s/k`.
    pub fn exponent(&self) -> f64 {
        (self.t * self.s) as f64 / self.k as f64
    }

    /// Every valid spec with seed uniformity `t` and `k <= k_max`.
    pub fn enumerate(t: usize, k_max: usize) -> Vec<PowerSpec> {
        (t..=k_max)
            .flat_map(|k| (1..=k / t).map(move |s| PowerSpec { t, k, s }))
            .collect()
    }
}

/// Which new vertices came from which seed vertex or edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerMap {
    pub vertex_blocks: Vec<Vec<usize>>,
    pub edge_blocks: Vec<Vec<usize>>,
}

pub fn gen_power(seed: &Hypergraph, spec: PowerSpec) -> Result<(Hypergraph, PowerMap)> {
    if seed.k() != spec.t {
        return Err(Error::SeedUniformity {
            expected: spec.t,
            found: seed.k(),
        });
    }
    if let Some(v) = (0..seed.n()).find(|&v| seed.incident_edges(v).is_empty()) {
        return Err(Error::IsolatedSeedVertex(v));
    }
    let mut next = 0;
    let mut block = |size: usize| {
        let b: Vec<usize> = (next..next + size).collect();
        next += size;
        b
    };
    let vertex_blocks: Vec<Vec<usize>> = (0..seed.n()).map(|_| block(spec.s)).collect();
    let edge_blocks: Vec<Vec<usize>> = (0..seed.m()).map(|_| block(spec.filler())).collect();
    let n = seed.n() * spec.s + seed.m() * spec.filler();

    let edges = seed.edges().iter().zip(&edge_blocks).map(|(e, filler)| {
        e.iter()
            .flat_map(|&v| vertex_blocks[v].iter().copied())
            .chain(filler.iter().copied())
            .collect::<Vec<_>>()
    });
    let power = Hypergraph::new(spec.k, n, edges)?;
    Ok((
        power,
        PowerMap {
            vertex_blocks,
            edge_blocks,
        },
    ))
}

/// `rho_seed^{ts/k}`.
pub fn predicted_rho(rho_seed: f64, spec: PowerSpec) -> Result<f64> {
    if !(rho_seed > 0.0) {
        return Err(Error::NonPositive(rho_seed));
    }
    Ok(rho_seed.powf(spec.exponent()))
}

/// Lifts an eigenpair `(mu, x)` of the seed to an eigenvector of `G^{k,s}`
/// for `mu^{ts/k}`.
pub fn lift_eigenvector(
    seed: &Hypergraph,
    x: &[f64],
    mu: f64,
    spec: PowerSpec,
    map: &PowerMap,
) -> Result<Vec<f64>> {
    if !(mu > 0.0) {
        return Err(Error::NonPositive(mu));
    }
    if let Some(&bad) = x.iter().find(|&&v| !(v > 0.0)) {
        return Err(Error::NonPositive(bad));
    }
    let residual = eigen_residual(seed, mu, x)?;
    if !(residual <= LIFT_RESIDUAL_LIMIT) {
        return Err(Error::NotAnEigenpair {
            residual,
            limit: LIFT_RESIDUAL_LIMIT,
        });
    }
    let k = spec.k as f64;
    let t = spec.t as f64;
    let n = map.vertex_blocks.iter().chain(&map.edge_blocks).map(Vec::len).sum();
    let mut y = vec![0.0; n];
    for (v, block) in map.vertex_blocks.iter().enumerate() {
        let value = x[v].powf(t / k);
        block.iter().for_each(|&w| y[w] = value);
    }
    for (e, block) in map.edge_blocks.iter().enumerate() {
        let xe: f64 = seed.edge(e).iter().map(|&v| x[v]).product();
        let value = (xe / mu).powf(1.0 / k);
        block.iter().for_each(|&w| y[w] = value);
    }
    Ok(y)
}
