//! Adjacency-tensor products and the spectral radius of connected uniform
//! hypergraphs.
//!
//! The adjacency tensor has entry `1/(k-1)!` on every ordering of an edge, so
//! the `(k-1)!` orderings cancel and
//! `(A x)_v = sum over edges e containing v of prod_{u in e, u != v} x_u`.
//! Everything here works with that edge-sum form; the tensor is never built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Outcome of [`spectral_radius`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    /// Midpoint of `[lower, upper]`.
    pub rho: f64,
    /// Certified lower bound: `min_i (A x)_i / x_i^{k-1}`.
    pub lower: f64,
    /// Certified upper bound: `max_i (A x)_i / x_i^{k-1}`.
    pub upper: f64,
    /// Positive, unit k-norm.
    pub eigenvector: Vec<f64>,
    /// `|A x - rho x^[k-1]|_inf`.
    pub residual: f64,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn bracket_width(&self) -> f64 {
        self.upper - self.lower
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Stop once the bracket `upper - lower` is at most this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Diagonal shift added to the tensor; removes periodicity.
    pub shift: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 100_000,
            shift: 1.0,
        }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::SolverOptions(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::SolverOptions("max_iterations must be at least 1".into()));
        }
        if !(self.shift >= 0.0) || !self.shift.is_finite() {
            return Err(Error::SolverOptions(format!(
                "shift must be finite and nonnegative, got {}",
                self.shift
            )));
        }
        Ok(())
    }
}

fn check_len(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// `(A(G) x)_v = sum_{e ∋ v} prod_{u ∈ e \ {v}} x_u`.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_len(h, x)?;
    let mut out = vec![0.0; h.n()];
    accumulate(h, x, &mut out);
    Ok(out)
}

fn accumulate(h: &Hypergraph, x: &[f64], out: &mut [f64]) {
    for edge in h.edges() {
        for (i, &v) in edge.iter().enumerate() {
            let prod: f64 = edge
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &u)| x[u])
                .product();
            out[v] += prod;
        }
    }
}

/// `x^T (A x) = k * sum_e prod_{u ∈ e} x_u` for nonnegative `x`.
pub fn rayleigh(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    if let Some((index, &value)) = x.iter().enumerate().find(|(_, &v)| v < 0.0) {
        return Err(Error::NegativeComponent { index, value });
    }
    let sum: f64 = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&u| x[u]).product::<f64>())
        .sum();
    Ok(h.k() as f64 * sum)
}

/// `|A x - lambda x^[k-1]|_inf`.
pub fn eigen_residual(h: &Hypergraph, lambda: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_adjacency(h, x)?;
    let p = (h.k() - 1) as i32;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(a, xi)| (a - lambda * xi.powi(p)).abs())
        .fold(0.0, f64::max))
}

/// `x / |x|_k`, or `None` for the zero vector.
pub fn normalize_k(x: &[f64], k: usize) -> Option<Vec<f64>> {
    let norm = x.iter().map(|v| v.abs().powi(k as i32)).sum::<f64>();
    if norm == 0.0 || !norm.is_finite() {
        return None;
    }
    let scale = norm.powf(-1.0 / k as f64);
    Some(x.iter().map(|v| v * scale).collect())
}

/// Spectral radius of a connected hypergraph by shifted power iteration.
///
/// Each step forms `y = A x + shift * x^[k-1]` and brackets the radius of
/// the shifted tensor between the smallest and largest ratio
/// `y_i / x_i^{k-1}`; for a weakly irreducible nonnegative tensor those
/// ratios always enclose the Perron root. The iterate is then replaced by
/// `y^[1/(k-1)]` rescaled to unit k-norm. Iteration stops once the bracket
/// is no wider than `opts.tolerance`, which also bounds the eigen-residual.
pub fn spectral_radius(h: &Hypergraph, opts: &SolverOptions) -> Result<SpectralResult> {
    opts.validate()?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.n();
    let k = h.k();
    let p = (k - 1) as i32;
    let root = 1.0 / (k - 1) as f64;

    let mut x = vec![(n as f64).powf(-1.0 / k as f64); n];
    let mut y = vec![0.0; n];
    let mut best: Option<(f64, f64, Vec<f64>)> = None;

    for iteration in 1..=opts.max_iterations {
        y.iter_mut()
            .zip(&x)
            .for_each(|(yi, xi)| *yi = opts.shift * xi.powi(p));
        accumulate(h, &x, &mut y);

        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, xi) in y.iter().zip(&x) {
            let ratio = yi / xi.powi(p);
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        let (lower, upper) = (lo - opts.shift, hi - opts.shift);
        if best
            .as_ref()
            .is_none_or(|(bl, bu, _)| upper - lower < bu - bl)
        {
            best = Some((lower, upper, x.clone()));
        }
        if upper - lower <= opts.tolerance {
            return Ok(finish(h, lower, upper, x, iteration));
        }

        y.iter_mut().for_each(|yi| *yi = yi.powf(root));
        x = normalize_k(&y, k).expect("iterate of a connected hypergraph stays positive");
    }

    let (lower, upper, x) = best.expect("at least one iteration ran");
    Err(Error::NotConverged {
        best: Box::new(finish(h, lower, upper, x, opts.max_iterations)),
    })
}

fn finish(h: &Hypergraph, lower: f64, upper: f64, x: Vec<f64>, iterations: usize) -> SpectralResult {
    let rho = 0.5 * (lower + upper);
    let residual = eigen_residual(h, rho, &x).expect("length checked");
    SpectralResult {
        rho,
        lower,
        upper,
        eigenvector: x,
        residual,
        iterations,
    }
}
