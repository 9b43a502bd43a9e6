//! The explicit labelings of `B_m^L(1)` and `B_m^L(2)`, with
//! `y = alpha^{1/3}` the root of `(m-4) y^4 - (m-1) y^3 - y + 1` in `(0, 1)`.

use crate::error::{Error, Result};
use crate::families::{gen_b_l1, gen_b_l2, Family, LabeledHypergraph};

use super::check::WeightedIncidence;
use super::root::{solve_bl1_alpha, AlphaRoot};

/// A family member with its labeling and the `alpha` it certifies.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub graph: LabeledHypergraph,
    pub weights: WeightedIncidence,
    pub root: AlphaRoot,
}

impl Certificate {
    pub fn alpha(&self) -> f64 {
        self.root.alpha
    }
}

pub fn build_certificate(family: Family, k: usize, m: usize) -> Result<Certificate> {
    match family {
        Family::L1 => build_bl1_certificate(k, m),
        Family::L2 => build_bl2_certificate(k, m),
        Family::P => Err(Error::NoCertificate(family.name())),
    }
}

/// Pendant vertices get weight 1; `entries` lists the rest as
/// (vertex role, edge role, weight).
fn assemble(
    graph: LabeledHypergraph,
    root: AlphaRoot,
    entries: &[(&str, String, f64)],
) -> Result<Certificate> {
    let h = &graph.graph;
    let mut weights = WeightedIncidence::new();
    for (e, vertices) in h.edges().iter().enumerate() {
        for &v in vertices {
            if h.incident_edges(v).len() == 1 {
                weights.insert(v, e, 1.0)?;
            }
        }
    }
    for (vrole, erole, w) in entries {
        weights.insert(graph.vertex(vrole)?, graph.edge(erole)?, *w)?;
    }
    weights.check_support(h)?;
    Ok(Certificate {
        graph,
        weights,
        root,
    })
}

fn e(i: usize) -> String {
    format!("e{i}")
}

pub fn build_bl1_certificate(k: usize, m: usize) -> Result<Certificate> {
    let graph = gen_b_l1(k, m)?;
    let root = solve_bl1_alpha(m)?;
    let (y, alpha) = (root.y, root.alpha);

    let mut entries: Vec<(&str, String, f64)> = (1..=m - 4).map(|i| ("u1", e(i), alpha)).collect();
    for i in m - 3..=m - 1 {
        entries.push(("u1", e(i), alpha / (1.0 - y)));
    }
    entries.push(("u2", e(m - 3), 1.0 - y));
    entries.push(("u3", e(m - 2), 1.0 - y));
    entries.push(("u4", e(m - 1), 1.0 - y));
    for u in ["u2", "u3", "u4"] {
        entries.push((u, e(m), y));
    }
    assemble(graph, root, &entries)
}

/// Two tables: one for `m = 5`, one for `m >= 6`.
pub fn build_bl2_certificate(k: usize, m: usize) -> Result<Certificate> {
    let graph = gen_b_l2(k, m)?;
    let root = solve_bl1_alpha(m)?;
    let (y, alpha) = (root.y, root.alpha);

    let entries: Vec<(&str, String, f64)> = if m == 5 {
        vec![
            ("v1", e(1), alpha),
            ("v1", e(2), 1.0 - alpha - y),
            ("v1", e(5), y),
            ("v2", e(5), y),
            ("v3", e(5), y),
            ("v2", e(3), 1.0 - y),
            ("v3", e(4), 1.0 - y),
            ("v4", e(3), alpha / (1.0 - y)),
            ("v4", e(4), alpha / (1.0 - y)),
            ("v4", e(2), 1.0 - 2.0 * alpha / (1.0 - y)),
        ]
    } else {
        let y2 = y * y;
        let mut entries: Vec<(&str, String, f64)> =
            (1..=m - 4).map(|i| ("v1", e(i), alpha)).collect();
        entries.extend([
            ("v1", e(m - 3), alpha / (1.0 - y)),
            ("v1", e(m), 2.0 * alpha / (1.0 - y)),
            ("v2", e(m), 1.0 - 2.0 * y2),
            ("v3", e(m), 1.0 - 2.0 * y2),
            ("v2", e(m - 2), 2.0 * y2),
            ("v3", e(m - 1), 2.0 * y2),
            ("v4", e(m - 2), y / 2.0),
            ("v4", e(m - 1), y / 2.0),
            ("v4", e(m - 3), 1.0 - y),
        ]);
        entries
    };
    assemble(graph, root, &entries)
}
