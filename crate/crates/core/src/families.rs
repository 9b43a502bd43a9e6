//! Generators for the three linear bicyclic families `B_m^P`, `B_m^L(1)` and
//! `B_m^L(2)`.
//!
//! Vertex numbering is deterministic: the distinguished (named) vertices come
//! first in a fixed role order, followed by the unnamed pendant fillers in
//! edge order. Each generator returns a [`LabeledHypergraph`] whose role maps
//! name the vertices and edges the certificate builders and symmetry checks
//! refer to.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeSwap, Hypergraph};

/// A hypergraph together with named vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub graph: Hypergraph,
    pub vertex_roles: BTreeMap<String, usize>,
    pub edge_roles: BTreeMap<String, usize>,
}

impl LabeledHypergraph {
    /// Checks that every role points at an existing vertex or edge.
    pub fn new(
        graph: Hypergraph,
        vertex_roles: BTreeMap<String, usize>,
        edge_roles: BTreeMap<String, usize>,
    ) -> Result<Self> {
        for (role, &index) in &vertex_roles {
            if index >= graph.n() {
                return Err(Error::RoleOutOfRange {
                    role: role.clone(),
                    index,
                });
            }
        }
        for (role, &index) in &edge_roles {
            if index >= graph.m() {
                return Err(Error::RoleOutOfRange {
                    role: role.clone(),
                    index,
                });
            }
        }
        Ok(Self {
            graph,
            vertex_roles,
            edge_roles,
        })
    }

    pub fn vertex(&self, role: &str) -> Result<usize> {
        self.vertex_roles
            .get(role)
            .copied()
            .ok_or_else(|| Error::MissingRole(role.to_string()))
    }

    pub fn edge(&self, role: &str) -> Result<usize> {
        self.edge_roles
            .get(role)
            .copied()
            .ok_or_else(|| Error::MissingRole(role.to_string()))
    }
}

/// Which of the three bicyclic families to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `B_m^P`: theta base with pendant edges at `v`.
    P,
    /// `B_m^L(1)`: three cycle edges at `u1`, closed by `{u2, u3, u4}`.
    L1,
    /// `B_m^L(2)`: three cycle edges at `v4`, closed by `{v1, v2, v3}`.
    L2,
}

impl Family {
    pub fn generate(self, k: usize, m: usize) -> Result<LabeledHypergraph> {
        match self {
            Family::P => gen_b_p(k, m),
            Family::L1 => gen_b_l1(k, m),
            Family::L2 => gen_b_l2(k, m),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "bp",
            Family::L1 => "bl1",
            Family::L2 => "bl2",
        }
    }
}

struct Builder {
    k: usize,
    next: usize,
    edges: Vec<Vec<usize>>,
    vertex_roles: BTreeMap<String, usize>,
    edge_roles: BTreeMap<String, usize>,
}

impl Builder {
    fn new(k: usize) -> Self {
        Self {
            k,
            next: 0,
            edges: Vec::new(),
            vertex_roles: BTreeMap::new(),
            edge_roles: BTreeMap::new(),
        }
    }

    fn named(&mut self, role: impl Into<String>) -> usize {
        let v = self.next;
        self.next += 1;
        self.vertex_roles.insert(role.into(), v);
        v
    }

    /// Adds an edge through `core`, padded with fresh pendant vertices.
    fn edge(&mut self, role: impl Into<String>, core: &[usize]) {
        let mut edge = core.to_vec();
        while edge.len() < self.k {
            edge.push(self.next);
            self.next += 1;
        }
        self.edge_roles.insert(role.into(), self.edges.len());
        self.edges.push(edge);
    }

    fn finish(self) -> Result<LabeledHypergraph> {
        let graph = Hypergraph::new(self.k, self.next, self.edges)?;
        LabeledHypergraph::new(graph, self.vertex_roles, self.edge_roles)
    }
}

fn check_params(k: usize, m: usize) -> Result<()> {
    if k < 3 || m < 5 {
        return Err(Error::FamilyParameters { k, m });
    }
    Ok(())
}

/// `B_m^P`: three internally disjoint paths between `v` and `w`, namely
/// `g = {v, w, ..}`, `e1 = {v, a1.., a}` then `f1 = {a, w, ..}`, and
/// `e2 = {v, b1.., b}` then `f2 = {b, w, ..}`, plus `m - 5` pendant edges
/// `p1..` at `v`.
pub fn gen_b_p(k: usize, m: usize) -> Result<LabeledHypergraph> {
    check_params(k, m)?;
    let mut b = Builder::new(k);
    let v = b.named("v");
    let a = b.named("a");
    let bb = b.named("b");
    let w = b.named("w");
    let a_side: Vec<usize> = (1..=k - 2).map(|i| b.named(format!("a{i}"))).collect();
    let b_side: Vec<usize> = (1..=k - 2).map(|i| b.named(format!("b{i}"))).collect();

    let mut e1 = vec![v];
    e1.extend(&a_side);
    e1.push(a);
    let mut e2 = vec![v];
    e2.extend(&b_side);
    e2.push(bb);
    b.edge("e1", &e1);
    b.edge("e2", &e2);
    b.edge("f1", &[a, w]);
    b.edge("f2", &[bb, w]);
    b.edge("g", &[v, w]);
    for i in 1..=m - 5 {
        b.edge(format!("p{i}"), &[v]);
    }
    b.finish()
}

/// `B_m^L(1)`: pendant edges `e1..e_{m-4}` at `u1`, cycle edges
/// `e_{m-3} ∋ u1,u2`, `e_{m-2} ∋ u1,u3`, `e_{m-1} ∋ u1,u4`, and
/// `e_m ⊇ {u2, u3, u4}`.
pub fn gen_b_l1(k: usize, m: usize) -> Result<LabeledHypergraph> {
    check_params(k, m)?;
    let mut b = Builder::new(k);
    let u: Vec<usize> = (1..=4).map(|i| b.named(format!("u{i}"))).collect();
    for i in 1..=m - 4 {
        b.edge(format!("e{i}"), &[u[0]]);
    }
    b.edge(format!("e{}", m - 3), &[u[0], u[1]]);
    b.edge(format!("e{}", m - 2), &[u[0], u[2]]);
    b.edge(format!("e{}", m - 1), &[u[0], u[3]]);
    b.edge(format!("e{m}"), &[u[1], u[2], u[3]]);
    b.finish()
}

/// `B_m^L(2)`: pendant edges `e1..e_{m-4}` at `v1`, `e_{m-3} ∋ v1,v4`,
/// `e_{m-2} ∋ v2,v4`, `e_{m-1} ∋ v3,v4`, and `e_m ⊇ {v1, v2, v3}`.
pub fn gen_b_l2(k: usize, m: usize) -> Result<LabeledHypergraph> {
    check_params(k, m)?;
    let mut b = Builder::new(k);
    let v: Vec<usize> = (1..=4).map(|i| b.named(format!("v{i}"))).collect();
    for i in 1..=m - 4 {
        b.edge(format!("e{i}"), &[v[0]]);
    }
    b.edge(format!("e{}", m - 3), &[v[0], v[3]]);
    b.edge(format!("e{}", m - 2), &[v[1], v[3]]);
    b.edge(format!("e{}", m - 1), &[v[2], v[3]]);
    b.edge(format!("e{m}"), &[v[0], v[1], v[2]]);
    b.finish()
}

/// The surgery turning `B_m^P` into `B_m^L(2)`: drop `e1`, `e2` and add
/// `e1' = {v, a, b, a2, .., a_{k-2}}` and `e2' = {v, a1, b1, .., b_{k-2}}`.
pub fn bp_to_bl2_swap(bp: &LabeledHypergraph) -> Result<EdgeSwap> {
    let k = bp.graph.k();
    let v = bp.vertex("v")?;
    let a = bp.vertex("a")?;
    let b = bp.vertex("b")?;
    let a_side = (1..=k - 2)
        .map(|i| bp.vertex(&format!("a{i}")))
        .collect::<Result<Vec<_>>>()?;
    let b_side = (1..=k - 2)
        .map(|i| bp.vertex(&format!("b{i}")))
        .collect::<Result<Vec<_>>>()?;
    let remove = ["e1", "e2"]
        .iter()
        .map(|r| Ok(bp.graph.edge(bp.edge(r)?).to_vec()))
        .collect::<Result<Vec<_>>>()?;

    let mut e1p = vec![v, a, b];
    e1p.extend(&a_side[1..]);
    let mut e2p = vec![v, a_side[0]];
    e2p.extend(&b_side);
    Ok(EdgeSwap::new(remove, vec![e1p, e2p]))
}
