//! Backtracking isomorphism test for small uniform hypergraphs.
//!
//! Candidates are pruned by colour refinement on the vertex/edge incidence
//! graph (seeded by degree) and by pairwise co-degrees against the vertices
//! already placed. Intended for desk-scale instances only.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_VERTEX_LIMIT: usize = 64;

pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    are_isomorphic_with_limit(h1, h2, DEFAULT_VERTEX_LIMIT)
}

pub fn are_isomorphic_with_limit(h1: &Hypergraph, h2: &Hypergraph, limit: usize) -> Result<bool> {
    Ok(find_isomorphism_with_limit(h1, h2, limit)?.is_some())
}

/// Returns a vertex bijection `phi` with `phi(e) ∈ E(h2)` for every
/// `e ∈ E(h1)`, if one exists.
pub fn find_isomorphism_with_limit(
    h1: &Hypergraph,
    h2: &Hypergraph,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    for h in [h1, h2] {
        if h.n() > limit {
            return Err(Error::InstanceTooLarge { n: h.n(), limit });
        }
    }
    if h1.k() != h2.k() || h1.n() != h2.n() || h1.m() != h2.m() {
        return Ok(None);
    }
    let mut d1 = h1.degrees();
    let mut d2 = h2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }

    let (c1, c2) = refine_colours(h1, h2);
    let mut hist1 = c1.clone();
    let mut hist2 = c2.clone();
    hist1.sort_unstable();
    hist2.sort_unstable();
    if hist1 != hist2 {
        return Ok(None);
    }

    let mut search = Search {
        h1,
        h2,
        c1,
        c2,
        co1: codegrees(h1),
        co2: codegrees(h2),
        order: search_order(h1),
        map: vec![usize::MAX; h1.n()],
        used: vec![false; h2.n()],
    };
    Ok(search.extend(0).then_some(search.map))
}

/// Colour refinement over the disjoint union of both incidence graphs so
/// colour ids are comparable across the two inputs.
fn refine_colours(h1: &Hypergraph, h2: &Hypergraph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [h1, h2];
    let mut vcol: [Vec<usize>; 2] = [h1.degrees(), h2.degrees()];
    let mut classes = distinct(&vcol);
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let ecol: Vec<Vec<usize>> = (0..2)
            .map(|g| {
                graphs[g]
                    .edges()
                    .iter()
                    .map(|e| {
                        let mut sig: Vec<usize> = e.iter().map(|&v| vcol[g][v]).collect();
                        sig.sort_unstable();
                        sig.insert(0, usize::MAX);
                        let next = ids.len();
                        *ids.entry(sig).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        let mut next_col: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for g in 0..2 {
            next_col[g] = (0..graphs[g].n())
                .map(|v| {
                    let mut sig: Vec<usize> = graphs[g]
                        .incident_edges(v)
                        .iter()
                        .map(|&e| ecol[g][e])
                        .collect();
                    sig.sort_unstable();
                    sig.insert(0, vcol[g][v]);
                    let next = ids.len();
                    *ids.entry(sig).or_insert(next)
                })
                .collect();
        }
        let next_classes = distinct(&next_col);
        vcol = next_col;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let [a, b] = vcol;
    (a, b)
}

fn distinct(cols: &[Vec<usize>; 2]) -> usize {
    let mut all: Vec<usize> = cols.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn codegrees(h: &Hypergraph) -> Vec<Vec<u32>> {
    let mut co = vec![vec![0u32; h.n()]; h.n()];
    for e in h.edges() {
        for &a in e {
            for &b in e {
                if a != b {
                    co[a][b] += 1;
                }
            }
        }
    }
    co
}

/// Breadth-first order from the highest-degree vertex, so each placed vertex
/// tends to be constrained by its predecessors.
fn search_order(h: &Hypergraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut seen = vec![false; h.n()];
    let mut by_degree: Vec<usize> = (0..h.n()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(h.incident_edges(v).len()));
    for start in by_degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &e in h.incident_edges(v) {
                for &u in h.edge(e) {
                    if !seen[u] {
                        seen[u] = true;
                        order.push(u);
                    }
                }
            }
        }
    }
    order
}

struct Search<'a> {
    h1: &'a Hypergraph,
    h2: &'a Hypergraph,
    c1: Vec<usize>,
    c2: Vec<usize>,
    co1: Vec<Vec<u32>>,
    co2: Vec<Vec<u32>>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for w in 0..self.h2.n() {
            if self.used[w] || self.c1[u] != self.c2[w] || !self.compatible(u, w, depth) {
                continue;
            }
            self.map[u] = w;
            self.used[w] = true;
            if self.edges_preserved(u) && self.extend(depth + 1) {
                return true;
            }
            self.map[u] = usize::MAX;
            self.used[w] = false;
        }
        false
    }

    fn compatible(&self, u: usize, w: usize, depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&p| self.co1[u][p] == self.co2[w][self.map[p]])
    }

    /// Every edge at `u` that is now fully placed must land on an edge.
    fn edges_preserved(&self, u: usize) -> bool {
        let mut image = Vec::with_capacity(self.h1.k());
        self.h1.incident_edges(u).iter().all(|&e| {
            image.clear();
            for &x in self.h1.edge(e) {
                let y = self.map[x];
                if y == usize::MAX {
                    return true;
                }
                image.push(y);
            }
            self.h2.contains_edge(&image)
        })
    }
}
