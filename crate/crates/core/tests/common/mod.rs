use hyperspectra::Hypergraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Connected seeds for the power-lifting checks.
#[allow(dead_code)]
pub fn power_seeds() -> Vec<(&'static str, Hypergraph)> {
    let path = |n: usize| Hypergraph::new(2, n, (0..n - 1).map(|i| [i, i + 1])).unwrap();
    let cycle = |n: usize| Hypergraph::new(2, n, (0..n).map(|i| [i, (i + 1) % n])).unwrap();
    vec![
        ("K2", Hypergraph::new(2, 2, [[0, 1]]).unwrap()),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("E3", Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap()),
        ("LP3", Hypergraph::new(3, 5, [[0, 1, 2], [2, 3, 4]]).unwrap()),
    ]
}

/// Random connected 3-uniform hypergraph on `n` vertices: a random tree of
/// edges, each new edge touching the covered set, plus a few extra edges.
#[allow(dead_code)]
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    let mut covered = vec![0usize];
    let mut uncovered: Vec<usize> = (1..n).collect();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    while !uncovered.is_empty() {
        let anchor = covered[rng.gen_range(0..covered.len())];
        let mut e = vec![anchor];
        // the rest of the edge comes from the covered set, minus the anchor
        let least = 2usize.saturating_sub(covered.len() - 1).max(1);
        let fresh = uncovered.len().min(rng.gen_range(least..=2));
        for _ in 0..fresh {
            let i = rng.gen_range(0..uncovered.len());
            e.push(uncovered.swap_remove(i));
        }
        while e.len() < 3 {
            let v = covered[rng.gen_range(0..covered.len())];
            if !e.contains(&v) {
                e.push(v);
            }
        }
        covered.extend(&e[1..]);
        covered.sort_unstable();
        covered.dedup();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    for _ in 0..rng.gen_range(0..=n) {
        let mut e: Vec<usize> = Vec::new();
        while e.len() < 3 {
            let v = rng.gen_range(0..n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(3, n, edges).unwrap()
}

