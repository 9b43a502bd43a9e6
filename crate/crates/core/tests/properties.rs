use hyperspectra::spectral::{normalize_k, rayleigh, spectral_radius};
use hyperspectra::{apply_adjacency, eigen_residual, EdgeSwap, Hypergraph, SolverOptions};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::random_connected;

fn connected_3_uniform(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected(&mut rng, n)
    })
}

/// Arbitrary (possibly disconnected) k-uniform hypergraph.
fn any_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 4usize..=9)
        .prop_flat_map(|(k, n)| {
            let edge = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k);
            (Just(k), Just(n), proptest::collection::btree_set(edge, 0..8))
        })
        .prop_map(|(k, n, edges)| Hypergraph::new(k, n, edges).unwrap())
}

/// Maximizes `x^T (A x)` over `x >= 0`, `|x|_k = 1` without touching the
/// solver: substitute `x_i = z_i^{1/k}` with `z` on the probability simplex,
/// scan a lattice of step `1/grid`, then refine by pairwise mass transfers
/// with a shrinking step.
fn brute_force_rho(h: &Hypergraph, grid: usize) -> f64 {
    let n = h.n();
    let k = h.k() as f64;
    let value = |z: &[f64]| {
        let x: Vec<f64> = z.iter().map(|v| v.max(0.0).powf(1.0 / k)).collect();
        rayleigh(h, &x).unwrap()
    };

    let mut best_z = vec![1.0 / n as f64; n];
    let mut best = value(&best_z);
    let mut counts = vec![0usize; n];
    fn lattice(i: usize, left: usize, counts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i + 1 == counts.len() {
            counts[i] = left;
            visit(counts);
            return;
        }
        for c in 0..=left {
            counts[i] = c;
            lattice(i + 1, left - c, counts, visit);
        }
    }
    lattice(0, grid, &mut counts, &mut |c| {
        let z: Vec<f64> = c.iter().map(|&ci| ci as f64 / grid as f64).collect();
        let v = value(&z);
        if v > best {
            best = v;
            best_z = z;
        }
    });

    let mut step = 0.5 / grid as f64;
    while step > 1e-13 {
        let mut improved = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let moved = step.min(best_z[j]);
                if moved <= 0.0 {
                    continue;
                }
                let mut z = best_z.clone();
                z[i] += moved;
                z[j] -= moved;
                let v = value(&z);
                if v > best {
                    best = v;
                    best_z = z;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best
}

#[test]
fn solver_matches_brute_force_on_small_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut instances = vec![
        Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap(),
        Hypergraph::new(3, 5, [[0, 1, 2], [2, 3, 4]]).unwrap(),
        Hypergraph::new(3, 4, [[0, 1, 2], [1, 2, 3], [0, 2, 3], [0, 1, 3]]).unwrap(),
        Hypergraph::new(3, 6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap(),
    ];
    for n in [4, 5, 5, 6, 6, 6] {
        instances.push(random_connected(&mut rng, n));
    }
    for h in instances {
        let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
        let oracle = brute_force_rho(&h, 12);
        assert!(
            (r.rho - oracle).abs() <= 1e-4,
            "{:?}: solver {} vs oracle {oracle}",
            h.edges(),
            r.rho
        );
    }
}

#[test]
fn complete_3_graph_on_4_vertices() {
    // K_4^{(3)} is 3-regular and vertex-transitive: the uniform vector is the
    // Perron vector with eigenvalue (A 1)_v = 3.
    let h = Hypergraph::new(3, 4, [[0, 1, 2], [1, 2, 3], [0, 2, 3], [0, 1, 3]]).unwrap();
    let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
    assert!((r.rho - 3.0).abs() < 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_km(h in any_hypergraph()) {
        let total: usize = (0..h.n()).map(|v| h.degree(v).unwrap()).sum();
        prop_assert_eq!(total, h.k() * h.m());
    }

    #[test]
    fn adjacency_scale_covariance(h in any_hypergraph(), c in 0.0f64..3.0, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<f64> = (0..h.n()).map(|_| rng.gen_range(0.0..2.0)).collect();
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let lhs = apply_adjacency(&h, &scaled).unwrap();
        let rhs = apply_adjacency(&h, &x).unwrap();
        let factor = c.powi(h.k() as i32 - 1);
        for (a, b) in lhs.iter().zip(&rhs) {
            prop_assert!((a - factor * b).abs() <= 1e-12 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn edge_swap_counts(h in any_hypergraph(), drop in 0usize..3) {
        let drop = drop.min(h.m());
        let remove: Vec<Vec<usize>> = h.edges()[..drop].to_vec();
        let swapped = h.edge_swap(&EdgeSwap::new(remove.clone(), vec![])).unwrap();
        prop_assert_eq!(swapped.n(), h.n());
        prop_assert_eq!(swapped.m(), h.m() - drop);
        let back = swapped.edge_swap(&EdgeSwap::new(vec![], remove)).unwrap();
        prop_assert_eq!(back.m(), h.m());
        for e in h.edges() {
            prop_assert!(back.contains_edge(e));
        }
    }

    #[test]
    fn solver_contracts(h in connected_3_uniform(10), seed in any::<u64>()) {
        use rand::Rng;
        let opts = SolverOptions::default();
        let r = spectral_radius(&h, &opts).unwrap();
        let norm: f64 = r.eigenvector.iter().map(|v| v.powi(3)).sum();
        prop_assert!((norm - 1.0).abs() <= 1e-12);
        prop_assert!(r.eigenvector.iter().all(|&v| v > 0.0));
        prop_assert!(r.residual <= opts.tolerance);
        prop_assert!(eigen_residual(&h, r.rho, &r.eigenvector).unwrap() <= opts.tolerance);
        prop_assert!(r.lower <= r.rho && r.rho <= r.upper);
        let avg = (h.k() * h.m()) as f64 / h.n() as f64;
        prop_assert!(r.rho >= avg - opts.tolerance);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let raw: Vec<f64> = (0..h.n()).map(|_| rng.gen::<f64>()).collect();
            let x = normalize_k(&raw, 3).unwrap();
            prop_assert!(rayleigh(&h, &x).unwrap() <= r.rho + opts.tolerance);
        }
    }
}
