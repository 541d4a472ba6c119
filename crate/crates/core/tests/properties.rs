use proptest::prelude::*;

use gyrograph::distance::{detour_matrix, distance_matrix};
use gyrograph::hamiltonian::{hamiltonian_cycle_search, is_hamiltonian};
use gyrograph::hosoya::hosoya_polynomial;
use gyrograph::isomorphism::{find_isomorphism, gyro_isomorphic, verify_isomorphism};
use gyrograph::planarity::is_planar;
use gyrograph::resolving::{resolving_polynomial, resolving_sequence_exhaustive};
use gyrograph::spectral::{adjacency_matrix, char_poly_at, char_poly_exact};
use gyrograph::table_io::Bundled;
use gyrograph::{power_graph, Graph, GyroGroup, Permutation};
use num_bigint::BigInt;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn relabelled(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn connected(max_order: usize) -> impl Strategy<Value = Graph> {
    graph(max_order).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn planarity_certificates_verify(g in graph(11)) {
        let p = is_planar(&g).unwrap();
        prop_assert!(p.verify(&g));
        if g.order() >= 3 {
            prop_assert!(!p.planar || g.edge_count() <= 3 * g.order() - 6);
        }
    }

    #[test]
    fn hamiltonian_shortcuts_agree_with_search(g in graph(9)) {
        let h = is_hamiltonian(&g).unwrap();
        prop_assert!(h.cycle_is_valid(&g));
        prop_assert_eq!(h.hamiltonian, hamiltonian_cycle_search(&g).unwrap().is_some());
    }

    #[test]
    fn isomorphism_found_for_relabelling((g, p) in relabelled(10)) {
        let h = g.permuted(&p).unwrap();
        let w = find_isomorphism(&g, &h).unwrap().expect("relabelled graph is isomorphic");
        prop_assert!(w.valid);
        prop_assert!(verify_isomorphism(&g, &h, &w.map).unwrap().valid);
        prop_assert!(verify_isomorphism(&g, &h, &Permutation::new(p).unwrap()).unwrap().valid);
    }

    #[test]
    fn charpoly_matches_determinants(g in graph(9), x in -4i64..=4) {
        let a = adjacency_matrix(&g);
        let p = char_poly_exact(&a).unwrap();
        prop_assert_eq!(p.eval(&BigInt::from(x)), char_poly_at(&a, x));
        prop_assert_eq!(p.degree(), Some(g.order() as u32));
    }

    #[test]
    fn pruned_resolving_matches_exhaustive(g in connected(8)) {
        let pruned = resolving_polynomial(&g).unwrap();
        let full = resolving_sequence_exhaustive(&g).unwrap();
        prop_assert_eq!(pruned.metric_dimension, full.metric_dimension);
        prop_assert_eq!(pruned.sequence, full.sequence);
    }

    #[test]
    fn hosoya_counts_pairs(g in connected(10)) {
        let n = g.order();
        let h = hosoya_polynomial(&g).unwrap();
        prop_assert_eq!(h.coefficient_sum(), BigInt::from(n + n * (n - 1) / 2));
        prop_assert_eq!(h.coefficient(1), BigInt::from(g.edge_count()));
    }

    #[test]
    fn detour_dominates_distance(g in connected(9)) {
        let d = distance_matrix(&g);
        let dd = detour_matrix(&g).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert!(dd.get(u, v) >= d.get(u, v));
                prop_assert_eq!(dd.get(u, v), dd.get(v, u));
            }
        }
    }
}

#[test]
fn gyro_isomorphism_carries_power_graphs() {
    let tables: Vec<GyroGroup> = Bundled::ALL
        .into_iter()
        .map(|b| b.load().unwrap())
        .chain([GyroGroup::gn(3).unwrap()])
        .collect();
    for a in &tables {
        for b in &tables {
            if let Some(w) = gyro_isomorphic(a, b).unwrap() {
                let v = verify_isomorphism(&power_graph(a), &power_graph(b), &w.map).unwrap();
                assert!(v.valid);
            }
        }
    }
}

#[test]
fn power_graphs_of_gn_have_fixed_counts() {
    for n in 3..=6 {
        let g = power_graph(&GyroGroup::gn(n).unwrap());
        let m = 1usize << (n - 1);
        assert_eq!(g.order(), 2 * m);
        assert_eq!(g.edge_count(), m * (m - 1) / 2 + m);
    }
}
