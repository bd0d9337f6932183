mod common;

use common::{oracle, random_specs, SAMPLE_POTENTIALS};
use periodic_spectra::cli::fixtures::{fig1, zline};
use periodic_spectra::cycles::{
    distances_to_set, edge_weights, mst_gauge, omega, omega_of_value, shortest_nontrivial_cycle,
    shortest_nontrivial_cycle_lifted,
};

#[test]
fn kruskal_matches_exhaustive_enumeration() {
    for spec in random_specs(2024, 80) {
        let brute = oracle(&spec);
        let report = omega(&spec).unwrap();
        for (a, expected) in brute.values.iter().zip(&brute.omega_per_value) {
            assert_eq!(report.omega_of(*a), Some(*expected), "{spec:?} a = {a}");
        }
        assert_eq!(report.omega, brute.omega);
    }
}

#[test]
fn shortest_cycles_three_ways() {
    for spec in random_specs(7, 60) {
        let brute = oracle(&spec);
        let found = shortest_nontrivial_cycle(&spec).unwrap();
        assert_eq!(found.gamma, brute.gamma);
        assert_eq!(found.count, brute.gamma_count);
        assert_eq!(shortest_nontrivial_cycle_lifted(&spec), Some(brute.gamma));
    }
}

#[test]
fn distances_match_floyd_warshall() {
    for spec in random_specs(5, 30) {
        let all = common::all_pairs_distances(&spec);
        for (v, row) in all.iter().enumerate() {
            assert_eq!(&distances_to_set(&spec, &[v]).unwrap(), row);
        }
    }
}

#[test]
fn gauge_support_weights_reach_omega() {
    for spec in random_specs(99, 40).into_iter().chain(SAMPLE_POTENTIALS.map(fig1)) {
        for a in spec.distinct_values() {
            let g = mst_gauge(&spec, a).unwrap();
            let w = omega_of_value(&spec, a).unwrap();
            assert_eq!(g.min_support_weight(), Some(w));
            assert!(g.tree_edges.iter().all(|&id| g.form.on_edge(id).is_zero()));
            let gauged = spec.with_form(&g.form);
            for c in common::all_simple_cycles(&spec) {
                assert_eq!(common::cycle_index(&spec, &c), common::cycle_index(&gauged, &c));
            }
        }
    }
}

#[test]
fn exponents_depend_only_on_level_sets() {
    for spec in random_specs(3, 30) {
        let base = omega(&spec).unwrap();
        let shifted: Vec<f64> = spec.potential().iter().map(|q| 2.5 * q - 7.0).collect();
        let other = omega(&spec.with_potential(shifted).unwrap()).unwrap();
        let ws: Vec<usize> = base.per_value.iter().map(|v| v.omega).collect();
        let ws2: Vec<usize> = other.per_value.iter().map(|v| v.omega).collect();
        assert_eq!(ws, ws2);
    }
}

#[test]
fn weights_are_endpoint_distance_sums() {
    let spec = fig1(SAMPLE_POTENTIALS[2]);
    let w = edge_weights(&spec, 0.0).unwrap();
    assert_eq!(w.vertex_distance, vec![2, 2, 2, 1, 0, 0]);
    for (e, &weight) in spec.edges().iter().zip(&w.edge_weight) {
        assert_eq!(weight, w.vertex_distance[e.u] + w.vertex_distance[e.v]);
    }
}

#[test]
fn constant_potential_on_a_line_has_no_degeneracy() {
    for nu in 3..8 {
        assert_eq!(omega(&zline(nu, &vec![1.0; nu])).unwrap().omega, 0);
    }
}
