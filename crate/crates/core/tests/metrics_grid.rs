use coresat::graph::{core_satellite, generalized_core_satellite, path_graph};
use coresat::metrics::closed_form::{
    analytic_metrics, avg_clustering, avg_clustering_single_fraction, core_clustering,
    transitivity_single_fraction,
};
use coresat::metrics::{
    assortativity, assortativity_estrada, local_clustering, metrics_report, path_counts,
    star_count, transitivity, triangle_count,
};
use coresat::oracle::{exhaustive_subgraph_counts, triangles_by_trace};
use coresat::{CoreSatelliteParams, Exact, GeneralizedParams, Graph, Scalar};
use proptest::prelude::*;

fn grid() -> impl Iterator<Item = CoreSatelliteParams> {
    (1..=5).flat_map(|c| {
        (1..=5).flat_map(move |s| (2..=6).map(move |e| CoreSatelliteParams::new(c, s, e).unwrap()))
    })
}

#[test]
fn closed_forms_match_direct_exactly() {
    for p in grid() {
        let g = core_satellite(&p);
        let direct = metrics_report::<Exact>(&g);
        let analytic = analytic_metrics::<Exact>(&p);
        assert_eq!(direct, analytic, "{p:?}");
        assert_eq!(
            local_clustering::<Exact>(&g, 0).unwrap(),
            core_clustering::<Exact>(&p)
        );
        assert_eq!(
            transitivity_single_fraction::<Exact>(&p),
            direct.transitivity,
            "{p:?}"
        );
        if p.core_size() + p.satellite_size() >= 3 {
            assert_eq!(
                avg_clustering_single_fraction::<Exact>(&p),
                direct.avg_clustering
            );
        }
    }
}

#[test]
fn closed_forms_in_f64_within_tolerance() {
    for p in grid() {
        let direct = metrics_report::<f64>(&core_satellite(&p));
        let analytic = analytic_metrics::<f64>(&p);
        assert!((direct.avg_clustering - analytic.avg_clustering).abs() <= 1e-12);
        assert!((direct.transitivity - analytic.transitivity).abs() <= 1e-12);
    }
}

#[test]
fn oracle_counts_agree_with_fast_counters() {
    let mut graphs: Vec<Graph> = grid()
        .map(|p| core_satellite(&p))
        .filter(|g| g.node_count() <= 50)
        .collect();
    graphs.push(path_graph(6));
    graphs.push(generalized_core_satellite(
        &GeneralizedParams::new(2, [(1, 2), (3, 2), (4, 1)]).unwrap(),
    ));
    for g in &graphs {
        let oracle = exhaustive_subgraph_counts(g, 50).unwrap();
        let paths = path_counts(g);
        assert_eq!(oracle.triangles, triangle_count(g));
        assert_eq!(oracle.p2, paths.p2);
        assert_eq!(oracle.p3, paths.p3);
        assert_eq!(oracle.s13, star_count(g));
        assert_eq!(triangles_by_trace(g, 50).unwrap(), oracle.triangles);
    }
}

#[test]
fn three_paths_are_not_zero() {
    // every core-satellite graph with a satellite of size >= 2 and η >= 2 has
    // simple 3-paths (satellite – core – satellite′ – satellite″)
    for p in grid().filter(|p| p.satellite_size() >= 2) {
        let counts = exhaustive_subgraph_counts(&core_satellite(&p), 50);
        if let Ok(counts) = counts {
            assert!(counts.p3 > 0, "{p:?}");
        }
    }
}

#[test]
fn disassortative_on_grid() {
    for p in grid() {
        let g = core_satellite(&p);
        let r: f64 = assortativity(&g).unwrap();
        assert!(r < 0.0, "{p:?}: {r}");
        assert_eq!(
            assortativity::<Exact>(&g),
            assortativity_estrada::<Exact>(&g)
        );
        let e: f64 = assortativity_estrada(&g).unwrap();
        assert!((r - e).abs() <= 1e-12);
    }
}

// C̄ is not monotone over the whole range: for c >= 2 it dips at small η
// (or stalls for one step) before climbing towards 1. C decreases strictly
// throughout.
#[test]
fn divergence_shape() {
    for c in 1..=5 {
        for s in 1..=5 {
            // the star has C̄ = C = 0 for every η
            if c + s < 3 {
                continue;
            }
            let reports: Vec<_> = (2..=100)
                .map(|eta| analytic_metrics::<Exact>(&CoreSatelliteParams::new(c, s, eta).unwrap()))
                .collect();
            for w in reports.windows(2) {
                assert!(w[1].transitivity < w[0].transitivity, "c={c} s={s}");
            }
            let avg: Vec<Exact> = reports.iter().map(|r| r.avg_clustering).collect();
            let turn = avg.windows(2).position(|w| w[1] > w[0]).unwrap();
            assert!(avg[..=turn].windows(2).all(|w| w[1] <= w[0]), "c={c} s={s}");
            assert!(avg[turn..].windows(2).all(|w| w[1] > w[0]), "c={c} s={s}");
        }
    }
}

#[test]
fn average_clustering_dips_before_diverging() {
    let at = |eta| avg_clustering::<Exact>(&CoreSatelliteParams::new(2, 3, eta).unwrap());
    assert_eq!(at(2), Exact::new(25, 28));
    assert_eq!(at(3), Exact::new(49, 55));
    assert!(at(3) < at(2) && at(4) > at(3));
    let g = core_satellite(&CoreSatelliteParams::new(2, 3, 3).unwrap());
    assert_eq!(
        coresat::metrics::average_clustering::<Exact>(&g),
        Exact::new(49, 55)
    );
}

#[test]
fn divergence_limits_at_desk_scale() {
    let p = CoreSatelliteParams::new(2, 3, 1000).unwrap();
    assert!(avg_clustering::<f64>(&p) > 0.999);
    assert!(analytic_metrics::<f64>(&p).transitivity < 0.01);
}

#[test]
fn generalized_graphs_diverge_and_are_disassortative() {
    let mut last: Option<(f64, f64)> = None;
    for count in [1, 2, 4, 8, 16, 32] {
        let p = GeneralizedParams::new(3, [(2, count), (4, count), (5, count)]).unwrap();
        let g = generalized_core_satellite(&p);
        let rep = metrics_report::<f64>(&g);
        assert!(rep.assortativity.unwrap() < 0.0);
        if let Some((avg, trans)) = last {
            assert!(rep.avg_clustering > avg && rep.transitivity < trans);
        }
        last = Some((rep.avg_clustering, rep.transitivity));
    }
    let (avg, trans) = last.unwrap();
    assert!(avg > 0.98 && trans < 0.2);
}

#[test]
fn path_of_four_nodes() {
    let g = path_graph(4);
    let r = assortativity::<Exact>(&g).unwrap();
    assert_eq!(Some(r), assortativity_estrada::<Exact>(&g));
    // endpoint degree pairs (1,2), (2,2), (2,1)
    assert_eq!(r, Exact::new(-1, 2));
}

proptest! {
    #[test]
    fn metric_invariants_on_random_graphs(
        n in 2usize..14,
        pairs in prop::collection::btree_set((0usize..14, 0usize..14), 0..40),
    ) {
        let edges: std::collections::BTreeSet<_> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let rep = metrics_report::<Exact>(&g);
        let zero = Exact::from_int(0);
        let one = Exact::from_int(1);
        prop_assert!(rep.avg_clustering >= zero && rep.avg_clustering <= one);
        prop_assert!(rep.transitivity >= zero && rep.transitivity <= one);
        prop_assert_eq!(rep.p1, rep.m);
        if rep.p2 > 0 {
            prop_assert_eq!(transitivity::<Exact>(&g), Exact::from_count(3 * rep.triangles) / Exact::from_count(rep.p2));
        }
        if let Some(r) = rep.assortativity {
            prop_assert!(r >= -one && r <= one);
            if rep.p2 > 0 {
                prop_assert_eq!(Some(r), rep.assortativity_estrada);
            }
        }
        let oracle = exhaustive_subgraph_counts(&g, 50).unwrap();
        prop_assert_eq!((oracle.triangles, oracle.p2, oracle.p3, oracle.s13), (rep.triangles, rep.p2, rep.p3, rep.s13));
    }
}
