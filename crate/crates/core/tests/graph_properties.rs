use coresat::graph::{
    complete_graph, core_satellite, diameter, generalized_core_satellite, is_connected, join,
};
use coresat::io::{read_edge_list, write_edge_list};
use coresat::{CoreSatelliteParams, GeneralizedParams, Graph};
use proptest::prelude::*;

fn arb_params() -> impl Strategy<Value = CoreSatelliteParams> {
    (1usize..8, 1usize..8, 1usize..8)
        .prop_map(|(c, s, e)| CoreSatelliteParams::new(c, s, e).unwrap())
}

fn arb_generalized() -> impl Strategy<Value = GeneralizedParams> {
    (
        1usize..6,
        prop::collection::vec((1usize..7, 1usize..4), 1..5),
    )
        .prop_map(|(c, classes)| GeneralizedParams::new(c, classes).unwrap())
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::btree_set((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let edges: std::collections::BTreeSet<_> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn core_satellite_counts(p in arb_params()) {
        let g = core_satellite(&p);
        let (c, s, eta) = (p.core_size(), p.satellite_size(), p.satellite_count());
        prop_assert_eq!(g.node_count(), c + eta * s);
        prop_assert_eq!(g.edge_count() as u128, p.edge_count());
        let degrees = g.degrees();
        prop_assert_eq!(degrees.iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert!(degrees[..c].iter().all(|&d| d == c + eta * s - 1));
        prop_assert!(degrees[c..].iter().all(|&d| d == c + s - 1));
        prop_assert!(is_connected(&g));
        if eta >= 2 {
            prop_assert_eq!(diameter(&g), Some(2));
        }
    }

    #[test]
    fn adjacency_is_symmetric(g in arb_graph()) {
        for u in 0..g.node_count() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
            }
        }
    }

    #[test]
    fn join_edge_count(a in arb_graph(), b in arb_graph()) {
        let j = join(&a, &b);
        prop_assert_eq!(j.node_count(), a.node_count() + b.node_count());
        prop_assert_eq!(
            j.edge_count(),
            a.edge_count() + b.edge_count() + a.node_count() * b.node_count()
        );
    }

    #[test]
    fn generalized_counts(p in arb_generalized()) {
        let g = generalized_core_satellite(&p);
        prop_assert_eq!(g.node_count(), p.node_count());
        prop_assert_eq!(g.edge_count() as u128, p.edge_count());
        prop_assert!(is_connected(&g));
        let sizes: Vec<_> = p.classes().iter().map(|c| c.size).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn single_class_is_core_satellite(p in arb_params()) {
        let gp = GeneralizedParams::new(p.core_size(), [(p.satellite_size(), p.satellite_count())]).unwrap();
        prop_assert_eq!(generalized_core_satellite(&gp), core_satellite(&p));
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(read_edge_list(buf.as_slice()).unwrap(), g);
    }
}

#[test]
fn core_satellite_is_join_of_core_with_satellites() {
    let p = CoreSatelliteParams::new(3, 2, 4).unwrap();
    let sats: Vec<Graph> = (0..4).map(|_| complete_graph(2).unwrap()).collect();
    let union = coresat::graph::disjoint_union(&sats);
    assert_eq!(
        join(&complete_graph(3).unwrap(), &union),
        core_satellite(&p)
    );
}
