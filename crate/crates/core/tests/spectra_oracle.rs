use coresat::graph::{core_satellite, generalized_core_satellite};
use coresat::oracle::{
    adjacency_matrix, eigenvalues_symmetric, laplacian_matrix, DenseSymmetricMatrix,
};
use coresat::spectra::{
    adjacency_spectrum_cs, adjacency_spectrum_gcs, divisor_matrix, eigen_residual,
    extreme_eigenvalues, laplacian_spectrum_gcs, principal_eigenvector, secular_roots,
    spectral_indices, spectral_radius_bounds,
};
use coresat::{CoreSatelliteParams, Exact, GeneralizedParams};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn grid() -> impl Iterator<Item = CoreSatelliteParams> {
    (1..=5).flat_map(|c| {
        (1..=5).flat_map(move |s| (2..=6).map(move |e| CoreSatelliteParams::new(c, s, e).unwrap()))
    })
}

fn random_generalized(rng: &mut ChaCha8Rng) -> GeneralizedParams {
    loop {
        let t = rng.gen_range(2..=5);
        let mut sizes: Vec<usize> = (1..=9).collect();
        for i in (1..sizes.len()).rev() {
            sizes.swap(i, rng.gen_range(0..=i));
        }
        let classes: Vec<(usize, usize)> = sizes[..t]
            .iter()
            .map(|&s| (s, rng.gen_range(1..=4)))
            .collect();
        let p = GeneralizedParams::new(rng.gen_range(1..=6), classes).unwrap();
        if p.node_count() <= 120 {
            return p;
        }
    }
}

fn assert_close(a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!((x - y).abs() <= tol, "{a:?}\n vs\n{b:?}");
    }
}

#[test]
fn core_satellite_adjacency_matches_oracle() {
    for p in grid() {
        let g = core_satellite(&p);
        let numeric = eigenvalues_symmetric(&adjacency_matrix::<f64>(&g, 200).unwrap()).unwrap();
        let spec = adjacency_spectrum_cs::<f64>(&p);
        assert_eq!(spec.order(), g.node_count());
        assert_close(&spec.values(), &numeric, TOL);
        let (plus, minus) = extreme_eigenvalues::<f64>(&p);
        assert!(plus > (p.core_size() + p.satellite_size() - 1) as f64);
        assert!(minus < -1.0);
        assert!(spec.trace().abs() <= 1e-9);
        assert!((spec.trace_of_square() - 2.0 * g.edge_count() as f64).abs() <= 1e-9);
    }
}

#[test]
fn laplacian_matches_oracle_and_is_integral() {
    for p in grid() {
        let gp = GeneralizedParams::from(p);
        let g = core_satellite(&p);
        let numeric = eigenvalues_symmetric(&laplacian_matrix::<f64>(&g, 200).unwrap()).unwrap();
        let spec = laplacian_spectrum_gcs::<f64>(&gp);
        assert_close(&spec.values(), &numeric, TOL);
        let exact = laplacian_spectrum_gcs::<Exact>(&gp);
        assert!(exact.eigenpairs.iter().all(|e| e.value.is_integer()));
        assert_eq!(
            exact.trace(),
            Exact::from_integer(2 * g.edge_count() as i128)
        );
        // s = 1 leaves no c + s eigenvalue
        let expected_distinct = if p.satellite_size() >= 2 { 4 } else { 3 };
        assert_eq!(spec.distinct_count(), expected_distinct, "{p:?}");
        let ix = spectral_indices::<f64>(&gp);
        assert_eq!(ix.algebraic_connectivity, p.core_size() as f64);
        assert_eq!(
            ix.sync_index_exact,
            Exact::new(p.core_size() as i128, g.node_count() as i128)
        );
    }
}

#[test]
fn random_generalized_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let p = random_generalized(&mut rng);
        let g = generalized_core_satellite(&p);
        let numeric = eigenvalues_symmetric(&adjacency_matrix::<f64>(&g, 200).unwrap()).unwrap();
        let spec = adjacency_spectrum_gcs::<f64>(&p);
        assert_close(&spec.values(), &numeric, TOL);

        let rho = spec.largest().unwrap();
        let (lo, hi) = spectral_radius_bounds::<f64>(&p);
        assert!(lo < rho && rho < hi, "{p:?}");
        let repeated = p.classes().iter().filter(|c| c.count > 1).count();
        assert_eq!(
            spec.distinct_count(),
            p.class_count() + 2 + repeated,
            "{p:?}"
        );

        let roots = secular_roots::<f64>(&p);
        let gaps = roots
            .windows(2)
            .map(|w| w[0] - w[1])
            .fold(f64::INFINITY, f64::min);
        assert!(gaps > 1e-9);

        let pv = principal_eigenvector::<f64>(&p);
        assert!(pv.satellite_values.iter().all(|&b| 0.0 < b && b < 1.0));
        assert!(eigen_residual(&g, &pv.to_vector(&p), pv.eigenvalue) <= 1e-8 * pv.eigenvalue);

        let lap_numeric =
            eigenvalues_symmetric(&laplacian_matrix::<f64>(&g, 200).unwrap()).unwrap();
        assert_close(
            &laplacian_spectrum_gcs::<f64>(&p).values(),
            &lap_numeric,
            TOL,
        );
    }
}

#[test]
fn divisor_eigenvalues_are_in_the_full_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let p = random_generalized(&mut rng);
        let full = eigenvalues_symmetric(
            &adjacency_matrix::<f64>(&generalized_core_satellite(&p), 200).unwrap(),
        )
        .unwrap();
        let quotient = eigenvalues_symmetric(&divisor_matrix::<f64>(&p)).unwrap();
        for q in quotient {
            assert!(
                full.iter().any(|x| (x - q).abs() <= TOL),
                "{q} not in {full:?}"
            );
        }
    }
}

#[test]
fn spectral_radius_growth() {
    for p in grid() {
        let gp = GeneralizedParams::from(p);
        let rho = adjacency_spectrum_gcs::<f64>(&gp).largest().unwrap();
        assert!(rho >= ((p.node_count() - 1) as f64).sqrt());
        let bigger =
            CoreSatelliteParams::new(p.core_size(), p.satellite_size(), p.satellite_count() + 1)
                .unwrap();
        assert!(extreme_eigenvalues::<f64>(&bigger).0 > rho);
    }
}

#[test]
fn windmill_and_equal_size_sync_index() {
    for (s, eta) in [(2, 3), (3, 5), (4, 2)] {
        let p = GeneralizedParams::from(CoreSatelliteParams::new(1, s, eta).unwrap());
        let ix = spectral_indices::<f64>(&p);
        assert_eq!(ix.sync_index_exact, Exact::new(1, p.node_count() as i128));
    }
    // same n and c, different satellites: same Q
    let a = GeneralizedParams::new(3, [(2, 6)]).unwrap();
    let b = GeneralizedParams::new(3, [(1, 2), (4, 1), (6, 1)]).unwrap();
    assert_eq!(a.node_count(), b.node_count());
    assert_eq!(
        spectral_indices::<f64>(&a).sync_index_exact,
        spectral_indices::<f64>(&b).sync_index_exact
    );
}

proptest! {
    #[test]
    fn jacobi_preserves_trace_and_frobenius(
        n in 1usize..9,
        entries in prop::collection::vec(-5.0f64..5.0, 81),
    ) {
        let mut m = DenseSymmetricMatrix::<f64>::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, entries[i * 9 + j]);
            }
        }
        let ev = eigenvalues_symmetric(&m).unwrap();
        prop_assert!(ev.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = ev.iter().sum();
        prop_assert!((sum - m.trace()).abs() <= 1e-9);
        let sq: f64 = ev.iter().map(|x| x * x).sum();
        prop_assert!((sq.sqrt() - m.frobenius_norm()).abs() <= 1e-9);
    }

    #[test]
    fn analytic_spectrum_invariants(c in 1usize..7, classes in prop::collection::vec((1usize..8, 1usize..5), 1..5)) {
        let p = GeneralizedParams::new(c, classes).unwrap();
        let m = p.edge_count() as f64;
        let adj = adjacency_spectrum_gcs::<f64>(&p);
        prop_assert_eq!(adj.order(), p.node_count());
        prop_assert!(adj.trace().abs() <= 1e-9 * m.max(1.0));
        prop_assert!((adj.trace_of_square() - 2.0 * m).abs() <= 1e-9 * m.max(1.0));
        let lap = laplacian_spectrum_gcs::<Exact>(&p);
        prop_assert_eq!(lap.order(), p.node_count());
        prop_assert_eq!(lap.trace(), Exact::from_integer(2 * p.edge_count() as i128));
        prop_assert_eq!(lap.smallest(), Some(Exact::from_integer(0)));
        prop_assert_eq!(lap.eigenpairs.last().unwrap().multiplicity, 1);
    }
}
