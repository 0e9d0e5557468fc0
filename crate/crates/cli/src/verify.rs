use coresat::graph::{core_satellite, diameter, generalized_core_satellite};
use coresat::metrics::closed_form::{
    analytic_metrics, analytic_metrics_with, avg_clustering_printed, stars, three_paths, triangles,
    two_paths,
};
use coresat::metrics::{
    assortativity, assortativity_estrada, average_clustering, path_counts, star_count,
    transitivity, triangle_count,
};
use coresat::oracle::{
    adjacency_matrix, eigenvalues_symmetric, exhaustive_subgraph_counts, laplacian_matrix,
    triangles_by_trace,
};
use coresat::spectra::{
    adjacency_spectrum_gcs, eigen_residual, extreme_eigenvalues, laplacian_spectrum_gcs,
    principal_eigenvector, spectral_indices, spectral_radius_bounds,
};
use coresat::{CoreSatelliteParams, Exact, GeneralizedParams, Graph, TriangleFormula};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::VerifyArgs;
use crate::error::CliResult;
use crate::Context;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// c, s in 1..=5 and η in 2..=6.
pub fn parameter_grid() -> Vec<CoreSatelliteParams> {
    let mut grid = Vec::with_capacity(125);
    for c in 1..=5 {
        for s in 1..=5 {
            for eta in 2..=6 {
                grid.push(CoreSatelliteParams::new(c, s, eta).expect("grid parameters are valid"));
            }
        }
    }
    grid
}

/// Random generalized parameters with 2 to 5 distinct satellite sizes and at
/// most `max_nodes` nodes.
pub fn random_generalized(seed: u64, count: usize, max_nodes: usize) -> Vec<GeneralizedParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = rng.gen_range(2..=5);
        let mut sizes: Vec<usize> = (1..=12).collect();
        for i in (1..sizes.len()).rev() {
            sizes.swap(i, rng.gen_range(0..=i));
        }
        let core = rng.gen_range(1..=8);
        let classes: Vec<(usize, usize)> = sizes[..t]
            .iter()
            .map(|&s| (s, rng.gen_range(1..=5)))
            .collect();
        let p = GeneralizedParams::new(core, classes).expect("sampled parameters are valid");
        if p.node_count() <= max_nodes {
            out.push(p);
        }
    }
    out
}

struct Tally {
    name: &'static str,
    checked: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> Check {
        let mut detail = format!("{} checked", self.checked);
        if self.skipped > 0 {
            detail.push_str(&format!(", {} skipped", self.skipped));
        }
        if let Some(first) = self.failures.first() {
            detail.push_str(&format!(", {} failed, first: {first}", self.failures.len()));
        }
        Check {
            name: self.name,
            passed: self.failures.is_empty() && self.checked > 0,
            detail,
        }
    }
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn label(p: &CoreSatelliteParams) -> String {
    format!(
        "Θ({},{},{})",
        p.core_size(),
        p.satellite_size(),
        p.satellite_count()
    )
}

fn glabel(p: &GeneralizedParams) -> String {
    let sizes: Vec<String> = p.classes().iter().map(|c| c.size.to_string()).collect();
    let counts: Vec<String> = p.classes().iter().map(|c| c.count.to_string()).collect();
    format!(
        "Θ({},({}),({}))",
        p.core_size(),
        sizes.join(","),
        counts.join(",")
    )
}

pub struct VerifyConfig {
    pub tol: f64,
    pub dense_limit: usize,
    pub max_n: usize,
    pub seed: u64,
    pub formula: TriangleFormula,
}

pub fn run_checks(cfg: &VerifyConfig) -> Vec<Check> {
    let grid = parameter_grid();
    let graphs: Vec<Graph> = grid.iter().map(core_satellite).collect();
    let random = random_generalized(cfg.seed, 20, 200);
    let mut checks = Vec::new();

    let mut t = Tally::new("graph structure");
    for (p, g) in grid.iter().zip(&graphs) {
        let c = p.core_size();
        let n = g.node_count();
        let degrees = g.degrees();
        let ok = n == p.node_count()
            && g.edge_count() as u128 == p.edge_count()
            && degrees[..c].iter().all(|&d| d == n - 1)
            && degrees[c..]
                .iter()
                .all(|&d| d == c + p.satellite_size() - 1)
            && diameter(g) == Some(2);
        t.record(ok, || label(p));
    }
    checks.push(t.finish());

    let mut t = Tally::new("triangle count closed form");
    for (p, g) in grid.iter().zip(&graphs) {
        let expected = triangles(p, cfg.formula);
        let mut ok = expected == triangle_count(g);
        if let Ok(by_trace) = triangles_by_trace(g, cfg.dense_limit) {
            ok &= by_trace == expected;
        }
        t.record(ok, || {
            format!(
                "{}: formula {expected}, graph {}",
                label(p),
                triangle_count(g)
            )
        });
    }
    checks.push(t.finish());

    let mut t = Tally::new("path and star counts");
    for (p, g) in grid.iter().zip(&graphs) {
        let paths = path_counts(g);
        let ok =
            two_paths(p) == paths.p2 && three_paths(p) == paths.p3 && stars(p) == star_count(g);
        t.record(ok, || label(p));
    }
    checks.push(t.finish());

    let mut t = Tally::new("clustering closed forms");
    for (p, g) in grid.iter().zip(&graphs) {
        let a = analytic_metrics_with::<Exact>(p, cfg.formula);
        let ok = a.avg_clustering == average_clustering::<Exact>(g)
            && a.transitivity == transitivity::<Exact>(g);
        t.record(ok, || label(p));
    }
    checks.push(t.finish());

    // the printed average-clustering form is a known erratum: it must disagree
    let mut t = Tally::new("printed clustering erratum detected");
    let butterfly = CoreSatelliteParams::new(1, 2, 2).expect("valid");
    let printed = avg_clustering_printed::<Exact>(&butterfly);
    let direct = average_clustering::<Exact>(&core_satellite(&butterfly));
    t.record(
        printed == Exact::new(11, 15) && direct == Exact::new(13, 15),
        || format!("printed {printed}, direct {direct}"),
    );
    checks.push(t.finish());

    let mut t = Tally::new("subgraph enumeration oracle");
    for (p, g) in grid.iter().zip(&graphs) {
        match exhaustive_subgraph_counts(g, cfg.max_n) {
            Ok(o) => {
                let paths = path_counts(g);
                let ok = o.triangles == triangle_count(g)
                    && o.p2 == paths.p2
                    && o.p3 == paths.p3
                    && o.s13 == star_count(g);
                t.record(ok, || label(p));
            }
            Err(coresat::Error::EnumerationLimitExceeded { .. }) => t.skipped += 1,
            Err(e) => t.record(false, || format!("{}: {e}", label(p))),
        }
    }
    checks.push(t.finish());

    let mut t = Tally::new("disassortativity");
    for (p, g) in grid.iter().zip(&graphs) {
        let newman = assortativity::<Exact>(g);
        let ok = newman.is_some_and(|r| r < Exact::from_integer(0))
            && newman == assortativity_estrada::<Exact>(g)
            && analytic_metrics::<Exact>(p).assortativity == newman;
        t.record(ok, || format!("{}: r = {newman:?}", label(p)));
    }
    checks.push(t.finish());

    checks.push(divergence_check());

    let mut t = Tally::new("adjacency spectra vs oracle");
    for (p, g) in grid.iter().zip(&graphs) {
        let gp = GeneralizedParams::from(*p);
        let spec = adjacency_spectrum_gcs::<f64>(&gp);
        let (plus, minus) = extreme_eigenvalues::<f64>(p);
        let m = g.edge_count() as f64;
        let mut ok = spec.order() == g.node_count()
            && plus > (p.core_size() + p.satellite_size() - 1) as f64
            && minus < -1.0
            && spec.trace().abs() <= cfg.tol * m
            && (spec.trace_of_square() - 2.0 * m).abs() <= cfg.tol * m;
        match adjacency_matrix::<f64>(g, cfg.dense_limit).and_then(|a| eigenvalues_symmetric(&a)) {
            Ok(numeric) => ok &= close(&spec.values(), &numeric, cfg.tol),
            Err(coresat::Error::DenseLimitExceeded { .. }) => t.skipped += 1,
            Err(_) => ok = false,
        }
        t.record(ok, || label(p));
    }
    checks.push(t.finish());

    let mut t = Tally::new("generalized spectra vs oracle");
    let mut bounds = Tally::new("spectral radius bounds");
    let mut vector = Tally::new("principal eigenvector");
    for p in &random {
        let g = generalized_core_satellite(p);
        let spec = adjacency_spectrum_gcs::<f64>(p);
        let repeated = p.classes().iter().filter(|c| c.count > 1).count();
        let mut ok = spec.order() == p.node_count()
            && spec.distinct_count() == p.class_count() + 2 + repeated;
        match adjacency_matrix::<f64>(&g, cfg.dense_limit).and_then(|a| eigenvalues_symmetric(&a)) {
            Ok(numeric) => ok &= close(&spec.values(), &numeric, cfg.tol),
            Err(coresat::Error::DenseLimitExceeded { .. }) => t.skipped += 1,
            Err(_) => ok = false,
        }
        t.record(ok, || glabel(p));

        let rho = spec.largest().unwrap_or(f64::NAN);
        let (lo, hi) = spectral_radius_bounds::<f64>(p);
        bounds.record(lo < rho && rho < hi, || {
            format!("{}: {lo} < {rho} < {hi}", glabel(p))
        });

        let v = principal_eigenvector::<f64>(p);
        let residual = eigen_residual(&g, &v.to_vector(p), v.eigenvalue);
        let ok = v.satellite_values.iter().all(|&b| 0.0 < b && b < 1.0)
            && residual <= 1e-8 * v.eigenvalue;
        vector.record(ok, || format!("{}: residual {residual:e}", glabel(p)));
    }
    checks.push(t.finish());
    checks.push(bounds.finish());
    checks.push(vector.finish());

    let mut t = Tally::new("laplacian spectra");
    let laplacian_cases = grid
        .iter()
        .map(|&p| (GeneralizedParams::from(p), Some(p)))
        .chain(random.iter().map(|p| (p.clone(), None)));
    for (p, single) in laplacian_cases {
        let exact = laplacian_spectrum_gcs::<Exact>(&p);
        let ix = spectral_indices::<f64>(&p);
        let c = p.core_size();
        let mut ok = exact.eigenpairs.iter().all(|e| e.value.is_integer())
            && exact.order() == p.node_count()
            && ix.algebraic_connectivity == c as f64
            && ix.sync_index_exact == Exact::new(c as i128, p.node_count() as i128);
        if let Some(cs) = single {
            // s = 1 has no c + s eigenvalue
            let distinct = if cs.satellite_size() >= 2 { 4 } else { 3 };
            ok &= exact.distinct_count() == distinct;
        }
        let g = generalized_core_satellite(&p);
        match laplacian_matrix::<f64>(&g, cfg.dense_limit).and_then(|l| eigenvalues_symmetric(&l)) {
            Ok(numeric) => {
                ok &= close(
                    &laplacian_spectrum_gcs::<f64>(&p).values(),
                    &numeric,
                    cfg.tol,
                )
            }
            Err(coresat::Error::DenseLimitExceeded { .. }) => t.skipped += 1,
            Err(_) => ok = false,
        }
        t.record(ok, || glabel(&p));
    }
    checks.push(t.finish());

    checks
}

/// Transitivity falls strictly with η; average clustering first dips (or
/// stalls) and then rises strictly, approaching 1.
fn divergence_check() -> Check {
    let mut t = Tally::new("clustering divergence");
    for c in 1..=5 {
        for s in 1..=5 {
            if c + s < 3 {
                continue;
            }
            let reports: Vec<_> = (2..=1000)
                .map(|eta| {
                    analytic_metrics::<Exact>(&CoreSatelliteParams::new(c, s, eta).expect("valid"))
                })
                .collect();
            let trans_down = reports
                .windows(2)
                .all(|w| w[1].transitivity < w[0].transitivity);
            let avg: Vec<Exact> = reports.iter().map(|r| r.avg_clustering).collect();
            let shape = match avg.windows(2).position(|w| w[1] > w[0]) {
                Some(turn) => {
                    avg[..=turn].windows(2).all(|w| w[1] <= w[0])
                        && avg[turn..].windows(2).all(|w| w[1] > w[0])
                }
                None => false,
            };
            let last = reports.last().expect("non-empty");
            let limits = coresat::Scalar::to_f64(last.avg_clustering) > 0.99
                && coresat::Scalar::to_f64(last.transitivity) < 0.05;
            t.record(trans_down && shape && limits, || format!("c={c} s={s}"));
        }
    }
    t.finish()
}

pub fn verify(ctx: &mut Context, args: &VerifyArgs) -> CliResult<i32> {
    let cfg = VerifyConfig {
        tol: ctx.tol,
        dense_limit: ctx.dense_limit,
        max_n: args.max_n,
        seed: args.seed,
        formula: if args.inject_triangle_sign_fault {
            TriangleFormula::PrintedPlusSign
        } else {
            TriangleFormula::Corrected
        },
    };
    let checks = run_checks(&cfg);
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let out = &mut *ctx.stdout;
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {:width$}  {}", c.name, c.detail)?;
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {failed} failed", checks.len())?;
    Ok(if failed == 0 { 0 } else { 1 })
}
