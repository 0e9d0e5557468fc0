use coresat::graph::generalized_core_satellite;
use coresat::io::{write_dot, write_edge_list, write_matrix_market};
use coresat::metrics::closed_form::analytic_metrics;
use coresat::metrics::metrics_report;
use coresat::oracle::{adjacency_matrix, eigenvalues_symmetric, laplacian_matrix};
use coresat::spectra::{
    adjacency_spectrum_gcs, laplacian_spectrum_gcs, principal_eigenvector, spectral_indices,
    spectral_radius_bounds, SpectrumResult,
};
use coresat::{GeneralizedParams, Graph, MatrixKind, Metrics};
use serde::Serialize;

use crate::args::{Format, GenerateArgs, GraphArgs, Method, SpectrumArgs};
use crate::error::CliResult;
use crate::output::{json_line, sig12, write_to};
use crate::Context;

/// Absolute tolerance for analytic-versus-direct metric agreement.
pub const METRICS_AGREEMENT_TOL: f64 = 1e-12;

pub fn generate(ctx: &mut Context, args: &GenerateArgs) -> CliResult<i32> {
    let params = args.graph.params()?;
    let g = generalized_core_satellite(&params);
    let out_path = ctx.out.clone();
    write_to(out_path.as_deref(), ctx.stdout, |w| {
        match args.format {
            Format::Edgelist => write_edge_list(&g, w)?,
            Format::Mtx => write_matrix_market(&g, w)?,
            Format::Dot => write_dot(&g, w)?,
        }
        Ok(())
    })?;
    if out_path.is_some() {
        writeln!(ctx.stdout, "nodes {}", g.node_count())?;
        writeln!(ctx.stdout, "edges {}", g.edge_count())?;
    }
    Ok(0)
}

#[derive(Debug, Serialize)]
struct ParamsJson {
    core: usize,
    satellites: Vec<ClassJson>,
}

#[derive(Debug, Serialize)]
struct ClassJson {
    size: usize,
    count: usize,
}

impl From<&GeneralizedParams> for ParamsJson {
    fn from(p: &GeneralizedParams) -> Self {
        ParamsJson {
            core: p.core_size(),
            satellites: p
                .classes()
                .iter()
                .map(|c| ClassJson {
                    size: c.size,
                    count: c.count,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct MetricsJson {
    n: u128,
    m: u128,
    triangles: u128,
    p1: u128,
    p2: u128,
    p3: u128,
    s13: u128,
    avg_clustering: f64,
    transitivity: f64,
    assortativity: Option<f64>,
    assortativity_estrada: Option<f64>,
}

impl From<&Metrics> for MetricsJson {
    fn from(r: &Metrics) -> Self {
        MetricsJson {
            n: r.n,
            m: r.m,
            triangles: r.triangles,
            p1: r.p1,
            p2: r.p2,
            p3: r.p3,
            s13: r.s13,
            avg_clustering: sig12(r.avg_clustering),
            transitivity: sig12(r.transitivity),
            assortativity: r.assortativity.map(sig12),
            assortativity_estrada: r.assortativity_estrada.map(sig12),
        }
    }
}

#[derive(Debug, Serialize)]
struct MetricsOutput {
    params: ParamsJson,
    #[serde(flatten)]
    direct: MetricsJson,
    analytic: Option<MetricsJson>,
    agreement: bool,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= METRICS_AGREEMENT_TOL
}

fn close_opt(a: Option<f64>, b: Option<f64>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => close(a, b),
        (None, None) => true,
        _ => false,
    }
}

pub fn reports_agree(a: &Metrics, b: &Metrics) -> bool {
    (a.n, a.m, a.triangles, a.p1, a.p2, a.p3, a.s13)
        == (b.n, b.m, b.triangles, b.p1, b.p2, b.p3, b.s13)
        && close(a.avg_clustering, b.avg_clustering)
        && close(a.transitivity, b.transitivity)
        && close_opt(a.assortativity, b.assortativity)
        && close_opt(a.assortativity_estrada, b.assortativity_estrada)
}

pub fn metrics(ctx: &mut Context, args: &GraphArgs) -> CliResult<i32> {
    let params = args.params()?;
    let direct: Metrics = metrics_report(&generalized_core_satellite(&params));
    // closed forms cover the single-class family only
    let analytic: Option<Metrics> = params.as_core_satellite().map(|p| analytic_metrics(&p));
    let agreement = analytic.as_ref().is_none_or(|a| reports_agree(a, &direct));
    let report = MetricsOutput {
        params: (&params).into(),
        direct: (&direct).into(),
        analytic: analytic.as_ref().map(Into::into),
        agreement,
    };
    let out_path = ctx.out.clone();
    write_to(out_path.as_deref(), ctx.stdout, |w| json_line(&report, w))?;
    if !agreement {
        writeln!(ctx.stderr, "analytic and direct metrics disagree")?;
        return Ok(1);
    }
    Ok(0)
}

#[derive(Debug, Serialize)]
struct EigenpairJson {
    value: f64,
    multiplicity: usize,
}

fn pairs(s: &SpectrumResult<f64>) -> Vec<EigenpairJson> {
    s.eigenpairs
        .iter()
        .map(|p| EigenpairJson {
            value: sig12(p.value),
            multiplicity: p.multiplicity,
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct MatrixSpectraJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    analytic: Option<Vec<EigenpairJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<Vec<EigenpairJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_abs_deviation: Option<f64>,
}

#[derive(Debug, Serialize)]
struct SatelliteValueJson {
    size: usize,
    value: f64,
}

#[derive(Debug, Serialize)]
struct EigenvectorJson {
    core: f64,
    satellites: Vec<SatelliteValueJson>,
}

#[derive(Debug, Serialize)]
struct SpectrumOutput {
    params: ParamsJson,
    n: usize,
    method: &'static str,
    degenerate: bool,
    adjacency: MatrixSpectraJson,
    laplacian: MatrixSpectraJson,
    spectral_radius: f64,
    spectral_radius_bounds: [f64; 2],
    infection_threshold: f64,
    sync_index: f64,
    sync_index_exact: Option<String>,
    algebraic_connectivity: f64,
    principal_eigenvector: Option<EigenvectorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_abs_deviation: Option<f64>,
}

struct Numeric {
    /// Grouped with the user tolerance, for display.
    grouped: SpectrumResult<f64>,
    /// Grouped only on exact ties, for deviation measurements.
    raw: SpectrumResult<f64>,
}

fn numeric_spectrum(g: &Graph, kind: MatrixKind, tol: f64, limit: usize) -> CliResult<Numeric> {
    let mat = match kind {
        MatrixKind::Adjacency => adjacency_matrix::<f64>(g, limit)?,
        MatrixKind::Laplacian => laplacian_matrix::<f64>(g, limit)?,
    };
    let values = eigenvalues_symmetric(&mat)?;
    Ok(Numeric {
        grouped: SpectrumResult::from_numeric(&values, tol, kind),
        raw: SpectrumResult::from_numeric(&values, 0.0, kind),
    })
}

pub fn spectrum(ctx: &mut Context, args: &SpectrumArgs) -> CliResult<i32> {
    let params = args.graph.params()?;
    let want_analytic = args.method != Method::Numeric;
    let want_numeric = args.method != Method::Analytic;

    let analytic_adj = want_analytic.then(|| adjacency_spectrum_gcs::<f64>(&params));
    let analytic_lap = want_analytic.then(|| laplacian_spectrum_gcs::<f64>(&params));
    let (numeric_adj, numeric_lap) = if want_numeric {
        let g = generalized_core_satellite(&params);
        (
            Some(numeric_spectrum(
                &g,
                MatrixKind::Adjacency,
                ctx.tol,
                ctx.dense_limit,
            )?),
            Some(numeric_spectrum(
                &g,
                MatrixKind::Laplacian,
                ctx.tol,
                ctx.dense_limit,
            )?),
        )
    } else {
        (None, None)
    };

    let deviation = |a: &Option<SpectrumResult<f64>>, n: &Option<Numeric>| match (a, n) {
        (Some(a), Some(n)) => a.max_abs_deviation(&n.raw),
        _ => None,
    };
    let adj_dev = deviation(&analytic_adj, &numeric_adj);
    let lap_dev = deviation(&analytic_lap, &numeric_lap);
    let max_dev = match (adj_dev, lap_dev) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    };

    let (lo, hi) = spectral_radius_bounds::<f64>(&params);
    let n = params.node_count();
    let (rho, sync, sync_exact, alg_conn) = if want_analytic {
        let ix = spectral_indices::<f64>(&params);
        (
            ix.spectral_radius,
            ix.sync_index,
            Some(ix.sync_index_exact.to_string()),
            ix.algebraic_connectivity,
        )
    } else {
        let adj = numeric_adj
            .as_ref()
            .expect("numeric spectrum computed")
            .raw
            .values();
        let lap = numeric_lap
            .as_ref()
            .expect("numeric spectrum computed")
            .raw
            .values();
        let second_smallest = if n >= 2 { lap[n - 2] } else { 0.0 };
        (adj[0], second_smallest / lap[0], None, second_smallest)
    };
    let principal = want_analytic.then(|| {
        let v = principal_eigenvector::<f64>(&params);
        EigenvectorJson {
            core: sig12(v.core_value),
            satellites: params
                .classes()
                .iter()
                .zip(&v.satellite_values)
                .map(|(c, &value)| SatelliteValueJson {
                    size: c.size,
                    value: sig12(value),
                })
                .collect(),
        }
    });

    let report = SpectrumOutput {
        params: (&params).into(),
        n,
        method: match args.method {
            Method::Analytic => "analytic",
            Method::Numeric => "numeric",
            Method::Both => "both",
        },
        degenerate: analytic_adj
            .as_ref()
            .map_or(params.is_degenerate(), |s| s.degenerate),
        adjacency: MatrixSpectraJson {
            analytic: analytic_adj.as_ref().map(pairs),
            numeric: numeric_adj.as_ref().map(|s| pairs(&s.grouped)),
            max_abs_deviation: adj_dev.map(sig12),
        },
        laplacian: MatrixSpectraJson {
            analytic: analytic_lap.as_ref().map(pairs),
            numeric: numeric_lap.as_ref().map(|s| pairs(&s.grouped)),
            max_abs_deviation: lap_dev.map(sig12),
        },
        spectral_radius: sig12(rho),
        spectral_radius_bounds: [sig12(lo), sig12(hi)],
        infection_threshold: sig12(1.0 / rho),
        sync_index: sig12(sync),
        sync_index_exact: sync_exact,
        algebraic_connectivity: sig12(alg_conn),
        principal_eigenvector: principal,
        max_abs_deviation: max_dev.map(sig12),
    };
    let out_path = ctx.out.clone();
    write_to(out_path.as_deref(), ctx.stdout, |w| json_line(&report, w))?;
    match max_dev {
        Some(d) if d.is_nan() || d > ctx.tol => {
            writeln!(
                ctx.stderr,
                "analytic and numeric spectra differ by {d:e} (tolerance {:e})",
                ctx.tol
            )?;
            Ok(1)
        }
        _ => Ok(0),
    }
}
