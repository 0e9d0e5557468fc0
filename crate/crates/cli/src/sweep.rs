use std::io::Write;

use coresat::graph::generalized_core_satellite;
use coresat::metrics::metrics_report;
use coresat::{GeneralizedParams, Metrics};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::SweepArgs;
use crate::error::CliResult;
use crate::output::{sig12, write_to};
use crate::Context;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub c: usize,
    pub p: usize,
    pub n: usize,
    pub m: u128,
    pub avg_clustering: f64,
    pub transitivity: f64,
    /// Empty field when undefined.
    pub assortativity: Option<f64>,
}

/// One row per (core, p), cores in the given order and p ascending. Every
/// satellite size gets `p` copies.
pub fn sweep_rows(cores: &[usize], sizes: &[usize], pmax: usize) -> coresat::Result<Vec<SweepRow>> {
    let jobs: Vec<(usize, usize)> = cores
        .iter()
        .flat_map(|&c| (1..=pmax).map(move |p| (c, p)))
        .collect();
    jobs.into_par_iter()
        .map(|(c, p)| {
            let params = GeneralizedParams::new(c, sizes.iter().map(|&s| (s, p)))?;
            let r: Metrics = metrics_report(&generalized_core_satellite(&params));
            Ok(SweepRow {
                c,
                p,
                n: params.node_count(),
                m: r.m,
                avg_clustering: sig12(r.avg_clustering),
                transitivity: sig12(r.transitivity),
                assortativity: r.assortativity.map(sig12),
            })
        })
        .collect()
}

pub fn write_rows(rows: &[SweepRow], out: &mut dyn Write) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn sweep(ctx: &mut Context, args: &SweepArgs) -> CliResult<i32> {
    let pmax = usize::try_from(args.pmax).unwrap_or(usize::MAX);
    let rows = sweep_rows(&args.cores, &args.sizes, pmax)?;
    let out_path = ctx.out.clone();
    write_to(out_path.as_deref(), ctx.stdout, |w| write_rows(&rows, w))?;
    Ok(0)
}
