//! Closed forms for `Θ(c, s, η)`.
//!
//! Several printed versions of these formulas carry slips; the versions here
//! are the ones that reproduce direct counts on the generated graphs. The
//! printed variants that are known to disagree are kept as separate
//! functions so the disagreement itself can be checked.

use super::{assortativity_from_counts, EdgeDegreeSums, MetricsReport};
use crate::graph::{binomial, CoreSatelliteParams};
use crate::scalar::Scalar;

/// Which sign to use for the shared-core term of the triangle count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TriangleFormula {
    /// `η·C(c+s, 3) − (η−1)·C(c, 3)`: core triangles are shared, so they are
    /// removed `η − 1` times.
    #[default]
    Corrected,
    /// `η·C(c+s, 3) + (η−1)·C(c, 3)`, the printed plus-sign variant. Wrong
    /// whenever `c ≥ 3` and `η ≥ 2`; only used as a negative control.
    PrintedPlusSign,
}

struct Raw {
    c: u128,
    s: u128,
    eta: u128,
    n: u128,
}

fn raw(p: &CoreSatelliteParams) -> Raw {
    Raw {
        c: p.core_size() as u128,
        s: p.satellite_size() as u128,
        eta: p.satellite_count() as u128,
        n: p.node_count() as u128,
    }
}

/// Local clustering of any core node:
/// `[η(c+s−1)(c+s−2) − (c−1)(c−2)(η−1)] / [(ηs+c−1)(ηs+c−2)]`.
/// Zero when the denominator vanishes (`n ≤ 2`).
pub fn core_clustering<T: Scalar>(p: &CoreSatelliteParams) -> T {
    let Raw { c, s, eta, n } = raw(p);
    let den = (n - 1) * n.saturating_sub(2);
    if den == 0 {
        return T::zero();
    }
    let sat = (c + s - 1) * (c + s).saturating_sub(2);
    let core = (c - 1) * c.saturating_sub(2);
    T::ratio((eta * sat - core * (eta - 1)) as i128, den as i128)
}

/// Local clustering of any satellite node: its neighborhood is a clique, so
/// this is 1 unless its degree `c+s−1` is below 2.
pub fn satellite_clustering<T: Scalar>(p: &CoreSatelliteParams) -> T {
    if p.core_size() + p.satellite_size() >= 3 {
        T::one()
    } else {
        T::zero()
    }
}

/// `(c·C_core + ηs·C_sat) / n`.
pub fn avg_clustering<T: Scalar>(p: &CoreSatelliteParams) -> T {
    let Raw { c, s, eta, n } = raw(p);
    (T::from_count(c) * core_clustering::<T>(p)
        + T::from_count(eta * s) * satellite_clustering::<T>(p))
        / T::from_count(n)
}

/// Equivalent single-fraction form `1 − cηs²(η−1) / (n(n−1)(n−2))`. Valid
/// when satellite nodes have degree at least 2 (`c + s ≥ 3`).
pub fn avg_clustering_single_fraction<T: Scalar>(p: &CoreSatelliteParams) -> T {
    let Raw { c, s, eta, n } = raw(p);
    T::one()
        - T::ratio(
            (c * eta * s * s * (eta - 1)) as i128,
            (n * (n - 1) * (n - 2)) as i128,
        )
}

/// The printed `1 − c s² η² / (n(n−1)(n−2))`. Disagrees with
/// [`avg_clustering`] (e.g. 11/15 instead of 13/15 for the butterfly).
pub fn avg_clustering_printed<T: Scalar>(p: &CoreSatelliteParams) -> T {
    let Raw { c, s, eta, n } = raw(p);
    T::one()
        - T::ratio(
            (c * s * s * eta * eta) as i128,
            (n * (n - 1) * (n - 2)) as i128,
        )
}

pub fn triangles(p: &CoreSatelliteParams, formula: TriangleFormula) -> u128 {
    let Raw { c, s, eta, .. } = raw(p);
    let per_satellite = eta * binomial(c + s, 3);
    let shared = (eta - 1) * binomial(c, 3);
    match formula {
        TriangleFormula::Corrected => per_satellite - shared,
        TriangleFormula::PrintedPlusSign => per_satellite + shared,
    }
}

/// `c·C(n−1, 2) + ηs·C(c+s−1, 2)`.
pub fn two_paths(p: &CoreSatelliteParams) -> u128 {
    let Raw { c, s, eta, n } = raw(p);
    c * binomial(n - 1, 2) + eta * s * binomial(c + s - 1, 2)
}

/// `c·C(n−1, 3) + ηs·C(c+s−1, 3)`.
pub fn stars(p: &CoreSatelliteParams) -> u128 {
    let Raw { c, s, eta, n } = raw(p);
    c * binomial(n - 1, 3) + eta * s * binomial(c + s - 1, 3)
}

/// Edge counts grouped by endpoint degrees: core–core, core–satellite and
/// satellite–satellite edges.
fn edge_classes(p: &CoreSatelliteParams) -> EdgeDegreeSums {
    let Raw { c, s, eta, n } = raw(p);
    let (k_core, k_sat) = (n - 1, c + s - 1);
    let mut sums = EdgeDegreeSums::default();
    sums.add(k_core, k_core, binomial(c, 2));
    sums.add(k_core, k_sat, c * eta * s);
    sums.add(k_sat, k_sat, eta * binomial(s, 2));
    sums
}

/// Simple 3-paths: `Σ_E (k_u−1)(k_v−1) − 3t` evaluated per edge class.
pub fn three_paths(p: &CoreSatelliteParams) -> u128 {
    let Raw { c, s, eta, n } = raw(p);
    let (k_core, k_sat) = (n - 1, c + s - 1);
    let extended = binomial(c, 2) * (k_core - 1) * (k_core - 1)
        + c * eta * s * (k_core - 1) * (k_sat - 1)
        + eta * binomial(s, 2) * (k_sat - 1) * (k_sat - 1);
    extended - 3 * triangles(p, TriangleFormula::Corrected)
}

/// Transitivity in the printed single-fraction form
/// `[η(c+s)(c+s−1)(c+s−2) − c(η−1)(c−1)(c−2)] / [ηs(c+s−1)(c+s−2) + c(c+ηs−1)(c+ηs−2)]`,
/// zero when the denominator vanishes.
pub fn transitivity_single_fraction<T: Scalar>(p: &CoreSatelliteParams) -> T {
    let Raw { c, s, eta, n } = raw(p);
    let falling = |x: u128| x * x.saturating_sub(1) * x.saturating_sub(2);
    let num = eta * falling(c + s) - (eta - 1) * falling(c);
    let den = eta * s * (c + s - 1) * (c + s).saturating_sub(2) + c * (n - 1) * n.saturating_sub(2);
    if den == 0 {
        T::zero()
    } else {
        T::ratio(num as i128, den as i128)
    }
}

/// Every [`MetricsReport`] field from closed forms, using the given triangle
/// formula for `t` (and everything derived from it).
pub fn analytic_metrics_with<T: Scalar>(
    p: &CoreSatelliteParams,
    formula: TriangleFormula,
) -> MetricsReport<T> {
    let m = p.edge_count();
    let t = triangles(p, formula);
    let p2 = two_paths(p);
    let p3 = three_paths(p);
    let s13 = stars(p);
    let transitivity = if p2 == 0 {
        T::zero()
    } else {
        T::from_count(3 * t) / T::from_count(p2)
    };
    MetricsReport {
        n: p.node_count() as u128,
        m,
        triangles: t,
        p1: m,
        p2,
        p3,
        s13,
        avg_clustering: avg_clustering(p),
        transitivity,
        assortativity: edge_classes(p).pearson(),
        assortativity_estrada: assortativity_from_counts(m, p2, p3, s13, t),
    }
}

pub fn analytic_metrics<T: Scalar>(p: &CoreSatelliteParams) -> MetricsReport<T> {
    analytic_metrics_with(p, TriangleFormula::Corrected)
}
