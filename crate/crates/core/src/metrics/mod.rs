//! Clustering, transitivity, assortativity and small-subgraph counts.
//!
//! Everything in this module works on an arbitrary [`Graph`]. Counts are exact
//! integers; ratios are formed in the caller's [`Scalar`] at the very end, so
//! evaluating with [`crate::Exact`] gives exact rationals.

pub mod closed_form;

use crate::error::Result;
use crate::graph::{binomial, Graph};
use crate::scalar::Scalar;

/// Summary of the clustering/assortativity quantities of a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport<T> {
    pub n: u128,
    pub m: u128,
    pub triangles: u128,
    /// Number of edges, kept separately as the 1-path count.
    pub p1: u128,
    pub p2: u128,
    pub p3: u128,
    pub s13: u128,
    pub avg_clustering: T,
    pub transitivity: T,
    /// `None` when the degree variance over edges vanishes.
    pub assortativity: Option<T>,
    pub assortativity_estrada: Option<T>,
}

impl<T: Scalar> MetricsReport<T> {
    pub fn to_f64(&self) -> MetricsReport<f64> {
        MetricsReport {
            n: self.n,
            m: self.m,
            triangles: self.triangles,
            p1: self.p1,
            p2: self.p2,
            p3: self.p3,
            s13: self.s13,
            avg_clustering: self.avg_clustering.to_f64(),
            transitivity: self.transitivity.to_f64(),
            assortativity: self.assortativity.map(Scalar::to_f64),
            assortativity_estrada: self.assortativity_estrada.map(Scalar::to_f64),
        }
    }
}

/// Triangles through each node.
pub fn node_triangles(g: &Graph) -> Vec<u128> {
    let mut per_node = vec![0u128; g.node_count()];
    for_each_triangle(g, |a, b, c| {
        per_node[a] += 1;
        per_node[b] += 1;
        per_node[c] += 1;
    });
    per_node
}

// Visits each triangle once as (u, v, w) with u < v < w, by merging the
// sorted neighbor lists of every edge (u, v).
fn for_each_triangle(g: &Graph, mut visit: impl FnMut(usize, usize, usize)) {
    for &(u, v) in g.edges() {
        let (nu, nv) = (g.neighbors(u), g.neighbors(v));
        let start_u = nu.partition_point(|&w| w <= v);
        let start_v = nv.partition_point(|&w| w <= v);
        let (mut i, mut j) = (start_u, start_v);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    visit(u, v, nu[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

pub fn triangle_count(g: &Graph) -> u128 {
    let mut count = 0;
    for_each_triangle(g, |_, _, _| count += 1);
    count
}

fn clustering_ratio<T: Scalar>(triangles: u128, degree: usize) -> T {
    if degree < 2 {
        return T::zero();
    }
    T::from_count(triangles) / T::from_count(binomial(degree as u128, 2))
}

/// `2 t_u / (k_u (k_u − 1))`, or zero when `k_u ≤ 1`.
pub fn local_clustering<T: Scalar>(g: &Graph, u: usize) -> Result<T> {
    g.check_node(u)?;
    let nu = g.neighbors(u);
    // each triangle through u is seen from both of its other corners
    let twice: usize = nu
        .iter()
        .map(|&v| sorted_intersection_len(nu, g.neighbors(v)))
        .sum();
    Ok(clustering_ratio(twice as u128 / 2, nu.len()))
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Mean local clustering over all nodes; zero for the null graph.
pub fn average_clustering<T: Scalar>(g: &Graph) -> T {
    let n = g.node_count();
    if n == 0 {
        return T::zero();
    }
    let sum = node_triangles(g)
        .into_iter()
        .enumerate()
        .fold(T::zero(), |acc, (u, t)| {
            acc + clustering_ratio::<T>(t, g.degree(u))
        });
    sum / T::from_count(n as u128)
}

/// `Σ_u C(k_u, 2)`, the number of 2-paths.
pub fn two_path_count(g: &Graph) -> u128 {
    (0..g.node_count())
        .map(|u| binomial(g.degree(u) as u128, 2))
        .sum()
}

/// `3t / P₂`, zero when there are no 2-paths.
pub fn transitivity<T: Scalar>(g: &Graph) -> T {
    ratio_or_zero(3 * triangle_count(g), two_path_count(g))
}

fn ratio_or_zero<T: Scalar>(num: u128, den: u128) -> T {
    if den == 0 {
        T::zero()
    } else {
        T::from_count(num) / T::from_count(den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathCounts {
    pub p2: u128,
    /// Simple paths on four distinct nodes.
    pub p3: u128,
}

/// `P₃ = Σ_{(u,v)∈E} (k_u − 1)(k_v − 1) − 3t`: every edge extended on both
/// sides, minus the closed extensions that are triangles.
pub fn path_counts(g: &Graph) -> PathCounts {
    let extended: u128 = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) as u128 - 1) * (g.degree(v) as u128 - 1))
        .sum();
    PathCounts {
        p2: two_path_count(g),
        p3: extended - 3 * triangle_count(g),
    }
}

/// Number of `S_{1,3}` stars: `Σ_u C(k_u, 3)`.
pub fn star_count(g: &Graph) -> u128 {
    (0..g.node_count())
        .map(|u| binomial(g.degree(u) as u128, 3))
        .sum()
}

/// Edge-degree sums `(Σ k_u k_v, Σ (k_u + k_v), Σ (k_u² + k_v²))` over edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct EdgeDegreeSums {
    pub m: u128,
    pub product: u128,
    pub sum: u128,
    pub square_sum: u128,
}

impl EdgeDegreeSums {
    /// Adds `count` edges whose endpoint degrees are `a` and `b`.
    pub fn add(&mut self, a: u128, b: u128, count: u128) {
        self.m += count;
        self.product += count * a * b;
        self.sum += count * (a + b);
        self.square_sum += count * (a * a + b * b);
    }

    /// Newman's degree correlation. Both numerator and denominator are scaled
    /// by `4m²` so they stay integral: `(4m·Σkk − (Σk)²) / (2m·Σk² − (Σk)²)`.
    pub fn pearson<T: Scalar>(&self) -> Option<T> {
        if self.m == 0 {
            return None;
        }
        let (m, s1, s2, s3) = (
            self.m as i128,
            self.product as i128,
            self.sum as i128,
            self.square_sum as i128,
        );
        let exact = || -> Option<(i128, i128)> {
            let sq = s2.checked_mul(s2)?;
            let num = m.checked_mul(4)?.checked_mul(s1)?.checked_sub(sq)?;
            let den = m.checked_mul(2)?.checked_mul(s3)?.checked_sub(sq)?;
            Some((num, den))
        };
        match exact() {
            Some((_, 0)) => None,
            Some((num, den)) => Some(T::ratio(num, den)),
            None => {
                // overflow fallback, only reachable for very large graphs
                let mean = T::from_int(s2) / T::from_int(2 * m);
                let num = T::from_int(s1) / T::from_int(m) - mean * mean;
                let den = T::from_int(s3) / T::from_int(2 * m) - mean * mean;
                (den != T::zero()).then(|| num / den)
            }
        }
    }
}

/// Degree assortativity (Pearson correlation of endpoint degrees over edges).
/// `None` when undefined: no edges, or every edge joins nodes of equal degree
/// with the same value everywhere (e.g. regular graphs).
pub fn assortativity<T: Scalar>(g: &Graph) -> Option<T> {
    let mut sums = EdgeDegreeSums::default();
    for &(u, v) in g.edges() {
        sums.add(g.degree(u) as u128, g.degree(v) as u128, 1);
    }
    sums.pearson()
}

/// Assortativity from subgraph counts:
/// `r = P₂ (P₃/P₂ + C − P₂/P₁) / (3 S₁₃ − P₂ (P₂/P₁ − 1))` with `C = 3t/P₂`.
///
/// Each ratio is formed separately in `T`, so this is a different arithmetic
/// route to the same number as [`assortativity`].
pub fn assortativity_from_counts<T: Scalar>(
    p1: u128,
    p2: u128,
    p3: u128,
    s13: u128,
    triangles: u128,
) -> Option<T> {
    if p1 == 0 || p2 == 0 {
        return None;
    }
    let p2t = T::from_count(p2);
    let p32 = T::from_count(p3) / p2t;
    let p21 = p2t / T::from_count(p1);
    let c = T::from_count(3 * triangles) / p2t;
    let num = p2t * (p32 + c - p21);
    let den = T::from_int(3) * T::from_count(s13) - p2t * (p21 - T::one());
    (den != T::zero()).then(|| num / den)
}

pub fn assortativity_estrada<T: Scalar>(g: &Graph) -> Option<T> {
    let paths = path_counts(g);
    assortativity_from_counts(
        g.edge_count() as u128,
        paths.p2,
        paths.p3,
        star_count(g),
        triangle_count(g),
    )
}

/// All quantities computed directly on the graph.
pub fn metrics_report<T: Scalar>(g: &Graph) -> MetricsReport<T> {
    let triangles = triangle_count(g);
    let paths = path_counts(g);
    let s13 = star_count(g);
    let m = g.edge_count() as u128;
    MetricsReport {
        n: g.node_count() as u128,
        m,
        triangles,
        p1: m,
        p2: paths.p2,
        p3: paths.p3,
        s13,
        avg_clustering: average_clustering(g),
        transitivity: ratio_or_zero(3 * triangles, paths.p2),
        assortativity: assortativity(g),
        assortativity_estrada: assortativity_from_counts(m, paths.p2, paths.p3, s13, triangles),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, core_satellite, path_graph, star, CoreSatelliteParams};
    use crate::scalar::Exact;

    fn cs(c: usize, s: usize, eta: usize) -> Graph {
        core_satellite(&CoreSatelliteParams::new(c, s, eta).unwrap())
    }

    #[test]
    fn local_clustering_examples() {
        let b = cs(1, 2, 2);
        assert_eq!(local_clustering::<Exact>(&b, 0).unwrap(), Exact::new(1, 3));
        for u in 1..5 {
            assert_eq!(
                local_clustering::<Exact>(&b, u).unwrap(),
                Exact::from_int(1)
            );
        }
        let g = cs(3, 4, 3);
        for u in 3..g.node_count() {
            assert_eq!(local_clustering::<f64>(&g, u).unwrap(), 1.0);
        }
        assert_eq!(local_clustering::<f64>(&star(3).unwrap(), 1).unwrap(), 0.0);
        assert!(local_clustering::<f64>(&b, 5).is_err());
    }

    #[test]
    fn average_clustering_examples() {
        assert_eq!(
            average_clustering::<Exact>(&cs(1, 2, 2)),
            Exact::new(13, 15)
        );
        assert_eq!(average_clustering::<f64>(&complete_graph(5).unwrap()), 1.0);
        assert_eq!(average_clustering::<f64>(&star(4).unwrap()), 0.0);
        assert_eq!(average_clustering::<f64>(&Graph::empty(0)), 0.0);
    }

    #[test]
    fn transitivity_examples() {
        assert_eq!(transitivity::<Exact>(&cs(1, 2, 2)), Exact::new(3, 5));
        assert_eq!(transitivity::<f64>(&star(5).unwrap()), 0.0);
        assert_eq!(transitivity::<f64>(&complete_graph(6).unwrap()), 1.0);
        assert_eq!(transitivity::<f64>(&Graph::empty(3)), 0.0);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(triangle_count(&complete_graph(4).unwrap()), 4);
        assert_eq!(triangle_count(&cs(3, 1, 2)), 7);
        assert_eq!(triangle_count(&cs(1, 2, 2)), 2);
        assert_eq!(node_triangles(&cs(1, 2, 2)), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn path_count_examples() {
        assert_eq!(path_counts(&path_graph(4)), PathCounts { p2: 2, p3: 1 });
        assert_eq!(
            path_counts(&complete_graph(3).unwrap()),
            PathCounts { p2: 3, p3: 0 }
        );
        // frozen from exhaustive enumeration (oracle module)
        assert_eq!(path_counts(&cs(1, 2, 2)), PathCounts { p2: 10, p3: 8 });
    }

    #[test]
    fn assortativity_examples() {
        assert_eq!(
            assortativity::<Exact>(&cs(1, 2, 2)),
            Some(Exact::new(-1, 2))
        );
        assert_eq!(assortativity::<f64>(&complete_graph(5).unwrap()), None);
        assert_eq!(assortativity::<f64>(&Graph::empty(3)), None);
        assert_eq!(
            assortativity::<Exact>(&star(4).unwrap()),
            Some(Exact::from_int(-1))
        );
        for c in 1..=5 {
            for s in 1..=5 {
                let r: f64 = assortativity(&cs(c, s, 2)).unwrap();
                assert!(r < 0.0, "c={c} s={s} r={r}");
            }
        }
    }

    #[test]
    fn estrada_matches_newman() {
        assert_eq!(
            assortativity_estrada::<Exact>(&cs(1, 2, 2)),
            Some(Exact::new(-1, 2))
        );
        let p4 = path_graph(4);
        assert_eq!(
            assortativity_estrada::<Exact>(&p4),
            assortativity::<Exact>(&p4)
        );
        assert_eq!(
            assortativity_estrada::<f64>(&complete_graph(4).unwrap()),
            None
        );
        // single edge: no 2-paths
        assert_eq!(
            assortativity_estrada::<f64>(&complete_graph(2).unwrap()),
            None
        );
    }

    #[test]
    fn pearson_overflow_fallback_agrees() {
        let mut sums = EdgeDegreeSums::default();
        sums.add(1 << 50, 3, 1 << 20);
        sums.add(5, 3, 7);
        let r: f64 = sums.pearson().unwrap();
        assert!((-1.0..=1.0).contains(&r));
    }

    #[test]
    fn report_butterfly() {
        let rep = metrics_report::<Exact>(&cs(1, 2, 2));
        assert_eq!((rep.n, rep.m, rep.p1, rep.triangles), (5, 6, 6, 2));
        assert_eq!((rep.p2, rep.p3, rep.s13), (10, 8, 4));
        assert_eq!(rep.avg_clustering, Exact::new(13, 15));
        assert_eq!(rep.transitivity, Exact::new(3, 5));
        assert_eq!(rep.assortativity, rep.assortativity_estrada);
    }
}
