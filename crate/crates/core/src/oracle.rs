//! Independent verification engines.
//!
//! Nothing here knows about core-satellite structure: the dense matrices are
//! built from an arbitrary [`Graph`], eigenvalues come from cyclic Jacobi
//! rotations, and subgraph counts come from brute-force enumeration. The
//! closed forms in [`crate::metrics`] and [`crate::spectra`] are checked
//! against these.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{RealScalar, Scalar};

/// Largest graph the dense constructors accept by default.
pub const DEFAULT_DENSE_LIMIT: usize = 2000;

/// Largest graph the exhaustive counters accept by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 50;

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix<T> {
    order: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseSymmetricMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        DenseSymmetricMatrix {
            order,
            data: vec![T::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = T::one();
        }
        m
    }

    /// Fails unless `rows` is square and symmetric.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        let data: Vec<T> = rows.into_iter().flatten().collect();
        let m = DenseSymmetricMatrix { order, data };
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidParameter(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> T {
        (0..self.order).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Sum of squared entries.
    pub fn frobenius_sq(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// Dense product `self · other`. The product of two symmetric matrices is
    /// only symmetric when they commute, which holds for powers of one matrix.
    pub fn power_product(&self, other: &Self) -> Self {
        let n = self.order;
        assert_eq!(n, other.order);
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * other.get(k, j);
                }
            }
        }
        out
    }
}

impl<T: RealScalar> DenseSymmetricMatrix<T> {
    pub fn frobenius_norm(&self) -> T {
        self.frobenius_sq().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

fn dense_guard(g: &Graph, limit: usize) -> Result<()> {
    if g.node_count() > limit {
        Err(Error::DenseLimitExceeded {
            n: g.node_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// 0/1 adjacency matrix.
pub fn adjacency_matrix<T: Scalar>(
    g: &Graph,
    dense_limit: usize,
) -> Result<DenseSymmetricMatrix<T>> {
    dense_guard(g, dense_limit)?;
    let mut m = DenseSymmetricMatrix::zeros(g.node_count());
    for &(u, v) in g.edges() {
        m.set(u, v, T::one());
    }
    Ok(m)
}

/// `L = D − A`.
pub fn laplacian_matrix<T: Scalar>(
    g: &Graph,
    dense_limit: usize,
) -> Result<DenseSymmetricMatrix<T>> {
    dense_guard(g, dense_limit)?;
    let mut m = DenseSymmetricMatrix::zeros(g.node_count());
    for &(u, v) in g.edges() {
        m.set(u, v, T::zero() - T::one());
    }
    for u in 0..g.node_count() {
        m.set(u, u, T::from_count(g.degree(u) as u128));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below
    /// `rel_tol · ‖A‖_F`. Clamped from below by a few ulps for narrow types.
    pub rel_tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            rel_tol: 1e-12,
            max_sweeps: 64,
        }
    }
}

/// All eigenvalues of a symmetric matrix in descending order, by cyclic
/// Jacobi rotations.
pub fn eigenvalues_symmetric<T: RealScalar>(mat: &DenseSymmetricMatrix<T>) -> Result<Vec<T>> {
    eigenvalues_symmetric_with(mat, JacobiOptions::default())
}

pub fn eigenvalues_symmetric_with<T: RealScalar>(
    mat: &DenseSymmetricMatrix<T>,
    opts: JacobiOptions,
) -> Result<Vec<T>> {
    if !mat.is_finite() {
        return Err(Error::InvalidParameter(
            "matrix has non-finite entries".into(),
        ));
    }
    let n = mat.order;
    let mut a = mat.data.clone();
    let norm = mat.frobenius_norm();
    let floor = T::epsilon() * T::lit(4.0) * T::lit((n.max(1) as f64).sqrt());
    let target = T::lit(opts.rel_tol).max(floor) * norm;
    // Entries at rounding level are dropped instead of rotated: between
    // near-equal diagonal entries they would force large-angle rotations
    // that keep refilling the rest of the row, which stalls convergence on
    // spectra with big multiplicity clusters.
    let negligible = T::epsilon() * norm;

    let off_norm = |a: &[T]| -> T {
        let mut acc = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                acc = acc + a[p * n + q] * a[p * n + q];
            }
        }
        (acc + acc).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off.to_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= negligible {
                    a[p * n + q] = T::zero();
                    a[q * n + p] = T::zero();
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (apq + apq);
                let t = if (theta * theta).is_finite() {
                    let mag = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < T::zero() {
                        -mag
                    } else {
                        mag
                    }
                } else {
                    T::lit(0.5) / theta
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[p * n + k];
                    let akq = a[q * n + k];
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[p * n + k] = new_p;
                    a[k * n + p] = new_p;
                    a[q * n + k] = new_q;
                    a[k * n + q] = new_q;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
            }
        }
    }
    let mut values: Vec<T> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    Ok(values)
}

/// Brute-force subgraph counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgraphCounts {
    pub triangles: u128,
    pub p2: u128,
    pub p3: u128,
    pub s13: u128,
}

/// Counts triangles and 2-paths over all 3-subsets, 3-paths by walking every
/// ordered simple path on four nodes, and 3-stars over all neighbor triples.
pub fn exhaustive_subgraph_counts(g: &Graph, limit: usize) -> Result<SubgraphCounts> {
    let n = g.node_count();
    if n > limit {
        return Err(Error::EnumerationLimitExceeded { n, limit });
    }
    let adj = |u: usize, v: usize| g.has_edge(u, v);

    let mut triangles = 0u128;
    let mut p2 = 0u128;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let edges = adj(a, b) as u8 + adj(b, c) as u8 + adj(a, c) as u8;
                match edges {
                    2 => p2 += 1,
                    3 => {
                        triangles += 1;
                        p2 += 3;
                    }
                    _ => {}
                }
            }
        }
    }

    let mut ordered = 0u128;
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != a && d != b {
                        ordered += 1;
                    }
                }
            }
        }
    }

    let mut s13 = 0u128;
    for u in 0..n {
        let nb = g.neighbors(u);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                s13 += (nb.len() - j - 1) as u128;
            }
        }
    }

    Ok(SubgraphCounts {
        triangles,
        p2,
        // every undirected path is walked once from each end
        p3: ordered / 2,
        s13,
    })
}

/// `trace(A³) / 6` by dense integer multiplication.
pub fn triangles_by_trace(g: &Graph, dense_limit: usize) -> Result<u128> {
    let a = adjacency_matrix::<f64>(g, dense_limit)?;
    let a3 = a.power_product(&a).power_product(&a);
    Ok((a3.trace() / 6.0).round() as u128)
}
