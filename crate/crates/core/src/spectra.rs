//! Adjacency and Laplacian spectra of core-satellite graphs in closed form.
//!
//! Apart from `−1` (from the cliques) and `sᵢ − 1` (differences between
//! equally sized satellites), the adjacency spectrum of `Θ(c, s, η)` has
//! `t + 1` simple eigenvalues carried by the vectors that are constant on the
//! core and on each satellite class. They solve the secular equation
//!
//! ```text
//! f(λ) = λ − (c − 1) − Σᵢ c·ηᵢ·sᵢ / (λ − sᵢ + 1) = 0
//! ```
//!
//! which is strictly increasing between its poles `sᵢ − 1`. Each gap between
//! consecutive poles, plus the two unbounded ends, holds exactly one root, so
//! the roots are bracketed and found by bisection without ever forming
//! polynomial coefficients.

use num_rational::Ratio;

use crate::graph::{CoreSatelliteParams, GeneralizedParams, Graph};
use crate::oracle::DenseSymmetricMatrix;
use crate::scalar::{Exact, RealScalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Analytic,
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenpair<T> {
    pub value: T,
    pub multiplicity: usize,
}

/// Eigenvalues with multiplicities, sorted by descending value.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult<T> {
    pub eigenpairs: Vec<Eigenpair<T>>,
    pub source: Source,
    pub matrix: MatrixKind,
    /// Set for single-satellite inputs, whose graph is a complete graph.
    pub degenerate: bool,
}

impl<T: Scalar> SpectrumResult<T> {
    fn analytic(matrix: MatrixKind, mut pairs: Vec<Eigenpair<T>>, degenerate: bool) -> Self {
        pairs.retain(|p| p.multiplicity > 0);
        pairs.sort_by(|a, b| {
            b.value
                .partial_cmp(&a.value)
                .expect("comparable eigenvalues")
        });
        SpectrumResult {
            eigenpairs: pairs,
            source: Source::Analytic,
            matrix,
            degenerate,
        }
    }

    /// Groups a descending list of numeric eigenvalues into pairs; values
    /// within `tol` of the first member of a group join it.
    pub fn from_numeric(values: &[T], tol: T, matrix: MatrixKind) -> Self {
        let mut pairs: Vec<Eigenpair<T>> = Vec::new();
        for &v in values {
            match pairs.last_mut() {
                Some(last) if abs_diff(last.value, v) <= tol => last.multiplicity += 1,
                _ => pairs.push(Eigenpair {
                    value: v,
                    multiplicity: 1,
                }),
            }
        }
        SpectrumResult {
            eigenpairs: pairs,
            source: Source::Numeric,
            matrix,
            degenerate: false,
        }
    }

    /// Sum of multiplicities; equals the node count.
    pub fn order(&self) -> usize {
        self.eigenpairs.iter().map(|p| p.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.eigenpairs.len()
    }

    /// All eigenvalues with repetition, descending.
    pub fn values(&self) -> Vec<T> {
        self.eigenpairs
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.value, p.multiplicity))
            .collect()
    }

    pub fn trace(&self) -> T {
        self.eigenpairs.iter().fold(T::zero(), |acc, p| {
            acc + p.value * T::from_count(p.multiplicity as u128)
        })
    }

    pub fn trace_of_square(&self) -> T {
        self.eigenpairs.iter().fold(T::zero(), |acc, p| {
            acc + p.value * p.value * T::from_count(p.multiplicity as u128)
        })
    }

    pub fn largest(&self) -> Option<T> {
        self.eigenpairs.first().map(|p| p.value)
    }

    pub fn smallest(&self) -> Option<T> {
        self.eigenpairs.last().map(|p| p.value)
    }

    /// Largest absolute difference between the expanded, sorted value lists;
    /// `None` when the orders differ.
    pub fn max_abs_deviation(&self, other: &Self) -> Option<T> {
        let (a, b) = (self.values(), other.values());
        (a.len() == b.len()).then(|| {
            a.iter().zip(&b).fold(T::zero(), |acc, (&x, &y)| {
                let d = abs_diff(x, y);
                if d > acc {
                    d
                } else {
                    acc
                }
            })
        })
    }
}

fn abs_diff<T: Scalar>(a: T, b: T) -> T {
    if a > b {
        a - b
    } else {
        b - a
    }
}

fn int<T: Scalar>(v: i128) -> T {
    T::from_int(v)
}

fn pair<T>(value: T, multiplicity: usize) -> Eigenpair<T> {
    Eigenpair {
        value,
        multiplicity,
    }
}

/// `λ± = ½[c+s−2 ± √((c−s)² + 4ηcs)]`. The smaller root is taken from the
/// product `λ₊λ₋ = (c−1)(s−1) − ηcs` to avoid cancellation.
pub fn extreme_eigenvalues<T: RealScalar>(p: &CoreSatelliteParams) -> (T, T) {
    let (c, s, eta) = (
        p.core_size() as i128,
        p.satellite_size() as i128,
        p.satellite_count() as i128,
    );
    let disc = (c - s) * (c - s) + 4 * eta * c * s;
    let plus = (int::<T>(c + s - 2) + int::<T>(disc).sqrt()) / int(2);
    let product = (c - 1) * (s - 1) - eta * c * s;
    (plus, int::<T>(product) / plus)
}

/// Closed-form adjacency spectrum of `Θ(c, s, η)`.
///
/// For `η = 1` the graph is `K_{c+s}` and the result is
/// `{c+s−1, −1 × (c+s−1)}`, flagged as degenerate.
pub fn adjacency_spectrum_cs<T: RealScalar>(p: &CoreSatelliteParams) -> SpectrumResult<T> {
    let (c, s, eta) = (p.core_size(), p.satellite_size(), p.satellite_count());
    if p.is_degenerate() {
        return SpectrumResult::analytic(
            MatrixKind::Adjacency,
            vec![
                pair(int((c + s - 1) as i128), 1),
                pair(-T::one(), c + s - 1),
            ],
            true,
        );
    }
    let (plus, minus) = extreme_eigenvalues::<T>(p);
    SpectrumResult::analytic(
        MatrixKind::Adjacency,
        vec![
            pair(plus, 1),
            pair(int((s - 1) as i128), eta - 1),
            pair(-T::one(), c + eta * (s - 1) - 1),
            pair(minus, 1),
        ],
        false,
    )
}

/// Symmetrized quotient matrix of the core / satellite-class partition:
/// diagonal `c−1, s₁−1, …, s_t−1`, first row and column `√(c·ηᵢ·sᵢ)`.
/// Its eigenvalues are the `t + 1` simple adjacency eigenvalues.
pub fn divisor_matrix<T: RealScalar>(p: &GeneralizedParams) -> DenseSymmetricMatrix<T> {
    let c = p.core_size();
    let classes = p.classes();
    let mut m = DenseSymmetricMatrix::zeros(classes.len() + 1);
    m.set(0, 0, int(c as i128 - 1));
    for (i, class) in classes.iter().enumerate() {
        m.set(i + 1, i + 1, int(class.size as i128 - 1));
        let w = (c * class.count * class.size) as i128;
        m.set(0, i + 1, int::<T>(w).sqrt());
    }
    m
}

/// Unsymmetrized quotient matrix: `B[0][i] = ηᵢsᵢ`, `B[i][0] = c`. Row `r`
/// holds the number of neighbors a node of part `r` has in each part.
pub fn quotient_matrix(p: &GeneralizedParams) -> Vec<Vec<i128>> {
    let c = p.core_size() as i128;
    let t = p.class_count();
    let mut b = vec![vec![0i128; t + 1]; t + 1];
    b[0][0] = c - 1;
    for (i, class) in p.classes().iter().enumerate() {
        b[0][i + 1] = (class.count * class.size) as i128;
        b[i + 1][0] = c;
        b[i + 1][i + 1] = class.size as i128 - 1;
    }
    b
}

/// The secular function whose zeros are the `t + 1` simple eigenvalues.
pub fn secular_function<T: RealScalar>(p: &GeneralizedParams, lambda: T) -> T {
    let c = p.core_size() as i128;
    p.classes().iter().fold(lambda - int(c - 1), |acc, class| {
        let w = int::<T>(c * (class.count * class.size) as i128);
        acc - w / (lambda - int(class.size as i128 - 1))
    })
}

/// The `t + 1` roots of the secular equation, descending.
pub fn secular_roots<T: RealScalar>(p: &GeneralizedParams) -> Vec<T> {
    let poles: Vec<T> = p
        .classes()
        .iter()
        .map(|cl| int(cl.size as i128 - 1))
        .collect();
    let c = p.core_size() as i128;
    let total: i128 = p
        .classes()
        .iter()
        .map(|cl| c * (cl.count * cl.size) as i128)
        .sum();
    // beyond this distance from all poles and from c−1, |Σ w/(λ−d)| < reach
    let reach = int::<T>(total).sqrt() + T::one();
    let lowest = poles[0].min(int(c - 1)) - reach;
    let highest = poles[poles.len() - 1].max(int(c - 1)) + reach;

    let mut brackets = Vec::with_capacity(poles.len() + 1);
    brackets.push((lowest, poles[0]));
    brackets.extend(poles.windows(2).map(|w| (w[0], w[1])));
    brackets.push((poles[poles.len() - 1], highest));

    let mut roots: Vec<T> = brackets
        .into_iter()
        .map(|(lo, hi)| bisect(|x| secular_function(p, x), lo, hi))
        .collect();
    roots.reverse();
    roots
}

// f is increasing on (lo, hi) with a sign change inside.
fn bisect<T: RealScalar>(f: impl Fn(T) -> T, mut lo: T, mut hi: T) -> T {
    let half = T::lit(0.5);
    loop {
        let mid = lo + (hi - lo) * half;
        if mid <= lo || mid >= hi {
            return mid;
        }
        let v = f(mid);
        if v == T::zero() {
            return mid;
        }
        if v < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Closed-form adjacency spectrum of `Θ(c, s, η)` with several satellite
/// sizes. Single-class input gives exactly [`adjacency_spectrum_cs`].
pub fn adjacency_spectrum_gcs<T: RealScalar>(p: &GeneralizedParams) -> SpectrumResult<T> {
    if let Some(cs) = p.as_core_satellite() {
        return adjacency_spectrum_cs(&cs);
    }
    let c = p.core_size();
    let clique_minus_one = c + p
        .classes()
        .iter()
        .map(|cl| cl.count * (cl.size - 1))
        .sum::<usize>()
        - 1;
    let mut pairs = vec![pair(-T::one(), clique_minus_one)];
    pairs.extend(
        p.classes()
            .iter()
            .map(|cl| pair(int(cl.size as i128 - 1), cl.count - 1)),
    );
    pairs.extend(secular_roots::<T>(p).into_iter().map(|v| pair(v, 1)));
    SpectrumResult::analytic(MatrixKind::Adjacency, pairs, false)
}

/// `(c − 1 + max sᵢ, c − 1 + Σ ηᵢsᵢ)`; the spectral radius lies strictly
/// between them when there are at least two satellites.
pub fn spectral_radius_bounds<T: Scalar>(p: &GeneralizedParams) -> (T, T) {
    let c = p.core_size() as i128;
    (
        int(c - 1 + p.max_satellite_size() as i128),
        int(c - 1 + p.satellite_nodes() as i128),
    )
}

/// Perron vector scaled so the core entries are 1. Every node of satellite
/// class `i` carries `βᵢ = c / (ρ − sᵢ + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalEigenvector<T> {
    pub eigenvalue: T,
    pub core_value: T,
    pub satellite_values: Vec<T>,
}

impl<T: Scalar> PrincipalEigenvector<T> {
    /// Full-length vector in the generator's node order.
    pub fn to_vector(&self, p: &GeneralizedParams) -> Vec<T> {
        let mut v = vec![self.core_value; p.core_size()];
        for (class, &beta) in p.classes().iter().zip(&self.satellite_values) {
            v.extend(std::iter::repeat_n(beta, class.size * class.count));
        }
        v
    }
}

pub fn principal_eigenvector<T: RealScalar>(p: &GeneralizedParams) -> PrincipalEigenvector<T> {
    let rho = adjacency_spectrum_gcs::<T>(p)
        .largest()
        .expect("non-empty spectrum");
    let c = int::<T>(p.core_size() as i128);
    PrincipalEigenvector {
        eigenvalue: rho,
        core_value: T::one(),
        satellite_values: p
            .classes()
            .iter()
            .map(|cl| c / (rho - int(cl.size as i128 - 1)))
            .collect(),
    }
}

/// `‖A v − λ v‖∞` computed from adjacency lists.
pub fn eigen_residual<T: RealScalar>(g: &Graph, v: &[T], lambda: T) -> T {
    (0..g.node_count()).fold(T::zero(), |acc, u| {
        let av = g.neighbors(u).iter().fold(T::zero(), |s, &w| s + v[w]);
        acc.max((av - lambda * v[u]).abs())
    })
}

/// Closed-form Laplacian spectrum: `n × c`, `(c + sᵢ) × ηᵢ(sᵢ − 1)`,
/// `c × (η − 1)` and a simple zero. All values are integers, so any
/// [`Scalar`] (including [`Exact`]) represents them exactly.
pub fn laplacian_spectrum_gcs<T: Scalar>(p: &GeneralizedParams) -> SpectrumResult<T> {
    let c = p.core_size();
    let n = p.node_count();
    let mut raw: Vec<(usize, usize)> = vec![(n, c), (c, p.satellite_count() - 1), (0, 1)];
    raw.extend(
        p.classes()
            .iter()
            .map(|cl| (c + cl.size, cl.count * (cl.size - 1))),
    );
    // a single satellite makes c + s = n; merge equal integer values
    raw.sort_unstable_by_key(|e| std::cmp::Reverse(e.0));
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (value, mult) in raw.into_iter().filter(|&(_, m)| m > 0) {
        match merged.last_mut() {
            Some(last) if last.0 == value => last.1 += mult,
            _ => merged.push((value, mult)),
        }
    }
    SpectrumResult::analytic(
        MatrixKind::Laplacian,
        merged
            .into_iter()
            .map(|(v, m)| pair(T::from_count(v as u128), m))
            .collect(),
        p.is_degenerate(),
    )
}

pub fn laplacian_spectrum_cs<T: Scalar>(p: &CoreSatelliteParams) -> SpectrumResult<T> {
    laplacian_spectrum_gcs(&GeneralizedParams::from(*p))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralIndices<T> {
    pub spectral_radius: T,
    /// `1 / ρ(A)`.
    pub infection_threshold: T,
    /// Algebraic connectivity over the largest Laplacian eigenvalue.
    pub sync_index: T,
    pub sync_index_exact: Exact,
    pub algebraic_connectivity: T,
}

/// For two or more satellites the algebraic connectivity is `c` and the
/// synchronization index is `c / n`.
pub fn spectral_indices<T: RealScalar>(p: &GeneralizedParams) -> SpectralIndices<T> {
    let rho = adjacency_spectrum_gcs::<T>(p)
        .largest()
        .expect("non-empty spectrum");
    let lap = laplacian_spectrum_gcs::<Exact>(p);
    let largest = lap.largest().expect("non-empty spectrum");
    let connectivity = lap
        .eigenpairs
        .iter()
        .rev()
        .map(|e| e.value)
        .find(|v| *v != Ratio::from_integer(0))
        .expect("graphs with two or more nodes have a nonzero Laplacian eigenvalue");
    let sync = connectivity / largest;
    SpectralIndices {
        spectral_radius: rho,
        infection_threshold: T::one() / rho,
        sync_index: T::ratio(*sync.numer(), *sync.denom()),
        sync_index_exact: sync,
        algebraic_connectivity: T::ratio(*connectivity.numer(), *connectivity.denom()),
    }
}
