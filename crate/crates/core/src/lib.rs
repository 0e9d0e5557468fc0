//! Core-satellite graphs: a core clique joined with disjoint satellite
//! cliques.
//!
//! The crate builds these graphs (and the classical families they contain:
//! stars, agaves, complete split, windmill and friendship graphs), evaluates
//! their clustering and assortativity both directly and from closed forms,
//! and produces their complete adjacency and Laplacian spectra analytically.
//! The [`oracle`] module carries the brute-force and dense numeric engines the
//! closed forms are checked against.
//!
//! Numeric code is generic over the scalar type. Ratio-valued metrics accept
//! any [`Scalar`], including the exact rational [`Exact`]; anything needing
//! square roots takes a [`RealScalar`] (`f32` or `f64`). The aliases below fix
//! the scalar to `f64` for everyday use.

pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod scalar;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{CoreSatelliteParams, GeneralizedParams, Graph, SatelliteClass};
pub use metrics::closed_form::TriangleFormula;
pub use metrics::MetricsReport;
pub use scalar::{Exact, RealScalar, Scalar};
pub use spectra::{Eigenpair, MatrixKind, Source};

pub type Metrics = MetricsReport<f64>;
pub type ExactMetrics = MetricsReport<Exact>;
pub type Spectrum = spectra::SpectrumResult<f64>;
pub type Matrix = oracle::DenseSymmetricMatrix<f64>;
pub type PrincipalEigenvector = spectra::PrincipalEigenvector<f64>;
pub type SpectralIndices = spectra::SpectralIndices<f64>;
