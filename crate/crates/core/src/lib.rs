//! Spectral extremal graph theory toolkit.
//!
//! Graph families, adjacency spectra, forbidden-subgraph machinery,
//! isomorph-free enumeration and numeric checks of edge-spectral Turán bounds.

mod bits;
pub mod canon;
pub mod error;
pub mod forbidden;
pub mod generators;
pub mod graph;
pub mod io;
pub mod scalar;
pub mod search;
pub mod spectral;
pub mod stability;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use error::{Error, Result};
pub use generators::{family, split_graph, FamilyTag, SplitGraphSpec};
pub use graph::{blow_up, disjoint_union, edit_distance_labeled, join, Graph};
pub use scalar::Scalar;
pub use spectral::{spectral_radius, Method, SpectralResult, SpectralSolver};

/// Exact ratio type used for `e(M)/v(M)` comparisons.
pub type Ratio = num_rational::Ratio<u64>;

pub type SpectralResult64 = SpectralResult<f64>;
pub type SpectralResult32 = SpectralResult<f32>;
pub type SpectralSolver64 = SpectralSolver<f64>;
pub type SpectralSolver32 = SpectralSolver<f32>;
