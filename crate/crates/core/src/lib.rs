//! # scx-core
//!
//! Finite abstract simplicial complexes together with the exact machinery
//! needed to study their expansion properties:
//!
//! - canonical complexes with incidence, orientation, and metric queries
//!   ([`SimplicialComplex`]),
//! - exact linear algebra over Z2, the integers, and the rationals
//!   (bit-packed GF(2) elimination, fraction-free rational ranks, Smith
//!   normal form),
//! - combinatorial Laplacians `L_k = L_k^up + L_k^down` and their spectra,
//!   with an exact zero-eigenvalue gate driven by rational kernel
//!   dimensions rather than floating-point thresholds,
//! - coboundary and boundary Cheeger numbers `h^k`, `h_k` computed exactly
//!   by coset-minimal sweeps, with re-verifiable witness certificates,
//! - deterministic generators for the complex families used throughout
//!   (`sigma`, `xk`, `yk`, `gk`, `rp2`, `random_disk`),
//! - the dual-graph / Dirichlet-eigenvalue translation for non-branching
//!   complexes.
//!
//! All rank, Betti, and Cheeger computations are exact; floating point only
//! ever enters through eigenvalue magnitudes.
//!
//! ```
//! use scx_core::*;
//!
//! // The 6-vertex projective plane separates Z2 expansion from spectra:
//! // the all-facets chain has no boundary, yet the spectral gap is positive.
//! let x = generators::rp2();
//! let h2 = cheeger(&x, 2, Direction::Boundary, false, &Caps::default()).unwrap();
//! assert_eq!(h2.value(), Some(Rational64::new(0, 1)));
//! let gap = spectral_gap(&x, 2, GapDirection::Down, false, DEFAULT_EIG_TOL)
//!     .unwrap()
//!     .unwrap();
//! assert!(gap > 0.05);
//! ```

pub mod boundary;
pub mod cheeger;
pub mod complex;
pub mod dirichlet;
pub mod exact;
pub mod generators;
pub mod metric;
pub mod simplex;
pub mod spectra;
pub mod z2;

pub use boundary::{signed_boundary, z2_boundary, SignedBoundaryMatrix};
pub use cheeger::{
    cheeger, structural_cheeger, top_chain_upper_bound, verify_certificate, CheegerCertificate,
    CheegerMethod, CheegerResult, Direction, Rational64, StructuralTarget,
};
pub use complex::{OrientationAssignment, SimplicialComplex};
pub use dirichlet::{
    agreement_check, border_extension, dirichlet_pair, dual_graph, AgreementReport,
    BorderExtension, DirichletCertificate, DualGraph,
};
pub use exact::{betti, rational_rank, smith_normal_form, Field, SmithForm};
pub use metric::{DepthMethod, DepthReport, DistanceReport, Geodesic};
pub use simplex::Simplex;
pub use spectra::{
    jacobi_eigenvalues, laplacian, spectral_gap, spectral_report, symmetric_spectrum, GapDirection,
    Laplacian, LaplacianKind, SpectralReport,
};
pub use z2::{Z2Chain, Z2Matrix, Z2Subspace};

use thiserror::Error;

/// Error type shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: expected at least one nonempty simplex")]
    EmptyInput,
    #[error("duplicate vertex {0} within a simplex")]
    DuplicateVertexInSimplex(u32),
    #[error("simplex {0:?} not found in the complex")]
    SimplexNotFound(Vec<u32>),
    #[error("dimension {k} out of range for a complex of top dimension {m}")]
    DimensionOutOfRange { k: usize, m: usize },
    #[error("shape mismatch: expected length {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric within 1e-12 relative tolerance")]
    NonSymmetric,
    #[error("eigenvalue iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("{context} needs {bits} bits, above the configured cap of {cap} bits")]
    BeyondBruteForceCap {
        context: &'static str,
        bits: usize,
        cap: u32,
    },
    #[error("no simplex of top dimension has finite depth (top Z2 homology is nonzero)")]
    NoBoundary,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("complex is branching: a codimension-1 simplex has more than two cofaces")]
    Branching,
    #[error("empty interior: every dual-graph vertex is a border facet")]
    EmptyInterior,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Brute-force budget for the exact sweeps.
///
/// `brute_cap_bits` bounds the sweep space (`2^bits` vectors visited);
/// `coset_cap_bits` bounds the coset table (`2^bits` entries). Exceeding a
/// cap is an error, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub brute_cap_bits: u32,
    pub coset_cap_bits: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute_cap_bits: 24,
            coset_cap_bits: 20,
        }
    }
}

/// Default Jacobi convergence tolerance (relative to the Frobenius norm).
pub const DEFAULT_EIG_TOL: f64 = 1e-10;

/// Default band under which a floating-point eigenvalue is reported as zero.
/// Zero/nonzero *decisions* are always made from exact ranks; this band is
/// only used when cross-checking float spectra against exact kernel counts.
pub const DEFAULT_ZERO_BAND: f64 = 1e-8;
