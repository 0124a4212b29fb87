//! Exact structure-constant computations for Hopf algebras, partial
//! (co)actions on coalgebras, and their globalizations.

pub mod bundle;
pub mod coalg;
pub mod examples;
pub mod glob;
pub mod hopf;
pub mod multilinear;
pub mod pact;
pub mod pcoact;
pub mod report;
pub mod scalars;

pub use bundle::{Bundle, BundleError, Object};
pub use coalg::{Algebra, Coalgebra};
pub use examples::GroupTable;
pub use glob::{DualGlobalization, GlobalizationPcc, GlobalizationPmc};
pub use hopf::{Bialgebra, HopfAlgebra};
pub use multilinear::{LinearMap, Subspace, Tensor, VectorSpace};
pub use pact::{ActionMap, DualActionMap};
pub use pcoact::CoactionMap;
pub use report::{AxiomResult, CheckReport, Witness};
pub use scalars::{FieldSpec, Scalar};

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] scalars::ScalarError),
    #[error(transparent)]
    Linalg(#[from] multilinear::LinalgError),
    #[error(transparent)]
    Coalg(#[from] coalg::CoalgError),
    #[error(transparent)]
    Hopf(#[from] hopf::HopfError),
    #[error(transparent)]
    Pact(#[from] pact::PactError),
    #[error(transparent)]
    Pcoact(#[from] pcoact::PcoactError),
    #[error(transparent)]
    Glob(#[from] glob::GlobError),
    #[error(transparent)]
    Examples(#[from] examples::ExamplesError),
    #[error(transparent)]
    Bundle(#[from] bundle::BundleError),
}
