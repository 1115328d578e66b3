//! Exact-arithmetic construction and certification of quadratic Lie
//! algebras of low dimension.

pub mod catalogue;
pub mod construct;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod quad;
pub mod scalar;
pub mod sl2;

pub use catalogue::{build, catalogue, find, verify_entry, CatalogueEntry, CatalogueError, EntryReport};
pub use io::IoError;
pub use lie::{LieAlgebra, StructureDefect};
pub use matrix::{Matrix, RowReducer, Subspace};
pub use quad::{
    FieldMode, Fingerprint, Irreducibility, LeviRadicalReport, OrthogonalityReport, QuadDefect,
    QuadraticLieAlgebra,
};
pub use scalar::{format_scalar, parse_scalar, s_int, s_ratio, Scalar};
pub use sl2::{Decomposition, LeviTriple, ModuleAction, Sl2Error, Summand, TripleKind};
