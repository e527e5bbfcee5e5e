//! Exact arithmetic for nonassociative algebras (octonions, split-octonions,
//! sedenions and their subalgebras), checkers for the identities they satisfy,
//! and a symbolic supersymmetric quantum mechanics layer built on them.

pub mod algebra;
pub mod builtins;
pub mod element;
pub mod io;
pub mod laws;
pub mod linalg;
pub mod operator;
pub mod scalar;
pub mod susy;
mod text;

pub use algebra::{
    change_basis, complexify, make_algebra, subalgebra, Algebra, AlgebraError, AlgebraSpec, Unit,
};
pub use builtins::{builtin_algebra, BuiltinAlgebra};
pub use element::Element;
pub use scalar::GaussianRational;
