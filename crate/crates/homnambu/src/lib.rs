//! Exact rational workbench for finite-dimensional n-ary Hom-Nambu and
//! Hom-Leibniz algebras.
//!
//! The crate verifies the defining identities of an algebra given by
//! structure constants and twist matrices, computes derivation and
//! ω-derivation spaces as exact nullspaces, executes the constructive
//! operations (twists by endomorphisms, derivation extensions, tensor
//! power brackets), and computes the cocycle and coboundary spaces that
//! govern extensions by representations.
//!
//! All scalars are arbitrary-precision rationals, so every verdict is a
//! zero-tolerance equality. Values are immutable after construction and
//! all kernels are pure functions, safe to call concurrently on shared
//! data.

pub mod algebra;
pub mod construct;
pub mod derivation;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod index;
pub mod linalg;
pub mod rat;
pub mod rep;
pub mod tensor;

pub use algebra::{
    bracket_apply, verify_hom_lie, verify_hom_nambu, verify_leibniz, verify_morphism,
    verify_multiplicative, BracketTensor, HomNambuAlgebra, IdentityReport, TwistFamily, Witness,
};
pub use error::Error;
pub use linalg::Matrix;
pub use rat::Rat;
