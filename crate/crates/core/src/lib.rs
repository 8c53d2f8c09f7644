//! Exact bicovariant differential calculi on the quantum group SL_q(N).
//!
//! Every scalar lives in the field `Q(z)` of rational functions in one
//! indeterminate, with `q = z^N`. The crate builds the R-matrix and the
//! universal r-form on generators, the braidings of the two N²-dimensional
//! calculi `Γ+` (forms `ω_ij`) and `Γ-` (forms `θ_ij`), Woronowicz
//! antisymmetrizers, the σ-metric with its contractions, Hodge and
//! codifferential operators, and the Laplace–Beltrami spectrum indexed by
//! Young diagrams.
//!
//! All operators act on left-invariant parts, i.e. on finite coordinate
//! spaces. Internally indices are 0-based; a basis slot `(i, j)` of a
//! one-form flattens to `i * N + j` and slots compose big-endian.
//!
//! The algebra is generic over [`Field`], so the same constructions run over
//! `Q(z)` ([`RatFunc`]) or over a prime field with `z` specialised to a
//! residue ([`Fp`]), which is how probabilistic ranks are obtained.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bimodule;
pub mod error;
pub mod exterior;
pub mod laplace;
pub mod linalg;
pub mod metric;
pub mod report;
pub mod rmatrix;
pub mod scalar;

pub use bimodule::{BraidWord, Calculus, Sign, SpaceSignature};
pub use error::{Error, Result};
pub use linalg::OpMatrix;
pub use report::{Check, Report};
pub use scalar::{Field, Fp, Poly, QParams, RatFunc};
