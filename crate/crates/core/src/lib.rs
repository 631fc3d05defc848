//! Exact counting of root-lattice states of level-`q` Chern-Simons theory on
//! the torus, for every simply-laced Lie algebra.
//!
//! The states in question are dominant weights `y` with `marks · y ≤ q` that
//! also lie on the root lattice. Their counts form the Ehrhart series of a
//! rational polytope built from the Cartan matrix, and the crate computes that
//! series three independent ways:
//!
//! - [`polytope`]: exhaustive lattice-point enumeration, in root space and in
//!   weight space, cross-checked against each other;
//! - [`omega`]: MacMahon's Ω operators applied to the slack-form constraint
//!   system, by truncated expansion and exponent filtering;
//! - [`mckay`]: counting determinant-one representations of the finite
//!   subgroup of SU(2) attached to the algebra by the McKay correspondence,
//!   together with the closed forms in [`series::closed_form`].
//!
//! Everything is exact (arbitrary-precision integers and rationals); there is
//! no floating point in the crate. The crate is `no_std` with `alloc` when the
//! default `std` feature is disabled.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![deny(missing_docs)]

extern crate alloc;

mod error;
pub mod lie;
pub mod matrix;
pub mod mckay;
pub mod omega;
pub mod polytope;
pub mod series;

pub use error::{Error, Result};
pub use lie::{AlgebraId, Family, MarksVector};
pub use matrix::ExactMatrix;
pub use series::PowerSeries;
