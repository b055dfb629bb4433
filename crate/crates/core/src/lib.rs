//! Fully commutative elements of the type-A Coxeter group, their canonical
//! forms, the multiplication-compatible bijection with non-crossing
//! Temperley-Lieb diagrams, and the Catalan-family counts they carry.
//!
//! Counting is generic over the integer type and the algebra over the
//! coefficient ring; the aliases below fix the exact big-integer choices.

pub mod bijection;
pub mod counting;
pub mod diagram;
pub mod fc;
pub mod lattice;
pub mod render;
pub mod tl;
pub mod verify;

pub use bijection::{diagram_to_fc, fc_to_diagram, fc_to_diagram_reference, BijectionTrace};
pub use diagram::{enumerate_diagrams, Arrow, Components, Diagram, Dot, Row};
pub use fc::{enumerate_fc, Block, Class, FcElement, Permutation};
pub use lattice::{Ballot, DyckPath};
pub use tl::{monomial_product, DeltaPoly, TlElement};

/// Exact nonnegative counts.
pub type BigCount = num_bigint::BigUint;

/// Polynomials in `delta` with integer coefficients.
pub type BigDeltaPoly = DeltaPoly<num_bigint::BigInt>;

/// Elements of `TL(A_n)` over `Z[delta]`.
pub type BigTlElement = TlElement<num_bigint::BigInt>;
