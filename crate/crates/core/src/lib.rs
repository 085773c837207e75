//! Combinatorial and arithmetic machinery for higher homotopy associativity.
//!
//! The crate has five parts:
//!
//! * [`trees`] — planar rooted trees and painted trees, the face sets of the
//!   associahedra `K_n` and multiplihedra `J_n`, with exhaustive enumeration
//!   and canonical serialization.
//! * [`facemaps`] — the boundary and degeneracy maps between those faces,
//!   the projection that forgets the painting, and an exhaustive
//!   verification harness for the identities they satisfy.
//! * [`realization`] — integer-coordinate (Loday) realization of
//!   associahedron vertices with exact-arithmetic sanity checks.
//! * [`steenrod`] — odd-primary reduced-power calculus: Adem rewriting to
//!   the admissible basis, Cartan expansion, and unstable actions on
//!   truncated polynomial algebras.
//! * [`gauge`] — capped p-adic valuation invariants deciding higher-homotopy
//!   equivalence of gauge groups of principal SU(2)-bundles over the
//!   4-sphere.

pub mod facemaps;
pub mod gauge;
pub mod realization;
pub mod steenrod;
pub mod trees;
