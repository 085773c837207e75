//! Faces of the associahedra `K_n` and multiplihedra `J_n`.
//!
//! A face of `K_n` is a planar rooted tree with `n` leaves whose internal
//! vertices all have arity at least 2. A face of `J_n` is a painted tree:
//! a planar tree whose internal vertices carry one of three colors
//! (domain, map, range) such that every leaf-to-root path crosses exactly
//! one map vertex, with domain vertices above it and range vertices below.
//!
//! Both kinds serialize to a compact canonical string (preorder traversal
//! with parentheses and color tags) that is injective on trees and fixes
//! the enumeration order everywhere in the crate.

pub(crate) mod painted;
pub(crate) mod planar;
pub(crate) mod poset;

pub use painted::{Color, PaintedTree};
pub use planar::PlanarTree;
pub use poset::{
    enumerate_faces, enumerate_vertices, face_leq, Face, FacePoset, DEFAULT_FULL_POSET_CAP,
    SCHEMA_VERSION, VERTEX_ONLY_CAP,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("internal vertex of arity {arity} (arity at least {min} required)")]
    ArityTooSmall { arity: usize, min: usize },
    #[error("leaf count {n} out of range (must be at least {min})")]
    LeafCountOutOfRange { n: usize, min: usize },
    #[error("a leaf-to-root path does not read domain* map range*")]
    PaintingViolation,
    #[error("parse error at byte {at}: {reason}")]
    Parse { at: usize, reason: String },
    #[error("enumeration cap exceeded: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("corrupt face poset document: {0}")]
    CorruptDocument(String),
}

/// Which polytope family a face belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum TreeKind {
    K,
    J,
}

impl std::fmt::Display for TreeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeKind::K => write!(f, "K"),
            TreeKind::J => write!(f, "J"),
        }
    }
}

impl std::str::FromStr for TreeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "K" | "k" => Ok(TreeKind::K),
            "J" | "j" => Ok(TreeKind::J),
            other => Err(format!("unknown polytope kind `{other}` (expected K or J)")),
        }
    }
}

/// The corolla families: top cells and their painted analogues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaKind {
    /// Single internal vertex of arity `n`; the top cell of `K_n`.
    K,
    /// Single map vertex of arity `n`; the top cell of `J_n`.
    JMap,
    /// Range vertex of arity `n` with a unary map vertex over each input;
    /// the painted face whose root multiplies `n` map outputs.
    JRange,
}

/// Builds the corolla of the requested kind.
///
/// `n >= 2` for `K` and `JRange`, `n >= 1` for `JMap`.
pub fn corolla(kind: CorollaKind, n: usize) -> Result<Face, TreeError> {
    match kind {
        CorollaKind::K => Ok(Face::K(PlanarTree::corolla(n)?)),
        CorollaKind::JMap => Ok(Face::J(PaintedTree::map_corolla(n)?)),
        CorollaKind::JRange => Ok(Face::J(PaintedTree::range_corolla(n)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_k2_is_a_point() {
        let c = corolla(CorollaKind::K, 2).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(c.leaf_count(), 2);
    }

    #[test]
    fn corolla_jmap_2_is_the_top_cell_of_j2() {
        let c = corolla(CorollaKind::JMap, 2).unwrap();
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn corolla_k4_has_dimension_two() {
        let c = corolla(CorollaKind::K, 4).unwrap();
        assert_eq!(c.dimension(), 2);
    }

    #[test]
    fn corolla_range_endpoint_of_j2() {
        // r(m(*)m(*)) is the vertex of J_2 that multiplies two map outputs.
        let c = corolla(CorollaKind::JRange, 2).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(c.canonical_form(), "r(m(*)m(*))");
    }

    #[test]
    fn corolla_rejects_out_of_range() {
        assert!(corolla(CorollaKind::K, 1).is_err());
        assert!(corolla(CorollaKind::JRange, 1).is_err());
        assert!(corolla(CorollaKind::JMap, 0).is_err());
        assert!(corolla(CorollaKind::JMap, 1).is_ok());
    }
}
