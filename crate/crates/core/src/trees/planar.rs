//! Planar rooted trees: faces of the associahedra.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::TreeError;

/// A node of a planar rooted tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum PlanarNode {
    Leaf,
    Internal(Vec<PlanarNode>),
}

impl PlanarNode {
    pub(crate) fn leaf_count(&self) -> usize {
        match self {
            PlanarNode::Leaf => 1,
            PlanarNode::Internal(children) => children.iter().map(Self::leaf_count).sum(),
        }
    }

    pub(crate) fn dimension(&self) -> usize {
        match self {
            PlanarNode::Leaf => 0,
            PlanarNode::Internal(children) => {
                (children.len() - 2) + children.iter().map(Self::dimension).sum::<usize>()
            }
        }
    }

    fn validate(&self) -> Result<(), TreeError> {
        match self {
            PlanarNode::Leaf => Ok(()),
            PlanarNode::Internal(children) => {
                if children.len() < 2 {
                    return Err(TreeError::ArityTooSmall {
                        arity: children.len(),
                        min: 2,
                    });
                }
                children.iter().try_for_each(Self::validate)
            }
        }
    }

    fn write_canonical(&self, out: &mut String) {
        match self {
            PlanarNode::Leaf => out.push('*'),
            PlanarNode::Internal(children) => {
                out.push('(');
                for c in children {
                    c.write_canonical(out);
                }
                out.push(')');
            }
        }
    }

    /// Replaces leaf `k` (1-based, left to right) by `sub`.
    pub(crate) fn graft(&self, k: usize, sub: &PlanarNode) -> PlanarNode {
        debug_assert!(1 <= k && k <= self.leaf_count());
        match self {
            PlanarNode::Leaf => sub.clone(),
            PlanarNode::Internal(children) => {
                let mut k = k;
                let mut out = Vec::with_capacity(children.len());
                let mut grafted = false;
                for c in children {
                    let lc = c.leaf_count();
                    if !grafted && k <= lc {
                        out.push(c.graft(k, sub));
                        grafted = true;
                    } else {
                        if !grafted {
                            k -= lc;
                        }
                        out.push(c.clone());
                    }
                }
                PlanarNode::Internal(out)
            }
        }
    }

    /// Deletes leaf `k`, smoothing any vertex that drops to arity 1.
    /// Returns `None` when the node itself is the deleted leaf.
    pub(crate) fn delete_leaf(&self, k: usize) -> Option<PlanarNode> {
        match self {
            PlanarNode::Leaf => {
                debug_assert_eq!(k, 1);
                None
            }
            PlanarNode::Internal(children) => {
                let mut k = k;
                let mut out = Vec::with_capacity(children.len());
                let mut hit = false;
                for c in children {
                    let lc = c.leaf_count();
                    if !hit && k <= lc {
                        if let Some(nc) = c.delete_leaf(k) {
                            out.push(nc);
                        }
                        hit = true;
                    } else {
                        if !hit {
                            k -= lc;
                        }
                        out.push(c.clone());
                    }
                }
                match out.len() {
                    1 => Some(out.pop().unwrap()),
                    _ => Some(PlanarNode::Internal(out)),
                }
            }
        }
    }

    /// Arity of the internal vertex whose child is leaf `k` (1-based).
    pub(crate) fn leaf_parent_arity(&self, k: usize) -> usize {
        fn go(node: &PlanarNode, k: usize, parent_arity: usize) -> usize {
            match node {
                PlanarNode::Leaf => parent_arity,
                PlanarNode::Internal(children) => {
                    let mut k = k;
                    for c in children {
                        let lc = c.leaf_count();
                        if k <= lc {
                            return go(c, k, children.len());
                        }
                        k -= lc;
                    }
                    unreachable!("leaf index within range")
                }
            }
        }
        debug_assert!(1 <= k && k <= self.leaf_count());
        go(self, k, 0)
    }

    /// All single edge contractions (each yields a face one dimension up).
    pub(crate) fn coarsenings(&self) -> Vec<PlanarNode> {
        let mut out = Vec::new();
        if let PlanarNode::Internal(children) = self {
            for (i, c) in children.iter().enumerate() {
                if let PlanarNode::Internal(grand) = c {
                    let mut merged = Vec::with_capacity(children.len() + grand.len() - 1);
                    merged.extend_from_slice(&children[..i]);
                    merged.extend_from_slice(grand);
                    merged.extend_from_slice(&children[i + 1..]);
                    out.push(PlanarNode::Internal(merged));
                }
                for sub in c.coarsenings() {
                    let mut kids = children.clone();
                    kids[i] = sub;
                    out.push(PlanarNode::Internal(kids));
                }
            }
        }
        out
    }

    fn parse(bytes: &[u8], pos: &mut usize) -> Result<PlanarNode, TreeError> {
        match bytes.get(*pos) {
            Some(b'*') => {
                *pos += 1;
                Ok(PlanarNode::Leaf)
            }
            Some(b'(') => {
                *pos += 1;
                let mut children = Vec::new();
                loop {
                    match bytes.get(*pos) {
                        Some(b')') => {
                            *pos += 1;
                            break;
                        }
                        Some(_) => children.push(Self::parse(bytes, pos)?),
                        None => {
                            return Err(TreeError::Parse {
                                at: *pos,
                                reason: "unclosed `(`".into(),
                            })
                        }
                    }
                }
                Ok(PlanarNode::Internal(children))
            }
            other => Err(TreeError::Parse {
                at: *pos,
                reason: format!("expected `*` or `(`, found {:?}", other.map(|b| *b as char)),
            }),
        }
    }
}

/// A face of an associahedron: a planar rooted tree whose internal
/// vertices have arity at least 2.
///
/// The single leaf (no internal vertex) is the trivial tree; it is not a
/// face of any `K_n` but acts as the identity for grafting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarTree {
    pub(crate) root: PlanarNode,
}

impl PlanarTree {
    /// The trivial tree: a single leaf, the identity graft.
    pub fn trivial() -> Self {
        PlanarTree {
            root: PlanarNode::Leaf,
        }
    }

    /// Single internal vertex of arity `n` (`n >= 2`): the top cell of `K_n`.
    pub fn corolla(n: usize) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::LeafCountOutOfRange { n, min: 2 });
        }
        Ok(PlanarTree {
            root: PlanarNode::Internal(vec![PlanarNode::Leaf; n]),
        })
    }

    pub(crate) fn from_node(root: PlanarNode) -> Result<Self, TreeError> {
        root.validate()?;
        Ok(PlanarTree { root })
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    /// Sum of (arity - 2) over internal vertices.
    pub fn dimension(&self) -> usize {
        self.root.dimension()
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.root, PlanarNode::Leaf)
    }

    /// True when every internal vertex has arity exactly 2, i.e. the tree
    /// is a vertex of its associahedron.
    pub fn is_binary(&self) -> bool {
        self.dimension() == 0 && !self.is_trivial()
    }

    /// Canonical serialization: preorder with parentheses, `*` for leaves.
    /// Injective on trees; equal trees produce equal strings.
    pub fn canonical_form(&self) -> String {
        let mut s = String::new();
        self.root.write_canonical(&mut s);
        s
    }

    /// Inverse of [`canonical_form`](Self::canonical_form).
    pub fn parse(input: &str) -> Result<Self, TreeError> {
        let bytes = input.as_bytes();
        let mut pos = 0;
        let root = PlanarNode::parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(TreeError::Parse {
                at: pos,
                reason: "trailing input".into(),
            });
        }
        Self::from_node(root)
    }

    /// Faces one dimension up whose closure contains this face
    /// (single edge contractions).
    pub fn coarsenings(&self) -> Vec<PlanarTree> {
        self.root
            .coarsenings()
            .into_iter()
            .map(|root| PlanarTree { root })
            .collect()
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_form())
    }
}

impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical_form())
    }
}

impl<'de> Deserialize<'de> for PlanarTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        PlanarTree::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_dimension_and_leaves() {
        let c = PlanarTree::corolla(5).unwrap();
        assert_eq!(c.leaf_count(), 5);
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.canonical_form(), "(*****)");
    }

    #[test]
    fn binary_trees_have_dimension_zero() {
        let t = PlanarTree::parse("((**)(**))").unwrap();
        assert_eq!(t.leaf_count(), 4);
        assert_eq!(t.dimension(), 0);
        assert!(t.is_binary());
    }

    #[test]
    fn canonical_form_is_deterministic() {
        let a = PlanarTree::corolla(2).unwrap();
        let b = PlanarTree::corolla(2).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn distinct_binary_trees_have_distinct_forms() {
        let left = PlanarTree::parse("((**)*)").unwrap();
        let right = PlanarTree::parse("(*(**))").unwrap();
        assert_ne!(left.canonical_form(), right.canonical_form());
    }

    #[test]
    fn parse_rejects_unary_vertices() {
        assert!(PlanarTree::parse("(*)").is_err());
        assert!(PlanarTree::parse("((*)*)").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(PlanarTree::parse("").is_err());
        assert!(PlanarTree::parse("(**").is_err());
        assert!(PlanarTree::parse("(**)x").is_err());
    }

    #[test]
    fn coarsenings_of_a_binary_tree() {
        // ((**)*) has one internal edge; contracting it gives the corolla.
        let t = PlanarTree::parse("((**)*)").unwrap();
        let ups = t.coarsenings();
        assert_eq!(ups.len(), 1);
        assert_eq!(ups[0].canonical_form(), "(***)");
    }
}
