//! Painted trees: faces of the multiplihedra.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::planar::PlanarNode;
use super::TreeError;

/// Color of an internal vertex of a painted tree.
///
/// Reading any leaf-to-root path, the colors appear as
/// `domain* map range*`: domain vertices (multiplications in the source)
/// sit above the single map vertex, range vertices (multiplications in
/// the target) below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Domain,
    Map,
    Range,
}

impl Color {
    fn tag(self) -> char {
        match self {
            Color::Domain => 'd',
            Color::Map => 'm',
            Color::Range => 'r',
        }
    }

    /// Minimal legal arity: map vertices may be unary, the others may not.
    fn min_arity(self) -> usize {
        match self {
            Color::Map => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum PaintedNode {
    Leaf,
    Internal(Color, Vec<PaintedNode>),
}

/// Classification used while checking the painting condition.
#[derive(PartialEq, Eq, Clone, Copy)]
enum Region {
    /// No map vertex on any path yet: a leaf or a pure-domain subtree.
    Pure,
    /// Every path through the subtree crosses exactly one map vertex.
    Complete,
}

impl PaintedNode {
    pub(crate) fn leaf_count(&self) -> usize {
        match self {
            PaintedNode::Leaf => 1,
            PaintedNode::Internal(_, children) => children.iter().map(Self::leaf_count).sum(),
        }
    }

    /// Domain and range vertices contribute (arity - 2), map vertices
    /// contribute (arity - 1).
    pub(crate) fn dimension(&self) -> usize {
        match self {
            PaintedNode::Leaf => 0,
            PaintedNode::Internal(color, children) => {
                let own = match color {
                    Color::Map => children.len() - 1,
                    _ => children.len() - 2,
                };
                own + children.iter().map(Self::dimension).sum::<usize>()
            }
        }
    }

    fn classify(&self) -> Result<Region, TreeError> {
        match self {
            PaintedNode::Leaf => Ok(Region::Pure),
            PaintedNode::Internal(color, children) => {
                if children.len() < color.min_arity() {
                    return Err(TreeError::ArityTooSmall {
                        arity: children.len(),
                        min: color.min_arity(),
                    });
                }
                let regions = children
                    .iter()
                    .map(Self::classify)
                    .collect::<Result<Vec<_>, _>>()?;
                match color {
                    Color::Domain if regions.iter().all(|r| *r == Region::Pure) => Ok(Region::Pure),
                    Color::Map if regions.iter().all(|r| *r == Region::Pure) => {
                        Ok(Region::Complete)
                    }
                    Color::Range if regions.iter().all(|r| *r == Region::Complete) => {
                        Ok(Region::Complete)
                    }
                    _ => Err(TreeError::PaintingViolation),
                }
            }
        }
    }

    fn validate_as_root(&self) -> Result<(), TreeError> {
        match self.classify()? {
            Region::Complete => Ok(()),
            Region::Pure => Err(TreeError::PaintingViolation),
        }
    }

    fn write_canonical(&self, out: &mut String) {
        match self {
            PaintedNode::Leaf => out.push('*'),
            PaintedNode::Internal(color, children) => {
                out.push(color.tag());
                out.push('(');
                for c in children {
                    c.write_canonical(out);
                }
                out.push(')');
            }
        }
    }

    pub(crate) fn graft(&self, k: usize, sub: &PaintedNode) -> PaintedNode {
        debug_assert!(1 <= k && k <= self.leaf_count());
        match self {
            PaintedNode::Leaf => sub.clone(),
            PaintedNode::Internal(color, children) => {
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
                PaintedNode::Internal(*color, out)
            }
        }
    }

    /// Single coarsening moves; each raises the dimension by exactly 1.
    ///
    /// The moves mirror the boundary structure of the multiplihedron:
    /// contracting a domain-domain, domain-map or range-range edge, and
    /// merging a range vertex whose children are all map vertices into a
    /// single map vertex.
    pub(crate) fn coarsenings(&self) -> Vec<PaintedNode> {
        let mut out = Vec::new();
        if let PaintedNode::Internal(color, children) = self {
            for (i, c) in children.iter().enumerate() {
                if let PaintedNode::Internal(ccolor, grand) = c {
                    let contractible = matches!(
                        (color, ccolor),
                        (Color::Domain, Color::Domain)
                            | (Color::Map, Color::Domain)
                            | (Color::Range, Color::Range)
                    );
                    if contractible {
                        let mut merged = Vec::with_capacity(children.len() + grand.len() - 1);
                        merged.extend_from_slice(&children[..i]);
                        merged.extend_from_slice(grand);
                        merged.extend_from_slice(&children[i + 1..]);
                        out.push(PaintedNode::Internal(*color, merged));
                    }
                }
                for sub in c.coarsenings() {
                    let mut kids = children.clone();
                    kids[i] = sub;
                    out.push(PaintedNode::Internal(*color, kids));
                }
            }
            if *color == Color::Range
                && children
                    .iter()
                    .all(|c| matches!(c, PaintedNode::Internal(Color::Map, _)))
            {
                let grand: Vec<PaintedNode> = children
                    .iter()
                    .flat_map(|c| match c {
                        PaintedNode::Internal(_, g) => g.clone(),
                        PaintedNode::Leaf => unreachable!(),
                    })
                    .collect();
                out.push(PaintedNode::Internal(Color::Map, grand));
            }
        }
        out
    }

    fn parse(bytes: &[u8], pos: &mut usize) -> Result<PaintedNode, TreeError> {
        let color = match bytes.get(*pos) {
            Some(b'*') => {
                *pos += 1;
                return Ok(PaintedNode::Leaf);
            }
            Some(b'd') => Color::Domain,
            Some(b'm') => Color::Map,
            Some(b'r') => Color::Range,
            other => {
                return Err(TreeError::Parse {
                    at: *pos,
                    reason: format!(
                        "expected `*`, `d`, `m` or `r`, found {:?}",
                        other.map(|b| *b as char)
                    ),
                })
            }
        };
        *pos += 1;
        if bytes.get(*pos) != Some(&b'(') {
            return Err(TreeError::Parse {
                at: *pos,
                reason: "expected `(` after color tag".into(),
            });
        }
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
        Ok(PaintedNode::Internal(color, children))
    }
}

/// Converts a planar tree into a pure-domain painted subtree.
pub(crate) fn paint_domain(node: &PlanarNode) -> PaintedNode {
    match node {
        PlanarNode::Leaf => PaintedNode::Leaf,
        PlanarNode::Internal(children) => {
            PaintedNode::Internal(Color::Domain, children.iter().map(paint_domain).collect())
        }
    }
}

/// Converts a planar tree into a range-colored painted subtree.
pub(crate) fn paint_range(node: &PlanarNode) -> PaintedNode {
    match node {
        PlanarNode::Leaf => PaintedNode::Leaf,
        PlanarNode::Internal(children) => {
            PaintedNode::Internal(Color::Range, children.iter().map(paint_range).collect())
        }
    }
}

/// A face of a multiplihedron: a painted planar tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaintedTree {
    pub(crate) root: PaintedNode,
}

impl PaintedTree {
    /// Single map vertex of arity `n` (`n >= 1`): the top cell of `J_n`.
    pub fn map_corolla(n: usize) -> Result<Self, TreeError> {
        if n < 1 {
            return Err(TreeError::LeafCountOutOfRange { n, min: 1 });
        }
        Ok(PaintedTree {
            root: PaintedNode::Internal(Color::Map, vec![PaintedNode::Leaf; n]),
        })
    }

    /// Range vertex of arity `n` (`n >= 2`) with a unary map vertex over
    /// each input: the facet of `J_n` that multiplies `n` map outputs.
    pub fn range_corolla(n: usize) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::LeafCountOutOfRange { n, min: 2 });
        }
        let unary_map = PaintedNode::Internal(Color::Map, vec![PaintedNode::Leaf]);
        Ok(PaintedTree {
            root: PaintedNode::Internal(Color::Range, vec![unary_map; n]),
        })
    }

    pub(crate) fn from_node(root: PaintedNode) -> Result<Self, TreeError> {
        root.validate_as_root()?;
        Ok(PaintedTree { root })
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    /// Sum of (arity - 2) over domain and range vertices plus
    /// (arity - 1) over map vertices.
    pub fn dimension(&self) -> usize {
        self.root.dimension()
    }

    /// Canonical serialization: preorder with `d(...)`, `m(...)`, `r(...)`
    /// for internal vertices and `*` for leaves.
    pub fn canonical_form(&self) -> String {
        let mut s = String::new();
        self.root.write_canonical(&mut s);
        s
    }

    /// Inverse of [`canonical_form`](Self::canonical_form).
    pub fn parse(input: &str) -> Result<Self, TreeError> {
        let bytes = input.as_bytes();
        let mut pos = 0;
        let root = PaintedNode::parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(TreeError::Parse {
                at: pos,
                reason: "trailing input".into(),
            });
        }
        Self::from_node(root)
    }

    /// Faces one dimension up whose closure contains this face.
    pub fn coarsenings(&self) -> Vec<PaintedTree> {
        self.root
            .coarsenings()
            .into_iter()
            .map(|root| PaintedTree { root })
            .collect()
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_form())
    }
}

impl Serialize for PaintedTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical_form())
    }
}

impl<'de> Deserialize<'de> for PaintedTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        PaintedTree::parse(&s).map_err(serde::de::Error::custom)
    }
}
