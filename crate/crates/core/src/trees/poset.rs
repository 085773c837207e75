//! Exhaustive face enumeration and the graded face poset.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use super::painted::{paint_domain, Color, PaintedNode, PaintedTree};
use super::planar::{PlanarNode, PlanarTree};
use super::{TreeError, TreeKind};

/// Bump when the JSON/binary face poset layout changes; stale caches are
/// invalidated by key.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` for which a full face poset is enumerated by default.
/// Face counts grow super-exponentially; this keeps runtimes desk-scale.
pub const DEFAULT_FULL_POSET_CAP: usize = 10;

/// Largest `n` for vertices-only enumeration.
pub const VERTEX_ONLY_CAP: usize = 12;

/// A face of either polytope family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Face {
    K(PlanarTree),
    J(PaintedTree),
}

impl Face {
    pub fn kind(&self) -> TreeKind {
        match self {
            Face::K(_) => TreeKind::K,
            Face::J(_) => TreeKind::J,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Face::K(t) => t.leaf_count(),
            Face::J(t) => t.leaf_count(),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Face::K(t) => t.dimension(),
            Face::J(t) => t.dimension(),
        }
    }

    pub fn canonical_form(&self) -> String {
        match self {
            Face::K(t) => t.canonical_form(),
            Face::J(t) => t.canonical_form(),
        }
    }

    pub fn parse(kind: TreeKind, input: &str) -> Result<Self, TreeError> {
        match kind {
            TreeKind::K => Ok(Face::K(PlanarTree::parse(input)?)),
            TreeKind::J => Ok(Face::J(PaintedTree::parse(input)?)),
        }
    }

    pub fn coarsenings(&self) -> Vec<Face> {
        match self {
            Face::K(t) => t.coarsenings().into_iter().map(Face::K).collect(),
            Face::J(t) => t.coarsenings().into_iter().map(Face::J).collect(),
        }
    }

    pub fn as_planar(&self) -> Option<&PlanarTree> {
        match self {
            Face::K(t) => Some(t),
            Face::J(_) => None,
        }
    }

    pub fn as_painted(&self) -> Option<&PaintedTree> {
        match self {
            Face::J(t) => Some(t),
            Face::K(_) => None,
        }
    }
}

impl std::fmt::Display for Face {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_form())
    }
}

/// Is the closure of `upper` a superset of the closure of `lower`?
///
/// Decided by walking coarsening moves from `lower`; each move raises the
/// dimension by 1, so the search is cut off at the dimension of `upper`.
pub fn face_leq(lower: &Face, upper: &Face) -> bool {
    if lower.leaf_count() != upper.leaf_count() || lower.kind() != upper.kind() {
        return false;
    }
    if lower.dimension() > upper.dimension() {
        return false;
    }
    let target = upper.canonical_form();
    let mut seen: HashSet<String> = HashSet::new();
    let mut frontier = vec![lower.clone()];
    seen.insert(lower.canonical_form());
    if seen.contains(&target) {
        return true;
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for face in frontier {
            for up in face.coarsenings() {
                if up.dimension() > upper.dimension() {
                    continue;
                }
                let form = up.canonical_form();
                if form == target {
                    return true;
                }
                if seen.insert(form) {
                    next.push(up);
                }
            }
        }
        frontier = next;
    }
    false
}

/// All ordered ways to write `total` as a sum of `parts` positive integers.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            acc.push(total);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for first in 1..=(total - parts + 1) {
            acc.push(first);
            go(total - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Pushes every choice of one element per list into `sink`.
fn for_each_product<T: Clone>(lists: &[Rc<Vec<T>>], sink: &mut impl FnMut(Vec<T>)) {
    let mut idx = vec![0usize; lists.len()];
    loop {
        let choice: Vec<T> = lists
            .iter()
            .zip(&idx)
            .map(|(list, &i)| list[i].clone())
            .collect();
        sink(choice);
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[derive(Default)]
struct Enumerator {
    k_memo: HashMap<usize, Rc<Vec<PlanarNode>>>,
    j_memo: HashMap<usize, Rc<Vec<PaintedNode>>>,
}

impl Enumerator {
    /// All planar trees with `n` leaves (internal arity >= 2); for `n = 1`
    /// the single leaf, used as a grafting slot by the painted enumeration.
    fn k_nodes(&mut self, n: usize) -> Rc<Vec<PlanarNode>> {
        if let Some(v) = self.k_memo.get(&n) {
            return Rc::clone(v);
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push(PlanarNode::Leaf);
        } else {
            for arity in 2..=n {
                for comp in compositions(n, arity) {
                    let lists: Vec<_> = comp.iter().map(|&c| self.k_nodes(c)).collect();
                    for_each_product(&lists, &mut |children| {
                        out.push(PlanarNode::Internal(children));
                    });
                }
            }
        }
        let rc = Rc::new(out);
        self.k_memo.insert(n, Rc::clone(&rc));
        rc
    }

    /// All painted trees with `n` leaves.
    fn j_nodes(&mut self, n: usize) -> Rc<Vec<PaintedNode>> {
        if let Some(v) = self.j_memo.get(&n) {
            return Rc::clone(v);
        }
        let mut out = Vec::new();
        // map root: children are pure-domain subtrees
        for arity in 1..=n {
            for comp in compositions(n, arity) {
                let lists: Vec<_> = comp.iter().map(|&c| self.k_nodes(c)).collect();
                for_each_product(&lists, &mut |children| {
                    let painted = children.iter().map(paint_domain).collect();
                    out.push(PaintedNode::Internal(Color::Map, painted));
                });
            }
        }
        // range root: children are painted trees
        for arity in 2..=n {
            for comp in compositions(n, arity) {
                let lists: Vec<_> = comp.iter().map(|&c| self.j_nodes(c)).collect();
                for_each_product(&lists, &mut |children| {
                    out.push(PaintedNode::Internal(Color::Range, children));
                });
            }
        }
        let rc = Rc::new(out);
        self.j_memo.insert(n, Rc::clone(&rc));
        rc
    }

}

/// Binary planar trees with `n` leaves (`n = 1` gives the single leaf).
fn binary_nodes(n: usize, memo: &mut HashMap<usize, Rc<Vec<PlanarNode>>>) -> Rc<Vec<PlanarNode>> {
    if let Some(v) = memo.get(&n) {
        return Rc::clone(v);
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(PlanarNode::Leaf);
    } else {
        for left in 1..n {
            let ls = binary_nodes(left, memo);
            let rs = binary_nodes(n - left, memo);
            for l in ls.iter() {
                for r in rs.iter() {
                    out.push(PlanarNode::Internal(vec![l.clone(), r.clone()]));
                }
            }
        }
    }
    let rc = Rc::new(out);
    memo.insert(n, Rc::clone(&rc));
    rc
}

/// Painted trees with binary domain/range vertices and unary map vertices
/// (the vertices of `J_n`).
fn painted_vertex_nodes(
    n: usize,
    kmemo: &mut HashMap<usize, Rc<Vec<PlanarNode>>>,
    jmemo: &mut HashMap<usize, Rc<Vec<PaintedNode>>>,
) -> Rc<Vec<PaintedNode>> {
    if let Some(v) = jmemo.get(&n) {
        return Rc::clone(v);
    }
    let mut out = Vec::new();
    // unary map root over a binary domain tree (or a single leaf)
    for d in binary_nodes(n, kmemo).iter() {
        out.push(PaintedNode::Internal(Color::Map, vec![paint_domain(d)]));
    }
    // binary range root
    for left in 1..n {
        let ls = painted_vertex_nodes(left, kmemo, jmemo);
        let rs = painted_vertex_nodes(n - left, kmemo, jmemo);
        for l in ls.iter() {
            for r in rs.iter() {
                out.push(PaintedNode::Internal(
                    Color::Range,
                    vec![l.clone(), r.clone()],
                ));
            }
        }
    }
    let rc = Rc::new(out);
    jmemo.insert(n, Rc::clone(&rc));
    rc
}

fn min_leaves(kind: TreeKind) -> usize {
    match kind {
        TreeKind::K => 2,
        TreeKind::J => 1,
    }
}

/// All faces of `K_n` or `J_n`, graded by dimension and sorted by
/// canonical form within each dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePoset {
    kind: TreeKind,
    n: usize,
    by_dim: Vec<Vec<Face>>,
}

impl FacePoset {
    /// Enumerates the full face poset under the default cap.
    pub fn build(kind: TreeKind, n: usize) -> Result<Self, TreeError> {
        Self::build_with_cap(kind, n, DEFAULT_FULL_POSET_CAP)
    }

    pub fn build_with_cap(kind: TreeKind, n: usize, cap: usize) -> Result<Self, TreeError> {
        if n < min_leaves(kind) {
            return Err(TreeError::LeafCountOutOfRange {
                n,
                min: min_leaves(kind),
            });
        }
        if n > cap {
            return Err(TreeError::CapExceeded { n, cap });
        }
        let mut en = Enumerator::default();
        let faces: Vec<Face> = match kind {
            TreeKind::K => en
                .k_nodes(n)
                .iter()
                .filter(|node| !matches!(node, PlanarNode::Leaf))
                .map(|node| Face::K(PlanarTree { root: node.clone() }))
                .collect(),
            TreeKind::J => en
                .j_nodes(n)
                .iter()
                .map(|node| Face::J(PaintedTree { root: node.clone() }))
                .collect(),
        };
        Self::from_faces(kind, n, faces)
    }

    fn from_faces(kind: TreeKind, n: usize, faces: Vec<Face>) -> Result<Self, TreeError> {
        let top_dim = match kind {
            TreeKind::K => n - 2,
            TreeKind::J => n - 1,
        };
        let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); top_dim + 1];
        let mut seen = HashSet::with_capacity(faces.len());
        for face in faces {
            if face.leaf_count() != n {
                return Err(TreeError::CorruptDocument(format!(
                    "face `{face}` has {} leaves, expected {n}",
                    face.leaf_count()
                )));
            }
            if !seen.insert(face.canonical_form()) {
                return Err(TreeError::CorruptDocument(format!("duplicate face `{face}`")));
            }
            let d = face.dimension();
            if d > top_dim {
                return Err(TreeError::CorruptDocument(format!(
                    "face `{face}` has dimension {d} above the top dimension {top_dim}"
                )));
            }
            by_dim[d].push(face);
        }
        for level in &mut by_dim {
            level.sort_by_cached_key(|f| f.canonical_form());
        }
        if by_dim[top_dim].len() != 1 {
            return Err(TreeError::CorruptDocument(format!(
                "{} faces of top dimension {top_dim}, expected exactly 1",
                by_dim[top_dim].len()
            )));
        }
        Ok(FacePoset { kind, n, by_dim })
    }

    pub fn kind(&self) -> TreeKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_dimension(&self) -> usize {
        self.by_dim.len() - 1
    }

    pub fn top_face(&self) -> &Face {
        &self.by_dim[self.top_dimension()][0]
    }

    pub fn faces_of_dim(&self, dim: usize) -> &[Face] {
        self.by_dim.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Codimension-1 faces.
    pub fn facets(&self) -> &[Face] {
        if self.top_dimension() == 0 {
            &[]
        } else {
            self.faces_of_dim(self.top_dimension() - 1)
        }
    }

    pub fn vertices(&self) -> &[Face] {
        self.faces_of_dim(0)
    }

    /// All faces in (dimension, canonical form) order.
    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.by_dim.iter().flatten()
    }

    pub fn total_faces(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: &Face) -> bool {
        let d = face.dimension();
        self.faces_of_dim(d)
            .binary_search_by_key(&face.canonical_form(), |f| f.canonical_form())
            .is_ok()
    }

    /// The facets whose closure contains `face`.
    pub fn facets_containing(&self, face: &Face) -> Vec<&Face> {
        self.facets()
            .iter()
            .filter(|facet| face_leq(face, facet))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PosetDoc::from(self)).expect("poset document serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, TreeError> {
        let doc: PosetDoc = serde_json::from_value(value.clone())
            .map_err(|e| TreeError::CorruptDocument(e.to_string()))?;
        doc.try_into()
    }

    /// Compact binary cache image. Layout:
    /// magic `ANPF`, u32 schema version, u8 kind, u32 n, u32 face count,
    /// then per face (in poset order) a u32 length and the canonical bytes.
    pub fn to_binary(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(b"ANPF");
        out.extend_from_slice(&SCHEMA_VERSION.to_le_bytes());
        out.push(match self.kind {
            TreeKind::K => 0,
            TreeKind::J => 1,
        });
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        out.extend_from_slice(&(self.total_faces() as u32).to_le_bytes());
        for face in self.faces() {
            let form = face.canonical_form();
            out.extend_from_slice(&(form.len() as u32).to_le_bytes());
            out.extend_from_slice(form.as_bytes());
        }
        out
    }

    pub fn from_binary(bytes: &[u8]) -> Result<Self, TreeError> {
        let corrupt = |msg: &str| TreeError::CorruptDocument(msg.to_string());
        let mut pos = 0usize;
        let take = |pos: &mut usize, len: usize| -> Result<&[u8], TreeError> {
            let end = pos.checked_add(len).ok_or_else(|| corrupt("overflow"))?;
            if end > bytes.len() {
                return Err(corrupt("truncated"));
            }
            let slice = &bytes[*pos..end];
            *pos = end;
            Ok(slice)
        };
        let read_u32 = |pos: &mut usize| -> Result<u32, TreeError> {
            let b = take(pos, 4)?;
            Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
        };
        if take(&mut pos, 4)? != b"ANPF" {
            return Err(corrupt("bad magic"));
        }
        if read_u32(&mut pos)? != SCHEMA_VERSION {
            return Err(corrupt("schema version mismatch"));
        }
        let kind = match take(&mut pos, 1)?[0] {
            0 => TreeKind::K,
            1 => TreeKind::J,
            _ => return Err(corrupt("bad kind byte")),
        };
        let n = read_u32(&mut pos)? as usize;
        let count = read_u32(&mut pos)? as usize;
        let mut faces = Vec::with_capacity(count);
        for _ in 0..count {
            let len = read_u32(&mut pos)? as usize;
            let raw = take(&mut pos, len)?;
            let s = std::str::from_utf8(raw).map_err(|_| corrupt("non-utf8 face"))?;
            faces.push(Face::parse(kind, s)?);
        }
        if pos != bytes.len() {
            return Err(corrupt("trailing bytes"));
        }
        Self::from_faces(kind, n, faces)
    }
}

#[derive(Serialize, Deserialize)]
struct FaceDoc {
    dim: usize,
    tree: String,
}

#[derive(Serialize, Deserialize)]
struct PosetDoc {
    schema_version: u32,
    kind: TreeKind,
    n: usize,
    f_vector: Vec<usize>,
    faces: Vec<FaceDoc>,
}

impl From<&FacePoset> for PosetDoc {
    fn from(p: &FacePoset) -> Self {
        PosetDoc {
            schema_version: SCHEMA_VERSION,
            kind: p.kind,
            n: p.n,
            f_vector: p.f_vector(),
            faces: p
                .faces()
                .map(|f| FaceDoc {
                    dim: f.dimension(),
                    tree: f.canonical_form(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PosetDoc> for FacePoset {
    type Error = TreeError;

    fn try_from(doc: PosetDoc) -> Result<Self, TreeError> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(TreeError::CorruptDocument(format!(
                "schema version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        let mut faces = Vec::with_capacity(doc.faces.len());
        for fd in &doc.faces {
            let face = Face::parse(doc.kind, &fd.tree)?;
            if face.dimension() != fd.dim {
                return Err(TreeError::CorruptDocument(format!(
                    "face `{}` labeled dim {} but has dim {}",
                    fd.tree,
                    fd.dim,
                    face.dimension()
                )));
            }
            faces.push(face);
        }
        let poset = Self::from_faces(doc.kind, doc.n, faces)?;
        if poset.f_vector() != doc.f_vector {
            return Err(TreeError::CorruptDocument("f-vector mismatch".into()));
        }
        Ok(poset)
    }
}

/// Duplicate-free, deterministically ordered list of faces, restricted to
/// one dimension when `dim` is given. Vertices-only requests bypass the
/// full-poset cap.
pub fn enumerate_faces(
    kind: TreeKind,
    n: usize,
    dim: Option<usize>,
) -> Result<Vec<Face>, TreeError> {
    if dim == Some(0) {
        return enumerate_vertices(kind, n);
    }
    let poset = FacePoset::build(kind, n)?;
    match dim {
        None => Ok(poset.faces().cloned().collect()),
        Some(d) => Ok(poset.faces_of_dim(d).to_vec()),
    }
}

/// The dimension-0 faces of `K_n` (binary trees) or `J_n` (painted trees
/// with binary domain/range vertices and unary map vertices).
pub fn enumerate_vertices(kind: TreeKind, n: usize) -> Result<Vec<Face>, TreeError> {
    if n < min_leaves(kind) {
        return Err(TreeError::LeafCountOutOfRange {
            n,
            min: min_leaves(kind),
        });
    }
    if n > VERTEX_ONLY_CAP {
        return Err(TreeError::CapExceeded {
            n,
            cap: VERTEX_ONLY_CAP,
        });
    }
    let mut kmemo = HashMap::new();
    let mut faces: Vec<Face> = match kind {
        TreeKind::K => binary_nodes(n, &mut kmemo)
            .iter()
            .filter(|node| !matches!(node, PlanarNode::Leaf))
            .map(|node| Face::K(PlanarTree { root: node.clone() }))
            .collect(),
        TreeKind::J => painted_vertex_nodes(n, &mut kmemo, &mut HashMap::new())
            .iter()
            .map(|node| Face::J(PaintedTree { root: node.clone() }))
            .collect(),
    };
    faces.sort_by_cached_key(|f| f.canonical_form());
    Ok(faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_f_vector() {
        let p = FacePoset::build(TreeKind::K, 3).unwrap();
        assert_eq!(p.f_vector(), vec![2, 1]);
    }

    #[test]
    fn k4_f_vector() {
        let p = FacePoset::build(TreeKind::K, 4).unwrap();
        assert_eq!(p.f_vector(), vec![5, 5, 1]);
        assert_eq!(p.total_faces(), 11);
    }

    #[test]
    fn j3_f_vector_is_the_hexagon() {
        let p = FacePoset::build(TreeKind::J, 3).unwrap();
        assert_eq!(p.f_vector(), vec![6, 6, 1]);
    }

    #[test]
    fn k5_has_catalan_many_vertices() {
        let vs = enumerate_vertices(TreeKind::K, 5).unwrap();
        assert_eq!(vs.len(), 14);
    }

    #[test]
    fn vertex_fast_path_agrees_with_full_enumeration() {
        for n in 2..=6 {
            let fast = enumerate_vertices(TreeKind::K, n).unwrap();
            let full = enumerate_faces(TreeKind::K, n, None).unwrap();
            let slow: Vec<&Face> = full.iter().filter(|f| f.dimension() == 0).collect();
            assert_eq!(fast.len(), slow.len());
            for (a, b) in fast.iter().zip(slow) {
                assert_eq!(a.canonical_form(), b.canonical_form());
            }
        }
        for n in 1..=5 {
            let fast = enumerate_vertices(TreeKind::J, n).unwrap();
            let poset = FacePoset::build(TreeKind::J, n).unwrap();
            assert_eq!(fast.len(), poset.vertices().len());
            for (a, b) in fast.iter().zip(poset.vertices()) {
                assert_eq!(a.canonical_form(), b.canonical_form());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FacePoset::build_with_cap(TreeKind::K, 9, 8),
            Err(TreeError::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_round_trip_over_k4() {
        for face in FacePoset::build(TreeKind::K, 4).unwrap().faces() {
            let back = Face::parse(TreeKind::K, &face.canonical_form()).unwrap();
            assert_eq!(&back, face);
        }
    }

    #[test]
    fn json_round_trip() {
        let p = FacePoset::build(TreeKind::J, 3).unwrap();
        let doc = p.to_json();
        assert_eq!(doc["schema_version"], SCHEMA_VERSION);
        let q = FacePoset::from_json(&doc).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn binary_round_trip() {
        for (kind, n) in [(TreeKind::K, 5), (TreeKind::J, 4)] {
            let p = FacePoset::build(kind, n).unwrap();
            let q = FacePoset::from_binary(&p.to_binary()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn binary_rejects_corruption() {
        let p = FacePoset::build(TreeKind::K, 4).unwrap();
        let mut bytes = p.to_binary();
        bytes[0] = b'X';
        assert!(FacePoset::from_binary(&bytes).is_err());
        let mut bytes = p.to_binary();
        bytes.truncate(bytes.len() - 3);
        assert!(FacePoset::from_binary(&bytes).is_err());
    }

    #[test]
    fn face_order_is_by_canonical_form() {
        let p = FacePoset::build(TreeKind::K, 5).unwrap();
        for level in 0..=p.top_dimension() {
            let forms: Vec<String> = p
                .faces_of_dim(level)
                .iter()
                .map(|f| f.canonical_form())
                .collect();
            let mut sorted = forms.clone();
            sorted.sort();
            assert_eq!(forms, sorted);
        }
    }

    #[test]
    fn facet_incidence_on_2_polytopes() {
        // on a polygon every vertex lies in exactly two facets, every
        // facet in itself alone, and the top cell in none
        for (kind, n) in [(TreeKind::K, 4), (TreeKind::J, 3)] {
            let p = FacePoset::build(kind, n).unwrap();
            for v in p.vertices() {
                assert_eq!(p.facets_containing(v).len(), 2, "{v}");
            }
            for f in p.facets() {
                let up = p.facets_containing(f);
                assert_eq!(up.len(), 1);
                assert_eq!(up[0], f);
            }
            assert!(p.facets_containing(p.top_face()).is_empty());
        }
    }

    #[test]
    fn face_leq_on_k4() {
        let vertex = Face::parse(TreeKind::K, "(((**)*)*)").unwrap();
        let facet = Face::parse(TreeKind::K, "((***)*)").unwrap();
        let top = Face::parse(TreeKind::K, "(****)").unwrap();
        assert!(face_leq(&vertex, &facet));
        assert!(face_leq(&vertex, &top));
        assert!(face_leq(&facet, &top));
        assert!(!face_leq(&facet, &vertex));
        let other_facet = Face::parse(TreeKind::K, "(*(***))").unwrap();
        assert!(!face_leq(&vertex, &other_facet));
    }
}
