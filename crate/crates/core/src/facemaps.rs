//! Boundary and degeneracy maps between faces, the color-forgetting
//! projection, and an exhaustive verification harness.
//!
//! The five map families, all total functions on faces:
//!
//! * `boundary_k(k, r, s)`: `K_r x K_s -> K_{r+s-1}`, grafting the second
//!   tree onto leaf `k` of the first.
//! * `degeneracy_k(k)`: `K_i -> K_{i-1}`, deleting leaf `k` and smoothing.
//! * `boundary_j_lower(k, r, s)`: `J_r x K_s -> J_{r+s-1}`, grafting a
//!   domain-colored tree onto leaf `k` of a painted tree.
//! * `boundary_j_upper(t; r_1..r_t)`: `K_t x J_{r_1} x .. x J_{r_t} ->
//!   J_{r_1+..+r_t}`, coloring the planar tree range and grafting painted
//!   trees onto its leaves.
//! * `degeneracy_j(k)`: `J_i -> J_{i-1}`, deleting leaf `k` with a
//!   confluent smoothing cascade.
//!
//! `projection_pi` forgets the painting (smoothing unary map vertices) and
//! `composite_d` grafts a tuple of planar trees onto a planar tree; the
//! harness checks the compatibility identities tying all of these together.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::trees::painted::{paint_domain, paint_range, Color, PaintedNode};
use crate::trees::planar::PlanarNode;
use crate::trees::poset::compositions;
use crate::trees::{Face, FacePoset, PaintedTree, PlanarTree, TreeError, TreeKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceMapError {
    #[error("leaf index {k} out of range 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("leaf count mismatch: stated {stated}, tree has {actual}")]
    LeafCountMismatch { stated: usize, actual: usize },
    #[error("{what} requires at least {min} leaves, got {got}")]
    TooFewLeaves {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("argument list has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn expect_leaves(stated: usize, tree_leaves: usize) -> Result<(), FaceMapError> {
    if stated != tree_leaves {
        return Err(FaceMapError::LeafCountMismatch {
            stated,
            actual: tree_leaves,
        });
    }
    Ok(())
}

fn expect_index(k: usize, max: usize) -> Result<(), FaceMapError> {
    if k < 1 || k > max {
        return Err(FaceMapError::IndexOutOfRange { k, max });
    }
    Ok(())
}

/// Grafts `t2` onto leaf `k` of `t1`: the boundary inclusion
/// `K_r x K_s -> K_{r+s-1}`. Requires `r, s >= 2`.
pub fn boundary_k(
    k: usize,
    r: usize,
    s: usize,
    t1: &PlanarTree,
    t2: &PlanarTree,
) -> Result<PlanarTree, FaceMapError> {
    if r < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "boundary_k first factor",
            min: 2,
            got: r,
        });
    }
    if s < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "boundary_k second factor",
            min: 2,
            got: s,
        });
    }
    expect_leaves(r, t1.leaf_count())?;
    expect_leaves(s, t2.leaf_count())?;
    expect_index(k, r)?;
    Ok(PlanarTree {
        root: t1.root.graft(k, &t2.root),
    })
}

/// Deletes leaf `k` and smooths any vertex left with a single child:
/// the degeneracy `K_i -> K_{i-1}`. Requires `i >= 3`.
pub fn degeneracy_k(k: usize, t: &PlanarTree) -> Result<PlanarTree, FaceMapError> {
    let i = t.leaf_count();
    if i < 3 {
        return Err(FaceMapError::TooFewLeaves {
            what: "degeneracy_k",
            min: 3,
            got: i,
        });
    }
    expect_index(k, i)?;
    let root = t.root.delete_leaf(k).expect("tree keeps at least 2 leaves");
    Ok(PlanarTree { root })
}

/// Grafts `tk`, colored domain, onto leaf `k` of the painted tree `tj`:
/// the boundary inclusion `J_r x K_s -> J_{r+s-1}`. Requires `r >= 1`,
/// `s >= 2`.
pub fn boundary_j_lower(
    k: usize,
    r: usize,
    s: usize,
    tj: &PaintedTree,
    tk: &PlanarTree,
) -> Result<PaintedTree, FaceMapError> {
    if s < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "boundary_j_lower planar factor",
            min: 2,
            got: s,
        });
    }
    expect_leaves(r, tj.leaf_count())?;
    expect_leaves(s, tk.leaf_count())?;
    expect_index(k, r)?;
    let root = tj.root.graft(k, &paint_domain(&tk.root));
    Ok(PaintedTree::from_node(root).expect("domain grafting preserves the painting"))
}

/// Colors `tk` range and grafts `tjs[j]` onto its `j`-th leaf: the
/// boundary inclusion `K_t x J_{r_1} x .. x J_{r_t} -> J_{r_1+..+r_t}`.
/// Requires `t >= 2`.
pub fn boundary_j_upper(
    t: usize,
    rs: &[usize],
    tk: &PlanarTree,
    tjs: &[PaintedTree],
) -> Result<PaintedTree, FaceMapError> {
    if t < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "boundary_j_upper planar factor",
            min: 2,
            got: t,
        });
    }
    expect_leaves(t, tk.leaf_count())?;
    if rs.len() != t {
        return Err(FaceMapError::LengthMismatch {
            got: rs.len(),
            expected: t,
        });
    }
    if tjs.len() != t {
        return Err(FaceMapError::LengthMismatch {
            got: tjs.len(),
            expected: t,
        });
    }
    for (r, tj) in rs.iter().zip(tjs) {
        expect_leaves(*r, tj.leaf_count())?;
    }
    let mut root = paint_range(&tk.root);
    for j in (1..=t).rev() {
        root = root.graft(j, &tjs[j - 1].root);
    }
    Ok(PaintedTree::from_node(root).expect("range grafting preserves the painting"))
}

/// Order in which the smoothing cascade of [`degeneracy_j`] resolves
/// violations. The cascade is confluent; the alternative order exists so
/// tests can verify that instead of assuming it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeStrategy {
    /// Fix the deepest violation first, leftmost on ties (the default).
    InnermostLeftmost,
    /// Fix the shallowest violation first, rightmost on ties.
    OutermostRightmost,
}

/// Deletes leaf `k` of a painted tree and cascades to validity: vertices
/// of arity 1 that are not map vertices are smoothed, map vertices of
/// arity 0 are deleted (decrementing the parent arity, which may cascade
/// further). The degeneracy `J_i -> J_{i-1}`, `i >= 2`.
pub fn degeneracy_j(k: usize, t: &PaintedTree) -> Result<PaintedTree, FaceMapError> {
    degeneracy_j_with_strategy(k, t, CascadeStrategy::InnermostLeftmost)
}

pub fn degeneracy_j_with_strategy(
    k: usize,
    t: &PaintedTree,
    strategy: CascadeStrategy,
) -> Result<PaintedTree, FaceMapError> {
    let i = t.leaf_count();
    if i < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "degeneracy_j",
            min: 2,
            got: i,
        });
    }
    expect_index(k, i)?;
    let root = match strategy {
        CascadeStrategy::InnermostLeftmost => delete_leaf_cascading(&t.root, k)
            .expect("tree keeps at least one leaf"),
        CascadeStrategy::OutermostRightmost => {
            let mut node = delete_leaf_raw(&t.root, k).expect("tree keeps at least one leaf");
            while let Some(fixed) = fix_one_outermost_rightmost(&node) {
                node = fixed;
            }
            node
        }
    };
    Ok(PaintedTree::from_node(root).expect("cascade restores validity"))
}

/// Deletion with the default cascade folded into the bottom-up return
/// path: the recursion fixes the innermost violation first.
fn delete_leaf_cascading(node: &PaintedNode, k: usize) -> Option<PaintedNode> {
    match node {
        PaintedNode::Leaf => {
            debug_assert_eq!(k, 1);
            None
        }
        PaintedNode::Internal(color, children) => {
            let mut k = k;
            let mut out = Vec::with_capacity(children.len());
            let mut hit = false;
            for c in children {
                let lc = c.leaf_count();
                if !hit && k <= lc {
                    if let Some(nc) = delete_leaf_cascading(c, k) {
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
            match (color, out.len()) {
                (Color::Map, 0) => None,
                (Color::Domain | Color::Range, 1) => Some(out.pop().unwrap()),
                _ => Some(PaintedNode::Internal(*color, out)),
            }
        }
    }
}

/// Deletes the leaf without smoothing; the intermediate tree may carry
/// arity violations for the cascade to fix.
fn delete_leaf_raw(node: &PaintedNode, k: usize) -> Option<PaintedNode> {
    match node {
        PaintedNode::Leaf => {
            debug_assert_eq!(k, 1);
            None
        }
        PaintedNode::Internal(color, children) => {
            let mut k = k;
            let mut out = Vec::with_capacity(children.len());
            let mut hit = false;
            for c in children {
                let lc = c.leaf_count();
                if !hit && k <= lc {
                    if let Some(nc) = delete_leaf_raw(c, k) {
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
            Some(PaintedNode::Internal(*color, out))
        }
    }
}

/// Applies one cascade fix, scanning outermost-first and rightmost-first.
fn fix_one_outermost_rightmost(node: &PaintedNode) -> Option<PaintedNode> {
    let PaintedNode::Internal(color, children) = node else {
        return None;
    };
    if *color != Color::Map && children.len() == 1 {
        return Some(children[0].clone());
    }
    for i in (0..children.len()).rev() {
        if matches!(&children[i], PaintedNode::Internal(Color::Map, c) if c.is_empty()) {
            let mut kids = children.clone();
            kids.remove(i);
            return Some(PaintedNode::Internal(*color, kids));
        }
    }
    for i in (0..children.len()).rev() {
        if let Some(fixed) = fix_one_outermost_rightmost(&children[i]) {
            let mut kids = children.clone();
            kids[i] = fixed;
            return Some(PaintedNode::Internal(*color, kids));
        }
    }
    None
}

/// Forgets the painting: colors are erased and the resulting unary
/// vertices (exactly the unary map vertices) are smoothed.
/// `J_i -> K_i` for `i >= 2`.
pub fn projection_pi(t: &PaintedTree) -> Result<PlanarTree, FaceMapError> {
    let i = t.leaf_count();
    if i < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "projection_pi",
            min: 2,
            got: i,
        });
    }
    Ok(PlanarTree {
        root: decolor_smooth(&t.root),
    })
}

fn decolor_smooth(node: &PaintedNode) -> PlanarNode {
    match node {
        PaintedNode::Leaf => PlanarNode::Leaf,
        PaintedNode::Internal(Color::Map, children) if children.len() == 1 => {
            decolor_smooth(&children[0])
        }
        PaintedNode::Internal(_, children) => {
            PlanarNode::Internal(children.iter().map(decolor_smooth).collect())
        }
    }
}

/// Grafts `rhos[j]` onto leaf `j` of `tk` for all `j` at once. A 1-leaf
/// entry is the trivial tree and grafts as the identity, so the composite
/// collapses to iterated `boundary_k` on the non-trivial entries.
pub fn composite_d(tk: &PlanarTree, rhos: &[PlanarTree]) -> Result<PlanarTree, FaceMapError> {
    let t = tk.leaf_count();
    if t < 2 {
        return Err(FaceMapError::TooFewLeaves {
            what: "composite_d",
            min: 2,
            got: t,
        });
    }
    if rhos.len() != t {
        return Err(FaceMapError::LengthMismatch {
            got: rhos.len(),
            expected: t,
        });
    }
    let mut root = tk.root.clone();
    for j in (1..=t).rev() {
        root = root.graft(j, &rhos[j - 1].root);
    }
    Ok(PlanarTree { root })
}

/// One failed check: the inputs and the two sides that disagreed.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a verification battery. `failures` is empty exactly when
/// `checks_passed == instances`.
#[derive(Debug, Clone, Serialize)]
pub struct FaceMapReport {
    pub map_name: String,
    pub n_max: usize,
    pub instances: u64,
    pub checks_passed: u64,
    pub failures: Vec<Failure>,
}

impl FaceMapReport {
    fn new(map_name: impl Into<String>, n_max: usize) -> Self {
        FaceMapReport {
            map_name: map_name.into(),
            n_max,
            instances: 0,
            checks_passed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `detail` is only evaluated on failure.
    fn record(
        &mut self,
        ok: bool,
        check: &str,
        detail: impl FnOnce() -> (String, String, String),
    ) {
        self.instances += 1;
        if ok {
            self.checks_passed += 1;
        } else {
            let (inputs, expected, got) = detail();
            self.failures.push(Failure {
                check: check.to_string(),
                inputs,
                expected,
                got,
            });
        }
    }
}

struct Posets {
    k: HashMap<usize, FacePoset>,
    j: HashMap<usize, FacePoset>,
    k_forms: HashMap<usize, HashSet<String>>,
    j_forms: HashMap<usize, HashSet<String>>,
}

impl Posets {
    fn build(k_max: usize, j_max: usize) -> Result<Self, TreeError> {
        let mut posets = Posets {
            k: HashMap::new(),
            j: HashMap::new(),
            k_forms: HashMap::new(),
            j_forms: HashMap::new(),
        };
        for n in 2..=k_max {
            let p = FacePoset::build(TreeKind::K, n)?;
            posets
                .k_forms
                .insert(n, p.faces().map(Face::canonical_form).collect());
            posets.k.insert(n, p);
        }
        for n in 1..=j_max {
            let p = FacePoset::build(TreeKind::J, n)?;
            posets
                .j_forms
                .insert(n, p.faces().map(Face::canonical_form).collect());
            posets.j.insert(n, p);
        }
        Ok(posets)
    }

    fn k_faces(&self, n: usize) -> impl Iterator<Item = &PlanarTree> {
        self.k[&n].faces().map(|f| f.as_planar().unwrap())
    }

    fn j_faces(&self, n: usize) -> impl Iterator<Item = &PaintedTree> {
        self.j[&n].faces().map(|f| f.as_painted().unwrap())
    }
}

/// Exhaustively checks, over all faces with at most `n_max` leaves:
/// grafting associativity, image validity and dimension bookkeeping of
/// every map family, facet coverage, cascade confluence, and the
/// projection compatibility identities. Failures are reported, not thrown.
pub fn verify_relations(kind: TreeKind, n_max: usize) -> Result<FaceMapReport, TreeError> {
    match kind {
        TreeKind::K => verify_k_relations(n_max),
        TreeKind::J => verify_j_relations(n_max),
    }
}

fn verify_k_relations(n_max: usize) -> Result<FaceMapReport, TreeError> {
    let posets = Posets::build(n_max, 0)?;
    let mut rep = FaceMapReport::new("K-relations", n_max);

    // boundary bookkeeping: validity, leaf count, dimension additivity,
    // and membership of the image in the enumerated face set
    for m in 3..=n_max {
        for r in 2..=(m - 1) {
            let s = m + 1 - r;
            for rho in posets.k_faces(r) {
                for sigma in posets.k_faces(s) {
                    for k in 1..=r {
                        let res = boundary_k(k, r, s, rho, sigma).expect("valid instance");
                        let ok = res.leaf_count() == m
                            && res.dimension() == rho.dimension() + sigma.dimension()
                            && posets.k_forms[&m].contains(&res.canonical_form());
                        rep.record(ok, "boundary_k bookkeeping", || {
                            (
                                format!("k={k} r={r} s={s} rho={rho} sigma={sigma}"),
                                format!("face of K_{m} with additive dimension"),
                                res.canonical_form(),
                            )
                        });
                    }
                }
            }
        }
    }

    // nested grafting associativity:
    // graft sigma at leaf j of rho, then tau at leaf i inside sigma
    for r in 2..=n_max {
        for s in 2..=n_max {
            for u in 2..=n_max {
                if r + s + u - 2 > n_max {
                    continue;
                }
                for rho in posets.k_faces(r) {
                    for sigma in posets.k_faces(s) {
                        for tau in posets.k_faces(u) {
                            for j in 1..=r {
                                for i in 1..=s {
                                    let lhs = boundary_k(
                                        j + i - 1,
                                        r + s - 1,
                                        u,
                                        &boundary_k(j, r, s, rho, sigma).unwrap(),
                                        tau,
                                    )
                                    .unwrap();
                                    let rhs = boundary_k(
                                        j,
                                        r,
                                        s + u - 1,
                                        rho,
                                        &boundary_k(i, s, u, sigma, tau).unwrap(),
                                    )
                                    .unwrap();
                                    rep.record(lhs == rhs, "boundary_k nested associativity", || {
                                        (
                                            format!("r={r} s={s} u={u} j={j} i={i} rho={rho} sigma={sigma} tau={tau}"),
                                            lhs.canonical_form(),
                                            rhs.canonical_form(),
                                        )
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // disjoint grafting associativity: graft sigma at leaf i and tau at
    // leaf j > i of the same tree, in either order
    for r in 2..=n_max {
        for s in 2..=n_max {
            for u in 2..=n_max {
                if r + s + u - 2 > n_max {
                    continue;
                }
                for rho in posets.k_faces(r) {
                    for sigma in posets.k_faces(s) {
                        for tau in posets.k_faces(u) {
                            for i in 1..=r {
                                for j in (i + 1)..=r {
                                    let lhs = boundary_k(
                                        j + s - 1,
                                        r + s - 1,
                                        u,
                                        &boundary_k(i, r, s, rho, sigma).unwrap(),
                                        tau,
                                    )
                                    .unwrap();
                                    let rhs = boundary_k(
                                        i,
                                        r + u - 1,
                                        s,
                                        &boundary_k(j, r, u, rho, tau).unwrap(),
                                        sigma,
                                    )
                                    .unwrap();
                                    rep.record(lhs == rhs, "boundary_k disjoint associativity", || {
                                        (
                                            format!("r={r} s={s} u={u} i={i} j={j} rho={rho} sigma={sigma} tau={tau}"),
                                            lhs.canonical_form(),
                                            rhs.canonical_form(),
                                        )
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // degeneracy bookkeeping: membership and the exact dimension drop
    for i in 3..=n_max {
        for t in posets.k_faces(i) {
            for k in 1..=i {
                let res = degeneracy_k(k, t).expect("valid instance");
                let expected_drop: i64 = if t.root.leaf_parent_arity(k) >= 3 { 1 } else { 0 };
                let drop = t.dimension() as i64 - res.dimension() as i64;
                let ok = res.leaf_count() == i - 1
                    && posets.k_forms[&(i - 1)].contains(&res.canonical_form())
                    && drop == expected_drop;
                rep.record(ok, "degeneracy_k bookkeeping", || {
                    (
                        format!("k={k} t={t}"),
                        format!("face of K_{} with dimension drop {expected_drop}", i - 1),
                        format!("{} (dim {})", res.canonical_form(), res.dimension()),
                    )
                });
            }
        }
    }

    // facet coverage: (r, s, k) -> boundary_k(top, top) is a bijection
    // onto the facets, whose number is m(m-1)/2 - 1
    for m in 3..=n_max {
        let facet_forms: HashSet<String> = posets.k[&m]
            .facets()
            .iter()
            .map(Face::canonical_form)
            .collect();
        let mut images: HashMap<String, (usize, usize, usize)> = HashMap::new();
        let mut dup = false;
        for r in 2..=(m - 1) {
            let s = m + 1 - r;
            let top_r = PlanarTree::corolla(r).unwrap();
            let top_s = PlanarTree::corolla(s).unwrap();
            for k in 1..=r {
                let img = boundary_k(k, r, s, &top_r, &top_s).unwrap();
                if images.insert(img.canonical_form(), (r, s, k)).is_some() {
                    dup = true;
                }
            }
        }
        let covered = images.keys().all(|f| facet_forms.contains(f));
        let ok = !dup
            && covered
            && images.len() == facet_forms.len()
            && facet_forms.len() == m * (m - 1) / 2 - 1;
        rep.record(ok, "boundary_k facet coverage", || {
            (
                format!("n={m}"),
                format!("bijection onto {} facets", m * (m - 1) / 2 - 1),
                format!("{} images, {} facets, dup={dup}", images.len(), facet_forms.len()),
            )
        });
    }

    Ok(rep)
}

fn verify_j_relations(n_max: usize) -> Result<FaceMapReport, TreeError> {
    let posets = Posets::build(n_max, n_max)?;
    let mut rep = FaceMapReport::new("J-relations", n_max);

    // lower boundary bookkeeping
    for m in 2..=n_max {
        for r in 1..=(m - 1) {
            let s = m + 1 - r;
            if s < 2 || s > n_max {
                continue;
            }
            for rho in posets.j_faces(r) {
                for sigma in posets.k_faces(s) {
                    for k in 1..=r {
                        let res = boundary_j_lower(k, r, s, rho, sigma).expect("valid instance");
                        let ok = res.leaf_count() == m
                            && res.dimension() == rho.dimension() + sigma.dimension()
                            && posets.j_forms[&m].contains(&res.canonical_form());
                        rep.record(ok, "boundary_j_lower bookkeeping", || {
                            (
                                format!("k={k} r={r} s={s} rho={rho} sigma={sigma}"),
                                format!("face of J_{m} with additive dimension"),
                                res.canonical_form(),
                            )
                        });
                    }
                }
            }
        }
    }

    // upper boundary bookkeeping
    for m in 2..=n_max {
        for t in 2..=m {
            for comp in compositions(m, t) {
                for tau in posets.k_faces(t) {
                    for_each_j_tuple(&posets, &comp, &mut |rhos| {
                        let res = boundary_j_upper(t, &comp, tau, &rhos).expect("valid instance");
                        let dims: usize = rhos.iter().map(PaintedTree::dimension).sum();
                        let ok = res.leaf_count() == m
                            && res.dimension() == tau.dimension() + dims
                            && posets.j_forms[&m].contains(&res.canonical_form());
                        rep.record(ok, "boundary_j_upper bookkeeping", || {
                            let parts: Vec<String> =
                                rhos.iter().map(PaintedTree::canonical_form).collect();
                            (
                                format!("t={t} comp={comp:?} tau={tau} rhos={}", parts.join(",")),
                                format!("face of J_{m} with additive dimension"),
                                res.canonical_form(),
                            )
                        });
                    });
                }
            }
        }
    }

    // degeneracy bookkeeping and cascade confluence
    for i in 2..=n_max {
        for t in posets.j_faces(i) {
            for k in 1..=i {
                let res = degeneracy_j(k, t).expect("valid instance");
                let alt =
                    degeneracy_j_with_strategy(k, t, CascadeStrategy::OutermostRightmost).unwrap();
                let drop = t.dimension() as i64 - res.dimension() as i64;
                let ok = res.leaf_count() == i - 1
                    && posets.j_forms[&(i - 1)].contains(&res.canonical_form())
                    && (0..=1).contains(&drop)
                    && res == alt;
                rep.record(ok, "degeneracy_j bookkeeping/confluence", || {
                    (
                        format!("k={k} t={t}"),
                        format!("face of J_{}, drop <= 1, both cascade orders equal", i - 1),
                        format!("{} vs {}", res.canonical_form(), alt.canonical_form()),
                    )
                });
            }
        }
    }

    // facet coverage: the lower family (r, s, k) and the upper family
    // (t; r_1..r_t), applied to top cells, enumerate the facets of J_m
    // exactly once
    for m in 2..=n_max {
        let facet_forms: HashSet<String> = posets.j[&m]
            .facets()
            .iter()
            .map(Face::canonical_form)
            .collect();
        let mut images: HashSet<String> = HashSet::new();
        let mut dup = false;
        for r in 1..=(m - 1) {
            let s = m + 1 - r;
            let top_j = PaintedTree::map_corolla(r).unwrap();
            let top_k = PlanarTree::corolla(s).unwrap();
            for k in 1..=r {
                let img = boundary_j_lower(k, r, s, &top_j, &top_k).unwrap();
                if !images.insert(img.canonical_form()) {
                    dup = true;
                }
            }
        }
        let lower_count = images.len();
        for t in 2..=m {
            for comp in compositions(m, t) {
                let top_t = PlanarTree::corolla(t).unwrap();
                let tops: Vec<PaintedTree> = comp
                    .iter()
                    .map(|&r| PaintedTree::map_corolla(r).unwrap())
                    .collect();
                let img = boundary_j_upper(t, &comp, &top_t, &tops).unwrap();
                if !images.insert(img.canonical_form()) {
                    dup = true;
                }
            }
        }
        let expected = m * (m - 1) / 2 + (1 << (m - 1)) - 1;
        let covered = images.iter().all(|f| facet_forms.contains(f));
        let ok = !dup
            && covered
            && images.len() == facet_forms.len()
            && facet_forms.len() == expected
            && lower_count == m * (m - 1) / 2;
        rep.record(ok, "J facet coverage", || {
            (
                format!("n={m}"),
                format!("lower {} + upper {} facets, no overlap", m * (m - 1) / 2, (1 << (m - 1)) - 1),
                format!(
                    "{} images ({} lower), {} facets, dup={dup}",
                    images.len(),
                    lower_count,
                    facet_forms.len()
                ),
            )
        });
    }

    run_projection_checks(&mut rep, &posets, n_max, n_max);
    Ok(rep)
}

/// Visits every tuple of painted faces matching the leaf counts in `comp`.
fn for_each_j_tuple(posets: &Posets, comp: &[usize], f: &mut impl FnMut(Vec<PaintedTree>)) {
    fn go(
        posets: &Posets,
        comp: &[usize],
        acc: &mut Vec<PaintedTree>,
        f: &mut impl FnMut(Vec<PaintedTree>),
    ) {
        if comp.is_empty() {
            f(acc.clone());
            return;
        }
        for rho in posets.j_faces(comp[0]) {
            acc.push(rho.clone());
            go(posets, &comp[1..], acc, f);
            acc.pop();
        }
    }
    go(posets, comp, &mut Vec::new(), f);
}

/// `projection_pi` on the unique face of `J_1` is taken to be the trivial
/// tree, so the grafting identity can be stated uniformly.
fn pi_or_trivial(t: &PaintedTree) -> PlanarTree {
    if t.leaf_count() == 1 {
        PlanarTree::trivial()
    } else {
        projection_pi(t).unwrap()
    }
}

/// The four compatibility identities of the projection, checked
/// exhaustively: identity sections, lower and upper boundary
/// compatibility, and degeneracy compatibility.
pub fn check_projection_properties(k_max: usize, j_max: usize) -> Result<FaceMapReport, TreeError> {
    let posets = Posets::build(k_max, j_max)?;
    let mut rep = FaceMapReport::new("projection-properties", k_max.max(j_max));
    run_projection_checks(&mut rep, &posets, k_max, j_max);
    Ok(rep)
}

fn run_projection_checks(rep: &mut FaceMapReport, posets: &Posets, k_max: usize, j_max: usize) {
    let j1 = PaintedTree::map_corolla(1).unwrap();

    // (1) both ways of viewing a planar face inside the painted polytope
    // project back to the identity
    for i in 2..=k_max {
        for rho in posets.k_faces(i) {
            let lower = boundary_j_lower(1, 1, i, &j1, rho).unwrap();
            let via_lower = projection_pi(&lower).unwrap();
            rep.record(via_lower == *rho, "pi . delta_1(1,i) = id", || {
                (format!("i={i} rho={rho}"), rho.canonical_form(), via_lower.canonical_form())
            });

            let ones = vec![1usize; i];
            let tops = vec![j1.clone(); i];
            let upper = boundary_j_upper(i, &ones, rho, &tops).unwrap();
            let via_upper = projection_pi(&upper).unwrap();
            rep.record(via_upper == *rho, "pi . delta(i,1,...,1) = id", || {
                (format!("i={i} rho={rho}"), rho.canonical_form(), via_upper.canonical_form())
            });
        }
    }

    // (2) projecting after a lower boundary equals grafting after
    // projecting the painted factor
    for m in 2..=k_max {
        for r in 2..=m.saturating_sub(1).min(j_max) {
            let s = m + 1 - r;
            if !(2..=k_max).contains(&s) {
                continue;
            }
            for rho in posets.j_faces(r) {
                for sigma in posets.k_faces(s) {
                    for k in 1..=r {
                        let lhs =
                            projection_pi(&boundary_j_lower(k, r, s, rho, sigma).unwrap()).unwrap();
                        let rhs =
                            boundary_k(k, r, s, &projection_pi(rho).unwrap(), sigma).unwrap();
                        rep.record(lhs == rhs, "pi . delta_k = boundary_k . (pi x id)", || {
                            (
                                format!("k={k} r={r} s={s} rho={rho} sigma={sigma}"),
                                rhs.canonical_form(),
                                lhs.canonical_form(),
                            )
                        });
                    }
                }
            }
        }
    }

    // (3) projecting after an upper boundary equals the simultaneous graft
    // of the projected factors
    for m in 2..=k_max {
        for t in 2..=m.min(k_max) {
            for comp in compositions(m, t) {
                if comp.iter().any(|&r| r > j_max) {
                    continue;
                }
                for tau in posets.k_faces(t) {
                    for_each_j_tuple(posets, &comp, &mut |rhos| {
                        let lhs =
                            projection_pi(&boundary_j_upper(t, &comp, tau, &rhos).unwrap())
                                .unwrap();
                        let projected: Vec<PlanarTree> =
                            rhos.iter().map(pi_or_trivial).collect();
                        let rhs = composite_d(tau, &projected).unwrap();
                        rep.record(lhs == rhs, "pi . delta(t;r) = D . (id x pi^t)", || {
                            let parts: Vec<String> =
                                rhos.iter().map(PaintedTree::canonical_form).collect();
                            (
                                format!("t={t} comp={comp:?} tau={tau} rhos={}", parts.join(",")),
                                rhs.canonical_form(),
                                lhs.canonical_form(),
                            )
                        });
                    });
                }
            }
        }
    }

    // (4) projection intertwines the degeneracies
    for i in 3..=j_max {
        for rho in posets.j_faces(i) {
            for k in 1..=i {
                let lhs = projection_pi(&degeneracy_j(k, rho).unwrap()).unwrap();
                let rhs = degeneracy_k(k, &projection_pi(rho).unwrap()).unwrap();
                rep.record(lhs == rhs, "pi . d_k = s_k . pi", || {
                    (
                        format!("i={i} k={k} rho={rho}"),
                        rhs.canonical_form(),
                        lhs.canonical_form(),
                    )
                });
            }
        }
    }
}

/// Boundary-sphere sanity checks for `K_n`/`J_n` up to `n_max`: the Euler
/// relation over the proper faces and the requirement that every
/// codimension-2 face lies in exactly two facets.
pub fn check_boundary_sphere(kind: TreeKind, n_max: usize) -> Result<FaceMapReport, TreeError> {
    let min_n = match kind {
        TreeKind::K => 2,
        TreeKind::J => 1,
    };
    let mut rep = FaceMapReport::new(format!("{kind}-boundary-sphere"), n_max);
    for n in min_n..=n_max {
        let poset = FacePoset::build(kind, n)?;
        let d = poset.top_dimension();
        if d == 0 {
            continue;
        }
        let mut euler: i64 = 0;
        for dim in 0..d {
            let count = poset.faces_of_dim(dim).len() as i64;
            euler += if dim % 2 == 0 { count } else { -count };
        }
        let expected = 1 + if (d - 1) % 2 == 0 { 1 } else { -1 };
        rep.record(euler == expected, "euler relation on the boundary", || {
            (format!("{kind}_{n}"), expected.to_string(), euler.to_string())
        });

        if d >= 2 {
            let facet_forms: HashSet<String> = poset
                .facets()
                .iter()
                .map(Face::canonical_form)
                .collect();
            for face in poset.faces_of_dim(d - 2) {
                let ups: HashSet<String> = face
                    .coarsenings()
                    .into_iter()
                    .map(|f| f.canonical_form())
                    .collect();
                let ok = ups.len() == 2 && ups.iter().all(|f| facet_forms.contains(f));
                rep.record(ok, "codim-2 face lies in exactly 2 facets", || {
                    (
                        format!("{kind}_{n} face={face}"),
                        "2 facets".to_string(),
                        format!("{} coarsenings", ups.len()),
                    )
                });
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> PlanarTree {
        PlanarTree::parse(s).unwrap()
    }

    fn j(s: &str) -> PaintedTree {
        PaintedTree::parse(s).unwrap()
    }

    #[test]
    fn boundary_k_smallest_case() {
        let c2 = PlanarTree::corolla(2).unwrap();
        let res = boundary_k(1, 2, 2, &c2, &c2).unwrap();
        assert_eq!(res.canonical_form(), "((**)*)");
        assert_eq!(res.dimension(), 0);
    }

    #[test]
    fn boundary_k_facets_of_k4() {
        let mut forms = HashSet::new();
        for r in 2..=3 {
            let s = 5 - r;
            for kk in 1..=r {
                let img = boundary_k(
                    kk,
                    r,
                    s,
                    &PlanarTree::corolla(r).unwrap(),
                    &PlanarTree::corolla(s).unwrap(),
                )
                .unwrap();
                forms.insert(img.canonical_form());
            }
        }
        assert_eq!(forms.len(), 5);
    }

    #[test]
    fn boundary_k_rejects_bad_input() {
        let c2 = PlanarTree::corolla(2).unwrap();
        let c3 = PlanarTree::corolla(3).unwrap();
        assert!(matches!(
            boundary_k(3, 2, 2, &c2, &c2),
            Err(FaceMapError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            boundary_k(1, 2, 2, &c3, &c2),
            Err(FaceMapError::LeafCountMismatch { .. })
        ));
        assert!(matches!(
            boundary_k(1, 1, 2, &PlanarTree::trivial(), &c2),
            Err(FaceMapError::TooFewLeaves { .. })
        ));
    }

    #[test]
    fn degeneracy_k_examples() {
        let res = degeneracy_k(1, &PlanarTree::corolla(3).unwrap()).unwrap();
        assert_eq!(res.canonical_form(), "(**)");
        let res = degeneracy_k(1, &k("((**)*)")).unwrap();
        assert_eq!(res.canonical_form(), "(**)");
        assert!(degeneracy_k(1, &PlanarTree::corolla(2).unwrap()).is_err());
    }

    #[test]
    fn boundary_j_lower_smallest_case() {
        let j1 = PaintedTree::map_corolla(1).unwrap();
        let res = boundary_j_lower(1, 1, 2, &j1, &PlanarTree::corolla(2).unwrap()).unwrap();
        assert_eq!(res.canonical_form(), "m(d(**))");
        assert_eq!(res.dimension(), 0);
    }

    #[test]
    fn boundary_j_lower_facets_of_j3() {
        let mut forms = HashSet::new();
        for (kk, r, s) in [(1, 1, 3), (1, 2, 2), (2, 2, 2)] {
            let img = boundary_j_lower(
                kk,
                r,
                s,
                &PaintedTree::map_corolla(r).unwrap(),
                &PlanarTree::corolla(s).unwrap(),
            )
            .unwrap();
            assert_eq!(img.dimension(), 1);
            forms.insert(img.canonical_form());
        }
        assert_eq!(forms.len(), 3);
    }

    #[test]
    fn boundary_j_upper_smallest_case() {
        let j1 = PaintedTree::map_corolla(1).unwrap();
        let res = boundary_j_upper(
            2,
            &[1, 1],
            &PlanarTree::corolla(2).unwrap(),
            &[j1.clone(), j1],
        )
        .unwrap();
        assert_eq!(res.canonical_form(), "r(m(*)m(*))");
        assert_eq!(res.dimension(), 0);
    }

    #[test]
    fn j3_has_six_facets_from_both_families() {
        let mut forms = HashSet::new();
        for (kk, r, s) in [(1, 1, 3), (1, 2, 2), (2, 2, 2)] {
            let img = boundary_j_lower(
                kk,
                r,
                s,
                &PaintedTree::map_corolla(r).unwrap(),
                &PlanarTree::corolla(s).unwrap(),
            )
            .unwrap();
            forms.insert(img.canonical_form());
        }
        for comp in [vec![1, 2], vec![2, 1], vec![1, 1, 1]] {
            let t = comp.len();
            let tops: Vec<PaintedTree> = comp
                .iter()
                .map(|&r| PaintedTree::map_corolla(r).unwrap())
                .collect();
            let img =
                boundary_j_upper(t, &comp, &PlanarTree::corolla(t).unwrap(), &tops).unwrap();
            assert_eq!(img.dimension(), 1);
            forms.insert(img.canonical_form());
        }
        assert_eq!(forms.len(), 6);
    }

    #[test]
    fn degeneracy_j_examples() {
        let res = degeneracy_j(1, &PaintedTree::map_corolla(2).unwrap()).unwrap();
        assert_eq!(res.canonical_form(), "m(*)");

        // deleting a leaf under a unary map vertex kills it; the range
        // parent drops to arity 1 and is smoothed away
        let res = degeneracy_j(1, &j("r(m(*)m(*))")).unwrap();
        assert_eq!(res.canonical_form(), "m(*)");

        assert!(degeneracy_j(1, &PaintedTree::map_corolla(1).unwrap()).is_err());
    }

    #[test]
    fn cascade_strategies_agree_on_a_deep_example() {
        let t = j("r(m(*)r(m(*)m(*)))");
        for k in 1..=3 {
            let a = degeneracy_j_with_strategy(k, &t, CascadeStrategy::InnermostLeftmost).unwrap();
            let b = degeneracy_j_with_strategy(k, &t, CascadeStrategy::OutermostRightmost).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn projection_forgets_the_painting() {
        let res = projection_pi(&PaintedTree::map_corolla(4).unwrap()).unwrap();
        assert_eq!(res.canonical_form(), "(****)");
        let res = projection_pi(&j("r(m(*)m(**))")).unwrap();
        assert_eq!(res.canonical_form(), "(*(**))");
        assert!(projection_pi(&PaintedTree::map_corolla(1).unwrap()).is_err());
    }

    #[test]
    fn composite_d_examples() {
        let c2 = PlanarTree::corolla(2).unwrap();
        let res = composite_d(&c2, &[c2.clone(), c2.clone()]).unwrap();
        assert_eq!(res.canonical_form(), "((**)(**))");

        // grafting one non-trivial factor collapses to boundary_k
        let tau = PlanarTree::corolla(3).unwrap();
        let rho = k("((**)*)");
        let via_d = composite_d(
            &tau,
            &[rho.clone(), PlanarTree::trivial(), PlanarTree::trivial()],
        )
        .unwrap();
        let via_boundary = boundary_k(1, 3, 3, &tau, &rho).unwrap();
        assert_eq!(via_d, via_boundary);
    }

    #[test]
    fn verify_relations_small() {
        let rep = verify_relations(TreeKind::K, 4).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
        let rep = verify_relations(TreeKind::J, 3).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
    }

    #[test]
    fn boundary_sphere_small() {
        let rep = check_boundary_sphere(TreeKind::K, 5).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
        let rep = check_boundary_sphere(TreeKind::J, 4).unwrap();
        assert!(rep.passed(), "failures: {:?}", rep.failures);
    }

    #[test]
    fn report_invariant_failures_iff_not_all_passed() {
        let rep = verify_relations(TreeKind::K, 4).unwrap();
        assert_eq!(rep.failures.is_empty(), rep.instances == rep.checks_passed);
    }
}
