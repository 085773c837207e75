//! Integer-coordinate realization of associahedron vertices.
//!
//! A binary tree with `n` leaves maps to the point whose `i`-th coordinate
//! is `l_i * r_i`, where `l_i` and `r_i` count the leaves of the left and
//! right subtrees of the `i`-th internal vertex in inorder. The convex
//! hull of these points is the associahedron; here only the vertex set is
//! realized, and the combinatorial face data is cross-checked against the
//! supporting hyperplanes instead of being recomputed from the geometry.
//!
//! All checks are exact: integer coordinates, rational rank computation,
//! no floating point.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::facemaps::boundary_k;
use crate::trees::planar::PlanarNode;
use crate::trees::face_leq;
use crate::trees::{enumerate_vertices, Face, PlanarTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("tree is not binary: {0}")]
    NotBinary(String),
    #[error("need at least 2 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Loday coordinates of a binary tree with `n >= 2` leaves: the
/// `(n-1)`-vector whose `i`-th entry is the product of the leaf counts of
/// the two subtrees at the `i`-th internal vertex in inorder.
pub fn loday_coordinates(t: &PlanarTree) -> Result<Vec<i64>, RealizationError> {
    if t.leaf_count() < 2 {
        return Err(RealizationError::TooFewLeaves(t.leaf_count()));
    }
    if !t.is_binary() {
        return Err(RealizationError::NotBinary(t.canonical_form()));
    }
    let mut coords = Vec::with_capacity(t.leaf_count() - 1);
    fn walk(node: &PlanarNode, coords: &mut Vec<i64>) -> i64 {
        match node {
            PlanarNode::Leaf => 1,
            PlanarNode::Internal(children) => {
                debug_assert_eq!(children.len(), 2);
                let left = walk(&children[0], coords);
                let here = coords.len();
                coords.push(0); // reserve the inorder slot
                let right = walk(&children[1], coords);
                coords[here] = left * right;
                left + right
            }
        }
    }
    walk(&t.root, &mut coords);
    Ok(coords)
}

/// The vertex set of `K_n` with its Loday coordinates, ordered by
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEmbedding {
    pub n: usize,
    pub points: Vec<(PlanarTree, Vec<i64>)>,
}

impl VertexEmbedding {
    pub fn build(n: usize) -> Result<Self, RealizationError> {
        let vertices = enumerate_vertices(crate::trees::TreeKind::K, n)?;
        let mut points = Vec::with_capacity(vertices.len());
        for v in vertices {
            let tree = v.as_planar().expect("K vertices are planar").clone();
            let coords = loday_coordinates(&tree)?;
            points.push((tree, coords));
        }
        Ok(VertexEmbedding { n, points })
    }
}

/// Rank of the affine span of the embedded points, computed in exact
/// arithmetic (fraction-free Gaussian elimination over the integers).
pub fn affine_dimension(emb: &VertexEmbedding) -> usize {
    let Some((_, base)) = emb.points.first() else {
        return 0;
    };
    let rows: Vec<Vec<BigInt>> = emb.points[1..]
        .iter()
        .map(|(_, p)| {
            p.iter()
                .zip(base)
                .map(|(a, b)| BigInt::from(a - b))
                .collect()
        })
        .collect();
    integer_rank(rows)
}

/// Bareiss elimination; exact, no division by non-pivots.
fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            for c in (col + 1)..cols {
                let num = &pivot * &rows[r][c] - &rows[r][col] * &rows[rank][c];
                rows[r][c] = num / &prev_pivot;
            }
            rows[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct FacetSupportReport {
    pub n: usize,
    pub facets_checked: usize,
    pub instances: u64,
    pub failures: Vec<String>,
}

impl FacetSupportReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every facet of `K_n`, that exactly the vertices lying in
/// that facet satisfy the supporting equality
/// `x_k + .. + x_{k+s-2} = s(s-1)/2`, all other vertices satisfying the
/// strict inequality `>`.
pub fn facet_support_check(n: usize) -> Result<FacetSupportReport, RealizationError> {
    let emb = VertexEmbedding::build(n)?;
    let mut report = FacetSupportReport {
        n,
        facets_checked: 0,
        instances: 0,
        failures: Vec::new(),
    };
    for r in 2..=(n - 1) {
        let s = n + 1 - r;
        let top_r = PlanarTree::corolla(r).expect("r >= 2");
        let top_s = PlanarTree::corolla(s).expect("s >= 2");
        for k in 1..=r {
            let facet = Face::K(boundary_k(k, r, s, &top_r, &top_s).expect("facet instance"));
            report.facets_checked += 1;
            let rhs = (s * (s - 1) / 2) as i64;
            for (tree, coords) in &emb.points {
                report.instances += 1;
                let lhs: i64 = coords[(k - 1)..(k + s - 2)].iter().sum();
                let inside = face_leq(&Face::K(tree.clone()), &facet);
                let ok = if inside { lhs == rhs } else { lhs > rhs };
                if !ok {
                    report.failures.push(format!(
                        "facet (k={k}, r={r}, s={s}): vertex {tree} has sum {lhs}, \
                         bound {rhs}, inside={inside}"
                    ));
                }
            }
        }
    }
    Ok(report)
}
