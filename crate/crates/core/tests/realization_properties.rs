//! Exact-arithmetic invariants of the vertex realization beyond the
//! acceptance levels.

use std::collections::HashSet;

use anpoly::realization::{affine_dimension, loday_coordinates, VertexEmbedding};
use anpoly::trees::{enumerate_vertices, TreeKind};

#[test]
fn coordinate_sums_up_to_9() {
    for n in 2..=9usize {
        let target = (n * (n - 1) / 2) as i64;
        for v in enumerate_vertices(TreeKind::K, n).unwrap() {
            let coords = loday_coordinates(v.as_planar().unwrap()).unwrap();
            assert_eq!(coords.len(), n - 1);
            assert_eq!(coords.iter().sum::<i64>(), target, "{v}");
        }
    }
}

#[test]
fn injectivity_up_to_9() {
    for n in 2..=9usize {
        let vertices = enumerate_vertices(TreeKind::K, n).unwrap();
        let points: HashSet<Vec<i64>> = vertices
            .iter()
            .map(|v| loday_coordinates(v.as_planar().unwrap()).unwrap())
            .collect();
        assert_eq!(points.len(), vertices.len(), "K_{n}");
    }
}

#[test]
fn affine_dimension_up_to_8() {
    for n in 2..=8usize {
        let emb = VertexEmbedding::build(n).unwrap();
        assert_eq!(affine_dimension(&emb), n - 2, "K_{n}");
    }
}
