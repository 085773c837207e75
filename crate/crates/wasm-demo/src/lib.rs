//! Browser bindings for the interactive demo page.
//!
//! Three operations are exposed, each returning a JSON string for the
//! page to render: a face-poset explorer with an SVG drawing of the small
//! polytopes, the admissible normal form of a reduced-power word, and the
//! gauge-group equivalence verdict.
//!
//! The `*_impl` functions carry the logic and are what the native test
//! suite drives; the exported wrappers only translate errors into
//! `JsValue` at the browser boundary.

use anpoly::facemaps::verify_relations;
use anpoly::gauge::{an_triviality_order, su2_an_equivalent, su2_invariant};
use anpoly::realization::loday_coordinates;
use anpoly::steenrod::{PowerWord, SteenrodElement};
use anpoly::trees::{face_leq, Face, FacePoset, TreeKind};
use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn face_summary(kind: &str, n: usize) -> Result<String, JsValue> {
    face_summary_impl(kind, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify_summary(kind: &str, n_max: usize) -> Result<String, JsValue> {
    verify_summary_impl(kind, n_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn adem_normal_form(word: &str, prime: u32) -> Result<String, JsValue> {
    adem_normal_form_impl(word, prime).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify_gauge(k: i64, k2: i64, n: u32) -> Result<String, JsValue> {
    classify_gauge_impl(k, k2, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn polytope_svg(kind: &str, n: usize) -> Result<String, JsValue> {
    polytope_svg_impl(kind, n).map_err(|e| JsValue::from_str(&e))
}

fn parse_kind(kind: &str) -> Result<TreeKind, String> {
    kind.parse::<TreeKind>()
}

/// Face poset summary: f-vector, facets, and the full face list.
pub fn face_summary_impl(kind: &str, n: usize) -> Result<String, String> {
    let kind = parse_kind(kind)?;
    let poset = FacePoset::build(kind, n).map_err(|e| e.to_string())?;
    let facets: Vec<String> = poset.facets().iter().map(Face::canonical_form).collect();
    let faces: Vec<serde_json::Value> = poset
        .faces()
        .map(|f| serde_json::json!({ "dim": f.dimension(), "tree": f.canonical_form() }))
        .collect();
    let doc = serde_json::json!({
        "kind": poset.kind(),
        "n": poset.n(),
        "dimension": poset.top_dimension(),
        "f_vector": poset.f_vector(),
        "total_faces": poset.total_faces(),
        "facets": facets,
        "faces": faces,
    });
    Ok(doc.to_string())
}

/// Runs the identity harness at a small size and reports the counts.
pub fn verify_summary_impl(kind: &str, n_max: usize) -> Result<String, String> {
    let kind = parse_kind(kind)?;
    if n_max > 6 {
        return Err("n_max above 6 is too slow for the browser".to_string());
    }
    let report = verify_relations(kind, n_max).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Admissible normal form of a dotted word like `P^1.P^1`.
pub fn adem_normal_form_impl(word: &str, prime: u32) -> Result<String, String> {
    let parsed = PowerWord::parse(word, prime).map_err(|e| e.to_string())?;
    let reduced = SteenrodElement::from_word(&parsed).adem_reduce();
    let terms: Vec<serde_json::Value> = reduced
        .terms()
        .map(|(w, c)| serde_json::json!({ "coeff": c, "word": w }))
        .collect();
    let doc = serde_json::json!({
        "prime": prime,
        "input": parsed.to_string(),
        "admissible": parsed.is_admissible(),
        "degree": parsed.degree(),
        "normal_form": reduced.to_string(),
        "terms": terms,
    });
    Ok(doc.to_string())
}

/// Equivalence verdict for the gauge groups of bundles `k` and `k2` at
/// level `n`, with both invariants and the order data.
pub fn classify_gauge_impl(k: i64, k2: i64, n: u32) -> Result<String, String> {
    if !(1..=50).contains(&n) {
        return Err("level n must be between 1 and 50".to_string());
    }
    let inv = |k: i64| -> serde_json::Value {
        su2_invariant(k, n)
            .entries
            .iter()
            .map(|e| serde_json::json!({ "p": e.p, "cap": e.cap, "value": e.value }))
            .collect()
    };
    let order = an_triviality_order(n).map_err(|e| e.to_string())?;
    let doc = serde_json::json!({
        "n": n,
        "k": k,
        "k2": k2,
        "invariant_k": inv(k),
        "invariant_k2": inv(k2),
        "verdict": su2_an_equivalent(k, k2, n).to_string(),
        "order": {
            "odd_part": order.odd_part.to_string(),
            "v2_lower": order.v2_lower,
            "v2_upper": order.v2_upper,
        },
    });
    Ok(doc.to_string())
}

/// SVG drawing of a small polytope: `K_n` for `3 <= n <= 5` from the
/// integer vertex realization, `J_n` for `2 <= n <= 3` from the boundary
/// cycle. Vertices carry their tree as a tooltip.
pub fn polytope_svg_impl(kind: &str, n: usize) -> Result<String, String> {
    let kind = parse_kind(kind)?;
    match kind {
        TreeKind::K if (3..=5).contains(&n) => k_svg(n),
        TreeKind::J if (2..=3).contains(&n) => j_svg(n),
        TreeKind::K => Err("drawable range for K is 3 <= n <= 5".to_string()),
        TreeKind::J => Err("drawable range for J is 2 <= n <= 3".to_string()),
    }
}

/// Vertex pairs of each 1-dimensional face.
fn edge_list(poset: &FacePoset) -> Vec<(usize, usize)> {
    let vertices = poset.vertices();
    let mut edges = Vec::new();
    for edge in poset.faces_of_dim(1) {
        let ends: Vec<usize> = (0..vertices.len())
            .filter(|&i| face_leq(&vertices[i], edge))
            .collect();
        if let [a, b] = ends[..] {
            edges.push((a, b));
        }
    }
    edges
}

fn k_svg(n: usize) -> Result<String, String> {
    let poset = FacePoset::build(TreeKind::K, n).map_err(|e| e.to_string())?;
    let vertices = poset.vertices();
    let labels: Vec<String> = vertices.iter().map(Face::canonical_form).collect();
    let coords: Vec<Vec<f64>> = vertices
        .iter()
        .map(|v| {
            loday_coordinates(v.as_planar().expect("K vertex"))
                .expect("binary vertex")
                .iter()
                .map(|&x| x as f64)
                .collect()
        })
        .collect();
    // orthonormal directions inside the hyperplane sum(x) = const
    let planar: Vec<(f64, f64)> = coords
        .iter()
        .map(|p| match n {
            3 => (p[0], 0.0),
            4 => {
                let u = (p[0] - p[1]) / 2f64.sqrt();
                let v = (p[0] + p[1] - 2.0 * p[2]) / 6f64.sqrt();
                (u, v)
            }
            _ => {
                let u = (p[0] - p[1]) / 2f64.sqrt();
                let v = (p[0] + p[1] - 2.0 * p[2]) / 6f64.sqrt();
                let w = (p[0] + p[1] + p[2] - 3.0 * p[3]) / 12f64.sqrt();
                (u - 0.45 * w, v - 0.28 * w)
            }
        })
        .collect();
    Ok(render_svg(&planar, &edge_list(&poset), &labels))
}

fn j_svg(n: usize) -> Result<String, String> {
    let poset = FacePoset::build(TreeKind::J, n).map_err(|e| e.to_string())?;
    let vertices = poset.vertices();
    let labels: Vec<String> = vertices.iter().map(Face::canonical_form).collect();
    let edges = edge_list(&poset);
    // 2-polytope: the vertex-edge graph is a cycle (or a segment for J_2);
    // lay the cycle out on a circle
    let m = vertices.len();
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < m {
        let here = *order.last().unwrap();
        let next = edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == here && b != prev {
                    Some(b)
                } else if b == here && a != prev {
                    Some(a)
                } else {
                    None
                }
            })
            .next();
        match next {
            Some(v) => {
                prev = here;
                order.push(v);
            }
            None => break,
        }
    }
    let mut planar = vec![(0.0, 0.0); m];
    for (pos, &v) in order.iter().enumerate() {
        let angle = std::f64::consts::TAU * pos as f64 / m as f64 - std::f64::consts::FRAC_PI_2;
        planar[v] = (angle.cos(), angle.sin());
    }
    Ok(render_svg(&planar, &edges, &labels))
}

fn render_svg(points: &[(f64, f64)], edges: &[(usize, usize)], labels: &[String]) -> String {
    let (mut min_x, mut max_x) = (f64::MAX, f64::MIN);
    let (mut min_y, mut max_y) = (f64::MAX, f64::MIN);
    for &(x, y) in points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let size = 420.0;
    let margin = 36.0;
    let scale = (size - 2.0 * margin) / span;
    let place = |(x, y): (f64, f64)| {
        (
            margin + (x - min_x) * scale + (size - 2.0 * margin - (max_x - min_x) * scale) / 2.0,
            size - margin
                - (y - min_y) * scale
                - (size - 2.0 * margin - (max_y - min_y) * scale) / 2.0,
        )
    };
    let mut svg = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">"#
    );
    for &(a, b) in edges {
        let (x1, y1) = place(points[a]);
        let (x2, y2) = place(points[b]);
        svg.push_str(&format!(
            r##"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#888" stroke-width="1.5"/>"##
        ));
    }
    for (i, &p) in points.iter().enumerate() {
        let (x, y) = place(p);
        svg.push_str(&format!(
            r##"<circle cx="{x:.1}" cy="{y:.1}" r="5" fill="#2563eb"><title>{}</title></circle>"##,
            labels[i]
        ));
    }
    svg.push_str("</svg>");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summaries_render() {
        let doc: serde_json::Value =
            serde_json::from_str(&face_summary_impl("K", 4).unwrap()).unwrap();
        assert_eq!(doc["f_vector"], serde_json::json!([5, 5, 1]));
        let doc: serde_json::Value =
            serde_json::from_str(&face_summary_impl("J", 3).unwrap()).unwrap();
        assert_eq!(doc["f_vector"], serde_json::json!([6, 6, 1]));
    }

    #[test]
    fn svg_has_the_right_vertex_count() {
        let svg = polytope_svg_impl("K", 4).unwrap();
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg.matches("<line").count(), 5);
        let svg = polytope_svg_impl("J", 3).unwrap();
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches("<line").count(), 6);
        let svg = polytope_svg_impl("K", 5).unwrap();
        assert_eq!(svg.matches("<circle").count(), 14);
        assert_eq!(svg.matches("<line").count(), 21);
    }

    #[test]
    fn adem_json() {
        let doc: serde_json::Value =
            serde_json::from_str(&adem_normal_form_impl("P^1.P^1", 3).unwrap()).unwrap();
        assert_eq!(doc["normal_form"], "2 P^2");
        assert_eq!(doc["admissible"], false);
    }

    #[test]
    fn classify_json() {
        let doc: serde_json::Value =
            serde_json::from_str(&classify_gauge_impl(5, 7, 1).unwrap()).unwrap();
        assert_eq!(doc["verdict"], "Equivalent");
        assert_eq!(doc["order"]["odd_part"], "3");
    }

    #[test]
    fn verify_summary_counts() {
        let doc: serde_json::Value =
            serde_json::from_str(&verify_summary_impl("J", 3).unwrap()).unwrap();
        assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(polytope_svg_impl("K", 9).is_err());
        assert!(face_summary_impl("X", 4).is_err());
        assert!(classify_gauge_impl(1, 2, 0).is_err());
    }
}
