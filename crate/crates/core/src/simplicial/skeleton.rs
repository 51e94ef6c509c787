use std::collections::HashMap;

use serde::Serialize;

use super::SimplicialSetView;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SkeletonEdge {
    pub from: String,
    pub to: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SkeletonTriangle {
    pub vertices: [String; 3],
    pub label: String,
    /// Index into `edges` of each face `d_0, d_1, d_2`; `None` for a
    /// degenerate face.
    pub faces: [Option<usize>; 3],
}

/// The 2-skeleton of a simplicial set: vertices, oriented edges, triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<SkeletonEdge>,
    pub triangles: Vec<SkeletonTriangle>,
}

impl SkeletonGraph {
    /// `(V, E, F)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.triangles.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        let (v, e, f) = self.counts();
        v as i64 - e as i64 + f as i64
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    /// Edges as `(from, to)` label pairs, in order.
    pub fn edge_pairs(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|e| (e.from.clone(), e.to.clone()))
            .collect()
    }
}

/// Vertices in level order, nondegenerate edges oriented from `d_1 e` to
/// `d_0 e` and sorted by endpoint labels, nondegenerate triangles sorted by
/// their vertex labels.
pub fn skeleton<X: SimplicialSetView>(x: &X) -> SkeletonGraph {
    let vertices: Vec<String> = x.level(0).iter().map(|v| v.to_string()).collect();

    let mut edges: Vec<(SkeletonEdge, X::Simplex)> = x
        .nondegenerate(1)
        .into_iter()
        .map(|e| {
            let edge = SkeletonEdge {
                from: x.face(1, 1, &e).to_string(),
                to: x.face(1, 0, &e).to_string(),
                label: e.to_string(),
            };
            (edge, e)
        })
        .collect();
    edges.sort_by(|a, b| a.0.cmp(&b.0));
    let edge_index: HashMap<&X::Simplex, usize> =
        edges.iter().enumerate().map(|(j, (_, e))| (e, j)).collect();

    let mut triangles: Vec<SkeletonTriangle> = x
        .nondegenerate(2)
        .into_iter()
        .map(|t| SkeletonTriangle {
            vertices: [0, 1, 2].map(|i| x.vertex(2, i, &t).to_string()),
            label: t.to_string(),
            faces: [0, 1, 2].map(|i| edge_index.get(&x.face(2, i, &t)).copied()),
        })
        .collect();
    triangles.sort();

    SkeletonGraph {
        vertices,
        edges: edges.into_iter().map(|(e, _)| e).collect(),
        triangles,
    }
}
