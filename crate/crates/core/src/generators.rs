//! Constructors for every graph family the test corpus and the CLI need:
//! theta graphs, subdivided prisms, platonic solids, edge subdivisions, and
//! gluing two graphs at a vertex pair. All outputs use a canonical vertex
//! numbering so serialized files are stable (see the format notes in the
//! README).

use std::collections::BTreeMap;

use crate::embedding::{DartId, EdgeId, FaceId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// Two hub vertices joined by three internally disjoint paths of lengths
/// `a`, `b`, `c` (edge counts). Numbering: hub `u = 0`, path A interiors
/// `1..a`, path B interiors next, path C interiors next, hub
/// `v = a + b + c - 2`. Lengths of 1 give parallel edges, which are legal.
pub fn theta(a: usize, b: usize, c: usize) -> Result<PlaneGraph> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::BadParameter(
            "theta path lengths must be at least 1".into(),
        ));
    }
    let n = a + b + c - 1;
    let u = 0;
    let v = n - 1;
    // Path i occupies interior ids [offsets[i], offsets[i+1]) and edge ids
    // starting at edge_offsets[i].
    let lengths = [a, b, c];
    let mut interior_start = [0usize; 3];
    let mut edge_start = [0usize; 3];
    let mut acc_v = 1;
    let mut acc_e = 0;
    for i in 0..3 {
        interior_start[i] = acc_v;
        edge_start[i] = acc_e;
        acc_v += lengths[i] - 1;
        acc_e += lengths[i];
    }

    let path_vertex = |i: usize, j: usize| -> VertexId {
        // j-th vertex along path i, 0 = u, lengths[i] = v
        if j == 0 {
            u
        } else if j == lengths[i] {
            v
        } else {
            interior_start[i] + j - 1
        }
    };

    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    // Hub u sees the first edge of paths A, B, C in clockwise order; hub v
    // sees the last edges in reverse order, which embeds the three strands
    // side by side.
    for (i, &first_edge) in edge_start.iter().enumerate() {
        adj[u].push((path_vertex(i, 1), first_edge));
    }
    for (i, &len) in lengths.iter().enumerate().rev() {
        adj[v].push((path_vertex(i, len - 1), edge_start[i] + len - 1));
    }
    for (i, &len) in lengths.iter().enumerate() {
        for j in 1..len {
            let w = path_vertex(i, j);
            adj[w].push((path_vertex(i, j - 1), edge_start[i] + j - 1));
            adj[w].push((path_vertex(i, j + 1), edge_start[i] + j));
        }
    }
    PlaneGraph::from_rotations(adj)
}

/// Plain cycle on `n >= 2` vertices (two parallel edges when `n = 2`).
pub fn cycle_graph(n: usize) -> Result<PlaneGraph> {
    if n < 2 {
        return Err(Error::BadParameter(
            "cycle needs at least 2 vertices".into(),
        ));
    }
    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    for (v, row) in adj.iter_mut().enumerate() {
        let prev_edge = (v + n - 1) % n;
        row.push(((v + 1) % n, v));
        row.push(((v + n - 1) % n, prev_edge));
    }
    PlaneGraph::from_rotations(adj)
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 with verticals i -- i+3.
/// Edge ids: top 0..3, bottom 3..6, verticals 6..9 (vertical `6+i` joins
/// `i` and `i+3`).
fn triangular_prism() -> PlaneGraph {
    let walks: Vec<Vec<(VertexId, EdgeId)>> = vec![
        vec![(0, 0), (1, 1), (2, 2)],         // top: 0->1->2->0
        vec![(3, 5), (5, 4), (4, 3)],         // bottom: 3->5->4->3
        vec![(1, 0), (0, 6), (3, 3), (4, 7)], // 1->0->3->4->1
        vec![(2, 1), (1, 7), (4, 4), (5, 8)], // 2->1->4->5->2
        vec![(0, 2), (2, 8), (5, 5), (3, 6)], // 0->2->5->3->0
    ];
    PlaneGraph::from_face_walks(6, &walks).expect("prism face walks are consistent")
}

/// Triangular prism with its three vertical edges subdivided by `a`, `b`,
/// `c` interior vertices respectively. New vertices are appended in edge-id
/// order.
fn subdivided_prism(a: usize, b: usize, c: usize) -> Result<PlaneGraph> {
    let prism = triangular_prism();
    let plan = BTreeMap::from([(6, a), (7, b), (8, c)]);
    subdivide_edges(&prism, &plan)
}

/// The tight family: prism verticals replaced by paths of `t + 1` edges each.
pub fn prism_subdiv(t: usize) -> Result<PlaneGraph> {
    subdivided_prism(t, t, t)
}

/// Prism with verticals subdivided by `a`, `b`, `c >= 1` interior vertices.
pub fn thm6_prism(a: usize, b: usize, c: usize) -> Result<PlaneGraph> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::BadParameter(
            "thm6 prism needs at least one interior vertex per joining path".into(),
        ));
    }
    subdivided_prism(a, b, c)
}

pub const PLATONIC_NAMES: [&str; 5] = [
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
];

/// Canonical rotation system of a platonic solid, built from its face list.
pub fn platonic(name: &str) -> Result<PlaneGraph> {
    let faces: Vec<Vec<VertexId>> = match name {
        "tetrahedron" => vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]],
        "cube" => vec![
            vec![0, 1, 2, 3],
            vec![7, 6, 5, 4],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ],
        "octahedron" => vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 1],
            vec![5, 2, 1],
            vec![5, 3, 2],
            vec![5, 4, 3],
            vec![5, 1, 4],
        ],
        "dodecahedron" => {
            let mut fs = vec![vec![0, 1, 2, 3, 4]];
            for i in 0..5 {
                let j = (i + 1) % 5;
                fs.push(vec![i, 5 + i, 10 + i, 5 + j, j]);
            }
            for i in 0..5 {
                let j = (i + 1) % 5;
                fs.push(vec![10 + i, 15 + i, 15 + j, 10 + j, 5 + j]);
            }
            fs.push(vec![19, 18, 17, 16, 15]);
            fs
        }
        "icosahedron" => {
            let u = |i: usize| 1 + i % 5;
            let w = |i: usize| 6 + i % 5;
            let mut fs = Vec::new();
            for i in 0..5 {
                fs.push(vec![0, u(i), u(i + 1)]);
            }
            for i in 0..5 {
                fs.push(vec![u(i + 1), u(i), w(i)]);
            }
            for i in 0..5 {
                fs.push(vec![w(i), w(i + 1), u(i + 1)]);
            }
            for i in 0..5 {
                fs.push(vec![11, w(i + 1), w(i)]);
            }
            fs
        }
        other => return Err(Error::UnknownSolid(other.to_string())),
    };
    let n = 1 + faces.iter().flatten().copied().max().unwrap_or(0);
    PlaneGraph::from_faces(n, &faces)
}

/// Replaces each edge `e` with a path through `plan[e]` fresh interior
/// vertices (edges absent from the plan are kept). Interior vertices are
/// appended in edge-id order; segment edges are renumbered in edge-id order
/// as well.
pub fn subdivide_edges(g: &PlaneGraph, plan: &BTreeMap<EdgeId, usize>) -> Result<PlaneGraph> {
    let n = g.vertex_count();
    let m = g.edge_count();
    for &e in plan.keys() {
        if e >= m {
            return Err(Error::BadParameter(format!(
                "subdivision plan names edge {e}, but the graph has {m} edges"
            )));
        }
    }
    let count = |e: EdgeId| plan.get(&e).copied().unwrap_or(0);
    let mut interior_start = vec![0usize; m];
    let mut segment_start = vec![0usize; m];
    let mut acc_v = n;
    let mut acc_e = 0;
    for e in 0..m {
        interior_start[e] = acc_v;
        segment_start[e] = acc_e;
        acc_v += count(e);
        acc_e += count(e) + 1;
    }
    let total_vertices = acc_v;

    // Chain vertices of edge e from its even-dart origin: u, w0, .., w_{c-1}, v.
    let chain_vertex = |e: EdgeId, j: usize| -> VertexId {
        let c = count(e);
        let (u, v) = g.endpoints(e);
        if j == 0 {
            u
        } else if j == c + 1 {
            v
        } else {
            interior_start[e] + j - 1
        }
    };

    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); total_vertices];
    for (v, row) in adj.iter_mut().enumerate().take(n) {
        for &d in g.rotation(v) {
            let e = g.edge_of(d);
            let c = count(e);
            if d.is_multiple_of(2) {
                row.push((chain_vertex(e, 1), segment_start[e]));
            } else {
                row.push((chain_vertex(e, c), segment_start[e] + c));
            }
        }
    }
    for (e, &seg) in segment_start.iter().enumerate() {
        for j in 1..=count(e) {
            let w = chain_vertex(e, j);
            adj[w].push((chain_vertex(e, j - 1), seg + j - 1));
            adj[w].push((chain_vertex(e, j + 1), seg + j));
        }
    }
    PlaneGraph::from_rotations(adj)
}

/// Replaces every edge with a path of length `k + 1`.
pub fn regular_subdivide(g: &PlaneGraph, k: usize) -> Result<PlaneGraph> {
    let plan: BTreeMap<EdgeId, usize> = (0..g.edge_count()).map(|e| (e, k)).collect();
    subdivide_edges(g, &plan)
}

/// Identifies `u1 = u2` and `v1 = v2`, embedding `g2` inside the smallest
/// face of `g1` that contains both `u1` and `v1`. Both pairs must lie on a
/// common face of their graph and must be distinct vertices. `g1`'s ids are
/// kept; `g2`'s remaining vertices are appended in ascending order.
pub fn glue_at_two_cut(
    g1: &PlaneGraph,
    g2: &PlaneGraph,
    u1: VertexId,
    v1: VertexId,
    u2: VertexId,
    v2: VertexId,
) -> Result<PlaneGraph> {
    if u1 == v1 || u2 == v2 {
        return Err(Error::BadParameter(
            "gluing a vertex to itself would create a loop".into(),
        ));
    }
    let f1 = common_face(g1, u1, v1)?;
    let f2 = common_face(g2, u2, v2)?;

    let n1 = g1.vertex_count();
    let mut map2 = vec![0usize; g2.vertex_count()];
    let mut next = n1;
    for (w, slot) in map2.iter_mut().enumerate() {
        *slot = if w == u2 {
            u1
        } else if w == v2 {
            v1
        } else {
            let id = next;
            next += 1;
            id
        };
    }
    let m1 = g1.edge_count();
    let total_vertices = next;

    // Rotation of a merged vertex: g1's rotation split at its f1 corner,
    // then g2's rotation split at its f2 corner.
    let spliced = |vg1: VertexId, vg2: VertexId| -> Vec<(VertexId, EdgeId)> {
        let mut out = Vec::new();
        for d in rotation_split_after_corner(g1, vg1, f1) {
            out.push((g1.head(d), g1.edge_of(d)));
        }
        for d in rotation_split_after_corner(g2, vg2, f2) {
            out.push((map2[g2.head(d)], g2.edge_of(d) + m1));
        }
        out
    };

    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); total_vertices];
    for (v, row) in adj.iter_mut().enumerate().take(n1) {
        *row = if v == u1 {
            spliced(u1, u2)
        } else if v == v1 {
            spliced(v1, v2)
        } else {
            g1.neighbor_entries(v)
        };
    }
    for w in 0..g2.vertex_count() {
        if w != u2 && w != v2 {
            adj[map2[w]] = g2
                .neighbor_entries(w)
                .into_iter()
                .map(|(x, e)| (map2[x], e + m1))
                .collect();
        }
    }

    let glued = PlaneGraph::from_rotations(adj)?;
    let report = glued.validate();
    if !report.is_valid() {
        return Err(Error::Internal(format!(
            "gluing broke the embedding: {:?}",
            report.violations
        )));
    }
    Ok(glued)
}

fn common_face(g: &PlaneGraph, u: VertexId, v: VertexId) -> Result<FaceId> {
    g.faces()
        .iter()
        .position(|f| f.contains(u) && f.contains(v))
        .ok_or(Error::NoCommonFace(u, v))
}

/// The darts at `v` in rotation order, starting just after the corner of
/// face `f`. The corner between consecutive darts `(a, rot_next(a))` belongs
/// to the face of `rot_next(a)`'s walk.
fn rotation_split_after_corner(g: &PlaneGraph, v: VertexId, f: FaceId) -> Vec<DartId> {
    let rot = g.rotation(v);
    let k = rot.len();
    let corner = (0..k)
        .find(|&i| g.face_of_dart(rot[(i + 1) % k]) == f)
        .expect("face visits the vertex");
    (0..k).map(|i| rot[(corner + 1 + i) % k]).collect()
}

/// The bare triangular prism, exposed for corpus construction.
pub fn prism() -> PlaneGraph {
    triangular_prism()
}
