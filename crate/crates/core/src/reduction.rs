//! The degree-2 reduction of a 2-connected plane multigraph, the structural
//! trichotomy of the reduced graph, the subdivision multigraph, and the
//! separating-cycle machinery used by the recursive coloring procedure.

use std::collections::{BTreeMap, BTreeSet};

use crate::edgecolor::Multigraph;
use crate::embedding::{DartId, EdgeId, FaceId, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::generators;

/// `R(G)`: every maximal path whose interior vertices have degree 2 is
/// replaced by a single edge. Carries the three correspondences back to `G`.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub reduced: PlaneGraph,
    /// R vertex id -> G vertex id (ascending).
    pub kept: Vec<VertexId>,
    /// G vertex id -> R vertex id, `None` for suppressed degree-2 vertices.
    pub kept_index: Vec<Option<usize>>,
    /// R edge -> full G vertex sequence of its path, oriented from the
    /// origin of the R edge's even dart.
    pub edge_to_path: Vec<Vec<VertexId>>,
    /// R face -> the G face it expands to.
    pub face_map: Vec<FaceId>,
    /// R dart -> oriented sequence of G darts along its path.
    dart_paths: Vec<Vec<DartId>>,
}

impl ReductionResult {
    pub fn interior_len(&self, e: EdgeId) -> usize {
        self.edge_to_path[e].len() - 2
    }

    /// All `edge_to_path` interiors have the same length (a regular
    /// subdivision of the reduced graph, `k = 0` included).
    pub fn is_regular(&self) -> bool {
        let mut lens = self.edge_to_path.iter().map(|p| p.len());
        match lens.next() {
            None => true,
            Some(first) => lens.all(|l| l == first),
        }
    }

    pub fn g_darts_of(&self, r_dart: DartId) -> &[DartId] {
        &self.dart_paths[r_dart]
    }

    /// Rebuilds a graph isomorphic to the original by re-subdividing the
    /// reduced graph along the recorded paths.
    pub fn resubdivide(&self) -> Result<PlaneGraph> {
        let plan: BTreeMap<EdgeId, usize> = (0..self.reduced.edge_count())
            .map(|e| (e, self.interior_len(e)))
            .collect();
        generators::subdivide_edges(&self.reduced, &plan)
    }
}

/// Computes the reduction of a 2-connected graph that is not a cycle.
pub fn reduce(g: &PlaneGraph) -> Result<ReductionResult> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let n = g.vertex_count();
    let kept: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    if kept.is_empty() {
        return Err(Error::IsCycle);
    }
    let mut kept_index = vec![None; n];
    for (i, &v) in kept.iter().enumerate() {
        kept_index[v] = Some(i);
    }

    let mut claimed = vec![false; g.dart_count()];
    let mut edge_to_path: Vec<Vec<VertexId>> = Vec::new();
    let mut dart_paths: Vec<Vec<DartId>> = Vec::new();
    // Initial G dart of each path traversal -> (R edge, R endpoint vertex).
    let mut initial: BTreeMap<DartId, (EdgeId, usize)> = BTreeMap::new();

    for &u in &kept {
        for &d in g.rotation(u) {
            if claimed[d] {
                continue;
            }
            let mut darts = vec![d];
            let mut cur = d;
            loop {
                let w = g.head(cur);
                if g.degree(w) >= 3 {
                    break;
                }
                let back = g.twin(cur);
                let rot = g.rotation(w);
                cur = if rot[0] == back { rot[1] } else { rot[0] };
                darts.push(cur);
            }
            let v = g.head(*darts.last().unwrap());
            let re = edge_to_path.len();
            let mut vertices = Vec::with_capacity(darts.len() + 1);
            vertices.push(u);
            for &pd in &darts {
                vertices.push(g.head(pd));
            }
            let reverse: Vec<DartId> = darts.iter().rev().map(|&pd| g.twin(pd)).collect();
            for &pd in &darts {
                claimed[pd] = true;
            }
            for &pd in &reverse {
                claimed[pd] = true;
            }
            initial.insert(darts[0], (re, kept_index[v].unwrap()));
            initial.insert(reverse[0], (re, kept_index[u].unwrap()));
            edge_to_path.push(vertices);
            dart_paths.push(darts);
            dart_paths.push(reverse);
        }
    }

    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); kept.len()];
    for (i, &u) in kept.iter().enumerate() {
        for &d in g.rotation(u) {
            let &(re, other) = initial
                .get(&d)
                .ok_or_else(|| Error::Internal("dart missing from path table".into()))?;
            adj[i].push((other, re));
        }
    }
    let reduced = PlaneGraph::from_rotations(adj)?;

    if (0..reduced.vertex_count()).any(|v| reduced.degree(v) < 3) {
        return Err(Error::Internal(
            "reduction kept a vertex of degree < 3".into(),
        ));
    }

    // dart_paths is indexed by R darts: traversal order above matches the
    // scan order `from_rotations` uses to number darts, so R dart 2e is the
    // forward traversal that created edge e. Check rather than trust.
    for e in 0..reduced.edge_count() {
        let origin = kept[reduced.origin(2 * e)];
        if edge_to_path[e][0] != origin {
            return Err(Error::Internal(
                "reduction dart orientation mismatch".into(),
            ));
        }
    }

    let mut face_map = vec![usize::MAX; reduced.faces().len()];
    let mut seen = vec![false; g.faces().len()];
    for (rf, face) in reduced.faces().iter().enumerate() {
        let gf = g.face_of_dart(dart_paths[face.walk[0]][0]);
        for &rd in &face.walk {
            for &gd in &dart_paths[rd] {
                if g.face_of_dart(gd) != gf {
                    return Err(Error::Internal(
                        "reduction face walk straddles faces".into(),
                    ));
                }
            }
        }
        if seen[gf] {
            return Err(Error::Internal(
                "reduction face map is not injective".into(),
            ));
        }
        seen[gf] = true;
        face_map[rf] = gf;
    }
    if reduced.faces().len() != g.faces().len() {
        return Err(Error::Internal("face counts differ between G and R".into()));
    }

    Ok(ReductionResult {
        reduced,
        kept,
        kept_index,
        edge_to_path,
        face_map,
        dart_paths,
    })
}

/// One of the two boundary paths used by the separating-cycle construction,
/// at the level of the reduced graph. `outer_darts` are the R darts of the
/// path's edges on the side away from the enclosed subgraph.
#[derive(Debug, Clone)]
pub struct BoundaryPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub outer_darts: Vec<DartId>,
}

/// Structural classification of a reduced graph. The properties can
/// co-occur; the classifier picks the first applicable in the order
/// simple-3-connected, 2-face, 2-cut.
#[derive(Debug, Clone)]
pub enum StructureClass {
    Simple3Connected,
    /// A face bounded by two parallel edges.
    TwoFace {
        u: VertexId,
        v: VertexId,
        face: FaceId,
        paths: [BoundaryPath; 2],
    },
    /// A vertex cut `{u, v}` together with the component `K` minimizing
    /// `|V(K)|` whose closed subgraph is 2-connected, and the two boundary
    /// paths of that subgraph's outer cycle.
    TwoCut {
        u: VertexId,
        v: VertexId,
        component: Vec<VertexId>,
        paths: [BoundaryPath; 2],
    },
}

impl StructureClass {
    pub fn tag(&self) -> &'static str {
        match self {
            StructureClass::Simple3Connected => "SIMPLE_3_CONNECTED",
            StructureClass::TwoFace { .. } => "TWO_FACE",
            StructureClass::TwoCut { .. } => "TWO_CUT",
        }
    }
}

pub fn classify(r: &ReductionResult) -> Result<StructureClass> {
    let red = &r.reduced;
    if red.is_three_connected_simple() {
        return Ok(StructureClass::Simple3Connected);
    }

    if let Some((fid, face)) = red.faces().iter().enumerate().find(|(_, f)| f.degree == 2) {
        // R is 2-connected, so the walk of a 2-face is exactly two parallel
        // darts.
        let d1 = face.walk[0];
        let d2 = face.walk[1];
        let u = red.origin(d1);
        let v = red.origin(d2);
        let path = |d: DartId| BoundaryPath {
            vertices: vec![red.origin(d), red.head(d)],
            edges: vec![red.edge_of(d)],
            outer_darts: vec![red.twin(d)],
        };
        return Ok(StructureClass::TwoFace {
            u: u.min(v),
            v: u.max(v),
            face: fid,
            paths: [path(d1), path(d2)],
        });
    }

    // 2-cut search: all vertex pairs, all components, smallest component
    // first, then lexicographic (u, v, min K). Minimality should force the
    // closed piece to be 2-connected; verify instead of trusting.
    let n = red.vertex_count();
    let mut candidates = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let comps = components_avoiding(red, u, v);
            if comps.len() < 2 {
                continue;
            }
            for comp in comps {
                candidates.push((comp.len(), u, v, comp));
            }
        }
    }
    candidates.sort_by(|a, b| (a.0, a.1, a.2, &a.3).cmp(&(b.0, b.1, b.2, &b.3)));
    for (_, u, v, comp) in candidates {
        if let Some(paths) = two_cut_boundary(red, u, v, &comp)? {
            return Ok(StructureClass::TwoCut {
                u,
                v,
                component: comp,
                paths,
            });
        }
    }
    Err(Error::Internal(
        "reduced graph fits none of the three structure classes".into(),
    ))
}

fn components_avoiding(g: &PlaneGraph, u: VertexId, v: VertexId) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[u] = true;
    seen[v] = true;
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &d in g.rotation(x) {
                let w = g.head(d);
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

/// Builds `H_R(u, v)` on `K + {u, v}` without any u-v edges, checks it is
/// 2-connected, and extracts the boundary cycle of the face that holds the
/// deleted part of R, split into two u,v-paths.
fn two_cut_boundary(
    red: &PlaneGraph,
    u: VertexId,
    v: VertexId,
    comp: &[VertexId],
) -> Result<Option<[BoundaryPath; 2]>> {
    let mut vset: BTreeSet<VertexId> = comp.iter().copied().collect();
    vset.insert(u);
    vset.insert(v);
    let keep_edge = |e: EdgeId| {
        let (a, b) = red.endpoints(e);
        vset.contains(&a) && vset.contains(&b) && !(a == u && b == v) && !(a == v && b == u)
    };
    let (h, old_vertex, old_edge) = induced_subgraph(red, &vset, keep_edge);
    if !h.is_two_connected() {
        return Ok(None);
    }

    // R-face walks, as sorted dart sets, for recognizing unchanged faces.
    let r_face_sets: BTreeSet<Vec<DartId>> = red
        .faces()
        .iter()
        .map(|f| {
            let mut w = f.walk.clone();
            w.sort_unstable();
            w
        })
        .collect();
    let to_r_dart = |hd: DartId| -> DartId {
        let he = h.edge_of(hd);
        let re = old_edge[he];
        let origin_old = old_vertex[h.origin(hd)];
        red.dart_from(origin_old, re)
    };

    let mut best: Option<(DartId, Vec<DartId>)> = None;
    for face in h.faces() {
        let mapped: Vec<DartId> = face.walk.iter().map(|&d| to_r_dart(d)).collect();
        let mut sorted = mapped.clone();
        sorted.sort_unstable();
        if r_face_sets.contains(&sorted) {
            continue;
        }
        let verts: BTreeSet<VertexId> = mapped.iter().map(|&d| red.origin(d)).collect();
        if !verts.contains(&u) || !verts.contains(&v) {
            continue;
        }
        let key = *sorted.first().unwrap();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, mapped));
        }
    }
    let Some((_, walk)) = best else {
        return Ok(None);
    };

    // Split the boundary cycle at u and v. H is 2-connected, so the walk
    // visits each vertex once.
    let verts: Vec<VertexId> = walk.iter().map(|&d| red.origin(d)).collect();
    let pu = verts.iter().position(|&x| x == u).unwrap();
    let pv = verts.iter().position(|&x| x == v).unwrap();
    let arc = |from: usize, to: usize| -> BoundaryPath {
        let k = walk.len();
        let mut darts = Vec::new();
        let mut i = from;
        while i != to {
            darts.push(walk[i]);
            i = (i + 1) % k;
        }
        let mut vertices: Vec<VertexId> = darts.iter().map(|&d| red.origin(d)).collect();
        vertices.push(red.origin(walk[to]));
        BoundaryPath {
            vertices,
            edges: darts.iter().map(|&d| red.edge_of(d)).collect(),
            outer_darts: darts,
        }
    };
    let mut pa = arc(pu, pv);
    let mut pb = arc(pv, pu);
    // Present both as u -> v paths.
    pb.vertices.reverse();
    pb.edges.reverse();
    if pa.vertices.first() != Some(&u) {
        std::mem::swap(&mut pa, &mut pb);
    }
    Ok(Some([pa, pb]))
}

/// Restriction of `g` to a vertex set and an edge filter, with dense ids.
/// Returns the subgraph plus new-to-old vertex and edge tables.
fn induced_subgraph(
    g: &PlaneGraph,
    vset: &BTreeSet<VertexId>,
    keep_edge: impl Fn(EdgeId) -> bool,
) -> (PlaneGraph, Vec<VertexId>, Vec<EdgeId>) {
    let old_vertex: Vec<VertexId> = vset.iter().copied().collect();
    let vmap: BTreeMap<VertexId, usize> = old_vertex
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut old_edge = Vec::new();
    let mut emap: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for e in 0..g.edge_count() {
        let (a, b) = g.endpoints(e);
        if vset.contains(&a) && vset.contains(&b) && keep_edge(e) {
            emap.insert(e, old_edge.len());
            old_edge.push(e);
        }
    }
    let mut adj = vec![Vec::new(); old_vertex.len()];
    for (&old_v, &new_v) in &vmap {
        for &d in g.rotation(old_v) {
            let e = g.edge_of(d);
            if let Some(&ne) = emap.get(&e) {
                adj[new_v].push((vmap[&g.head(d)], ne));
            }
        }
    }
    let h = PlaneGraph::from_rotations(adj).expect("induced rotations are well formed");
    (h, old_vertex, old_edge)
}

/// `S(G)`: one vertex per face of `G`, one edge per degree-2 vertex joining
/// its two incident faces.
#[derive(Debug, Clone)]
pub struct SubdivisionMultigraph {
    pub face_count: usize,
    /// Sorted by suppressed vertex id.
    pub links: Vec<SubdivisionLink>,
    pub max_degree: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubdivisionLink {
    pub vertex: VertexId,
    pub faces: (FaceId, FaceId),
}

impl SubdivisionMultigraph {
    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::new(
            self.face_count,
            self.links.iter().map(|l| l.faces).collect(),
        )
        .expect("subdivision multigraph has no loops")
    }

    /// Index of the link (= edge of S) owned by the degree-2 vertex `v`.
    pub fn link_index(&self, v: VertexId) -> Option<usize> {
        self.links.binary_search_by_key(&v, |l| l.vertex).ok()
    }
}

pub fn subdivision_multigraph(
    g: &PlaneGraph,
    r: &ReductionResult,
) -> Result<SubdivisionMultigraph> {
    let mut links = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) != 2 {
            continue;
        }
        let rot = g.rotation(v);
        let f1 = g.face_of_dart(rot[0]);
        let f2 = g.face_of_dart(rot[1]);
        if f1 == f2 {
            return Err(Error::Internal(format!(
                "degree-2 vertex {v} has both corners on one face"
            )));
        }
        links.push(SubdivisionLink {
            vertex: v,
            faces: (f1.min(f2), f1.max(f2)),
        });
    }
    let face_count = g.faces().len();
    if face_count != r.reduced.faces().len() {
        return Err(Error::Internal("reduction does not match the graph".into()));
    }
    let mut degree = vec![0usize; face_count];
    let mut classes: BTreeMap<(FaceId, FaceId), usize> = BTreeMap::new();
    for l in &links {
        degree[l.faces.0] += 1;
        degree[l.faces.1] += 1;
        *classes.entry(l.faces).or_insert(0) += 1;
    }
    Ok(SubdivisionMultigraph {
        face_count,
        links,
        max_degree: degree.into_iter().max().unwrap_or(0),
        multiplicity: classes.into_values().max().unwrap_or(0),
    })
}

/// A separating cycle together with the vertex and edge sets of its two
/// sides. The side labeled interior is the one holding the second boundary
/// path of the construction; on the sphere the labels are a convention.
#[derive(Debug, Clone)]
pub struct SeparatingCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub interior_vertices: BTreeSet<VertexId>,
    pub interior_edges: BTreeSet<EdgeId>,
    pub exterior_vertices: BTreeSet<VertexId>,
    pub exterior_edges: BTreeSet<EdgeId>,
}

impl SeparatingCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone)]
struct LiftedPath {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    outer_face: FaceId,
}

fn lift_path(g: &PlaneGraph, r: &ReductionResult, path: &BoundaryPath) -> Result<LiftedPath> {
    let red = &r.reduced;
    let mut vertices = vec![r.kept[path.vertices[0]]];
    let mut edges = Vec::new();
    for (i, &re) in path.edges.iter().enumerate() {
        let from = path.vertices[i];
        let rd = red.dart_from(from, re);
        for &gd in r.g_darts_of(rd) {
            edges.push(g.edge_of(gd));
            vertices.push(g.head(gd));
        }
    }
    let mut outer_face = None;
    for &rd in &path.outer_darts {
        let f = g.face_of_dart(r.g_darts_of(rd)[0]);
        match outer_face {
            None => outer_face = Some(f),
            Some(prev) if prev != f => {
                return Err(Error::Internal(
                    "outer flank of a boundary path is not a single face".into(),
                ))
            }
            _ => {}
        }
    }
    Ok(LiftedPath {
        vertices,
        edges,
        outer_face: outer_face.ok_or_else(|| Error::Internal("empty boundary path".into()))?,
    })
}

/// The complementary u,v-arc of a face boundary, given the arc that must be
/// excluded. Returned oriented from `v` to `u`.
fn complement_arc(
    g: &PlaneGraph,
    face: FaceId,
    u: VertexId,
    v: VertexId,
    excluded_edges: &[EdgeId],
) -> Result<(Vec<VertexId>, Vec<EdgeId>)> {
    let walk = &g.faces()[face].walk;
    let verts: Vec<VertexId> = walk.iter().map(|&d| g.origin(d)).collect();
    let pu = verts
        .iter()
        .position(|&x| x == u)
        .ok_or_else(|| Error::Internal("face misses path endpoint".into()))?;
    let pv = verts
        .iter()
        .position(|&x| x == v)
        .ok_or_else(|| Error::Internal("face misses path endpoint".into()))?;
    let k = walk.len();
    let collect = |from: usize, to: usize| {
        let mut vs = Vec::new();
        let mut es = Vec::new();
        let mut i = from;
        vs.push(verts[i]);
        while i != to {
            es.push(g.edge_of(walk[i]));
            i = (i + 1) % k;
            vs.push(verts[i]);
        }
        (vs, es)
    };
    let (vs1, es1) = collect(pu, pv);
    let (vs2, es2) = collect(pv, pu);
    let mut excluded = excluded_edges.to_vec();
    excluded.sort_unstable();
    let matches = |es: &[EdgeId]| {
        let mut s = es.to_vec();
        s.sort_unstable();
        s == excluded
    };
    // Return the arc complementary to the excluded one, oriented v -> u.
    if matches(&es1) {
        Ok((vs2, es2))
    } else if matches(&es2) {
        let mut vs = vs1;
        let mut es = es1;
        vs.reverse();
        es.reverse();
        Ok((vs, es))
    } else {
        Err(Error::Internal(
            "face boundary does not contain the lifted path".into(),
        ))
    }
}

/// Finds a separating cycle of length at most the maximum face degree, by
/// the two-face / two-cut construction on the reduction. Fails when the
/// reduction is simple 3-connected (the other arm of the dichotomy), when
/// the graph has fewer than four faces, or when it is not 2-connected.
pub fn find_separating_cycle(g: &PlaneGraph) -> Result<SeparatingCycle> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    if g.faces().len() < 4 {
        return Err(Error::TooFewFaces {
            needed: 4,
            found: g.faces().len(),
        });
    }
    let r = reduce(g)?;
    let (u_r, v_r, paths) = match classify(&r)? {
        StructureClass::Simple3Connected => return Err(Error::ReductionSimple3Connected),
        StructureClass::TwoFace { u, v, paths, .. } => (u, v, paths),
        StructureClass::TwoCut { u, v, paths, .. } => (u, v, paths),
    };
    let u = r.kept[u_r];
    let v = r.kept[v_r];

    let mut pa = lift_path(g, &r, &paths[0])?;
    let mut pb = lift_path(g, &r, &paths[1])?;
    for p in [&mut pa, &mut pb] {
        if p.vertices.first() == Some(&v) && p.vertices.last() == Some(&u) {
            p.vertices.reverse();
            p.edges.reverse();
        }
        if p.vertices.first() != Some(&u) || p.vertices.last() != Some(&v) {
            return Err(Error::Internal(
                "lifted boundary path does not join the witness pair".into(),
            ));
        }
    }
    // Close the shorter of the two paths with the outer arc along the longer
    // one's flanking face; ties pick the path with the smaller lowest
    // interior vertex (then edge id) as the kept one.
    let rank = |p: &LiftedPath| {
        let min_interior = p.vertices[1..p.vertices.len() - 1]
            .iter()
            .min()
            .copied()
            .unwrap_or(usize::MAX);
        (p.edges.len(), min_interior, p.edges[0])
    };
    if rank(&pb) < rank(&pa) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let f1 = pa.outer_face;
    let f2 = pb.outer_face;
    if f1 == f2 {
        return Err(Error::Internal(
            "both boundary paths flank the same face".into(),
        ));
    }

    // P_d = the other u,v-arc of f2's boundary, oriented v -> u.
    let (pd_vertices, pd_edges) = complement_arc(g, f2, u, v, &pb.edges)?;

    let mut vertices = pa.vertices.clone();
    vertices.pop(); // drop v, re-added as the head of the return arc
    let mut edges = pa.edges.clone();
    vertices.extend_from_slice(&pd_vertices[..pd_vertices.len() - 1]);
    edges.extend_from_slice(&pd_edges);
    // vertices now reads u, interior(P_a), v, interior(P_d).

    let distinct: BTreeSet<VertexId> = vertices.iter().copied().collect();
    if distinct.len() != vertices.len() {
        return Err(Error::Internal(
            "constructed cycle revisits a vertex".into(),
        ));
    }
    if vertices.len() > g.delta_star() {
        return Err(Error::Internal(format!(
            "constructed cycle has length {} > maximum face degree {}",
            vertices.len(),
            g.delta_star()
        )));
    }

    let sides = cycle_sides(g, &vertices, &edges)?;
    // The interior is the side holding the second boundary path.
    let pb_probe = pb.edges[0];
    let (int_idx, ext_idx) = if sides[0].edges.contains(&pb_probe) {
        (0, 1)
    } else if sides[1].edges.contains(&pb_probe) {
        (1, 0)
    } else {
        return Err(Error::Internal(
            "second boundary path vanished from both sides".into(),
        ));
    };
    let interior = &sides[int_idx];
    let exterior = &sides[ext_idx];
    if interior.vertices.is_empty() && interior.edges.is_empty() {
        return Err(Error::NotSeparating("interior is empty".into()));
    }
    if exterior.vertices.is_empty() && exterior.edges.is_empty() {
        return Err(Error::NotSeparating("exterior is empty".into()));
    }
    Ok(SeparatingCycle {
        vertices,
        edges,
        interior_vertices: interior.vertices.clone(),
        interior_edges: interior.edges.clone(),
        exterior_vertices: exterior.vertices.clone(),
        exterior_edges: exterior.edges.clone(),
    })
}

#[derive(Debug, Clone, Default)]
struct Side {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<EdgeId>,
}

/// Classifies everything off a cycle into the two sides of the embedding.
/// At each cycle vertex the rotation splits into two sectors between the two
/// cycle darts; sector membership is propagated and cross-checked, so a
/// non-simple or non-separating "cycle" is detected rather than accepted.
fn cycle_sides(g: &PlaneGraph, vertices: &[VertexId], edges: &[EdgeId]) -> Result<[Side; 2]> {
    let k = vertices.len();
    if k < 2 || edges.len() != k {
        return Err(Error::NotSeparating("not a cycle".into()));
    }
    let vset: BTreeSet<VertexId> = vertices.iter().copied().collect();
    let eset: BTreeSet<EdgeId> = edges.iter().copied().collect();
    if vset.len() != k || eset.len() != k {
        return Err(Error::NotSeparating(
            "cycle repeats a vertex or edge".into(),
        ));
    }
    for i in 0..k {
        let (a, b) = g.endpoints(edges[i]);
        let (x, y) = (vertices[i], vertices[(i + 1) % k]);
        if !((a, b) == (x, y) || (a, b) == (y, x)) {
            return Err(Error::NotSeparating(format!(
                "edge {} does not join consecutive cycle vertices",
                edges[i]
            )));
        }
    }

    // Sector label for every non-cycle dart at a cycle vertex.
    let mut dart_side: BTreeMap<DartId, usize> = BTreeMap::new();
    for i in 0..k {
        let v = vertices[i];
        let e_prev = edges[(i + k - 1) % k];
        let e_next = edges[i];
        let d_prev = g.dart_from(v, e_prev);
        let d_next = g.dart_from(v, e_next);
        let rot = g.rotation(v);
        let start = rot.iter().position(|&d| d == d_prev).unwrap();
        let mut side = 0;
        for step in 1..rot.len() {
            let d = rot[(start + step) % rot.len()];
            if d == d_next {
                side = 1;
                continue;
            }
            dart_side.insert(d, side);
        }
    }

    let mut vertex_side: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut edge_side: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut queue: Vec<VertexId> = Vec::new();
    let assign_edge =
        |e: EdgeId, side: usize, edge_side: &mut BTreeMap<EdgeId, usize>| match edge_side.get(&e) {
            Some(&s) if s != side => Err(Error::NotSeparating(format!(
                "edge {e} is reachable from both sides"
            ))),
            _ => {
                edge_side.insert(e, side);
                Ok(())
            }
        };

    for (&d, &side) in &dart_side {
        let e = g.edge_of(d);
        assign_edge(e, side, &mut edge_side)?;
        let w = g.head(d);
        if vset.contains(&w) {
            let back = g.twin(d);
            match dart_side.get(&back) {
                Some(&s) if s != side => {
                    return Err(Error::NotSeparating(format!(
                        "chord {e} connects the two sides"
                    )))
                }
                Some(_) => {}
                None => return Err(Error::Internal("cycle dart misclassified".into())),
            }
        } else {
            match vertex_side.get(&w) {
                Some(&s) if s != side => {
                    return Err(Error::NotSeparating(format!(
                        "vertex {w} is reachable from both sides"
                    )))
                }
                Some(_) => {}
                None => {
                    vertex_side.insert(w, side);
                    queue.push(w);
                }
            }
        }
    }

    while let Some(x) = queue.pop() {
        let side = vertex_side[&x];
        for &d in g.rotation(x) {
            let e = g.edge_of(d);
            assign_edge(e, side, &mut edge_side)?;
            let w = g.head(d);
            if vset.contains(&w) {
                let back = g.twin(d);
                match dart_side.get(&back) {
                    Some(&s) if s != side => {
                        return Err(Error::NotSeparating(format!(
                            "vertex {w} sector disagrees with side {side}"
                        )))
                    }
                    Some(_) => {}
                    None => return Err(Error::Internal("unlabeled sector dart".into())),
                }
            } else {
                match vertex_side.get(&w) {
                    Some(&s) if s != side => {
                        return Err(Error::NotSeparating(format!(
                            "vertex {w} is reachable from both sides"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        vertex_side.insert(w, side);
                        queue.push(w);
                    }
                }
            }
        }
    }

    // Connectivity of g means every non-cycle vertex and edge got a side.
    let labeled_vertices = vertex_side.len() + k;
    let labeled_edges = edge_side.len() + k;
    if labeled_vertices != g.vertex_count() || labeled_edges != g.edge_count() {
        return Err(Error::Internal(
            "side labeling left elements unreached".into(),
        ));
    }

    let mut sides = [Side::default(), Side::default()];
    for (v, s) in vertex_side {
        sides[s].vertices.insert(v);
    }
    for (e, s) in edge_side {
        sides[s].edges.insert(e);
    }
    Ok(sides)
}

/// The two pieces of a split, with vertex maps back to the original ids.
#[derive(Debug, Clone)]
pub struct SplitPieces {
    pub interior_piece: PlaneGraph,
    pub interior_map: Vec<VertexId>,
    pub exterior_piece: PlaneGraph,
    pub exterior_map: Vec<VertexId>,
}

/// Deletes everything strictly on one side of the cycle, keeping the cycle
/// itself in both pieces. The recorded side sets must match the embedding.
pub fn split_along_cycle(g: &PlaneGraph, c: &SeparatingCycle) -> Result<SplitPieces> {
    let sides = cycle_sides(g, &c.vertices, &c.edges)?;
    let matches = |side: &Side, vs: &BTreeSet<VertexId>, es: &BTreeSet<EdgeId>| {
        side.vertices == *vs && side.edges == *es
    };
    let (int_side, ext_side) = if matches(&sides[0], &c.interior_vertices, &c.interior_edges)
        && matches(&sides[1], &c.exterior_vertices, &c.exterior_edges)
    {
        (&sides[0], &sides[1])
    } else if matches(&sides[1], &c.interior_vertices, &c.interior_edges)
        && matches(&sides[0], &c.exterior_vertices, &c.exterior_edges)
    {
        (&sides[1], &sides[0])
    } else {
        return Err(Error::NotSeparating(
            "recorded side sets do not match the embedding".into(),
        ));
    };
    if (int_side.vertices.is_empty() && int_side.edges.is_empty())
        || (ext_side.vertices.is_empty() && ext_side.edges.is_empty())
    {
        return Err(Error::NotSeparating("one side is empty".into()));
    }

    let build = |side: &Side| -> Result<(PlaneGraph, Vec<VertexId>)> {
        let mut vset: BTreeSet<VertexId> = c.vertices.iter().copied().collect();
        vset.extend(side.vertices.iter().copied());
        let mut eset: BTreeSet<EdgeId> = c.edges.iter().copied().collect();
        eset.extend(side.edges.iter().copied());
        let (piece, old_vertex, _) = induced_subgraph(g, &vset, |e| eset.contains(&e));
        let report = piece.validate();
        if !report.is_valid() {
            return Err(Error::Internal(format!(
                "split piece is not a plane graph: {:?}",
                report.violations
            )));
        }
        if !piece.is_two_connected() {
            return Err(Error::Internal("split piece is not 2-connected".into()));
        }
        Ok((piece, old_vertex))
    };
    let (interior_piece, interior_map) = build(int_side)?;
    let (exterior_piece, exterior_map) = build(ext_side)?;
    Ok(SplitPieces {
        interior_piece,
        interior_map,
        exterior_piece,
        exterior_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::rotation_isomorphic;
    use crate::generators;

    fn glued_double_prism() -> PlaneGraph {
        let p = generators::prism();
        generators::glue_at_two_cut(&p, &p, 0, 1, 0, 1).unwrap()
    }

    #[test]
    fn cube_reduces_to_itself() {
        let cube = generators::platonic("cube").unwrap();
        let r = reduce(&cube).unwrap();
        assert!(rotation_isomorphic(&r.reduced, &cube));
        assert!(r.edge_to_path.iter().all(|p| p.len() == 2));
        assert!(r.is_regular());
    }

    #[test]
    fn prism_subdiv_reduces_to_prism() {
        for t in 1..=3 {
            let g = generators::prism_subdiv(t).unwrap();
            let r = reduce(&g).unwrap();
            assert!(rotation_isomorphic(&r.reduced, &generators::prism()));
            let interiors: Vec<usize> = (0..r.reduced.edge_count())
                .map(|e| r.interior_len(e))
                .collect();
            assert_eq!(interiors.iter().filter(|&&c| c == t).count(), 3);
            assert_eq!(interiors.iter().filter(|&&c| c == 0).count(), 6);
            assert_eq!(g.faces().len(), r.reduced.faces().len());
        }
    }

    #[test]
    fn theta_reduces_to_parallel_edges() {
        let g = generators::theta(2, 2, 2).unwrap();
        let r = reduce(&g).unwrap();
        assert_eq!(r.reduced.vertex_count(), 2);
        assert_eq!(r.reduced.edge_count(), 3);
        assert_eq!(r.reduced.faces().len(), 3);
        assert_eq!(g.faces().len(), 3);
    }

    #[test]
    fn reduce_rejects_cycles_and_non_2_connected() {
        let c = generators::cycle_graph(5).unwrap();
        assert!(matches!(reduce(&c), Err(Error::IsCycle)));
        let bridge = PlaneGraph::from_rotations(vec![vec![(1, 0)], vec![(0, 0)]]).unwrap();
        assert!(matches!(reduce(&bridge), Err(Error::NotTwoConnected)));
    }

    #[test]
    fn round_trip_resubdivision() {
        for g in [
            generators::prism_subdiv(2).unwrap(),
            generators::theta(2, 3, 4).unwrap(),
            generators::regular_subdivide(&generators::platonic("cube").unwrap(), 1).unwrap(),
        ] {
            let r = reduce(&g).unwrap();
            let rebuilt = r.resubdivide().unwrap();
            assert!(rotation_isomorphic(&g, &rebuilt));
        }
    }

    #[test]
    fn classify_cube_simple_3_connected() {
        let r = reduce(&generators::platonic("cube").unwrap()).unwrap();
        assert!(matches!(
            classify(&r).unwrap(),
            StructureClass::Simple3Connected
        ));
    }

    #[test]
    fn classify_theta_two_face() {
        let r = reduce(&generators::theta(2, 2, 2).unwrap()).unwrap();
        match classify(&r).unwrap() {
            StructureClass::TwoFace { u, v, .. } => {
                assert_eq!((u, v), (0, 1));
            }
            other => panic!("expected TWO_FACE, got {}", other.tag()),
        }
    }

    #[test]
    fn classify_glued_prisms_two_cut() {
        let g = glued_double_prism();
        let r = reduce(&g).unwrap();
        match classify(&r).unwrap() {
            StructureClass::TwoCut {
                u, v, component, ..
            } => {
                assert_eq!((r.kept[u], r.kept[v]), (0, 1));
                assert_eq!(component.len(), 4);
                // Ties are broken toward the component with the smallest
                // vertex, the first prism's remnant.
                assert_eq!(r.kept[component[0]], 2);
            }
            other => panic!("expected TWO_CUT, got {}", other.tag()),
        }
    }

    #[test]
    fn subdivision_multigraph_of_cube_is_empty() {
        let cube = generators::platonic("cube").unwrap();
        let r = reduce(&cube).unwrap();
        let s = subdivision_multigraph(&cube, &r).unwrap();
        assert_eq!(s.face_count, 6);
        assert!(s.links.is_empty());
        assert_eq!(s.max_degree, 0);
    }

    #[test]
    fn subdivision_multigraph_of_prism_subdiv() {
        for t in 1..=3 {
            let g = generators::prism_subdiv(t).unwrap();
            let r = reduce(&g).unwrap();
            let s = subdivision_multigraph(&g, &r).unwrap();
            assert_eq!(s.face_count, 5);
            assert_eq!(s.links.len(), 3 * t);
            assert_eq!(s.max_degree, 2 * t);
            assert_eq!(s.multiplicity, t);
        }
    }

    #[test]
    fn subdivision_multigraph_of_theta() {
        let g = generators::theta(2, 2, 2).unwrap();
        let r = reduce(&g).unwrap();
        let s = subdivision_multigraph(&g, &r).unwrap();
        assert_eq!(s.face_count, 3);
        assert_eq!(s.links.len(), 3);
        assert_eq!(s.max_degree, 2);
        assert_eq!(s.multiplicity, 1);
    }

    #[test]
    fn separating_cycle_on_glued_prisms() {
        let g = glued_double_prism();
        let c = find_separating_cycle(&g).unwrap();
        assert!(c.len() <= g.delta_star());
        assert!(!c.interior_vertices.is_empty() || !c.interior_edges.is_empty());
        assert!(!c.exterior_vertices.is_empty() || !c.exterior_edges.is_empty());
    }

    #[test]
    fn separating_cycle_rejects_cube() {
        let cube = generators::platonic("cube").unwrap();
        assert!(matches!(
            find_separating_cycle(&cube),
            Err(Error::ReductionSimple3Connected)
        ));
    }

    #[test]
    fn separating_cycle_rejects_theta() {
        let g = generators::theta(2, 2, 2).unwrap();
        assert!(matches!(
            find_separating_cycle(&g),
            Err(Error::TooFewFaces { needed: 4, .. })
        ));
    }

    #[test]
    fn separating_cycle_two_face_route() {
        // Prism glued with a theta at a hub pair: the reduction gains
        // parallel edges, so the TWO_FACE branch fires.
        let p = generators::prism();
        let th = generators::theta(2, 2, 2).unwrap();
        let g = generators::glue_at_two_cut(&p, &th, 0, 1, 0, 4).unwrap();
        let r = reduce(&g).unwrap();
        assert!(matches!(
            classify(&r).unwrap(),
            StructureClass::TwoFace { .. }
        ));
        let c = find_separating_cycle(&g).unwrap();
        assert!(c.len() <= g.delta_star());
    }

    #[test]
    fn split_counts_faces() {
        let g = glued_double_prism();
        let c = find_separating_cycle(&g).unwrap();
        let pieces = split_along_cycle(&g, &c).unwrap();
        let f1 = pieces.interior_piece.faces().len();
        let f2 = pieces.exterior_piece.faces().len();
        assert_eq!(f1 + f2, g.faces().len() + 2);
        let ds = g.delta_star().max(c.len());
        assert!(pieces.interior_piece.delta_star() <= ds);
        assert!(pieces.exterior_piece.delta_star() <= ds);
    }

    #[test]
    fn split_preserves_face_multiset() {
        let g = glued_double_prism();
        let c = find_separating_cycle(&g).unwrap();
        let pieces = split_along_cycle(&g, &c).unwrap();
        let face_sets = |p: &PlaneGraph, map: &[VertexId]| -> Vec<Vec<VertexId>> {
            p.faces()
                .iter()
                .map(|f| {
                    let mut vs: Vec<VertexId> = f.vertices.iter().map(|&v| map[v]).collect();
                    vs.sort_unstable();
                    vs
                })
                .collect()
        };
        let mut combined = face_sets(&pieces.interior_piece, &pieces.interior_map);
        combined.extend(face_sets(&pieces.exterior_piece, &pieces.exterior_map));
        combined.sort();

        let mut original: Vec<Vec<VertexId>> =
            g.faces().iter().map(|f| f.vertices.clone()).collect();
        let mut cycle_sorted = c.vertices.clone();
        cycle_sorted.sort_unstable();
        original.push(cycle_sorted.clone());
        original.push(cycle_sorted);
        original.sort();
        assert_eq!(combined, original);
    }
}
