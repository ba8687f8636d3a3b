//! Connected plane multigraphs as rotation systems of darts, face tracing,
//! and the scalar parameters derived from the embedding (maximum face degree,
//! vertex degrees, shared-face counts, degree-2 chains, cyclic adjacency).
//!
//! A graph is stored as, per vertex, the clockwise cyclic order of outgoing
//! darts. Edge `e` owns darts `2e` and `2e + 1`, so `twin(d) = d ^ 1` and
//! `edge(d) = d / 2` hold by construction. Faces are traced once at
//! construction time with the successor rule `next = rot_next(twin(d))` and
//! cached; every operation that needs face structure reads the cache.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;
pub type FaceId = usize;

/// One directed half of an edge, materialized for inspection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub origin: VertexId,
    pub twin: DartId,
    pub edge: EdgeId,
}

/// One traced boundary walk. `degree` counts distinct vertices on the walk,
/// which is the face degree used everywhere; `walk.len()` can be larger when
/// a cut vertex repeats on the walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<DartId>,
    pub vertices: Vec<VertexId>,
    pub degree: usize,
}

impl Face {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<DartId>>,
    dart_origin: Vec<VertexId>,
    rot_pos: Vec<usize>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
}

impl PlaneGraph {
    /// Builds a graph from per-vertex clockwise adjacency lists of
    /// `(neighbor, edge_id)` pairs. Edge ids must be dense `0..m` and each
    /// edge id must occur exactly twice across all lists, once at each of its
    /// endpoints (twice at the same vertex for a loop, which `validate`
    /// rejects later).
    pub fn from_rotations(adj: Vec<Vec<(VertexId, EdgeId)>>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::Malformed("graph needs at least one vertex".into()));
        }
        let half_edges: usize = adj.iter().map(|r| r.len()).sum();
        if !half_edges.is_multiple_of(2) {
            return Err(Error::Malformed("odd number of darts".into()));
        }
        let m = half_edges / 2;

        // Locate the two occurrences of every edge id in scan order.
        let mut occurrences: Vec<Vec<(VertexId, usize)>> = vec![Vec::new(); m];
        for (v, rot) in adj.iter().enumerate() {
            for (pos, &(w, e)) in rot.iter().enumerate() {
                if w >= n {
                    return Err(Error::Malformed(format!(
                        "vertex {v} lists neighbor {w} out of range"
                    )));
                }
                if e >= m {
                    return Err(Error::Malformed(format!(
                        "vertex {v} lists edge {e} out of range (expected 0..{m})"
                    )));
                }
                occurrences[e].push((v, pos));
            }
        }
        for (e, occ) in occurrences.iter().enumerate() {
            if occ.len() != 2 {
                return Err(Error::Malformed(format!(
                    "edge {e} occurs {} times, expected exactly 2",
                    occ.len()
                )));
            }
            let (u, pu) = occ[0];
            let (w, pw) = occ[1];
            if adj[u][pu].0 != w || adj[w][pw].0 != u {
                return Err(Error::Malformed(format!(
                    "edge {e} endpoint lists disagree: {u} says ({},{e}), {w} says ({},{e})",
                    adj[u][pu].0, adj[w][pw].0
                )));
            }
        }

        let mut rotation = vec![Vec::new(); n];
        let mut dart_origin = vec![0; 2 * m];
        let mut rot_pos = vec![0; 2 * m];
        for (e, occ) in occurrences.iter().enumerate() {
            for (side, &(v, _)) in occ.iter().enumerate() {
                dart_origin[2 * e + side] = v;
            }
        }
        // Emit darts in each vertex's stated order; the first occurrence of
        // an edge in scan order becomes its even dart.
        let mut seen_edge = vec![false; m];
        for (v, rot) in adj.iter().enumerate() {
            for &(_, e) in rot.iter() {
                let d = if seen_edge[e] { 2 * e + 1 } else { 2 * e };
                seen_edge[e] = true;
                rot_pos[d] = rotation[v].len();
                rotation[v].push(d);
            }
        }
        // Re-derive origins from placement (handles loops, where both darts
        // sit at the same vertex).
        for (v, rot) in rotation.iter().enumerate() {
            for &d in rot {
                dart_origin[d] = v;
            }
        }

        let mut g = PlaneGraph {
            rotation,
            dart_origin,
            rot_pos,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        g.trace_all_faces();
        Ok(g)
    }

    /// Builds a simple graph from its face walks, each given as a cyclic
    /// vertex sequence. All walks must be oriented consistently so that every
    /// directed edge appears exactly once. Parallel edges need
    /// [`PlaneGraph::from_face_walks`] with explicit edge ids.
    pub fn from_faces(n: usize, faces: &[Vec<VertexId>]) -> Result<Self> {
        let mut edge_ids = std::collections::BTreeMap::new();
        let mut walks = Vec::with_capacity(faces.len());
        for face in faces {
            let mut walk = Vec::with_capacity(face.len());
            for i in 0..face.len() {
                let u = face[i];
                let v = face[(i + 1) % face.len()];
                if u == v {
                    return Err(Error::Malformed(format!("face walk has loop at {u}")));
                }
                let key = (u.min(v), u.max(v));
                let next = edge_ids.len();
                let e = *edge_ids.entry(key).or_insert(next);
                walk.push((u, e));
            }
            walks.push(walk);
        }
        Self::from_face_walks(n, &walks)
    }

    /// Builds a graph from its face walks with explicit edge ids: entry
    /// `(v, e)` traverses edge `e` away from `v`. Each edge id must be
    /// traversed exactly once in each direction over all walks.
    pub fn from_face_walks(n: usize, walks: &[Vec<(VertexId, EdgeId)>]) -> Result<Self> {
        let mut m = 0;
        for walk in walks {
            for &(_, e) in walk {
                m = m.max(e + 1);
            }
        }
        // Darts keyed by (vertex, edge): valid because loops are excluded.
        let dart_key = |v: VertexId, e: EdgeId| (v, e);
        let mut succ = std::collections::BTreeMap::new();
        let mut traversed: Vec<Vec<VertexId>> = vec![Vec::new(); m];
        for walk in walks {
            let len = walk.len();
            if len < 2 {
                return Err(Error::Malformed("face walk shorter than 2".into()));
            }
            for i in 0..len {
                let (u, e) = walk[i];
                let (v, f) = walk[(i + 1) % len];
                if u >= n || v >= n {
                    return Err(Error::Malformed("face walk vertex out of range".into()));
                }
                traversed[e].push(u);
                // rot_next(dart at v on edge e) = dart at v on edge f
                if succ.insert(dart_key(v, e), dart_key(v, f)).is_some() {
                    return Err(Error::Malformed(format!(
                        "edge {e} traversed into vertex {v} twice"
                    )));
                }
            }
        }
        for (e, ends) in traversed.iter().enumerate() {
            if ends.len() != 2 || ends[0] == ends[1] {
                return Err(Error::Malformed(format!(
                    "edge {e} must be traversed once in each direction"
                )));
            }
        }

        // Chase the successor map around every vertex to recover rotations.
        let mut darts_at: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for (e, ends) in traversed.iter().enumerate() {
            for &v in ends {
                darts_at[v].push(e);
            }
        }
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            if darts_at[v].is_empty() {
                continue;
            }
            let start = *darts_at[v].iter().min().unwrap();
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                cycle.push(cur);
                let &(nv, ne) = succ.get(&dart_key(v, cur)).ok_or_else(|| {
                    Error::Malformed(format!("dart ({v},{cur}) has no successor"))
                })?;
                debug_assert_eq!(nv, v);
                cur = ne;
                if cur == start {
                    break;
                }
            }
            if cycle.len() != darts_at[v].len() {
                return Err(Error::Malformed(format!(
                    "rotation at vertex {v} splits into several cycles; walks do not form a plane embedding"
                )));
            }
            for e in cycle {
                let other = if traversed[e][0] == v {
                    traversed[e][1]
                } else {
                    traversed[e][0]
                };
                adj[v].push((other, e));
            }
        }
        Self::from_rotations(adj)
    }

    fn trace_all_faces(&mut self) {
        let dn = self.dart_count();
        let mut face_of = vec![usize::MAX; dn];
        let mut faces = Vec::new();
        for d0 in 0..dn {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let fid = faces.len();
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = fid;
                walk.push(d);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            let mut vertices: Vec<VertexId> = walk.iter().map(|&d| self.origin(d)).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let degree = vertices.len();
            faces.push(Face {
                walk,
                vertices,
                degree,
            });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.dart_origin.len()
    }

    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        d / 2
    }

    pub fn origin(&self, d: DartId) -> VertexId {
        self.dart_origin[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.dart_origin[d ^ 1]
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            origin: self.origin(d),
            twin: self.twin(d),
            edge: self.edge_of(d),
        }
    }

    pub fn darts_of_edge(&self, e: EdgeId) -> (DartId, DartId) {
        (2 * e, 2 * e + 1)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.dart_origin[2 * e], self.dart_origin[2 * e + 1])
    }

    /// The dart of edge `e` whose origin is `v`. Panics if `v` is not an
    /// endpoint; for a loop both darts qualify and the even one is returned.
    pub fn dart_from(&self, v: VertexId, e: EdgeId) -> DartId {
        if self.dart_origin[2 * e] == v {
            2 * e
        } else {
            debug_assert_eq!(self.dart_origin[2 * e + 1], v);
            2 * e + 1
        }
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn rot_next(&self, d: DartId) -> DartId {
        let v = self.origin(d);
        let rot = &self.rotation[v];
        rot[(self.rot_pos[d] + 1) % rot.len()]
    }

    pub fn rot_prev(&self, d: DartId) -> DartId {
        let v = self.origin(d);
        let rot = &self.rotation[v];
        rot[(self.rot_pos[d] + rot.len() - 1) % rot.len()]
    }

    /// Successor within the face walk containing `d`.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(self.twin(d))
    }

    /// All traced faces, ordered by their smallest dart id.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of_dart(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    /// The at most two faces incident with vertex `v`, via its outgoing darts.
    pub fn faces_at(&self, v: VertexId) -> Vec<FaceId> {
        let mut fs: Vec<FaceId> = self.rotation[v].iter().map(|&d| self.face_of[d]).collect();
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    pub fn neighbor_entries(&self, v: VertexId) -> Vec<(VertexId, EdgeId)> {
        self.rotation[v]
            .iter()
            .map(|&d| (self.head(d), self.edge_of(d)))
            .collect()
    }

    pub fn is_loop_edge(&self, e: EdgeId) -> bool {
        self.dart_origin[2 * e] == self.dart_origin[2 * e + 1]
    }

    // ---- validation -----------------------------------------------------

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for e in 0..self.edge_count() {
            if self.is_loop_edge(e) {
                violations.push(Violation::Loop { edge: e });
            }
        }
        let connected = self.is_connected();
        if !connected {
            violations.push(Violation::Disconnected);
        }
        let n = self.vertex_count();
        let m = self.edge_count();
        let f = if n == 1 && m == 0 {
            // A single vertex on the sphere bounds one face but has no darts
            // to trace.
            1
        } else {
            self.faces.len()
        };
        let euler = n as i64 - m as i64 + f as i64;
        if euler != 2 {
            violations.push(Violation::EulerMismatch {
                vertices: n,
                edges: m,
                faces: f,
                characteristic: euler,
            });
        }
        ValidationReport {
            vertices: n,
            edges: m,
            faces: f,
            violations,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rotation[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn connected_avoiding(&self, banned: &[VertexId]) -> bool {
        let n = self.vertex_count();
        let mut blocked = vec![false; n];
        for &b in banned {
            blocked[b] = true;
        }
        let Some(start) = (0..n).find(|&v| !blocked[v]) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rotation[v] {
                let w = self.head(d);
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - banned.len()
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs = BTreeSet::new();
        for e in 0..self.edge_count() {
            let (u, v) = self.endpoints(e);
            if u == v {
                return false;
            }
            if !pairs.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    /// Multigraph 2-connectivity: connected, no cut vertex, and on two
    /// vertices at least two parallel edges (a single edge is a bridge).
    pub fn is_two_connected(&self) -> bool {
        let n = self.vertex_count();
        if n < 2 || !self.is_connected() {
            return false;
        }
        if (0..self.edge_count()).any(|e| self.is_loop_edge(e)) {
            return false;
        }
        if n == 2 {
            return self.edge_count() >= 2;
        }
        (0..n).all(|v| self.connected_avoiding(&[v]))
    }

    /// 3-connectivity, tested on simple graphs only: a multigraph is never
    /// reported 3-connected. Pair deletion brute force is fine at the scales
    /// this crate targets.
    pub fn is_three_connected_simple(&self) -> bool {
        if !self.is_simple() || self.vertex_count() < 4 || !self.is_two_connected() {
            return false;
        }
        let n = self.vertex_count();
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.connected_avoiding(&[u, v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Every open neighborhood induces a connected subgraph.
    pub fn is_locally_connected(&self) -> bool {
        let n = self.vertex_count();
        for v in 0..n {
            let nbrs: BTreeSet<VertexId> = self.rotation[v]
                .iter()
                .map(|&d| self.head(d))
                .filter(|&w| w != v)
                .collect();
            if nbrs.len() <= 1 {
                continue;
            }
            let nbrs: Vec<VertexId> = nbrs.into_iter().collect();
            let index: std::collections::BTreeMap<VertexId, usize> =
                nbrs.iter().enumerate().map(|(i, &w)| (w, i)).collect();
            let mut seen = vec![false; nbrs.len()];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(i) = stack.pop() {
                for &d in &self.rotation[nbrs[i]] {
                    let w = self.head(d);
                    if let Some(&j) = index.get(&w) {
                        if !seen[j] {
                            seen[j] = true;
                            count += 1;
                            stack.push(j);
                        }
                    }
                }
            }
            if count != nbrs.len() {
                return false;
            }
        }
        true
    }

    /// Any two faces of degree at least four are vertex disjoint.
    pub fn faces_ge4_pairwise_disjoint(&self) -> bool {
        let big: Vec<&Face> = self.faces.iter().filter(|f| f.degree >= 4).collect();
        for (i, f) in big.iter().enumerate() {
            for g in &big[i + 1..] {
                if intersection_size(&f.vertices, &g.vertices) > 0 {
                    return false;
                }
            }
        }
        true
    }

    // ---- scalar parameters ----------------------------------------------

    /// Maximum face degree.
    pub fn delta_star(&self) -> usize {
        self.faces.iter().map(|f| f.degree).max().unwrap_or(0)
    }

    /// Maximum vertex degree.
    pub fn delta(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Minimum vertex degree.
    pub fn small_delta(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    /// Maximum number of vertices two faces have in common. Needs at least
    /// two faces.
    pub fn k_star(&self) -> Result<usize> {
        if self.faces.len() < 2 {
            return Err(Error::TooFewFaces {
                needed: 2,
                found: self.faces.len(),
            });
        }
        let mut best = 0;
        for i in 0..self.faces.len() {
            for j in (i + 1)..self.faces.len() {
                best = best.max(intersection_size(
                    &self.faces[i].vertices,
                    &self.faces[j].vertices,
                ));
            }
        }
        Ok(best)
    }

    /// Number of vertices of a longest path consisting only of degree-2
    /// vertices. Undefined on cycles, which is a distinct error rather than a
    /// sentinel.
    pub fn t_of(&self) -> Result<usize> {
        let n = self.vertex_count();
        if n > 0 && (0..n).all(|v| self.degree(v) == 2) {
            return Err(Error::IsCycle);
        }
        let mut visited = vec![false; n];
        let mut best = 0;
        for v in 0..n {
            if self.degree(v) != 2 || visited[v] {
                continue;
            }
            visited[v] = true;
            let mut count = 1;
            for &d in self.rotation(v) {
                let mut incoming = d;
                let mut cur = self.head(d);
                while self.degree(cur) == 2 && !visited[cur] {
                    visited[cur] = true;
                    count += 1;
                    let back = self.twin(incoming);
                    let rot = self.rotation(cur);
                    incoming = if rot[0] == back { rot[1] } else { rot[0] };
                    cur = self.head(incoming);
                }
            }
            best = best.max(count);
        }
        Ok(best)
    }

    /// The relation "u and v lie on a common face", as a graph on the same
    /// vertex set. Its chromatic number is the cyclic chromatic number.
    pub fn cyclic_adjacency(&self) -> CyclicAdjacencyGraph {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for face in &self.faces {
            for (i, &u) in face.vertices.iter().enumerate() {
                for &v in &face.vertices[i + 1..] {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
            }
        }
        CyclicAdjacencyGraph { n, adj }
    }
}

fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Loop {
        edge: EdgeId,
    },
    Disconnected,
    EulerMismatch {
        vertices: usize,
        edges: usize,
        faces: usize,
        characteristic: i64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Symmetric "shares a face" relation on the vertices of a plane graph.
#[derive(Debug, Clone)]
pub struct CyclicAdjacencyGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl CyclicAdjacencyGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, u: VertexId) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.adj[u][v]).collect()
    }

    pub fn degree(&self, u: VertexId) -> usize {
        (0..self.n).filter(|&v| self.adj[u][v]).count()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) == self.n - 1)
    }
}

// ---- rotation-system isomorphism ------------------------------------------

fn flag_signature(g: &PlaneGraph, start: DartId) -> Vec<(usize, usize)> {
    let dn = g.dart_count();
    let mut new_id = vec![usize::MAX; dn];
    let mut order = Vec::with_capacity(dn);
    new_id[start] = 0;
    order.push(start);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for nd in [g.rot_next(d), g.twin(d)] {
            if new_id[nd] == usize::MAX {
                new_id[nd] = order.len();
                order.push(nd);
            }
        }
        i += 1;
    }
    order
        .iter()
        .map(|&d| (new_id[g.rot_next(d)], new_id[g.twin(d)]))
        .collect()
}

/// Whether two connected rotation systems are isomorphic as embedded graphs
/// (same orientation). Checked by comparing canonical flag traversals from a
/// fixed dart of `a` against every possible start dart of `b`.
pub fn rotation_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.dart_count() == 0
    {
        return a.vertex_count() == b.vertex_count()
            && a.edge_count() == b.edge_count()
            && a.dart_count() == b.dart_count();
    }
    let sig_a = flag_signature(a, 0);
    (0..b.dart_count()).any(|d| flag_signature(b, d) == sig_a)
}
