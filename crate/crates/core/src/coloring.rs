//! Cyclic colorings: verification, an exact branch-and-bound oracle on the
//! cyclic adjacency graph, the constructive pipeline that colors suppressed
//! vertices through an edge coloring of the subdivision multigraph, and the
//! recursive split-and-merge procedure.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::edgecolor;
use crate::embedding::{CyclicAdjacencyGraph, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::reduction::{self, StructureClass};

/// Default cap on the number of cyclic-adjacency vertices the exact oracle
/// accepts.
pub const DEFAULT_GUARD: usize = 40;
/// Hard cap imposed by the 128-bit color masks of the search.
pub const MAX_GUARD: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Constructive,
    Decomposed,
    Direct,
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclicColoring {
    /// Color of each vertex, indexed by vertex id.
    pub assignment: Vec<usize>,
    pub colors_used: usize,
    pub method: Method,
}

impl CyclicColoring {
    pub fn new(assignment: Vec<usize>, method: Method) -> Self {
        let colors_used = assignment.iter().collect::<BTreeSet<_>>().len();
        CyclicColoring {
            assignment,
            colors_used,
            method,
        }
    }
}

/// True iff vertices sharing a face always differ. Errors when the
/// assignment does not cover the vertex set.
pub fn verify_cyclic(g: &PlaneGraph, c: &CyclicColoring) -> Result<bool> {
    if c.assignment.len() != g.vertex_count() {
        return Err(Error::PartialAssignment);
    }
    for face in g.faces() {
        let distinct: BTreeSet<usize> = face.vertices.iter().map(|&v| c.assignment[v]).collect();
        if distinct.len() != face.degree {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact cyclic chromatic number with a witness coloring: exact vertex
/// coloring of the cyclic adjacency graph, seeded with the largest face as a
/// clique lower bound. This is the oracle every acceptance check compares
/// against.
pub fn chi_c_exact(g: &PlaneGraph, guard: usize) -> Result<(usize, CyclicColoring)> {
    let n = g.vertex_count();
    let guard = guard.min(MAX_GUARD);
    if n > guard {
        return Err(Error::GuardExceeded { size: n, guard });
    }
    let ca = g.cyclic_adjacency();
    let hint: Vec<VertexId> = g
        .faces()
        .iter()
        .max_by_key(|f| f.degree)
        .map(|f| f.vertices.clone())
        .unwrap_or_default();
    let (chi, assignment) = exact_chromatic(&ca, &hint);
    let coloring = CyclicColoring {
        assignment,
        colors_used: chi,
        method: Method::Exact,
    };
    debug_assert!(verify_cyclic(g, &coloring).unwrap());
    Ok((chi, coloring))
}

/// Exact chromatic number of an arbitrary graph on at most 128 vertices.
fn exact_chromatic(ca: &CyclicAdjacencyGraph, clique_hint: &[VertexId]) -> (usize, Vec<usize>) {
    let n = ca.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let masks: Vec<u128> = (0..n)
        .map(|u| {
            let mut m = 0u128;
            for v in ca.neighbors(u) {
                m |= 1u128 << v;
            }
            m
        })
        .collect();

    let lower = extend_clique(ca, clique_hint).len().max(1);
    let (upper, greedy) = dsatur(ca);
    if lower >= upper {
        return (upper, greedy);
    }
    for k in lower..upper {
        if let Some(assignment) = try_k_coloring(n, &masks, k) {
            return (k, assignment);
        }
    }
    (upper, greedy)
}

fn extend_clique(ca: &CyclicAdjacencyGraph, seed: &[VertexId]) -> Vec<VertexId> {
    let mut clique: Vec<VertexId> = seed.to_vec();
    let mut order: Vec<VertexId> = (0..ca.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(ca.degree(v)), v));
    for v in order {
        if !clique.contains(&v) && clique.iter().all(|&u| ca.adjacent(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Greedy upper bound: repeatedly color the vertex seeing the most distinct
/// neighbor colors.
fn dsatur(ca: &CyclicAdjacencyGraph) -> (usize, Vec<usize>) {
    let n = ca.vertex_count();
    let mut assignment = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| assignment[v] == usize::MAX)
            .max_by_key(|&v| (neighbor_colors[v].len(), ca.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut c = 0;
        while neighbor_colors[v].contains(&c) {
            c += 1;
        }
        assignment[v] = c;
        for w in ca.neighbors(v) {
            neighbor_colors[w].insert(c);
        }
    }
    let used = assignment.iter().collect::<BTreeSet<_>>().len();
    (used, assignment)
}

fn try_k_coloring(n: usize, masks: &[u128], k: usize) -> Option<Vec<usize>> {
    let mut st = VertexSearch {
        masks,
        k,
        assignment: vec![usize::MAX; n],
        neighbor_used: vec![0u128; n],
        uncolored: n,
    };
    if st.solve(0) {
        Some(st.assignment)
    } else {
        None
    }
}

struct VertexSearch<'a> {
    masks: &'a [u128],
    k: usize,
    assignment: Vec<usize>,
    neighbor_used: Vec<u128>,
    uncolored: usize,
}

impl VertexSearch<'_> {
    fn solve(&mut self, colors_in_use: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let n = self.assignment.len();
        // Most saturated first, ties by degree then id.
        let v = (0..n)
            .filter(|&v| self.assignment[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    self.neighbor_used[v].count_ones(),
                    self.masks[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        // Any currently unused color is interchangeable with any other, so
        // only the first fresh color is branched on.
        let limit = self.k.min(colors_in_use + 1);
        for c in 0..limit {
            let bit = 1u128 << c;
            if self.neighbor_used[v] & bit != 0 {
                continue;
            }
            self.assignment[v] = c;
            self.uncolored -= 1;
            let mut touched = 0u128;
            let mut nbrs = self.masks[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if self.assignment[w] == usize::MAX && self.neighbor_used[w] & bit == 0 {
                    self.neighbor_used[w] |= bit;
                    touched |= 1u128 << w;
                }
            }
            let full = if self.k >= 128 {
                u128::MAX
            } else {
                (1u128 << self.k) - 1
            };
            let feasible = (0..n)
                .all(|w| self.assignment[w] != usize::MAX || self.neighbor_used[w] & full != full);
            if feasible && self.solve(colors_in_use.max(c + 1)) {
                return true;
            }
            let mut undo = touched;
            while undo != 0 {
                let w = undo.trailing_zeros() as usize;
                undo &= undo - 1;
                self.neighbor_used[w] &= !bit;
            }
            self.assignment[v] = usize::MAX;
            self.uncolored += 1;
        }
        false
    }
}

/// Greedy cyclic coloring in largest-degree-first order on the cyclic
/// adjacency graph; the fallback when the reduced graph exceeds the oracle
/// guard.
pub fn greedy_cyclic(g: &PlaneGraph) -> CyclicColoring {
    let ca = g.cyclic_adjacency();
    let n = ca.vertex_count();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(ca.degree(v)), v));
    let mut assignment = vec![usize::MAX; n];
    for &v in &order {
        let used: BTreeSet<usize> = ca
            .neighbors(v)
            .into_iter()
            .filter(|&w| assignment[w] != usize::MAX)
            .map(|w| assignment[w])
            .collect();
        let mut c = 0;
        while used.contains(&c) {
            c += 1;
        }
        assignment[v] = c;
    }
    CyclicColoring::new(assignment, Method::Direct)
}

/// The constructive pipeline: cyclic-color the reduction, then color the
/// suppressed degree-2 vertices by a proper edge coloring of the subdivision
/// multigraph on a fresh palette placed after the reduction's colors.
pub fn color_constructive(g: &PlaneGraph, guard: usize) -> Result<CyclicColoring> {
    let r = reduction::reduce(g)?;
    if !r.reduced.is_three_connected_simple() {
        return Err(Error::ReductionNotSimple3Connected);
    }
    let phi = if r.reduced.vertex_count() <= guard {
        chi_c_exact(&r.reduced, guard)?.1
    } else {
        greedy_cyclic(&r.reduced)
    };
    let phi_count = phi.colors_used;

    let s = reduction::subdivision_multigraph(g, &r)?;
    let m = s.to_multigraph();
    let psi = if m.edge_count() == 0 {
        None
    } else if m.edge_count() <= edgecolor::DEFAULT_EDGE_GUARD {
        let chi_prime = edgecolor::chromatic_index(&m, edgecolor::DEFAULT_EDGE_GUARD)?;
        Some(edgecolor::edge_color(&m, chi_prime)?)
    } else {
        Some(edgecolor::edge_color(&m, m.default_budget())?)
    };

    let mut assignment = vec![usize::MAX; g.vertex_count()];
    for (v, slot) in assignment.iter_mut().enumerate() {
        if let Some(rv) = r.kept_index[v] {
            *slot = phi.assignment[rv];
        } else {
            let link = s
                .link_index(v)
                .ok_or_else(|| Error::Internal(format!("degree-2 vertex {v} missing from S")))?;
            let psi = psi.as_ref().unwrap();
            *slot = phi_count + psi.colors[link];
        }
    }
    let coloring = CyclicColoring::new(assignment, Method::Constructive);
    if !verify_cyclic(g, &coloring)? {
        return Err(Error::Internal(
            "constructive coloring failed verification".into(),
        ));
    }
    Ok(coloring)
}

/// Combines colorings of two pieces that overlap exactly in `shared`: keeps
/// `c1`, remaps `c2` through a color bijection forced on the shared vertices
/// and extended to the remaining colors in ascending order.
pub fn merge_colorings(
    c1: &BTreeMap<VertexId, usize>,
    c2: &BTreeMap<VertexId, usize>,
    shared: &[VertexId],
) -> Result<BTreeMap<VertexId, usize>> {
    let shared_set: BTreeSet<VertexId> = shared.iter().copied().collect();
    for &v in shared {
        if !c1.contains_key(&v) || !c2.contains_key(&v) {
            return Err(Error::PartialAssignment);
        }
    }
    for v in c1.keys() {
        if c2.contains_key(v) && !shared_set.contains(v) {
            return Err(Error::Internal(format!(
                "pieces overlap at vertex {v} beyond the shared cycle"
            )));
        }
    }
    let mut sigma: BTreeMap<usize, usize> = BTreeMap::new();
    let mut image: BTreeSet<usize> = BTreeSet::new();
    {
        let mut seen1 = BTreeSet::new();
        for &v in shared {
            let from = c2[&v];
            let to = c1[&v];
            if !seen1.insert(to) {
                return Err(Error::NonInjectiveShared);
            }
            match sigma.get(&from) {
                Some(&t) if t != to => return Err(Error::NonInjectiveShared),
                _ => {}
            }
            sigma.insert(from, to);
            image.insert(to);
        }
    }
    let c2_colors: BTreeSet<usize> = c2.values().copied().collect();
    for color in c2_colors {
        if sigma.contains_key(&color) {
            continue;
        }
        let mut candidate = 0;
        while image.contains(&candidate) {
            candidate += 1;
        }
        sigma.insert(color, candidate);
        image.insert(candidate);
    }
    let mut merged = c1.clone();
    for (&v, &color) in c2 {
        merged.insert(v, sigma[&color]);
    }
    Ok(merged)
}

#[derive(Debug, Clone)]
pub struct DecomposeOutcome {
    pub coloring: CyclicColoring,
    pub palette_budget: usize,
    pub budget_exceeded: bool,
}

/// Recursive coloring by separating-cycle decomposition. Base cases: a
/// cycle and the three-face graphs take all-distinct colors (every pair of
/// vertices shares a face); a graph whose reduction is simple 3-connected is
/// colored exactly when it fits the oracle guard and constructively
/// otherwise. Recursive case: split along a separating cycle of length at
/// most the maximum face degree and merge the two colorings on the cycle.
///
/// A result above `palette_budget` is reported, not fatal: whether the
/// budget always suffices is exactly the open question this tool probes.
pub fn color_decomposed(
    g: &PlaneGraph,
    palette_budget: usize,
    guard: usize,
) -> Result<DecomposeOutcome> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let assignment = decompose_rec(g, guard, 0)?;
    let coloring = CyclicColoring::new(assignment, Method::Decomposed);
    if !verify_cyclic(g, &coloring)? {
        return Err(Error::Internal(
            "decomposed coloring failed verification".into(),
        ));
    }
    let budget_exceeded = coloring.colors_used > palette_budget;
    Ok(DecomposeOutcome {
        coloring,
        palette_budget,
        budget_exceeded,
    })
}

fn decompose_rec(g: &PlaneGraph, guard: usize, depth: usize) -> Result<Vec<usize>> {
    if depth > g.vertex_count() + g.faces().len() {
        return Err(Error::Internal("decomposition does not terminate".into()));
    }
    let n = g.vertex_count();
    let face_count = g.faces().len();
    // A cycle (two faces) and a theta graph (three faces) have all vertices
    // pairwise cyclically adjacent.
    if face_count <= 3 {
        return Ok((0..n).collect());
    }
    let r = reduction::reduce(g)?;
    if matches!(reduction::classify(&r)?, StructureClass::Simple3Connected) {
        return if n <= guard {
            Ok(chi_c_exact(g, guard)?.1.assignment)
        } else {
            Ok(color_constructive(g, guard)?.assignment)
        };
    }
    let cycle = reduction::find_separating_cycle(g)?;
    let pieces = reduction::split_along_cycle(g, &cycle)?;

    let sub1 = decompose_rec(&pieces.interior_piece, guard, depth + 1)?;
    let sub2 = decompose_rec(&pieces.exterior_piece, guard, depth + 1)?;
    let to_map = |assignment: &[usize], map: &[VertexId]| -> BTreeMap<VertexId, usize> {
        assignment
            .iter()
            .enumerate()
            .map(|(local, &color)| (map[local], color))
            .collect()
    };
    let c1 = to_map(&sub1, &pieces.interior_map);
    let c2 = to_map(&sub2, &pieces.exterior_map);
    let merged = merge_colorings(&c1, &c2, &cycle.vertices)?;
    if merged.len() != n {
        return Err(Error::Internal("merged coloring misses vertices".into()));
    }
    Ok((0..n).map(|v| merged[&v]).collect())
}
