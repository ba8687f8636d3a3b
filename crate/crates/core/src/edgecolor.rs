//! Proper edge coloring of loopless multigraphs by budget-bounded exhaustive
//! search. The default budget `min(floor(3*Delta/2), Delta + mu)` is always
//! feasible (Shannon; Vizing and Gupta), so the search doubles as a
//! constructive witness for those bounds; smaller budgets turn the search
//! into an exact chromatic-index test.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_EDGE_GUARD: usize = 40;
const MAX_COLORS: usize = 120;

/// Loopless multigraph given by an explicit edge list; parallel edges are
/// repeated pairs.
#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::Malformed(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Malformed(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Maximum vertex degree, counting parallel edges.
    pub fn delta(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Maximum multiplicity of a parallel class.
    pub fn mu(&self) -> usize {
        let mut classes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(u, v) in &self.edges {
            *classes.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        classes.into_values().max().unwrap_or(0)
    }

    /// `min(floor(3*Delta/2), Delta + mu)`: feasible by Shannon's theorem and
    /// the Vizing-Gupta bound.
    pub fn default_budget(&self) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        let d = self.delta();
        (3 * d / 2).min(d + self.mu())
    }

    /// Three vertices, every pair joined by `mu` parallel edges. Needs
    /// exactly `3 * mu` colors, making Shannon's bound tight.
    pub fn fat_triangle(mu: usize) -> Self {
        let mut edges = Vec::new();
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            for _ in 0..mu {
                edges.push((u, v));
            }
        }
        Multigraph { n: 3, edges }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeColoring {
    /// Color of each edge, indexed like the edge list.
    pub colors: Vec<usize>,
    pub colors_used: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self, m: &Multigraph) -> bool {
        let edges = m.edges();
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if (a == c || a == d || b == c || b == d) && self.colors[i] == self.colors[j] {
                    return false;
                }
            }
        }
        true
    }
}

/// Proper edge coloring with at most `budget` colors, or `BudgetExhausted`
/// when none exists. Deterministic: edges are processed in order of
/// decreasing endpoint-degree sum (ties by index) and colors are tried
/// ascending, with new colors introduced in canonical order.
pub fn edge_color(m: &Multigraph, budget: usize) -> Result<EdgeColoring> {
    let edge_count = m.edge_count();
    if edge_count == 0 {
        return Ok(EdgeColoring {
            colors: Vec::new(),
            colors_used: 0,
        });
    }
    if budget > MAX_COLORS {
        return Err(Error::GuardExceeded {
            size: budget,
            guard: MAX_COLORS,
        });
    }
    if budget == 0 {
        return Err(Error::BudgetExhausted { budget });
    }

    let deg = m.degrees();
    let mut order: Vec<usize> = (0..edge_count).collect();
    order.sort_by_key(|&i| {
        let (u, v) = m.edges()[i];
        (std::cmp::Reverse(deg[u] + deg[v]), i)
    });

    let mut state = Search {
        edges: m.edges(),
        order: &order,
        budget,
        used: vec![0u128; m.vertex_count()],
        colors: vec![usize::MAX; edge_count],
    };
    if state.assign(0, 0) {
        let colors = state.colors;
        let colors_used = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let coloring = EdgeColoring {
            colors,
            colors_used,
        };
        debug_assert!(coloring.is_proper(m));
        Ok(coloring)
    } else {
        Err(Error::BudgetExhausted { budget })
    }
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    order: &'a [usize],
    budget: usize,
    used: Vec<u128>,
    colors: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, pos: usize, colors_in_use: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let idx = self.order[pos];
        let (u, v) = self.edges[idx];
        // A fresh color is only ever introduced as the next unused index;
        // color classes are interchangeable, so this loses no colorings.
        let limit = self.budget.min(colors_in_use + 1);
        let blocked = self.used[u] | self.used[v];
        for c in 0..limit {
            let bit = 1u128 << c;
            if blocked & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[idx] = c;
            let next_in_use = colors_in_use.max(c + 1);
            if self.forward_ok(pos + 1) && self.assign(pos + 1, next_in_use) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[idx] = usize::MAX;
        }
        false
    }

    /// Every uncolored edge must still have a free color within the budget.
    fn forward_ok(&self, from: usize) -> bool {
        let full = if self.budget >= 128 {
            u128::MAX
        } else {
            (1u128 << self.budget) - 1
        };
        self.order[from..].iter().all(|&i| {
            let (u, v) = self.edges[i];
            (self.used[u] | self.used[v]) & full != full
        })
    }
}

/// Exact chromatic index by ascending budget search. Guarded by edge count;
/// the search is exponential in the worst case.
pub fn chromatic_index(m: &Multigraph, guard: usize) -> Result<usize> {
    if m.edge_count() > guard {
        return Err(Error::GuardExceeded {
            size: m.edge_count(),
            guard,
        });
    }
    if m.edge_count() == 0 {
        return Ok(0);
    }
    let lower = m.delta();
    let upper = m.default_budget();
    for k in lower..=upper {
        if edge_color(m, k).is_ok() {
            return Ok(k);
        }
    }
    Err(Error::Internal(
        "chromatic index exceeded the Shannon and Vizing-Gupta budgets".into(),
    ))
}
