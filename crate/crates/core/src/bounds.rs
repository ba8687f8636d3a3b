//! Evaluation of the published upper bounds on the cyclic chromatic number
//! and of the open conjectures, with a per-graph comparison report. An exact
//! value above any applicable bound is the headline event the report exists
//! to catch.

use serde::Serialize;

use crate::coloring;
use crate::edgecolor;
use crate::embedding::PlaneGraph;
use crate::error::{Error, Result};
use crate::reduction::{self, ReductionResult};

/// `floor(3/2 * Delta*)`: the conjectured general bound.
pub fn bound_ccc(g: &PlaneGraph) -> usize {
    3 * g.delta_star() / 2
}

/// `max(Delta* + 3k* + 2, Delta* + 14)` for maximum face degree at least 5.
pub fn bound_bbgh(g: &PlaneGraph) -> Result<usize> {
    let ds = g.delta_star();
    if ds < 5 {
        return Err(Error::Hypothesis(format!(
            "needs maximum face degree >= 5, found {ds}"
        )));
    }
    let k = g.k_star()?;
    Ok((ds + 3 * k + 2).max(ds + 14))
}

/// The additive constant for simple 3-connected plane graphs: the least `r`
/// whose clause is satisfied.
pub fn plummer_toft_r(g: &PlaneGraph) -> Result<usize> {
    if !g.is_three_connected_simple() {
        return Err(Error::Hypothesis(
            "needs a simple 3-connected plane graph".into(),
        ));
    }
    let ds = g.delta_star();
    let dmin = g.small_delta();
    if ds >= 60 || ds == 3 || g.faces_ge4_pairwise_disjoint() {
        return Ok(1);
    }
    if ds >= 16 || ds == 4 || (dmin == 4 && ds >= 6) || dmin == 5 || g.is_locally_connected() {
        return Ok(2);
    }
    if (5..=6).contains(&ds) {
        return Ok(3);
    }
    if ds == 7 {
        return Ok(4);
    }
    Ok(5)
}

fn subdivision_reduction(g: &PlaneGraph) -> Result<ReductionResult> {
    let r = reduction::reduce(g)?;
    if !r.reduced.is_three_connected_simple() {
        return Err(Error::ReductionNotSimple3Connected);
    }
    Ok(r)
}

/// `max(Delta* + 3t + 8, Delta* + 14)` for subdivisions of simple
/// 3-connected plane graphs with maximum face degree at least 5.
pub fn bound_thm4(g: &PlaneGraph) -> Result<usize> {
    subdivision_reduction(g)?;
    let ds = g.delta_star();
    if ds < 5 {
        return Err(Error::Hypothesis(format!(
            "needs maximum face degree >= 5, found {ds}"
        )));
    }
    let t = g.t_of()?;
    Ok((ds + 3 * t + 8).max(ds + 14))
}

/// The cyclic chromatic number of the reduced graph: exact when it fits the
/// oracle guard, otherwise the simple-3-connected additive bound. Returns
/// the value and which source produced it.
fn chi_c_of_reduction(r: &ReductionResult, guard: usize) -> Result<(usize, &'static str)> {
    if r.reduced.vertex_count() <= guard {
        let (chi, _) = coloring::chi_c_exact(&r.reduced, guard)?;
        Ok((chi, "oracle"))
    } else {
        let rr = plummer_toft_r(&r.reduced)?;
        Ok((r.reduced.delta_star() + rr, "delta_star_plus_r"))
    }
}

/// `chi'(S) + chi_c(R)`, with the chromatic index computed exactly.
pub fn bound_thm6(g: &PlaneGraph, guard: usize) -> Result<usize> {
    let r = subdivision_reduction(g)?;
    let s = reduction::subdivision_multigraph(g, &r)?;
    let chi_prime = edgecolor::chromatic_index(&s.to_multigraph(), edgecolor::DEFAULT_EDGE_GUARD)?;
    let (chi_r, _) = chi_c_of_reduction(&r, guard)?;
    Ok(chi_prime + chi_r)
}

/// `floor(3/2 * Delta(S)) + chi_c(R)`.
pub fn bound_thm7(g: &PlaneGraph, guard: usize) -> Result<usize> {
    let r = subdivision_reduction(g)?;
    let s = reduction::subdivision_multigraph(g, &r)?;
    let (chi_r, _) = chi_c_of_reduction(&r, guard)?;
    Ok(3 * s.max_degree / 2 + chi_r)
}

/// `Delta(S) + t + chi_c(R)`.
pub fn bound_thm8(g: &PlaneGraph, guard: usize) -> Result<usize> {
    let r = subdivision_reduction(g)?;
    let s = reduction::subdivision_multigraph(g, &r)?;
    let (chi_r, _) = chi_c_of_reduction(&r, guard)?;
    Ok(s.max_degree + g.t_of()? + chi_r)
}

/// `Delta* + t + r` for regular subdivisions of simple 3-connected graphs.
pub fn bound_cor9(g: &PlaneGraph) -> Result<usize> {
    let r = subdivision_reduction(g)?;
    if !r.is_regular() {
        return Err(Error::Hypothesis(
            "needs a regular subdivision: all suppressed paths of equal length".into(),
        ));
    }
    let rr = plummer_toft_r(&r.reduced)?;
    Ok(g.delta_star() + g.t_of()? + rr)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Violated,
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: Option<usize>,
    pub applicable: bool,
    /// Proven theorem (true) versus conjectured bound (false).
    pub proven: bool,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureFlag {
    pub name: String,
    pub applicable: bool,
    pub bound: Option<usize>,
    pub status: Status,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub delta_star: usize,
    pub delta: usize,
    pub small_delta: usize,
    pub k_star: Option<usize>,
    pub t: Option<usize>,
    pub subdivision_of_simple_3_connected: bool,
    pub exact: Option<usize>,
    pub entries: Vec<BoundEntry>,
    pub conjectures: Vec<ConjectureFlag>,
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn has_violation(&self) -> bool {
        !self.violations.is_empty()
            || self
                .conjectures
                .iter()
                .any(|c| c.status == Status::Violated)
    }

    pub fn csv_header() -> &'static str {
        "graph_id,delta_star,t,k_star,exact,ccc,bbgh,thm4,thm6,thm7,thm8,cor9,flags"
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let entry = |name: &str| {
            self.entries.iter().find(|e| e.name == name).and_then(|e| {
                if e.applicable {
                    e.value
                } else {
                    None
                }
            })
        };
        let flags = self
            .conjectures
            .iter()
            .map(|c| {
                let s = match (c.applicable, c.status) {
                    (false, _) => "n/a",
                    (_, Status::Holds) => "holds",
                    (_, Status::Violated) => "VIOLATED",
                    (_, Status::Unknown) => "unknown",
                };
                format!("{}={}", c.name, s)
            })
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph_id,
            self.delta_star,
            opt(self.t),
            opt(self.k_star),
            opt(self.exact),
            entry("ccc").map(|v| v.to_string()).unwrap_or_default(),
            entry("bbgh").map(|v| v.to_string()).unwrap_or_default(),
            entry("thm4").map(|v| v.to_string()).unwrap_or_default(),
            entry("thm6").map(|v| v.to_string()).unwrap_or_default(),
            entry("thm7").map(|v| v.to_string()).unwrap_or_default(),
            entry("thm8").map(|v| v.to_string()).unwrap_or_default(),
            entry("cor9").map(|v| v.to_string()).unwrap_or_default(),
            flags
        )
    }
}

/// Conjecture verdicts alone: HOLDS when the exact value or a proven bound
/// settles the inequality, VIOLATED when the exact value exceeds it, UNKNOWN
/// otherwise.
pub fn check_conjectures(g: &PlaneGraph, guard: usize) -> Vec<ConjectureFlag> {
    bound_report(g, "", guard).conjectures
}

/// Builds the full report: every named bound with its applicability, the
/// exact value when the oracle guard allows, and the conjecture flags.
pub fn bound_report(g: &PlaneGraph, graph_id: &str, guard: usize) -> BoundReport {
    let ds = g.delta_star();
    let k_star = g.k_star().ok();
    let t = g.t_of().ok();
    let reduction = reduction::reduce(g).ok();
    let r_s3c = reduction
        .as_ref()
        .map(|r| r.reduced.is_three_connected_simple())
        .unwrap_or(false);
    let chi_r: Option<(usize, &'static str)> = if r_s3c {
        chi_c_of_reduction(reduction.as_ref().unwrap(), guard).ok()
    } else {
        None
    };
    let exact = coloring::chi_c_exact(g, guard).ok().map(|(chi, _)| chi);

    let mut entries = Vec::new();
    let mut push = |name: &str, value: Result<usize>, proven: bool, note: String| {
        match value {
            Ok(v) => entries.push(BoundEntry {
                name: name.into(),
                value: Some(v),
                applicable: true,
                proven,
                note,
            }),
            Err(e) => entries.push(BoundEntry {
                name: name.into(),
                value: None,
                applicable: false,
                proven,
                note: e.to_string(),
            }),
        };
    };

    push("ccc", Ok(bound_ccc(g)), false, "conjectured".into());
    push("bbgh", bound_bbgh(g), true, String::new());
    push(
        "plummer_toft",
        plummer_toft_r(g).map(|r| ds + r),
        true,
        "additive bound on the graph itself".into(),
    );
    push("thm4", bound_thm4(g), true, String::new());
    let chi_r_note = chi_r
        .map(|(_, src)| format!("chi_c(R) via {src}"))
        .unwrap_or_default();
    push("thm6", bound_thm6(g, guard), true, chi_r_note.clone());
    push("thm7", bound_thm7(g, guard), true, chi_r_note.clone());
    push("thm8", bound_thm8(g, guard), true, chi_r_note);
    push("cor9", bound_cor9(g), true, String::new());
    push(
        "sanders_zhao_5_3",
        Ok((5 * ds).div_ceil(3)),
        true,
        "literature constant".into(),
    );
    push(
        "borodin_sanders_zhao_9_5",
        Ok(9 * ds / 5),
        true,
        "literature constant".into(),
    );

    let mut violations = Vec::new();
    if let Some(chi) = exact {
        if chi < ds {
            violations.push(format!(
                "exact {chi} below the trivial lower bound {ds}: oracle bug"
            ));
        }
        for e in &entries {
            if let (true, Some(v)) = (e.applicable, e.value) {
                if chi > v {
                    violations.push(if e.proven {
                        format!("exact {chi} exceeds proven bound {} = {v}: bug", e.name)
                    } else {
                        format!(
                            "VIOLATION: exact {chi} exceeds conjectured {} = {v}",
                            e.name
                        )
                    });
                }
            }
        }
    }

    // Smallest proven applicable bound, for holds-by-bound verdicts.
    let best_proven = entries
        .iter()
        .filter(|e| e.proven && e.applicable)
        .filter_map(|e| e.value.map(|v| (v, e.name.clone())))
        .min();

    let verdict = |bound: usize| -> (Status, String) {
        if let Some(chi) = exact {
            if chi <= bound {
                (Status::Holds, "by exact value".into())
            } else {
                (Status::Violated, format!("exact {chi} > bound {bound}"))
            }
        } else if let Some((v, ref name)) = best_proven {
            if v <= bound {
                (Status::Holds, format!("by proven bound {name} = {v}"))
            } else {
                (Status::Unknown, "no exact value, no closing bound".into())
            }
        } else {
            (
                Status::Unknown,
                "no exact value, no applicable bound".into(),
            )
        }
    };

    let mut conjectures = Vec::new();
    {
        let ccc = bound_ccc(g);
        let (status, note) = verdict(ccc);
        conjectures.push(ConjectureFlag {
            name: "ccc".into(),
            applicable: true,
            bound: Some(ccc),
            status,
            note,
        });
    }
    {
        let (applicable, bound) = (r_s3c, r_s3c.then(|| bound_ccc(g)));
        let (status, note) = match bound {
            Some(b) => verdict(b),
            None => (
                Status::Unknown,
                "not a subdivision of a simple 3-connected plane graph".into(),
            ),
        };
        conjectures.push(ConjectureFlag {
            name: "ccc_subdivision".into(),
            applicable,
            bound,
            status: if applicable { status } else { Status::Unknown },
            note,
        });
    }
    {
        let bound = (r_s3c && t.is_some()).then(|| ds + t.unwrap() + 2);
        let (status, note) = match bound {
            Some(b) => verdict(b),
            None => (
                Status::Unknown,
                "not a subdivision of a simple 3-connected plane graph".into(),
            ),
        };
        conjectures.push(ConjectureFlag {
            name: "conjecture_5".into(),
            applicable: bound.is_some(),
            bound,
            status,
            note,
        });
    }
    {
        // Asymptotic conjecture with unspecified thresholds: raw data only,
        // never a verdict.
        let bound = k_star.map(|k| ds + k);
        let note = match (exact, bound) {
            (Some(chi), Some(b)) => format!(
                "thresholds unspecified; currently exact {chi} {} {b}",
                if chi <= b { "<=" } else { ">" }
            ),
            _ => "thresholds unspecified".into(),
        };
        conjectures.push(ConjectureFlag {
            name: "bbgh_plus_kstar".into(),
            applicable: bound.is_some(),
            bound,
            status: Status::Unknown,
            note,
        });
    }

    BoundReport {
        graph_id: graph_id.into(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: g.faces().len(),
        delta_star: ds,
        delta: g.delta(),
        small_delta: g.small_delta(),
        k_star,
        t,
        subdivision_of_simple_3_connected: r_s3c,
        exact,
        entries,
        conjectures,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_GUARD;
    use crate::generators;

    #[test]
    fn ccc_values() {
        assert_eq!(bound_ccc(&generators::platonic("cube").unwrap()), 6);
        assert_eq!(bound_ccc(&generators::prism_subdiv(2).unwrap()), 12);
        assert_eq!(bound_ccc(&generators::theta(2, 2, 2).unwrap()), 6);
    }

    #[test]
    fn bbgh_values() {
        let g = generators::prism_subdiv(1).unwrap();
        // delta* = 6, k* = 3: max(6 + 11, 6 + 14) = 20.
        assert_eq!(bound_bbgh(&g).unwrap(), 20);
        let d = generators::platonic("dodecahedron").unwrap();
        // delta* = 5, k* = 2: max(5 + 8, 19) = 19.
        assert_eq!(bound_bbgh(&d).unwrap(), 19);
        let cube = generators::platonic("cube").unwrap();
        assert!(matches!(bound_bbgh(&cube), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn plummer_toft_cases() {
        assert_eq!(
            plummer_toft_r(&generators::platonic("icosahedron").unwrap()).unwrap(),
            1
        );
        assert_eq!(
            plummer_toft_r(&generators::platonic("octahedron").unwrap()).unwrap(),
            1
        );
        assert_eq!(
            plummer_toft_r(&generators::platonic("tetrahedron").unwrap()).unwrap(),
            1
        );
        assert_eq!(
            plummer_toft_r(&generators::platonic("cube").unwrap()).unwrap(),
            2
        );
        assert_eq!(
            plummer_toft_r(&generators::platonic("dodecahedron").unwrap()).unwrap(),
            3
        );
        assert!(plummer_toft_r(&generators::theta(2, 2, 2).unwrap()).is_err());
    }

    #[test]
    fn thm4_values() {
        assert_eq!(
            bound_thm4(&generators::prism_subdiv(1).unwrap()).unwrap(),
            20
        );
        // delta* = 10, t = 3: max(10 + 9 + 8, 10 + 14) = 27.
        assert_eq!(
            bound_thm4(&generators::prism_subdiv(3).unwrap()).unwrap(),
            27
        );
        // Prism itself has delta* = 4 < 5.
        assert!(bound_thm4(&generators::prism_subdiv(0).unwrap()).is_err());
    }

    #[test]
    fn thm6_on_tight_family() {
        let g = generators::thm6_prism(2, 2, 2).unwrap();
        assert_eq!(bound_thm6(&g, DEFAULT_GUARD).unwrap(), 12);
        let prism1 = generators::prism_subdiv(1).unwrap();
        // chi'(S) = 3 (fat triangle, mu = 1), chi_c(prism) = 6.
        assert_eq!(bound_thm6(&prism1, DEFAULT_GUARD).unwrap(), 9);
        let cube = generators::platonic("cube").unwrap();
        assert_eq!(bound_thm6(&cube, DEFAULT_GUARD).unwrap(), 4);
    }

    #[test]
    fn thm7_on_cube_is_chi_c() {
        let cube = generators::platonic("cube").unwrap();
        assert_eq!(bound_thm7(&cube, DEFAULT_GUARD).unwrap(), 4);
    }

    #[test]
    fn thm8_is_tight_on_prism_family() {
        for t in [2, 3] {
            let g = generators::thm6_prism(t, t, t).unwrap();
            assert_eq!(bound_thm8(&g, DEFAULT_GUARD).unwrap(), 3 * t + 6);
        }
        let cube = generators::platonic("cube").unwrap();
        assert_eq!(bound_thm8(&cube, DEFAULT_GUARD).unwrap(), 4);
    }

    #[test]
    fn cor9_applicability() {
        // prism_subdiv subdivides only three of nine edges: not regular.
        assert!(matches!(
            bound_cor9(&generators::prism_subdiv(1).unwrap()),
            Err(Error::Hypothesis(_))
        ));
        let cube = generators::platonic("cube").unwrap();
        let g = generators::regular_subdivide(&cube, 1).unwrap();
        // delta* = 8, t = 1, r(cube) = 2.
        assert_eq!(bound_cor9(&g).unwrap(), 11);
        // k = 0: the graph is its own reduction.
        assert_eq!(bound_cor9(&cube).unwrap(), 4 + 2);
    }

    #[test]
    fn report_on_prism_subdiv_notes_conjecture_5_equality() {
        let g = generators::prism_subdiv(2).unwrap();
        let report = bound_report(&g, "prism_subdiv_2", DEFAULT_GUARD);
        assert!(!report.has_violation());
        let c5 = report
            .conjectures
            .iter()
            .find(|c| c.name == "conjecture_5")
            .unwrap();
        assert_eq!(c5.status, Status::Holds);
        assert_eq!(c5.bound, Some(12));
        assert_eq!(report.exact, Some(12));
    }

    #[test]
    fn report_applicable_entries_at_least_delta_star() {
        for g in [
            generators::platonic("cube").unwrap(),
            generators::prism_subdiv(1).unwrap(),
            generators::theta(2, 3, 4).unwrap(),
        ] {
            let report = bound_report(&g, "x", DEFAULT_GUARD);
            for e in &report.entries {
                if let (true, Some(v)) = (e.applicable, e.value) {
                    assert!(v >= report.delta_star, "{}: {v}", e.name);
                }
            }
        }
    }

    #[test]
    fn regular_subdivision_with_t_ge_1_holds_by_bound() {
        // Mechanized form of the corollary: the additive bound closes the
        // conjectured one on every regular subdivision with t >= 1, even
        // without an exact value.
        let dodeca = generators::platonic("dodecahedron").unwrap();
        let g = generators::regular_subdivide(&dodeca, 1).unwrap(); // 50 vertices
        let report = bound_report(&g, "dodeca_k1", DEFAULT_GUARD);
        assert_eq!(report.exact, None);
        let ccc = report.conjectures.iter().find(|c| c.name == "ccc").unwrap();
        assert_eq!(ccc.status, Status::Holds);
        assert!(ccc.note.contains("by proven bound"));
    }
}
