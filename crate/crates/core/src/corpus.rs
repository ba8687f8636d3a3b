//! The fixed instance catalog the test suites sweep: every generator family
//! at small parameters, plus glued composites. Instances flagged `oracle`
//! are small enough for the exact cyclic chromatic search.

use std::collections::BTreeMap;

use crate::coloring::DEFAULT_GUARD;
use crate::edgecolor::Multigraph;
use crate::embedding::PlaneGraph;
use crate::generators;
use crate::reduction;

pub struct CorpusEntry {
    pub name: String,
    pub graph: PlaneGraph,
    /// Small enough for the exact oracle at the default guard.
    pub oracle: bool,
}

fn entry(name: impl Into<String>, graph: PlaneGraph) -> CorpusEntry {
    let oracle = graph.vertex_count() <= DEFAULT_GUARD;
    CorpusEntry {
        name: name.into(),
        graph,
        oracle,
    }
}

/// The standard corpus, roughly forty instances spanning every family.
pub fn standard() -> Vec<CorpusEntry> {
    let mut out = Vec::new();

    for a in 1..=4usize {
        for b in a..=4 {
            for c in b..=4 {
                out.push(entry(
                    format!("theta_{a}_{b}_{c}"),
                    generators::theta(a, b, c).unwrap(),
                ));
            }
        }
    }

    for t in 0..=3 {
        out.push(entry(
            format!("prism_subdiv_{t}"),
            generators::prism_subdiv(t).unwrap(),
        ));
    }
    for (a, b, c) in [(1, 2, 3), (2, 2, 3), (1, 1, 2)] {
        out.push(entry(
            format!("thm6_prism_{a}_{b}_{c}"),
            generators::thm6_prism(a, b, c).unwrap(),
        ));
    }

    for name in generators::PLATONIC_NAMES {
        out.push(entry(name, generators::platonic(name).unwrap()));
    }

    let tetra = generators::platonic("tetrahedron").unwrap();
    let cube = generators::platonic("cube").unwrap();
    let octa = generators::platonic("octahedron").unwrap();
    let dodeca = generators::platonic("dodecahedron").unwrap();
    let icosa = generators::platonic("icosahedron").unwrap();
    for (name, base, k) in [
        ("tetrahedron_k1", &tetra, 1),
        ("tetrahedron_k2", &tetra, 2),
        ("cube_k1", &cube, 1),
        ("octahedron_k1", &octa, 1),
        ("icosahedron_k1", &icosa, 1),
        ("dodecahedron_k1", &dodeca, 1),
    ] {
        out.push(entry(name, generators::regular_subdivide(base, k).unwrap()));
    }

    type PlanSpec<'a> = (&'a str, &'a PlaneGraph, &'a [(usize, usize)]);
    let plans: [PlanSpec; 6] = [
        ("cube_edge0x2", &cube, &[(0, 2)]),
        ("cube_mixed", &cube, &[(0, 1), (4, 2), (7, 1)]),
        ("octahedron_edge0x1", &octa, &[(0, 1)]),
        ("octahedron_mixed", &octa, &[(0, 2), (5, 1), (9, 2)]),
        ("dodecahedron_edge0x2", &dodeca, &[(0, 2)]),
        ("tetrahedron_mixed", &tetra, &[(1, 1), (3, 2)]),
    ];
    for (name, base, plan) in plans {
        let plan: BTreeMap<usize, usize> = plan.iter().copied().collect();
        out.push(entry(
            name,
            generators::subdivide_edges(base, &plan).unwrap(),
        ));
    }

    let prism = generators::prism();
    let theta222 = generators::theta(2, 2, 2).unwrap();
    let theta223 = generators::theta(2, 2, 3).unwrap();
    let prism1 = generators::prism_subdiv(1).unwrap();
    let glued: [(&str, &PlaneGraph, &PlaneGraph, usize, usize, usize, usize); 6] = [
        ("glue_prism_prism", &prism, &prism, 0, 1, 0, 1),
        ("glue_prism_cube", &prism, &cube, 0, 1, 0, 1),
        ("glue_prism_octahedron", &prism, &octa, 0, 1, 0, 1),
        ("glue_prism_theta222", &prism, &theta222, 0, 1, 0, 4),
        ("glue_theta222_theta223", &theta222, &theta223, 0, 4, 0, 5),
        ("glue_prism1_prism", &prism1, &prism, 0, 1, 0, 1),
    ];
    for (name, g1, g2, u1, v1, u2, v2) in glued {
        out.push(entry(
            name,
            generators::glue_at_two_cut(g1, g2, u1, v1, u2, v2).unwrap(),
        ));
    }

    // A chain of three prisms: the decomposition has to split twice.
    let double = generators::glue_at_two_cut(&prism, &prism, 0, 1, 0, 1).unwrap();
    out.push(entry(
        "glue_triple_prism",
        generators::glue_at_two_cut(&double, &prism, 2, 3, 0, 3).unwrap(),
    ));
    // Parallel edges meeting a prism: exercises the two-face route with
    // single-edge boundary paths.
    let theta112 = generators::theta(1, 1, 2).unwrap();
    out.push(entry(
        "glue_theta112_prism",
        generators::glue_at_two_cut(&theta112, &prism, 0, 2, 0, 1).unwrap(),
    ));
    // Cubes glued at a non-adjacent pair sharing a face: a 2-cut whose
    // boundary paths both have interior vertices.
    out.push(entry(
        "glue_cube_cube_diagonal",
        generators::glue_at_two_cut(&cube, &cube, 0, 2, 0, 2).unwrap(),
    ));

    out.push(entry("cycle_6", generators::cycle_graph(6).unwrap()));

    out
}

/// Subdivision multigraphs harvested from a broad set of generated
/// instances; at least 200, for edge-coloring budget sweeps.
pub fn subdivision_multigraphs() -> Vec<(String, Multigraph)> {
    let mut graphs: Vec<(String, PlaneGraph)> = Vec::new();
    for e in standard() {
        graphs.push((e.name, e.graph));
    }
    for name in generators::PLATONIC_NAMES {
        let base = generators::platonic(name).unwrap();
        for e in 0..base.edge_count().min(12) {
            for c in 1..=3usize {
                let plan = BTreeMap::from([(e, c)]);
                graphs.push((
                    format!("{name}_e{e}x{c}"),
                    generators::subdivide_edges(&base, &plan).unwrap(),
                ));
            }
        }
        for k in 1..=2usize {
            graphs.push((
                format!("{name}_k{k}"),
                generators::regular_subdivide(&base, k).unwrap(),
            ));
        }
    }
    for a in 1..=4usize {
        for b in a..=4 {
            for c in b..=4 {
                graphs.push((
                    format!("thm6_{a}{b}{c}"),
                    generators::thm6_prism(a, b, c).unwrap(),
                ));
            }
        }
    }

    let mut out = Vec::new();
    for (name, g) in graphs {
        let Ok(r) = reduction::reduce(&g) else {
            continue;
        };
        let Ok(s) = reduction::subdivision_multigraph(&g, &r) else {
            continue;
        };
        out.push((name, s.to_multigraph()));
    }
    out
}
