//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values (visible under `--nocapture`).

use std::collections::BTreeMap;
use std::time::Instant;

use cyclic_coloring::bounds;
use cyclic_coloring::coloring::{self, DEFAULT_GUARD};
use cyclic_coloring::corpus;
use cyclic_coloring::edgecolor::{self, Multigraph};
use cyclic_coloring::embedding::rotation_isomorphic;
use cyclic_coloring::format;
use cyclic_coloring::generators;
use cyclic_coloring::reduction;

#[test]
fn criterion_1_prism_family_tightness() {
    for t in 0..=3usize {
        let g = generators::prism_subdiv(t).unwrap();
        let start = Instant::now();
        let (chi, witness) = coloring::chi_c_exact(&g, DEFAULT_GUARD).unwrap();
        let elapsed = start.elapsed();
        let ds = g.delta_star();
        assert_eq!(chi, 3 * t + 6, "t = {t}");
        assert_eq!(chi, ds + t + 2, "t = {t}");
        assert_eq!(chi, 3 * ds / 2, "t = {t}");
        assert!(coloring::verify_cyclic(&g, &witness).unwrap());
        assert!(
            elapsed.as_secs() < 60,
            "oracle took {elapsed:?} for t = {t}"
        );
        println!(
            "criterion 1: PASS for t = {t}: chi_c = {chi} = delta* + t + 2 = floor(3 delta*/2), oracle in {elapsed:?}"
        );
    }
}

#[test]
fn criterion_2_theta_family_formula() {
    let mut checked = 0;
    for a in 1..=4usize {
        for b in a..=4 {
            for c in b..=4 {
                let g = generators::theta(a, b, c).unwrap();
                let (chi, _) = coloring::chi_c_exact(&g, DEFAULT_GUARD).unwrap();
                assert_eq!(chi, a + b + c - 1, "theta({a},{b},{c})");
                assert!(
                    chi <= 3 * g.delta_star() / 2,
                    "theta({a},{b},{c}): {chi} > floor(3 delta*/2)"
                );
                checked += 1;
            }
        }
    }
    println!(
        "criterion 2: PASS on {checked} theta graphs: chi_c = a + b + c - 1 <= floor(3 delta*/2)"
    );
}

#[test]
fn criterion_3_thm6_tightness() {
    let g = generators::thm6_prism(2, 2, 2).unwrap();
    let (chi, _) = coloring::chi_c_exact(&g, DEFAULT_GUARD).unwrap();
    assert_eq!(chi, 12);
    let b6 = bounds::bound_thm6(&g, DEFAULT_GUARD).unwrap();
    assert_eq!(b6, 12);

    // The two constituents: chi'(S) by exhaustive edge search and
    // chi_c of the reduced prism by the oracle.
    let r = reduction::reduce(&g).unwrap();
    let s = reduction::subdivision_multigraph(&g, &r).unwrap();
    let chi_prime =
        edgecolor::chromatic_index(&s.to_multigraph(), edgecolor::DEFAULT_EDGE_GUARD).unwrap();
    assert_eq!(chi_prime, 6);
    let (chi_r, _) = coloring::chi_c_exact(&r.reduced, DEFAULT_GUARD).unwrap();
    assert_eq!(chi_r, 6);
    println!("criterion 3: PASS: chi_c = 12 = chi'(S) + chi_c(R) = 6 + 6");
}

#[test]
fn criterion_4_thm8_tightness() {
    for t in [2usize, 3] {
        let g = generators::thm6_prism(t, t, t).unwrap();
        let b8 = bounds::bound_thm8(&g, DEFAULT_GUARD).unwrap();
        let (chi, _) = coloring::chi_c_exact(&g, DEFAULT_GUARD).unwrap();
        assert_eq!(b8, chi, "t = {t}");
        assert_eq!(chi, 3 * t + 6, "t = {t}");
        println!("criterion 4: PASS for t = {t}: thm8 bound = chi_c = {chi}");
    }
}

#[test]
fn criterion_5_subdivided_triangulation_quadrangulation_pentagulation() {
    let octa = generators::platonic("octahedron").unwrap();
    let cube = generators::platonic("cube").unwrap();
    let dodeca = generators::platonic("dodecahedron").unwrap();

    let mut instances: Vec<(String, cyclic_coloring::embedding::PlaneGraph)> = Vec::new();
    // Subdivided octahedron: single-edge plans with t <= 2, a mixed plan,
    // and the regular ones.
    for e in 0..octa.edge_count() {
        for c in 1..=2usize {
            let plan = BTreeMap::from([(e, c)]);
            instances.push((
                format!("octa e{e}x{c}"),
                generators::subdivide_edges(&octa, &plan).unwrap(),
            ));
        }
    }
    let mixed = BTreeMap::from([(0usize, 2usize), (3, 1), (7, 2), (11, 1)]);
    instances.push((
        "octa mixed".into(),
        generators::subdivide_edges(&octa, &mixed).unwrap(),
    ));
    for k in 1..=2usize {
        instances.push((
            format!("octa k{k}"),
            generators::regular_subdivide(&octa, k).unwrap(),
        ));
    }
    // Subdivided cube.
    instances.push((
        "cube k1".into(),
        generators::regular_subdivide(&cube, 1).unwrap(),
    ));
    let cube_mixed = BTreeMap::from([(0usize, 1usize), (4, 2), (9, 1)]);
    instances.push((
        "cube mixed".into(),
        generators::subdivide_edges(&cube, &cube_mixed).unwrap(),
    ));
    // Subdivided dodecahedron with even maximum face degree.
    instances.push((
        "dodeca k1".into(),
        generators::regular_subdivide(&dodeca, 1).unwrap(),
    ));

    for (name, g) in &instances {
        if name.starts_with("dodeca") {
            assert_eq!(g.delta_star() % 2, 0, "{name}: needs even delta*");
        }
        let ccc = 3 * g.delta_star() / 2;
        let b7 = bounds::bound_thm7(g, DEFAULT_GUARD).unwrap();
        assert!(b7 <= ccc, "{name}: thm7 = {b7} > {ccc}");
        let c = coloring::color_constructive(g, DEFAULT_GUARD).unwrap();
        assert!(coloring::verify_cyclic(g, &c).unwrap(), "{name}");
        assert!(
            c.colors_used <= b7,
            "{name}: {} > thm7 = {b7}",
            c.colors_used
        );
        assert!(c.colors_used <= ccc, "{name}: {} > {ccc}", c.colors_used);
    }
    println!(
        "criterion 5: PASS on {} subdivided triangulation/quadrangulation/pentagulation instances",
        instances.len()
    );
}

#[test]
fn criterion_6_separating_cycle_and_decomposition() {
    let prism = generators::prism();
    let cube = generators::platonic("cube").unwrap();
    let octa = generators::platonic("octahedron").unwrap();
    let theta222 = generators::theta(2, 2, 2).unwrap();
    let theta223 = generators::theta(2, 2, 3).unwrap();
    let prism1 = generators::prism_subdiv(1).unwrap();

    let glued = [
        (
            "prism+prism",
            generators::glue_at_two_cut(&prism, &prism, 0, 1, 0, 1).unwrap(),
        ),
        (
            "prism+cube",
            generators::glue_at_two_cut(&prism, &cube, 0, 1, 0, 1).unwrap(),
        ),
        (
            "prism+octa",
            generators::glue_at_two_cut(&prism, &octa, 0, 1, 0, 1).unwrap(),
        ),
        (
            "prism+theta",
            generators::glue_at_two_cut(&prism, &theta222, 0, 1, 0, 4).unwrap(),
        ),
        (
            "theta+theta",
            generators::glue_at_two_cut(&theta222, &theta223, 0, 4, 0, 5).unwrap(),
        ),
        (
            "prism1+prism",
            generators::glue_at_two_cut(&prism1, &prism, 0, 1, 0, 1).unwrap(),
        ),
    ];
    assert!(glued.len() >= 5);
    for (name, g) in &glued {
        let c = reduction::find_separating_cycle(g).unwrap();
        assert!(c.len() <= g.delta_star(), "{name}");
        assert!(
            !c.interior_vertices.is_empty() || !c.interior_edges.is_empty(),
            "{name}"
        );
        assert!(
            !c.exterior_vertices.is_empty() || !c.exterior_edges.is_empty(),
            "{name}"
        );
        let budget = 3 * g.delta_star() / 2;
        let out = coloring::color_decomposed(g, budget, DEFAULT_GUARD).unwrap();
        assert!(coloring::verify_cyclic(g, &out.coloring).unwrap(), "{name}");
        // Every piece here fits the oracle guard, so the conjectured budget
        // must be respected.
        assert!(
            out.coloring.colors_used <= budget,
            "{name}: {} > {budget}",
            out.coloring.colors_used
        );
    }
    println!(
        "criterion 6: PASS on {} glued instances: |C| <= delta*, verified decompositions within floor(3 delta*/2)",
        glued.len()
    );
}

#[test]
fn criterion_7_edge_coloring_budgets() {
    for mu in 1..=3usize {
        let m = Multigraph::fat_triangle(mu);
        let chi = edgecolor::chromatic_index(&m, edgecolor::DEFAULT_EDGE_GUARD).unwrap();
        assert_eq!(chi, 3 * mu);
        assert_eq!(chi, 3 * m.delta() / 2);
    }
    let multigraphs = corpus::subdivision_multigraphs();
    assert!(
        multigraphs.len() >= 200,
        "only {} corpus multigraphs",
        multigraphs.len()
    );
    for (name, m) in &multigraphs {
        if m.edge_count() == 0 {
            continue;
        }
        let c = edgecolor::edge_color(m, m.default_budget())
            .unwrap_or_else(|e| panic!("{name}: default budget failed: {e}"));
        assert!(c.is_proper(m), "{name}");
    }
    println!(
        "criterion 7: PASS: fat triangles need exactly 3 mu colors; default budget succeeded on {} subdivision multigraphs",
        multigraphs.len()
    );
}

#[test]
fn criterion_8_oracle_sandwich_sweep() {
    let start = Instant::now();
    let corpus = corpus::standard();
    let oracle_count = corpus.iter().filter(|e| e.oracle).count();
    assert!(corpus.len() >= 40);
    assert!(oracle_count >= 40);

    let mut violations = Vec::new();
    for e in &corpus {
        let report = bounds::bound_report(&e.graph, &e.name, DEFAULT_GUARD);
        if e.oracle {
            let chi = report.exact.expect(&e.name);
            assert!(chi >= report.delta_star, "{}: {chi} < delta*", e.name);
            for entry in &report.entries {
                if let (true, Some(v)) = (entry.applicable, entry.value) {
                    assert!(
                        chi <= v,
                        "{}: exact {chi} exceeds {} = {v}",
                        e.name,
                        entry.name
                    );
                }
            }
        }
        if report.has_violation() {
            violations.push(e.name.clone());
        }
    }
    assert!(violations.is_empty(), "violations on {violations:?}");

    // The same sweep through the CLI: serialize the corpus, run `ccc bounds`
    // on the directory, and require a clean exit.
    let dir = tempfile::tempdir().unwrap();
    for e in &corpus {
        std::fs::write(
            dir.path().join(format!("{}.pg", e.name)),
            format::write(&e.graph),
        )
        .unwrap();
    }
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_ccc"))
        .args(["bounds"])
        .arg(dir.path())
        .args(["--format", "csv", "--guard", &DEFAULT_GUARD.to_string()])
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "ccc bounds exited with {:?}: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
    let csv = String::from_utf8(output.stdout).unwrap();
    assert_eq!(csv.lines().count(), corpus.len() + 1);
    assert!(!csv.contains("VIOLATED"));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "sweep took {elapsed:?}");
    println!(
        "criterion 8: PASS: {} instances ({oracle_count} with exact oracle), no violations, swept in {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn criterion_9_structural_invariants_across_corpus() {
    let mut reduced_count = 0;
    let mut s3c_count = 0;
    for e in corpus::standard() {
        let g = &e.graph;
        // Euler and the dart partition.
        assert!(g.validate().is_valid(), "{}", e.name);
        let walk_total: usize = g.faces().iter().map(|f| f.walk.len()).sum();
        assert_eq!(walk_total, 2 * g.edge_count(), "{}", e.name);
        // Face-clique property.
        let ca = g.cyclic_adjacency();
        for f in g.faces() {
            for (i, &u) in f.vertices.iter().enumerate() {
                for &v in &f.vertices[i + 1..] {
                    assert!(ca.adjacent(u, v), "{}", e.name);
                }
            }
        }
        // Reduction counts, round trip, and the subdivision parameters.
        let Ok(r) = reduction::reduce(g) else {
            continue;
        };
        reduced_count += 1;
        assert_eq!(g.faces().len(), r.reduced.faces().len(), "{}", e.name);
        assert!(
            rotation_isomorphic(g, &r.resubdivide().unwrap()),
            "{}",
            e.name
        );
        let s = reduction::subdivision_multigraph(g, &r).unwrap();
        if r.reduced.is_three_connected_simple() {
            s3c_count += 1;
            let t = g.t_of().unwrap();
            assert_eq!(s.multiplicity, t, "{}", e.name);
            assert_eq!(g.k_star().unwrap(), t + 2, "{}", e.name);
        }
    }
    assert!(reduced_count >= 30);
    assert!(s3c_count >= 15);
    println!(
        "criterion 9: PASS: invariants hold on every corpus instance ({reduced_count} reducible, {s3c_count} subdivisions of simple 3-connected graphs)"
    );
}
