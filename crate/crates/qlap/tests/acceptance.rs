//! End-to-end acceptance checks, one test per criterion. Each test prints a
//! single `PASS criterion N` line (visible with `--nocapture`) summarising
//! what was verified and at which tolerance; a failed assertion keeps the
//! line from printing, so the harness output doubles as a checklist.

use qlap::bipartite::{self, CutStrategy};
use qlap::bounds::{self, BoundSource};
use qlap::clique;
use qlap::graph::{is_isomorphic_small, labeled_graphs, Graph};
use qlap::search::{self, SearchConfig, StartPoint};
use qlap::spectral::{self, MatrixKind};
use qlap::srg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded Erdős–Rényi graph with edge probability 1/2.
fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid random edges")
}

// ----------------------------------------------------------------------
// 1. Closed-form blowup spectra agree with direct eigensolves
// ----------------------------------------------------------------------

#[test]
fn criterion_1_blowup_closed_forms_match_direct_spectra() {
    const TOL: f64 = 1e-7;
    let mut rng = ChaCha8Rng::seed_from_u64(0xB10);
    let mut worst: f64 = 0.0;
    let mut cases = 0usize;
    for i in 0..50 {
        let n = rng.gen_range(2..=10);
        let t = [2usize, 3, 4][i % 3];
        let g = random_graph(&mut rng, n);
        let blown = g.blowup(t).expect("blowup within order cap");
        let blown_comp = blown.complement();
        for kind in MatrixKind::ALL {
            let closed = spectral::blowup_spectrum_closed(&g, t, kind).unwrap();
            let direct = spectral::spectrum(&blown, kind).unwrap();
            let d = closed.max_abs_difference(&direct).unwrap();
            assert!(
                d <= TOL,
                "blowup {kind:?} closed form off by {d:.3e} (n={n}, t={t})"
            );
            worst = worst.max(d);

            let closed = spectral::blowup_complement_spectrum_closed(&g, t, kind).unwrap();
            let direct = spectral::spectrum(&blown_comp, kind).unwrap();
            let d = closed.max_abs_difference(&direct).unwrap();
            assert!(
                d <= TOL,
                "complement-blowup {kind:?} closed form off by {d:.3e} (n={n}, t={t})"
            );
            worst = worst.max(d);
            cases += 2;
        }
    }
    println!(
        "PASS criterion 1: {cases} closed-form spectra (A/L/Q of blowup and of its \
         complement, 50 seeded random graphs, n in 2..=10, t in {{2,3,4}}) match \
         direct eigensolves; worst deviation {worst:.2e} <= 1e-7"
    );
}

// ----------------------------------------------------------------------
// 2. Higman–Sims graph: parameters, spectrum, blowup value
// ----------------------------------------------------------------------

#[test]
fn criterion_2_higman_sims_spectrum_and_blowup() {
    let hs = srg::higman_sims().expect("Higman–Sims construction");
    assert_eq!(
        srg::srg_violation(&hs, srg::HIGMAN_SIMS_PARAMS),
        None,
        "srg(100,22,0,6) parameter check"
    );

    // Adjacency spectrum 22 (x1), 2 (x77), -8 (x22).
    let adj = spectral::spectrum(&hs, MatrixKind::Adjacency).unwrap();
    let groups = adj.multiplicities();
    assert_eq!(groups.len(), 3, "three distinct adjacency eigenvalues");
    let expected = [(22.0, 1usize), (2.0, 77), (-8.0, 22)];
    for ((val, mult), (eval, emult)) in groups.iter().zip(expected) {
        assert!(
            (val - eval).abs() <= 1e-6,
            "adjacency eigenvalue {val} vs {eval}"
        );
        assert_eq!(*mult, emult, "multiplicity of adjacency eigenvalue {eval}");
    }

    let qmin = spectral::q_min(&hs).unwrap();
    assert!((qmin - 14.0).abs() <= 1e-7, "q_min(HS) = {qmin} vs 14");

    // 2-fold blowup: closed form and a direct 200-vertex eigensolve.
    let closed = spectral::blowup_spectrum_closed(&hs, 2, MatrixKind::SignlessLaplacian)
        .unwrap()
        .min();
    assert!((closed - 28.0).abs() <= 1e-6, "closed blowup q_min {closed}");
    let blown = hs.blowup(2).unwrap();
    assert_eq!(blown.order(), 200);
    let direct = spectral::q_min(&blown).unwrap();
    assert!((direct - 28.0).abs() <= 1e-6, "direct blowup q_min {direct}");

    println!(
        "PASS criterion 2: Higman–Sims verifies srg(100,22,0,6); adjacency spectrum \
         22 x1, 2 x77, -8 x22 within 1e-6; q_min = {qmin:.9} (target 14, tol 1e-7); \
         2-blowup q_min = 28 by closed form ({closed:.9}) and direct 200-vertex \
         solve ({direct:.9}) within 1e-6"
    );
}

// ----------------------------------------------------------------------
// 3. Bipartization bound on every 6-vertex graph, tight on K_4
// ----------------------------------------------------------------------

#[test]
fn criterion_3_bipartization_bound_exhaustive_on_six_vertices() {
    let mut count = 0usize;
    let mut min_gap = f64::INFINITY;
    for g in labeled_graphs(6).unwrap() {
        let rep = bipartite::mt_report(&g, CutStrategy::Exact).unwrap();
        assert!(
            rep.gap >= -1e-9,
            "cost {} below q_min*n/4 = {} on {}",
            rep.bipartization_cost,
            rep.bound,
            qlap::graph6::to_graph6(&g)
        );
        min_gap = min_gap.min(rep.gap);
        count += 1;
    }
    assert_eq!(count, 32_768, "all labeled graphs on 6 vertices");

    let k4 = bipartite::mt_report(&Graph::complete(4).unwrap(), CutStrategy::Exact).unwrap();
    assert!(
        k4.gap.abs() <= 1e-9,
        "K_4 should be tight, gap {}",
        k4.gap
    );

    println!(
        "PASS criterion 3: bipartization cost >= q_min*n/4 - 1e-9 on all 32768 \
         labeled 6-vertex graphs with exact max-cut (smallest gap {min_gap:.6}); \
         K_4 attains the bound with gap {:.1e}",
        k4.gap.abs()
    );
}

// ----------------------------------------------------------------------
// 4. Turán graphs against the classical benchmarks
// ----------------------------------------------------------------------

// The classical floor (r-2)*floor(n/r) <= q_min(T_r(n)) is not universally
// true: it fails precisely when n = 1 (mod r), where the minimum dips below
// the floor by less than 1 - 2/r (smallest case: q_min(T_3(7)) =
// (11 - sqrt(57))/2 < 2). This test therefore asserts the corrected law —
// the floor holds iff n mod r != 1 — together with the two benchmarks that
// are true without exception: the upper bound (1 - 2/r) n and the
// algebraic-connectivity identity mu_2 = n - ceil(n/r), plus equality of
// all three quantities when r divides n.
#[test]
fn criterion_4_turan_benchmarks_across_the_grid() {
    let mut checked = 0usize;
    let mut floor_failures = 0usize;
    for r in 3..=8 {
        for n in (r + 1)..=40 {
            let c = bounds::turan_qmin_check(n, r).unwrap();
            // Upper bound and mu_2 identity are asserted inside
            // turan_qmin_check; re-assert the reported flags here.
            assert!(c.qmin <= c.upper + 1e-9);
            assert!((c.mu2 - c.mu2_expected).abs() <= 1e-7, "mu_2 at ({n},{r})");
            assert_eq!(
                c.lower_holds,
                n % r != 1,
                "floor law at ({n},{r}): q_min {} vs floor {}",
                c.qmin,
                c.lower
            );
            if !c.lower_holds {
                floor_failures += 1;
                let deficit = c.lower - c.qmin;
                assert!(
                    deficit > 0.0 && deficit < 1.0 - 2.0 / r as f64,
                    "deficit {deficit} out of range at ({n},{r})"
                );
            }
            if n % r == 0 {
                assert!(c.lower_is_equality, "floor equality at ({n},{r})");
                assert!(c.upper_is_equality, "ceiling equality at ({n},{r})");
                assert!(
                    (c.qmin - (r as f64 - 2.0) * (n / r) as f64).abs() <= 1e-7,
                    "all three coincide at ({n},{r})"
                );
            }
            checked += 1;
        }
    }
    println!(
        "PASS criterion 4: {checked} pairs (r in 3..=8, n in r+1..=40): upper bound \
         (1-2/r)n and mu_2 = n - ceil(n/r) hold everywhere (tol 1e-7); the classical \
         floor (r-2)*floor(n/r) holds exactly when n mod r != 1 ({floor_failures} \
         principled failures, each short by less than 1 - 2/r); lower = q_min = \
         upper whenever r | n"
    );
}

// ----------------------------------------------------------------------
// 5. Small-order sweeps against the closed-form bounds
// ----------------------------------------------------------------------

#[test]
fn criterion_5_closed_form_bounds_hold_on_all_small_graphs() {
    const TOL: f64 = 1e-9;
    let mut graphs = 0usize;
    let mut bound_checks = 0usize;
    for n in 1..=6 {
        for g in labeled_graphs(n).unwrap() {
            let qmin = spectral::q_min(&g).unwrap();
            let omega = clique::clique_number(&g);
            let nf = n as f64;
            if omega <= 2 {
                // Triangle-free ceiling 2n/9.
                assert!(
                    qmin <= 2.0 * nf / 9.0 + TOL,
                    "triangle-free ceiling on {}",
                    qlap::graph6::to_graph6(&g)
                );
                bound_checks += 1;
            }
            if omega <= 3 {
                // K_4-free ceiling 4n/9.
                assert!(
                    qmin <= 4.0 * nf / 9.0 + TOL,
                    "K_4-free ceiling on {}",
                    qlap::graph6::to_graph6(&g)
                );
                bound_checks += 1;
            }
            for r in 3..=5usize {
                if omega <= r {
                    // Chromatic-threshold ceiling (1 - 3/(3r-1)) n.
                    let cap = (1.0 - 3.0 / (3.0 * r as f64 - 1.0)) * nf;
                    assert!(
                        qmin < cap + TOL,
                        "r-partite-threshold ceiling (r={r}) on {}",
                        qlap::graph6::to_graph6(&g)
                    );
                    bound_checks += 1;
                }
            }
            // The general checker must report no violations on any valid input.
            for r in 2..=5usize {
                if omega <= r && r < n {
                    let violations = bounds::check_graph_against_bounds(&g, r).unwrap();
                    assert!(
                        violations.is_empty(),
                        "violation reported for {} at r={r}: {violations:?}",
                        qlap::graph6::to_graph6(&g)
                    );
                    bound_checks += 1;
                }
            }
            graphs += 1;
        }
    }
    println!(
        "PASS criterion 5: {bound_checks} bound evaluations over {graphs} labeled \
         graphs on up to 6 vertices: triangle-free q_min <= 2n/9, K_4-free \
         q_min <= 4n/9, K_{{r+1}}-free q_min < (1-3/(3r-1))n for r in 3..=5 \
         (tol 1e-9), and the aggregate checker reports zero violations"
    );
}

// ----------------------------------------------------------------------
// 6. Search engine reproduces exhaustive optima deterministically
// ----------------------------------------------------------------------

#[test]
fn criterion_6_search_recovers_exhaustive_optima() {
    // Frozen pentagon optimum at (5, 2).
    let five = search::exhaustive_search(5, 2).unwrap();
    let golden = (3.0 - 5.0_f64.sqrt()) / 2.0;
    assert!(
        (five.best_qmin - golden).abs() <= 1e-8,
        "exhaustive (5,2) gives {}",
        five.best_qmin
    );
    assert!(
        is_isomorphic_small(&five.best_graph, &Graph::cycle(5).unwrap()).unwrap(),
        "(5,2) witness should be the pentagon, got {}",
        five.best_graph6
    );

    // The seeded local search must match the exhaustive optimum value on
    // every pair with n <= 7 and r in {2, 3}.
    let mut matched = 0usize;
    for r in [2usize, 3] {
        for n in (r + 1)..=7 {
            let exhaustive = search::exhaustive_search(n, r).unwrap();
            let mut config = SearchConfig::new(n, r);
            config.seed = 7;
            let local = search::local_search(&config).unwrap();
            assert!(
                (local.best_qmin - exhaustive.best_qmin).abs() <= 1e-8,
                "local search missed the optimum at ({n},{r}): {} vs {}",
                local.best_qmin,
                exhaustive.best_qmin
            );
            matched += 1;
        }
    }

    // Same seed, same answer, bit for bit.
    let mut config = SearchConfig::new(7, 3);
    config.seed = 7;
    let a = search::local_search(&config).unwrap();
    let b = search::local_search(&config).unwrap();
    assert_eq!(a.best_qmin.to_bits(), b.best_qmin.to_bits());
    assert_eq!(a.best_graph6, b.best_graph6);
    assert_eq!(a.evaluations, b.evaluations);

    println!(
        "PASS criterion 6: exhaustive (5,2) optimum is (3-sqrt5)/2 with a pentagon \
         witness (tol 1e-8); seed-7 local search (8 restarts, 1500 steps) matches \
         the exhaustive optimum on all {matched} pairs with n <= 7, r in {{2,3}}; \
         rerunning the same seed is bit-identical"
    );
}

// ----------------------------------------------------------------------
// 7. Padding records from the Higman–Sims blowup
// ----------------------------------------------------------------------

#[test]
fn criterion_7_higman_sims_padding_record() {
    let hs = srg::higman_sims().unwrap();
    let (value, witness) = search::blowup_padding_bound(&hs, 250).unwrap();
    // floor(250/100) = 2 copies of each vertex, so the construction value is
    // 2 * 14 = 28 (up to eigensolver noise).
    assert!(
        (value - 28.0).abs() <= 1e-6,
        "padding value {value} vs 28"
    );
    assert_eq!(witness.order(), 250, "witness padded to the requested order");
    let isolated = (0..witness.order()).filter(|&v| witness.degree(v) == 0).count();
    assert_eq!(isolated, 50, "250 - 2*100 padding vertices");
    assert!(
        clique::is_k_free(&witness, 3),
        "padded witness must stay triangle-free"
    );
    let unpadded = hs.blowup(2).unwrap();
    assert!(
        clique::is_k_free(&unpadded, 3),
        "unpadded 200-vertex blowup must be triangle-free"
    );

    println!(
        "PASS criterion 7: blowup-with-padding at n = 250 from Higman–Sims yields \
         construction value {value:.9} (target 28, tol 1e-6) with a 250-vertex \
         witness (50 isolated vertices) whose 200-vertex core is verified \
         triangle-free by clique check"
    );
}

// ----------------------------------------------------------------------
// 8. Structural spectral identities
// ----------------------------------------------------------------------

#[test]
fn criterion_8_spectral_identities() {
    // Regular identity q_min = d + lambda_min on four regular graphs.
    let named: [(&str, Graph); 4] = [
        ("C_5", Graph::cycle(5).unwrap()),
        ("K_4", Graph::complete(4).unwrap()),
        ("Petersen", Graph::petersen()),
        ("Higman–Sims", srg::higman_sims().unwrap()),
    ];
    for (name, g) in &named {
        let (qmin, via_adjacency) = spectral::check_regular_identity(g).unwrap();
        assert!(
            (qmin - via_adjacency).abs() <= 1e-8,
            "regular identity on {name}: {qmin} vs {via_adjacency}"
        );
    }

    // Laplacian complement identity on seeded random graphs: the complement
    // spectrum is {0} plus {n - mu} over the original spectrum minus one zero.
    let mut rng = ChaCha8Rng::seed_from_u64(0xC8);
    for _ in 0..50 {
        let n = rng.gen_range(2..=12);
        let g = random_graph(&mut rng, n);
        let original = spectral::laplacian_ascending(&g).unwrap();
        let mut expected: Vec<f64> = original[1..]
            .iter()
            .map(|mu| n as f64 - mu)
            .collect();
        expected.push(0.0);
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let complement = spectral::laplacian_ascending(&g.complement()).unwrap();
        for (e, c) in expected.iter().zip(&complement) {
            assert!(
                (e - c).abs() <= 1e-7,
                "complement Laplacian identity on n={n}: {e} vs {c}"
            );
        }
    }

    // q_min = 0 exactly when some component is bipartite; exhaustive to n = 6.
    let mut zero_cases = 0usize;
    for n in 1..=6 {
        for g in labeled_graphs(n).unwrap() {
            let zero = spectral::q_min(&g).unwrap() < 1e-8;
            assert_eq!(
                zero,
                g.has_bipartite_component(),
                "q_min ~ 0 vs bipartite component on {}",
                qlap::graph6::to_graph6(&g)
            );
            if zero {
                zero_cases += 1;
            }
        }
    }

    println!(
        "PASS criterion 8: regular identity q_min = d + lambda_min on C_5, K_4, \
         Petersen, Higman–Sims (tol 1e-8); Laplacian complement identity on 50 \
         seeded random graphs up to n = 12 (tol 1e-7); q_min = 0 iff a component \
         is bipartite on all labeled graphs up to n = 6 ({zero_cases} vanishing \
         cases)"
    );
}

// ----------------------------------------------------------------------
// 9. Open questions stay open; outputs never overclaim
// ----------------------------------------------------------------------

#[test]
fn criterion_9_reported_knowledge_stays_within_proved_bounds() {
    // The extremal growth constants are only known to live in an interval;
    // the API must expose an interval, never a point value.
    let twos = bounds::qmin_bounds(100, 2).unwrap().c_r_interval;
    assert!((twos.low - 0.14).abs() <= 1e-12 && twos.low_inclusive);
    assert!((twos.high - 2.0 / 9.0).abs() <= 1e-12 && !twos.high_inclusive);
    assert!(twos.high - twos.low > 0.08, "r = 2 window stays open");
    for r in 3..=6usize {
        let iv = bounds::qmin_bounds(100, r).unwrap().c_r_interval;
        let conjectured = 1.0 - 2.0 / r as f64;
        assert!(
            (iv.low - conjectured).abs() <= 1e-12 && !iv.low_inclusive,
            "r = {r} interval opens at 1 - 2/r"
        );
        assert!(iv.high > iv.low, "r = {r} window stays open");
    }

    // Search results must respect the proved ceiling and re-verify their own
    // witnesses: K_{r+1}-free, and the claimed q_min reproducible.
    let mut runs = 0usize;
    for (n, r, seed) in [(8usize, 2usize, 1u64), (9, 3, 2), (10, 4, 3), (12, 3, 7)] {
        let mut config = SearchConfig::new(n, r);
        config.seed = seed;
        config.start = if runs.is_multiple_of(2) {
            StartPoint::Random
        } else {
            StartPoint::Turan
        };
        let result = search::local_search(&config).unwrap();
        let (upper, source) = result.upper_bound_used;
        assert!(
            result.best_qmin <= upper + 1e-9,
            "search exceeded the proved bound {upper} ({source}) at ({n},{r})"
        );
        assert!(
            clique::is_k_free(&result.best_graph, r + 1),
            "witness at ({n},{r}) contains K_{{r+1}}"
        );
        let recomputed = spectral::q_min(&result.best_graph).unwrap();
        assert!(
            (recomputed - result.best_qmin).abs() <= 1e-8,
            "witness value does not reproduce at ({n},{r})"
        );
        // The ceiling in force must be one of the unconditional ones.
        assert!(matches!(
            source,
            BoundSource::Efps | BoundSource::Sudakov | BoundSource::AndrasfaiErdosSos
        ));
        runs += 1;
    }

    println!(
        "PASS criterion 9: growth-constant API exposes open intervals ([0.14, 2/9) \
         for triangle-free, (1-2/r, ...) for r in 3..=6) rather than point values; \
         {runs} seeded searches stay below their proved ceilings and their winning \
         graphs re-verify as K_{{r+1}}-free with the claimed q_min (tol 1e-8)"
    );
}
