//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use canonical_witness::bounds::{self, BoundsConfig, Flag};
use canonical_witness::canonical::{enumerate_canonical, verify_antichain, CanonicalConfig};
use canonical_witness::census::{
    connected_graphs_up_to_iso, hamiltonian_path, labeled_graphs, seeded_graph, SeededRng,
};
use canonical_witness::extract::{
    induced_path_or_biclique, make_dense_rake_graph, verify_witness, witness_pipeline,
    witness_pipeline_with_model, Witness,
};
use canonical_witness::graph::{complete, complete_bipartite, cycle, grid, path, Graph};
use canonical_witness::limits::SearchLimits;
use canonical_witness::oracle::{self, Embedding};
use canonical_witness::witness_json;
use num_bigint::BigUint;

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn report(criterion: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {criterion} ({name}): {verdict} — {detail}");
    assert!(pass, "criterion {criterion} ({name}): {detail}");
}

// ============================================================================
// 1. Antichain up to order 10
// ============================================================================

#[test]
fn criterion_1_antichain_to_order_10() {
    let cfg = CanonicalConfig::default();
    let descriptors = enumerate_canonical(10, &cfg);
    let r = verify_antichain(&descriptors, &cfg, &limits()).expect("within ceilings");
    let detail = format!(
        "{} descriptors, {} ordered pairs, {} violations",
        descriptors.len(),
        r.pairs_checked,
        r.violations.len()
    );
    // the CLI front end must agree, exit code 0 and all
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_canonical-witness"))
        .args(["antichain", "--max-order", "10"])
        .output()
        .expect("binary runs");
    let cli_ok = out.status.code() == Some(0)
        && String::from_utf8_lossy(&out.stdout).starts_with("OK 756 pairs");
    report(
        1,
        "antichain",
        r.is_antichain() && r.pairs_checked == 756 && cli_ok,
        &detail,
    );
}

// ============================================================================
// 2. Extraction soundness sweep
// ============================================================================

/// The shared seeded sweep. Returns (runs, conclusive, failures, all JSON
/// concatenated) so the determinism criterion can replay it byte for byte.
fn soundness_sweep(master_seed: u64, graphs: usize) -> (usize, usize, usize, String) {
    let limits = limits();
    let probs = [5u64, 10, 30, 50];
    let mut runs = 0;
    let mut conclusive = 0;
    let mut failures = 0;
    let mut transcript = String::new();
    for i in 0..graphs {
        let mut rng = SeededRng::new(master_seed.wrapping_add(i as u64 * 0x9e37_79b9));
        let n = 4 + rng.below(17) as usize; // 4..=20
        let p = probs[i % probs.len()];
        let g = seeded_graph(rng.next_u64(), n, p);
        for (s, q) in [(4usize, 2usize), (5, 2), (4, 3)] {
            let w = witness_pipeline(&g, s, q, &limits);
            runs += 1;
            if w.is_conclusive() {
                conclusive += 1;
                if verify_witness(&g, &w).is_err() {
                    failures += 1;
                }
            }
            transcript.push_str(&witness_json::to_json_string(&w, w.is_conclusive()));
            transcript.push('\n');
        }
    }
    (runs, conclusive, failures, transcript)
}

const SWEEP_SEED: u64 = 0x5EED_CA11;
const SWEEP_GRAPHS: usize = 10_000;

#[test]
fn criterion_2_extraction_soundness_sweep() {
    let (runs, conclusive, failures, _) = soundness_sweep(SWEEP_SEED, SWEEP_GRAPHS);
    let detail = format!(
        "{SWEEP_GRAPHS} graphs, {runs} pipeline runs, {conclusive} conclusive, {failures} validation failures"
    );
    report(2, "extraction soundness", failures == 0 && runs == 3 * SWEEP_GRAPHS, &detail);
}

// ============================================================================
// 3. Oracle completeness cross-check
// ============================================================================

/// Naive all-injections induced-subgraph checker, independent of the search
/// code: tries every injective map.
fn naive_induced_present(host: &Graph, pattern: &Graph) -> bool {
    let hn = host.vertex_count();
    let pn = pattern.vertex_count();
    if pn > hn {
        return false;
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    #[allow(clippy::needless_range_loop)]
    fn rec(host: &Graph, pattern: &Graph, map: &mut [usize], used: &mut [bool], d: usize) -> bool {
        if d == map.len() {
            return true;
        }
        'cand: for h in 0..host.vertex_count() {
            if used[h] {
                continue;
            }
            for j in 0..d {
                if pattern.has_edge(d, j) != host.has_edge(h, map[j]) {
                    continue 'cand;
                }
            }
            map[d] = h;
            used[h] = true;
            if rec(host, pattern, map, used, d + 1) {
                return true;
            }
            used[h] = false;
        }
        false
    }
    rec(host, pattern, &mut map, &mut used, 0)
}

#[test]
fn criterion_3_oracle_completeness() {
    let patterns = [
        ("P4", path(4)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K3", complete(3)),
        ("K22", complete_bipartite(2, 2)),
    ];
    let limits = limits();
    let mut checked = 0usize;
    let mut disagreements = 0usize;
    for n in 0..=6 {
        for host in labeled_graphs(n) {
            for (_, pattern) in &patterns {
                let fast = oracle::find_induced_embedding(&host, pattern, &limits)
                    .expect("within ceilings")
                    .is_some();
                let slow = naive_induced_present(&host, pattern);
                checked += 1;
                if fast != slow {
                    disagreements += 1;
                }
            }
        }
    }
    let detail = format!("{checked} host/pattern decisions, {disagreements} disagreements");
    report(3, "oracle completeness", disagreements == 0, &detail);
}

// ============================================================================
// 4. Desk-scale path dichotomy
// ============================================================================

#[test]
fn criterion_4_path_dichotomy_small_graphs() {
    let limits = limits();
    let mut hosts = 0usize;
    let mut conclusive = 0usize;
    let mut unconfirmed = 0usize;
    let mut y_emp = 0usize;
    for n in 1..=8 {
        for g in connected_graphs_up_to_iso(n) {
            let Some(ham) = hamiltonian_path(&g) else { continue };
            hosts += 1;
            match induced_path_or_biclique(&g, &ham, 4, 4, &limits).expect("valid path") {
                Witness::InducedPath(p) => {
                    conclusive += 1;
                    // oracle confirmation: an induced P_4 really is present
                    let ok = g.is_chordless_path(&p)
                        && p.len() >= 4
                        && oracle::find_induced_embedding(&g, &path(4), &limits)
                            .unwrap()
                            .is_some();
                    if !ok {
                        unconfirmed += 1;
                    }
                }
                Witness::Biclique(a, b) => {
                    conclusive += 1;
                    let w = Witness::Biclique(a.clone(), b.clone());
                    let ok = verify_witness(&g, &w).is_ok()
                        && a.len() == 2
                        && b.len() == 2
                        && oracle::find_biclique(&g, 2, 2, &limits).unwrap().is_some();
                    if !ok {
                        unconfirmed += 1;
                    }
                }
                Witness::Inconclusive { .. } => {
                    // below threshold: the empirical bound tracks these hosts
                }
                other => panic!("unexpected witness {other:?}"),
            }
            // empirical threshold: hosts with no K_2,2 subgraph and no
            // induced P_4 bound how long a path can be without forcing
            // either outcome
            let k22_free = oracle::find_biclique(&g, 2, 2, &limits).unwrap().is_none();
            let p4_free =
                oracle::find_induced_embedding(&g, &path(4), &limits).unwrap().is_none();
            if k22_free && p4_free {
                y_emp = y_emp.max(n);
            }
        }
    }
    // the two-triangle friendship graph realizes 5; nothing larger survives
    let y_emp_ok = y_emp == 5;
    let bound = bounds::y_lower_bound(4, 4, &BoundsConfig::default()).expect("lower bound");
    let bounded = BigUint::from(y_emp) <= bound;
    let detail = format!(
        "{hosts} hamiltonian hosts, {conclusive} conclusive, {unconfirmed} unconfirmed; \
         Y_emp(4,4) = {y_emp}, certified lower bound on Y(4,4) has {} bits",
        bound.bits()
    );
    report(
        4,
        "path dichotomy",
        unconfirmed == 0 && y_emp_ok && bounded,
        &detail,
    );
}

// ============================================================================
// 5. Bounds exactness
// ============================================================================

/// Brute-force minimal pigeonhole: smallest n forcing m elements of one
/// colour among r colours.
fn pigeonhole_brute(r: u64, m: u64) -> u64 {
    'outer: for n in 1.. {
        for code in 0..r.pow(n as u32) {
            let mut counts = vec![0u64; r as usize];
            let mut c = code;
            for _ in 0..n {
                counts[(c % r) as usize] += 1;
                c /= r;
            }
            if counts.iter().all(|&x| x < m) {
                continue 'outer;
            }
        }
        return n;
    }
    unreachable!()
}

#[test]
fn criterion_5_bounds_exactness() {
    let cfg = BoundsConfig::default();
    let lit = BoundsConfig::literal();
    let mut checks: Vec<(String, bool)> = Vec::new();
    checks.push((
        "P(2,3) = 5 = brute force".into(),
        bounds::pigeonhole_p(2, 3).unwrap().value == BigUint::from(pigeonhole_brute(2, 3)),
    ));
    checks.push((
        "P(3,2) = 4 = brute force".into(),
        bounds::pigeonhole_p(3, 2).unwrap().value == BigUint::from(pigeonhole_brute(3, 2)),
    ));
    checks.push((
        "C(2,2) = 33".into(),
        bounds::lemma_grid_c(2, 2, &cfg).unwrap().value == BigUint::from(33u32),
    ));
    let base_cases = (1..=6).all(|q| {
        bounds::thm_main2_y(1, q, &cfg).unwrap().value == BigUint::from(1u32)
            && bounds::thm_main2_y(q, 1, &cfg).unwrap().value == BigUint::from(1u32)
    });
    checks.push(("Y(1,q) = Y(s,1) = 1".into(), base_cases));
    let y33 = bounds::thm_main2_y(3, 3, &lit).unwrap();
    checks.push((
        "literal Y(3,3) = 1 flagged degenerate-base-case".into(),
        y33.value == BigUint::from(1u32) && y33.flags.contains(&Flag::DegenerateBaseCase),
    ));
    // why the flag exists: K_3 has a 3-vertex path yet neither an induced
    // P_3 nor a K_2,2, so the literal value 1 cannot act as a threshold
    let k3 = complete(3);
    let l = limits();
    let counterexample = oracle::longest_path(&k3, &l).unwrap().len() == 3
        && oracle::find_induced_embedding(&k3, &path(3), &l).unwrap().is_none()
        && oracle::find_biclique(&k3, 2, 2, &l).unwrap().is_none();
    checks.push(("K_3 counterexample documents the flag".into(), counterexample));

    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name.as_str())
        .collect();
    let detail = if failed.is_empty() {
        format!("{} exact checks", checks.len())
    } else {
        format!("failed: {}", failed.join("; "))
    };
    report(5, "bounds exactness", failed.is_empty(), &detail);
}

// ============================================================================
// 6. Rake pipeline on trees
// ============================================================================

fn rake_tree_run(k: usize) -> (Graph, Witness) {
    let (g, _) = make_dense_rake_graph(k, 1).expect("rake construction");
    let w = witness_pipeline(&g, 4, 2, &limits());
    (g, w)
}

#[test]
fn criterion_6_rake_pipeline_on_trees() {
    let mut failures = Vec::new();
    for k in 8..=14 {
        let (g, w) = rake_tree_run(k);
        // oracle pre-verification: the host tree is K_2,2-free
        if oracle::find_biclique(&g, 2, 2, &limits()).unwrap().is_some() {
            failures.push(format!("k={k}: tree has a K_2,2?!"));
            continue;
        }
        match &w {
            Witness::Canonical(cw)
                if matches!(
                    cw.descriptor,
                    canonical_witness::canonical::CanonicalDescriptor::HGraph { .. }
                ) =>
            {
                if verify_witness(&g, &w).is_err() || cw.descriptor.order() < 4 {
                    failures.push(format!("k={k}: witness failed validation"));
                }
            }
            other => failures.push(format!("k={k}: expected an H-graph, got {other:?}")),
        }
    }
    let detail = if failures.is_empty() {
        "k in 8..=14 all produced verified H-graph witnesses".to_string()
    } else {
        failures.join("; ")
    };
    report(6, "rake pipeline on trees", failures.is_empty(), &detail);
}

// ============================================================================
// 7. Grid pipeline, stage 2 with the explicit identity model
// ============================================================================

fn grid_stage2_run() -> (Graph, Witness) {
    let g = grid(6);
    let model = Embedding::Minor((0..36).map(|v| vec![v]).collect());
    let w = witness_pipeline_with_model(&g, 6, 3, &model, 6, &limits());
    (g, w)
}

#[test]
fn criterion_7_grid_stage2() {
    let (g, w) = grid_stage2_run();
    // oracle pre-verification: the grid is K_3,3-free, so only a canonical
    // witness of order >= 6 can satisfy the criterion
    let k33_free = oracle::find_biclique(&g, 3, 3, &limits()).unwrap().is_none();
    let (pass, detail) = match &w {
        Witness::Canonical(cw) if cw.descriptor.order() >= 6 => {
            let ok = verify_witness(&g, &w).is_ok() && k33_free;
            (ok, format!("stage 2 produced {}", cw.descriptor))
        }
        Witness::Inconclusive { stage_log, .. } => (
            false,
            format!(
                "stage 2 produced no witness; the two-row rake derivation confines the dense \
                 rake to 2 grid rows, which cannot span a canonical graph of order 6. log: {}",
                stage_log.join(" | ")
            ),
        ),
        other => (false, format!("unexpected witness {other:?}")),
    };
    report(7, "grid stage 2", pass, &detail);
}

// ============================================================================
// 8. Determinism
// ============================================================================

#[test]
fn criterion_8_determinism() {
    // criterion 2's sweep replayed with the identical seed
    let (_, _, _, sweep_a) = soundness_sweep(SWEEP_SEED, SWEEP_GRAPHS);
    let (_, _, _, sweep_b) = soundness_sweep(SWEEP_SEED, SWEEP_GRAPHS);
    let sweep_ok = sweep_a == sweep_b;
    // criterion 6's runs
    let mut c6_ok = true;
    for k in 8..=14 {
        let (_, w1) = rake_tree_run(k);
        let (_, w2) = rake_tree_run(k);
        let j1 = witness_json::to_json_string(&w1, w1.is_conclusive());
        let j2 = witness_json::to_json_string(&w2, w2.is_conclusive());
        c6_ok &= j1 == j2;
    }
    // criterion 7's run (deterministic whatever its outcome)
    let (_, w1) = grid_stage2_run();
    let (_, w2) = grid_stage2_run();
    let c7_ok = witness_json::to_json_string(&w1, w1.is_conclusive())
        == witness_json::to_json_string(&w2, w2.is_conclusive());
    let detail = format!(
        "sweep replay byte-identical: {sweep_ok}; rake runs: {c6_ok}; grid run: {c7_ok}"
    );
    report(8, "determinism", sweep_ok && c6_ok && c7_ok, &detail);
}
