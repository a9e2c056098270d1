//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured quantities. Everything is exact (integer or rational
//! arithmetic); the only numeric tolerance is the loose log-log slope bound
//! of the scaling smoke test.
//!
//! Run with `cargo test -p stripmis --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use stripmis::esd::{self, Esd, EtaMap, Particle, PatternGraph, StripMode};
use stripmis::graph::{Graph, Ratio, VertexSet, WeightFn};
use stripmis::matching::{brute_force_matching, max_weight_matching, EdgeWeightedGraph};
use stripmis::reduction::{build_auxiliary, reduce_mwis, ParticleSolutions};
use stripmis::solver::providers::{DecompositionProvider, ExhaustiveProvider, LineGraphProvider};
use stripmis::solver::{
    self, check_provider_contract, find_balanced_separator, partition_lr, SolverConfig,
};
use stripmis::testkit::{
    brute_force_mwis, complete_graph, cycle_graph, gen_random_bounded_degree, gen_random_weights,
    gen_subdivided_claw, line_graph, path_graph, petersen, poljak_subdivide,
};

/// Exact particle optimum through the public oracle (particles stay small).
fn exact_particles(host: &Graph, particle: &Particle) -> VertexSet {
    let (sub, map) = host.induced_subgraph(&particle.set).unwrap();
    let res = brute_force_mwis(&sub).expect("particles fit the oracle cap");
    res.set.iter().map(|v| map[v]).collect()
}

/// The canonical path decomposition: P_n cut into consecutive segments, one
/// strip per segment, singleton end sets at the shared boundaries, and the
/// two outermost vertices as terminals.
fn path_esd(weights: Vec<u64>, segment_sizes: &[usize], with_terminals: bool) -> Esd {
    let n: usize = segment_sizes.iter().sum();
    assert!(segment_sizes.iter().all(|&s| s >= 1));
    let host_edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let host = Graph::from_edges_weighted(n, &host_edges, weights).unwrap();
    let k = segment_sizes.len();
    let pattern = PatternGraph::new(k + 1, (0..k).map(|i| (i, i + 1)).collect()).unwrap();
    let mut eta = EtaMap::empty(&pattern);
    let mut start = 0;
    for (i, &size) in segment_sizes.iter().enumerate() {
        let segment: VertexSet = (start..start + size).collect();
        eta.set_edge(i, segment);
        eta.set_edge_end(i, i, VertexSet::singleton(start)).unwrap();
        eta.set_edge_end(i, i + 1, VertexSet::singleton(start + size - 1))
            .unwrap();
        start += size;
    }
    let terminals = with_terminals.then(|| VertexSet::from_unsorted(vec![0, n - 1]));
    let esd = Esd::new(host, pattern, eta, terminals).unwrap();
    assert!(
        esd.validate(StripMode::Strict).is_ok(),
        "fixture must be valid"
    );
    esd
}

/// A varied corpus of valid decompositions at oracle scale: canonical paths,
/// line-graph decompositions, isolated-vertex extensions, and whatever the
/// exhaustive provider finds on tiny random graphs.
fn esd_corpus() -> Vec<Esd> {
    let mut out = Vec::new();
    // Canonical path splits with random weights.
    let mut seed = 1000u64;
    for n in 4..=16usize {
        let splits: Vec<Vec<usize>> = vec![
            vec![n / 2, n - n / 2],
            vec![1, n - 2, 1],
            vec![n - 3, 1, 1, 1],
        ];
        for sizes in splits {
            if sizes.contains(&0) {
                continue;
            }
            seed += 1;
            let weights = gen_random_weights(n, 1, 100, seed);
            out.push(path_esd(weights, &sizes, true));
        }
    }
    // Line-graph decompositions of small roots.
    let roots = vec![
        petersen(),
        path_graph(9),
        cycle_graph(8),
        gen_subdivided_claw(2, 2, 2),
        gen_random_bounded_degree(7, 3, 0.5, 5),
        gen_random_bounded_degree(8, 3, 0.4, 17),
    ];
    for root in roots {
        let (lg, _) = line_graph(&root);
        if lg.n() == 0 || lg.n() > 16 {
            continue;
        }
        seed += 1;
        let lg = lg.reweighted(gen_random_weights(lg.n(), 1, 100, seed));
        let (x, esd) = LineGraphProvider::default()
            .provide(&lg)
            .expect("line graphs recognize");
        assert!(x.is_empty());
        out.push(esd);
    }
    // Isolated-vertex extensions: a path decomposition plus disjoint blobs.
    for (extra_edges, extra_n) in [
        (vec![(0usize, 1usize), (0, 2), (1, 2)], 3usize),
        (vec![(0, 1)], 2),
    ] {
        let core_n = 6;
        let esd_core = path_esd(vec![1; core_n], &[3, 3], false);
        let mut host_edges = esd_core.host.edges();
        for &(u, v) in &extra_edges {
            host_edges.push((core_n + u, core_n + v));
        }
        seed += 1;
        let host = Graph::from_edges(core_n + extra_n, &host_edges)
            .unwrap()
            .reweighted(gen_random_weights(core_n + extra_n, 1, 100, seed));
        let core = VertexSet::from_unsorted((0..core_n).collect());
        let extra: VertexSet = (core_n..core_n + extra_n).collect();
        let esd = esd::extend_to_host(&host, &core, &esd_core, &[extra]).unwrap();
        assert!(esd.validate(StripMode::Relaxed).is_ok());
        out.push(esd);
    }
    // Exhaustive-provider outputs on tiny random graphs.
    let provider = ExhaustiveProvider::new(6);
    let mut found = 0;
    let mut try_seed = 0u64;
    while found < 30 && try_seed < 400 {
        let n = 4 + (try_seed as usize) % 3;
        let g = gen_random_bounded_degree(n, 3, 0.5, try_seed).reweighted(gen_random_weights(
            n,
            1,
            100,
            try_seed ^ 0xabc,
        ));
        try_seed += 1;
        if let Ok((x, esd)) = provider.provide(&g) {
            assert!(x.is_empty());
            out.push(esd);
            found += 1;
        }
    }
    // Pad with more path variants up to 200 instances.
    let mut n = 4;
    while out.len() < 200 {
        seed += 1;
        let weights = gen_random_weights(n, 1, 100, seed);
        let first = 1 + (seed as usize) % (n - 1);
        out.push(path_esd(weights, &[first, n - first], true));
        n = if n >= 16 { 4 } else { n + 1 };
    }
    out
}

#[test]
fn criterion_1_solver_equals_oracle() {
    let cfg = SolverConfig {
        base_case_n: 8,
        memo_capacity: 1 << 16,
        ..SolverConfig::default()
    };
    let mut checked = 0;
    for seed in 0..300u64 {
        let n = 6 + (seed as usize) % 13; // 6..=18
        let g = gen_random_bounded_degree(n, 4, 0.35, seed).reweighted(gen_random_weights(
            n,
            1,
            100,
            seed ^ 0x51ab,
        ));
        let sol = solver::solve_mwis(&g, &cfg).expect("solver is total");
        let oracle = brute_force_mwis(&g).unwrap();
        assert_eq!(sol.weight, oracle.weight, "weight mismatch at seed {seed}");
        assert!(
            g.is_independent(&sol.set),
            "witness not independent at seed {seed}"
        );
        assert_eq!(g.set_weight(&sol.set), sol.weight);
        checked += 1;
    }
    println!("criterion 1 (oracle equivalence): PASS on {checked} instances");
}

#[test]
fn criterion_2_poljak_identity() {
    let cfg = SolverConfig {
        base_case_n: 8,
        memo_capacity: 1 << 18,
        ..SolverConfig::default()
    };
    let mut checked = 0;
    for seed in 0..50u64 {
        let n = 4 + (seed as usize) % 5; // 4..=8
        let base = gen_random_bounded_degree(n, 3, 0.5, seed ^ 0x9e3);
        let alpha = brute_force_mwis(&base).unwrap().weight;
        for p in 1..=2usize {
            let inst = poljak_subdivide(&base, p);
            let sol = solver::solve_mwis(&inst.subdivided, &cfg).expect("total");
            assert_eq!(
                sol.weight,
                alpha + inst.alpha_shift,
                "identity failed: seed {seed}, p {p}"
            );
            checked += 1;
        }
    }
    println!("criterion 2 (Poljak identity): PASS on {checked} subdivided instances");
}

#[test]
fn criterion_3_matching_reduction_exact() {
    let corpus = esd_corpus();
    assert!(
        corpus.len() >= 200,
        "need at least 200 instances, got {}",
        corpus.len()
    );
    for (i, esd) in corpus.iter().enumerate() {
        let (set, weight) = reduce_mwis(esd, &mut exact_particles).expect("reduction succeeds");
        let oracle = brute_force_mwis(&esd.host).unwrap();
        assert_eq!(
            weight, oracle.weight,
            "instance {i} disagrees with the oracle"
        );
        assert!(esd.host.is_independent(&set));
        assert_eq!(esd.host.set_weight(&set), weight);
    }
    println!(
        "criterion 3 (matching reduction, exact particle optima): PASS on {} instances",
        corpus.len()
    );
}

#[test]
fn criterion_4_blossom_equals_brute_force() {
    use rand::{Rng, SeedableRng};
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 500 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        seed += 1;
        let n = 2 + (rng.gen::<u64>() % 9) as usize; // 2..=10
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v, rng.gen_range(-10i64..=10)));
                }
            }
        }
        if edges.len() > 25 {
            continue; // brute-force cap
        }
        let g = EdgeWeightedGraph::new(n, edges).unwrap();
        let fast = max_weight_matching(&g);
        let slow = brute_force_matching(&g).unwrap();
        assert_eq!(fast, slow, "matching mismatch on {g:?}");
        assert!(fast.is_valid_for(&g));
        checked += 1;
    }
    println!("criterion 4 (blossom vs 2^m brute force): PASS on {checked} graphs");
}

#[test]
fn criterion_5_validator_soundness_under_mutations() {
    // Instances: 50 canonical path decompositions whose first two segments
    // have at least three vertices, so every mutation class applies.
    let mut instances = Vec::new();
    let mut seed = 0u64;
    while instances.len() < 50 {
        let n = 8 + (instances.len() % 9); // 8..=16
        seed += 1;
        let first = 3 + (seed as usize) % (n - 6);
        let rest = n - first;
        if first < 3 || rest < 3 {
            continue;
        }
        let weights = gen_random_weights(n, 1, 100, seed);
        instances.push(path_esd(weights, &[first, rest], true));
    }
    let mut applied = 0;
    for esd in &instances {
        assert!(
            esd.validate(StripMode::Strict).is_ok(),
            "original must be accepted"
        );
        let seg0: Vec<usize> = esd.eta.edge(0).iter().collect();
        let seg1: Vec<usize> = esd.eta.edge(1).iter().collect();
        let interior0 = seg0[1]; // segments have >= 3 vertices
        let interior1 = seg1[1];
        let boundary0 = *seg0.last().unwrap();
        let boundary1 = seg1[0];

        // 1. Move a vertex across eta sets.
        let mut m1 = esd.clone();
        m1.eta.set_edge(
            0,
            m1.eta.edge(0).difference(&VertexSet::singleton(interior0)),
        );
        m1.eta
            .set_edge(1, m1.eta.edge(1).union(&VertexSet::singleton(interior0)));
        let r1 = m1.validate(StripMode::Strict);
        assert!(
            !r1.is_ok() && r1.has_kind("forbidden-cross-adjacency"),
            "mutation 1"
        );

        // 2. Delete the cross-strip host edge between the two boundaries.
        let mut m2 = esd.clone();
        let edges2: Vec<(usize, usize)> = m2
            .host
            .edges()
            .into_iter()
            .filter(|&e| e != (boundary0.min(boundary1), boundary0.max(boundary1)))
            .collect();
        m2.host =
            Graph::from_edges_weighted(m2.host.n(), &edges2, m2.host.weights().to_vec()).unwrap();
        let r2 = m2.validate(StripMode::Strict);
        assert!(
            !r2.is_ok() && r2.has_kind("missing-cross-adjacency"),
            "mutation 2"
        );

        // 3. Add a stray host edge between strip interiors.
        let mut m3 = esd.clone();
        let mut edges3 = m3.host.edges();
        edges3.push((interior0.min(interior1), interior0.max(interior1)));
        m3.host =
            Graph::from_edges_weighted(m3.host.n(), &edges3, m3.host.weights().to_vec()).unwrap();
        let r3 = m3.validate(StripMode::Strict);
        assert!(
            !r3.is_ok() && r3.has_kind("forbidden-cross-adjacency"),
            "mutation 3"
        );

        // 4. Clear a potato segment.
        let mut m4 = esd.clone();
        m4.eta.set_edge_end(0, 1, VertexSet::new()).unwrap();
        let r4 = m4.validate(StripMode::Strict);
        assert!(
            !r4.is_ok() && r4.has_kind("forbidden-cross-adjacency"),
            "mutation 4"
        );

        // 5. Merge two edge sets.
        let mut m5 = esd.clone();
        let merged = m5.eta.edge(0).union(m5.eta.edge(1));
        m5.eta.set_edge(0, merged);
        m5.eta.set_edge(1, VertexSet::new());
        let r5 = m5.validate(StripMode::Strict);
        assert!(
            !r5.is_ok() && r5.has_kind("end-set-not-contained"),
            "mutation 5"
        );

        // 6. Drop a terminal.
        let mut m6 = esd.clone();
        m6.terminals = Some(VertexSet::singleton(0));
        let r6 = m6.validate(StripMode::Strict);
        assert!(
            !r6.is_ok() && r6.has_kind("terminal-count-mismatch"),
            "mutation 6"
        );

        applied += 6;
    }
    println!(
        "criterion 5 (validator soundness): PASS, {} mutations over {} instances rejected with the expected class",
        applied,
        instances.len()
    );
}

#[test]
fn criterion_6_nonnegative_auxiliary_weights() {
    let corpus = esd_corpus();
    let mut edges_checked = 0usize;
    for esd in &corpus {
        let sols = ParticleSolutions::collect(esd, &mut exact_particles).unwrap();
        let aux = build_auxiliary(esd, &sols).unwrap();
        for &(u, v, w) in aux.graph.edges() {
            assert!(
                w >= 0,
                "negative auxiliary weight {w} on {u}-{v} with exact particle optima"
            );
            edges_checked += 1;
        }
    }
    println!(
        "criterion 6 (nonnegative auxiliary weights): PASS over {} auxiliary edges on {} instances",
        edges_checked,
        corpus.len()
    );
}

#[test]
fn criterion_7_particle_size_bound() {
    // Providers on instances with n >= 30 * Delta: line graphs of long
    // cycles (Delta = 2, n >= 60) and of near-cubic roots (Delta = 4,
    // n >= 120).
    let mut hosts = Vec::new();
    for k in 60..=64usize {
        hosts.push(line_graph(&cycle_graph(k)).0);
    }
    let mut seed = 0u64;
    let mut cubic_found = 0;
    while cubic_found < 3 && seed < 200 {
        let root = gen_random_bounded_degree(90, 3, 0.9, seed);
        seed += 1;
        let (lg, _) = line_graph(&root);
        if lg.n() >= 30 * lg.max_degree() {
            hosts.push(lg);
            cubic_found += 1;
        }
    }
    assert!(hosts.len() >= 8, "instance generation came up short");
    let provider = LineGraphProvider::default();
    let mut particles_checked = 0usize;
    for host in &hosts {
        let n = host.n();
        let delta = host.max_degree().max(1);
        assert!(n >= 30 * delta, "instance outside the bound's regime");
        let (x, esd) = provider.provide(host).expect("line graphs recognize");
        check_provider_contract(host, &x, &esd, 4, delta).expect("atom audit passes");
        for particle in esd.particles() {
            assert!(
                2 * particle.set.len() <= n,
                "particle {:?} exceeds n/2 on an audited instance",
                particle.key
            );
            particles_checked += 1;
        }
    }
    println!(
        "criterion 7 (particle size bound): PASS, {} particles <= n/2 across {} instances",
        particles_checked,
        hosts.len()
    );
}

#[test]
fn criterion_8_partition_sizes() {
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 100 {
        let n = 8 + (seed as usize) % 13; // 8..=20
        let g = gen_random_bounded_degree(n, 4, 0.3, seed ^ 0x7a11);
        let c = if seed.is_multiple_of(2) {
            Ratio::new(1, 2)
        } else {
            Ratio::new(2, 3)
        };
        seed += 1;
        let Some(s) = find_balanced_separator(&g, &WeightFn::uniform(g.n()), c, 3) else {
            continue;
        };
        let (l, r) = partition_lr(&g, &s, c).expect("verified separator");
        let bound =
            ((c.num as u128 + c.den as u128) * n as u128).div_ceil(2 * c.den as u128) as usize;
        assert!(l.len() <= bound && r.len() <= bound, "size bound violated");
        // L and R partition V - S and are anticomplete.
        assert!(l.is_disjoint_from(&r));
        assert_eq!(
            l.union(&r).union(&s),
            VertexSet::from_unsorted((0..n).collect())
        );
        for u in l.iter() {
            for &w in g.neighbors(u) {
                assert!(!r.contains(w), "edge between L and R");
            }
        }
        checked += 1;
    }
    println!("criterion 8 (separator partition claim): PASS on {checked} verified pairs");
}

#[test]
fn criterion_9_scaling_smoke() {
    let base = complete_graph(3);
    let cfg = SolverConfig {
        base_case_n: 8,
        memo_capacity: 1 << 20,
        ..SolverConfig::default()
    };
    let mut points = Vec::new();
    for p in 1..=6usize {
        let inst = poljak_subdivide(&base, p);
        let sol = solver::solve_mwis(&inst.subdivided, &cfg).expect("total");
        assert_eq!(sol.weight, 1 + inst.alpha_shift, "Poljak value on K_3^p");
        points.push((
            (inst.subdivided.n() as f64).ln(),
            (sol.stats.nodes.max(1) as f64).ln(),
        ));
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    assert!(
        slope < 4.0,
        "node growth fit exponent {slope:.2} is not polynomial-looking"
    );
    println!("criterion 9 (scaling smoke test): PASS, log-log node-growth slope {slope:.2} < 4");
}
