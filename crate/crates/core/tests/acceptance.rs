//! Acceptance suite: every solver is held to exact agreement with the
//! subset-enumeration oracle, the structural guarantees of the algorithms
//! are checked against brute force, and every generator is validated
//! against an independent decider for its source problem.
//!
//! Each test prints one pass line; run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::time::Instant;

use nws_core::oracle::{solve_branching, solve_by_deletion, solve_subset_enumeration, Mode};
use nws_core::reductions::{self, brute, CnfFormula, HittingSetInstance, RandomParams};
use nws_core::stars_fitting::{
    community_partition, exhaust_rules, init_fit, local_cycle_edges, solve_fitting,
    solve_stars_fitting, FitState, FittingContext, FittingOutcome, LocalEdgeSet,
};
use nws_core::stars_twins::solve_stars_twins;
use nws_core::tree_support::solve_forest_support;
use nws_core::{
    universal_vertices, verify_solution, Budget, Instance, Property, Rational, SearchOptions,
    WeightedGraph,
};

fn opts() -> SearchOptions {
    SearchOptions::sequential()
}

/// Instances for the agreement suites: n <= 7, c <= 5, weights from
/// {1, 2, 3}, both properties, at most 18 relevant edges, with ell pinned
/// near the spanning-forest bound so that t stays in {-1, 0, 1, 2}.
fn suite_instances(property_filter: Option<Property>, want: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < want {
        seed += 1;
        let property = match property_filter {
            Some(p) => p,
            None if seed.is_multiple_of(2) => Property::Stars,
            None => Property::Connectivity,
        };
        let params = RandomParams {
            n: 4 + (seed % 4) as usize,
            edge_prob: 0.35 + 0.13 * ((seed % 5) as f64),
            community_count: 1 + (seed % 5) as usize,
            size_range: (1, 5),
            weight_range: if seed.is_multiple_of(3) {
                (1, 1)
            } else {
                (1, 3)
            },
            property,
        };
        let Ok(base) = reductions::random_instance(&params, seed) else {
            continue;
        };
        if base.relevant_edges().len() > 18 {
            continue;
        }
        let comps = base.hypergraph_components();
        let covered = base.graph().vertex_count() - comps.uncovered.len();
        let forest = (covered as i64 - comps.count() as i64).max(0);
        for dt in [-1i64, 0, 1, 2] {
            if out.len() >= want {
                break;
            }
            let ell = (forest + dt).clamp(0, base.graph().edge_count() as i64) as usize;
            out.push(base.with_budgets(ell, base.budget().clone()));
        }
    }
    out
}

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    let instances = suite_instances(None, 520);
    assert!(instances.len() >= 500);
    let mut stars_checked = 0usize;
    let mut unit_checked = 0usize;
    for ins in &instances {
        let reference = solve_subset_enumeration(ins, Mode::Decide, 24, &opts()).unwrap();
        let branch = solve_branching(ins, &opts()).unwrap();
        assert_eq!(reference.is_yes(), branch.is_yes(), "branching disagrees");
        if ins.graph().unit_weights() {
            unit_checked += 1;
            let k = ins.graph().edge_count() - ins.ell();
            let deletion = solve_by_deletion(ins, k, 24, &opts()).unwrap();
            assert_eq!(reference.is_yes(), deletion.is_yes(), "deletion disagrees");
        }
        if ins.property() == Property::Stars {
            stars_checked += 1;
            let xp = solve_stars_fitting(ins, Mode::Decide, &opts()).unwrap();
            assert_eq!(reference.is_yes(), xp.is_yes(), "stars-xp disagrees");
            if ins.graph().unit_weights() {
                let twins = solve_stars_twins(ins, &opts()).unwrap();
                assert_eq!(
                    reference.is_yes(),
                    twins.is_yes(),
                    "twin branching disagrees"
                );
            }
            // optimize-mode weight agreement on feasible instances
            if reference.is_yes() {
                let best = solve_subset_enumeration(ins, Mode::Optimize, 24, &opts()).unwrap();
                let by_xp = solve_stars_fitting(ins, Mode::Optimize, &opts()).unwrap();
                assert_eq!(
                    best.optimum.as_ref().unwrap().1,
                    by_xp.optimum.as_ref().unwrap().1,
                    "stars-xp optimize weight differs"
                );
            }
        }
    }
    // Larger, unconstrained ell for the solvers that do not depend on t.
    let mut extra = 0usize;
    for seed in 10_000..10_400u64 {
        let params = RandomParams {
            n: 4 + (seed % 4) as usize,
            edge_prob: 0.4 + 0.14 * ((seed % 4) as f64),
            community_count: 1 + (seed % 5) as usize,
            size_range: (1, 5),
            weight_range: if seed % 2 == 0 { (1, 1) } else { (1, 3) },
            property: if seed % 2 == 0 {
                Property::Stars
            } else {
                Property::Connectivity
            },
        };
        let Ok(ins) = reductions::random_instance(&params, seed) else {
            continue;
        };
        if ins.relevant_edges().len() > 18 {
            continue;
        }
        extra += 1;
        let reference = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
        let branch = solve_branching(&ins, &opts()).unwrap();
        assert_eq!(reference.is_yes(), branch.is_yes());
        if ins.graph().unit_weights() {
            let k = ins.graph().edge_count() - ins.ell();
            let deletion = solve_by_deletion(&ins, k, 24, &opts()).unwrap();
            assert_eq!(reference.is_yes(), deletion.is_yes());
            if ins.property() == Property::Stars {
                let twins = solve_stars_twins(&ins, &opts()).unwrap();
                assert_eq!(reference.is_yes(), twins.is_yes());
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "criterion 1 took {elapsed:?}, target is < 60 s"
    );
    println!(
        "[PASS] criterion 1: {} suite + {extra} free-budget instances agree with the oracle \
         ({stars_checked} stars, {unit_checked} unit-weight) in {elapsed:?}",
        instances.len()
    );
}

#[test]
fn criterion_2_tree_support_optimality() {
    let mut feasible = 0usize;
    let mut seed = 50_000u64;
    while feasible < 200 {
        seed += 1;
        let params = RandomParams {
            n: 4 + (seed % 4) as usize,
            edge_prob: 0.45 + 0.12 * ((seed % 4) as f64),
            community_count: 1 + (seed % 5) as usize,
            size_range: (1, 5),
            weight_range: (1, 3),
            property: Property::Connectivity,
        };
        let Ok(base) = reductions::random_instance(&params, seed) else {
            continue;
        };
        if base.relevant_edges().len() > 18 {
            continue;
        }
        let comps = base.hypergraph_components();
        let covered = base.graph().vertex_count() - comps.uncovered.len();
        let ell = covered - comps.count();
        let ins = base.with_budgets(ell, Budget::Infinite);
        assert_eq!(ins.feedback_edge_parameter(), 0);
        let reference = solve_subset_enumeration(&ins, Mode::Optimize, 24, &opts()).unwrap();
        let forest = solve_forest_support(&ins).unwrap();
        assert_eq!(reference.is_yes(), forest.is_yes(), "feasibility differs");
        if !reference.is_yes() {
            continue;
        }
        feasible += 1;
        let (_, oracle_weight) = reference.optimum.unwrap();
        let (_, forest_weight) = forest.optimum.unwrap();
        assert_eq!(
            oracle_weight, forest_weight,
            "tree-support weight differs from the oracle minimum (seed {seed})"
        );
    }
    println!("[PASS] criterion 2: tree-support weight equals the oracle minimum on {feasible} feasible t=0 instances");
}

fn size_bounded_subsets(items: &[usize], max_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=max_size.min(items.len()) {
        let mut cur = Vec::new();
        fn go(
            items: &[usize],
            k: usize,
            at: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            if at >= items.len() || items.len() - at < k - cur.len() {
                return;
            }
            cur.push(items[at]);
            go(items, k, at + 1, cur, out);
            cur.pop();
            go(items, k, at + 1, cur, out);
        }
        go(items, k, 0, &mut cur, &mut out);
    }
    out
}

#[test]
fn criterion_3_fitting_soundness() {
    let mut pairs = 0u64;
    let mut instances = 0u64;
    for seed in 0..140u64 {
        let params = RandomParams {
            n: 4 + (seed % 3) as usize, // 4..=6
            edge_prob: 0.45 + 0.13 * ((seed % 4) as f64),
            community_count: 1 + (seed % 4) as usize, // 1..=4
            size_range: (2, 4),
            weight_range: if seed % 2 == 0 { (1, 1) } else { (1, 3) },
            property: Property::Stars,
        };
        let Ok(base) = reductions::random_instance(&params, 70_000 + seed) else {
            continue;
        };
        let comps = base.hypergraph_components();
        let covered = base.graph().vertex_count() - comps.uncovered.len();
        let forest = (covered as i64 - comps.count() as i64).max(0) as usize;
        let ell = (forest + (seed % 3) as usize).min(base.graph().edge_count());
        let ins = base.with_budgets(ell, base.budget().clone());
        instances += 1;
        let g = ins.graph();
        let m = g.edge_count();

        // Brute force: all minimum-weight valid solutions.
        let mut minima: Vec<BTreeSet<usize>> = Vec::new();
        let mut best_weight: Option<Rational> = None;
        for mask in 0u32..(1u32 << m) {
            if (mask.count_ones() as usize) > ins.ell() {
                continue;
            }
            let edges: BTreeSet<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let report = verify_solution(&ins, &edges);
            if !report.valid {
                continue;
            }
            match &best_weight {
                Some(bw) if *bw < report.total_weight => {}
                Some(bw) if *bw == report.total_weight => minima.push(edges),
                _ => {
                    best_weight = Some(report.total_weight.clone());
                    minima.clear();
                    minima.push(edges);
                }
            }
        }
        let cycles: Vec<BTreeSet<usize>> =
            minima.iter().map(|e| local_cycle_edges(&ins, e)).collect();

        let ctx = FittingContext::new(&ins);
        for ids in size_bounded_subsets(ctx.candidates(), 4) {
            pairs += 1;
            let local = LocalEdgeSet::new(&ins, ids.clone());
            let fitting_minima: Vec<&BTreeSet<usize>> = minima
                .iter()
                .zip(&cycles)
                .filter(|(sol, cyc)| {
                    ids.iter().all(|id| sol.contains(id)) && cyc.iter().all(|id| ids.contains(id))
                })
                .map(|(sol, _)| sol)
                .collect();

            // Property 1: after the fixpoint, every center of every
            // minimum fitting solution survives in fit(C).
            if let Some(fit) = init_fit(&ctx) {
                let (groups, group_of) = community_partition(&ctx, &local);
                let mut state = FitState {
                    fit,
                    groups,
                    group_of,
                };
                exhaust_rules(&mut state, &ctx, &local);
                for sol in &fitting_minima {
                    for (i, c) in ins.communities().iter().enumerate() {
                        for v in universal_vertices(g, sol, c) {
                            assert!(
                                state.fit[i].contains(&v),
                                "fit({i}) lost center {v} of a minimum fitting solution \
                                 (seed {seed}, E* {ids:?})"
                            );
                        }
                    }
                }
            }

            match solve_fitting(&ctx, &local) {
                FittingOutcome::Fitted(sol) => {
                    let report = verify_solution(&ins, sol.edges());
                    assert!(report.valid, "fitted output fails verification");
                    assert!(
                        ids.iter().all(|id| sol.edges().contains(id)),
                        "fitted output does not contain E*"
                    );
                    if !fitting_minima.is_empty() {
                        assert_eq!(
                            &report.total_weight,
                            best_weight.as_ref().unwrap(),
                            "fitted weight is not the minimum (seed {seed}, E* {ids:?})"
                        );
                    }
                }
                FittingOutcome::NoFitting | FittingOutcome::TrivialNo => {
                    assert!(
                        fitting_minima.is_empty(),
                        "solver missed {} fitting minima (seed {seed}, E* {ids:?})",
                        fitting_minima.len()
                    );
                }
            }
        }
    }
    println!(
        "[PASS] criterion 3: fitting rules sound on {pairs} (instance, E*) pairs over {instances} instances"
    );
}

#[test]
fn criterion_4_local_cycle_edges_bounded_by_4t() {
    let instances = suite_instances(Some(Property::Stars), 260);
    let mut yes_checked = 0usize;
    for ins in &instances {
        let best = solve_subset_enumeration(ins, Mode::Optimize, 24, &opts()).unwrap();
        let Some(solution) = best.solution() else {
            continue;
        };
        let t = ins.feedback_edge_parameter();
        assert!(t >= 0, "feasible instance with negative t");
        let union = local_cycle_edges(ins, solution.edges());
        assert!(
            union.len() as i64 <= 4 * t,
            "local-cycle union has {} edges, bound is 4t = {}",
            union.len(),
            4 * t
        );
        yes_checked += 1;
    }
    assert!(yes_checked >= 50);
    println!(
        "[PASS] criterion 4: local-cycle edge unions within 4t on {yes_checked} optimal solutions"
    );
}

/// All labeled graphs on n vertices, as unit-weight graphs.
fn labeled_graphs(n: usize) -> Vec<WeightedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (u, v, Rational::one()))
                .collect();
            WeightedGraph::new(n, edges).unwrap()
        })
        .collect()
}

fn is_connected(g: &WeightedGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut uf = nws_core::dsu::UnionFind::new(n);
    for e in g.edges() {
        uf.union(e.u, e.v);
    }
    uf.component_count() == 1
}

#[test]
fn criterion_5_hamiltonian_cycle_equivalence() {
    let mut checked = 0usize;
    for n in 3..=5 {
        for g in labeled_graphs(n) {
            if !is_connected(&g) {
                continue;
            }
            let ins = reductions::from_hamiltonian_cycle(&g).unwrap();
            let solved = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
            assert_eq!(
                brute::has_hamiltonian_cycle(&g),
                solved.is_yes(),
                "hamiltonian mismatch on a graph with {n} vertices"
            );
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 5a: hamiltonian-cycle reduction exact on {checked} connected graphs"
    );
}

#[test]
fn criterion_5_hitting_set_equivalence() {
    let mut checked = 0usize;
    for universe in 2..=3usize {
        let subsets: Vec<BTreeSet<usize>> = (1u32..1 << universe)
            .map(|mask| (0..universe).filter(|&e| mask >> e & 1 == 1).collect())
            .collect();
        for family_mask in 0u32..1 << subsets.len() {
            if family_mask.count_ones() > 3 {
                continue;
            }
            let family: Vec<BTreeSet<usize>> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| family_mask >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            for k in 0..=3usize {
                let hs = HittingSetInstance::new(universe, family.clone(), k).unwrap();
                let ins = reductions::from_hitting_set(&hs).unwrap();
                let solved = solve_branching(&ins, &opts()).unwrap();
                assert_eq!(
                    brute::has_hitting_set(&hs),
                    solved.is_yes(),
                    "hitting set mismatch: |U|={universe} family={family:?} k={k}"
                );
                checked += 1;
            }
        }
    }
    println!("[PASS] criterion 5b: hitting-set reduction exact on {checked} instances");
}

/// Every 3-literal clause over the given variables, as sorted multisets.
fn all_clauses(num_vars: usize) -> Vec<[i32; 3]> {
    let mut literals = Vec::new();
    for v in 1..=num_vars as i32 {
        literals.push(v);
        literals.push(-v);
    }
    let mut out = Vec::new();
    for (i, &a) in literals.iter().enumerate() {
        for (j, &b) in literals.iter().enumerate().skip(i) {
            for &c in literals.iter().skip(j) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[test]
fn criterion_5_three_sat_equivalence() {
    let mut checked = 0usize;
    for num_vars in 1..=2usize {
        let clauses = all_clauses(num_vars);
        let mut formulas: Vec<Vec<[i32; 3]>> = clauses.iter().map(|&c| vec![c]).collect();
        for (i, &a) in clauses.iter().enumerate() {
            for &b in clauses.iter().skip(i) {
                formulas.push(vec![a, b]);
            }
        }
        for clauses in formulas {
            let formula = CnfFormula::new(num_vars, clauses).unwrap();
            let expected = brute::satisfiable(&formula);

            let stars = reductions::from_3sat_stars(&formula).unwrap();
            let solved = solve_branching(&stars.instance, &opts()).unwrap();
            assert_eq!(expected, solved.is_yes(), "stars mismatch on {formula:?}");
            if let Some(solution) = solved.solution() {
                let assignment = stars.decode_assignment(solution.edges());
                assert!(
                    formula.is_satisfied_by(&assignment),
                    "decoded assignment does not satisfy {formula:?}"
                );
                // the clique filler edges (inside U, or between U and Y)
                // carry no community and never enter a solution
                let relevant: BTreeSet<usize> =
                    stars.instance.relevant_edges().into_iter().collect();
                assert!(solution.edges().iter().all(|id| relevant.contains(id)));
            }

            let conn = reductions::from_3sat_connectivity(&formula).unwrap();
            let solved = solve_branching(&conn.instance, &opts()).unwrap();
            assert_eq!(
                expected,
                solved.is_yes(),
                "connectivity mismatch on {formula:?}"
            );
            checked += 1;
        }
    }
    println!("[PASS] criterion 5c: 3-SAT reductions exact on {checked} formulas (both properties)");
}

#[test]
fn criterion_5_independent_set_equivalence() {
    let mut checked = 0usize;
    for n in 1..=4usize {
        for g in labeled_graphs(n) {
            for k in 0..=n {
                let ins = reductions::from_vertex_cover_clique(&g, k).unwrap();
                let solved = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
                assert_eq!(
                    brute::has_independent_set(&g, k),
                    solved.is_yes(),
                    "independent set mismatch: n={n} k={k}"
                );
                checked += 1;
            }
        }
    }
    println!("[PASS] criterion 5d: independent-set reduction exact on {checked} instances");
}

#[test]
fn criterion_5_multicolored_clique_spot_checks() {
    // K3 with three singleton colors has a multicolored triangle.
    let k3 = WeightedGraph::complete_unit(3);
    let colors3 = vec![vec![0], vec![1], vec![2]];
    assert!(brute::has_multicolored_clique(&k3, &colors3));
    let red = reductions::from_multicolored_clique(&k3, &colors3, Some(2)).unwrap();
    let solved = solve_subset_enumeration(&red.instance, Mode::Decide, 24, &opts()).unwrap();
    assert!(
        solved.is_yes(),
        "K3 multicolored clique instance must be yes"
    );

    // C4 with alternating colors has a multicolored edge (kappa = 2).
    let c4 = WeightedGraph::new(
        4,
        vec![
            (0, 1, Rational::one()),
            (1, 2, Rational::one()),
            (2, 3, Rational::one()),
            (0, 3, Rational::one()),
        ],
    )
    .unwrap();
    let colors = vec![vec![0, 2], vec![1, 3]];
    assert!(brute::has_multicolored_clique(&c4, &colors));
    let red = reductions::from_multicolored_clique(&c4, &colors, Some(2)).unwrap();
    let solved = solve_subset_enumeration(&red.instance, Mode::Decide, 24, &opts()).unwrap();
    assert!(solved.is_yes(), "C4 multicolored edge instance must be yes");

    // A perfect matching colored along its edges has no multicolored
    // 2-clique. The no direction needs the guaranteed padding
    // (> kappa * (n + r)); center branching handles the larger instance.
    let matching =
        WeightedGraph::new(4, vec![(0, 1, Rational::one()), (2, 3, Rational::one())]).unwrap();
    let colors = vec![vec![0, 1], vec![2, 3]];
    assert!(!brute::has_multicolored_clique(&matching, &colors));
    let red = reductions::from_multicolored_clique(&matching, &colors, Some(11)).unwrap();
    assert!(red.guaranteed);
    let solved = solve_branching(&red.instance, &opts()).unwrap();
    assert!(!solved.is_yes(), "matching instance must be no");

    // Below the guaranteed padding the equivalence genuinely breaks: the
    // same source becomes solvable, which is why the flag exists.
    let red = reductions::from_multicolored_clique(&matching, &colors, Some(2)).unwrap();
    assert!(!red.guaranteed);
    let solved = solve_subset_enumeration(&red.instance, Mode::Decide, 24, &opts()).unwrap();
    assert!(solved.is_yes());

    println!(
        "[PASS] criterion 5e: multicolored-clique reduction matches enumeration on spot checks"
    );
}

#[test]
fn criterion_6_structural_assertions() {
    // 3-SAT stars: clique, community sizes <= 4, exact census.
    let formula = CnfFormula::new(3, vec![[1, -2, 3], [-1, 2, 2], [3, 3, 3], [-3, -1, 2]]).unwrap();
    let red = reductions::from_3sat_stars(&formula).unwrap();
    let ins = &red.instance;
    let n = ins.graph().vertex_count();
    assert_eq!(
        ins.graph().edge_count(),
        n * (n - 1) / 2,
        "graph must be a clique"
    );
    assert!(ins.communities().iter().all(|c| c.len() <= 4));
    let (p, z) = (2 * red.layout.nx, 3 * red.layout.nc);
    let fixed = p * (p - 1) / 2 + z * (z - 1) / 2 + red.layout.nx * z + p * red.layout.nc + p * z;
    assert_eq!(
        ins.community_count(),
        fixed + formula.num_vars + 3 * formula.clauses.len() + 3 * formula.clauses.len()
    );
    assert_eq!(
        ins.ell(),
        formula.num_vars + 2 * formula.clauses.len() + fixed
    );

    // Hamiltonian reduction: t = 1 exactly, on every connected source.
    let mut checked = 0usize;
    for n in 3..=5 {
        for g in labeled_graphs(n) {
            if !is_connected(&g) {
                continue;
            }
            let ins = reductions::from_hamiltonian_cycle(&g).unwrap();
            assert_eq!(ins.feedback_edge_parameter(), 1);
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 6: 3-SAT gadget census exact; t = 1 on {checked} hamiltonian reductions"
    );
}

#[test]
fn criterion_7_stars_xp_performance() {
    // n = 30, c = 20, t = 1, single-threaded decide in under 10 seconds.
    let params = RandomParams {
        n: 30,
        edge_prob: 0.6,
        community_count: 20,
        size_range: (3, 6),
        weight_range: (1, 1),
        property: Property::Stars,
    };
    let base = reductions::random_instance(&params, 90_001).unwrap();
    let comps = base.hypergraph_components();
    let covered = base.graph().vertex_count() - comps.uncovered.len();
    let ell = covered - comps.count() + 1;
    let ins = base.with_budgets(ell, Budget::Infinite);
    assert_eq!(ins.feedback_edge_parameter(), 1);
    let started = Instant::now();
    let result = solve_stars_fitting(&ins, Mode::Decide, &opts()).unwrap();
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "stars-xp took {elapsed:?} on the n=30 instance"
    );
    println!(
        "[PASS] criterion 7: stars-xp decided the n=30, c=20, t=1 instance ({}) in {elapsed:?}",
        if result.is_yes() { "yes" } else { "no" }
    );
}
