//! Stars solver driven by local-cycle edge sets.
//!
//! Cycles in a stars solution are either global (forced by cycles of the
//! community hypergraph) or local (contained in the union of two
//! communities' spanning stars; always of length 3 or 4). For a minimum
//! solution the union of all local-cycle edges has size at most 4t, so
//! enumerating candidate local edge sets `E*` of that size and solving the
//! remaining center-assignment problem in polynomial time decides the
//! instance.
//!
//! The polynomial part keeps, for every community, a set `fit(C)` of
//! vertices still eligible as its center in some solution that is fitting
//! for `E*` (contains `E*`, and all its local cycles use only `E*` edges).
//! Five pruning rules shrink the fit sets to a fixpoint; afterwards a
//! greedy minimum-cost center per community group either yields a solution
//! or proves that no fitting solution exists.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::dsu::UnionFind;
use crate::error::SolveError;
use crate::graph::{universal_in_graph, Community, EdgeId};
use crate::instance::{Instance, Property};
use crate::oracle::{Mode, OracleResult};
use crate::rational::Rational;
use crate::solution::Solution;
use crate::stop::SearchOptions;

const STOP_POLL_SETS: usize = 1024;
const PARALLEL_BATCH: usize = 2048;

/// A candidate set of local-cycle edges, with O(1) pair membership.
#[derive(Clone, Debug)]
pub struct LocalEdgeSet {
    ids: Vec<EdgeId>,
    pairs: HashSet<(usize, usize)>,
}

impl LocalEdgeSet {
    pub fn new(instance: &Instance, mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        let pairs = ids
            .iter()
            .map(|&id| {
                let e = instance.graph().edge(id);
                (e.u, e.v)
            })
            .collect();
        LocalEdgeSet { ids, pairs }
    }

    pub fn empty() -> Self {
        LocalEdgeSet {
            ids: Vec::new(),
            pairs: HashSet::new(),
        }
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.pairs.contains(&key)
    }
}

/// True iff `v` is joined by a local edge to every vertex of `set` other
/// than itself.
pub fn is_locally_universal(v: usize, set: &[usize], local: &LocalEdgeSet) -> bool {
    set.iter().all(|&w| w == v || local.contains_pair(v, w))
}

/// Per-instance data reused across all candidate local edge sets.
pub struct FittingContext<'a> {
    instance: &'a Instance,
    /// univ_G(C) per community.
    univ: Vec<Vec<usize>>,
    /// Pairwise community intersections (only those of size >= 2 matter;
    /// smaller ones are stored empty).
    inter: Vec<Vec<Vec<usize>>>,
    /// Edges with both endpoints inside at least one community; the only
    /// edges a local cycle can use.
    candidates: Vec<EdgeId>,
}

impl<'a> FittingContext<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        let comms = instance.communities();
        let univ = comms
            .iter()
            .map(|c| universal_in_graph(instance.graph(), c))
            .collect();
        let inter = comms
            .iter()
            .map(|ci| {
                comms
                    .iter()
                    .map(|cj| {
                        let shared = ci.intersection(cj);
                        if shared.len() >= 2 {
                            shared
                        } else {
                            Vec::new()
                        }
                    })
                    .collect()
            })
            .collect();
        FittingContext {
            instance,
            univ,
            inter,
            candidates: instance.relevant_edges(),
        }
    }

    pub fn candidates(&self) -> &[EdgeId] {
        &self.candidates
    }

    pub fn trivially_unsolvable(&self) -> bool {
        self.univ.iter().any(Vec::is_empty)
    }

    fn intersection(&self, i: usize, j: usize) -> &[usize] {
        &self.inter[i][j]
    }
}

/// Fit sets plus the community partition for one candidate `E*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitState {
    /// Per community: vertices still eligible as its center.
    pub fit: Vec<BTreeSet<usize>>,
    /// Groups of community indices that must share one center.
    pub groups: Vec<Vec<usize>>,
    /// Group index per community.
    pub group_of: Vec<usize>,
}

/// Connected components of the auxiliary community graph: two communities
/// are adjacent iff they share at least 3 vertices and no vertex of their
/// union is locally universal for the intersection.
pub fn community_partition(
    ctx: &FittingContext,
    local: &LocalEdgeSet,
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let c = ctx.instance.community_count();
    let mut uf = UnionFind::new(c);
    for i in 0..c {
        for j in i + 1..c {
            let shared = ctx.intersection(i, j);
            if shared.len() < 3 {
                continue;
            }
            let has_local_universal = ctx
                .instance
                .community(i)
                .iter()
                .chain(ctx.instance.community(j).iter())
                .any(|v| is_locally_universal(v, shared, local));
            if !has_local_universal {
                uf.union(i, j);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; c];
    let mut group_of = vec![0; c];
    for (i, g) in group_of.iter_mut().enumerate() {
        let r = uf.find(i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        *g = slot[r];
        groups[slot[r]].push(i);
    }
    (groups, group_of)
}

/// Initial fit sets: univ_G(C) per community. `None` when some community
/// has no universal vertex in the ground graph at all, which makes the
/// whole instance a trivial no.
pub fn init_fit(ctx: &FittingContext) -> Option<Vec<BTreeSet<usize>>> {
    let mut fit = Vec::with_capacity(ctx.univ.len());
    for u in &ctx.univ {
        if u.is_empty() {
            return None;
        }
        fit.push(u.iter().copied().collect());
    }
    Some(fit)
}

/// Rule for communities containing a local edge {y, z}: a center must be
/// locally universal for {y, z}, otherwise choosing it closes a cycle
/// through y and z that uses a non-local edge. One pass is exhaustive
/// because the condition does not depend on the fit sets.
fn apply_local_edge_rule(state: &mut FitState, ctx: &FittingContext, local: &LocalEdgeSet) -> bool {
    let mut changed = false;
    for (i, c) in ctx.instance.communities().iter().enumerate() {
        for &id in local.ids() {
            let e = ctx.instance.graph().edge(id);
            if !(c.contains(e.u) && c.contains(e.v)) {
                continue;
            }
            let before = state.fit[i].len();
            state.fit[i].retain(|&v| {
                (v == e.u || local.contains_pair(v, e.u))
                    && (v == e.v || local.contains_pair(v, e.v))
            });
            changed |= state.fit[i].len() != before;
        }
    }
    changed
}

/// Rule for partition groups: all members of a group share one center, so
/// each fit set shrinks to the intersection over its group.
fn apply_group_intersection_rule(state: &mut FitState) -> bool {
    let mut changed = false;
    for group in &state.groups {
        if group.len() < 2 {
            continue;
        }
        let mut shared = state.fit[group[0]].clone();
        for &i in &group[1..] {
            shared.retain(|v| state.fit[i].contains(v));
        }
        for &i in group {
            if state.fit[i] != shared {
                state.fit[i] = shared.clone();
                changed = true;
            }
        }
    }
    changed
}

/// Rule for communities without any local edge: if C overlaps D in at
/// least two vertices, a center of C outside C ∩ D would close a local
/// cycle with non-local edges; so fit(C) shrinks into the intersection.
fn apply_no_local_edge_rule(
    state: &mut FitState,
    ctx: &FittingContext,
    local: &LocalEdgeSet,
) -> bool {
    let mut changed = false;
    let c = ctx.instance.community_count();
    for i in 0..c {
        let ci = ctx.instance.community(i);
        let has_local_edge = local.ids().iter().any(|&id| {
            let e = ctx.instance.graph().edge(id);
            ci.contains(e.u) && ci.contains(e.v)
        });
        if has_local_edge {
            continue;
        }
        for j in 0..c {
            if i == j {
                continue;
            }
            let shared = ctx.intersection(i, j);
            if shared.len() < 2 {
                continue;
            }
            let before = state.fit[i].len();
            state.fit[i].retain(|v| shared.contains(v));
            changed |= state.fit[i].len() != before;
        }
    }
    changed
}

/// Rules for a community C with a local edge against a community D from a
/// different group. For a size-2 overlap {x, y} that is not a local edge:
/// if fit(C) avoids both x and y then neither may center D, and if fit(C)
/// meets exactly one of them then that vertex is forced as C's center.
/// For overlaps of size >= 3, every non-local pair inside the overlap is
/// barred from centering D. Both rules presume the local-edge rule has
/// been exhausted.
fn apply_cross_group_rules(
    state: &mut FitState,
    ctx: &FittingContext,
    local: &LocalEdgeSet,
) -> bool {
    let mut changed = false;
    let c = ctx.instance.community_count();
    for i in 0..c {
        let ci = ctx.instance.community(i);
        let has_local_edge = local.ids().iter().any(|&id| {
            let e = ctx.instance.graph().edge(id);
            ci.contains(e.u) && ci.contains(e.v)
        });
        if !has_local_edge {
            continue;
        }
        for j in 0..c {
            if i == j || state.group_of[i] == state.group_of[j] {
                continue;
            }
            let shared = ctx.intersection(i, j);
            match shared.len() {
                2 => {
                    let (x, y) = (shared[0], shared[1]);
                    if local.contains_pair(x, y) {
                        continue;
                    }
                    let in_fit: Vec<usize> = shared
                        .iter()
                        .copied()
                        .filter(|v| state.fit[i].contains(v))
                        .collect();
                    match in_fit.len() {
                        0 => {
                            changed |= state.fit[j].remove(&x);
                            changed |= state.fit[j].remove(&y);
                        }
                        1 if state.fit[i].len() > 1 => {
                            state.fit[i] = BTreeSet::from([in_fit[0]]);
                            changed = true;
                        }
                        _ => {}
                    }
                }
                len if len >= 3 => {
                    for (a, &x) in shared.iter().enumerate() {
                        for &y in &shared[a + 1..] {
                            if !local.contains_pair(x, y) {
                                changed |= state.fit[j].remove(&x);
                                changed |= state.fit[j].remove(&y);
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    changed
}

/// Runs all pruning rules to a fixpoint. Every rule only shrinks fit sets,
/// so the fixpoint is order-independent; each round exhausts the
/// local-edge rule before the cross-group rules, which are only sound
/// after it.
pub fn exhaust_rules(state: &mut FitState, ctx: &FittingContext, local: &LocalEdgeSet) {
    loop {
        let mut changed = apply_local_edge_rule(state, ctx, local);
        changed |= apply_group_intersection_rule(state);
        changed |= apply_no_local_edge_rule(state, ctx, local);
        changed |= apply_cross_group_rules(state, ctx, local);
        if !changed {
            break;
        }
    }
}

/// Outcome of the polynomial subproblem for one candidate `E*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FittingOutcome {
    /// A solution within both budgets that contains `E*`.
    Fitted(Solution),
    /// No minimum solution is fitting for this `E*`.
    NoFitting,
    /// Some community has no universal vertex in G; the instance itself is
    /// a no-instance, independent of `E*`.
    TrivialNo,
}

/// Decides whether some solution within the budgets is fitting for
/// `local`: prunes the fit sets to a fixpoint, then greedily picks for
/// every community group the center whose missing star edges are
/// cheapest, seeding the solution with all of `E*`.
pub fn solve_fitting(ctx: &FittingContext, local: &LocalEdgeSet) -> FittingOutcome {
    let instance = ctx.instance;
    let Some(fit) = init_fit(ctx) else {
        return FittingOutcome::TrivialNo;
    };
    let (groups, group_of) = community_partition(ctx, local);
    let mut state = FitState {
        fit,
        groups,
        group_of,
    };
    exhaust_rules(&mut state, ctx, local);
    if state.fit.iter().any(BTreeSet::is_empty) {
        return FittingOutcome::NoFitting;
    }

    let g = instance.graph();
    let mut edges: BTreeSet<EdgeId> = local.ids().iter().copied().collect();
    for group in &state.groups {
        // A size-2 community forces its single edge; both endpoints are
        // centers, so no argmin is needed. Such communities always form
        // singleton groups (a size-3 overlap is impossible).
        if group.len() == 1 && instance.community(group[0]).len() == 2 {
            let c = instance.community(group[0]);
            let (u, v) = (c.members()[0], c.members()[1]);
            edges.insert(g.edge_id(u, v).expect("size-2 community has its edge"));
            continue;
        }
        let rep = group[0];
        let covered: BTreeSet<usize> = group
            .iter()
            .flat_map(|&i| instance.community(i).iter())
            .collect();
        let mut best: Option<(Rational, usize)> = None;
        for &u in &state.fit[rep] {
            let mut cost = Rational::zero();
            for &v in &covered {
                if v == u || local.contains_pair(u, v) {
                    continue;
                }
                let id = g
                    .edge_id(u, v)
                    .expect("fit vertices are universal for the whole group");
                cost += &g.edge(id).weight;
            }
            if best.as_ref().is_none_or(|(bc, _)| cost < *bc) {
                best = Some((cost, u));
            }
        }
        let (_, center) = best.expect("nonempty fit set");
        for &v in &covered {
            if v != center {
                edges.insert(g.edge_id(center, v).expect("center is universal"));
            }
        }
    }

    let weight = g.total_weight(edges.iter());
    if edges.len() <= instance.ell() && instance.budget().allows(&weight) {
        let solution = Solution::build(instance, edges).expect("chosen centers satisfy");
        FittingOutcome::Fitted(solution)
    } else {
        FittingOutcome::NoFitting
    }
}

/// All candidate local edge sets: the empty set first, then subsets of the
/// community-internal edges of sizes 1..=4t in increasing size, each size
/// in lexicographic order.
pub fn enumerate_local_sets<'a>(
    instance: &'a Instance,
    t: i64,
) -> impl Iterator<Item = Vec<EdgeId>> + 'a {
    use itertools::Itertools;
    let candidates = instance.relevant_edges();
    let max_size = if t <= 0 {
        0
    } else {
        candidates.len().min(4 * t as usize)
    };
    (0..=max_size).flat_map(move |k| candidates.clone().into_iter().combinations(k))
}

/// A union of local cycles has every edge on a cycle of length 3 or 4
/// inside the set itself; anything else cannot be the local edge set of a
/// solution, and its useful subsets are enumerated earlier anyway.
pub fn is_cycle_closed(instance: &Instance, ids: &[EdgeId]) -> bool {
    if ids.is_empty() {
        return true;
    }
    if ids.len() < 3 {
        return false;
    }
    let ends: Vec<(usize, usize)> = ids
        .iter()
        .map(|&id| {
            let e = instance.graph().edge(id);
            (e.u, e.v)
        })
        .collect();
    let neighbors = |x: usize| -> Vec<usize> {
        ends.iter()
            .filter_map(|&(u, v)| {
                if u == x {
                    Some(v)
                } else if v == x {
                    Some(u)
                } else {
                    None
                }
            })
            .collect()
    };
    let has_pair = |a: usize, b: usize| ends.iter().any(|&(u, v)| (u, v) == (a.min(b), a.max(b)));
    ends.iter().all(|&(u, v)| {
        let nu = neighbors(u);
        let nv = neighbors(v);
        // triangle through {u, v}
        if nu.iter().any(|&w| w != v && nv.contains(&w)) {
            return true;
        }
        // 4-cycle u-v-a-b-u
        nv.iter()
            .any(|&a| a != u && nu.iter().any(|&b| b != v && b != a && has_pair(a, b)))
    })
}

/// The stars solver: answers No for t < 0, otherwise scans candidate local
/// edge sets in enumeration order. Decide mode returns the first fit;
/// optimize mode keeps the best solution under (weight, edge count,
/// lexicographic edge list).
pub fn solve_stars_fitting(
    instance: &Instance,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    solve_stars_fitting_with_t(instance, mode, instance.feedback_edge_parameter(), opts)
}

/// Same solver with an explicit t, for experimentation with the
/// enumeration bound.
pub fn solve_stars_fitting_with_t(
    instance: &Instance,
    mode: Mode,
    t: i64,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    if instance.property() != Property::Stars {
        return Err(SolveError::PropertyMismatch { expected: "stars" });
    }
    if t < 0 {
        return Ok(OracleResult::no());
    }
    let ctx = FittingContext::new(instance);
    if ctx.trivially_unsolvable() {
        return Ok(OracleResult::no());
    }
    if opts.jobs > 1 {
        return solve_stars_fitting_parallel(instance, mode, opts, &ctx, t);
    }
    let mut best: Option<Solution> = None;
    for (count, ids) in enumerate_local_sets(instance, t).enumerate() {
        if count.is_multiple_of(STOP_POLL_SETS) {
            opts.stop.check()?;
        }
        if !is_cycle_closed(instance, &ids) {
            continue;
        }
        let local = LocalEdgeSet::new(instance, ids);
        if let FittingOutcome::Fitted(solution) = solve_fitting(&ctx, &local) {
            match mode {
                Mode::Decide => return Ok(OracleResult::yes(solution)),
                Mode::Optimize => merge_best(instance, &mut best, solution),
            }
        }
    }
    Ok(match best {
        Some(solution) => OracleResult::yes_optimal(instance, solution),
        None => OracleResult::no(),
    })
}

fn solve_stars_fitting_parallel(
    instance: &Instance,
    mode: Mode,
    opts: &SearchOptions,
    ctx: &FittingContext,
    t: i64,
) -> Result<OracleResult, SolveError> {
    let mut best: Option<Solution> = None;
    let mut iter = enumerate_local_sets(instance, t)
        .filter(|ids| is_cycle_closed(instance, ids))
        .peekable();
    while iter.peek().is_some() {
        opts.stop.check()?;
        let batch: Vec<Vec<EdgeId>> = iter.by_ref().take(PARALLEL_BATCH).collect();
        // Batch results are merged in enumeration order, so the outcome
        // matches the sequential one for any worker count.
        let outcomes: Vec<Option<Solution>> = batch
            .into_par_iter()
            .map(|ids| {
                let local = LocalEdgeSet::new(instance, ids);
                match solve_fitting(ctx, &local) {
                    FittingOutcome::Fitted(s) => Some(s),
                    _ => None,
                }
            })
            .collect();
        for solution in outcomes.into_iter().flatten() {
            match mode {
                Mode::Decide => return Ok(OracleResult::yes(solution)),
                Mode::Optimize => merge_best(instance, &mut best, solution),
            }
        }
    }
    Ok(match best {
        Some(solution) => OracleResult::yes_optimal(instance, solution),
        None => OracleResult::no(),
    })
}

fn merge_best(instance: &Instance, best: &mut Option<Solution>, candidate: Solution) {
    let better = match best {
        None => true,
        Some(current) => {
            let ck = (
                candidate.total_weight(instance),
                candidate.edge_count(),
                candidate.edges().iter().copied().collect::<Vec<_>>(),
            );
            let bk = (
                current.total_weight(instance),
                current.edge_count(),
                current.edges().iter().copied().collect::<Vec<_>>(),
            );
            ck < bk
        }
    };
    if better {
        *best = Some(candidate);
    }
}

/// Do the two communities with the given centers close a cycle in the
/// union of their spanning stars? Such cycles have length 3 or 4 and force
/// |C1 ∩ C2| >= 2.
pub fn induces_local_cycle(c1: &Community, c2: &Community, center1: usize, center2: usize) -> bool {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (c, center) in [(c1, center1), (c2, center2)] {
        for v in c.iter() {
            if v != center {
                edges.insert((center.min(v), center.max(v)));
            }
        }
    }
    let vertices: BTreeSet<usize> = c1.iter().chain(c2.iter()).collect();
    let index: std::collections::HashMap<usize, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(vertices.len());
    for &(u, v) in &edges {
        if !uf.union(index[&u], index[&v]) {
            return true;
        }
    }
    false
}

/// All local cycles of a solution edge set: for every community pair and
/// every pair of solution centers, the length-3 and length-4 cycles of the
/// star union, as instance edge ids.
pub fn local_cycles(instance: &Instance, edges: &BTreeSet<EdgeId>) -> Vec<Vec<EdgeId>> {
    let g = instance.graph();
    let comms = instance.communities();
    let mut cycles: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    for i in 0..comms.len() {
        for j in i + 1..comms.len() {
            let centers_i = crate::graph::universal_vertices(g, edges, &comms[i]);
            let centers_j = crate::graph::universal_vertices(g, edges, &comms[j]);
            for &ci in &centers_i {
                for &cj in &centers_j {
                    let mut union: BTreeSet<(usize, usize)> = BTreeSet::new();
                    for (c, center) in [(&comms[i], ci), (&comms[j], cj)] {
                        for v in c.iter() {
                            if v != center {
                                union.insert((center.min(v), center.max(v)));
                            }
                        }
                    }
                    collect_small_cycles(g, &union, &mut cycles);
                }
            }
        }
    }
    cycles.into_iter().collect()
}

/// Union of all local-cycle edge sets of the solution; the lemma bounds
/// its size by 4t for minimum solutions.
pub fn local_cycle_edges(instance: &Instance, edges: &BTreeSet<EdgeId>) -> BTreeSet<EdgeId> {
    local_cycles(instance, edges)
        .into_iter()
        .flatten()
        .collect()
}

fn collect_small_cycles(
    g: &crate::graph::WeightedGraph,
    union: &BTreeSet<(usize, usize)>,
    out: &mut BTreeSet<Vec<EdgeId>>,
) {
    let vertices: BTreeSet<usize> = union.iter().flat_map(|&(u, v)| [u, v]).collect();
    let vs: Vec<usize> = vertices.into_iter().collect();
    let has = |a: usize, b: usize| union.contains(&(a.min(b), a.max(b)));
    let id_of = |a: usize, b: usize| g.edge_id(a, b).expect("star edge exists in G");
    for (ai, &a) in vs.iter().enumerate() {
        for (bi, &b) in vs.iter().enumerate().skip(ai + 1) {
            if !has(a, b) {
                continue;
            }
            // triangles a-b-c
            for &c in &vs[bi + 1..] {
                if has(a, c) && has(b, c) {
                    let mut cycle = vec![id_of(a, b), id_of(a, c), id_of(b, c)];
                    cycle.sort_unstable();
                    out.insert(cycle);
                }
            }
        }
    }
    // 4-cycles a-x-b-y with a < b and x < y, x and y common neighbors
    for (ai, &a) in vs.iter().enumerate() {
        for &b in &vs[ai + 1..] {
            let common: Vec<usize> = vs
                .iter()
                .copied()
                .filter(|&w| w != a && w != b && has(a, w) && has(b, w))
                .collect();
            for (xi, &x) in common.iter().enumerate() {
                for &y in &common[xi + 1..] {
                    let mut cycle = vec![id_of(a, x), id_of(x, b), id_of(b, y), id_of(y, a)];
                    cycle.sort_unstable();
                    out.insert(cycle);
                }
            }
        }
    }
}
