//! Exponential-time exact baselines. They double as ground-truth oracles
//! for the property tests of the cleverer solvers.
//!
//! All three searches restrict themselves to the relevant edges (edges with
//! both endpoints inside at least one community): an edge inside no
//! community contributes to no induced subgraph, so dropping it from any
//! solution preserves validity.

use std::collections::BTreeSet;

use num::BigInt;
use num::Integer;

use crate::error::SolveError;
use crate::graph::{is_community_connected, universal_in_graph, universal_vertices, EdgeId};
use crate::instance::{Instance, Property};
use crate::rational::{Budget, Rational};
use crate::solution::Solution;
use crate::stop::SearchOptions;

pub const DEFAULT_RELEVANT_EDGE_CAP: usize = 24;

const STOP_POLL_MASKS: u64 = 8192;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Decide,
    Optimize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    Yes(Solution),
    No,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    /// (edge count, total weight) of the returned solution, in optimize mode.
    pub optimum: Option<(usize, Rational)>,
}

impl OracleResult {
    pub fn no() -> Self {
        OracleResult {
            status: OracleStatus::No,
            optimum: None,
        }
    }

    pub fn yes(solution: Solution) -> Self {
        OracleResult {
            status: OracleStatus::Yes(solution),
            optimum: None,
        }
    }

    pub fn yes_optimal(instance: &Instance, solution: Solution) -> Self {
        let optimum = Some((solution.edge_count(), solution.total_weight(instance)));
        OracleResult {
            status: OracleStatus::Yes(solution),
            optimum,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self.status, OracleStatus::Yes(_))
    }

    pub fn solution(&self) -> Option<&Solution> {
        match &self.status {
            OracleStatus::Yes(s) => Some(s),
            OracleStatus::No => None,
        }
    }
}

/// Shared machinery for the mask-based enumerations: relevant edges indexed
/// by bit position, per-community satisfaction tests, and exact weights on a
/// common denominator when they fit machine integers.
struct EnumContext<'a> {
    instance: &'a Instance,
    relevant: Vec<EdgeId>,
    checks: Vec<CommunityCheck>,
    weights: Weights,
}

struct CommunityCheck {
    members: usize,
    /// Relevant edges inside the community: (bit, member index of u, of v).
    inner: Vec<(u128, u8, u8)>,
    inner_mask: u128,
    /// Stars: for each potential center, the mask of required star edges.
    center_masks: Vec<u128>,
}

enum Weights {
    /// Numerators over one common denominator, when they fit comfortably.
    Scaled {
        scaled: Vec<i128>,
        budget: Option<i128>,
    },
    Exact(Vec<Rational>),
}

impl<'a> EnumContext<'a> {
    fn new(instance: &'a Instance) -> Self {
        let relevant = instance.relevant_edges();
        assert!(relevant.len() <= 128, "mask enumeration needs <= 128 edges");
        let g = instance.graph();
        let checks = instance
            .communities()
            .iter()
            .map(|c| {
                let mut inner = Vec::new();
                let mut inner_mask = 0u128;
                for (pos, &id) in relevant.iter().enumerate() {
                    let e = g.edge(id);
                    if c.contains(e.u) && c.contains(e.v) {
                        let bit = 1u128 << pos;
                        let a = c.members().binary_search(&e.u).unwrap() as u8;
                        let b = c.members().binary_search(&e.v).unwrap() as u8;
                        inner.push((bit, a, b));
                        inner_mask |= bit;
                    }
                }
                let center_masks = if instance.property() == Property::Stars {
                    // Every star edge of a universal vertex lies inside C
                    // and exists in G, so it has a bit here.
                    universal_in_graph(g, c)
                        .into_iter()
                        .map(|center| {
                            let mut mask = 0u128;
                            for &(bit, a, b) in &inner {
                                let (u, v) = (c.members()[a as usize], c.members()[b as usize]);
                                if u == center || v == center {
                                    mask |= bit;
                                }
                            }
                            mask
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                CommunityCheck {
                    members: c.len(),
                    inner,
                    inner_mask,
                    center_masks,
                }
            })
            .collect();
        let weights = Weights::build(instance, &relevant);
        EnumContext {
            instance,
            relevant,
            checks,
            weights,
        }
    }

    fn satisfied(&self, mask: u128) -> bool {
        self.checks.iter().all(|c| c.satisfied(mask, self.instance))
    }

    /// Sum of selected weights fits the budget?
    fn within_budget(&self, mask: u128) -> bool {
        match &self.weights {
            Weights::Scaled { scaled, budget } => match budget {
                None => true,
                Some(b) => Self::scaled_sum(scaled, mask) <= *b,
            },
            Weights::Exact(ws) => {
                let total = Self::exact_sum(ws, mask);
                self.instance.budget().allows(&total)
            }
        }
    }

    fn scaled_sum(scaled: &[i128], mut mask: u128) -> i128 {
        let mut sum = 0i128;
        while mask != 0 {
            let pos = mask.trailing_zeros() as usize;
            sum += scaled[pos];
            mask &= mask - 1;
        }
        sum
    }

    fn exact_sum(ws: &[Rational], mut mask: u128) -> Rational {
        let mut sum = Rational::zero();
        while mask != 0 {
            let pos = mask.trailing_zeros() as usize;
            sum += &ws[pos];
            mask &= mask - 1;
        }
        sum
    }

    /// Comparison key for optimize mode: (weight, edge count, edge list).
    fn weight_key(&self, mask: u128) -> WeightKey {
        match &self.weights {
            Weights::Scaled { scaled, .. } => WeightKey::Scaled(Self::scaled_sum(scaled, mask)),
            Weights::Exact(ws) => WeightKey::Exact(Self::exact_sum(ws, mask)),
        }
    }

    fn edge_set(&self, mut mask: u128) -> BTreeSet<EdgeId> {
        let mut set = BTreeSet::new();
        while mask != 0 {
            let pos = mask.trailing_zeros() as usize;
            set.insert(self.relevant[pos]);
            mask &= mask - 1;
        }
        set
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum WeightKey {
    Scaled(i128),
    Exact(Rational),
}

impl CommunityCheck {
    fn satisfied(&self, mask: u128, instance: &Instance) -> bool {
        if self.members <= 1 {
            return true;
        }
        match instance.property() {
            Property::Stars => self.center_masks.iter().any(|&cm| cm & !mask == 0),
            Property::Connectivity => {
                let present = mask & self.inner_mask;
                if (present.count_ones() as usize) < self.members - 1 {
                    return false;
                }
                let mut parent = [0u8; 64];
                debug_assert!(self.members <= 64);
                for (i, p) in parent.iter_mut().enumerate().take(self.members) {
                    *p = i as u8;
                }
                fn find(parent: &mut [u8; 64], mut x: u8) -> u8 {
                    while parent[x as usize] != x {
                        parent[x as usize] = parent[parent[x as usize] as usize];
                        x = parent[x as usize];
                    }
                    x
                }
                let mut comps = self.members as u32;
                for &(bit, a, b) in &self.inner {
                    if bit & mask != 0 {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent[ra as usize] = rb;
                            comps -= 1;
                            if comps == 1 {
                                return true;
                            }
                        }
                    }
                }
                comps == 1
            }
        }
    }
}

impl Weights {
    fn build(instance: &Instance, relevant: &[EdgeId]) -> Weights {
        let g = instance.graph();
        let mut lcm = BigInt::from(1);
        for &id in relevant {
            lcm = lcm.lcm(g.edge(id).weight.denom());
        }
        if let Budget::Finite(b) = instance.budget() {
            lcm = lcm.lcm(b.denom());
        }
        let limit = i128::MAX / (relevant.len() as i128 + 2);
        let mut scaled = Vec::with_capacity(relevant.len());
        for &id in relevant {
            let w = &g.edge(id).weight;
            let num = w.numer() * (&lcm / w.denom());
            match i128::try_from(&num) {
                Ok(v) if v <= limit => scaled.push(v),
                _ => return Weights::exact(instance, relevant),
            }
        }
        let budget = match instance.budget() {
            Budget::Infinite => None,
            Budget::Finite(b) => {
                let num = b.numer() * (&lcm / b.denom());
                match i128::try_from(&num) {
                    Ok(v) => Some(v),
                    Err(_) => return Weights::exact(instance, relevant),
                }
            }
        };
        Weights::Scaled { scaled, budget }
    }

    fn exact(instance: &Instance, relevant: &[EdgeId]) -> Weights {
        Weights::Exact(
            relevant
                .iter()
                .map(|&id| instance.graph().edge(id).weight.clone())
                .collect(),
        )
    }
}

/// Iterates all masks of a fixed popcount in increasing numeric order
/// (Gosper's hack).
struct FixedPopcount {
    next: Option<u128>,
    limit: u128,
}

impl FixedPopcount {
    fn new(k: usize, bits: usize) -> Self {
        debug_assert!(bits < 128);
        let limit = 1u128 << bits;
        let next = if k <= bits {
            Some(if k == 0 { 0 } else { (1u128 << k) - 1 })
        } else {
            None
        };
        FixedPopcount { next, limit }
    }
}

impl Iterator for FixedPopcount {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    }
}

fn check_cap(instance: &Instance, cap: usize) -> Result<Vec<EdgeId>, SolveError> {
    let relevant = instance.relevant_edges();
    if relevant.len() > cap {
        return Err(SolveError::RelevantEdgeLimit {
            found: relevant.len(),
            cap,
        });
    }
    Ok(relevant)
}

/// Exhaustive search over all subsets of the relevant edges, by increasing
/// cardinality. Decide mode stops at the first satisfying subset within
/// both budgets; optimize mode scans everything and returns the minimum
/// under (weight, edge count, lexicographic edge list).
pub fn solve_subset_enumeration(
    instance: &Instance,
    mode: Mode,
    cap: usize,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    check_cap(instance, cap)?;
    let ctx = EnumContext::new(instance);
    let bits = ctx.relevant.len();
    let max_k = instance.ell().min(bits);
    let mut best: Option<(WeightKey, usize, u128)> = None;
    let mut polled: u64 = 0;
    for k in 0..=max_k {
        for mask in FixedPopcount::new(k, bits) {
            polled += 1;
            if polled.is_multiple_of(STOP_POLL_MASKS) {
                opts.stop.check()?;
            }
            if !ctx.within_budget(mask) {
                continue;
            }
            match mode {
                Mode::Decide => {
                    if ctx.satisfied(mask) {
                        let solution = Solution::build(instance, ctx.edge_set(mask))
                            .expect("satisfying subset builds");
                        return Ok(OracleResult::yes(solution));
                    }
                }
                Mode::Optimize => {
                    let key = ctx.weight_key(mask);
                    if let Some((bw, _, bm)) = &best {
                        // same count ordering is by mask construction; the
                        // lexicographic edge-list tie-break needs an explicit
                        // comparison only between equal (weight, count) pairs
                        if key > *bw || (key == *bw && !lex_smaller(mask, *bm)) {
                            continue;
                        }
                    }
                    if ctx.satisfied(mask) {
                        best = Some((key, k, mask));
                    }
                }
            }
        }
    }
    match best {
        Some((_, _, mask)) => {
            let solution =
                Solution::build(instance, ctx.edge_set(mask)).expect("satisfying subset builds");
            Ok(OracleResult::yes_optimal(instance, solution))
        }
        None => Ok(OracleResult::no()),
    }
}

/// True when `mask` beats `best` under (weight-equal assumed) the
/// (edge count, lexicographic sorted edge list) tie-break.
fn lex_smaller(mask: u128, best: u128) -> bool {
    let (ka, kb) = (mask.count_ones(), best.count_ones());
    if ka != kb {
        return ka < kb;
    }
    // Equal popcount: compare sorted edge-id lists; relevant positions are
    // in edge-id order, so the smaller list is the one whose lowest
    // differing bit is set.
    let diff = mask ^ best;
    if diff == 0 {
        return false;
    }
    mask & (diff & diff.wrapping_neg()) != 0
}

/// Unit-weight search from the deletion side: keep exactly `ell_eff` of the
/// relevant edges (irrelevant edges are dropped for free), enumerating the
/// complement sets of size k. Agrees with `solve_subset_enumeration`.
pub fn solve_by_deletion(
    instance: &Instance,
    k: usize,
    cap: usize,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    if !instance.graph().unit_weights() {
        return Err(SolveError::NotUnweighted);
    }
    let m = instance.graph().edge_count();
    // when ell exceeds m there is nothing to delete and k = 0 is correct
    let expected = (m as i64 - instance.ell() as i64).max(0);
    if expected != k as i64 {
        return Err(SolveError::DeletionCountMismatch { expected, got: k });
    }
    check_cap(instance, cap)?;
    let ctx = EnumContext::new(instance);
    let bits = ctx.relevant.len();
    let ell_eff = instance.effective_ell_unit_weights();
    let full: u128 = if bits == 0 { 0 } else { (1u128 << bits) - 1 };
    // Deleting an irrelevant edge never hurts, so only the deletions beyond
    // the irrelevant surplus must hit relevant edges.
    let k_rel = bits.saturating_sub(ell_eff);
    let mut polled: u64 = 0;
    for del in FixedPopcount::new(k_rel, bits) {
        polled += 1;
        if polled.is_multiple_of(STOP_POLL_MASKS) {
            opts.stop.check()?;
        }
        let kept = full & !del;
        if ctx.satisfied(kept) {
            let solution =
                Solution::build(instance, ctx.edge_set(kept)).expect("satisfying subset builds");
            return Ok(OracleResult::yes(solution));
        }
    }
    Ok(OracleResult::no())
}

/// Depth-bounded branching on an unsatisfied community: for connectivity,
/// try every missing inner edge; for stars, try every potential center and
/// add its whole star. Instances with a community of size at least ell + 2
/// are immediate no-instances.
pub fn solve_branching(
    instance: &Instance,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    if instance
        .communities()
        .iter()
        .any(|c| c.len() >= instance.ell() + 2)
    {
        return Ok(OracleResult::no());
    }
    let mut state = BranchState {
        instance,
        edges: BTreeSet::new(),
        weight: Rational::zero(),
        opts,
    };
    match state.recurse()? {
        Some(edges) => {
            let solution = Solution::build(instance, edges).expect("branch leaf satisfies");
            Ok(OracleResult::yes(solution))
        }
        None => Ok(OracleResult::no()),
    }
}

struct BranchState<'a> {
    instance: &'a Instance,
    edges: BTreeSet<EdgeId>,
    weight: Rational,
    opts: &'a SearchOptions,
}

impl BranchState<'_> {
    fn recurse(&mut self) -> Result<Option<BTreeSet<EdgeId>>, SolveError> {
        self.opts.stop.check()?;
        if self.edges.len() > self.instance.ell() || !self.instance.budget().allows(&self.weight) {
            return Ok(None);
        }
        let g = self.instance.graph();
        let unsatisfied =
            self.instance
                .communities()
                .iter()
                .position(|c| match self.instance.property() {
                    Property::Stars => universal_vertices(g, &self.edges, c).is_empty(),
                    Property::Connectivity => !is_community_connected(g, &self.edges, c),
                });
        let Some(ci) = unsatisfied else {
            return Ok(Some(self.edges.clone()));
        };
        let community = self.instance.community(ci);
        match self.instance.property() {
            Property::Stars => {
                // Distinct centers can demand the same missing edges (e.g.
                // both endpoints of a size-2 community); branch per distinct
                // missing set.
                let mut tried: Vec<Vec<EdgeId>> = Vec::new();
                for center in universal_in_graph(g, community) {
                    let missing: Vec<EdgeId> = community
                        .iter()
                        .filter(|&w| w != center)
                        .map(|w| g.edge_id(center, w).expect("center is universal"))
                        .filter(|id| !self.edges.contains(id))
                        .collect();
                    if tried.contains(&missing) {
                        continue;
                    }
                    tried.push(missing.clone());
                    if self.edges.len() + missing.len() > self.instance.ell() {
                        continue;
                    }
                    if let Some(found) = self.explore(&missing)? {
                        return Ok(Some(found));
                    }
                }
            }
            Property::Connectivity => {
                let members: Vec<usize> = community.iter().collect();
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        let Some(id) = g.edge_id(u, v) else { continue };
                        if self.edges.contains(&id) {
                            continue;
                        }
                        if let Some(found) = self.explore(&[id])? {
                            return Ok(Some(found));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn explore(&mut self, added: &[EdgeId]) -> Result<Option<BTreeSet<EdgeId>>, SolveError> {
        for &id in added {
            self.edges.insert(id);
            self.weight += &self.instance.graph().edge(id).weight;
        }
        let result = self.recurse();
        for &id in added {
            self.edges.remove(&id);
            let w = &self.instance.graph().edge(id).weight;
            self.weight = &self.weight - w;
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Community, WeightedGraph};
    use crate::rational::Budget;

    fn opts() -> SearchOptions {
        SearchOptions::sequential()
    }

    fn k3(property: Property, ell: usize, b: Budget) -> Instance {
        Instance::new(
            WeightedGraph::complete_unit(3),
            vec![Community::new(vec![0, 1, 2])],
            property,
            ell,
            b,
        )
        .unwrap()
    }

    #[test]
    fn triangle_connectivity_optimum() {
        let ins = k3(
            Property::Connectivity,
            2,
            Budget::Finite(Rational::from_integer(2)),
        );
        let res = solve_subset_enumeration(&ins, Mode::Optimize, 24, &opts()).unwrap();
        let (count, weight) = res.optimum.clone().unwrap();
        assert_eq!(count, 2);
        assert_eq!(weight, Rational::from_integer(2));
    }

    #[test]
    fn star_needs_two_edges() {
        let ins = k3(Property::Stars, 1, Budget::Infinite);
        let res = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
        assert!(!res.is_yes());
    }

    #[test]
    fn four_cycle_with_chord() {
        // With the chord {0,2} present, all three communities are
        // satisfiable and three edges suffice.
        let g = WeightedGraph::new(
            4,
            vec![
                (0, 1, Rational::one()),
                (1, 2, Rational::one()),
                (2, 3, Rational::one()),
                (0, 3, Rational::one()),
                (0, 2, Rational::one()),
            ],
        )
        .unwrap();
        let ins = Instance::new(
            g,
            vec![
                Community::new(vec![0, 1, 2]),
                Community::new(vec![1, 2, 3]),
                Community::new(vec![0, 2]),
            ],
            Property::Connectivity,
            3,
            Budget::Infinite,
        )
        .unwrap();
        let res = solve_subset_enumeration(&ins, Mode::Optimize, 24, &opts()).unwrap();
        assert_eq!(res.optimum.clone().unwrap().0, 3);
    }

    #[test]
    fn four_cycle_with_three_communities() {
        let g = WeightedGraph::new(
            4,
            vec![
                (0, 1, Rational::one()),
                (1, 2, Rational::one()),
                (2, 3, Rational::one()),
                (0, 3, Rational::one()),
            ],
        )
        .unwrap();
        let ins = Instance::new(
            g,
            vec![
                Community::new(vec![0, 1, 2]),
                Community::new(vec![1, 2, 3]),
                Community::new(vec![0, 2]),
            ],
            Property::Connectivity,
            3,
            Budget::Infinite,
        )
        .unwrap();
        // {0,2} induces no edge of the 4-cycle, so this is a trivial no.
        assert_eq!(ins.unsatisfiable_communities(), vec![2]);
        let res = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
        assert!(!res.is_yes());

        // Dropping the impossible community makes it solvable with 3 edges.
        let ins = Instance::new(
            ins.graph().clone(),
            vec![Community::new(vec![0, 1, 2]), Community::new(vec![1, 2, 3])],
            Property::Connectivity,
            3,
            Budget::Infinite,
        )
        .unwrap();
        let res = solve_subset_enumeration(&ins, Mode::Optimize, 24, &opts()).unwrap();
        assert_eq!(res.optimum.clone().unwrap().0, 3);
    }

    #[test]
    fn deletion_side_examples() {
        // K4, one community, delete 2 of 6 edges.
        let ins = Instance::new(
            WeightedGraph::complete_unit(4),
            vec![Community::new(vec![0, 1, 2, 3])],
            Property::Connectivity,
            4,
            Budget::Infinite,
        )
        .unwrap();
        assert!(solve_by_deletion(&ins, 2, 24, &opts()).unwrap().is_yes());

        // K3 stars with k = 2: one edge cannot form a spanning star.
        let ins = k3(Property::Stars, 1, Budget::Infinite);
        assert!(!solve_by_deletion(&ins, 2, 24, &opts()).unwrap().is_yes());

        // k = 0: yes iff the graph itself satisfies everything.
        let ins = k3(Property::Connectivity, 3, Budget::Infinite);
        assert!(solve_by_deletion(&ins, 0, 24, &opts()).unwrap().is_yes());

        // ell beyond m clamps to k = 0
        let ins = k3(Property::Connectivity, 9, Budget::Infinite);
        assert!(solve_by_deletion(&ins, 0, 24, &opts()).unwrap().is_yes());
        assert_eq!(
            solve_by_deletion(&ins, 3, 24, &opts()),
            Err(SolveError::DeletionCountMismatch {
                expected: 0,
                got: 3
            })
        );

        let weighted = Instance::new(
            WeightedGraph::new(2, vec![(0, 1, Rational::new(3, 2))]).unwrap(),
            vec![Community::new(vec![0, 1])],
            Property::Connectivity,
            1,
            Budget::Infinite,
        )
        .unwrap();
        assert_eq!(
            solve_by_deletion(&weighted, 0, 24, &opts()),
            Err(SolveError::NotUnweighted)
        );
    }

    #[test]
    fn branching_examples() {
        let ins = k3(Property::Stars, 2, Budget::Infinite);
        assert!(solve_branching(&ins, &opts()).unwrap().is_yes());

        // A community of size ell + 2 is an immediate no.
        let ins = k3(Property::Stars, 1, Budget::Infinite);
        assert!(!solve_branching(&ins, &opts()).unwrap().is_yes());
    }

    #[test]
    fn relevant_edge_cap() {
        let ins = Instance::new(
            WeightedGraph::complete_unit(5),
            vec![Community::new(vec![0, 1, 2, 3, 4])],
            Property::Connectivity,
            4,
            Budget::Infinite,
        )
        .unwrap();
        assert_eq!(
            solve_subset_enumeration(&ins, Mode::Decide, 5, &opts()),
            Err(SolveError::RelevantEdgeLimit { found: 10, cap: 5 })
        );
    }

    #[test]
    fn deletion_agrees_with_enumeration_when_irrelevant_edges_exist() {
        // Triangle community plus two edges outside every community: the
        // plain k-of-relevant deletion would wrongly answer no.
        let g = WeightedGraph::new(
            7,
            vec![
                (0, 1, Rational::one()),
                (0, 2, Rational::one()),
                (1, 2, Rational::one()),
                (3, 4, Rational::one()),
                (5, 6, Rational::one()),
            ],
        )
        .unwrap();
        let ins = Instance::new(
            g,
            vec![Community::new(vec![0, 1, 2])],
            Property::Connectivity,
            2,
            Budget::Infinite,
        )
        .unwrap();
        let k = ins.graph().edge_count() - ins.ell();
        let by_deletion = solve_by_deletion(&ins, k, 24, &opts()).unwrap();
        let by_subsets = solve_subset_enumeration(&ins, Mode::Decide, 24, &opts()).unwrap();
        assert!(by_deletion.is_yes());
        assert_eq!(by_deletion.is_yes(), by_subsets.is_yes());
    }
}
