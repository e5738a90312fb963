//! Polynomial algorithm for Connectivity instances whose solution must be a
//! forest (t = 0): one maximum-weight spanning tree per hypergraph
//! component, under an auxiliary weight that ranks edges first by how many
//! communities contain them and then by cheaper original weight.

use std::collections::BTreeSet;

use crate::dsu::UnionFind;
use crate::error::SolveError;
use crate::graph::EdgeId;
use crate::instance::{Instance, Property};
use crate::oracle::OracleResult;
use crate::rational::Rational;
use crate::solution::Solution;

/// The auxiliary weight of one edge: `community_count + (x - w) / x` where
/// `x` is the instance-wide maximum edge weight plus one. Strictly positive
/// weights keep the fractional part inside the open interval (0, 1), so
/// `floor(total) = community_count` always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxWeight {
    pub community_count: usize,
    pub fraction: Rational,
    pub total: Rational,
}

/// Auxiliary weights for every edge. `x` is computed once per instance,
/// not per component.
pub fn aux_weights(instance: &Instance) -> Vec<AuxWeight> {
    let g = instance.graph();
    let x = match g.max_weight() {
        Some(w) => w + &Rational::one(),
        None => return Vec::new(),
    };
    g.edges()
        .iter()
        .map(|e| {
            let count = instance
                .communities()
                .iter()
                .filter(|c| c.contains(e.u) && c.contains(e.v))
                .count();
            let fraction = &(&x - &e.weight) / &x;
            let total = &Rational::from_integer(count as i64) + &fraction;
            AuxWeight {
                community_count: count,
                fraction,
                total,
            }
        })
        .collect()
}

/// The restricted graph on `component` has no spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDisconnected;

/// Kruskal on the edges induced by `component`, maximizing the auxiliary
/// weight. Ties break toward the lexicographically smaller (u, v) edge, so
/// the result does not depend on the input edge order.
pub fn max_weight_spanning_tree(
    instance: &Instance,
    component: &[usize],
    aux: &[AuxWeight],
) -> Result<Vec<EdgeId>, ComponentDisconnected> {
    let g = instance.graph();
    let members: BTreeSet<usize> = component.iter().copied().collect();
    let mut candidates: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&id| {
            let e = g.edge(id);
            members.contains(&e.u) && members.contains(&e.v)
        })
        .collect();
    // Descending by auxiliary weight; edge ids ascend by (u, v) already.
    candidates.sort_by(|&a, &b| aux[b].total.cmp(&aux[a].total).then_with(|| a.cmp(&b)));
    let index_of: std::collections::HashMap<usize, usize> =
        component.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(component.len());
    let mut tree = Vec::with_capacity(component.len().saturating_sub(1));
    for id in candidates {
        let e = g.edge(id);
        if uf.union(index_of[&e.u], index_of[&e.v]) {
            tree.push(id);
            if tree.len() + 1 == component.len() {
                break;
            }
        }
    }
    if tree.len() + 1 != component.len() {
        return Err(ComponentDisconnected);
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Solves one hypergraph component: if the maximum-auxiliary-weight
/// spanning tree satisfies every community of the component it is a
/// minimum-weight tree solution; otherwise there is none.
pub fn solve_component_tree(
    instance: &Instance,
    component: &[usize],
    aux: &[AuxWeight],
) -> Option<(Vec<EdgeId>, Rational)> {
    let tree = max_weight_spanning_tree(instance, component, aux).ok()?;
    let edge_set: BTreeSet<EdgeId> = tree.iter().copied().collect();
    let members: BTreeSet<usize> = component.iter().copied().collect();
    for c in instance.communities() {
        if c.iter().all(|v| members.contains(&v))
            && !crate::graph::is_community_connected(instance.graph(), &edge_set, c)
        {
            return None;
        }
    }
    let weight = instance.graph().total_weight(tree.iter());
    Some((tree, weight))
}

/// The full t = 0 solver: one tree per hypergraph component, summed. The
/// instance must have exactly t = 0; for t > 0 this algorithm makes no
/// optimality claim and refuses, for t < 0 no solution exists at all.
pub fn solve_forest_support(instance: &Instance) -> Result<OracleResult, SolveError> {
    if instance.property() != Property::Connectivity {
        return Err(SolveError::PropertyMismatch {
            expected: "connectivity",
        });
    }
    let t = instance.feedback_edge_parameter();
    if t != 0 {
        return Err(SolveError::WrongParameterRegime { t });
    }
    let aux = aux_weights(instance);
    let comps = instance.hypergraph_components();
    let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
    let mut total = Rational::zero();
    for component in &comps.components {
        match solve_component_tree(instance, component, &aux) {
            Some((tree, weight)) => {
                edges.extend(tree);
                total = &total + &weight;
            }
            None => return Ok(OracleResult::no()),
        }
    }
    if !instance.budget().allows(&total) {
        return Ok(OracleResult::no());
    }
    let solution = Solution::build(instance, edges).expect("component trees satisfy");
    Ok(OracleResult::yes_optimal(instance, solution))
}
