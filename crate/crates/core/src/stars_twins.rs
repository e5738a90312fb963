//! Unweighted stars solver branching over center-twin classes.
//!
//! Two vertices are center twins when they belong to the same communities
//! and can center the same communities; swapping one twin for another as a
//! center never increases the edge count. It therefore suffices to branch,
//! per community, over the twin classes whose canonical member can center
//! it, which bounds the search tree by the number of communities.

use std::collections::BTreeSet;

use crate::error::SolveError;
use crate::graph::{universal_in_graph, EdgeId};
use crate::instance::{Instance, Property};
use crate::oracle::OracleResult;
use crate::solution::Solution;
use crate::stop::SearchOptions;

/// One class of mutually interchangeable center candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub members: Vec<usize>,
    /// Indices of the communities containing the members.
    pub membership_signature: BTreeSet<usize>,
    /// Indices of the communities the members can center in G.
    pub center_signature: BTreeSet<usize>,
    /// Lowest-index member, used as the class representative.
    pub canonical: usize,
}

/// Partitions all vertices into center-twin classes, ordered by canonical
/// vertex. Vertices in no community share one class with empty signatures.
pub fn center_twins_partition(instance: &Instance) -> Vec<TwinClass> {
    let g = instance.graph();
    let n = g.vertex_count();
    let mut signature: Vec<(BTreeSet<usize>, BTreeSet<usize>)> =
        vec![(BTreeSet::new(), BTreeSet::new()); n];
    for (i, c) in instance.communities().iter().enumerate() {
        let centers = universal_in_graph(g, c);
        for v in c.iter() {
            signature[v].0.insert(i);
        }
        for v in centers {
            signature[v].1.insert(i);
        }
    }
    let mut classes: Vec<TwinClass> = Vec::new();
    for (v, sig) in signature.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|t| t.membership_signature == sig.0 && t.center_signature == sig.1)
        {
            Some(t) => t.members.push(v),
            None => classes.push(TwinClass {
                members: vec![v],
                membership_signature: signature[v].0.clone(),
                center_signature: signature[v].1.clone(),
                canonical: v,
            }),
        }
    }
    classes
}

/// Decides unweighted Stars instances by assigning each community's center
/// to the canonical member of some admissible twin class, accumulating the
/// union of the chosen stars and pruning as soon as it exceeds the budget.
pub fn solve_stars_twins(
    instance: &Instance,
    opts: &SearchOptions,
) -> Result<OracleResult, SolveError> {
    if instance.property() != Property::Stars {
        return Err(SolveError::PropertyMismatch { expected: "stars" });
    }
    if !instance.graph().unit_weights() {
        return Err(SolveError::NotUnweighted);
    }
    let classes = center_twins_partition(instance);
    // Admissible canonical centers per community.
    let choices: Vec<Vec<usize>> = (0..instance.community_count())
        .map(|i| {
            classes
                .iter()
                .filter(|t| t.center_signature.contains(&i))
                .map(|t| t.canonical)
                .collect()
        })
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(OracleResult::no());
    }
    // Branch on the most constrained community first; any order is sound.
    let mut order: Vec<usize> = (0..instance.community_count()).collect();
    order.sort_by_key(|&i| (choices[i].len(), i));
    let ell = instance.effective_ell_unit_weights();
    let mut search = TwinSearch {
        instance,
        choices: &choices,
        order: &order,
        ell,
        edges: BTreeSet::new(),
        centers: vec![usize::MAX; instance.community_count()],
        opts,
    };
    match search.recurse(0)? {
        Some(edges) => {
            let solution = Solution::build(instance, edges).expect("chosen stars satisfy");
            Ok(OracleResult::yes(solution))
        }
        None => Ok(OracleResult::no()),
    }
}

struct TwinSearch<'a> {
    instance: &'a Instance,
    choices: &'a [Vec<usize>],
    order: &'a [usize],
    ell: usize,
    edges: BTreeSet<EdgeId>,
    centers: Vec<usize>,
    opts: &'a SearchOptions,
}

impl TwinSearch<'_> {
    fn recurse(&mut self, depth: usize) -> Result<Option<BTreeSet<EdgeId>>, SolveError> {
        self.opts.stop.check()?;
        if self.edges.len() > self.ell {
            return Ok(None);
        }
        let Some(&ci) = self.order.get(depth) else {
            return Ok(Some(self.edges.clone()));
        };
        let g = self.instance.graph();
        let community = self.instance.community(ci);
        for &center in &self.choices[ci] {
            let added: Vec<EdgeId> = community
                .iter()
                .filter(|&v| v != center)
                .map(|v| g.edge_id(center, v).expect("canonical center is universal"))
                .filter(|id| !self.edges.contains(id))
                .collect();
            if self.edges.len() + added.len() > self.ell {
                continue;
            }
            for &id in &added {
                self.edges.insert(id);
            }
            self.centers[ci] = center;
            let found = self.recurse(depth + 1)?;
            for &id in &added {
                self.edges.remove(&id);
            }
            self.centers[ci] = usize::MAX;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}
