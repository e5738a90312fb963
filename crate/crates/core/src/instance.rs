//! Problem instances: graph + communities + property + budgets, and the
//! derived hypergraph statistics.

use std::collections::BTreeSet;

use crate::dsu::UnionFind;
use crate::error::InstanceError;
use crate::graph::{universal_in_graph, Community, EdgeId, WeightedGraph};
use crate::rational::Budget;

/// The per-community requirement on the solution graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// Every community must contain a spanning star.
    Stars,
    /// Every community must induce a connected subgraph.
    Connectivity,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Stars => "stars",
            Property::Connectivity => "conn",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    graph: WeightedGraph,
    communities: Vec<Community>,
    property: Property,
    ell: usize,
    budget: Budget,
    max_community_size: usize,
}

impl Instance {
    /// Builds an instance. Duplicate communities are dropped, keeping the
    /// first occurrence; empty communities and out-of-range members are
    /// rejected.
    pub fn new(
        graph: WeightedGraph,
        communities: Vec<Community>,
        property: Property,
        ell: usize,
        budget: Budget,
    ) -> Result<Self, InstanceError> {
        if let Budget::Finite(b) = &budget {
            if !b.is_positive() {
                return Err(InstanceError::NonPositiveBudget(b.to_string()));
            }
        }
        let mut seen = BTreeSet::new();
        let mut deduped = Vec::with_capacity(communities.len());
        for (i, c) in communities.into_iter().enumerate() {
            if c.is_empty() {
                return Err(InstanceError::EmptyCommunity(i));
            }
            if c.max_vertex() >= graph.vertex_count() {
                return Err(InstanceError::VertexOutOfRange(
                    c.max_vertex(),
                    graph.vertex_count(),
                ));
            }
            if seen.insert(c.clone()) {
                deduped.push(c);
            }
        }
        let max_community_size = deduped.iter().map(Community::len).max().unwrap_or(0);
        Ok(Instance {
            graph,
            communities: deduped,
            property,
            ell,
            budget,
            max_community_size,
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn communities(&self) -> &[Community] {
        &self.communities
    }

    pub fn community(&self, i: usize) -> &Community {
        &self.communities[i]
    }

    pub fn community_count(&self) -> usize {
        self.communities.len()
    }

    pub fn property(&self) -> Property {
        self.property
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// Maximum community size d.
    pub fn max_community_size(&self) -> usize {
        self.max_community_size
    }

    /// Same instance with different budgets.
    pub fn with_budgets(&self, ell: usize, budget: Budget) -> Instance {
        let mut copy = self.clone();
        copy.ell = ell;
        copy.budget = budget;
        copy
    }

    /// Edge ids with both endpoints inside at least one community. These are
    /// the only edges a minimal solution can use: an edge inside no community
    /// contributes to no induced subgraph.
    pub fn relevant_edges(&self) -> Vec<EdgeId> {
        (0..self.graph.edge_count())
            .filter(|&id| {
                let e = self.graph.edge(id);
                self.communities
                    .iter()
                    .any(|c| c.contains(e.u) && c.contains(e.v))
            })
            .collect()
    }

    /// For unit-weight instances a finite weight budget is just another edge
    /// budget: effective ell = min(ell, floor(b)).
    pub fn effective_ell_unit_weights(&self) -> usize {
        match self.budget.floor_usize() {
            Some(f) => self.ell.min(f),
            None => self.ell,
        }
    }

    /// Connected components of the community hypergraph, plus the vertices
    /// covered by no community (excluded from the components and from x).
    pub fn hypergraph_components(&self) -> HypergraphComponents {
        let n = self.graph.vertex_count();
        let mut covered = vec![false; n];
        let mut uf = UnionFind::new(n);
        for c in &self.communities {
            let mut members = c.iter();
            if let Some(first) = members.next() {
                covered[first] = true;
                for v in members {
                    covered[v] = true;
                    uf.union(first, v);
                }
            }
        }
        let mut by_root: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        let mut uncovered = Vec::new();
        for (v, &is_covered) in covered.iter().enumerate() {
            if !is_covered {
                uncovered.push(v);
                continue;
            }
            let r = uf.find(v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = by_root.len();
                by_root.push(Vec::new());
            }
            by_root[root_slot[r]].push(v);
        }
        HypergraphComponents {
            components: by_root,
            uncovered,
        }
    }

    /// The feedback-edge parameter t = ell - n' + x, where n' counts the
    /// vertices covered by at least one community and x the hypergraph
    /// component count. Negative t means no solution can exist.
    pub fn feedback_edge_parameter(&self) -> i64 {
        let comps = self.hypergraph_components();
        let covered = self.graph.vertex_count() - comps.uncovered.len();
        self.ell as i64 - covered as i64 + comps.components.len() as i64
    }

    /// Indices of communities whose induced subgraph in the full ground
    /// graph cannot satisfy the property; any of these makes the instance a
    /// trivial no.
    pub fn unsatisfiable_communities(&self) -> Vec<usize> {
        let all: BTreeSet<EdgeId> = (0..self.graph.edge_count()).collect();
        self.communities
            .iter()
            .enumerate()
            .filter(|(_, c)| match self.property {
                Property::Stars => universal_in_graph(&self.graph, c).is_empty(),
                Property::Connectivity => {
                    !crate::graph::is_community_connected(&self.graph, &all, c)
                }
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// Output of [`Instance::hypergraph_components`]. Components are ordered by
/// their smallest vertex; members are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphComponents {
    pub components: Vec<Vec<usize>>,
    pub uncovered: Vec<usize>,
}

impl HypergraphComponents {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}
