//! The ground graph, communities, and the basic subgraph predicates.

use std::collections::{BTreeSet, HashMap};

use crate::dsu::UnionFind;
use crate::error::InstanceError;
use crate::rational::Rational;

/// Index of an edge in [`WeightedGraph::edges`].
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Rational,
}

/// An undirected graph with strictly positive exact edge weights.
///
/// Vertices are `0..n`. Edges are stored with `u < v`, sorted by `(u, v)`,
/// so edge ids are stable under any input order.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    index: HashMap<(usize, usize), EdgeId>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self, InstanceError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            if u >= n {
                return Err(InstanceError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(InstanceError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            if !w.is_positive() {
                return Err(InstanceError::NonPositiveWeight(u, v, w.to_string()));
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            normalized.push(Edge { u, v, weight: w });
        }
        normalized.sort_by_key(|e| (e.u, e.v));
        let mut index = HashMap::with_capacity(normalized.len());
        for (i, e) in normalized.iter().enumerate() {
            if index.insert((e.u, e.v), i).is_some() {
                return Err(InstanceError::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(WeightedGraph {
            n,
            edges: normalized,
            index,
        })
    }

    /// Complete graph on `n` vertices with unit weights.
    pub fn complete_unit(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, Rational::one()));
            }
        }
        WeightedGraph::new(n, edges).expect("complete graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.index.get(&key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn unit_weights(&self) -> bool {
        let one = Rational::one();
        self.edges.iter().all(|e| e.weight == one)
    }

    pub fn max_weight(&self) -> Option<&Rational> {
        self.edges.iter().map(|e| &e.weight).max()
    }

    pub fn total_weight<'a, I: IntoIterator<Item = &'a EdgeId>>(&self, ids: I) -> Rational {
        let mut sum = Rational::zero();
        for &id in ids {
            sum += &self.edges[id].weight;
        }
        sum
    }

    /// The edges of `G` with both endpoints in `s`.
    pub fn induced_edge_set(&self, s: &BTreeSet<usize>) -> BTreeSet<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| s.contains(&e.u) && s.contains(&e.v))
            .map(|(i, _)| i)
            .collect()
    }
}

/// A community: a nonempty sorted set of vertices whose induced subgraph
/// must satisfy the instance property in every solution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Community {
    members: Vec<usize>,
}

impl Community {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Community { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn intersection(&self, other: &Community) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&v| other.contains(v))
            .collect()
    }

    pub fn max_vertex(&self) -> usize {
        *self.members.last().expect("community is nonempty")
    }
}

/// True iff the subgraph `(C, E(graph) ∩ edge_subset restricted to C)` is
/// connected. Singleton communities are connected by definition.
pub fn is_community_connected(
    graph: &WeightedGraph,
    edge_subset: &BTreeSet<EdgeId>,
    community: &Community,
) -> bool {
    if community.len() <= 1 {
        return true;
    }
    let pos: HashMap<usize, usize> = community.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut uf = UnionFind::new(community.len());
    for &id in edge_subset {
        let e = graph.edge(id);
        if let (Some(&a), Some(&b)) = (pos.get(&e.u), pos.get(&e.v)) {
            uf.union(a, b);
        }
    }
    uf.component_count() == 1
}

/// The vertices of `community` adjacent (within `edge_subset`) to every
/// other member: the candidate star centers. A singleton community is its
/// own universal vertex.
pub fn universal_vertices(
    graph: &WeightedGraph,
    edge_subset: &BTreeSet<EdgeId>,
    community: &Community,
) -> Vec<usize> {
    if community.len() == 1 {
        return community.members().to_vec();
    }
    community
        .iter()
        .filter(|&v| {
            community.iter().all(|w| {
                w == v
                    || graph
                        .edge_id(v, w)
                        .is_some_and(|id| edge_subset.contains(&id))
            })
        })
        .collect()
}

/// Universal vertices with respect to the whole ground graph.
pub fn universal_in_graph(graph: &WeightedGraph, community: &Community) -> Vec<usize> {
    if community.len() == 1 {
        return community.members().to_vec();
    }
    community
        .iter()
        .filter(|&v| community.iter().all(|w| w == v || graph.has_edge(v, w)))
        .collect()
}
