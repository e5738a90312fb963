//! Solutions, their per-community certificates, and validation.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{is_community_connected, universal_vertices, EdgeId};
use crate::instance::{Instance, Property};
use crate::rational::Rational;

/// Evidence that a community is satisfied by the solution subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A vertex universal for the community in the solution (Stars).
    Center(usize),
    /// The induced subgraph is connected (Connectivity).
    Connected,
}

/// A spanning subgraph together with one certificate per community.
/// Construction checks the certificates, so a `Solution` always satisfies
/// the instance property; the edge and weight budgets are the business of
/// [`verify_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    edges: BTreeSet<EdgeId>,
    certificates: Vec<Certificate>,
}

impl Solution {
    /// Builds a solution from an edge set, deriving certificates. Returns
    /// `None` if some community is unsatisfied. Stars certificates pick the
    /// smallest universal vertex.
    pub fn build(instance: &Instance, edges: BTreeSet<EdgeId>) -> Option<Solution> {
        let mut certificates = Vec::with_capacity(instance.community_count());
        for c in instance.communities() {
            match instance.property() {
                Property::Stars => {
                    let centers = universal_vertices(instance.graph(), &edges, c);
                    certificates.push(Certificate::Center(*centers.first()?));
                }
                Property::Connectivity => {
                    if !is_community_connected(instance.graph(), &edges, c) {
                        return None;
                    }
                    certificates.push(Certificate::Connected);
                }
            }
        }
        Some(Solution {
            edges,
            certificates,
        })
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn certificates(&self) -> &[Certificate] {
        &self.certificates
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self, instance: &Instance) -> Rational {
        instance.graph().total_weight(self.edges.iter())
    }

    /// Sorted (u, v) pairs of the chosen edges.
    pub fn edge_pairs(&self, instance: &Instance) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&id| {
                let e = instance.graph().edge(id);
                (e.u, e.v)
            })
            .collect()
    }
}

/// A single reason an edge set fails to be a solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EdgeBudget { used: usize, limit: usize },
    WeightBudget { used: Rational, limit: Rational },
    CommunityNoCenter { index: usize },
    CommunityDisconnected { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeBudget { used, limit } => {
                write!(f, "edge budget exceeded: {used} > {limit}")
            }
            Violation::WeightBudget { used, limit } => {
                write!(f, "weight budget exceeded: {used} > {limit}")
            }
            Violation::CommunityNoCenter { index } => {
                write!(f, "community {index} has no center")
            }
            Violation::CommunityDisconnected { index } => {
                write!(f, "community {index} is disconnected")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub edge_count: usize,
    pub total_weight: Rational,
    pub violations: Vec<Violation>,
}

/// Checks an arbitrary edge subset against the instance: edge budget,
/// weight budget, and the property for every community. Every failing
/// bound or community is named in `violations`.
pub fn verify_solution(instance: &Instance, edges: &BTreeSet<EdgeId>) -> VerifyReport {
    let edge_count = edges.len();
    let total_weight = instance.graph().total_weight(edges.iter());
    let mut violations = Vec::new();
    if edge_count > instance.ell() {
        violations.push(Violation::EdgeBudget {
            used: edge_count,
            limit: instance.ell(),
        });
    }
    if !instance.budget().allows(&total_weight) {
        if let crate::rational::Budget::Finite(limit) = instance.budget() {
            violations.push(Violation::WeightBudget {
                used: total_weight.clone(),
                limit: limit.clone(),
            });
        }
    }
    for (i, c) in instance.communities().iter().enumerate() {
        match instance.property() {
            Property::Stars => {
                if universal_vertices(instance.graph(), edges, c).is_empty() {
                    violations.push(Violation::CommunityNoCenter { index: i });
                }
            }
            Property::Connectivity => {
                if !is_community_connected(instance.graph(), edges, c) {
                    violations.push(Violation::CommunityDisconnected { index: i });
                }
            }
        }
    }
    VerifyReport {
        valid: violations.is_empty(),
        edge_count,
        total_weight,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Community, WeightedGraph};
    use crate::rational::Budget;

    fn k3_stars(ell: usize, budget: Budget) -> Instance {
        Instance::new(
            WeightedGraph::complete_unit(3),
            vec![Community::new(vec![0, 1, 2])],
            Property::Stars,
            ell,
            budget,
        )
        .unwrap()
    }

    #[test]
    fn verifies_star_solution() {
        let ins = k3_stars(2, Budget::Finite(Rational::from_integer(2)));
        let e01 = ins.graph().edge_id(0, 1).unwrap();
        let e02 = ins.graph().edge_id(0, 2).unwrap();
        let report = verify_solution(&ins, &[e01, e02].into());
        assert!(report.valid);
        assert_eq!(report.edge_count, 2);
        assert_eq!(report.total_weight, Rational::from_integer(2));

        let report = verify_solution(&ins, &[e01].into());
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![Violation::CommunityNoCenter { index: 0 }]
        );
    }

    #[test]
    fn flags_edge_budget() {
        let ins = k3_stars(1, Budget::Infinite);
        let e01 = ins.graph().edge_id(0, 1).unwrap();
        let e02 = ins.graph().edge_id(0, 2).unwrap();
        let report = verify_solution(&ins, &[e01, e02].into());
        assert!(!report.valid);
        assert!(matches!(
            report.violations[0],
            Violation::EdgeBudget { used: 2, limit: 1 }
        ));
    }

    #[test]
    fn builds_certificates() {
        let ins = k3_stars(3, Budget::Infinite);
        let e01 = ins.graph().edge_id(0, 1).unwrap();
        let e02 = ins.graph().edge_id(0, 2).unwrap();
        let sol = Solution::build(&ins, [e01, e02].into()).unwrap();
        assert_eq!(sol.certificates(), &[Certificate::Center(0)]);
        assert!(Solution::build(&ins, [e01].into()).is_none());
    }
}
