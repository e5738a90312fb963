//! Deterministic algorithm selection based on the instance shape.

use crate::instance::{Instance, Property};
use crate::oracle::DEFAULT_RELEVANT_EDGE_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Oracle,
    Deletion,
    BranchEll,
    TreeSupport,
    StarsXp,
    StarsFptC,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Deletion => "deletion",
            Algorithm::BranchEll => "branch-ell",
            Algorithm::TreeSupport => "tree-support",
            Algorithm::StarsXp => "stars-xp",
            Algorithm::StarsFptC => "stars-fpt-c",
        }
    }

    pub fn parse(name: &str) -> Option<Algorithm> {
        Some(match name {
            "oracle" => Algorithm::Oracle,
            "deletion" => Algorithm::Deletion,
            "branch-ell" => Algorithm::BranchEll,
            "tree-support" => Algorithm::TreeSupport,
            "stars-xp" => Algorithm::StarsXp,
            "stars-fpt-c" => Algorithm::StarsFptC,
            _ => return None,
        })
    }
}

/// Picks a solver: forest-shaped connectivity goes to the tree algorithm,
/// stars with small t to local-set enumeration, unweighted stars with few
/// communities to twin branching, tiny instances to the oracle, and the
/// rest to depth-bounded branching.
pub fn auto_select(instance: &Instance) -> (Algorithm, String) {
    let t = instance.feedback_edge_parameter();
    let c = instance.community_count();
    let unit = instance.graph().unit_weights();
    let relevant = instance.relevant_edges().len();
    match instance.property() {
        Property::Connectivity if t == 0 => (
            Algorithm::TreeSupport,
            "connectivity with t = 0 admits a forest solution".to_string(),
        ),
        Property::Stars if t <= 2 => (Algorithm::StarsXp, format!("stars with small t = {t}")),
        Property::Stars if unit && c <= 5 => (
            Algorithm::StarsFptC,
            format!("unweighted stars with {c} communities"),
        ),
        _ if relevant <= DEFAULT_RELEVANT_EDGE_CAP.min(16) => {
            (Algorithm::Oracle, format!("only {relevant} relevant edges"))
        }
        // local-set enumeration is XP in t, so large t falls back to the
        // generic depth-bounded branching for both properties
        _ => (
            Algorithm::BranchEll,
            format!("{} with t = {t}", instance.property().name()),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Community, WeightedGraph};
    use crate::rational::{Budget, Rational};

    fn instance(n: usize, property: Property, ell: usize, comms: &[&[usize]]) -> Instance {
        Instance::new(
            WeightedGraph::complete_unit(n),
            comms.iter().map(|m| Community::new(m.to_vec())).collect(),
            property,
            ell,
            Budget::Infinite,
        )
        .unwrap()
    }

    #[test]
    fn selection_rules() {
        let ins = instance(4, Property::Connectivity, 3, &[&[0, 1, 2, 3]]);
        assert_eq!(auto_select(&ins).0, Algorithm::TreeSupport);

        let ins = instance(4, Property::Stars, 4, &[&[0, 1, 2, 3]]);
        assert_eq!(auto_select(&ins).0, Algorithm::StarsXp);

        // unit weights, stars, c small, t large
        let big = instance(
            8,
            Property::Stars,
            28,
            &[&[0, 1, 2], &[3, 4, 5], &[5, 6, 7]],
        );
        assert_eq!(auto_select(&big).0, Algorithm::StarsFptC);

        // tiny weighted stars instance with big t: brute force wins
        let g = WeightedGraph::new(
            8,
            (0..8)
                .flat_map(|u| (u + 1..8).map(move |v| (u, v)))
                .map(|(u, v)| (u, v, Rational::new(3, 2)))
                .collect(),
        )
        .unwrap();
        let weighted = Instance::new(
            g.clone(),
            vec![
                Community::new(vec![0, 1, 2]),
                Community::new(vec![3, 4, 5]),
                Community::new(vec![5, 6, 7]),
            ],
            Property::Stars,
            28,
            Budget::Infinite,
        )
        .unwrap();
        assert_eq!(auto_select(&weighted).0, Algorithm::Oracle);

        // weighted stars, big t, too big for the oracle: generic branching
        let wide = Instance::new(
            g,
            vec![Community::new(vec![0, 1, 2, 3, 4, 5, 6])],
            Property::Stars,
            16,
            Budget::Infinite,
        )
        .unwrap();
        assert_eq!(wide.relevant_edges().len(), 21);
        assert_eq!(auto_select(&wide).0, Algorithm::BranchEll);
    }
}
