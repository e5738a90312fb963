//! Instance generators built from classic hard problems. Each generator
//! preserves a checkable equivalence to its source problem, which makes
//! them both a test bed for the solvers and a benchmark source.
//!
//! The [`brute`] submodule holds tiny reference deciders for the source
//! problems, used to validate the generated instances end to end.

use std::collections::BTreeSet;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{GenerateError, ParseError};
use crate::graph::{Community, EdgeId, WeightedGraph};
use crate::instance::{Instance, Property};
use crate::rational::{Budget, Rational};

/// Flat key/value pairs for the sidecar metadata file.
pub type Metadata = Vec<(String, String)>;

// ---------------------------------------------------------------------
// 3-SAT
// ---------------------------------------------------------------------

/// A 3-CNF formula. Literals are nonzero integers: `+v` / `-v` for the
/// positive / negative literal of variable `v` (1-based, DIMACS style).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, GenerateError> {
        for clause in &clauses {
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(GenerateError::InvalidParameter(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Parses DIMACS CNF, requiring exactly three literals per clause.
    pub fn parse_dimacs(text: &str) -> Result<Self, ParseError> {
        let mut num_vars = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let mut it = rest.split_whitespace();
                if it.next() != Some("cnf") {
                    return Err(ParseError::new(lineno, "expected: p cnf <vars> <clauses>"));
                }
                let v = it
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError::new(lineno, "bad variable count"))?;
                num_vars = Some(v);
                continue;
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| ParseError::new(lineno, format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    if current.len() != 3 {
                        return Err(ParseError::new(
                            lineno,
                            format!("clause has {} literals, need exactly 3", current.len()),
                        ));
                    }
                    clauses.push([current[0], current[1], current[2]]);
                    current.clear();
                } else {
                    current.push(lit);
                }
            }
        }
        if !current.is_empty() {
            return Err(ParseError::new(0, "unterminated clause"));
        }
        let num_vars = num_vars.ok_or_else(|| ParseError::new(0, "missing p cnf header"))?;
        CnfFormula::new(num_vars, clauses).map_err(|e| ParseError::new(0, e.to_string()))
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }
}

/// Vertex layout of the SAT gadget graph: U, P1, P2 hold the variable
/// gadgets on a sqrt-compressed grid, Y, Z1, Z2, Z3 the clause gadgets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatLayout {
    /// Grid side of the variable gadget: ceil(sqrt(#vars)).
    pub nx: usize,
    /// Grid side of the clause gadget: ceil(sqrt(#clauses)).
    pub nc: usize,
}

impl SatLayout {
    fn new(num_vars: usize, num_clauses: usize) -> Self {
        SatLayout {
            nx: ceil_sqrt(num_vars),
            nc: ceil_sqrt(num_clauses),
        }
    }

    pub fn vertex_count(&self) -> usize {
        3 * self.nx + 4 * self.nc
    }

    pub fn u(&self, j: usize) -> usize {
        j
    }

    pub fn p(&self, half: usize, s: usize) -> usize {
        self.nx + half * self.nx + s
    }

    pub fn y(&self, j: usize) -> usize {
        3 * self.nx + j
    }

    pub fn z(&self, i: usize, s: usize) -> usize {
        3 * self.nx + self.nc + i * self.nc + s
    }

    fn u_all(&self) -> Vec<usize> {
        (0..self.nx).map(|j| self.u(j)).collect()
    }

    fn p_all(&self) -> Vec<usize> {
        (0..2 * self.nx).map(|i| self.nx + i).collect()
    }

    fn y_all(&self) -> Vec<usize> {
        (0..self.nc).map(|j| self.y(j)).collect()
    }

    fn z_all(&self) -> Vec<usize> {
        (0..3 * self.nc)
            .map(|i| 3 * self.nx + self.nc + i)
            .collect()
    }
}

fn ceil_sqrt(v: usize) -> usize {
    if v == 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as usize;
    while r * r < v {
        r += 1;
    }
    while r > 1 && (r - 1) * (r - 1) >= v {
        r -= 1;
    }
    r
}

/// A SAT reduction together with the literal-to-edge maps needed to decode
/// a solver solution back into a satisfying assignment.
#[derive(Clone, Debug)]
pub struct SatReduction {
    pub instance: Instance,
    pub layout: SatLayout,
    /// Per variable: the selection edges of its positive and negative
    /// literal.
    pub selection_edges: Vec<[(usize, usize); 2]>,
    /// Per clause: the free edges of its three literal slots.
    pub free_edges: Vec<[(usize, usize); 3]>,
}

impl SatReduction {
    /// The positive/negative selection edge of a signed literal.
    pub fn selection_edge(&self, lit: i32) -> (usize, usize) {
        let var = lit.unsigned_abs() as usize - 1;
        if lit > 0 {
            self.selection_edges[var][0]
        } else {
            self.selection_edges[var][1]
        }
    }

    /// Reads an assignment off a solution: a variable is true iff the
    /// selection edge of its negative literal was chosen.
    pub fn decode_assignment(&self, edges: &BTreeSet<EdgeId>) -> Vec<bool> {
        let g = self.instance.graph();
        self.selection_edges
            .iter()
            .map(|[_, neg]| {
                g.edge_id(neg.0, neg.1)
                    .is_some_and(|id| edges.contains(&id))
            })
            .collect()
    }

    pub fn metadata(&self) -> Metadata {
        let mut meta = vec![
            ("nx".to_string(), self.layout.nx.to_string()),
            ("nc".to_string(), self.layout.nc.to_string()),
        ];
        for (v, [pos, neg]) in self.selection_edges.iter().enumerate() {
            meta.push((
                format!("selection.x{}", v + 1),
                format!("{} {}", pos.0 + 1, pos.1 + 1),
            ));
            meta.push((
                format!("selection.-x{}", v + 1),
                format!("{} {}", neg.0 + 1, neg.1 + 1),
            ));
        }
        for (q, slots) in self.free_edges.iter().enumerate() {
            for (i, e) in slots.iter().enumerate() {
                meta.push((
                    format!("free.c{}.{}", q + 1, i + 1),
                    format!("{} {}", e.0 + 1, e.1 + 1),
                ));
            }
        }
        meta
    }
}

fn sat_reduction(formula: &CnfFormula, property: Property) -> Result<SatReduction, GenerateError> {
    if formula.clauses.is_empty() {
        return Err(GenerateError::InvalidParameter(
            "formula needs at least one clause".to_string(),
        ));
    }
    if formula.num_vars == 0 {
        return Err(GenerateError::InvalidParameter(
            "formula needs at least one variable".to_string(),
        ));
    }
    let layout = SatLayout::new(formula.num_vars, formula.clauses.len());
    let n = layout.vertex_count();
    let graph = WeightedGraph::complete_unit(n);

    let mut communities: Vec<Community> = Vec::new();
    let mut fixed_edges = 0usize;
    let mut fix_pairs = |communities: &mut Vec<Community>, left: &[usize], right: &[usize]| {
        // left == right fixes a clique, otherwise a biclique
        if left == right {
            for (i, &a) in left.iter().enumerate() {
                for &b in &left[i + 1..] {
                    communities.push(Community::new(vec![a, b]));
                    fixed_edges += 1;
                }
            }
        } else {
            for &a in left {
                for &b in right {
                    communities.push(Community::new(vec![a, b]));
                    fixed_edges += 1;
                }
            }
        }
    };

    let (u_set, p_set, y_set, z_set) = (
        layout.u_all(),
        layout.p_all(),
        layout.y_all(),
        layout.z_all(),
    );
    fix_pairs(&mut communities, &p_set, &p_set);
    fix_pairs(&mut communities, &z_set, &z_set);
    fix_pairs(&mut communities, &u_set, &z_set);
    fix_pairs(&mut communities, &p_set, &y_set);
    if property == Property::Stars {
        fix_pairs(&mut communities, &p_set, &z_set);
    }

    // Variable communities: a triangle whose P-side edge is fixed; the two
    // U-P edges are the positive/negative selection edges.
    let mut selection_edges = Vec::with_capacity(formula.num_vars);
    for v in 0..formula.num_vars {
        let (j, s) = (v / layout.nx, v % layout.nx);
        let (u, p1, p2) = (layout.u(j), layout.p(0, s), layout.p(1, s));
        communities.push(Community::new(vec![u, p1, p2]));
        selection_edges.push([(u, p1), (u, p2)]);
    }

    // Clause communities: a fixed triangle in Z plus three free Y-Z edges,
    // one per literal slot; each pair of free edges gets a community.
    let mut free_edges = Vec::with_capacity(formula.clauses.len());
    for q in 0..formula.clauses.len() {
        let (j, s) = (q / layout.nc, q % layout.nc);
        let y = layout.y(j);
        let z = [layout.z(0, s), layout.z(1, s), layout.z(2, s)];
        communities.push(Community::new(vec![y, z[1], z[2]]));
        communities.push(Community::new(vec![y, z[0], z[2]]));
        communities.push(Community::new(vec![y, z[0], z[1]]));
        free_edges.push([(y, z[0]), (y, z[1]), (y, z[2])]);
    }

    // Assignment communities tie each literal's free edge to the selection
    // edge of the opposite literal.
    for (q, clause) in formula.clauses.iter().enumerate() {
        for (i, &lit) in clause.iter().enumerate() {
            let free = free_edges[q][i];
            let var = lit.unsigned_abs() as usize - 1;
            let opposite = if lit > 0 {
                selection_edges[var][1]
            } else {
                selection_edges[var][0]
            };
            communities.push(Community::new(vec![free.0, free.1, opposite.0, opposite.1]));
        }
    }

    let ell = formula.num_vars + 2 * formula.clauses.len() + fixed_edges;
    let instance = Instance::new(graph, communities, property, ell, Budget::Infinite)
        .expect("gadget instance is well formed");
    Ok(SatReduction {
        instance,
        layout,
        selection_edges,
        free_edges,
    })
}

/// Stars instance that is solvable iff the formula is satisfiable. The
/// graph is a clique with unit weights and every community has size at
/// most 4.
pub fn from_3sat_stars(formula: &CnfFormula) -> Result<SatReduction, GenerateError> {
    sat_reduction(formula, Property::Stars)
}

/// Connectivity variant: the P-Z edges are no longer fixed and the edge
/// budget drops by |P|*|Z|.
pub fn from_3sat_connectivity(formula: &CnfFormula) -> Result<SatReduction, GenerateError> {
    sat_reduction(formula, Property::Connectivity)
}

// ---------------------------------------------------------------------
// Hamiltonian Cycle
// ---------------------------------------------------------------------

/// Connectivity instance with one community V \ {v} per vertex and
/// ell = |V|: solvable iff the graph has a Hamiltonian cycle. The
/// resulting instances have t = 1 exactly.
pub fn from_hamiltonian_cycle(graph: &WeightedGraph) -> Result<Instance, GenerateError> {
    let n = graph.vertex_count();
    if n < 3 {
        return Err(GenerateError::InvalidParameter(
            "Hamiltonian cycle reduction needs at least 3 vertices".to_string(),
        ));
    }
    let edges = graph
        .edges()
        .iter()
        .map(|e| (e.u, e.v, Rational::one()))
        .collect();
    let unit = WeightedGraph::new(n, edges).expect("copy of a valid graph");
    let communities = (0..n)
        .map(|v| Community::new((0..n).filter(|&w| w != v).collect()))
        .collect();
    Ok(Instance::new(
        unit,
        communities,
        Property::Connectivity,
        n,
        Budget::Infinite,
    )
    .expect("reduction instance is well formed"))
}

// ---------------------------------------------------------------------
// Hitting Set
// ---------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetInstance {
    pub universe: usize,
    pub sets: Vec<BTreeSet<usize>>,
    pub k: usize,
}

impl HittingSetInstance {
    pub fn new(
        universe: usize,
        sets: Vec<BTreeSet<usize>>,
        k: usize,
    ) -> Result<Self, GenerateError> {
        if universe < 2 {
            return Err(GenerateError::InvalidParameter(
                "hitting set reduction needs |U| >= 2".to_string(),
            ));
        }
        for s in &sets {
            if s.is_empty() {
                return Err(GenerateError::InvalidParameter("empty set".to_string()));
            }
            if s.iter().any(|&e| e >= universe) {
                return Err(GenerateError::InvalidParameter(
                    "set element outside the universe".to_string(),
                ));
            }
        }
        Ok(HittingSetInstance { universe, sets, k })
    }
}

/// Stars instance on a clique U plus an independent padding set Z of size
/// |U|^3 joined completely to U; one community F ∪ Z per family set and
/// ell = k * |U|^3 + |U|^2. Solvable iff a hitting set of size <= k exists.
pub fn from_hitting_set(hs: &HittingSetInstance) -> Result<Instance, GenerateError> {
    let u = hs.universe;
    let z_size = u * u * u;
    let n = u + z_size;
    let mut edges = Vec::new();
    for a in 0..u {
        for b in a + 1..u {
            edges.push((a, b, Rational::one()));
        }
        for z in u..n {
            edges.push((a, z, Rational::one()));
        }
    }
    let graph = WeightedGraph::new(n, edges).expect("hitting set graph is valid");
    let communities = hs
        .sets
        .iter()
        .map(|f| {
            let mut members: Vec<usize> = f.iter().copied().collect();
            members.extend(u..n);
            Community::new(members)
        })
        .collect();
    let ell = hs.k * z_size + u * u;
    Ok(
        Instance::new(graph, communities, Property::Stars, ell, Budget::Infinite)
            .expect("reduction instance is well formed"),
    )
}

// ---------------------------------------------------------------------
// Multicolored Clique
// ---------------------------------------------------------------------

/// Result of the multicolored clique reduction. The paper pads each color
/// class with n^3 extra vertices; smaller paddings keep the instance
/// oracle-sized but only paddings with `guaranteed` set carry the proof's
/// equivalence argument.
#[derive(Clone, Debug)]
pub struct McReduction {
    pub instance: Instance,
    pub padding: usize,
    /// padding > kappa * (n + r), the inequality the correctness argument
    /// needs.
    pub guaranteed: bool,
}

impl McReduction {
    pub fn metadata(&self) -> Metadata {
        vec![
            ("padding".to_string(), self.padding.to_string()),
            ("guaranteed".to_string(), self.guaranteed.to_string()),
        ]
    }
}

/// Weighted Stars instance from an r-regular graph with a color partition:
/// a clique over V(G) plus one padding set S_i per color, community
/// C_i = V(G) ∪ S_i, weights 1 or 2. Solvable within the budgets iff the
/// source has a clique with one vertex per color.
pub fn from_multicolored_clique(
    graph: &WeightedGraph,
    colors: &[Vec<usize>],
    padding_override: Option<usize>,
) -> Result<McReduction, GenerateError> {
    let n = graph.vertex_count();
    if n == 0 || colors.is_empty() {
        return Err(GenerateError::InvalidParameter(
            "need vertices and at least one color class".to_string(),
        ));
    }
    let mut degree = vec![0usize; n];
    for e in graph.edges() {
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let r = degree[0];
    if let Some(bad) = (0..n).find(|&v| degree[v] != r) {
        return Err(GenerateError::NotRegular(0, r, bad, degree[bad]));
    }
    let mut color_of = vec![usize::MAX; n];
    for (ci, class) in colors.iter().enumerate() {
        for &v in class {
            if v >= n || color_of[v] != usize::MAX {
                return Err(GenerateError::InvalidParameter(
                    "color classes must partition the vertex set".to_string(),
                ));
            }
            color_of[v] = ci;
        }
    }
    if color_of.contains(&usize::MAX) {
        return Err(GenerateError::InvalidParameter(
            "color classes must partition the vertex set".to_string(),
        ));
    }
    let kappa = colors.len();
    let padding = padding_override.unwrap_or(n * n * n);
    if padding == 0 {
        return Err(GenerateError::InvalidParameter(
            "padding must be positive".to_string(),
        ));
    }
    let total = n + kappa * padding;
    // S_i occupies n + i*padding .. n + (i+1)*padding
    let set_of = |v: usize| -> Option<usize> {
        if v < n {
            None
        } else {
            Some((v - n) / padding)
        }
    };
    let two = Rational::from_integer(2);
    let mut edges = Vec::with_capacity(total * (total - 1) / 2);
    for a in 0..total {
        for b in a + 1..total {
            let w = match (set_of(a), set_of(b)) {
                (None, None) => {
                    if graph.has_edge(a, b) {
                        two.clone()
                    } else {
                        Rational::one()
                    }
                }
                (Some(_), Some(_)) => two.clone(),
                (Some(i), None) | (None, Some(i)) => {
                    let orig = if a < n { a } else { b };
                    if color_of[orig] == i {
                        Rational::one()
                    } else {
                        two.clone()
                    }
                }
            };
            edges.push((a, b, w));
        }
    }
    let gprime = WeightedGraph::new(total, edges).expect("clique is valid");
    let communities = (0..kappa)
        .map(|i| {
            let mut members: Vec<usize> = (0..n).collect();
            members.extend(n + i * padding..n + (i + 1) * padding);
            Community::new(members)
        })
        .collect();
    let pairs = kappa * (kappa - 1) / 2;
    let ell = kappa * (padding + n - 1) - pairs;
    let b = kappa * (padding + n - 1 + r) - 2 * pairs;
    let instance = Instance::new(
        gprime,
        communities,
        Property::Stars,
        ell,
        Budget::Finite(Rational::from_integer(b as i64)),
    )
    .expect("reduction instance is well formed");
    Ok(McReduction {
        instance,
        padding,
        guaranteed: padding > kappa * (n + r),
    })
}

// ---------------------------------------------------------------------
// Independent Set via clique (Du-Miller style)
// ---------------------------------------------------------------------

/// Unweighted Connectivity instance on a clique V(G) ∪ {x}: a community
/// per vertex pair and a community {u, v, x} per edge, with budget
/// C(n,2) + n - k. Solvable iff the source graph has an independent set
/// of size >= k.
pub fn from_vertex_cover_clique(
    graph: &WeightedGraph,
    k: usize,
) -> Result<Instance, GenerateError> {
    let n = graph.vertex_count();
    if k > n {
        return Err(GenerateError::InvalidParameter(format!(
            "independent set target {k} exceeds {n} vertices"
        )));
    }
    let x = n;
    let clique = WeightedGraph::complete_unit(n + 1);
    let mut communities = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            communities.push(Community::new(vec![u, v]));
        }
    }
    for e in graph.edges() {
        communities.push(Community::new(vec![e.u, e.v, x]));
    }
    let ell = n * (n.saturating_sub(1)) / 2 + n - k;
    Ok(Instance::new(
        clique,
        communities,
        Property::Connectivity,
        ell,
        Budget::Infinite,
    )
    .expect("reduction instance is well formed"))
}

// ---------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RandomParams {
    pub n: usize,
    pub edge_prob: f64,
    pub community_count: usize,
    pub size_range: (usize, usize),
    /// Integer weights drawn uniformly from this inclusive range.
    pub weight_range: (u32, u32),
    pub property: Property,
}

const COMMUNITY_RETRY_CAP: usize = 200;

/// Seeded random instance. For the stars property, communities are
/// resampled until they have a universal vertex in the sampled graph; the
/// edge budget is drawn uniformly from 0..=m and the weight budget is
/// either unbounded or a uniform fraction of the total weight.
pub fn random_instance(params: &RandomParams, seed: u64) -> Result<Instance, GenerateError> {
    if params.n == 0
        || params.community_count == 0
        || params.size_range.0 == 0
        || params.size_range.0 > params.size_range.1
        || params.weight_range.0 == 0
        || params.weight_range.0 > params.weight_range.1
        || !(0.0..=1.0).contains(&params.edge_prob)
    {
        return Err(GenerateError::InvalidParameter(format!(
            "bad random parameters: {params:?}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..params.n {
        for v in u + 1..params.n {
            if rng.gen_bool(params.edge_prob) {
                let w = rng.gen_range(params.weight_range.0..=params.weight_range.1);
                edges.push((u, v, Rational::from_integer(w as i64)));
            }
        }
    }
    let graph = WeightedGraph::new(params.n, edges).expect("sampled graph is valid");
    let mut communities = Vec::with_capacity(params.community_count);
    for _ in 0..params.community_count {
        let mut found = false;
        for _ in 0..COMMUNITY_RETRY_CAP {
            let size = rng
                .gen_range(params.size_range.0..=params.size_range.1)
                .min(params.n);
            let members = rand::seq::index::sample(&mut rng, params.n, size).into_vec();
            let community = Community::new(members);
            if params.property == Property::Stars
                && crate::graph::universal_in_graph(&graph, &community).is_empty()
            {
                continue;
            }
            communities.push(community);
            found = true;
            break;
        }
        if !found {
            return Err(GenerateError::GenerationFailed(COMMUNITY_RETRY_CAP));
        }
    }
    let m = graph.edge_count();
    let ell = rng.gen_range(0..=m);
    let budget = if rng.gen_bool(0.5) {
        Budget::Infinite
    } else {
        let total: i64 = graph
            .edges()
            .iter()
            .map(|e| e.weight.floor_int())
            .map(|b| i64::try_from(b).unwrap_or(i64::MAX))
            .sum();
        Budget::Finite(Rational::from_integer(rng.gen_range(1..=total.max(1))))
    };
    Ok(
        Instance::new(graph, communities, params.property, ell, budget)
            .expect("sampled instance is well formed"),
    )
}

// ---------------------------------------------------------------------
// Reference deciders for the source problems
// ---------------------------------------------------------------------

/// Small brute-force deciders for the source problems; the generators
/// never consult them, so they can serve as independent ground truth.
pub mod brute {
    use super::*;

    pub fn satisfiable(formula: &CnfFormula) -> bool {
        let n = formula.num_vars;
        (0..1u64 << n).any(|bits| {
            let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            formula.is_satisfied_by(&assignment)
        })
    }

    pub fn has_hamiltonian_cycle(graph: &WeightedGraph) -> bool {
        let n = graph.vertex_count();
        if n < 3 {
            return false;
        }
        // Fix vertex 0 and try all orders of the rest.
        let mut rest: Vec<usize> = (1..n).collect();
        permutations(&mut rest, 0, &mut |perm| {
            let mut prev = 0;
            for &v in perm.iter() {
                if !graph.has_edge(prev, v) {
                    return false;
                }
                prev = v;
            }
            graph.has_edge(prev, 0)
        })
    }

    fn permutations(
        items: &mut Vec<usize>,
        at: usize,
        check: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if at == items.len() {
            return check(items);
        }
        for i in at..items.len() {
            items.swap(at, i);
            if permutations(items, at + 1, check) {
                items.swap(at, i);
                return true;
            }
            items.swap(at, i);
        }
        false
    }

    pub fn has_hitting_set(hs: &HittingSetInstance) -> bool {
        let u = hs.universe;
        (0..1u64 << u).any(|bits| {
            if (bits.count_ones() as usize) > hs.k {
                return false;
            }
            hs.sets
                .iter()
                .all(|s| s.iter().any(|&e| bits >> e & 1 == 1))
        })
    }

    pub fn has_independent_set(graph: &WeightedGraph, k: usize) -> bool {
        let n = graph.vertex_count();
        if k == 0 {
            return true;
        }
        if k > n {
            return false;
        }
        (0..1u64 << n).any(|bits| {
            if (bits.count_ones() as usize) != k {
                return false;
            }
            let chosen: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
            chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| !graph.has_edge(a, b)))
        })
    }

    pub fn has_multicolored_clique(graph: &WeightedGraph, colors: &[Vec<usize>]) -> bool {
        fn go(graph: &WeightedGraph, colors: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
            let Some(class) = colors.first() else {
                return true;
            };
            for &v in class {
                if chosen.iter().all(|&u| graph.has_edge(u, v)) {
                    chosen.push(v);
                    if go(graph, &colors[1..], chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(graph, colors, &mut Vec::new())
    }
}
