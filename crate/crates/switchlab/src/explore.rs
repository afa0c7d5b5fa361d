//! Exhaustive enumeration of the labeled realizations of a degree vector,
//! the realization graph they span under single 2-switch moves, and the
//! small constructions showing that the bipartite and non-bipartite
//! induced subgraphs need not be connected.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, DegreeVector, EdgeMask, GraphError, LabeledGraph};
use crate::switch::{apply_assume_valid, enumerate_switches};

/// Abort threshold for realization enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 2_000_000;

/// Components larger than this skip the exact diameter computation in
/// [`connectivity`] reports.
const DIAMETER_LIMIT: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExploreError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("enumeration budget of {budget} realizations exceeded")]
    BudgetExceeded { budget: usize },
    #[error("graph is not a realization in this realization graph")]
    NotAVertex,
    #[error("unknown filter {0:?}")]
    UnknownFilter(String),
    #[error("unknown counterexample family {0:?}")]
    UnknownFamily(String),
    #[error("parameter {parameter} below the minimum {minimum} for family {family}")]
    ParameterTooSmall {
        family: &'static str,
        parameter: usize,
        minimum: usize,
    },
}

/// Structural predicate restricting a realization set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    All,
    Forest,
    Connected,
    Unicyclic,
    Pseudoforest,
    Bipartite,
    NonBipartite,
}

impl Filter {
    pub fn matches(&self, g: &LabeledGraph) -> bool {
        match self {
            Filter::All => true,
            Filter::Forest => g.is_forest(),
            Filter::Connected => g.is_connected(),
            Filter::Unicyclic => g.is_unicyclic(),
            Filter::Pseudoforest => g.is_pseudoforest(),
            Filter::Bipartite => g.is_bipartite(),
            Filter::NonBipartite => !g.is_bipartite(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Forest => "forest",
            Filter::Connected => "connected",
            Filter::Unicyclic => "unicyclic",
            Filter::Pseudoforest => "pseudoforest",
            Filter::Bipartite => "bipartite",
            Filter::NonBipartite => "nonbipartite",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = ExploreError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Filter::All),
            "forest" => Ok(Filter::Forest),
            "connected" => Ok(Filter::Connected),
            "unicyclic" => Ok(Filter::Unicyclic),
            "pseudoforest" => Ok(Filter::Pseudoforest),
            "bipartite" => Ok(Filter::Bipartite),
            "nonbipartite" | "non-bipartite" => Ok(Filter::NonBipartite),
            other => Err(ExploreError::UnknownFilter(other.to_string())),
        }
    }
}

/// All labeled graphs on `{0..n}` with exactly the degree vector `d` that
/// satisfy `filter`, by backtracking over vertex slots with degree-residual
/// pruning. Output is sorted by packed edge bitmask; an empty result is not
/// an error.
pub fn enumerate_realizations(
    d: &DegreeVector,
    filter: Filter,
) -> Result<Vec<LabeledGraph>, ExploreError> {
    enumerate_realizations_with_budget(d, filter, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_realizations_with_budget(
    d: &DegreeVector,
    filter: Filter,
    budget: usize,
) -> Result<Vec<LabeledGraph>, ExploreError> {
    let n = d.len();
    let mut residual = [0usize; crate::MAX_VERTICES];
    for v in 0..n {
        residual[v] = d.get(v);
    }
    let mut out = Vec::new();
    let mut g = LabeledGraph::empty(n)?;
    enumerate_rec(0, n, &mut residual, &mut g, filter, budget, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn enumerate_rec(
    u: usize,
    n: usize,
    residual: &mut [usize; crate::MAX_VERTICES],
    g: &mut LabeledGraph,
    filter: Filter,
    budget: usize,
    out: &mut Vec<LabeledGraph>,
) -> Result<(), ExploreError> {
    if u == n {
        debug_assert!(residual[..n].iter().all(|&r| r == 0));
        if filter.matches(g) {
            if out.len() >= budget {
                return Err(ExploreError::BudgetExceeded { budget });
            }
            out.push(*g);
        }
        return Ok(());
    }
    // Edges toward vertices below u are fixed; connect the remaining demand
    // of u into {u+1, .., n-1}.
    let need = residual[u];
    let candidates: Vec<usize> = (u + 1..n).filter(|&v| residual[v] > 0).collect();
    if need > candidates.len() {
        return Ok(());
    }
    choose_rec(u, need, 0, &candidates, n, residual, g, filter, budget, out)
}

#[allow(clippy::too_many_arguments)]
fn choose_rec(
    u: usize,
    need: usize,
    from: usize,
    candidates: &[usize],
    n: usize,
    residual: &mut [usize; crate::MAX_VERTICES],
    g: &mut LabeledGraph,
    filter: Filter,
    budget: usize,
    out: &mut Vec<LabeledGraph>,
) -> Result<(), ExploreError> {
    if need == 0 {
        let saved = residual[u];
        residual[u] = 0;
        let r = enumerate_rec(u + 1, n, residual, g, filter, budget, out);
        residual[u] = saved;
        return r;
    }
    for i in from..candidates.len() {
        if candidates.len() - i < need {
            break;
        }
        let v = candidates[i];
        residual[v] -= 1;
        *g = g.with_edge(u, v);
        choose_rec(u, need - 1, i + 1, candidates, n, residual, g, filter, budget, out)?;
        *g = g.without_edge(u, v);
        residual[v] += 1;
    }
    Ok(())
}

/// All graphs on `{0..n}` satisfying `filter`, by a pruned search over the
/// edge slots in lexicographic order. Intended for the exhaustive
/// verification sweeps at desk scale; the forest/pseudoforest/unicyclic
/// filters prune during the search, the rest filter afterwards.
pub fn enumerate_all_graphs(n: usize, filter: Filter) -> Vec<LabeledGraph> {
    let mut out = Vec::new();
    enumerate_all_graphs_with(n, filter, |g| out.push(*g));
    out.sort_unstable();
    out
}

/// Streaming form of [`enumerate_all_graphs`]: `visit` is called once per
/// graph, in search order (not sorted). Lets desk-scale sweeps over
/// millions of graphs keep only a compact encoding.
pub fn enumerate_all_graphs_with(n: usize, filter: Filter, visit: impl FnMut(&LabeledGraph)) {
    assert!(n >= 1 && n <= 16, "exhaustive sweeps are desk-scale");
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut search = AllGraphSearch {
        slots,
        filter,
        prune_cycles: matches!(
            filter,
            Filter::Forest | Filter::Pseudoforest | Filter::Unicyclic
        ),
        forests_only: filter == Filter::Forest,
        g: LabeledGraph::empty(n).unwrap(),
        parent: (0..n).collect(),
        cyclic: vec![false; n],
        visit,
    };
    search.run(0);
}

/// Edge-slot DFS with a rollback union-find tracking one cycle flag per
/// component root.
struct AllGraphSearch<F: FnMut(&LabeledGraph)> {
    slots: Vec<(usize, usize)>,
    filter: Filter,
    prune_cycles: bool,
    forests_only: bool,
    g: LabeledGraph,
    parent: Vec<usize>,
    cyclic: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&LabeledGraph)> AllGraphSearch<F> {
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn run(&mut self, i: usize) {
        if i == self.slots.len() {
            if self.filter.matches(&self.g) {
                (self.visit)(&self.g);
            }
            return;
        }
        self.run(i + 1); // slot left empty

        let (u, v) = self.slots[i];
        let (ru, rv) = (self.find(u), self.find(v));
        if self.prune_cycles {
            if ru == rv {
                if self.forests_only || self.cyclic[ru] {
                    return;
                }
            } else if self.cyclic[ru] && self.cyclic[rv] {
                return;
            }
        }
        self.g = self.g.with_edge(u, v);
        if ru == rv {
            let was = self.cyclic[ru];
            self.cyclic[ru] = true;
            self.run(i + 1);
            self.cyclic[ru] = was;
        } else {
            // Attach rv under ru; restored on exit.
            let merged = self.cyclic[ru] || self.cyclic[rv];
            let (was_ru, was_rv) = (self.cyclic[ru], self.cyclic[rv]);
            self.parent[rv] = ru;
            self.cyclic[ru] = merged;
            self.run(i + 1);
            self.parent[rv] = rv;
            self.cyclic[ru] = was_ru;
            self.cyclic[rv] = was_rv;
        }
        self.g = self.g.without_edge(u, v);
    }
}

/// The realization graph of a degree vector under a structural filter:
/// vertices are the filtered realizations (canonical edge-bitmask order),
/// edges join realizations one valid 2-switch apart.
#[derive(Clone, Debug)]
pub struct RealizationGraph {
    degree: DegreeVector,
    filter: Filter,
    vertices: Vec<LabeledGraph>,
    index: HashMap<EdgeMask, usize>,
    adjacency: Vec<Vec<u32>>,
}

impl RealizationGraph {
    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[LabeledGraph] {
        &self.vertices
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adjacency[i]
    }

    /// Index of a realization, if it is a vertex here.
    pub fn vertex_index(&self, g: &LabeledGraph) -> Option<usize> {
        if g.order() != self.degree.len() {
            return None;
        }
        self.index.get(&g.edge_mask()).copied()
    }

    /// Number of realization-graph edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Builds the filtered realization graph of `d`.
pub fn build_realization_graph(
    d: &DegreeVector,
    filter: Filter,
) -> Result<RealizationGraph, ExploreError> {
    build_realization_graph_with_budget(d, filter, DEFAULT_ENUMERATION_BUDGET)
}

pub fn build_realization_graph_with_budget(
    d: &DegreeVector,
    filter: Filter,
    budget: usize,
) -> Result<RealizationGraph, ExploreError> {
    let vertices = enumerate_realizations_with_budget(d, filter, budget)?;
    Ok(realization_graph_from_members(d.clone(), filter, vertices))
}

/// Assembles the adjacency structure over an already-enumerated, complete
/// realization list.
pub(crate) fn realization_graph_from_members(
    degree: DegreeVector,
    filter: Filter,
    vertices: Vec<LabeledGraph>,
) -> RealizationGraph {
    let index: HashMap<EdgeMask, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, g)| (g.edge_mask(), i))
        .collect();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for (i, g) in vertices.iter().enumerate() {
        for t in enumerate_switches(g) {
            let img = apply_assume_valid(g, t);
            // Same degree vector by construction; membership is exactly the
            // filter predicate since the vertex list is complete.
            if let Some(&j) = index.get(&img.edge_mask()) {
                adjacency[i].push(j as u32);
            }
        }
        adjacency[i].sort_unstable();
    }
    RealizationGraph {
        degree,
        filter,
        vertices,
        index,
        adjacency,
    }
}

/// Component census of a realization graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExplorationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// Component sizes, descending.
    pub component_sizes: Vec<usize>,
    /// Exact diameter of the largest component; omitted for components
    /// larger than a fixed threshold.
    pub diameter_of_largest: Option<usize>,
}

pub fn connectivity(rg: &RealizationGraph) -> ExplorationReport {
    let n = rg.len();
    let mut comp = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut queue = vec![start];
        comp[start] = id;
        let mut size = 0;
        while let Some(v) = queue.pop() {
            size += 1;
            order.push(v);
            for &w in rg.neighbors(v) {
                let w = w as usize;
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    queue.push(w);
                }
            }
        }
        sizes.push(size);
    }
    let mut component_sizes = sizes.clone();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let diameter_of_largest = if n == 0 {
        None
    } else {
        let largest = component_sizes[0];
        if largest > DIAMETER_LIMIT {
            None
        } else {
            let big_id = sizes.iter().position(|&s| s == largest).unwrap();
            let members: Vec<usize> = (0..n).filter(|&v| comp[v] == big_id).collect();
            let mut best = 0;
            let mut dist = vec![usize::MAX; n];
            for &src in &members {
                for &m in &members {
                    dist[m] = usize::MAX;
                }
                dist[src] = 0;
                let mut queue = std::collections::VecDeque::from([src]);
                while let Some(v) = queue.pop_front() {
                    for &w in rg.neighbors(v) {
                        let w = w as usize;
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            best = best.max(dist[w]);
                            queue.push_back(w);
                        }
                    }
                }
            }
            Some(best)
        }
    };
    ExplorationReport {
        vertex_count: n,
        edge_count: rg.edge_count(),
        component_count: sizes.len(),
        component_sizes,
        diameter_of_largest,
    }
}

/// Shortest switch distance between two realizations inside the filtered
/// realization graph; `Ok(None)` when they lie in different components.
pub fn distance(
    rg: &RealizationGraph,
    g: &LabeledGraph,
    h: &LabeledGraph,
) -> Result<Option<usize>, ExploreError> {
    let s = rg.vertex_index(g).ok_or(ExploreError::NotAVertex)?;
    let t = rg.vertex_index(h).ok_or(ExploreError::NotAVertex)?;
    if s == t {
        return Ok(Some(0));
    }
    let mut dist = vec![usize::MAX; rg.len()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in rg.neighbors(v) {
            let w = w as usize;
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if w == t {
                    return Ok(Some(dist[w]));
                }
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// The four small families separating bipartite/non-bipartite realization
/// classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CounterexampleKind {
    /// Complete bipartite `K_{n,n}` plus two leaves at distance 3 (one per
    /// part). Every switch image is non-bipartite or isomorphic to it.
    B,
    /// `K_{n,n}` plus two leaves at distance 4 (both in one part).
    BPrime,
    /// Triangle plus a star of order `k`. Every switch image is a tree.
    N,
    /// Path of order 3 plus a triangle with `k-3` pendant leaves on one
    /// vertex.
    NPrime,
}

impl FromStr for CounterexampleKind {
    type Err = ExploreError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(CounterexampleKind::B),
            "bprime" | "b'" | "b-prime" => Ok(CounterexampleKind::BPrime),
            "n" => Ok(CounterexampleKind::N),
            "nprime" | "n'" | "n-prime" => Ok(CounterexampleKind::NPrime),
            other => Err(ExploreError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for CounterexampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CounterexampleKind::B => "B",
            CounterexampleKind::BPrime => "Bprime",
            CounterexampleKind::N => "N",
            CounterexampleKind::NPrime => "Nprime",
        })
    }
}

/// Builds one of the counterexample graphs with a fixed deterministic
/// labeling. The `B`/`BPrime` pair shares the degree vector
/// `(n+1, n+1, n, .., n, 1, 1)`; the `N`/`NPrime` pair shares
/// `(2, 2, 2, k-1, 1, .., 1)`.
pub fn construct_counterexample(
    kind: CounterexampleKind,
    parameter: usize,
) -> Result<LabeledGraph, ExploreError> {
    match kind {
        CounterexampleKind::B | CounterexampleKind::BPrime => {
            let n = parameter;
            if n < 3 {
                return Err(ExploreError::ParameterTooSmall {
                    family: "B",
                    parameter: n,
                    minimum: 3,
                });
            }
            let order = 2 * n + 2;
            let mut edges = Vec::new();
            // Vertices 0 and 1 are the degree-(n+1) vertices carrying the
            // leaves 2n and 2n+1.
            let (part_x, part_y): (Vec<usize>, Vec<usize>) = match kind {
                // Leaves in different parts: distance 3.
                CounterexampleKind::B => (
                    std::iter::once(0).chain(2..n + 1).collect(),
                    std::iter::once(1).chain(n + 1..2 * n).collect(),
                ),
                // Leaves in the same part: distance 4.
                _ => ((0..n).collect(), (n..2 * n).collect()),
            };
            for &x in &part_x {
                for &y in &part_y {
                    edges.push((x, y));
                }
            }
            edges.push((0, 2 * n));
            edges.push((1, 2 * n + 1));
            Ok(LabeledGraph::new(order, &edges)?)
        }
        CounterexampleKind::N => {
            let k = parameter;
            if k < 4 {
                return Err(ExploreError::ParameterTooSmall {
                    family: "N",
                    parameter: k,
                    minimum: 4,
                });
            }
            let order = k + 3;
            let mut edges = vec![(0, 1), (0, 2), (1, 2)];
            for leaf in 4..k + 3 {
                edges.push((3, leaf));
            }
            Ok(LabeledGraph::new(order, &edges)?)
        }
        CounterexampleKind::NPrime => {
            let k = parameter;
            if k < 4 {
                return Err(ExploreError::ParameterTooSmall {
                    family: "Nprime",
                    parameter: k,
                    minimum: 4,
                });
            }
            let order = k + 3;
            // Triangle {0, 1, 3} so that vertex 3 keeps the high degree,
            // pendant leaves 4..k on vertex 3, and the path (k+1, 2, k+2).
            let mut edges = vec![(0, 1), (0, 3), (1, 3)];
            for leaf in 4..k + 1 {
                edges.push((3, leaf));
            }
            edges.push((2, k + 1));
            edges.push((2, k + 2));
            Ok(LabeledGraph::new(order, &edges)?)
        }
    }
}

/// Exact isomorphism test by degree-partition-guided backtracking; meant
/// for desk-scale graphs.
pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let n = g.order();
    let dg = g.degree_vector();
    let dh = h.degree_vector();
    if dg.sorted_desc() != dh.sorted_desc() {
        return false;
    }
    // Sorted neighbor-degree signatures must match as multisets.
    let sig = |gr: &LabeledGraph, v: usize| -> Vec<usize> {
        let mut s: Vec<usize> = gr.neighbors(v).map(|w| gr.degree(w)).collect();
        s.sort_unstable();
        s
    };
    let mut sg: Vec<Vec<usize>> = (0..n).map(|v| sig(g, v)).collect();
    let mut sh: Vec<Vec<usize>> = (0..n).map(|v| sig(h, v)).collect();
    sg.sort();
    sh.sort();
    if sg != sh {
        return false;
    }

    // Map vertices of g in decreasing-degree order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));

    fn extend(
        depth: usize,
        order: &[usize],
        g: &LabeledGraph,
        h: &LabeledGraph,
        map: &mut [usize],
        used: &mut u32,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let gu = order[depth];
        for hv in h.vertices() {
            if *used & bit(hv) != 0 || h.degree(hv) != g.degree(gu) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&gw| {
                g.has_edge(gu, gw) == h.has_edge(hv, map[gw])
            });
            if !consistent {
                continue;
            }
            map[gu] = hv;
            *used |= bit(hv);
            if extend(depth + 1, order, g, h, map, used) {
                return true;
            }
            *used &= !bit(hv);
        }
        false
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    extend(0, &order, g, h, &mut map, &mut used)
}

/// DOT rendering of a realization graph; vertex labels are the canonical
/// edge lists.
pub fn realization_dot_string(rg: &RealizationGraph) -> String {
    let mut out = String::from("graph realizations {\n");
    for (i, g) in rg.vertices().iter().enumerate() {
        let label: Vec<String> = g
            .edges()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        out.push_str(&format!("  r{} [label=\"{}\"];\n", i, label.join(" ")));
    }
    for (i, nbrs) in rg.adjacency.iter().enumerate() {
        for &j in nbrs {
            if (j as usize) > i {
                out.push_str(&format!("  r{} -- r{};\n", i, j));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(d: &[usize]) -> DegreeVector {
        DegreeVector::new(d.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_perfect_matchings() {
        let gs = enumerate_realizations(&dv(&[1, 1, 1, 1]), Filter::All).unwrap();
        assert_eq!(gs.len(), 3);
        let expect: Vec<LabeledGraph> = [
            vec![(0, 1), (2, 3)],
            vec![(0, 2), (1, 3)],
            vec![(0, 3), (1, 2)],
        ]
        .iter()
        .map(|e| LabeledGraph::new(4, e).unwrap())
        .collect();
        for e in &expect {
            assert!(gs.contains(e));
        }
    }

    #[test]
    fn enumerate_with_filters() {
        // Only realization of (2,2,2) is the triangle; no forest exists.
        assert!(enumerate_realizations(&dv(&[2, 2, 2]), Filter::Forest)
            .unwrap()
            .is_empty());
        assert_eq!(
            enumerate_realizations(&dv(&[2, 2, 2]), Filter::All)
                .unwrap()
                .len(),
            1
        );
        // The bipartite class of the leaf-decorated K_{3,3} contains both
        // counterexample labelings.
        let b = construct_counterexample(CounterexampleKind::B, 3).unwrap();
        let bp = construct_counterexample(CounterexampleKind::BPrime, 3).unwrap();
        assert_eq!(b.degree_vector(), bp.degree_vector());
        let class = enumerate_realizations(&b.degree_vector(), Filter::Bipartite).unwrap();
        assert!(class.contains(&b) && class.contains(&bp));
    }

    #[test]
    fn budget_is_enforced() {
        let d = dv(&[3, 3, 3, 3, 3, 3, 3, 3]);
        assert_eq!(
            enumerate_realizations_with_budget(&d, Filter::All, 10),
            Err(ExploreError::BudgetExceeded { budget: 10 })
        );
    }

    #[test]
    fn matching_realization_graph_is_triangle() {
        let rg = build_realization_graph(&dv(&[1, 1, 1, 1]), Filter::All).unwrap();
        assert_eq!(rg.len(), 3);
        assert_eq!(rg.edge_count(), 3);
        let report = connectivity(&rg);
        assert_eq!(report.component_count, 1);
        assert_eq!(report.component_sizes, vec![3]);
        assert_eq!(report.diameter_of_largest, Some(1));
    }

    #[test]
    fn distances_in_matching_class() {
        let rg = build_realization_graph(&dv(&[1, 1, 1, 1]), Filter::All).unwrap();
        let a = LabeledGraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let b = LabeledGraph::new(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(distance(&rg, &a, &a).unwrap(), Some(0));
        assert_eq!(distance(&rg, &a, &b).unwrap(), Some(1));
        let stranger = LabeledGraph::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(distance(&rg, &a, &stranger), Err(ExploreError::NotAVertex));
    }

    #[test]
    fn counterexample_degree_vectors() {
        let b3 = construct_counterexample(CounterexampleKind::B, 3).unwrap();
        assert_eq!(b3.degree_vector().as_slice(), &[4, 4, 3, 3, 3, 3, 1, 1]);
        assert!(b3.is_bipartite());
        // The leaves sit at distance 3 in B and 4 in Bprime.
        let bp3 = construct_counterexample(CounterexampleKind::BPrime, 3).unwrap();
        assert_eq!(b3.degree_vector(), bp3.degree_vector());
        assert!(!are_isomorphic(&b3, &bp3));

        let n4 = construct_counterexample(CounterexampleKind::N, 4).unwrap();
        assert_eq!(n4.degree_vector().as_slice(), &[2, 2, 2, 3, 1, 1, 1]);
        let mut sorted = n4.degree_vector().sorted_desc();
        sorted.dedup();
        assert_eq!(sorted, vec![3, 2, 1]);
        let n4p = construct_counterexample(CounterexampleKind::NPrime, 4).unwrap();
        assert_eq!(n4.degree_vector(), n4p.degree_vector());
        assert!(!are_isomorphic(&n4, &n4p));
        assert!(!n4.is_bipartite() && !n4p.is_bipartite());

        assert!(construct_counterexample(CounterexampleKind::B, 2).is_err());
        assert!(construct_counterexample(CounterexampleKind::N, 3).is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let p4 = LabeledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let relabeled = LabeledGraph::new(4, &[(0, 2), (2, 1), (1, 3)]).unwrap();
        assert!(are_isomorphic(&p4, &relabeled));
        let k3 = LabeledGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = LabeledGraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!are_isomorphic(&k3, &p3));
    }

    #[test]
    fn all_graph_enumeration_counts() {
        // Labeled forests: 1, 2, 7, 38, 291 for n = 1..5.
        let forest_counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_all_graphs(n, Filter::Forest).len())
            .collect();
        assert_eq!(forest_counts, vec![1, 2, 7, 38, 291]);
        // Labeled pseudoforests: 1, 2, 8, 57, 608.
        let pseudo_counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_all_graphs(n, Filter::Pseudoforest).len())
            .collect();
        assert_eq!(pseudo_counts, vec![1, 2, 8, 57, 608]);
        // All graphs on 4 vertices: 2^6.
        assert_eq!(enumerate_all_graphs(4, Filter::All).len(), 64);
        // Labeled connected unicyclic graphs on 3..5 vertices: 1, 15, 222.
        let uni: Vec<usize> = (3..=5)
            .map(|n| {
                enumerate_all_graphs(n, Filter::Unicyclic)
                    .iter()
                    .filter(|g| g.is_unicyclic())
                    .count()
            })
            .collect();
        assert_eq!(uni, vec![1, 15, 222]);
    }

    #[test]
    fn enumeration_matches_global_sweep_per_class() {
        // Cross-check the per-class backtracking against the global edge
        // search on all forests with 5 vertices.
        use std::collections::HashMap;
        let mut by_class: HashMap<Vec<usize>, Vec<LabeledGraph>> = HashMap::new();
        for g in enumerate_all_graphs(5, Filter::Forest) {
            by_class
                .entry(g.degree_vector().as_slice().to_vec())
                .or_default()
                .push(g);
        }
        for (d, mut members) in by_class {
            members.sort_unstable();
            let direct =
                enumerate_realizations(&DegreeVector::new(d).unwrap(), Filter::Forest).unwrap();
            assert_eq!(direct, members);
        }
    }
}
