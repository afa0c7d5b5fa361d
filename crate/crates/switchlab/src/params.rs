//! Exact brute-force computation of classic integer graph parameters.
//!
//! Everything here is deliberately exhaustive: subset searches ascend in
//! cardinality so the first hit is optimal, branch-and-bound prunes with
//! trivial bounds, and the identities used as shortcuts (edge cover via
//! matching, vertex cover via independence, Z-Grundy via zero forcing) are
//! cross-checked against direct searches in debug builds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, full_mask, BitIter, GraphError, LabeledGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("parameter {param} is undefined on graphs with isolated vertices")]
    IsolatedVertex { param: ParamId },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown parameter {0:?}")]
    Unknown(String),
}

/// Identifier of one integer graph parameter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamId {
    Matching,
    EdgeCover,
    Independence,
    VertexCover,
    Clique,
    Domination,
    Components,
    PathCover,
    ZeroForcing,
    ZGrundy,
    Chromatic,
    Rank,
    Nullity,
    Diameter,
}

impl ParamId {
    pub const ALL: [ParamId; 14] = [
        ParamId::Matching,
        ParamId::EdgeCover,
        ParamId::Independence,
        ParamId::VertexCover,
        ParamId::Clique,
        ParamId::Domination,
        ParamId::Components,
        ParamId::PathCover,
        ParamId::ZeroForcing,
        ParamId::ZGrundy,
        ParamId::Chromatic,
        ParamId::Rank,
        ParamId::Nullity,
        ParamId::Diameter,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ParamId::Matching => "matching",
            ParamId::EdgeCover => "edge-cover",
            ParamId::Independence => "independence",
            ParamId::VertexCover => "vertex-cover",
            ParamId::Clique => "clique",
            ParamId::Domination => "domination",
            ParamId::Components => "components",
            ParamId::PathCover => "path-cover",
            ParamId::ZeroForcing => "zero-forcing",
            ParamId::ZGrundy => "z-grundy",
            ParamId::Chromatic => "chromatic",
            ParamId::Rank => "rank",
            ParamId::Nullity => "nullity",
            ParamId::Diameter => "diameter",
        }
    }

    /// Evaluates this parameter on `g`. Errors only where the parameter is
    /// undefined (isolated vertices for edge covers and Z-Grundy
    /// domination, disconnected graphs for the diameter).
    pub fn evaluate(&self, g: &LabeledGraph) -> Result<usize, ParamError> {
        Ok(match self {
            ParamId::Matching => matching_number(g),
            ParamId::EdgeCover => edge_cover_number(g)?,
            ParamId::Independence => independence_number(g),
            ParamId::VertexCover => vertex_cover_number(g),
            ParamId::Clique => clique_number(g),
            ParamId::Domination => domination_number(g),
            ParamId::Components => components_count(g),
            ParamId::PathCover => path_cover_number(g),
            ParamId::ZeroForcing => zero_forcing_number(g),
            ParamId::ZGrundy => z_grundy_number(g)?,
            ParamId::Chromatic => chromatic_number(g),
            ParamId::Rank => adjacency_rank(g).0,
            ParamId::Nullity => adjacency_rank(g).1,
            ParamId::Diameter => g.diameter()?,
        })
    }
}

impl fmt::Display for ParamId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamId {
    type Err = ParamError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "matching" => Ok(ParamId::Matching),
            "edge-cover" | "edgecover" => Ok(ParamId::EdgeCover),
            "independence" => Ok(ParamId::Independence),
            "vertex-cover" | "vertexcover" => Ok(ParamId::VertexCover),
            "clique" => Ok(ParamId::Clique),
            "domination" => Ok(ParamId::Domination),
            "components" => Ok(ParamId::Components),
            "path-cover" | "pathcover" => Ok(ParamId::PathCover),
            "zero-forcing" | "zeroforcing" => Ok(ParamId::ZeroForcing),
            "z-grundy" | "zgrundy" => Ok(ParamId::ZGrundy),
            "chromatic" => Ok(ParamId::Chromatic),
            "rank" => Ok(ParamId::Rank),
            "nullity" => Ok(ParamId::Nullity),
            "diameter" => Ok(ParamId::Diameter),
            other => Err(ParamError::Unknown(other.to_string())),
        }
    }
}

fn has_isolated_vertex(g: &LabeledGraph) -> bool {
    g.vertices().any(|v| g.degree(v) == 0)
}

/// Maximum matching size μ(G), by include/exclude branching over the edge
/// list with a free-vertex bound.
pub fn matching_number(g: &LabeledGraph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = 0;
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        used: u32,
        current: usize,
        free_count: usize,
        best: &mut usize,
    ) {
        *best = (*best).max(current);
        if i == edges.len() || current + free_count / 2 <= *best {
            return;
        }
        let (u, v) = edges[i];
        if used & bit(u) == 0 && used & bit(v) == 0 {
            rec(edges, i + 1, used | bit(u) | bit(v), current + 1, free_count - 2, best);
        }
        rec(edges, i + 1, used, current, free_count, best);
    }
    rec(&edges, 0, 0, 0, g.order(), &mut best);
    best
}

/// Minimum edge cover size ε(G) = |G| − μ(G); undefined when an isolated
/// vertex exists. Debug builds cross-check a direct shortest-cover search.
pub fn edge_cover_number(g: &LabeledGraph) -> Result<usize, ParamError> {
    if has_isolated_vertex(g) {
        return Err(ParamError::IsolatedVertex {
            param: ParamId::EdgeCover,
        });
    }
    let value = g.order() - matching_number(g);
    #[cfg(debug_assertions)]
    if g.order() <= 12 {
        debug_assert_eq!(value, edge_cover_by_search(g).unwrap());
    }
    Ok(value)
}

/// Minimum edge cover by breadth-first search over covered-vertex masks.
/// Independent of the matching shortcut; exposed for verification.
pub fn edge_cover_by_search(g: &LabeledGraph) -> Option<usize> {
    if has_isolated_vertex(g) {
        return None;
    }
    let n = g.order();
    let full = full_mask(n);
    let edges: Vec<u32> = g.edges().map(|(u, v)| bit(u) | bit(v)).collect();
    let mut dist = vec![u8::MAX; 1 << n];
    dist[0] = 0;
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(mask) = queue.pop_front() {
        if mask == full {
            return Some(dist[mask as usize] as usize);
        }
        for &e in &edges {
            let next = mask | e;
            if dist[next as usize] == u8::MAX {
                dist[next as usize] = dist[mask as usize] + 1;
                queue.push_back(next);
            }
        }
    }
    None
}

/// Maximum independent set size α(G).
pub fn independence_number(g: &LabeledGraph) -> usize {
    let mut best = 0;
    fn rec(g: &LabeledGraph, candidates: u32, current: usize, best: &mut usize) {
        *best = (*best).max(current);
        if current + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        rec(g, candidates & !bit(v) & !g.neighbor_mask(v), current + 1, best);
        rec(g, candidates & !bit(v), current, best);
    }
    rec(g, full_mask(g.order()), 0, &mut best);
    best
}

/// Minimum vertex cover size ν(G) = |G| − α(G).
pub fn vertex_cover_number(g: &LabeledGraph) -> usize {
    g.order() - independence_number(g)
}

/// Minimum vertex cover by ascending-cardinality subset search; exposed for
/// verification of the complement identity.
pub fn vertex_cover_by_search(g: &LabeledGraph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 0..=n {
        let mut found = false;
        for_each_subset(n, k, &mut |mask| {
            if !found && edges.iter().all(|&(u, v)| mask & (bit(u) | bit(v)) != 0) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    n
}

/// Maximum clique size ω(G) = α of the complement.
pub fn clique_number(g: &LabeledGraph) -> usize {
    independence_number(&g.complement())
}

/// Minimum dominating set size γ(G), ascending-cardinality subset search
/// over closed neighborhoods.
pub fn domination_number(g: &LabeledGraph) -> usize {
    let n = g.order();
    let full = full_mask(n);
    let closed: Vec<u32> = g.vertices().map(|v| g.neighbor_mask(v) | bit(v)).collect();
    for k in 1..=n {
        let mut found = false;
        for_each_subset(n, k, &mut |mask| {
            if !found {
                let covered = BitIter(mask).fold(0u32, |acc, v| acc | closed[v]);
                if covered == full {
                    found = true;
                }
            }
        });
        if found {
            return k;
        }
    }
    n
}

/// Number of connected components κ(G).
pub fn components_count(g: &LabeledGraph) -> usize {
    g.component_count()
}

/// Minimum path-cover size π(G) = |G| minus the maximum edge count of a
/// spanning linear forest (acyclic, maximum degree 2); isolated vertices
/// count as one-vertex paths.
pub fn path_cover_number(g: &LabeledGraph) -> usize {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut deg = [0u8; crate::MAX_VERTICES];
    let mut parent: Vec<usize> = (0..n).collect();

    fn find(parent: &[usize], mut v: usize) -> usize {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        count: usize,
        deg: &mut [u8; crate::MAX_VERTICES],
        parent: &mut Vec<usize>,
        best: &mut usize,
    ) {
        *best = (*best).max(count);
        if i == edges.len() || count + (edges.len() - i) <= *best {
            return;
        }
        let (u, v) = edges[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if deg[u] < 2 && deg[v] < 2 && ru != rv {
            deg[u] += 1;
            deg[v] += 1;
            parent[rv] = ru;
            rec(edges, i + 1, count + 1, deg, parent, best);
            parent[rv] = rv;
            deg[u] -= 1;
            deg[v] -= 1;
        }
        rec(edges, i + 1, count, deg, parent, best);
    }
    let mut best = 0;
    rec(&edges, 0, 0, &mut deg, &mut parent, &mut best);
    n - best
}

/// Closure of the forcing process: an infected vertex with exactly one
/// uninfected neighbor infects it, until stable.
fn forcing_closure(g: &LabeledGraph, seed: u32) -> u32 {
    let mut infected = seed;
    loop {
        let mut grown = infected;
        for v in BitIter(infected) {
            let uninfected = g.neighbor_mask(v) & !grown;
            if uninfected.count_ones() == 1 {
                grown |= uninfected;
            }
        }
        if grown == infected {
            return infected;
        }
        infected = grown;
    }
}

/// Zero-forcing number Z(G): minimum seed size whose closure infects all
/// vertices. Ascending-cardinality subset search.
pub fn zero_forcing_number(g: &LabeledGraph) -> usize {
    let n = g.order();
    let full = full_mask(n);
    for k in 1..=n {
        let mut found = false;
        for_each_subset(n, k, &mut |mask| {
            if !found && forcing_closure(g, mask) == full {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    n
}

/// Z-Grundy domination number: |G| − Z(G) on graphs without isolated
/// vertices. Debug builds cross-check the direct longest-sequence search.
pub fn z_grundy_number(g: &LabeledGraph) -> Result<usize, ParamError> {
    if has_isolated_vertex(g) {
        return Err(ParamError::IsolatedVertex {
            param: ParamId::ZGrundy,
        });
    }
    let value = g.order() - zero_forcing_number(g);
    #[cfg(debug_assertions)]
    if g.order() <= 12 {
        debug_assert_eq!(value, z_grundy_by_search(g));
    }
    Ok(value)
}

/// Longest sequence `(v_1, .., v_k)` in which every `v_i` contributes a
/// neighbor outside everything touched so far: each step requires
/// `N(v_i) ⊄ U` where `U` accumulates `N(v_j) ∪ {v_j}`. Exposed as the
/// independent search the shortcut identity is verified against.
pub fn z_grundy_by_search(g: &LabeledGraph) -> usize {
    let n = g.order();
    assert!(n <= 20, "direct search uses a 2^n table");
    let mut memo = vec![-1i8; 1 << n];
    fn rec(g: &LabeledGraph, covered: u32, memo: &mut [i8]) -> i8 {
        if memo[covered as usize] >= 0 {
            return memo[covered as usize];
        }
        let mut best = 0i8;
        for v in g.vertices() {
            if g.neighbor_mask(v) & !covered != 0 {
                let next = covered | g.neighbor_mask(v) | bit(v);
                best = best.max(1 + rec(g, next, memo));
            }
        }
        memo[covered as usize] = best;
        best
    }
    rec(g, 0, &mut memo) as usize
}

/// Chromatic number χ(G): ascending target count, backtracking with the
/// usual "at most one fresh color" symmetry break.
pub fn chromatic_number(g: &LabeledGraph) -> usize {
    let n = g.order();
    fn colorable(
        g: &LabeledGraph,
        k: usize,
        v: usize,
        max_used: usize,
        colors: &mut [usize; crate::MAX_VERTICES],
    ) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..k.min(max_used + 2) {
            let clash = BitIter(g.neighbor_mask(v) & full_mask(v)).any(|w| colors[w] == c);
            if !clash {
                colors[v] = c;
                if colorable(g, k, v + 1, max_used.max(c), colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = [usize::MAX; crate::MAX_VERTICES];
    for k in 1..=n {
        colors[..n].fill(usize::MAX);
        colors[0] = 0; // first vertex pinned to the first color
        if n == 1 || colorable(g, k, 1, 0, &mut colors) {
            return k;
        }
    }
    n
}

/// Rank and nullity of the 0/1 adjacency matrix over the rationals, by
/// fraction-free (Bareiss) elimination in exact integers.
pub fn adjacency_rank(g: &LabeledGraph) -> (usize, usize) {
    let n = g.order();
    let mut m = [[0i128; crate::MAX_VERTICES]; crate::MAX_VERTICES];
    for v in g.vertices() {
        for w in g.neighbors(v) {
            m[v][w] = 1;
        }
    }
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let pivot_row = (rank..n).find(|&r| m[r][col] != 0);
        let Some(p) = pivot_row else { continue };
        m.swap(rank, p);
        for r in rank + 1..n {
            for c in col + 1..n {
                let num = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                debug_assert_eq!(num % prev, 0, "fraction-free elimination stayed exact");
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    (rank, n - rank)
}

/// Calls `f` with every `k`-subset of `{0..n}` as a bitmask, in ascending
/// numeric order (Gosper's hack, widened to u64 to dodge shift overflow).
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        f(mask as u32);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        LabeledGraph::new(n, edges).unwrap()
    }

    fn p4() -> LabeledGraph {
        graph(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn k3() -> LabeledGraph {
        graph(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn c5() -> LabeledGraph {
        graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    fn c6() -> LabeledGraph {
        graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    }

    fn k4() -> LabeledGraph {
        graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn star() -> LabeledGraph {
        graph(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn matching_values() {
        assert_eq!(matching_number(&p4()), 2);
        assert_eq!(matching_number(&k3()), 1);
        assert_eq!(matching_number(&c6()), 3);
    }

    #[test]
    fn edge_cover_values() {
        assert_eq!(edge_cover_number(&p4()).unwrap(), 2);
        assert_eq!(edge_cover_number(&k3()).unwrap(), 2);
        assert_eq!(edge_cover_number(&graph(2, &[(0, 1)])).unwrap(), 1);
        assert!(edge_cover_number(&graph(3, &[(0, 1)])).is_err());
    }

    #[test]
    fn independence_family() {
        assert_eq!(independence_number(&p4()), 2);
        assert_eq!(vertex_cover_number(&p4()), 2);
        assert_eq!(clique_number(&p4()), 2);
        assert_eq!(independence_number(&k4()), 1);
        assert_eq!(vertex_cover_number(&k4()), 3);
        assert_eq!(clique_number(&k4()), 4);
        assert_eq!(independence_number(&c5()), 2);
        assert_eq!(vertex_cover_number(&c5()), 3);
        assert_eq!(clique_number(&c5()), 2);
    }

    #[test]
    fn domination_values() {
        assert_eq!(domination_number(&star()), 1);
        assert_eq!(domination_number(&p4()), 2);
        assert_eq!(domination_number(&c6()), 2);
    }

    #[test]
    fn component_counts() {
        assert_eq!(components_count(&p4()), 1);
        assert_eq!(components_count(&graph(4, &[(0, 1), (2, 3)])), 2);
        assert_eq!(components_count(&LabeledGraph::empty(5).unwrap()), 5);
    }

    #[test]
    fn path_cover_values() {
        assert_eq!(path_cover_number(&p4()), 1);
        assert_eq!(path_cover_number(&star()), 2);
        assert_eq!(path_cover_number(&k4()), 1);
        assert_eq!(path_cover_number(&LabeledGraph::empty(3).unwrap()), 3);
    }

    #[test]
    fn zero_forcing_values() {
        assert_eq!(zero_forcing_number(&p4()), 1);
        assert_eq!(zero_forcing_number(&star()), 2);
        assert_eq!(zero_forcing_number(&c5()), 2);
    }

    #[test]
    fn z_grundy_values() {
        assert_eq!(z_grundy_number(&p4()).unwrap(), 3);
        assert_eq!(z_grundy_number(&star()).unwrap(), 2);
        assert_eq!(z_grundy_number(&graph(2, &[(0, 1)])).unwrap(), 1);
        assert!(z_grundy_number(&graph(3, &[(0, 1)])).is_err());
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(chromatic_number(&p4()), 2);
        assert_eq!(chromatic_number(&c5()), 3);
        assert_eq!(chromatic_number(&k4()), 4);
        assert_eq!(chromatic_number(&LabeledGraph::empty(3).unwrap()), 1);
    }

    #[test]
    fn rank_values() {
        assert_eq!(adjacency_rank(&p4()), (4, 0));
        assert_eq!(adjacency_rank(&star()), (2, 2));
        assert_eq!(adjacency_rank(&LabeledGraph::empty(3).unwrap()), (0, 3));
        // rank = 2μ on forests.
        assert_eq!(adjacency_rank(&p4()).0, 2 * matching_number(&p4()));
        assert_eq!(adjacency_rank(&star()).0, 2 * matching_number(&star()));
    }

    #[test]
    fn param_id_round_trip() {
        for p in ParamId::ALL {
            assert_eq!(p.name().parse::<ParamId>().unwrap(), p);
        }
        assert!("nope".parse::<ParamId>().is_err());
    }

    #[test]
    fn evaluate_dispatch() {
        assert_eq!(ParamId::Matching.evaluate(&p4()).unwrap(), 2);
        assert_eq!(ParamId::Diameter.evaluate(&p4()).unwrap(), 3);
        assert!(ParamId::Diameter
            .evaluate(&graph(4, &[(0, 1), (2, 3)]))
            .is_err());
        assert_eq!(ParamId::Rank.evaluate(&p4()).unwrap(), 4);
        assert_eq!(ParamId::Nullity.evaluate(&star()).unwrap(), 2);
    }

    #[test]
    fn subset_iteration_is_exhaustive() {
        let mut count = 0;
        for_each_subset(6, 3, &mut |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
        });
        assert_eq!(count, 20);
        let mut count = 0;
        for_each_subset(5, 0, &mut |m| {
            assert_eq!(m, 0);
            count += 1;
        });
        assert_eq!(count, 1);
    }
}
