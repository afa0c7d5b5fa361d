//! Shared helpers for the verification suites: graph construction
//! shorthand, exhaustive iteration over all graphs of a given order, and
//! naive full-enumeration oracles kept deliberately independent of the
//! library's branch-and-bound implementations.

#![allow(dead_code)]

use std::collections::HashMap;

use switchlab::graph::LabeledGraph;

pub fn g(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::new(n, edges).unwrap()
}

/// Edge slots of `K_n` in lexicographic order; bit `i` of a mask refers to
/// `slots[i]`.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_bits(n: usize, slots: &[(usize, usize)], bits: u32) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..slots.len())
        .filter(|&i| bits & (1 << i) != 0)
        .map(|i| slots[i])
        .collect();
    LabeledGraph::new(n, &edges).unwrap()
}

/// Calls `f` on every labeled graph with vertex set `{0..n}`.
pub fn for_all_graphs(n: usize, mut f: impl FnMut(&LabeledGraph)) {
    let slots = edge_slots(n);
    for bits in 0u32..(1 << slots.len()) {
        f(&graph_from_bits(n, &slots, bits));
    }
}

/// Packs a degree vector into a grouping key (degrees are < 16 here).
pub fn degree_key(g: &LabeledGraph) -> u64 {
    g.vertices()
        .fold(0u64, |acc, v| (acc << 4) | g.degree(v) as u64)
}

/// Groups compact edge encodings of `graphs` by exact degree vector.
pub fn group_by_degree<I: IntoIterator<Item = LabeledGraph>>(
    graphs: I,
) -> HashMap<u64, Vec<u64>> {
    let mut map: HashMap<u64, Vec<u64>> = HashMap::new();
    for gr in graphs {
        map.entry(degree_key(&gr))
            .or_default()
            .push(gr.edge_mask().low_bits());
    }
    map
}

/// Compact edge encodings of every graph on `{0..n}` passing `filter`.
pub fn filtered_masks(n: usize, filter: switchlab::explore::Filter) -> Vec<u64> {
    let mut out = Vec::new();
    switchlab::explore::enumerate_all_graphs_with(n, filter, |g| {
        out.push(g.edge_mask().low_bits());
    });
    out
}

pub fn from_mask(n: usize, bits: u64) -> LabeledGraph {
    LabeledGraph::from_edge_mask(n, &switchlab::graph::EdgeMask::from_low_bits(bits)).unwrap()
}

// ---------------------------------------------------------------------------
// Naive oracles (full enumeration, no pruning) for cross-checking the
// library's exact solvers on small orders.
// ---------------------------------------------------------------------------

fn edge_list(g: &LabeledGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Largest set of pairwise-disjoint edges, over all edge subsets.
pub fn naive_matching(g: &LabeledGraph) -> usize {
    let edges = edge_list(g);
    let mut best = 0;
    for sub in 0u32..(1 << edges.len()) {
        let mut seen = 0u32;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if sub & (1 << i) != 0 {
                let m = (1u32 << u) | (1 << v);
                if seen & m != 0 {
                    ok = false;
                    break;
                }
                seen |= m;
            }
        }
        if ok {
            best = best.max(sub.count_ones() as usize);
        }
    }
    best
}

/// Smallest edge subset touching every vertex; `None` with an isolated
/// vertex.
pub fn naive_edge_cover(g: &LabeledGraph) -> Option<usize> {
    if g.vertices().any(|v| g.degree(v) == 0) {
        return None;
    }
    let edges = edge_list(g);
    let full = (1u32 << g.order()) - 1;
    let mut best = usize::MAX;
    for sub in 0u32..(1 << edges.len()) {
        let mut covered = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if sub & (1 << i) != 0 {
                covered |= (1 << u) | (1 << v);
            }
        }
        if covered == full {
            best = best.min(sub.count_ones() as usize);
        }
    }
    Some(best)
}

/// Largest vertex subset spanning no edge.
pub fn naive_independence(g: &LabeledGraph) -> usize {
    let n = g.order();
    let mut best = 0;
    for sub in 0u32..(1 << n) {
        let independent = g
            .edges()
            .all(|(u, v)| sub & (1 << u) == 0 || sub & (1 << v) == 0);
        if independent {
            best = best.max(sub.count_ones() as usize);
        }
    }
    best
}

/// Smallest vertex subset meeting every edge.
pub fn naive_vertex_cover(g: &LabeledGraph) -> usize {
    let n = g.order();
    let mut best = n;
    for sub in 0u32..(1 << n) {
        let covers = g
            .edges()
            .all(|(u, v)| sub & (1 << u) != 0 || sub & (1 << v) != 0);
        if covers {
            best = best.min(sub.count_ones() as usize);
        }
    }
    best
}

/// Largest vertex subset inducing a complete subgraph.
pub fn naive_clique(g: &LabeledGraph) -> usize {
    let n = g.order();
    let mut best = 0;
    for sub in 0u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| sub & (1 << v) != 0).collect();
        let complete = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if complete {
            best = best.max(verts.len());
        }
    }
    best
}

/// Smallest vertex subset whose closed neighborhoods cover everything.
pub fn naive_domination(g: &LabeledGraph) -> usize {
    let n = g.order();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for sub in 0u32..(1 << n) {
        let mut covered = sub;
        for v in 0..n {
            if sub & (1 << v) != 0 {
                covered |= g.neighbor_mask(v);
            }
        }
        if covered == full {
            best = best.min(sub.count_ones() as usize);
        }
    }
    best
}

/// |G| minus the largest edge subset that is acyclic with maximum degree 2.
pub fn naive_path_cover(g: &LabeledGraph) -> usize {
    let edges = edge_list(g);
    let n = g.order();
    let mut best_edges = 0;
    'subsets: for sub in 0u32..(1 << edges.len()) {
        let mut deg = vec![0usize; n];
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, mut v: usize) -> usize {
            while p[v] != v {
                v = p[v];
            }
            v
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if sub & (1 << i) != 0 {
                deg[u] += 1;
                deg[v] += 1;
                if deg[u] > 2 || deg[v] > 2 {
                    continue 'subsets;
                }
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    continue 'subsets;
                }
                parent[ru] = rv;
            }
        }
        best_edges = best_edges.max(sub.count_ones() as usize);
    }
    n - best_edges
}

/// Independent implementation of the forcing closure: repeat "an infected
/// vertex with exactly one uninfected neighbor infects it".
fn naive_closure(g: &LabeledGraph, seed: u32) -> u32 {
    let mut infected = seed;
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.order() {
            if infected & (1 << v) != 0 {
                let white: Vec<usize> = g
                    .neighbors(v)
                    .filter(|&w| infected & (1 << w) == 0)
                    .collect();
                if white.len() == 1 {
                    infected |= 1 << white[0];
                    changed = true;
                }
            }
        }
    }
    infected
}

pub fn naive_zero_forcing(g: &LabeledGraph) -> usize {
    let n = g.order();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for sub in 0u32..(1 << n) {
        if (sub.count_ones() as usize) < best && naive_closure(g, sub) == full {
            best = sub.count_ones() as usize;
        }
    }
    best
}

/// Longest sequence of vertices each contributing a neighbor outside the
/// union of previously-touched closed neighborhoods, by direct recursion
/// over sequences.
pub fn naive_z_grundy(g: &LabeledGraph) -> usize {
    fn rec(g: &LabeledGraph, covered: u32) -> usize {
        let mut best = 0;
        for v in 0..g.order() {
            if g.neighbor_mask(v) & !covered != 0 {
                let next = covered | g.neighbor_mask(v) | (1 << v);
                best = best.max(1 + rec(g, next));
            }
        }
        best
    }
    rec(g, 0)
}

/// Smallest k admitting a proper coloring, trying every assignment.
pub fn naive_chromatic(g: &LabeledGraph) -> usize {
    let n = g.order();
    for k in 1..=n {
        let mut assignment = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| assignment[u] != assignment[v]) {
                return k;
            }
            // advance the base-k odometer
            let mut i = 0;
            while i < n {
                assignment[i] += 1;
                if assignment[i] < k {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// Rank as the largest order of a square submatrix with nonzero
/// determinant (integer Laplace expansion).
pub fn naive_rank(g: &LabeledGraph) -> usize {
    let n = g.order();
    let a: Vec<Vec<i64>> = (0..n)
        .map(|u| (0..n).map(|v| i64::from(u != v && g.has_edge(u, v))).collect())
        .collect();
    fn det(m: &[Vec<i64>]) -> i64 {
        let k = m.len();
        if k == 0 {
            return 1;
        }
        let mut total = 0;
        for (j, head) in m[0].iter().enumerate() {
            if *head == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            total += sign * head * det(&minor);
        }
        total
    }
    for k in (1..=n).rev() {
        // all k-subsets of rows and columns
        let subsets: Vec<Vec<usize>> = k_subsets(n, k);
        for rows in &subsets {
            for cols in &subsets {
                let m: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| a[r][c]).collect())
                    .collect();
                if det(&m) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Component count by plain flood fill.
pub fn naive_components(g: &LabeledGraph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}
