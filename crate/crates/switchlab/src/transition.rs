//! Constructive switch sequences between two forests or two pseudoforests
//! with the same degree vector, with every intermediate graph staying in
//! the class.
//!
//! The forest routine repeatedly trims leaves whose pendant edge is shared
//! by both graphs and, when none exists, performs one switch that creates
//! such a leaf. The pseudoforest routine reduces both endpoints to a
//! common shape (a single unicyclic graph when every component carries a
//! cycle, a forest otherwise), bridges the middle, and replays the second
//! reduction inverted.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::graph::{bit, bits_above, full_mask, BitIter, EdgeMask, LabeledGraph};
use crate::switch::{apply_assume_valid, enumerate_switches, validate, SwitchError, TwoSwitch};

/// Node budget for the breadth-first bridge through unicyclic realizations.
pub const DEFAULT_BFS_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransitionError {
    #[error("degree vectors differ")]
    DegreeMismatch,
    #[error("input is not a forest")]
    NotAForest,
    #[error("input is not a pseudoforest")]
    NotPseudoforest,
    #[error("nothing to fix: the graphs already share a trimmable leaf")]
    NothingToFix,
    #[error("input has an isolated vertex")]
    IsolatedVertex,
    #[error("some component carries no cycle")]
    HasAcyclicComponent,
    #[error("every component carries a cycle; no forest edge to break with")]
    NoTreeComponent,
    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExhausted { budget: usize },
    #[error(transparent)]
    Switch(#[from] SwitchError),
}

/// An ordered switch list together with the graph trace it induces:
/// `trace[0]` is the source, `trace[i] = apply(trace[i-1], switches[i-1])`,
/// and the last element is the target.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SwitchSequence {
    pub switches: Vec<TwoSwitch>,
    pub trace: Vec<LabeledGraph>,
}

impl SwitchSequence {
    /// Replays `switches` from `source`, materializing and checking the
    /// trace.
    pub fn replay(source: LabeledGraph, switches: Vec<TwoSwitch>) -> Result<Self, SwitchError> {
        let mut trace = Vec::with_capacity(switches.len() + 1);
        trace.push(source);
        let mut g = source;
        for &t in &switches {
            validate(&g, t)?;
            g = apply_assume_valid(&g, t);
            trace.push(g);
        }
        Ok(SwitchSequence { switches, trace })
    }

    pub fn len(&self) -> usize {
        self.switches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.switches.is_empty()
    }

    pub fn source(&self) -> &LabeledGraph {
        &self.trace[0]
    }

    pub fn target(&self) -> &LabeledGraph {
        self.trace.last().unwrap()
    }

    /// Re-applies every switch and confirms the stored trace.
    pub fn is_valid_replay(&self) -> bool {
        if self.trace.len() != self.switches.len() + 1 {
            return false;
        }
        let mut g = self.trace[0];
        for (i, &t) in self.switches.iter().enumerate() {
            if validate(&g, t).is_err() {
                return false;
            }
            g = apply_assume_valid(&g, t);
            if g != self.trace[i + 1] {
                return false;
            }
        }
        true
    }

    /// Does every trace element satisfy `pred`?
    pub fn all_satisfy(&self, pred: impl Fn(&LabeledGraph) -> bool) -> bool {
        self.trace.iter().all(pred)
    }
}

fn require_same_degrees(g: &LabeledGraph, h: &LabeledGraph) -> Result<(), TransitionError> {
    if g.order() != h.order() || g.degree_vector() != h.degree_vector() {
        return Err(TransitionError::DegreeMismatch);
    }
    Ok(())
}

/// Degree-1 vertices of `g` inside `active` whose unique incident edge is
/// present in both graphs.
fn trimmable_mask(g: &LabeledGraph, h: &LabeledGraph, active: u32) -> u32 {
    let mut lam = 0u32;
    for v in BitIter(active) {
        let nb = g.neighbor_mask(v) & active;
        if nb.count_ones() == 1 {
            let u = nb.trailing_zeros() as usize;
            if h.neighbor_mask(v) & active & bit(u) != 0 {
                lam |= bit(v);
            }
        }
    }
    lam
}

/// The trimmable leaves Λ(G, H): degree-1 vertices whose pendant edge lies
/// in both edge sets. Requires equal degree vectors.
pub fn trimmable_leaves(
    g: &LabeledGraph,
    h: &LabeledGraph,
) -> Result<Vec<usize>, TransitionError> {
    require_same_degrees(g, h)?;
    Ok(BitIter(trimmable_mask(g, h, full_mask(g.order()))).collect())
}

/// One switch on `f` making some leaf trimmable against `f2`, restricted to
/// `active`. Chooses the lowest-index vertex at every tie.
fn make_trimmable_masked(
    f: &LabeledGraph,
    f2: &LabeledGraph,
    active: u32,
) -> Result<TwoSwitch, TransitionError> {
    // Leaves are shared between the two graphs (same degree vector).
    let leaves: Vec<usize> = BitIter(active)
        .filter(|&v| (f.neighbor_mask(v) & active).count_ones() == 1)
        .collect();
    let all_degree_one =
        BitIter(active).all(|v| (f.neighbor_mask(v) & active).count_ones() == 1);

    let (ell, u) = if all_degree_one {
        let ell = *leaves.first().ok_or(TransitionError::IsolatedVertex)?;
        let u = (f2.neighbor_mask(ell) & active).trailing_zeros() as usize;
        (ell, u)
    } else {
        // A leaf whose neighbor in the target has degree at least 2.
        let found = leaves
            .iter()
            .copied()
            .find_map(|ell| {
                let u = (f2.neighbor_mask(ell) & active).trailing_zeros() as usize;
                ((f2.neighbor_mask(u) & active).count_ones() >= 2).then_some((ell, u))
            })
            .expect("a non-trivial tree component always has such a leaf");
        found
    };

    let v = (f.neighbor_mask(ell) & active).trailing_zeros() as usize;
    debug_assert_ne!(u, v, "a shared pendant edge would make ell trimmable");

    // Neighbor of u in f avoiding the ell..u path (or any neighbor when the
    // components differ, including the all-degree-one case).
    let path_mask = path_mask_between(f, ell, u, active);
    let w_candidates = f.neighbor_mask(u) & active & !path_mask;
    let w = w_candidates.trailing_zeros() as usize;
    let t = TwoSwitch::new(ell, v, u, w)?;
    debug_assert_eq!(validate(f, t), Ok(()));
    Ok(t)
}

/// Vertices on the unique `from`..`to` path when both ends share a
/// component, else 0.
fn path_mask_between(f: &LabeledGraph, from: usize, to: usize, active: u32) -> u32 {
    let mut parent = [usize::MAX; crate::MAX_VERTICES];
    let mut visited = bit(from);
    let mut frontier = visited;
    while frontier != 0 && visited & bit(to) == 0 {
        let mut next = 0u32;
        for x in BitIter(frontier) {
            let fresh = f.neighbor_mask(x) & active & !visited;
            for y in BitIter(fresh) {
                parent[y] = x;
            }
            next |= fresh;
        }
        visited |= next;
        frontier = next;
    }
    if visited & bit(to) == 0 {
        return 0;
    }
    let mut mask = bit(to);
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        mask |= bit(cur);
    }
    mask
}

/// Given two forests with the same degree vector, no isolated vertices, and
/// no trimmable leaf, returns one structure-preserving switch after which a
/// trimmable leaf exists.
pub fn make_trimmable(f: &LabeledGraph, f2: &LabeledGraph) -> Result<TwoSwitch, TransitionError> {
    require_same_degrees(f, f2)?;
    if !f.is_forest() || !f2.is_forest() {
        return Err(TransitionError::NotAForest);
    }
    let active = full_mask(f.order());
    if f.vertices().any(|v| f.degree(v) == 0) {
        return Err(TransitionError::IsolatedVertex);
    }
    if trimmable_mask(f, f2, active) != 0 {
        return Err(TransitionError::NothingToFix);
    }
    let t = make_trimmable_masked(f, f2, active)?;
    debug_assert!({
        let img = apply_assume_valid(f, t);
        img.is_forest() && trimmable_mask(&img, f2, active) != 0
    });
    Ok(t)
}

/// A forest-preserving switch sequence transforming `f` into `f2`.
///
/// The sequence length is at most `|E(f2) - E(f)| - 1` whenever the two
/// forests differ, and every trace element is a forest.
pub fn forest_transition(
    f: &LabeledGraph,
    f2: &LabeledGraph,
) -> Result<SwitchSequence, TransitionError> {
    require_same_degrees(f, f2)?;
    if !f.is_forest() || !f2.is_forest() {
        return Err(TransitionError::NotAForest);
    }
    let mut g = *f;
    let mut h = *f2;
    let mut active = full_mask(f.order());
    let mut switches = Vec::new();
    loop {
        for v in BitIter(active) {
            if g.neighbor_mask(v) & active == 0 {
                active &= !bit(v);
            }
        }
        if g.edge_mask() == h.edge_mask() {
            break;
        }
        let mut lam = trimmable_mask(&g, &h, active);
        if lam == 0 {
            let t = make_trimmable_masked(&g, &h, active)?;
            switches.push(t);
            g = apply_assume_valid(&g, t);
            lam = trimmable_mask(&g, &h, active);
            debug_assert_ne!(lam, 0);
        }
        for ell in BitIter(lam) {
            let nb = g.neighbor_mask(ell) & active;
            if nb != 0 {
                let u = nb.trailing_zeros() as usize;
                g = g.without_edge(ell, u);
                h = h.without_edge(ell, u);
            }
            active &= !bit(ell);
        }
    }
    // Replaying the recorded switches on the untrimmed source reaches the
    // untrimmed target through forests.
    let seq = SwitchSequence::replay(*f, switches)?;
    debug_assert_eq!(seq.target(), f2);
    debug_assert!(seq.all_satisfy(LabeledGraph::is_forest));
    debug_assert!(
        seq.is_empty()
            || seq.len() + 1 <= f2.edge_mask().difference_count(&f.edge_mask())
    );
    Ok(seq)
}

/// Lexicographically smallest cycle edge of the component `comp`.
fn first_cycle_edge(g: &LabeledGraph, cyc: u32, comp: u32) -> (usize, usize) {
    let m = cyc & comp;
    for u in BitIter(m) {
        let nb = g.neighbor_mask(u) & m & bits_above(u);
        if nb != 0 {
            return (u, nb.trailing_zeros() as usize);
        }
    }
    unreachable!("component has a cycle");
}

/// Glues all cycle-carrying components into one by repeatedly switching
/// between one cycle edge of each of the two lowest components. Ignores
/// tree components entirely.
fn glue_cycle_components(g: &LabeledGraph) -> (Vec<TwoSwitch>, LabeledGraph) {
    let mut cur = *g;
    let mut switches = Vec::new();
    loop {
        let cyc = cur.cyc_vertex_mask();
        let comps: Vec<u32> = cur
            .component_masks()
            .into_iter()
            .filter(|&c| c & cyc != 0)
            .collect();
        if comps.len() <= 1 {
            return (switches, cur);
        }
        let (u1, v1) = first_cycle_edge(&cur, cyc, comps[0]);
        let (u2, v2) = first_cycle_edge(&cur, cyc, comps[1]);
        let t = TwoSwitch::new(u1, v1, u2, v2).unwrap();
        debug_assert_eq!(validate(&cur, t), Ok(()));
        switches.push(t);
        cur = apply_assume_valid(&cur, t);
        debug_assert!(cur.is_pseudoforest());
    }
}

/// Turns a pseudoforest whose components all carry a cycle into a single
/// unicyclic graph, one component-merging switch at a time.
pub fn pseudoforest_to_unicyclic(g: &LabeledGraph) -> Result<SwitchSequence, TransitionError> {
    if !g.is_pseudoforest() {
        return Err(TransitionError::NotPseudoforest);
    }
    if g.zeta().unwrap() != 0 {
        return Err(TransitionError::HasAcyclicComponent);
    }
    let (switches, end) = glue_cycle_components(g);
    debug_assert!(end.is_unicyclic());
    let seq = SwitchSequence::replay(*g, switches)?;
    debug_assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));
    Ok(seq)
}

/// Turns a pseudoforest with at least one tree component into a forest:
/// glue all cycle-carrying components into one unicyclic graph, then break
/// its cycle against a tree-component edge.
///
/// Requires a tree component with at least one edge when any cycle exists;
/// isolated vertices alone cannot host the breaking switch.
pub fn pseudoforest_to_forest(g: &LabeledGraph) -> Result<SwitchSequence, TransitionError> {
    if !g.is_pseudoforest() {
        return Err(TransitionError::NotPseudoforest);
    }
    if g.zeta().unwrap() == 0 {
        return Err(TransitionError::NoTreeComponent);
    }
    if g.is_forest() {
        return Ok(SwitchSequence::replay(*g, Vec::new())?);
    }
    let cyc = g.cyc_vertex_mask();
    // Lexicographically smallest edge lying in a tree component.
    let tree_edge = g
        .edges()
        .find(|&(u, _)| g.reach_mask(bit(u), full_mask(g.order())) & cyc == 0)
        .ok_or(TransitionError::NoTreeComponent)?;
    let (mut switches, glued) = glue_cycle_components(g);
    let cycle_edge = first_cycle_edge(&glued, glued.cyc_vertex_mask(), full_mask(g.order()));
    let t = TwoSwitch::new(tree_edge.0, tree_edge.1, cycle_edge.0, cycle_edge.1)?;
    debug_assert_eq!(validate(&glued, t), Ok(()));
    switches.push(t);
    let seq = SwitchSequence::replay(*g, switches)?;
    debug_assert!(seq.target().is_forest());
    debug_assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));
    Ok(seq)
}

/// Is `g` unicyclic once isolated vertices are ignored?
fn support_unicyclic(g: &LabeledGraph) -> bool {
    let mut support = 0u32;
    for v in g.vertices() {
        if g.degree(v) > 0 {
            support |= bit(v);
        }
    }
    if support == 0 {
        return false;
    }
    let start = bit(support.trailing_zeros() as usize);
    g.reach_mask(start, full_mask(g.order())) == support
        && g.size() == support.count_ones() as usize
}

/// Breadth-first bridge inside the unicyclic realizations (isolated
/// vertices ride along unchanged). Bidirectional; deterministic expansion
/// order.
fn unicyclic_bridge(
    from: &LabeledGraph,
    to: &LabeledGraph,
    budget: usize,
) -> Result<Vec<TwoSwitch>, TransitionError> {
    if from == to {
        return Ok(Vec::new());
    }
    let n = from.order();
    // parent maps: graph -> (predecessor, switch applied at predecessor)
    let mut fwd: HashMap<EdgeMask, Option<(EdgeMask, TwoSwitch)>> = HashMap::new();
    let mut bwd: HashMap<EdgeMask, Option<(EdgeMask, TwoSwitch)>> = HashMap::new();
    fwd.insert(from.edge_mask(), None);
    bwd.insert(to.edge_mask(), None);
    let mut fq: VecDeque<EdgeMask> = VecDeque::from([from.edge_mask()]);
    let mut bq: VecDeque<EdgeMask> = VecDeque::from([to.edge_mask()]);
    let mut expanded = 0usize;

    let meet: EdgeMask = 'search: loop {
        let forward = fq.len() <= bq.len();
        let (queue, own, other) = if forward {
            (&mut fq, &mut fwd, &bwd)
        } else {
            (&mut bq, &mut bwd, &fwd)
        };
        let layer = queue.len();
        if layer == 0 {
            unreachable!("unicyclic realizations with one degree vector are switch-connected");
        }
        for _ in 0..layer {
            let mask = queue.pop_front().unwrap();
            expanded += 1;
            if expanded > budget {
                return Err(TransitionError::BudgetExhausted { budget });
            }
            let g = LabeledGraph::from_edge_mask(n, &mask).unwrap();
            for t in enumerate_switches(&g) {
                let img = apply_assume_valid(&g, t);
                if !support_unicyclic(&img) {
                    continue;
                }
                let key = img.edge_mask();
                if own.contains_key(&key) {
                    continue;
                }
                own.insert(key, Some((mask, t)));
                if other.contains_key(&key) {
                    break 'search key;
                }
                queue.push_back(key);
            }
        }
    };

    // Stitch: forward chain to the meeting point, then inverted backward
    // chain onward to `to`.
    let mut first = Vec::new();
    let mut cur = meet;
    while let Some(Some((prev, t))) = fwd.get(&cur) {
        first.push(*t);
        cur = *prev;
    }
    first.reverse();
    let mut second = Vec::new();
    let mut cur = meet;
    while let Some(Some((prev, t))) = bwd.get(&cur) {
        second.push(t.inverse());
        cur = *prev;
    }
    Ok([first, second].concat())
}

/// A pseudoforest-preserving switch sequence transforming `g` into `h`.
pub fn pseudoforest_transition(
    g: &LabeledGraph,
    h: &LabeledGraph,
) -> Result<SwitchSequence, TransitionError> {
    pseudoforest_transition_with_budget(g, h, DEFAULT_BFS_BUDGET)
}

/// Like [`pseudoforest_transition`], with an explicit node budget for the
/// unicyclic bridge search.
pub fn pseudoforest_transition_with_budget(
    g: &LabeledGraph,
    h: &LabeledGraph,
    budget: usize,
) -> Result<SwitchSequence, TransitionError> {
    require_same_degrees(g, h)?;
    if !g.is_pseudoforest() || !h.is_pseudoforest() {
        return Err(TransitionError::NotPseudoforest);
    }
    if g == h {
        return Ok(SwitchSequence::replay(*g, Vec::new())?);
    }

    // ζ is determined by the degree vector; isolated vertices never move,
    // so the branch condition is "does every edge-carrying component have a
    // cycle", i.e. ‖G‖ equals the number of non-isolated vertices.
    let support = g.vertices().filter(|&v| g.degree(v) > 0).count();
    let all_cyclic = g.size() == support;

    let (fwd, bwd) = if all_cyclic {
        let red_g = glue_cycle_components(g);
        let red_h = glue_cycle_components(h);
        let bridge = unicyclic_bridge(&red_g.1, &red_h.1, budget)?;
        ((red_g.0, bridge), red_h.0)
    } else {
        let red_g = pseudoforest_to_forest(g)?;
        let red_h = pseudoforest_to_forest(h)?;
        let bridge = forest_transition(red_g.target(), red_h.target())?;
        ((red_g.switches, bridge.switches), red_h.switches)
    };

    let mut switches = fwd.0;
    switches.extend(fwd.1);
    switches.extend(bwd.into_iter().rev().map(|t| t.inverse()));
    let seq = SwitchSequence::replay(*g, switches)?;
    debug_assert_eq!(seq.target(), h);
    debug_assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));
    Ok(seq)
}

/// |E(G) − E(H)| for two graphs with the same degree vector. Never 1: a
/// single differing edge would force a degree imbalance.
pub fn check_edge_difference(
    g: &LabeledGraph,
    h: &LabeledGraph,
) -> Result<usize, TransitionError> {
    require_same_degrees(g, h)?;
    let diff = g.edge_mask().difference_count(&h.edge_mask());
    debug_assert_ne!(diff, 1);
    Ok(diff)
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

    #[test]
    fn trimmable_examples() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(trimmable_leaves(&p3, &p3).unwrap(), vec![0, 2]);

        let m1 = graph(4, &[(0, 1), (2, 3)]);
        let m2 = graph(4, &[(0, 2), (1, 3)]);
        assert_eq!(trimmable_leaves(&m1, &m2).unwrap(), Vec::<usize>::new());

        let other = graph(4, &[(0, 2), (2, 1), (1, 3)]);
        for ell in trimmable_leaves(&p4(), &other).unwrap() {
            assert_eq!(p4().degree(ell), 1);
            let u = p4().neighbors(ell).next().unwrap();
            assert!(other.has_edge(ell, u));
        }
        assert_eq!(
            trimmable_leaves(&p4(), &graph(4, &[(0, 1)])),
            Err(TransitionError::DegreeMismatch)
        );
    }

    #[test]
    fn make_trimmable_matching_case() {
        // All degrees one: ell=1, v=2, u=3, w=4 in 1-based labels.
        let f = graph(4, &[(0, 1), (2, 3)]);
        let f2 = graph(4, &[(0, 2), (1, 3)]);
        let t = make_trimmable(&f, &f2).unwrap();
        assert_eq!(t, TwoSwitch::new(0, 1, 2, 3).unwrap());
        let img = apply_assume_valid(&f, t);
        assert_eq!(img, f2);
        assert!(trimmable_leaves(&img, &f2).unwrap().contains(&0));
    }

    #[test]
    fn make_trimmable_branching_case() {
        // Leaf 1 has target-neighbor 3 of degree 2 (1-based).
        let f = p4();
        let f2 = graph(4, &[(0, 2), (2, 1), (1, 3)]);
        let t = make_trimmable(&f, &f2).unwrap();
        let img = apply_assume_valid(&f, t);
        assert!(img.is_forest());
        assert!(trimmable_leaves(&img, &f2)
            .unwrap()
            .contains(&t.a()));
        assert_eq!(
            make_trimmable(&f, &f),
            Err(TransitionError::NothingToFix)
        );
    }

    #[test]
    fn forest_transition_identity_and_matchings() {
        let seq = forest_transition(&p4(), &p4()).unwrap();
        assert!(seq.is_empty());

        let f = graph(4, &[(0, 1), (2, 3)]);
        let f2 = graph(4, &[(0, 2), (1, 3)]);
        let seq = forest_transition(&f, &f2).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.target(), &f2);
        // Length bound |E(F') - E(F)| - 1 = 1, tight here.
        assert_eq!(f2.edge_mask().difference_count(&f.edge_mask()) - 1, 1);
    }

    #[test]
    fn forest_transition_handles_isolated_vertices() {
        let f = graph(5, &[(0, 1), (2, 3)]);
        let f2 = graph(5, &[(0, 2), (1, 3)]);
        let seq = forest_transition(&f, &f2).unwrap();
        assert_eq!(seq.target(), &f2);
        assert!(seq.all_satisfy(LabeledGraph::is_forest));
    }

    #[test]
    fn pseudoforest_to_unicyclic_examples() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(pseudoforest_to_unicyclic(&c5).unwrap().is_empty());

        let two = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let seq = pseudoforest_to_unicyclic(&two).unwrap();
        assert_eq!(seq.len(), 1);
        assert!(seq.target().is_unicyclic());
        assert_eq!(seq.target().size(), 6);

        let three = graph(
            9,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        );
        let seq = pseudoforest_to_unicyclic(&three).unwrap();
        assert_eq!(seq.len(), 2);
        assert!(seq.target().is_unicyclic());
        assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));

        assert_eq!(
            pseudoforest_to_unicyclic(&p4()),
            Err(TransitionError::HasAcyclicComponent)
        );
    }

    #[test]
    fn pseudoforest_to_forest_examples() {
        assert!(pseudoforest_to_forest(&p4()).unwrap().is_empty());

        // Triangle plus star: one switch yields a tree.
        let n4 = graph(7, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (3, 6)]);
        let seq = pseudoforest_to_forest(&n4).unwrap();
        assert_eq!(seq.len(), 1);
        assert!(seq.target().is_tree());

        // Two triangles plus one edge: glue, then break.
        let g = graph(
            8,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7)],
        );
        let seq = pseudoforest_to_forest(&g).unwrap();
        assert_eq!(seq.len(), 2);
        assert!(seq.target().is_forest());
        assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));

        let two = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(
            pseudoforest_to_forest(&two),
            Err(TransitionError::NoTreeComponent)
        );
    }

    #[test]
    fn pseudoforest_transition_through_bipartite_region() {
        // Triangle+star and its non-isomorphic degree twin: the sequence
        // exists even though every route passes a bipartite graph.
        let n4 = graph(7, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (3, 6)]);
        let n4p = graph(7, &[(0, 1), (0, 3), (1, 3), (3, 4), (2, 5), (2, 6)]);
        assert_eq!(n4.degree_vector(), n4p.degree_vector());
        let seq = pseudoforest_transition(&n4, &n4p).unwrap();
        assert_eq!(seq.source(), &n4);
        assert_eq!(seq.target(), &n4p);
        assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));
        assert!(seq.trace.iter().any(|g| g.is_bipartite()));
    }

    #[test]
    fn pseudoforest_transition_unicyclic_branch() {
        let a = graph(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]);
        let b = graph(7, &[(0, 3), (3, 2), (0, 2), (1, 4), (4, 5), (5, 6), (1, 6)]);
        assert_eq!(a.degree_vector(), b.degree_vector());
        let seq = pseudoforest_transition(&a, &b).unwrap();
        assert_eq!(seq.target(), &b);
        assert!(seq.all_satisfy(LabeledGraph::is_pseudoforest));
    }

    #[test]
    fn edge_difference() {
        assert_eq!(check_edge_difference(&p4(), &p4()).unwrap(), 0);
        let m1 = graph(4, &[(0, 1), (2, 3)]);
        let m2 = graph(4, &[(0, 2), (1, 3)]);
        assert_eq!(check_edge_difference(&m1, &m2).unwrap(), 2);
        assert!(check_edge_difference(&p4(), &m1).is_err());
    }
}
