//! The 2-switch operation and the structure-preservation classifiers.
//!
//! A 2-switch `(a b / c d)` deletes the edges `ab`, `cd` and adds `ac`,
//! `bd`; it is valid when the four vertices are distinct, both deleted
//! edges are present, and both added edges are absent. The classifiers
//! decide, without applying the switch, whether the image stays a tree
//! (`classify_t`), a forest (`classify_f`), a unicyclic graph
//! (`classify_u`), or a pseudoforest (`classify_p`). In debug builds every
//! classifier cross-checks its verdict against the applied image; release
//! builds trust the structural rules.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{bit, BitIter, GraphError, LabeledGraph};

/// Errors from switch validation and the classifier preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SwitchError {
    #[error("vertex index {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("switch vertices are not pairwise distinct")]
    VerticesNotDistinct,
    #[error("edge to remove ({}, {}) is not in the graph", .0 + 1, .1 + 1)]
    MissingRemovalEdge(usize, usize),
    #[error("edge to add ({}, {}) is already in the graph", .0 + 1, .1 + 1)]
    PresentAdditionEdge(usize, usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not a pseudoforest")]
    NotPseudoforest,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An ordered 2-switch: remove `ab` and `cd`, add `ac` and `bd`.
///
/// The four orderings `(a,b,c,d)`, `(c,d,a,b)`, `(b,a,d,c)`, `(d,c,b,a)`
/// encode the same edge replacement; [`TwoSwitch::canonical`] picks the
/// lexicographically smallest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TwoSwitch {
    a: u8,
    b: u8,
    c: u8,
    d: u8,
}

impl TwoSwitch {
    /// Builds a switch from vertex indices. Distinctness is not required
    /// here; it is part of validity against a graph.
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self, SwitchError> {
        for v in [a, b, c, d] {
            if v >= crate::MAX_VERTICES {
                return Err(SwitchError::VertexOutOfRange {
                    vertex: v,
                    order: crate::MAX_VERTICES,
                });
            }
        }
        Ok(TwoSwitch {
            a: a as u8,
            b: b as u8,
            c: c as u8,
            d: d as u8,
        })
    }

    #[inline]
    pub(crate) fn from_u8(a: u8, b: u8, c: u8, d: u8) -> Self {
        TwoSwitch { a, b, c, d }
    }

    #[inline]
    pub fn a(&self) -> usize {
        self.a as usize
    }
    #[inline]
    pub fn b(&self) -> usize {
        self.b as usize
    }
    #[inline]
    pub fn c(&self) -> usize {
        self.c as usize
    }
    #[inline]
    pub fn d(&self) -> usize {
        self.d as usize
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.a(), self.b(), self.c(), self.d()]
    }

    /// Edges deleted by this switch: `{a,b}` and `{c,d}`.
    pub fn removed_edges(&self) -> [(usize, usize); 2] {
        [(self.a(), self.b()), (self.c(), self.d())]
    }

    /// Edges added by this switch: `{a,c}` and `{b,d}`.
    pub fn added_edges(&self) -> [(usize, usize); 2] {
        [(self.a(), self.c()), (self.b(), self.d())]
    }

    /// The switch `(a c / b d)` undoing this one:
    /// `apply(apply(g, t), t.inverse()) == g`.
    pub fn inverse(&self) -> TwoSwitch {
        TwoSwitch {
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    /// Smallest of the four encodings of the same edge replacement.
    pub fn canonical(&self) -> TwoSwitch {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        [
            TwoSwitch::from_u8(a, b, c, d),
            TwoSwitch::from_u8(c, d, a, b),
            TwoSwitch::from_u8(b, a, d, c),
            TwoSwitch::from_u8(d, c, b, a),
        ]
        .into_iter()
        .min()
        .unwrap()
    }
}

impl Serialize for TwoSwitch {
    /// Serializes as a 1-based `[a, b, c, d]` quadruple.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for v in self.vertices() {
            seq.serialize_element(&(v + 1))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TwoSwitch {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = <[usize; 4]>::deserialize(deserializer)?;
        if raw.iter().any(|&v| v == 0) {
            return Err(D::Error::custom("switch vertices are 1-based"));
        }
        TwoSwitch::new(raw[0] - 1, raw[1] - 1, raw[2] - 1, raw[3] - 1).map_err(D::Error::custom)
    }
}

/// Full validity diagnosis of `t` against `g`, naming the first violated
/// condition.
pub fn validate(g: &LabeledGraph, t: TwoSwitch) -> Result<(), SwitchError> {
    let n = g.order();
    for v in t.vertices() {
        if v >= n {
            return Err(SwitchError::VertexOutOfRange { vertex: v, order: n });
        }
    }
    let m = bit(t.a()) | bit(t.b()) | bit(t.c()) | bit(t.d());
    if m.count_ones() != 4 {
        return Err(SwitchError::VerticesNotDistinct);
    }
    if !g.has_edge(t.a(), t.b()) {
        return Err(SwitchError::MissingRemovalEdge(t.a(), t.b()));
    }
    if !g.has_edge(t.c(), t.d()) {
        return Err(SwitchError::MissingRemovalEdge(t.c(), t.d()));
    }
    if g.has_edge(t.a(), t.c()) {
        return Err(SwitchError::PresentAdditionEdge(t.a(), t.c()));
    }
    if g.has_edge(t.b(), t.d()) {
        return Err(SwitchError::PresentAdditionEdge(t.b(), t.d()));
    }
    Ok(())
}

/// Whether `t` is a valid 2-switch on `g`. Out-of-range vertices are a hard
/// error; every other failed condition just yields `false`.
pub fn is_valid(g: &LabeledGraph, t: TwoSwitch) -> Result<bool, SwitchError> {
    match validate(g, t) {
        Ok(()) => Ok(true),
        Err(e @ SwitchError::VertexOutOfRange { .. }) => Err(e),
        Err(_) => Ok(false),
    }
}

/// Applies a validated switch: `g - ab - cd + ac + bd`.
pub fn apply(g: &LabeledGraph, t: TwoSwitch) -> Result<LabeledGraph, SwitchError> {
    validate(g, t)?;
    Ok(apply_assume_valid(g, t))
}

/// Applies `t` without re-validating. The caller promises validity (e.g.
/// the switch came from [`enumerate_switches`]); debug builds still check.
pub fn apply_assume_valid(g: &LabeledGraph, t: TwoSwitch) -> LabeledGraph {
    debug_assert_eq!(validate(g, t), Ok(()));
    let img = g
        .without_edge(t.a(), t.b())
        .without_edge(t.c(), t.d())
        .with_edge(t.a(), t.c())
        .with_edge(t.b(), t.d());
    debug_assert_eq!(img.degree_vector(), g.degree_vector());
    debug_assert_eq!(
        img.edge_mask().symmetric_difference_count(&g.edge_mask()),
        4
    );
    img
}

/// All valid switches on `g`, one canonical representative per edge
/// replacement, in ascending `(a, b, c, d)` order.
pub fn enumerate_switches(g: &LabeledGraph) -> Vec<TwoSwitch> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(u1, v1)) in edges.iter().enumerate() {
        for &(u2, v2) in &edges[i + 1..] {
            if u2 == u1 || u2 == v1 || v2 == u1 || v2 == v1 {
                continue; // edges share a vertex
            }
            // Replacement 1: remove u1v1, u2v2; add u1u2, v1v2.
            if !g.has_edge(u1, u2) && !g.has_edge(v1, v2) {
                out.push(TwoSwitch::from_u8(u1 as u8, v1 as u8, u2 as u8, v2 as u8));
            }
            // Replacement 2: remove u1v1, u2v2; add u1v2, v1u2.
            if !g.has_edge(u1, v2) && !g.has_edge(v1, u2) {
                out.push(TwoSwitch::from_u8(u1 as u8, v1 as u8, v2 as u8, u2 as u8));
            }
        }
    }
    // The generation above already emits canonical encodings: u1 < v1,
    // u1 < u2 < v2, and u1 is the smallest of the four vertices.
    debug_assert!(out.iter().all(|t| *t == t.canonical()));
    out.sort_unstable();
    out
}

/// Outcome of a preservation classifier.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SwitchVerdict {
    /// Does the image stay inside the structural class of the input?
    pub preserves: bool,
    /// Which class the verdict is about (`none` when not preserved).
    pub kind: SwitchKind,
    /// Identifier of the structural rule that decided the verdict.
    pub reason: &'static str,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwitchKind {
    T,
    F,
    U,
    P,
    None,
}

fn verdict(preserves: bool, kind: SwitchKind, reason: &'static str) -> SwitchVerdict {
    SwitchVerdict {
        preserves,
        kind: if preserves { kind } else { SwitchKind::None },
        reason,
    }
}

/// Unique path between two vertices of a forest, as a vertex list. `None`
/// when the endpoints lie in different components.
fn forest_path(g: &LabeledGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    if from == to {
        return Some(vec![from]);
    }
    let full = crate::graph::full_mask(g.order());
    let mut parent = [usize::MAX; crate::MAX_VERTICES];
    let mut visited = bit(from);
    let mut frontier = visited;
    'bfs: while frontier != 0 {
        let mut next = 0u32;
        for u in BitIter(frontier) {
            let fresh = g.neighbor_mask(u) & !visited & full;
            for v in BitIter(fresh) {
                parent[v] = u;
            }
            next |= fresh;
            if fresh & bit(to) != 0 {
                break 'bfs;
            }
        }
        visited |= next;
        frontier = next;
    }
    if parent[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    Some(path)
}

/// The tree criterion: the (unique) path between the deleted edges must
/// traverse a→b…c→d or b→a…d→c.
fn has_tree_pattern(g: &LabeledGraph, t: TwoSwitch) -> bool {
    if let Some(p) = forest_path(g, t.a(), t.d()) {
        if p.len() >= 4 && p[1] == t.b() && p[p.len() - 2] == t.c() {
            return true;
        }
    }
    if let Some(p) = forest_path(g, t.b(), t.c()) {
        if p.len() >= 4 && p[1] == t.a() && p[p.len() - 2] == t.d() {
            return true;
        }
    }
    false
}

#[cfg(debug_assertions)]
fn cross_check(g: &LabeledGraph, t: TwoSwitch, v: &SwitchVerdict, pred: fn(&LabeledGraph) -> bool) {
    let img = apply_assume_valid(g, t);
    debug_assert_eq!(
        v.preserves,
        pred(&img),
        "classifier verdict {v:?} disagrees with applied image for {t:?} on {g:?}"
    );
}

#[cfg(not(debug_assertions))]
fn cross_check(
    _g: &LabeledGraph,
    _t: TwoSwitch,
    _v: &SwitchVerdict,
    _pred: fn(&LabeledGraph) -> bool,
) {
}

/// Does a valid switch on a tree produce a tree?
pub fn classify_t(g: &LabeledGraph, t: TwoSwitch) -> Result<SwitchVerdict, SwitchError> {
    if !g.is_tree() {
        return Err(SwitchError::NotATree);
    }
    validate(g, t)?;
    let v = if has_tree_pattern(g, t) {
        verdict(true, SwitchKind::T, "path-orientation-match")
    } else {
        verdict(false, SwitchKind::T, "path-orientation-mismatch")
    };
    cross_check(g, t, &v, LabeledGraph::is_tree);
    Ok(v)
}

/// Does a valid switch on a forest produce a forest? Edges in different
/// components always preserve; within one component the tree criterion
/// applies.
pub fn classify_f(g: &LabeledGraph, t: TwoSwitch) -> Result<SwitchVerdict, SwitchError> {
    if !g.is_forest() {
        return Err(SwitchError::NotAForest);
    }
    validate(g, t)?;
    let same_component = forest_path(g, t.a(), t.c()).is_some();
    let v = if !same_component {
        verdict(true, SwitchKind::F, "cross-component")
    } else if has_tree_pattern(g, t) {
        verdict(true, SwitchKind::F, "path-orientation-match")
    } else {
        verdict(false, SwitchKind::F, "path-orientation-mismatch")
    };
    cross_check(g, t, &v, LabeledGraph::is_forest);
    Ok(v)
}

/// Membership of the deleted edges relative to the cycle part.
#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgePlace {
    Cycle,
    Forest,
}

fn edge_place(cyc_mask: u32, u: usize, v: usize) -> EdgePlace {
    if cyc_mask & bit(u) != 0 && cyc_mask & bit(v) != 0 {
        EdgePlace::Cycle
    } else {
        EdgePlace::Forest
    }
}

/// Tree criterion on `U - e` for every cycle edge `e`.
fn tree_pattern_on_all_spanning_trees(g: &LabeledGraph, cyc_mask: u32, t: TwoSwitch) -> bool {
    let mut cyc_edges = Vec::new();
    for u in BitIter(cyc_mask) {
        for v in BitIter(g.neighbor_mask(u) & cyc_mask & crate::graph::bits_above(u)) {
            cyc_edges.push((u, v));
        }
    }
    cyc_edges
        .iter()
        .all(|&(u, v)| has_tree_pattern(&g.without_edge(u, v), t))
}

/// Does a valid switch on a unicyclic graph produce a unicyclic graph?
///
/// Three cases by edge location: both deleted edges outside the cycle
/// require the tree criterion on every cycle-edge-deleted spanning tree;
/// one cycle edge always preserves; two cycle edges preserve exactly when
/// the rewired cycle is still a single cycle (automatic for cycles of
/// length at most 5).
pub fn classify_u(g: &LabeledGraph, t: TwoSwitch) -> Result<SwitchVerdict, SwitchError> {
    if !g.is_unicyclic() {
        return Err(SwitchError::NotUnicyclic);
    }
    validate(g, t)?;
    let cyc = g.cyc_vertex_mask();
    let p1 = edge_place(cyc, t.a(), t.b());
    let p2 = edge_place(cyc, t.c(), t.d());
    let v = match (p1, p2) {
        (EdgePlace::Forest, EdgePlace::Forest) => {
            if tree_pattern_on_all_spanning_trees(g, cyc, t) {
                verdict(true, SwitchKind::U, "forest-pair-spanning-tree-paths")
            } else {
                verdict(false, SwitchKind::U, "forest-pair-path-mismatch")
            }
        }
        (EdgePlace::Cycle, EdgePlace::Forest) | (EdgePlace::Forest, EdgePlace::Cycle) => {
            verdict(true, SwitchKind::U, "cycle-forest-mix")
        }
        (EdgePlace::Cycle, EdgePlace::Cycle) => {
            if cyc.count_ones() <= 5 {
                verdict(true, SwitchKind::U, "short-cycle-rotation")
            } else {
                // Rewire just the cycle and test whether it stays a single
                // cycle; all degrees stay 2, so connectedness decides.
                let mut cycle_only = LabeledGraph::empty(g.order()).unwrap();
                for u in BitIter(cyc) {
                    for w in BitIter(g.neighbor_mask(u) & cyc & crate::graph::bits_above(u)) {
                        cycle_only = cycle_only.with_edge(u, w);
                    }
                }
                let img = apply_assume_valid(&cycle_only, t);
                let start = bit(cyc.trailing_zeros() as usize);
                if img.reach_mask(start, cyc) == cyc {
                    verdict(true, SwitchKind::U, "long-cycle-rotation")
                } else {
                    verdict(false, SwitchKind::U, "long-cycle-split")
                }
            }
        }
    };
    cross_check(g, t, &v, LabeledGraph::is_unicyclic);
    Ok(v)
}

/// Does a valid switch on a pseudoforest produce a pseudoforest?
///
/// If either deleted edge lies in a tree component, or touches a cycle,
/// the image is always a pseudoforest. The only configurations that can
/// fail have both deleted edges outside the cycles of unicyclic
/// components:
///
/// * both in the same unicyclic component, hanging from different cycle
///   vertices — decided by the tree criterion on every cycle-edge-deleted
///   spanning tree;
/// * both hanging from the same cycle vertex — fails exactly when the
///   rewiring closes a second cycle inside the piece that keeps the
///   original cycle;
/// * in two distinct unicyclic components — fails exactly when one of the
///   two merged image components receives both original cycles.
pub fn classify_p(g: &LabeledGraph, t: TwoSwitch) -> Result<SwitchVerdict, SwitchError> {
    if !g.is_pseudoforest() {
        return Err(SwitchError::NotPseudoforest);
    }
    validate(g, t)?;
    let full = crate::graph::full_mask(g.order());
    let comp1 = g.reach_mask(bit(t.a()), full);
    let comp2 = g.reach_mask(bit(t.c()), full);
    let cyc = g.cyc_vertex_mask();

    let v = if comp1 & cyc == 0 || comp2 & cyc == 0 {
        // At least one deleted edge lives in a tree component: the switch
        // can create at most one new cycle there.
        verdict(true, SwitchKind::P, "tree-component-edge")
    } else if comp1 == comp2 {
        let p1 = edge_place(cyc, t.a(), t.b());
        let p2 = edge_place(cyc, t.c(), t.d());
        match (p1, p2) {
            (EdgePlace::Cycle, _) | (_, EdgePlace::Cycle) => {
                // A cycle edge is deleted, or the pair mixes cycle and
                // forest edges; either way every outcome has at most one
                // cycle per component.
                verdict(true, SwitchKind::P, "cycle-edge-within-component")
            }
            (EdgePlace::Forest, EdgePlace::Forest) => {
                // Components of For(U): connectivity after removing the
                // cycle edges of this component.
                let mut forest_part = *g;
                for u in BitIter(cyc & comp1) {
                    for w in BitIter(forest_part.neighbor_mask(u)
                        & cyc
                        & comp1
                        & crate::graph::bits_above(u))
                    {
                        forest_part = forest_part.without_edge(u, w);
                    }
                }
                let anchor_tree_a = forest_part.reach_mask(bit(t.a()), full);
                if anchor_tree_a & bit(t.c()) == 0 {
                    // Hanging trees anchored at different cycle vertices.
                    if tree_pattern_on_all_spanning_trees(g, cyc & comp1, t) {
                        verdict(true, SwitchKind::P, "cross-anchor-spanning-tree-paths")
                    } else {
                        verdict(false, SwitchKind::P, "cross-anchor-path-mismatch")
                    }
                } else {
                    // Same hanging tree: the rewiring fails exactly when it
                    // closes a new cycle in the piece still holding the
                    // original cycle.
                    let cut = g
                        .without_edge(t.a(), t.b())
                        .without_edge(t.c(), t.d());
                    let piece_a = cut.reach_mask(bit(t.a()), full);
                    let piece_b = cut.reach_mask(bit(t.b()), full);
                    let captures = (piece_a & bit(t.c()) != 0 && piece_a & cyc != 0)
                        || (piece_b & bit(t.d()) != 0 && piece_b & cyc != 0);
                    if captures {
                        verdict(false, SwitchKind::P, "same-anchor-second-cycle")
                    } else {
                        verdict(true, SwitchKind::P, "same-anchor-rearrangement")
                    }
                }
            }
        }
    } else {
        let p1 = edge_place(cyc, t.a(), t.b());
        let p2 = edge_place(cyc, t.c(), t.d());
        match (p1, p2) {
            (EdgePlace::Forest, EdgePlace::Forest) => {
                // Both components are unicyclic and both deleted edges
                // avoid the cycles. The image merges piece(a)+piece(c) and
                // piece(b)+piece(d); each merged component must capture at
                // most one of the two cycles.
                let cut = g
                    .without_edge(t.a(), t.b())
                    .without_edge(t.c(), t.d());
                let tree_a = cut.reach_mask(bit(t.a()), full) & cyc == 0;
                let tree_b = cut.reach_mask(bit(t.b()), full) & cyc == 0;
                let tree_c = cut.reach_mask(bit(t.c()), full) & cyc == 0;
                let tree_d = cut.reach_mask(bit(t.d()), full) & cyc == 0;
                if (tree_b && tree_c) || (tree_a && tree_d) {
                    verdict(true, SwitchKind::P, "cross-component-cycle-separation")
                } else {
                    verdict(false, SwitchKind::P, "cross-component-cycle-collision")
                }
            }
            _ => {
                // At least one deleted edge is a cycle edge: its component
                // stays connected after the deletion, so the two cycles
                // cannot end up in one image component.
                verdict(true, SwitchKind::P, "cross-component-cycle-break")
            }
        }
    };
    cross_check(g, t, &v, LabeledGraph::is_pseudoforest);
    Ok(v)
}
