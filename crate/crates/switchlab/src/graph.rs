//! Labeled simple graphs on a small vertex range, stored as per-vertex
//! adjacency bitsets.
//!
//! A [`LabeledGraph`] is an immutable value: every operation that would
//! mutate a graph returns a new one. Vertices are `0..n` with `n` capped at
//! [`MAX_VERTICES`]; everything this crate verifies is desk-scale, so the
//! whole adjacency fits in a few machine words and graphs are `Copy`.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Hard cap on the vertex count. Adjacency rows are `u32` bitsets.
pub const MAX_VERTICES: usize = 32;

#[inline]
pub(crate) fn bit(v: usize) -> u32 {
    1u32 << v
}

/// Bits strictly above `v`.
#[inline]
pub(crate) fn bits_above(v: usize) -> u32 {
    (!0u32).checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Bits `0..n`.
#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        !0
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) struct BitIter(pub u32);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Errors raised by graph construction, parsing, and the structural
/// operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("vertex index {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex index {0}")]
    SelfLoop(usize),
    #[error("duplicate edge between vertex indices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a pseudoforest")]
    NotPseudoforest,
    #[error("degree vector has odd sum")]
    OddDegreeSum,
    #[error("degree {degree} at position {position} exceeds order-1 = {}", order - 1)]
    DegreeTooLarge {
        position: usize,
        degree: usize,
        order: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple graph on the labeled vertex set `{0, .., n-1}`.
///
/// Immutable after construction; `with_edge`/`without_edge` return new
/// values. Equality and ordering compare the vertex count and the packed
/// edge set, so sorting a `Vec<LabeledGraph>` yields the deterministic
/// "ascending edge bitmask" order used by the enumeration routines.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl LabeledGraph {
    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// vertices, self-loops, and duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = LabeledGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        };
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    /// Number of vertices, |G|.
    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges, ‖G‖.
    pub fn size(&self) -> usize {
        self.adj[..self.order()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.adj[u] & bit(v) != 0
    }

    /// Neighbor set of `u` as a bitset.
    #[inline]
    pub fn neighbor_mask(&self, u: usize) -> u32 {
        debug_assert!(u < self.order());
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        BitIter(self.neighbor_mask(u))
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.neighbor_mask(u).count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            BitIter(self.adj[u] & bits_above(u)).map(move |v| (u, v))
        })
    }

    /// Copy of `self` with the edge `{u, v}` added. Panics in debug builds
    /// if the edge is already present or degenerate.
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Self {
        debug_assert!(u != v && !self.has_edge(u, v));
        let mut g = *self;
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        g
    }

    /// Copy of `self` with the edge `{u, v}` removed.
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Self {
        debug_assert!(self.has_edge(u, v));
        let mut g = *self;
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g
    }

    /// Per-vertex degrees.
    pub fn degree_vector(&self) -> DegreeVector {
        DegreeVector(self.vertices().map(|v| self.degree(v)).collect())
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let full = full_mask(self.order());
        let mut g = LabeledGraph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in self.vertices() {
            g.adj[v] = full & !self.adj[v] & !bit(v);
        }
        g
    }

    /// Vertices reachable from (any bit of) `start`, moving only inside
    /// `allowed`.
    pub(crate) fn reach_mask(&self, start: u32, allowed: u32) -> u32 {
        let mut visited = start & allowed;
        let mut frontier = visited;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !visited;
            visited |= next;
            frontier = next;
        }
        visited
    }

    /// Connected components as vertex bitsets, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u32> {
        let full = full_mask(self.order());
        let mut seen = 0u32;
        let mut comps = Vec::new();
        while seen != full {
            let v = (!seen & full).trailing_zeros() as usize;
            let comp = self.reach_mask(bit(v), full);
            comps.push(comp);
            seen |= comp;
        }
        comps
    }

    /// Number of connected components, κ(G).
    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.order());
        self.reach_mask(1, full) == full
    }

    pub fn is_forest(&self) -> bool {
        let mut dsu = Dsu::new(self.order());
        for (u, v) in self.edges() {
            if !dsu.union(u, v) {
                return false;
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// Connected with exactly one cycle, i.e. ‖G‖ = |G| and connected.
    pub fn is_unicyclic(&self) -> bool {
        self.size() == self.order() && self.is_connected()
    }

    /// Every component contains at most one cycle.
    pub fn is_pseudoforest(&self) -> bool {
        let mut dsu = Dsu::new(self.order());
        let mut cyclic = [false; MAX_VERTICES];
        for (u, v) in self.edges() {
            let ru = dsu.find(u);
            let rv = dsu.find(v);
            if ru == rv {
                if cyclic[ru] {
                    return false;
                }
                cyclic[ru] = true;
            } else {
                if cyclic[ru] && cyclic[rv] {
                    return false;
                }
                let merged = cyclic[ru] || cyclic[rv];
                dsu.union(ru, rv);
                cyclic[dsu.find(ru)] = merged;
            }
        }
        true
    }

    pub fn is_bipartite(&self) -> bool {
        let full = full_mask(self.order());
        let mut colored = 0u32;
        let mut side = [0u32; 2];
        while colored != full {
            let v = (!colored & full).trailing_zeros() as usize;
            let mut frontier = bit(v);
            let mut parity = 0;
            while frontier != 0 {
                side[parity] |= frontier;
                colored |= frontier;
                let mut next = 0;
                for u in BitIter(frontier) {
                    next |= self.adj[u];
                }
                frontier = next & !colored;
                parity ^= 1;
            }
        }
        self.vertices().all(|v| {
            let own = if side[0] & bit(v) != 0 { side[0] } else { side[1] };
            self.adj[v] & own == 0
        })
    }

    /// One-pass structural classification.
    pub fn structural_class(&self) -> StructuralClass {
        let comps = self.component_masks();
        let kappa = comps.len();
        let mut cyclicity = Cyclicity::Zero;
        let mut forest = true;
        let mut pseudo = true;
        for &comp in &comps {
            let nc = comp.count_ones() as usize;
            let mc = self.edges_within(comp);
            let cyclomatic = mc + 1 - nc; // component is connected
            if cyclomatic >= 1 {
                forest = false;
            }
            if cyclomatic >= 2 {
                pseudo = false;
            }
            let c = match cyclomatic {
                0 => Cyclicity::Zero,
                1 => Cyclicity::One,
                _ => Cyclicity::TwoOrMore,
            };
            cyclicity = cyclicity.max(c);
        }
        StructuralClass {
            is_forest: forest,
            is_tree: forest && kappa == 1,
            is_unicyclic: kappa == 1 && cyclicity == Cyclicity::One,
            is_pseudoforest: pseudo,
            is_bipartite: self.is_bipartite(),
            kappa,
            cyclicity,
        }
    }

    /// Number of edges with both endpoints inside `mask`.
    pub(crate) fn edges_within(&self, mask: u32) -> usize {
        BitIter(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Vertices surviving iterated deletion of degree-≤1 vertices (the
    /// 2-core). For a pseudoforest this is exactly the union of its cycles.
    pub(crate) fn cyc_vertex_mask(&self) -> u32 {
        let mut alive = full_mask(self.order());
        loop {
            let mut removed = 0u32;
            for v in BitIter(alive) {
                if (self.adj[v] & alive).count_ones() <= 1 {
                    removed |= bit(v);
                }
            }
            if removed == 0 {
                return alive;
            }
            alive &= !removed;
        }
    }

    /// Splits the edge set of a pseudoforest into its cycle edges and the
    /// remaining (forest) edges.
    pub fn cyc_for(&self) -> Result<CycForDecomposition, GraphError> {
        if !self.is_pseudoforest() {
            return Err(GraphError::NotPseudoforest);
        }
        let cyc = self.cyc_vertex_mask();
        let mut cyc_edges = Vec::new();
        let mut for_edges = Vec::new();
        for (u, v) in self.edges() {
            if cyc & bit(u) != 0 && cyc & bit(v) != 0 {
                cyc_edges.push((u, v));
            } else {
                for_edges.push((u, v));
            }
        }
        // The 2-core of a pseudoforest is a disjoint union of cycles; its
        // component count is the cycle count.
        let mut cycle_count = 0;
        let mut seen = 0u32;
        while seen != cyc {
            let v = (cyc & !seen).trailing_zeros() as usize;
            seen |= self.reach_mask(bit(v), cyc);
            cycle_count += 1;
        }
        Ok(CycForDecomposition {
            cyc_vertices: BitIter(cyc).collect(),
            cyc_edges,
            for_edges,
            cycle_count,
        })
    }

    /// Number of cycles of a pseudoforest.
    pub fn cycle_count(&self) -> Result<usize, GraphError> {
        Ok(self.cyc_for()?.cycle_count)
    }

    /// κ(G) − cyc(G); constant over all pseudoforests with a given degree
    /// vector and always non-negative.
    pub fn zeta(&self) -> Result<usize, GraphError> {
        let cyc = self.cycle_count()?;
        let kappa = self.component_count();
        debug_assert!(kappa >= cyc);
        Ok(kappa - cyc)
    }

    /// Eccentricity-maximum over all vertices (BFS from every vertex).
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let full = full_mask(self.order());
        let mut best = 0;
        for src in self.vertices() {
            let mut visited = bit(src);
            let mut frontier = visited;
            let mut depth = 0;
            while visited != full {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                next &= !visited;
                visited |= next;
                frontier = next;
                depth += 1;
            }
            best = best.max(depth);
        }
        Ok(best)
    }

    /// Packed upper-triangle edge bitmask; the canonical encoding used for
    /// hashing and ordering realizations.
    pub fn edge_mask(&self) -> EdgeMask {
        let mut m = EdgeMask::default();
        for (u, v) in self.edges() {
            m.insert(u, v);
        }
        m
    }

    /// Rebuilds a graph from its packed edge bitmask.
    pub fn from_edge_mask(n: usize, mask: &EdgeMask) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut g = LabeledGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in mask.edges() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }
}

impl PartialOrd for LabeledGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LabeledGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.edge_mask()).cmp(&(other.n, other.edge_mask()))
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for LabeledGraph {
    /// JSON mirror `{"n": .., "edges": [[u, v], ..]}` with 1-based labels
    /// and `u < v` in ascending order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.order(),
            edges: self.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for &(u, v) in &raw.edges {
            if u == 0 || v == 0 || u > raw.n || v > raw.n {
                return Err(D::Error::custom(format!(
                    "edge [{u}, {v}] out of range 1..={}",
                    raw.n
                )));
            }
            edges.push((u - 1, v - 1));
        }
        LabeledGraph::new(raw.n, &edges).map_err(D::Error::custom)
    }
}

/// Per-vertex degree list; entry `v` is the degree of vertex `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<usize>);

impl DegreeVector {
    /// Validates length, per-entry range, and even degree sum.
    pub fn new(degrees: Vec<usize>) -> Result<Self, GraphError> {
        let n = degrees.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        for (position, &degree) in degrees.iter().enumerate() {
            if degree >= n {
                return Err(GraphError::DegreeTooLarge {
                    position,
                    degree,
                    order: n,
                });
            }
        }
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(GraphError::OddDegreeSum);
        }
        Ok(DegreeVector(degrees))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// ‖G‖ of any realization: half the degree sum.
    pub fn edge_count(&self) -> usize {
        self.0.iter().sum::<usize>() / 2
    }

    /// Degrees as a non-increasing multiset.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exact cycle count per component, collapsed to the three cases the
/// structural predicates need.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cyclicity {
    Zero,
    One,
    TwoOrMore,
}

/// Classification record produced by [`LabeledGraph::structural_class`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralClass {
    pub is_forest: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub is_pseudoforest: bool,
    pub is_bipartite: bool,
    pub kappa: usize,
    pub cyclicity: Cyclicity,
}

/// Edge partition of a pseudoforest into cycle edges and forest edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycForDecomposition {
    /// Vertices lying on a cycle, ascending.
    pub cyc_vertices: Vec<usize>,
    /// Edges inside the cycles, ascending `(u, v)` with `u < v`.
    pub cyc_edges: Vec<(usize, usize)>,
    /// All remaining edges.
    pub for_edges: Vec<(usize, usize)>,
    /// Number of cycles.
    pub cycle_count: usize,
}

/// Packed upper-triangle edge bitmask for graphs up to [`MAX_VERTICES`]
/// vertices. Edge `{u, v}` with `u < v` occupies bit `v(v-1)/2 + u`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask {
    words: [u64; 8],
}

#[inline]
fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u != v);
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

impl EdgeMask {
    #[inline]
    pub fn insert(&mut self, u: usize, v: usize) {
        let idx = edge_index(u, v);
        self.words[idx / 64] |= 1u64 << (idx % 64);
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        let idx = edge_index(u, v);
        self.words[idx / 64] & (1u64 << (idx % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// |self − other|: edges present here but not there.
    pub fn difference_count(&self, other: &EdgeMask) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// |self Δ other|.
    pub fn symmetric_difference_count(&self, other: &EdgeMask) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// The low 64 bits of the packing; enough for graphs on up to 11
    /// vertices, which is where the exhaustive sweeps live.
    pub fn low_bits(&self) -> u64 {
        debug_assert!(self.words[1..].iter().all(|&w| w == 0));
        self.words[0]
    }

    pub fn from_low_bits(bits: u64) -> Self {
        let mut words = [0u64; 8];
        words[0] = bits;
        EdgeMask { words }
    }

    /// Decodes the set bits back into `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..8).flat_map(move |w| {
            let mut word = self.words[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                let idx = w * 64 + b;
                // Invert idx = v(v-1)/2 + u.
                let mut v = 1;
                while (v + 1) * v / 2 <= idx {
                    v += 1;
                }
                Some((idx - v * (v - 1) / 2, v))
            })
        })
    }
}

impl fmt::Debug for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeMask[")?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "]")
    }
}

/// Tiny union-find over at most [`MAX_VERTICES`] elements.
pub(crate) struct Dsu {
    parent: [u8; MAX_VERTICES],
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        Dsu { parent }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let gp = self.parent[self.parent[v] as usize];
            self.parent[v] = gp;
            v = gp as usize;
        }
        v
    }

    /// Returns false if `u` and `v` were already in the same set.
    pub fn union(&mut self, u: usize, v: usize) -> bool {
        let ru = self.find(u);
        let rv = self.find(v);
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv as u8;
        true
    }
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

/// Parses the edge-list format: first line `n m`, then `m` lines `u v`
/// (1-based labels). Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "empty input, expected header line \"n m\"".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_int = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, GraphError> {
        tok.ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid {what}"),
        })
    };
    let n = parse_int(it.next(), line_no + 1, "vertex count")?;
    let m = parse_int(it.next(), line_no + 1, "edge count")?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line: line_no + 1,
            message: "trailing tokens after header".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: format!("expected {m} edge lines"),
        })?;
        let mut it = line.split_whitespace();
        let u = parse_int(it.next(), line_no + 1, "edge endpoint")?;
        let v = parse_int(it.next(), line_no + 1, "edge endpoint")?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no + 1,
                message: "trailing tokens after edge".into(),
            });
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(GraphError::Parse {
                line: line_no + 1,
                message: format!("edge {u} {v} out of range 1..={n}"),
            });
        }
        edges.push((u - 1, v - 1));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(GraphError::Parse {
            line: line_no + 1,
            message: "unexpected content after edge list".into(),
        });
    }
    LabeledGraph::new(n, &edges).map_err(|e| match e {
        GraphError::SelfLoop(u) => GraphError::Parse {
            line: 0,
            message: format!("self-loop at vertex {}", u + 1),
        },
        GraphError::DuplicateEdge(u, v) => GraphError::Parse {
            line: 0,
            message: format!("duplicate edge {} {}", u + 1, v + 1),
        },
        other => other,
    })
}

/// Canonical edge-list text: `n m` header, then edges `u v` with `u < v`,
/// ascending, 1-based.
pub fn edge_list_string(g: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Undirected DOT rendering with 1-based vertex labels.
pub fn dot_string(g: &LabeledGraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {};\n", v + 1));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p4() -> LabeledGraph {
        LabeledGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c5() -> LabeledGraph {
        LabeledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Triangle {0,1,2} plus a star with center 3 and leaves 4, 5, 6.
    fn n4() -> LabeledGraph {
        LabeledGraph::new(7, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            LabeledGraph::new(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            LabeledGraph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            LabeledGraph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert!(LabeledGraph::new(0, &[]).is_err());
        assert!(LabeledGraph::new(33, &[]).is_err());
    }

    #[test]
    fn build_b3_from_explicit_edge_list() {
        // K_{3,3} on parts {1,2,3}/{4,5,6} plus leaf edges {1,7}, {4,8};
        // the degree multiset is 5^0 4^2 3^4 1^2.
        let edges = [
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (0, 6),
            (3, 7),
        ];
        let g = LabeledGraph::new(8, &edges).unwrap();
        assert_eq!(g.degree_vector().sorted_desc(), vec![4, 4, 3, 3, 3, 3, 1, 1]);
        assert!(g.is_bipartite());
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(p4().degree_vector().as_slice(), &[1, 2, 2, 1]);
        assert_eq!(n4().degree_vector().as_slice(), &[2, 2, 2, 3, 1, 1, 1]);
        assert_eq!(
            LabeledGraph::empty(3).unwrap().degree_vector().as_slice(),
            &[0, 0, 0]
        );
    }

    #[test]
    fn structural_classification() {
        let p = p4().structural_class();
        assert!(p.is_tree && p.is_forest && p.is_bipartite && p.kappa == 1);
        assert!(!p.is_unicyclic && p.is_pseudoforest);
        assert_eq!(p.cyclicity, Cyclicity::Zero);

        let c = c5().structural_class();
        assert!(c.is_unicyclic && c.is_pseudoforest && c.kappa == 1);
        assert!(!c.is_forest && !c.is_bipartite);
        assert_eq!(c.cyclicity, Cyclicity::One);

        let n = n4().structural_class();
        assert!(n.is_pseudoforest && !n.is_bipartite && n.kappa == 2);
        assert!(!n.is_forest && !n.is_unicyclic);

        // K4 has more than one cycle per component.
        let k4 = LabeledGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.structural_class();
        assert!(!s.is_pseudoforest);
        assert_eq!(s.cyclicity, Cyclicity::TwoOrMore);
    }

    #[test]
    fn cyc_for_decomposition() {
        // A tree has an empty cycle part.
        let t = p4().cyc_for().unwrap();
        assert!(t.cyc_vertices.is_empty() && t.cyc_edges.is_empty());
        assert_eq!(t.for_edges.len(), 3);
        assert_eq!(t.cycle_count, 0);

        // C4 with one pendant leaf.
        let g = LabeledGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let d = g.cyc_for().unwrap();
        assert_eq!(d.cyc_vertices, vec![0, 1, 2, 3]);
        assert_eq!(d.for_edges, vec![(0, 4)]);
        assert_eq!(d.cycle_count, 1);

        // N_4: size + kappa = order + cyc.
        let g = n4();
        let d = g.cyc_for().unwrap();
        assert_eq!(d.cycle_count, 1);
        assert_eq!(g.size() + g.component_count(), g.order() + d.cycle_count);

        let k4 = LabeledGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.cyc_for(), Err(GraphError::NotPseudoforest));
    }

    #[test]
    fn zeta_values() {
        // Forest with three components.
        let f = LabeledGraph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(f.zeta().unwrap(), 3);
        // Two disjoint triangles.
        let tt = LabeledGraph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(tt.zeta().unwrap(), 0);
        assert_eq!(n4().zeta().unwrap(), 1);
    }

    #[test]
    fn diameters() {
        assert_eq!(p4().diameter().unwrap(), 3);
        assert_eq!(c5().diameter().unwrap(), 2);
        assert_eq!(n4().diameter(), Err(GraphError::Disconnected));
    }

    #[test]
    fn diameter_of_three_legged_spider_and_its_switch_image() {
        // Center 10 with three legs of length 3: degree multiset 3^1 2^6 1^3.
        let t = LabeledGraph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 9),
                (3, 4),
                (4, 5),
                (5, 9),
                (6, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        assert_eq!(t.diameter().unwrap(), 6);
        // Replacing edges {3,10}, {8,7} by {3,8}, {10,7} (1-based labels)
        // stretches one leg to length 5.
        let img = t
            .without_edge(2, 9)
            .without_edge(7, 6)
            .with_edge(2, 7)
            .with_edge(9, 6);
        assert!(img.is_tree());
        assert_eq!(img.diameter().unwrap(), 8);
    }

    #[test]
    fn edge_mask_round_trip() {
        for g in [p4(), c5(), n4()] {
            let m = g.edge_mask();
            assert_eq!(m.count(), g.size());
            let back = LabeledGraph::from_edge_mask(g.order(), &m).unwrap();
            assert_eq!(back, g);
        }
        let a = LabeledGraph::new(4, &[(0, 1), (2, 3)]).unwrap().edge_mask();
        let b = LabeledGraph::new(4, &[(0, 2), (1, 3)]).unwrap().edge_mask();
        assert_eq!(a.difference_count(&b), 2);
        assert_eq!(a.symmetric_difference_count(&b), 4);
    }

    #[test]
    fn edge_list_format_round_trip() {
        let text = "4 3\n1 2\n2 3\n3 4\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, p4());
        assert_eq!(edge_list_string(&g), text);

        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3 2\n1 2\n2 1\n").is_err());
        assert!(parse_edge_list("3 1\n1 4\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = n4();
        let js = serde_json::to_string(&g).unwrap();
        assert_eq!(
            js,
            r#"{"n":7,"edges":[[1,2],[1,3],[2,3],[4,5],[4,6],[4,7]]}"#
        );
        let back: LabeledGraph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<LabeledGraph>(r#"{"n":3,"edges":[[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<LabeledGraph>(r#"{"n":3,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn degree_vector_validation() {
        assert!(DegreeVector::new(vec![1, 1]).is_ok());
        assert_eq!(
            DegreeVector::new(vec![1, 1, 1]),
            Err(GraphError::OddDegreeSum)
        );
        assert!(DegreeVector::new(vec![3, 1, 1, 1]).is_ok());
        assert!(matches!(
            DegreeVector::new(vec![4, 2, 1, 1]).unwrap_err(),
            GraphError::DegreeTooLarge { .. }
        ));
    }

    #[test]
    fn dot_output_lists_isolated_vertices() {
        let g = LabeledGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(dot_string(&g), "graph g {\n  3;\n  1 -- 2;\n}\n");
    }
}
