//! Simple graphs, loop sets and the self-loop graphs built from them.
//!
//! Vertices are `0..n`. Edges are kept as sorted pairs `(u, v)` with `u < v`,
//! in lexicographic order, which fixes the column order of incidence matrices
//! and the vertex order of line graphs.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; pairs may be given in either
    /// orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![false; n * n];
        let mut list = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u * n + v] {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(SimpleGraph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: Vec::new(),
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidFamilyParams(format!("cycle needs n >= 3, got {n}")));
        }
        SimpleGraph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Graph whose edge `k` (in lexicographic pair order) is present iff bit
    /// `k` of `mask` is set. Enumerating `mask` over `0..2^(n(n-1)/2)` yields
    /// every labeled graph of order `n` exactly once.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        SimpleGraph::new(n, edges).expect("mask edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges `m`.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adj[u * n + v]);
        SimpleGraph::new(n, edges).expect("complement edges are valid")
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<SimpleGraph> {
        check_distinct(vertices, self.n)?;
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::new(vertices.len(), edges)
    }

    /// `G \ S`: the graph left after deleting the vertices of `set`.
    pub fn delete_vertices(&self, set: &LoopSet) -> Result<SimpleGraph> {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !set.contains(v)).collect();
        if let Some(&v) = set.members().iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.components().iter().all(|&c| c == 0)
    }

    /// Component label of every vertex, labels numbered in order of first
    /// appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if label[u] == usize::MAX {
                        label[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Pairwise non-adjacency. Empty sets and singletons qualify.
    pub fn is_independent_set(&self, set: &LoopSet) -> bool {
        let m = set.members();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Pairwise adjacency. Empty sets and singletons qualify.
    pub fn is_clique(&self, set: &LoopSet) -> bool {
        let m = set.members();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Part sizes (in order of first vertex) if the graph is complete
    /// multipartite, i.e. its complement is a disjoint union of cliques.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        let co = self.complement();
        let label = co.components();
        let parts = label.iter().max().map_or(0, |&l| l + 1);
        let mut sizes = vec![0usize; parts];
        for &l in &label {
            sizes[l] += 1;
        }
        // Each complement component must be a clique.
        for u in 0..self.n {
            for v in u + 1..self.n {
                if label[u] == label[v] && self.has_edge(u, v) {
                    return None;
                }
            }
        }
        Some(sizes)
    }

    /// `(k, p)` when the graph is `K_{k×p}`.
    pub fn regular_complete_multipartite(&self) -> Option<(usize, usize)> {
        let parts = self.complete_multipartite_parts()?;
        let p = parts[0];
        parts.iter().all(|&s| s == p).then_some((parts.len(), p))
    }
}

fn check_distinct(vertices: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    Ok(())
}

/// The vertex set `S` carrying loops, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LoopSet {
    members: Vec<usize>,
}

impl LoopSet {
    pub fn empty() -> Self {
        LoopSet::default()
    }

    pub fn full(n: usize) -> Self {
        LoopSet {
            members: (0..n).collect(),
        }
    }

    /// Loops on the first `sigma` vertices.
    pub fn first(sigma: usize) -> Self {
        Self::full(sigma)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(LoopSet { members })
    }

    /// Loop set whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        LoopSet {
            members: (0..64).filter(|b| mask >> b & 1 == 1).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `σ = |S|`.
    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement_in(&self, n: usize) -> LoopSet {
        LoopSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }
}

/// `G_S`: a simple graph with a loop at each vertex of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopedGraph {
    base: SimpleGraph,
    loops: LoopSet,
}

impl LoopedGraph {
    pub fn new(base: SimpleGraph, loops: LoopSet) -> Result<Self> {
        if let Some(&v) = loops.members().last() {
            if v >= base.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: base.order(),
                });
            }
        }
        Ok(LoopedGraph { base, loops })
    }

    /// `G` itself, with `σ = 0`.
    pub fn loopless(base: SimpleGraph) -> Self {
        LoopedGraph {
            base,
            loops: LoopSet::empty(),
        }
    }

    /// `Ĝ`, with a loop at every vertex.
    pub fn full_loops(base: SimpleGraph) -> Self {
        let loops = LoopSet::full(base.order());
        LoopedGraph { base, loops }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn loops(&self) -> &LoopSet {
        &self.loops
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Number of ordinary edges; loops are not counted.
    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn sigma(&self) -> usize {
        self.loops.len()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    /// Degree in `G_S`: a loop adds 2.
    pub fn degree(&self, v: usize) -> usize {
        self.base.degree(v) + if self.has_loop(v) { 2 } else { 0 }
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let base = self.base.degrees();
        let looped = (0..self.order()).map(|v| self.degree(v)).collect();
        DegreeSummary {
            max: base.iter().copied().max().unwrap_or(0),
            min: base.iter().copied().min().unwrap_or(0),
            base,
            looped,
            m: self.size(),
            sigma: self.sigma(),
        }
    }

    /// Induced subgraph keeping the loops of the chosen vertices.
    pub fn induced(&self, vertices: &[usize]) -> Result<LoopedGraph> {
        let base = self.base.induced(vertices)?;
        let loops = vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.has_loop(v))
            .map(|(i, _)| i);
        LoopedGraph::new(base, LoopSet::from_indices(loops)?)
    }

    /// Classifies the degree structure that the equality cases of the
    /// spectral radius lower bounds depend on.
    pub fn classify_bidegreed(&self) -> DegreeClass {
        let degrees = self.base.degrees();
        let lo = degrees.iter().copied().min();
        let hi = degrees.iter().copied().max();
        let regular = match (lo, hi) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        let bidegreed = match (lo, hi) {
            (Some(a), Some(b)) if b == a + 1 => Some(a),
            _ => None,
        };
        // d = k on S and d = k + 1 off S, for a single k >= 0.
        let mut k: Option<usize> = None;
        let mut aligned = self.order() > 0;
        for (v, &d) in degrees.iter().enumerate() {
            let candidate = if self.has_loop(v) {
                Some(d)
            } else {
                d.checked_sub(1)
            };
            match (candidate, k) {
                (None, _) => aligned = false,
                (Some(c), None) => k = Some(c),
                (Some(c), Some(prev)) if c != prev => aligned = false,
                _ => {}
            }
        }
        DegreeClass {
            regular,
            bidegreed,
            s_aligned: if aligned { k } else { None },
            bipartite: self.base.is_bipartite(),
        }
    }

    /// FNV-1a over the canonical `(n, edges, loops)` encoding.
    pub fn digest(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.order() as u64);
        for &(u, v) in self.base.edges() {
            feed(u as u64);
            feed(v as u64);
        }
        feed(u64::MAX);
        for &v in self.loops.members() {
            feed(v as u64);
        }
        h
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    /// `d_G(v)` per vertex.
    pub base: Vec<usize>,
    /// `d_{G_S}(v)` per vertex.
    pub looped: Vec<usize>,
    /// `Δ(G)`.
    pub max: usize,
    /// `δ(G)`.
    pub min: usize,
    pub m: usize,
    pub sigma: usize,
}

impl DegreeSummary {
    /// Average degree `2m/n` of the base graph.
    pub fn average(&self) -> f64 {
        if self.base.is_empty() {
            0.0
        } else {
            2.0 * self.m as f64 / self.base.len() as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeClass {
    /// `Some(r)` when `G` is `r`-regular.
    pub regular: Option<usize>,
    /// `Some(k)` when the degrees of `G` are exactly `{k, k+1}`.
    pub bidegreed: Option<usize>,
    /// `Some(k)` when `d_G(v) = k` on `S` and `k + 1` off `S`.
    pub s_aligned: Option<usize>,
    pub bipartite: bool,
}

impl DegreeClass {
    /// `(k, k+1)`-semiregular with the low degree exactly on `S`.
    pub fn semiregular_aligned(&self) -> bool {
        self.s_aligned.is_some() && self.bipartite
    }
}

/// Named graph families used by the equality certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `K_n` with loops on its first `sigma` vertices.
    KnSigma { n: usize, sigma: usize },
    /// `K̂_n`.
    KnHat { n: usize },
    /// `K_{n_1, ..., n_k}` with an explicit loop set.
    CompleteMultipartite { parts: Vec<usize>, loops: Vec<usize> },
    /// `K_{k×p}`, loopless.
    Kkxp { k: usize, p: usize },
    /// `n` isolated vertices, each with a loop.
    EdgelessFullLoop { n: usize },
    /// `K_{3,2}` with loops on the side of size 3.
    K32S,
}

/// Loose parameter bag for building a [`Family`] from its textual id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub sigma: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub parts: Vec<usize>,
    pub loops: Vec<usize>,
}

impl Family {
    pub const IDS: [&'static str; 6] = [
        "kn_sigma",
        "kn_hat",
        "multipartite",
        "kkxp",
        "edgeless_full_loop",
        "k32_s",
    ];

    /// Resolves a family id (case-insensitive) with its parameters.
    pub fn from_id(id: &str, params: &FamilyParams) -> Result<Family> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::InvalidFamilyParams(format!("`{id}` needs `{what}`")))
        };
        let family = match id.to_ascii_lowercase().as_str() {
            "kn_sigma" => Family::KnSigma {
                n: need(params.n, "n")?,
                sigma: params.sigma.unwrap_or(0),
            },
            "kn_hat" => Family::KnHat {
                n: need(params.n, "n")?,
            },
            "multipartite" => Family::CompleteMultipartite {
                parts: params.parts.clone(),
                loops: params.loops.clone(),
            },
            "kkxp" => Family::Kkxp {
                k: need(params.k, "k")?,
                p: need(params.p, "p")?,
            },
            "edgeless_full_loop" => Family::EdgelessFullLoop {
                n: need(params.n, "n")?,
            },
            "k32_s" => Family::K32S,
            _ => return Err(Error::UnknownFamily(id.to_string())),
        };
        Ok(family)
    }

    pub fn id(&self) -> &'static str {
        match self {
            Family::KnSigma { .. } => "kn_sigma",
            Family::KnHat { .. } => "kn_hat",
            Family::CompleteMultipartite { .. } => "multipartite",
            Family::Kkxp { .. } => "kkxp",
            Family::EdgelessFullLoop { .. } => "edgeless_full_loop",
            Family::K32S => "k32_s",
        }
    }

    pub fn build(&self) -> Result<LoopedGraph> {
        match *self {
            Family::KnSigma { n, sigma } => {
                positive(n, "n")?;
                if sigma > n {
                    return Err(Error::InvalidFamilyParams(format!(
                        "sigma = {sigma} exceeds n = {n}"
                    )));
                }
                LoopedGraph::new(SimpleGraph::complete(n), LoopSet::first(sigma))
            }
            Family::KnHat { n } => {
                positive(n, "n")?;
                Ok(LoopedGraph::full_loops(SimpleGraph::complete(n)))
            }
            Family::CompleteMultipartite { ref parts, ref loops } => {
                let base = complete_multipartite(parts)?;
                LoopedGraph::new(base, LoopSet::from_indices(loops.iter().copied())?)
            }
            Family::Kkxp { k, p } => {
                positive(k, "k")?;
                positive(p, "p")?;
                Ok(LoopedGraph::loopless(complete_multipartite(&vec![p; k])?))
            }
            Family::EdgelessFullLoop { n } => {
                positive(n, "n")?;
                Ok(LoopedGraph::full_loops(SimpleGraph::empty(n)))
            }
            Family::K32S => {
                let base = complete_multipartite(&[3, 2])?;
                LoopedGraph::new(base, LoopSet::first(3))
            }
        }
    }
}

fn positive(v: usize, name: &str) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidFamilyParams(format!("`{name}` must be at least 1")))
    } else {
        Ok(())
    }
}

/// `K_{n_1, ..., n_k}`; parts occupy consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<SimpleGraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidFamilyParams(String::from(
            "multipartite needs at least one part, all of size >= 1",
        )));
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    SimpleGraph::new(n, edges)
}
