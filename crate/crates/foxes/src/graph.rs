//! Simple undirected graphs on dense vertex indices with bitmask adjacency.

use crate::{Error, Result};
use std::fmt;

/// Largest supported graph order. One `u64` bitmask per vertex row.
pub const MAX_ORDER: usize = 64;

/// A set of vertices of a graph of order at most 64, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by the ascending member lists, first difference decides.
    /// `{0,3}` precedes `{1,2}`; used wherever a deterministic "least set"
    /// among incomparable sets is needed.
    pub fn cmp_lex(self, other: VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    /// The endpoint set V(e).
    pub fn set(self) -> VertexSet {
        VertexSet::singleton(self.u).union(VertexSet::singleton(self.v))
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A simple undirected graph of order 1 to 64.
///
/// Equality and hashing are label-sensitive: two graphs are equal exactly
/// when they have the same order and the same edge set. Isomorphism is
/// nobody's business here except the harness's brute-force matcher for
/// small fixed exception graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).difference(VertexSet::singleton(v)).0;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let e = Edge::new(a, b)?;
        self.check_vertex(e.v())?;
        self.adj[e.u()] |= 1u64 << e.v();
        self.adj[e.v()] |= 1u64 << e.u();
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    /// N(s): all vertices outside `s` adjacent to some vertex of `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut nb = 0u64;
        for v in s.intersection(self.vertex_set()).iter() {
            nb |= self.adj[v];
        }
        VertexSet(nb & !s.0 & self.vertex_set().0)
    }

    /// Connected components of the graph induced on `V - removed`,
    /// in ascending order of their minimum vertices.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertex_set().difference(removed);
        while let Some(start) = left.min_vertex() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut grow = 0u64;
                for v in frontier.iter() {
                    grow |= self.adj[v];
                }
                let grow = VertexSet(grow).intersection(left).difference(comp);
                comp = comp.union(grow);
                frontier = grow;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(VertexSet::EMPTY).len() == 1
    }

    /// True when `s` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        if s.is_empty() || !s.is_subset_of(self.vertex_set()) {
            return false;
        }
        self.components(self.vertex_set().difference(s)).len() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u && self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            for v in VertexSet(self.adj[u]).iter() {
                if v > u {
                    t += (self.adj[u] & self.adj[v] & !VertexSet::full(v + 1).0).count_ones()
                        as usize;
                }
            }
        }
        t
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// The graph with `v` deleted; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut adj = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w != v {
                adj.push(shift_out(self.adj[w], v));
            }
        }
        Ok(Graph { n: self.n - 1, adj })
    }

    /// G/e: the endpoints merge into the smaller endpoint index and every
    /// vertex above the larger endpoint shifts down by one. The result is
    /// simple: parallel edges collapse, no loop is created.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::NotAnEdge(e));
        }
        self.contract_set(e.set())
    }

    /// G/s: identify the (connected, nonempty) set `s` into its minimum
    /// vertex; the other members disappear and higher indices shift down.
    pub fn contract_set(&self, s: VertexSet) -> Result<Graph> {
        if !self.induces_connected(s) {
            return Err(Error::DisconnectedSet(s));
        }
        let target = s.min_vertex().expect("nonempty");
        let merged_nb = self.neighborhood(s);
        let removed = s.difference(VertexSet::singleton(target));
        let new_index = |w: usize| w - removed.intersection(VertexSet::full(w)).len();
        let mut g = Graph::new(self.n - removed.len())?;
        for w in self.vertex_set().difference(s).iter() {
            for x in VertexSet(self.adj[w]).difference(s).iter() {
                if x > w {
                    g.add_edge(new_index(w), new_index(x))?;
                }
            }
        }
        for w in merged_nb.iter() {
            g.add_edge(new_index(target), new_index(w))?;
        }
        Ok(g)
    }

    /// Subgraph induced on `keep`, recompacted to indices `0..|keep|`
    /// preserving the relative order of the kept vertices.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let keep = keep.intersection(self.vertex_set());
        let verts = keep.to_vec();
        if verts.is_empty() {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabel by `perm`, where `perm[old] = new`. Must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation length {} does not match order {}",
                perm.len(),
                self.n
            )));
        }
        let mut g = Graph::new(self.n)?;
        for e in self.edges() {
            g.add_edge(perm[e.u()], perm[e.v()])?;
        }
        Ok(g)
    }
}

/// Drop bit `v` from `mask` and shift the higher bits down by one.
fn shift_out(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { mask >> (v + 1) << v };
    low | high
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}
