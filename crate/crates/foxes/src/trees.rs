//! Spanning trees, DFS trees, and foxes.
//!
//! A rooted spanning tree Q of G is a DFS tree when for every vertex x no
//! edge of G joins two distinct x-branches, where an x-branch is a
//! component of Q - x not containing the root. A fox is a k-connected
//! graph owning a spanning tree without a single k-contractible edge; the
//! certificate search never enumerates trees, it only asks whether the
//! non-contractible edges span the graph.

use crate::connectivity;
use crate::graph::{Edge, Graph, VertexSet};
use crate::{Error, Result};
use std::ops::ControlFlow;

/// Default bound on enumerated spanning trees before an explicit
/// `TreeCapExceeded` error; exceeding it is never silent.
pub const DEFAULT_TREE_CAP: u64 = 10_000_000;

/// A tree given by its edge list (kept sorted) and an optional root.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedTree {
    edges: Vec<Edge>,
    root: Option<usize>,
}

impl RootedTree {
    pub fn new(mut edges: Vec<Edge>, root: Option<usize>) -> RootedTree {
        edges.sort_unstable();
        RootedTree { edges, root }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(&self, root: usize) -> RootedTree {
        RootedTree {
            edges: self.edges.clone(),
            root: Some(root),
        }
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The tree as a graph on the host graph's vertex set.
    pub fn as_graph(&self, order: usize) -> Result<Graph> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u(), e.v())).collect();
        Graph::from_edges(order, &pairs)
    }
}

/// Is `t` a spanning tree of `g`: right edge count, edges of `g`, connected.
pub fn is_spanning_tree(g: &Graph, t: &RootedTree) -> bool {
    if t.edges().len() + 1 != g.order() {
        return false;
    }
    if !t.edges().iter().all(|&e| g.contains_edge(e)) {
        return false;
    }
    match t.as_graph(g.order()) {
        Ok(tg) => tg.is_connected(),
        Err(_) => false,
    }
}

fn require_spanning(g: &Graph, t: &RootedTree) -> Result<()> {
    if is_spanning_tree(g, t) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "not a spanning tree of the graph: {:?}",
            t.edges()
        )))
    }
}

/// Visit every spanning tree of a connected graph exactly once, rootless,
/// in a fixed order: each edge in ascending order is first included, then
/// excluded when the rest can still span. Returns the number of trees, or
/// `TreeCapExceeded` after `cap` trees have been visited.
pub fn visit_spanning_trees<F>(g: &Graph, cap: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&RootedTree),
{
    visit_spanning_trees_until(g, cap, |t| {
        visit(t);
        ControlFlow::Continue(())
    })
}

/// Like `visit_spanning_trees`, but the visitor may stop the enumeration
/// early by returning `ControlFlow::Break(())`. The returned count is the
/// number of trees visited up to and including the breaking one.
pub fn visit_spanning_trees_until<F>(g: &Graph, cap: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&RootedTree) -> ControlFlow<()>,
{
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    let n = g.order();
    let mut dsu = Dsu::new(n);
    let mut chosen: Vec<Edge> = Vec::with_capacity(n - 1);
    let mut count = 0u64;
    let _ = recurse(
        &edges,
        n,
        0,
        &mut dsu,
        &mut chosen,
        cap,
        &mut count,
        &mut visit,
    )?;
    return Ok(count);

    #[allow(clippy::too_many_arguments)]
    fn recurse<F: FnMut(&RootedTree) -> ControlFlow<()>>(
        edges: &[Edge],
        n: usize,
        idx: usize,
        dsu: &mut Dsu,
        chosen: &mut Vec<Edge>,
        cap: u64,
        count: &mut u64,
        visit: &mut F,
    ) -> Result<ControlFlow<()>> {
        if chosen.len() == n - 1 {
            if *count == cap {
                return Err(Error::TreeCapExceeded(cap));
            }
            *count += 1;
            return Ok(visit(&RootedTree {
                edges: chosen.clone(),
                root: None,
            }));
        }
        if idx == edges.len() {
            return Ok(ControlFlow::Continue(()));
        }
        let e = edges[idx];
        if dsu.find(e.u()) != dsu.find(e.v()) {
            let saved = dsu.clone();
            dsu.union(e.u(), e.v());
            chosen.push(e);
            let flow = recurse(edges, n, idx + 1, dsu, chosen, cap, count, visit)?;
            chosen.pop();
            *dsu = saved;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        // Excluding e is only worth descending into when the remaining
        // edges still connect everything (e is no bridge of what is left).
        let mut probe = dsu.clone();
        let mut parts = probe.parts();
        for &later in &edges[idx + 1..] {
            if probe.union(later.u(), later.v()) {
                parts -= 1;
                if parts == 1 {
                    break;
                }
            }
        }
        if parts == 1 {
            return recurse(edges, n, idx + 1, dsu, chosen, cap, count, visit);
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Collect all spanning trees; order matches `visit_spanning_trees`.
pub fn spanning_trees(g: &Graph, cap: u64) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    visit_spanning_trees(g, cap, |t| out.push(t.clone()))?;
    Ok(out)
}

pub fn count_spanning_trees(g: &Graph, cap: u64) -> Result<u64> {
    visit_spanning_trees(g, cap, |_| {})
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<u8>,
    parts: usize,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n as u8).collect(),
            parts: n,
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let p = self.parent[v] as usize;
        if p == v {
            return v;
        }
        let r = self.find(p);
        self.parent[v] = r as u8;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb) as u8;
        self.parts -= 1;
        true
    }

    fn parts(&self) -> usize {
        self.parts
    }
}

/// The x-branches of a rooted spanning tree, for every vertex x: the
/// components of Q - x that avoid the root, in ascending order of their
/// minimum vertices.
pub struct BranchDecomposition {
    branches: Vec<Vec<VertexSet>>,
}

impl BranchDecomposition {
    pub fn branches(&self, x: usize) -> &[VertexSet] {
        &self.branches[x]
    }
}

pub fn branch_decomposition(g: &Graph, t: &RootedTree) -> Result<BranchDecomposition> {
    require_spanning(g, t)?;
    let root = t
        .root()
        .ok_or_else(|| Error::Precondition("tree has no root".into()))?;
    let tg = t.as_graph(g.order())?;
    let branches = (0..g.order())
        .map(|x| {
            tg.components(VertexSet::singleton(x))
                .into_iter()
                .filter(|c| !c.contains(root))
                .collect()
        })
        .collect();
    Ok(BranchDecomposition { branches })
}

/// Is the rooted tree a DFS tree of `g`: no edge of `g` may join two
/// distinct x-branches, for any x.
pub fn is_dfs_tree(g: &Graph, t: &RootedTree) -> Result<bool> {
    require_spanning(g, t)?;
    let root = t
        .root()
        .ok_or_else(|| Error::Precondition("tree has no root".into()))?;
    if root >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            order: g.order(),
        });
    }
    let tg = t.as_graph(g.order())?;
    Ok(is_dfs_given(g, &tg, root))
}

/// Branch-nonadjacency check against a prebuilt tree graph.
pub(crate) fn is_dfs_given(g: &Graph, tree_graph: &Graph, root: usize) -> bool {
    for x in g.vertices() {
        let mut branches = tree_graph.components(VertexSet::singleton(x));
        branches.retain(|c| !c.contains(root));
        for (i, a) in branches.iter().enumerate() {
            let reach = g.neighborhood(*a);
            for b in &branches[i + 1..] {
                if reach.intersects(*b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Visit every DFS tree of `g` as a (tree, root) pair: spanning trees in
/// enumeration order, roots ascending within each tree. The cap applies to
/// the underlying spanning tree stream.
pub fn visit_dfs_trees<F>(g: &Graph, cap: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&RootedTree),
{
    let mut pairs = 0u64;
    visit_spanning_trees_with(g, cap, |t| {
        let tg = t.as_graph(g.order()).expect("tree edges come from g");
        for root in g.vertices() {
            if is_dfs_given(g, &tg, root) {
                pairs += 1;
                visit(&t.with_root(root));
            }
        }
    })?;
    Ok(pairs)
}

// Thin alias so visit_dfs_trees reads clearly.
fn visit_spanning_trees_with<F: FnMut(&RootedTree)>(g: &Graph, cap: u64, f: F) -> Result<u64> {
    visit_spanning_trees(g, cap, f)
}

pub fn dfs_trees(g: &Graph, cap: u64) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    visit_dfs_trees(g, cap, |t| out.push(t.clone()))?;
    Ok(out)
}

/// How many edges of the spanning tree `t` are k-contractible in `g`.
pub fn count_contractible(g: &Graph, t: &RootedTree, k: usize) -> Result<usize> {
    require_spanning(g, t)?;
    let contractible = connectivity::contractible_edges(g, k)?;
    Ok(t.edges()
        .iter()
        .filter(|e| contractible.contains(e))
        .count())
}

/// A spanning tree witnessing that `g` is a k-fox: none of its edges is
/// k-contractible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoxCertificate {
    pub k: usize,
    pub tree: RootedTree,
}

/// Find a fox certificate, or None when every spanning tree of `g` has a
/// k-contractible edge. No tree enumeration: a certificate exists exactly
/// when the non-k-contractible edges span the graph, and then a
/// breadth-first tree of that subgraph (from vertex 0, neighbors ascending)
/// is returned.
pub fn find_fox_certificate(g: &Graph, k: usize) -> Result<Option<FoxCertificate>> {
    let contractible = connectivity::contractible_edges(g, k)?;
    let mut sub = Graph::new(g.order())?;
    for e in g.edges() {
        if !contractible.contains(&e) {
            sub.add_edge(e.u(), e.v())?;
        }
    }
    if !sub.is_connected() {
        return Ok(None);
    }
    // BFS tree of the non-contractible subgraph.
    let mut edges = Vec::with_capacity(g.order() - 1);
    let mut seen = VertexSet::singleton(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for w in sub.neighbors(v).difference(seen).iter() {
            seen.insert(w);
            edges.push(Edge::new(v, w).expect("v != w"));
            queue.push_back(w);
        }
    }
    Ok(Some(FoxCertificate {
        k,
        tree: RootedTree::new(edges, None),
    }))
}

pub fn is_fox(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_fox_certificate(g, k)?.is_some())
}

/// Which trees a minimum search ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreeMode {
    Spanning,
    Dfs,
}

/// The minimum number of k-contractible tree edges over all spanning trees
/// (rootless) or over all DFS trees (rooted), with a witness attaining it.
/// Stops early at zero.
pub fn min_contractible_over(
    g: &Graph,
    k: usize,
    mode: TreeMode,
    cap: u64,
) -> Result<(usize, RootedTree)> {
    let contractible = connectivity::contractible_edges(g, k)?;
    let count = |t: &RootedTree| {
        t.edges()
            .iter()
            .filter(|e| contractible.contains(e))
            .count()
    };
    let mut best: Option<(usize, RootedTree)> = None;
    let mut update = |t: &RootedTree| {
        let c = count(t);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, t.clone()));
        }
    };
    // An early exit at zero would need a sentinel error through the visitor;
    // sweeps at this scale finish fast enough without one.
    match mode {
        TreeMode::Spanning => visit_spanning_trees(g, cap, &mut update)?,
        TreeMode::Dfs => visit_dfs_trees(g, cap, &mut update)?,
    };
    best.ok_or_else(|| Error::Precondition("graph has no tree of the requested mode".into()))
}
