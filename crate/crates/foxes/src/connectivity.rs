//! Vertex connectivity, smallest separating sets, k-contractible edges,
//! and fragments.
//!
//! Two independent routes to contractibility are kept side by side: the
//! direct route recomputes the connectivity of G/e with max-flow, and the
//! criterion route inspects smallest separating sets found by exhaustive
//! subset search. Tests and the acceptance sweep hold them to agreement.

use crate::graph::{Edge, Graph, VertexSet};
use crate::{Error, Result};

/// Vertex connectivity, computed with unit-capacity vertex-split max-flow
/// over all non-adjacent vertex pairs. A vertex adjacent to every other
/// vertex lies in every separating set, so it is peeled off first. Complete
/// graphs have connectivity `n - 1`; the one-vertex graph has 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == n - 1) {
        // Not complete, so the peeled graph is not complete either.
        return 1 + vertex_connectivity(&g.remove_vertex(v).expect("order >= 3 here"));
    }
    let mut best = usize::MAX;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(min_vertex_cut(g, s, t));
            }
        }
    }
    best
}

/// True when `|V| > k` and no fewer than `k` vertices disconnect the graph.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    g.order() > k && vertex_connectivity(g) >= k
}

/// The family of all smallest separating sets, in ascending bitmask order.
/// Found by exhaustive search over vertex subsets of increasing size, which
/// also re-derives the connectivity independently of the flow route.
/// Complete graphs have no separating set and yield an empty family.
pub fn smallest_separating_sets(g: &Graph) -> Vec<VertexSet> {
    separators_with_kappa(g).1
}

/// Connectivity and the full separator family from one subset sweep.
pub(crate) fn separators_with_kappa(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.order();
    for size in 0..n.saturating_sub(1) {
        let seps: Vec<VertexSet> = subsets_of_size(n, size)
            .filter(|&t| g.components(t).len() > 1)
            .collect();
        if !seps.is_empty() {
            return (size, seps);
        }
    }
    (n - 1, Vec::new())
}

/// All `size`-subsets of `0..n` in ascending bitmask order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = VertexSet> {
    let full = VertexSet::full(n).0;
    let first = VertexSet::full(size).0;
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let mask = cur?;
        if mask & !full != 0 {
            cur = None;
            return None;
        }
        // Gosper's hack: next mask with the same popcount.
        cur = if mask == 0 {
            None
        } else {
            let c = mask & mask.wrapping_neg();
            let r = mask.wrapping_add(c);
            match r {
                0 => None,
                _ => Some((((r ^ mask) >> 2) / c) | r),
            }
        };
        Some(VertexSet(mask))
    })
}

/// Minimum vertex cut between non-adjacent `s` and `t`: every vertex other
/// than the terminals becomes an in/out arc of capacity one.
fn min_vertex_cut(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let big = n as i64;
    let mut net = FlowNet::new(2 * n);
    for w in 0..n {
        net.arc(2 * w, 2 * w + 1, 1);
    }
    for e in g.edges() {
        net.arc(2 * e.u() + 1, 2 * e.v(), big);
        net.arc(2 * e.v() + 1, 2 * e.u(), big);
    }
    net.max_flow(2 * s + 1, 2 * t) as usize
}

struct FlowNet {
    // to, residual capacity; arcs stored in pairs, arc^1 is the reverse.
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, a: usize, b: usize, cap: i64) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(cap);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Edmonds-Karp; fine at this scale since the flow value is at most n.
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut prev_arc = vec![usize::MAX; self.head.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            while let Some(a) = queue.pop_front() {
                for &i in &self.head[a] {
                    let b = self.to[i];
                    if !seen[b] && self.cap[i] > 0 {
                        seen[b] = true;
                        prev_arc[b] = i;
                        queue.push_back(b);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut push = i64::MAX;
            let mut b = t;
            while b != s {
                let i = prev_arc[b];
                push = push.min(self.cap[i]);
                b = self.to[i ^ 1];
            }
            let mut b = t;
            while b != s {
                let i = prev_arc[b];
                self.cap[i] -= push;
                self.cap[i ^ 1] += push;
                b = self.to[i ^ 1];
            }
            total += push;
        }
    }
}

fn require_k_connected(g: &Graph, k: usize) -> Result<()> {
    let kappa = vertex_connectivity(g);
    if g.order() > k && kappa >= k {
        Ok(())
    } else {
        Err(Error::NotKConnected {
            k,
            order: g.order(),
            kappa,
        })
    }
}

/// Is `e` k-contractible: does G/e stay k-connected? Direct route; the
/// graph must itself be k-connected.
pub fn is_contractible(g: &Graph, e: Edge, k: usize) -> Result<bool> {
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    require_k_connected(g, k)?;
    let h = g.contract_edge(e)?;
    Ok(is_k_connected(&h, k))
}

/// Criterion route: in a k-connected graph, an edge fails to be
/// k-contractible exactly when the connectivity equals k and both endpoints
/// lie in one smallest separating set; in the complete graph on k+1
/// vertices every contraction drops the order too low, while larger
/// complete graphs shrug contractions off.
pub fn is_contractible_by_criterion(g: &Graph, e: Edge, k: usize) -> Result<bool> {
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    require_k_connected(g, k)?;
    let (kappa, seps) = separators_with_kappa(g);
    Ok(criterion(g.order(), kappa, &seps, e, k))
}

pub(crate) fn criterion(
    order: usize,
    kappa: usize,
    separators: &[VertexSet],
    e: Edge,
    k: usize,
) -> bool {
    if kappa > k {
        return true;
    }
    if separators.is_empty() {
        // Complete graph of connectivity exactly k, i.e. on k+1 vertices.
        return order >= k + 2;
    }
    !separators.iter().any(|t| e.set().is_subset_of(*t))
}

/// All k-contractible edges, via the criterion route (one separator sweep
/// serves every edge).
pub fn contractible_edges(g: &Graph, k: usize) -> Result<Vec<Edge>> {
    require_k_connected(g, k)?;
    let (kappa, seps) = separators_with_kappa(g);
    Ok(g.edges()
        .into_iter()
        .filter(|&e| criterion(g.order(), kappa, &seps, e, k))
        .collect())
}

/// A T-fragment: a union of at least one but not all components of G - T
/// for a smallest separating set T. Its boundary is exactly T and the
/// complement is what is left over; the complement is itself a fragment.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fragment {
    body: VertexSet,
    boundary: VertexSet,
    complement: VertexSet,
}

impl Fragment {
    pub(crate) fn from_parts(body: VertexSet, boundary: VertexSet, complement: VertexSet) -> Self {
        Fragment {
            body,
            boundary,
            complement,
        }
    }

    pub fn body(&self) -> VertexSet {
        self.body
    }

    pub fn boundary(&self) -> VertexSet {
        self.boundary
    }

    pub fn complement(&self) -> VertexSet {
        self.complement
    }

    /// The complementary fragment over the same boundary; applying it twice
    /// returns to the original fragment.
    pub fn complement_fragment(&self) -> Fragment {
        Fragment {
            body: self.complement,
            boundary: self.boundary,
            complement: self.body,
        }
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }
}

/// Check that `frag` really is a fragment of `g` whose boundary is a
/// smallest separating set, given the graph's connectivity.
pub(crate) fn validate_fragment(g: &Graph, frag: &Fragment, kappa: usize) -> Result<()> {
    let t = frag.boundary();
    let bad = || Error::NotAFragment(frag.body());
    if t.len() != kappa || frag.body().is_empty() || frag.complement().is_empty() {
        return Err(bad());
    }
    let expected_complement = g.vertex_set().difference(t).difference(frag.body());
    if frag.complement() != expected_complement {
        return Err(bad());
    }
    let comps = g.components(t);
    if comps.len() < 2 {
        return Err(Error::NotASeparator(t));
    }
    let mut union = VertexSet::EMPTY;
    for c in &comps {
        if c.intersects(frag.body()) {
            if !c.is_subset_of(frag.body()) {
                return Err(bad());
            }
            union = union.union(*c);
        }
    }
    if union != frag.body() {
        return Err(bad());
    }
    Ok(())
}

/// All T-fragments for one smallest separating set `t`: every union of at
/// least one but not all components of G - t, in ascending order of the
/// component-index subsets.
pub fn fragments_of(g: &Graph, t: VertexSet) -> Result<Vec<Fragment>> {
    let (kappa, _) = separators_with_kappa(g);
    if t.len() != kappa || !t.is_subset_of(g.vertex_set()) {
        return Err(Error::NotASeparator(t));
    }
    let comps = g.components(t);
    if comps.len() < 2 {
        return Err(Error::NotASeparator(t));
    }
    Ok(unions_of_components(g, t, &comps))
}

fn unions_of_components(g: &Graph, t: VertexSet, comps: &[VertexSet]) -> Vec<Fragment> {
    let c = comps.len();
    let mut out = Vec::with_capacity((1usize << c) - 2);
    for pick in 1..(1u64 << c) - 1 {
        let mut body = VertexSet::EMPTY;
        for (i, comp) in comps.iter().enumerate() {
            if pick >> i & 1 == 1 {
                body = body.union(*comp);
            }
        }
        let complement = g.vertex_set().difference(t).difference(body);
        debug_assert_eq!(g.neighborhood(body), t);
        out.push(Fragment::from_parts(body, t, complement));
    }
    out
}

/// Every fragment of the graph over every smallest separating set,
/// deduplicated by body (the first boundary seen wins; boundaries come in
/// ascending bitmask order). Complete graphs have none.
pub fn all_fragments(g: &Graph) -> Vec<Fragment> {
    let (_, seps) = separators_with_kappa(g);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in seps {
        let comps = g.components(t);
        for frag in unions_of_components(g, t, &comps) {
            if seen.insert(frag.body()) {
                out.push(frag);
            }
        }
    }
    out
}

/// The fragment inequality: for a T-fragment F and a T_B-fragment B with
/// intersecting bodies, |B ∩ T| >= |F̄ ∩ T_B|; when equality holds, B ∩ F
/// must moreover be a fragment over (B ∩ T) ∪ (F ∩ T_B) ∪ (T ∩ T_B).
/// Returns false only when the graph witnesses a genuine failure; rejects
/// invalid fragments or disjoint bodies as precondition errors.
pub fn check_lemma1(g: &Graph, b: &Fragment, f: &Fragment) -> Result<bool> {
    let (kappa, _) = separators_with_kappa(g);
    validate_fragment(g, b, kappa)?;
    validate_fragment(g, f, kappa)?;
    if !b.body().intersects(f.body()) {
        return Err(Error::Precondition(format!(
            "fragment bodies {} and {} are disjoint",
            b.body(),
            f.body()
        )));
    }
    Ok(lemma1_core(g, b, f))
}

pub(crate) fn lemma1_core(g: &Graph, b: &Fragment, f: &Fragment) -> bool {
    let t = f.boundary();
    let tb = b.boundary();
    let lhs = b.body().intersection(t).len();
    let rhs = f.complement().intersection(tb).len();
    if lhs > rhs {
        return true;
    }
    if lhs < rhs {
        return false;
    }
    // Equality: B ∩ F must be a union of components of G - X covering
    // something, missing something, with X a smallest separating set.
    let x = b
        .body()
        .intersection(t)
        .union(f.body().intersection(tb))
        .union(t.intersection(tb));
    let body = b.body().intersection(f.body());
    let rest = g.vertex_set().difference(x).difference(body);
    if body.is_empty() || rest.is_empty() {
        return false;
    }
    let comps = g.components(x);
    if comps.len() < 2 {
        return false;
    }
    comps
        .iter()
        .all(|c| c.is_subset_of(body) || !c.intersects(body))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn connectivity_of_standard_graphs() {
        assert_eq!(vertex_connectivity(&Graph::new(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::new(3).unwrap()), 0);
        assert_eq!(vertex_connectivity(&Graph::complete(2).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&Graph::path(4).unwrap()), 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(vertex_connectivity(&prism()), 3);
        // Wheel: hub dominates, rim is a cycle.
        let wheel = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 0),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4),
            ],
        )
        .unwrap();
        assert_eq!(vertex_connectivity(&wheel), 3);
        // Octahedron = K_{2,2,2}.
        let oct = Graph::from_edges(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        assert_eq!(vertex_connectivity(&oct), 4);
    }

    #[test]
    fn k_connected_needs_order_above_k() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k_connected(&k4, 3));
        assert!(!is_k_connected(&k4, 4)); // connectivity 3 and order 4
        assert!(is_k_connected(&Graph::complete(6).unwrap(), 4));
    }

    #[test]
    fn flow_and_subset_sweep_agree_exhaustively_to_order_5() {
        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0u64..1 << bits {
                let mut g = Graph::new(n).unwrap();
                let mut b = 0;
                for v in 1..n {
                    for u in 0..v {
                        if mask >> b & 1 == 1 {
                            g.add_edge(u, v).unwrap();
                        }
                        b += 1;
                    }
                }
                assert_eq!(
                    vertex_connectivity(&g),
                    separators_with_kappa(&g).0,
                    "disagreement on {g:?}"
                );
            }
        }
    }

    #[test]
    fn separators_of_cycle_and_prism() {
        let c4 = Graph::cycle(4).unwrap();
        let seps = smallest_separating_sets(&c4);
        assert_eq!(
            seps,
            vec![[0, 2].into_iter().collect(), [1, 3].into_iter().collect()]
        );

        let g = prism();
        let seps = smallest_separating_sets(&g);
        assert_eq!(seps.len(), 6);
        for v in 0..6 {
            assert!(seps.contains(&g.neighbors(v)), "missing N({v})");
        }
    }

    #[test]
    fn separators_edge_cases() {
        assert!(smallest_separating_sets(&Graph::complete(4).unwrap()).is_empty());
        let p3 = Graph::path(3).unwrap();
        assert_eq!(smallest_separating_sets(&p3), vec![VertexSet::singleton(1)]);
        let disconnected = Graph::new(2).unwrap();
        assert_eq!(
            smallest_separating_sets(&disconnected),
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn every_component_sees_the_whole_separator() {
        for g in [prism(), Graph::cycle(6).unwrap(), Graph::path(5).unwrap()] {
            for t in smallest_separating_sets(&g) {
                for c in g.components(t) {
                    assert_eq!(g.neighborhood(c), t);
                }
            }
        }
    }

    #[test]
    fn complete_graph_contractibility_depends_on_order() {
        let k4 = Graph::complete(4).unwrap();
        for e in k4.edges() {
            assert_eq!(is_contractible(&k4, e, 3), Ok(false));
        }
        let k5 = Graph::complete(5).unwrap();
        for e in k5.edges() {
            assert_eq!(is_contractible(&k5, e, 3), Ok(true)); // connectivity above k
            assert_eq!(is_contractible(&k5, e, 4), Ok(false)); // exactly k+1 vertices
        }
        let k6 = Graph::complete(6).unwrap();
        for e in k6.edges() {
            assert_eq!(is_contractible(&k6, e, 4), Ok(true));
        }
    }

    #[test]
    fn prism_contractible_edges_are_the_matching() {
        let g = prism();
        let want = vec![edge(0, 3), edge(1, 4), edge(2, 5)];
        assert_eq!(contractible_edges(&g, 3).unwrap(), want);
        for e in g.edges() {
            let expect = want.contains(&e);
            assert_eq!(is_contractible(&g, e, 3), Ok(expect), "direct route at {e}");
            assert_eq!(
                is_contractible_by_criterion(&g, e, 3),
                Ok(expect),
                "criterion route at {e}"
            );
        }
    }

    #[test]
    fn contractibility_rejects_bad_inputs() {
        let g = prism();
        assert_eq!(
            is_contractible(&g, edge(0, 4), 3),
            Err(Error::NotAnEdge(edge(0, 4)))
        );
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            is_contractible(&p3, edge(0, 1), 2),
            Err(Error::NotKConnected { k: 2, .. })
        ));
    }

    #[test]
    fn both_routes_agree_exhaustively_to_order_5() {
        for n in 2..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0u64..1 << bits {
                let mut g = Graph::new(n).unwrap();
                let mut b = 0;
                for v in 1..n {
                    for u in 0..v {
                        if mask >> b & 1 == 1 {
                            g.add_edge(u, v).unwrap();
                        }
                        b += 1;
                    }
                }
                for k in 1..n {
                    if !is_k_connected(&g, k) {
                        continue;
                    }
                    for e in g.edges() {
                        assert_eq!(
                            is_contractible(&g, e, k),
                            is_contractible_by_criterion(&g, e, k),
                            "routes disagree on {g:?}, edge {e}, k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fragments_of_prism_neighborhood() {
        let g = prism();
        let t = g.neighbors(0);
        let frags = fragments_of(&g, t).unwrap();
        assert_eq!(frags.len(), 2);
        assert_eq!(frags[0].body().to_vec(), vec![0]);
        assert_eq!(frags[1].body().to_vec(), vec![4, 5]);
        for f in &frags {
            assert_eq!(f.boundary(), t);
            assert_eq!(f.complement_fragment().complement_fragment(), *f);
        }
    }

    #[test]
    fn fragments_of_star_center() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let frags = fragments_of(&star, VertexSet::singleton(0)).unwrap();
        assert_eq!(frags.len(), 6); // 2^3 - 2 unions of the three leaves
        let bodies: Vec<Vec<usize>> = frags.iter().map(|f| f.body().to_vec()).collect();
        assert!(bodies.contains(&vec![1, 2]));
    }

    #[test]
    fn fragments_of_rejects_non_separators() {
        let g = prism();
        let t: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(fragments_of(&g, t), Err(Error::NotASeparator(t)));
        let not_min: VertexSet = [0, 1, 2, 3].into_iter().collect();
        assert_eq!(
            fragments_of(&g, not_min),
            Err(Error::NotASeparator(not_min))
        );
    }

    #[test]
    fn all_fragments_of_cycle_and_complete() {
        let c4 = Graph::cycle(4).unwrap();
        let frags = all_fragments(&c4);
        let bodies: Vec<Vec<usize>> = frags.iter().map(|f| f.body().to_vec()).collect();
        assert_eq!(bodies, vec![vec![1], vec![3], vec![0], vec![2]]);
        assert!(all_fragments(&Graph::complete(4).unwrap()).is_empty());
    }

    #[test]
    fn all_fragments_of_prism() {
        // Six separators (the closed neighborhoods' exteriors), each with a
        // singleton and its opposite pair; all twelve bodies are distinct.
        let frags = all_fragments(&prism());
        assert_eq!(frags.len(), 12);
        let singletons = frags.iter().filter(|f| f.len() == 1).count();
        let pairs = frags.iter().filter(|f| f.len() == 2).count();
        assert_eq!((singletons, pairs), (6, 6));
        for f in &frags {
            assert!(frags.iter().any(|h| h.body() == f.complement()));
        }
    }

    #[test]
    fn lemma1_holds_on_prism_self_pair() {
        let g = prism();
        let frags = fragments_of(&g, g.neighbors(0)).unwrap();
        assert_eq!(check_lemma1(&g, &frags[0], &frags[0]), Ok(true));
        assert_eq!(check_lemma1(&g, &frags[1], &frags[1]), Ok(true));
    }

    #[test]
    fn lemma1_rejects_disjoint_bodies() {
        let g = prism();
        let frags = fragments_of(&g, g.neighbors(0)).unwrap();
        assert!(matches!(
            check_lemma1(&g, &frags[0], &frags[1]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma1_equality_case_on_star() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let frags = fragments_of(&star, VertexSet::singleton(0)).unwrap();
        let b = frags.iter().find(|f| f.body().to_vec() == vec![1]).unwrap();
        let f = frags
            .iter()
            .find(|f| f.body().to_vec() == vec![1, 2])
            .unwrap();
        assert_eq!(check_lemma1(&star, b, f), Ok(true));
    }

    #[test]
    fn fragment_validation_rejects_forgeries() {
        let g = prism();
        let fake = Fragment::from_parts(
            VertexSet::singleton(0),
            [1, 2].into_iter().collect(),
            [3, 4, 5].into_iter().collect(),
        );
        assert!(validate_fragment(&g, &fake, 3).is_err());
    }

    #[test]
    fn subset_enumeration_is_ascending_and_complete() {
        let subs: Vec<VertexSet> = subsets_of_size(4, 2).collect();
        assert_eq!(subs.len(), 6);
        assert!(subs.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(subs[0].to_vec(), vec![0, 1]);
        assert_eq!(subs[5].to_vec(), vec![2, 3]);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(6, 6).count(), 1);
    }
}
