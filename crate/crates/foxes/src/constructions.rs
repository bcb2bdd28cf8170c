//! Named graph families that pin down how tight the tree statements are:
//! wheels, the prism and its one-edge extension, clique-blown cycles with
//! an apex, and the triangle expansion of subcubic graphs together with
//! its tree lift.

use crate::connectivity::vertex_connectivity;
use crate::graph::{Edge, Graph, VertexSet};
use crate::trees::{is_spanning_tree, RootedTree};
use crate::{Error, Result};

/// The wheel with `rim >= 3` rim vertices `0..rim` in a cycle and the hub
/// as the final vertex, adjacent to the whole rim.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::Precondition(format!(
            "a wheel needs a rim of at least 3 vertices, got {rim}"
        )));
    }
    let hub = rim;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, hub)));
    Graph::from_edges(rim + 1, &edges)
}

/// The triangles 012 and 345 joined by the perfect matching i - i+3.
pub fn prism() -> Graph {
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
    .expect("the prism is a fixed valid graph")
}

/// The prism with the extra edge 0-4, the least non-adjacent pair.
pub fn prism_plus() -> Graph {
    let p = prism();
    let mut edges: Vec<(usize, usize)> = p.edges().iter().map(|e| (e.u(), e.v())).collect();
    edges.push((0, 4));
    Graph::from_edges(6, &edges).expect("the extended prism is a fixed valid graph")
}

fn is_critically_2_connected(h: &Graph) -> bool {
    if h.order() < 3 || vertex_connectivity(h) != 2 {
        return false;
    }
    (0..h.order()).all(|v| {
        let smaller = h.remove_vertex(v).expect("v is a vertex of h");
        vertex_connectivity(&smaller) < 2
    })
}

/// Blow each vertex of a critically 2-connected base into a clique of
/// (k-1)/2 vertices, join the cliques of adjacent base vertices
/// completely, and add one apex adjacent to everything. For odd k >= 3
/// the result is k-connected with minimum degree at least (3k-3)/2, and
/// every edge at the apex is non-contractible.
///
/// Base vertex `v` becomes indices `v*s..(v+1)*s` where `s = (k-1)/2`;
/// the apex is the final vertex.
pub fn lex_apex(base: &Graph, k: usize) -> Result<Graph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "the apex construction needs odd k >= 3, got {k}"
        )));
    }
    if !is_critically_2_connected(base) {
        return Err(Error::Precondition(
            "the apex construction needs a critically 2-connected base".to_string(),
        ));
    }
    let s = (k - 1) / 2;
    let n = base.order();
    let apex = n * s;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for a in v * s..(v + 1) * s {
            for b in (a + 1)..(v + 1) * s {
                edges.push((a, b));
            }
        }
    }
    for e in base.edges() {
        for a in e.u() * s..(e.u() + 1) * s {
            for b in e.v() * s..(e.v() + 1) * s {
                edges.push((a, b));
            }
        }
    }
    edges.extend((0..apex).map(|a| (a, apex)));
    Graph::from_edges(apex + 1, &edges)
}

/// `lex_apex` over the cycle of length `n`. With k = 3 this is exactly
/// `wheel(n)`, labels included.
pub fn cycle_lex_apex(n: usize, k: usize) -> Result<Graph> {
    lex_apex(&Graph::cycle(n)?, k)
}

/// The index of the attachment vertex an edge of `g` at `x` uses inside
/// the triangle of `x`: ports go to neighbors in ascending order.
fn port(g: &Graph, x: usize, y: usize) -> usize {
    let rank = g
        .neighbors(x)
        .iter()
        .position(|w| w == y)
        .expect("y is a neighbor of x");
    3 * x + rank
}

/// Replace every vertex `x` of a graph with maximum degree at most 3 by
/// the triangle `3x, 3x+1, 3x+2` and reattach each edge between the
/// ports of its endpoints. Cubic input gives cubic output, and the
/// expansion of a 3-connected cubic graph is again 3-connected.
pub fn triangle_expand(g: &Graph) -> Result<Graph> {
    if let Some(x) = (0..g.order()).find(|&x| g.degree(x) > 3) {
        return Err(Error::Precondition(format!(
            "triangle expansion needs maximum degree 3, vertex {x} has degree {}",
            g.degree(x)
        )));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for x in 0..g.order() {
        edges.extend([
            (3 * x, 3 * x + 1),
            (3 * x, 3 * x + 2),
            (3 * x + 1, 3 * x + 2),
        ]);
    }
    for e in g.edges() {
        edges.push((port(g, e.u(), e.v()), port(g, e.v(), e.u())));
    }
    Graph::from_edges(3 * g.order(), &edges)
}

/// Lift a spanning tree `q` of `g` to a spanning tree of
/// `triangle_expand(g)`: every tree edge is kept between its ports, and
/// each triangle contributes a path through its three vertices chosen by
/// its set P of tree ports. With |P| = 2 the path runs port, third
/// vertex, port; with |P| = 1 it starts at the port and continues
/// ascending; otherwise it is the ascending path. A Hamiltonian path
/// rooted at an endpoint lifts to a Hamiltonian path of the expansion
/// rooted at an endpoint, hence to a depth-first tree. The lifted root is
/// the last vertex of the root's triangle path.
pub fn lift_tree(g: &Graph, q: &RootedTree) -> Result<RootedTree> {
    if !is_spanning_tree(g, q) {
        return Err(Error::Precondition(
            "the lift needs a spanning tree of the base graph".to_string(),
        ));
    }
    if (0..g.order()).any(|x| g.degree(x) > 3) {
        return Err(Error::Precondition(
            "triangle expansion needs maximum degree 3".to_string(),
        ));
    }
    let mut edges: Vec<Edge> = Vec::new();
    for e in q.edges() {
        edges.push(Edge::new(port(g, e.u(), e.v()), port(g, e.v(), e.u()))?);
    }
    let mut root = None;
    for x in 0..g.order() {
        let ports: VertexSet = q
            .edges()
            .iter()
            .filter(|e| e.set().contains(x))
            .map(|e| port(g, x, e.other(x)))
            .collect();
        let triangle: Vec<usize> = (3 * x..3 * x + 3).collect();
        let path: Vec<usize> = match ports.len() {
            2 => {
                let p = ports.to_vec();
                let third = *triangle.iter().find(|v| !ports.contains(**v)).unwrap();
                vec![p[0], third, p[1]]
            }
            1 => {
                let a = ports.min_vertex().unwrap();
                let mut rest: Vec<usize> = triangle.iter().copied().filter(|&v| v != a).collect();
                rest.sort_unstable();
                vec![a, rest[0], rest[1]]
            }
            _ => triangle,
        };
        edges.push(Edge::new(path[0], path[1])?);
        edges.push(Edge::new(path[1], path[2])?);
        if q.root() == Some(x) {
            root = Some(path[2]);
        }
    }
    Ok(RootedTree::new(edges, root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{contractible_edges, is_k_connected};
    use crate::trees::{count_contractible, find_fox_certificate, is_dfs_tree, is_fox};

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn wheel_three_is_k4() {
        assert_eq!(wheel(3).unwrap(), Graph::complete(4).unwrap());
        assert!(wheel(2).is_err());
    }

    #[test]
    fn wheel_shape() {
        let w = wheel(5).unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.degree(5), 5);
        assert!((0..5).all(|v| w.degree(v) == 3));
        assert_eq!(vertex_connectivity(&w), 3);
    }

    #[test]
    fn prism_shape() {
        let p = prism();
        assert!(p.is_cubic());
        assert_eq!(vertex_connectivity(&p), 3);
        assert_eq!(p.triangle_count(), 2);
    }

    #[test]
    fn prism_plus_contractible_edges() {
        let g = prism_plus();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(vertex_connectivity(&g), 3);
        let contractible = contractible_edges(&g, 3).unwrap();
        let want = [edge(0, 3), edge(1, 2), edge(1, 4), edge(2, 5), edge(3, 5)];
        assert_eq!(contractible, want);
        // The other five edges form a spanning tree, so the graph is a
        // fox: that tree has no contractible edge at all.
        let cert = find_fox_certificate(&g, 3).unwrap().unwrap();
        assert_eq!(cert.tree.edges().len(), 5);
        assert_eq!(count_contractible(&g, &cert.tree, 3), Ok(0));
        assert!(!is_fox(&prism(), 3).unwrap());
    }

    #[test]
    fn cycle_apex_with_k3_is_the_wheel() {
        for n in 3..8 {
            assert_eq!(cycle_lex_apex(n, 3).unwrap(), wheel(n).unwrap());
        }
    }

    #[test]
    fn cycle_apex_five_five() {
        let g = cycle_lex_apex(5, 5).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.degree(10), 10);
        assert_eq!(g.min_degree(), 6);
        assert!(is_k_connected(&g, 5));
        assert!(!is_k_connected(&g, 6));
        // Every apex edge is non-contractible, so the apex star shows the
        // graph is a fox.
        let star = RootedTree::new((0..10).map(|v| edge(v, 10)).collect(), None);
        assert!(is_spanning_tree(&g, &star));
        assert_eq!(count_contractible(&g, &star, 5), Ok(0));
        assert!(is_fox(&g, 5).unwrap());
    }

    #[test]
    fn apex_construction_rejects_bad_parameters() {
        assert!(matches!(cycle_lex_apex(5, 4), Err(Error::Precondition(_))));
        assert!(matches!(cycle_lex_apex(5, 1), Err(Error::Precondition(_))));
        // K4 is 3-connected, a path is 1-connected, and K_{2,3} is
        // 2-connected but stays 2-connected after deleting a degree-2
        // vertex: none of them is a valid base.
        assert!(lex_apex(&Graph::complete(4).unwrap(), 3).is_err());
        assert!(lex_apex(&Graph::path(4).unwrap(), 3).is_err());
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(lex_apex(&k23, 3).is_err());
    }

    #[test]
    fn expansion_of_k4() {
        let e = triangle_expand(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(e.order(), 12);
        assert!(e.is_cubic());
        assert_eq!(vertex_connectivity(&e), 3);
        assert_eq!(e.triangle_count(), 4);
        assert!(triangle_expand(&Graph::complete(5).unwrap()).is_err());
    }

    #[test]
    fn expansion_ports_follow_neighbor_order() {
        let g = Graph::complete(4).unwrap();
        let e = triangle_expand(&g).unwrap();
        // Edge 0-1 uses the rank-0 port at both ends; edge 2-3 uses the
        // last port of triangle 2 and of triangle 3.
        assert!(e.has_edge(0, 3));
        assert!(e.has_edge(8, 11));
        assert!(e.has_edge(1, 6));
        assert!(e.has_edge(2, 9));
    }

    #[test]
    fn lifted_star_of_k4() {
        let g = Graph::complete(4).unwrap();
        let star = RootedTree::new(vec![edge(0, 1), edge(0, 2), edge(0, 3)], None);
        let e = triangle_expand(&g).unwrap();
        let lifted = lift_tree(&g, &star).unwrap();
        assert!(is_spanning_tree(&e, &lifted));
        assert_eq!(count_contractible(&e, &lifted, 3), Ok(3));
    }

    #[test]
    fn lifted_hamiltonian_path_of_k4_is_a_dfs_tree() {
        let g = Graph::complete(4).unwrap();
        let path = RootedTree::new(vec![edge(0, 1), edge(1, 2), edge(2, 3)], Some(0));
        let e = triangle_expand(&g).unwrap();
        let lifted = lift_tree(&g, &path).unwrap();
        assert!(is_spanning_tree(&e, &lifted));
        // The lift of the path 0-1-2-3 runs 2-1-0, 3-5-4, 7-6-8, 11-9-10
        // joined by the lifted tree edges, rooted at the free end 2.
        assert_eq!(lifted.root(), Some(2));
        assert_eq!(is_dfs_tree(&e, &lifted), Ok(true));
        assert_eq!(count_contractible(&e, &lifted, 3), Ok(3));
    }

    #[test]
    fn lift_rejects_non_spanning_input() {
        let g = Graph::complete(4).unwrap();
        let not_spanning = RootedTree::new(vec![edge(0, 1), edge(1, 2)], None);
        assert!(matches!(
            lift_tree(&g, &not_spanning),
            Err(Error::Precondition(_))
        ));
    }
}
