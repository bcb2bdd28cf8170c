//! Independent oracles for the enumeration cores.
//!
//! Spanning tree counts are re-derived from the Kirchhoff determinant of
//! the reduced Laplacian with exact integer arithmetic, and DFS trees are
//! re-derived by literally running depth-first search under every vertex
//! priority order. The library's combinatorial paths must match both.

mod common;

use common::{all_labeled_graphs, literal_dfs_trees, matrix_tree_count};
use foxes::graph::{Edge, Graph};
use foxes::trees::{count_spanning_trees, dfs_trees, RootedTree};

const CAP: u64 = 1 << 21;

fn named_fixtures() -> Vec<(&'static str, Graph)> {
    let prism = Graph::from_edges(
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
    .unwrap();
    vec![
        ("prism", prism),
        ("k6", Graph::complete(6).unwrap()),
        ("c7", Graph::cycle(7).unwrap()),
        ("p6", Graph::path(6).unwrap()),
        (
            "k33",
            Graph::from_edges(
                6,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                ],
            )
            .unwrap(),
        ),
    ]
}

#[test]
fn enumeration_matches_the_determinant_on_fixtures() {
    for (name, g) in named_fixtures() {
        let by_enum = count_spanning_trees(&g, CAP).unwrap() as i128;
        let by_det = matrix_tree_count(&g);
        assert_eq!(by_enum, by_det, "tree count mismatch on {name}");
    }
    // The frozen constants the rest of the suite leans on.
    assert_eq!(matrix_tree_count(&named_fixtures()[0].1), 75);
    assert_eq!(matrix_tree_count(&Graph::complete(4).unwrap()), 16);
}

#[test]
fn enumeration_matches_the_determinant_exhaustively_to_order_6() {
    for n in 1..=6 {
        for g in all_labeled_graphs(n) {
            let by_det = matrix_tree_count(&g);
            match count_spanning_trees(&g, CAP) {
                Ok(c) => assert_eq!(c as i128, by_det, "mismatch on {g:?}"),
                Err(_) => assert_eq!(by_det, 0, "disconnected must have determinant 0: {g:?}"),
            }
        }
    }
}

#[test]
fn characterization_matches_literal_dfs_exhaustively_to_order_5() {
    for n in 1..=5 {
        for g in all_labeled_graphs(n) {
            if !g.is_connected() {
                continue;
            }
            let by_filter: std::collections::BTreeSet<(Vec<Edge>, usize)> = dfs_trees(&g, CAP)
                .unwrap()
                .into_iter()
                .map(|t: RootedTree| (t.edges().to_vec(), t.root().unwrap()))
                .collect();
            let by_dfs = literal_dfs_trees(&g);
            assert_eq!(by_filter, by_dfs, "DFS tree sets differ on {g:?}");
        }
    }
}

#[test]
fn literal_dfs_pins_the_small_derived_sets() {
    // Path on three vertices: one tree, every root qualifies.
    let p3 = Graph::path(3).unwrap();
    assert_eq!(literal_dfs_trees(&p3).len(), 3);
    // K4: the twelve Hamiltonian paths, each from both ends.
    let k4 = Graph::complete(4).unwrap();
    assert_eq!(literal_dfs_trees(&k4).len(), 24);
    // A cycle: n Hamiltonian paths times two end roots.
    let c5 = Graph::cycle(5).unwrap();
    assert_eq!(literal_dfs_trees(&c5).len(), 10);
}
