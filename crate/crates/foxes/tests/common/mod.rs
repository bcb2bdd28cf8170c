//! Oracles shared by the integration suites: independent recomputations
//! that the library's combinatorial paths are checked against.

#![allow(dead_code)]

use foxes::graph::{Edge, Graph, VertexSet};

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the Laplacian with row and column 0 struck, computed fraction-free
/// (Bareiss) in i128.
pub fn matrix_tree_count(g: &Graph) -> i128 {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let m = n - 1;
    let mut a = vec![vec![0i128; m]; m];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i == j {
                *cell = g.degree(i + 1) as i128;
            } else if g.has_edge(i + 1, j + 1) {
                *cell = -1;
            }
        }
    }
    let mut prev = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..m).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            for cell in a[k].iter_mut() {
                *cell = -*cell;
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    a[m - 1][m - 1]
}

/// Every DFS tree of `g` the literal way: run depth-first search once per
/// permutation of the vertices, visiting the lowest-priority neighbor
/// first, rooted at the permutation's first vertex.
pub fn literal_dfs_trees(g: &Graph) -> std::collections::BTreeSet<(Vec<Edge>, usize)> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = std::collections::BTreeSet::new();
    permute(&mut perm, 0, &mut |order: &[usize]| {
        let root = order[0];
        let mut priority = vec![0usize; n];
        for (rank, &v) in order.iter().enumerate() {
            priority[v] = rank;
        }
        let mut seen = VertexSet::singleton(root);
        let mut edges: Vec<Edge> = Vec::with_capacity(n - 1);
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            let next = g
                .neighbors(v)
                .difference(seen)
                .iter()
                .min_by_key(|&w| priority[w]);
            match next {
                Some(w) => {
                    seen.insert(w);
                    edges.push(Edge::new(v, w).unwrap());
                    stack.push(w);
                }
                None => {
                    stack.pop();
                }
            }
        }
        if seen == g.vertex_set() {
            edges.sort_unstable();
            out.insert((edges, root));
        }
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// All 2^(n choose 2) labeled graphs on n vertices.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * (n - 1) / 2;
    (0u64..1 << bits).map(move |mask| {
        let mut edges = Vec::new();
        let mut b = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> b & 1 == 1 {
                    edges.push((u, v));
                }
                b += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}
