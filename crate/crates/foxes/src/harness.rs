//! Exhaustive verification sweeps.
//!
//! Each statement about contractible edges in spanning or DFS trees is
//! checked on every graph of a corpus, quantifying over all spanning
//! trees (and roots, for DFS statements) as the statement demands. The
//! built-in corpora enumerate one representative per isomorphism class of
//! connected graphs, which is exhaustive for the isomorphism-invariant
//! statements checked here and keeps the sweeps within desk-scale
//! runtimes. Graphs failing a statement's hypothesis are skipped, never
//! counted as violations; a sweep cut off by the tree cap makes the graph
//! inconclusive rather than silently passing.
//!
//! Reports are deterministic: two runs over the same corpus produce
//! byte-identical JSON, and every recorded violation can be replayed from
//! its graph6 string alone.

use crate::connectivity::{
    all_fragments, is_k_connected, lemma1_core, smallest_separating_sets, vertex_connectivity,
    Fragment,
};
use crate::constructions::{prism, prism_plus};
use crate::format::{emit_graph6, parse_graph6};
use crate::fragments::{
    check_mader_general, mader_conclusion, s_atoms, s_ends, s_fragments, SetFamily,
};
use crate::graph::{Edge, Graph, VertexSet};
use crate::trees::{
    count_contractible, find_fox_certificate, is_dfs_given, is_dfs_tree, is_spanning_tree,
    visit_spanning_trees_until, RootedTree, DEFAULT_TREE_CAP,
};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// The statements the harness can sweep. T7 splits into its two arms; L1
/// is the fragment intersection lemma and L2 the tree lemma.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7i,
    T7ii,
    C1,
    C2,
    L1,
    L2,
    MaderGeneral,
    MaderSpecial,
}

impl TheoremId {
    pub fn all() -> [TheoremId; 14] {
        use TheoremId::*;
        [
            T1,
            T2,
            T3,
            T4,
            T5,
            T6,
            T7i,
            T7ii,
            C1,
            C2,
            L1,
            L2,
            MaderGeneral,
            MaderSpecial,
        ]
    }

    pub fn name(self) -> &'static str {
        use TheoremId::*;
        match self {
            T1 => "T1",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            T5 => "T5",
            T6 => "T6",
            T7i => "T7i",
            T7ii => "T7ii",
            C1 => "C1",
            C2 => "C2",
            L1 => "L1",
            L2 => "L2",
            MaderGeneral => "MaderGeneral",
            MaderSpecial => "MaderSpecial",
        }
    }

    /// Default order bound: DFS-quantified statements get 7, the rest 8.
    pub fn default_max_n(self) -> usize {
        use TheoremId::*;
        match self {
            T1 | T3 | T6 | T7i | T7ii | L2 => 7,
            T2 | T4 | T5 | C1 | C2 | L1 | MaderGeneral | MaderSpecial => 8,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        TheoremId::all()
            .into_iter()
            .find(|t| t.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem id: {s}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Sweep configuration. `weaken_hypothesis` is the negative-control
/// switch: it admits the excluded graphs (T1, T4, C2), drops the degree,
/// triangle, or fragment-size filters (T2, T3, C1, T5, T6, T7, L2),
/// admits disjoint fragment pairs (L1), and admits non-atoms (Mader). A
/// healthy arm must then produce violations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub k_lo: usize,
    pub k_hi: usize,
    pub max_n: usize,
    pub tree_cap: u64,
    pub weaken_hypothesis: bool,
}

impl VerifyParams {
    pub fn for_theorem(theorem: TheoremId) -> VerifyParams {
        VerifyParams {
            k_lo: 3,
            k_hi: 5,
            max_n: theorem.default_max_n(),
            tree_cap: DEFAULT_TREE_CAP,
            weaken_hypothesis: false,
        }
    }

    pub fn with_k(mut self, lo: usize, hi: usize) -> VerifyParams {
        self.k_lo = lo;
        self.k_hi = hi;
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> VerifyParams {
        self.max_n = max_n;
        self
    }

    pub fn weakened(mut self) -> VerifyParams {
        self.weaken_hypothesis = true;
        self
    }

    fn ks(&self) -> std::ops::RangeInclusive<usize> {
        self.k_lo..=self.k_hi
    }
}

impl Serialize for VerifyParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("params", 4)?;
        s.serialize_field("k", &format!("{}..{}", self.k_lo, self.k_hi))?;
        s.serialize_field("max_n", &self.max_n)?;
        s.serialize_field("tree_cap", &self.tree_cap)?;
        s.serialize_field("weakened", &self.weaken_hypothesis)?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub k: usize,
    pub tree: Vec<[usize; 2]>,
    pub root: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InconclusiveEntry {
    pub graph6: String,
    pub k: usize,
    pub detail: String,
}

/// Outcome of one sweep. `checked + skipped + inconclusive.len()` always
/// equals `corpus_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub params: VerifyParams,
    pub corpus_size: usize,
    pub checked: usize,
    pub skipped: usize,
    pub inconclusive: Vec<InconclusiveEntry>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.inconclusive.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Default)]
struct Outcome {
    checked: bool,
    violations: Vec<Violation>,
    inconclusive: Option<InconclusiveEntry>,
}

/// Run one theorem arm over the corpus. Graphs above `params.max_n` or
/// disconnected ones are skipped. Work is distributed per graph; the
/// report is assembled in corpus order, so it is deterministic.
pub fn verify(theorem: TheoremId, corpus: &[Graph], params: &VerifyParams) -> VerificationReport {
    let outcomes: Vec<Outcome> = corpus
        .par_iter()
        .map(|g| run_graph(theorem, g, params))
        .collect();
    let mut report = VerificationReport {
        theorem,
        params: params.clone(),
        corpus_size: corpus.len(),
        checked: 0,
        skipped: 0,
        inconclusive: Vec::new(),
        violations: Vec::new(),
    };
    for o in outcomes {
        if let Some(entry) = o.inconclusive {
            report.inconclusive.push(entry);
        } else if o.checked {
            report.checked += 1;
        } else {
            report.skipped += 1;
        }
        report.violations.extend(o.violations);
    }
    report
}

fn run_graph(theorem: TheoremId, g: &Graph, params: &VerifyParams) -> Outcome {
    let mut o = Outcome::default();
    if g.order() > params.max_n || !g.is_connected() {
        return o;
    }
    let g6 = emit_graph6(g);
    match theorem {
        TheoremId::T1 => t1_semantics(g, &g6, params, &mut o),
        TheoremId::T2 => t2_arm(g, &g6, params, &mut o),
        TheoremId::T3 => t3_arm(g, &g6, params, &mut o),
        TheoremId::T4 => cubic_arm(g, &g6, params, &mut o, Need::CubicThird, false),
        TheoremId::C2 => cubic_arm(g, &g6, params, &mut o, Need::AtLeast(2), true),
        TheoremId::C1 => c1_arm(g, &g6, params, &mut o),
        TheoremId::T5 => fragment_tree_arm(g, &g6, params, &mut o, FragmentArm::T5),
        TheoremId::T6 => fragment_tree_arm(g, &g6, params, &mut o, FragmentArm::T6),
        TheoremId::L2 => fragment_tree_arm(g, &g6, params, &mut o, FragmentArm::L2),
        TheoremId::T7i => t7_arm(g, &g6, params, &mut o, false),
        TheoremId::T7ii => t7_arm(g, &g6, params, &mut o, true),
        TheoremId::L1 => l1_arm(g, &g6, params, &mut o),
        TheoremId::MaderGeneral => mader_general_arm(g, &g6, params, &mut o),
        TheoremId::MaderSpecial => mader_special_arm(g, &g6, params, &mut o),
    }
    o
}

fn tree_pairs(t: &RootedTree) -> Vec<[usize; 2]> {
    t.edges().iter().map(|e| [e.u(), e.v()]).collect()
}

// ---------------------------------------------------------------------
// Per-graph mask engine
//
// Edges are indexed by their position in g.edges() and handled as bits of
// a u128, so per-tree checks reduce to a few word operations. Fragment
// geometry is precomputed once per (graph, k).
// ---------------------------------------------------------------------

pub(crate) struct FastContext {
    n: usize,
    /// The connectivity parameter all masks were computed for.
    k: usize,
    edge_pos: Vec<u16>,
    /// Bit per edge: k-contractible.
    contractible: u128,
    separators: Vec<VertexSet>,
    /// Bit per edge: both endpoints inside separator i.
    sep_edge: Vec<u128>,
    any_sep_edge: u128,
    fragments: Vec<Fragment>,
    frag_len: Vec<usize>,
    /// Bit per edge: both endpoints in the fragment's boundary.
    boundary_edge: Vec<u128>,
    /// Bit per edge: exactly one endpoint in the fragment's body.
    one_end: Vec<u128>,
    /// Bit per edge: at least one endpoint in the fragment's body.
    touch: Vec<u128>,
    /// Bit per edge: at least one endpoint in the fragment's complement.
    comp_touch: Vec<u128>,
}

impl FastContext {
    fn new(g: &Graph, k: usize) -> FastContext {
        let n = g.order();
        let edges = g.edges();
        let m = edges.len();
        assert!(m <= 128, "mask engine supports at most 128 edges");
        let mut edge_pos = vec![u16::MAX; n * n];
        for (i, e) in edges.iter().enumerate() {
            edge_pos[e.u() * n + e.v()] = i as u16;
        }
        let full = if m == 128 { !0u128 } else { (1u128 << m) - 1 };
        let kappa = vertex_connectivity(g);
        let separators = smallest_separating_sets(g);
        let edge_mask_within = |s: VertexSet| -> u128 {
            let mut mask = 0u128;
            for (i, e) in edges.iter().enumerate() {
                if e.set().is_subset_of(s) {
                    mask |= 1 << i;
                }
            }
            mask
        };
        let sep_edge: Vec<u128> = separators.iter().map(|&t| edge_mask_within(t)).collect();
        let any_sep_edge = sep_edge.iter().fold(0, |a, b| a | b);
        let contractible = if kappa > k {
            full
        } else if g.is_complete() {
            0
        } else {
            !any_sep_edge & full
        };
        let fragments = all_fragments(g);
        let frag_len = fragments.iter().map(|f| f.len()).collect();
        let mut boundary_edge = Vec::with_capacity(fragments.len());
        let mut one_end = Vec::with_capacity(fragments.len());
        let mut touch = Vec::with_capacity(fragments.len());
        let mut comp_touch = Vec::with_capacity(fragments.len());
        for f in &fragments {
            boundary_edge.push(edge_mask_within(f.boundary()));
            let (mut one, mut any, mut comp) = (0u128, 0u128, 0u128);
            for (i, e) in edges.iter().enumerate() {
                match e.set().intersection(f.body()).len() {
                    1 => {
                        one |= 1 << i;
                        any |= 1 << i;
                    }
                    2 => any |= 1 << i,
                    _ => {}
                }
                if e.set().intersects(f.complement()) {
                    comp |= 1 << i;
                }
            }
            one_end.push(one);
            touch.push(any);
            comp_touch.push(comp);
        }
        FastContext {
            n,
            k,
            edge_pos,
            contractible,
            separators,
            sep_edge,
            any_sep_edge,
            fragments,
            frag_len,
            boundary_edge,
            one_end,
            touch,
            comp_touch,
        }
    }

    fn tree_mask(&self, t: &RootedTree) -> u128 {
        let mut mask = 0u128;
        for e in t.edges() {
            let pos = self.edge_pos[e.u() * self.n + e.v()];
            debug_assert_ne!(pos, u16::MAX);
            mask |= 1 << pos;
        }
        mask
    }

    /// Indices of fragments whose boundary contains some tree edge.
    fn s_fragment_indices(&self, tree: u128) -> Vec<usize> {
        (0..self.fragments.len())
            .filter(|&i| self.boundary_edge[i] & tree != 0)
            .collect()
    }

    /// The inclusion-minimal (by body) among the given fragment indices.
    fn minimal_bodies(&self, idxs: &[usize]) -> Vec<usize> {
        idxs.iter()
            .copied()
            .filter(|&i| {
                !idxs.iter().any(|&j| {
                    self.fragments[j].body() != self.fragments[i].body()
                        && self.fragments[j]
                            .body()
                            .is_subset_of(self.fragments[i].body())
                })
            })
            .collect()
    }

    fn min_size_bodies(&self, idxs: &[usize]) -> Vec<usize> {
        let Some(min) = idxs.iter().map(|&i| self.frag_len[i]).min() else {
            return Vec::new();
        };
        idxs.iter()
            .copied()
            .filter(|&i| self.frag_len[i] == min)
            .collect()
    }

    /// Tree edges with exactly one endpoint in some of the given ends.
    fn r_edge_mask(&self, tree: u128, ends: &[usize]) -> u128 {
        ends.iter().fold(0, |acc, &a| acc | self.one_end[a]) & tree
    }
}

// ---------------------------------------------------------------------
// Theorem arms
// ---------------------------------------------------------------------

#[derive(Clone, Copy)]
enum Need {
    AtLeast(usize),
    /// 3·count >= |V| - 3, the cubic bound |V|/3 - 1 kept in integers.
    CubicThird,
}

impl Need {
    fn met(self, count: usize, n: usize) -> bool {
        match self {
            Need::AtLeast(b) => count >= b,
            Need::CubicThird => 3 * count >= n - 3,
        }
    }

    fn describe(self, count: usize, n: usize, kind: &str) -> String {
        match self {
            Need::AtLeast(b) => {
                format!("{kind} has {count} contractible edges but the statement needs {b}")
            }
            Need::CubicThird => format!(
                "{kind} has {count} contractible edges, below the bound (|V|-3)/3 = {}/3",
                n - 3
            ),
        }
    }
}

/// Sweep all spanning trees (or all DFS trees) and require the
/// contractible-edge count to meet `need`. Records at most one violation
/// and stops there; marks the graph checked unless the cap fires first.
fn count_sweep(
    g: &Graph,
    g6: &str,
    o: &mut Outcome,
    ctx: &FastContext,
    dfs: bool,
    need: Need,
    cap: u64,
) {
    let res = visit_spanning_trees_until(g, cap, |t| {
        let count = (ctx.tree_mask(t) & ctx.contractible).count_ones() as usize;
        if need.met(count, ctx.n) {
            return ControlFlow::Continue(());
        }
        if dfs {
            let tg = t.as_graph(g.order()).expect("tree edges come from g");
            let kind = "DFS tree";
            for root in g.vertices() {
                if is_dfs_given(g, &tg, root) {
                    o.violations.push(Violation {
                        graph6: g6.to_string(),
                        k: ctx.k,
                        tree: tree_pairs(t),
                        root: Some(root),
                        detail: need.describe(count, ctx.n, kind),
                    });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        } else {
            o.violations.push(Violation {
                graph6: g6.to_string(),
                k: ctx.k,
                tree: tree_pairs(t),
                root: None,
                detail: need.describe(count, ctx.n, "spanning tree"),
            });
            ControlFlow::Break(())
        }
    });
    match res {
        Ok(_) => o.checked = true,
        Err(Error::TreeCapExceeded(c)) => {
            o.inconclusive = Some(InconclusiveEntry {
                graph6: g6.to_string(),
                k: ctx.k,
                detail: format!("tree enumeration cut off at {c} trees"),
            });
        }
        Err(e) => unreachable!("sweep over a connected graph failed: {e}"),
    }
}

fn is_iso_to(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order()
        || g.degree_sequence() != h.degree_sequence()
        || g.triangle_count() != h.triangle_count()
    {
        return false;
    }
    let mut perm: Vec<usize> = (0..g.order()).collect();
    permute_match(g, h, &mut perm, 0)
}

fn permute_match(g: &Graph, h: &Graph, perm: &mut Vec<usize>, i: usize) -> bool {
    if i == perm.len() {
        return g.relabel(perm).expect("permutation is valid") == *h;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        if permute_match(g, h, perm, i + 1) {
            perm.swap(i, j);
            return true;
        }
        perm.swap(i, j);
    }
    false
}

/// The three exceptional 3-connected graphs: K4 by order, the prism and
/// its one-edge extension by fingerprint plus exhaustive relabeling.
fn t1_exception(g: &Graph) -> bool {
    (g.order() == 4 && g.is_complete()) || is_iso_to(g, &prism()) || is_iso_to(g, &prism_plus())
}

fn t1_semantics(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    if !is_k_connected(g, 3) {
        return;
    }
    if !params.weaken_hypothesis && t1_exception(g) {
        return;
    }
    let ctx = FastContext::new(g, 3);
    count_sweep(g, g6, o, &ctx, true, Need::AtLeast(2), params.tree_cap);
}

fn t2_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    for k in params.ks() {
        if !is_k_connected(g, k) {
            continue;
        }
        if k <= 2 && g.order() == k + 1 && g.is_complete() {
            continue;
        }
        if !params.weaken_hypothesis && !(g.is_triangle_free() || 2 * g.min_degree() >= 3 * k - 2) {
            continue;
        }
        let ctx = FastContext::new(g, k);
        count_sweep(g, g6, o, &ctx, false, Need::AtLeast(2), params.tree_cap);
        if o.inconclusive.is_some() {
            return;
        }
    }
}

fn t3_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    for k in params.ks() {
        if k < 3 {
            continue;
        }
        if k == 3 {
            // The statement needs k > 3; at k = 3 it holds in the form of
            // the three-exception DFS statement, so route there.
            t1_semantics(g, g6, params, o);
        } else {
            if !is_k_connected(g, k) {
                continue;
            }
            if !params.weaken_hypothesis && 2 * g.min_degree() < 3 * k - 3 {
                continue;
            }
            let ctx = FastContext::new(g, k);
            count_sweep(g, g6, o, &ctx, true, Need::AtLeast(2), params.tree_cap);
        }
        if o.inconclusive.is_some() {
            return;
        }
    }
}

/// Shared by the two cubic statements: spanning trees of cubic
/// 3-connected graphs, either the |V|/3 - 1 bound (without K4) or the
/// two-edge bound (without K4 and the prism).
fn cubic_arm(
    g: &Graph,
    g6: &str,
    params: &VerifyParams,
    o: &mut Outcome,
    need: Need,
    exclude_prism: bool,
) {
    if !g.is_cubic() || !is_k_connected(g, 3) {
        return;
    }
    if !params.weaken_hypothesis {
        if g.order() == 4 {
            return;
        }
        if exclude_prism && is_iso_to(g, &prism()) {
            return;
        }
    }
    let ctx = FastContext::new(g, 3);
    count_sweep(g, g6, o, &ctx, false, need, params.tree_cap);
}

fn c1_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    let fragments = all_fragments(g);
    for k in params.ks() {
        if !is_k_connected(g, k) {
            continue;
        }
        if g.order() == k + 1 && g.is_complete() {
            continue;
        }
        if !params.weaken_hypothesis && fragments.iter().any(|f| 2 * f.len() < k) {
            continue;
        }
        let ctx = FastContext::new(g, k);
        count_sweep(g, g6, o, &ctx, false, Need::AtLeast(2), params.tree_cap);
        if o.inconclusive.is_some() {
            return;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FragmentArm {
    T5,
    T6,
    L2,
}

/// The spanning-tree statements quantified over 𝔖-structures: the end
/// statement (T5), the three-way end statement (T6), and the two-edge
/// dichotomy (L2). All assume connectivity exactly k and, per tree, that
/// every 𝔖-fragment has at least (k-1)/2 vertices.
fn fragment_tree_arm(
    g: &Graph,
    g6: &str,
    params: &VerifyParams,
    o: &mut Outcome,
    arm: FragmentArm,
) {
    let kappa = vertex_connectivity(g);
    for k in params.ks() {
        if kappa != k {
            continue;
        }
        if arm == FragmentArm::L2 && g.is_complete() {
            continue;
        }
        let ctx = FastContext::new(g, k);
        let res = visit_spanning_trees_until(g, params.tree_cap, |t| {
            let tm = ctx.tree_mask(t);
            match arm {
                FragmentArm::T5 => check_t5_tree(&ctx, t, tm, k, params, g6, o),
                FragmentArm::T6 => check_t6_tree(&ctx, t, tm, k, params, g6, o),
                FragmentArm::L2 => check_l2_tree(&ctx, t, tm, k, params, g6, o),
            }
        });
        match res {
            Ok(_) => o.checked = true,
            Err(Error::TreeCapExceeded(c)) => {
                o.inconclusive = Some(InconclusiveEntry {
                    graph6: g6.to_string(),
                    k,
                    detail: format!("tree enumeration cut off at {c} trees"),
                });
                return;
            }
            Err(e) => unreachable!("sweep over a connected graph failed: {e}"),
        }
    }
}

fn size_hypothesis_holds(ctx: &FastContext, s_idx: &[usize], k: usize) -> bool {
    s_idx.iter().all(|&i| 2 * ctx.frag_len[i] >= k - 1)
}

fn check_t5_tree(
    ctx: &FastContext,
    t: &RootedTree,
    tm: u128,
    k: usize,
    params: &VerifyParams,
    g6: &str,
    o: &mut Outcome,
) -> ControlFlow<()> {
    if tm & ctx.any_sep_edge == 0 || tm & !ctx.contractible == 0 {
        // No 𝔖-fragments at all, or every tree edge contractible: the
        // conclusion is immediate.
        return ControlFlow::Continue(());
    }
    let s_idx = ctx.s_fragment_indices(tm);
    if !params.weaken_hypothesis && !size_hypothesis_holds(ctx, &s_idx, k) {
        return ControlFlow::Continue(());
    }
    for &b in &ctx.minimal_bodies(&s_idx) {
        let small = 2 * ctx.frag_len[b] == k - 1;
        if !small && ctx.one_end[b] & tm & !ctx.contractible != 0 {
            o.violations.push(Violation {
                graph6: g6.to_string(),
                k,
                tree: tree_pairs(t),
                root: None,
                detail: format!(
                    "end {} is not of size (k-1)/2 and a non-contractible tree edge leaves it",
                    ctx.fragments[b].body()
                ),
            });
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}

fn check_t6_tree(
    ctx: &FastContext,
    t: &RootedTree,
    tm: u128,
    k: usize,
    params: &VerifyParams,
    g6: &str,
    o: &mut Outcome,
) -> ControlFlow<()> {
    if tm & ctx.any_sep_edge == 0 || tm & !ctx.contractible == 0 {
        return ControlFlow::Continue(());
    }
    let s_idx = ctx.s_fragment_indices(tm);
    if !params.weaken_hypothesis && !size_hypothesis_holds(ctx, &s_idx, k) {
        return ControlFlow::Continue(());
    }
    let ends = ctx.minimal_bodies(&s_idx);
    let r_edges = ctx.r_edge_mask(tm, &ends);
    if r_edges == 0 {
        return ControlFlow::Continue(());
    }
    let r_frags: Vec<usize> = (0..ctx.fragments.len())
        .filter(|&i| ctx.boundary_edge[i] & r_edges != 0)
        .collect();
    for &b in &ctx.minimal_bodies(&r_frags) {
        if 2 * ctx.frag_len[b] == k - 1 {
            continue;
        }
        if ctx.touch[b] & tm & ctx.contractible != 0 {
            continue;
        }
        let boundary = ctx.fragments[b].boundary();
        let rescued = r_frags.iter().any(|&c| {
            ctx.fragments[c].body().is_subset_of(boundary)
                && 2 * ctx.frag_len[c] == k - 1
                && ctx.one_end[c] & tm & !ctx.contractible == 0
        });
        if !rescued {
            o.violations.push(Violation {
                graph6: g6.to_string(),
                k,
                tree: tree_pairs(t),
                root: None,
                detail: format!(
                    "R-end {} fails all three branches: not small, no contractible tree edge \
                     meets it, and its neighborhood holds no small very good R-fragment",
                    ctx.fragments[b].body()
                ),
            });
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}

fn check_l2_tree(
    ctx: &FastContext,
    t: &RootedTree,
    tm: u128,
    k: usize,
    params: &VerifyParams,
    g6: &str,
    o: &mut Outcome,
) -> ControlFlow<()> {
    let count = (tm & ctx.contractible).count_ones() as usize;
    if count >= 2 {
        return ControlFlow::Continue(());
    }
    let s_idx = ctx.s_fragment_indices(tm);
    if !params.weaken_hypothesis && !size_hypothesis_holds(ctx, &s_idx, k) {
        return ControlFlow::Continue(());
    }
    let ends = ctx.minimal_bodies(&s_idx);
    let r_edges = ctx.r_edge_mask(tm, &ends);
    let r_frags: Vec<usize> = (0..ctx.fragments.len())
        .filter(|&i| ctx.boundary_edge[i] & r_edges != 0)
        .collect();
    let witness = ctx
        .minimal_bodies(&r_frags)
        .into_iter()
        .any(|b| 2 * ctx.frag_len[b] == k - 1 && ctx.touch[b] & tm & ctx.contractible == 0);
    if !witness {
        o.violations.push(Violation {
            graph6: g6.to_string(),
            k,
            tree: tree_pairs(t),
            root: None,
            detail: format!(
                "tree has {count} contractible edges and no R-end of size (k-1)/2 avoids \
                 all of them"
            ),
        });
        return ControlFlow::Break(());
    }
    ControlFlow::Continue(())
}

fn t7_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome, two: bool) {
    let kappa = vertex_connectivity(g);
    for k in params.ks() {
        if k <= 3 || kappa != k || g.is_complete() {
            continue;
        }
        if two && !params.weaken_hypothesis && all_fragments(g).iter().any(|f| 2 * f.len() < k - 1)
        {
            continue;
        }
        let ctx = FastContext::new(g, k);
        let need = if two { 2 } else { 1 };
        let res = visit_spanning_trees_until(g, params.tree_cap, |t| {
            let tm = ctx.tree_mask(t);
            let count = (tm & ctx.contractible).count_ones() as usize;
            if count >= need {
                return ControlFlow::Continue(());
            }
            if !two && !params.weaken_hypothesis {
                let s_idx = ctx.s_fragment_indices(tm);
                if !size_hypothesis_holds(&ctx, &s_idx, k) {
                    return ControlFlow::Continue(());
                }
            }
            let tg = t.as_graph(g.order()).expect("tree edges come from g");
            for root in g.vertices() {
                if is_dfs_given(g, &tg, root) {
                    o.violations.push(Violation {
                        graph6: g6.to_string(),
                        k,
                        tree: tree_pairs(t),
                        root: Some(root),
                        detail: format!(
                            "DFS tree has {count} contractible edges but the statement needs \
                             {need}"
                        ),
                    });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        match res {
            Ok(_) => o.checked = true,
            Err(Error::TreeCapExceeded(c)) => {
                o.inconclusive = Some(InconclusiveEntry {
                    graph6: g6.to_string(),
                    k,
                    detail: format!("tree enumeration cut off at {c} trees"),
                });
                return;
            }
            Err(e) => unreachable!("sweep over a connected graph failed: {e}"),
        }
    }
}

fn l1_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    if g.is_complete() {
        return;
    }
    let kappa = vertex_connectivity(g);
    let fragments = all_fragments(g);
    o.checked = true;
    for b in &fragments {
        for f in &fragments {
            if !params.weaken_hypothesis && !b.body().intersects(f.body()) {
                continue;
            }
            if !lemma1_core(g, b, f) {
                o.violations.push(Violation {
                    graph6: g6.to_string(),
                    k: kappa,
                    tree: Vec::new(),
                    root: None,
                    detail: format!(
                        "fragment pair B = {} (boundary {}), F = {} (boundary {}) fails the \
                         intersection lemma",
                        b.body(),
                        b.boundary(),
                        f.body(),
                        f.boundary()
                    ),
                });
                return;
            }
        }
    }
}

fn mader_special_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    if g.is_complete() {
        return;
    }
    let kappa = vertex_connectivity(g);
    let fragments = all_fragments(g);
    let min = fragments.iter().map(|f| f.len()).min().unwrap_or(0);
    o.checked = true;
    for a in &fragments {
        if !params.weaken_hypothesis && a.len() != min {
            continue;
        }
        for &t in &smallest_separating_sets(g) {
            if !t.intersects(a.body()) {
                continue;
            }
            if !(mader_conclusion(a, t) && 2 * a.len() <= kappa) {
                o.violations.push(Violation {
                    graph6: g6.to_string(),
                    k: kappa,
                    tree: Vec::new(),
                    root: None,
                    detail: format!(
                        "atom {} meets separating set {t} but the containment or size bound \
                         fails",
                        a.body()
                    ),
                });
                return;
            }
        }
    }
}

fn mader_general_arm(g: &Graph, g6: &str, params: &VerifyParams, o: &mut Outcome) {
    if g.is_complete() {
        return;
    }
    let kappa = vertex_connectivity(g);
    let ctx = FastContext::new(g, kappa);
    let res = visit_spanning_trees_until(g, params.tree_cap, |t| {
        let tm = ctx.tree_mask(t);
        if tm & ctx.any_sep_edge == 0 {
            return ControlFlow::Continue(());
        }
        let s_idx = ctx.s_fragment_indices(tm);
        let pool = if params.weaken_hypothesis {
            s_idx.clone()
        } else {
            ctx.min_size_bodies(&s_idx)
        };
        for &a in &pool {
            for (ti, &sep) in ctx.separators.iter().enumerate() {
                if !sep.intersects(ctx.fragments[a].body()) {
                    continue;
                }
                // A qualifying S must be a tree edge inside T avoiding the
                // atom's complement.
                if ctx.sep_edge[ti] & tm & !ctx.comp_touch[a] == 0 {
                    continue;
                }
                if !mader_conclusion(&ctx.fragments[a], sep) {
                    o.violations.push(Violation {
                        graph6: g6.to_string(),
                        k: kappa,
                        tree: tree_pairs(t),
                        root: None,
                        detail: format!(
                            "tree-family atom {} meets separating set {sep} with a qualifying \
                             tree edge inside it but the conclusion fails",
                            ctx.fragments[a].body()
                        ),
                    });
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    });
    match res {
        Ok(_) => o.checked = true,
        Err(Error::TreeCapExceeded(c)) => {
            o.inconclusive = Some(InconclusiveEntry {
                graph6: g6.to_string(),
                k: kappa,
                detail: format!("tree enumeration cut off at {c} trees"),
            });
        }
        Err(e) => unreachable!("sweep over a connected graph failed: {e}"),
    }
}

// ---------------------------------------------------------------------
// Replay: re-verify a reported violation from scratch through the public
// slow-path API, independent of the mask engine that found it.
// ---------------------------------------------------------------------

/// Re-check a reported violation. Returns true when the recorded instance
/// still violates the statement, re-deriving everything from the graph6
/// string. `weakened` must match the sweep that produced the violation.
pub fn replay(theorem: TheoremId, v: &Violation, weakened: bool) -> Result<bool> {
    let g = parse_graph6(&v.graph6)?;
    let edges: Vec<Edge> = v
        .tree
        .iter()
        .map(|&[a, b]| Edge::new(a, b))
        .collect::<Result<_>>()?;
    let tree = RootedTree::new(edges, v.root);
    let k = v.k;
    let spanning = || is_spanning_tree(&g, &tree);
    let dfs = || is_dfs_tree(&g, &tree) == Ok(true);
    let count = || count_contractible(&g, &tree, k);
    Ok(match theorem {
        TheoremId::T1 => {
            is_k_connected(&g, 3) && (weakened || !t1_exception(&g)) && dfs() && count()? < 2
        }
        TheoremId::T2 => {
            is_k_connected(&g, k)
                && !(k <= 2 && g.order() == k + 1 && g.is_complete())
                && (weakened || g.is_triangle_free() || 2 * g.min_degree() >= 3 * k - 2)
                && spanning()
                && count()? < 2
        }
        TheoremId::T3 => {
            if k == 3 {
                return replay(TheoremId::T1, v, weakened);
            }
            k > 3
                && is_k_connected(&g, k)
                && (weakened || 2 * g.min_degree() >= 3 * k - 3)
                && dfs()
                && count()? < 2
        }
        TheoremId::T4 => {
            g.is_cubic()
                && is_k_connected(&g, 3)
                && (weakened || g.order() > 4)
                && spanning()
                && 3 * count()? < g.order() - 3
        }
        TheoremId::C2 => {
            g.is_cubic()
                && is_k_connected(&g, 3)
                && (weakened || (g.order() > 4 && !is_iso_to(&g, &prism())))
                && spanning()
                && count()? < 2
        }
        TheoremId::C1 => {
            is_k_connected(&g, k)
                && !(g.order() == k + 1 && g.is_complete())
                && (weakened || all_fragments(&g).iter().all(|f| 2 * f.len() >= k))
                && spanning()
                && count()? < 2
        }
        TheoremId::T5 => replay_t5(&g, &tree, k, weakened)?,
        TheoremId::T6 => replay_t6(&g, &tree, k, weakened)?,
        TheoremId::L2 => replay_l2(&g, &tree, k, weakened)?,
        TheoremId::T7i | TheoremId::T7ii => {
            let two = theorem == TheoremId::T7ii;
            if k <= 3 || vertex_connectivity(&g) != k || g.is_complete() || !dfs() {
                return Ok(false);
            }
            let hypothesis = if two {
                weakened || all_fragments(&g).iter().all(|f| 2 * f.len() >= k - 1)
            } else {
                let fam = SetFamily::tree_edges(&tree);
                weakened
                    || s_fragments(&g, &fam)
                        .iter()
                        .all(|f| 2 * f.body().len() >= k - 1)
            };
            hypothesis && count()? < if two { 2 } else { 1 }
        }
        TheoremId::L1 => {
            let fragments = all_fragments(&g);
            !g.is_complete()
                && fragments.iter().any(|b| {
                    fragments.iter().any(|f| {
                        (weakened || b.body().intersects(f.body())) && !lemma1_core(&g, b, f)
                    })
                })
        }
        TheoremId::MaderGeneral => replay_mader_general(&g, &tree, weakened),
        TheoremId::MaderSpecial => {
            let kappa = vertex_connectivity(&g);
            let fragments = all_fragments(&g);
            let min = fragments.iter().map(|f| f.len()).min().unwrap_or(0);
            fragments.iter().any(|a| {
                (weakened || a.len() == min)
                    && smallest_separating_sets(&g).iter().any(|&t| {
                        t.intersects(a.body()) && !(mader_conclusion(a, t) && 2 * a.len() <= kappa)
                    })
            })
        }
    })
}

fn replay_t5(g: &Graph, tree: &RootedTree, k: usize, weakened: bool) -> Result<bool> {
    if vertex_connectivity(g) != k || !is_spanning_tree(g, tree) {
        return Ok(false);
    }
    let fam = SetFamily::tree_edges(tree);
    if !weakened
        && s_fragments(g, &fam)
            .iter()
            .any(|f| 2 * f.body().len() < k - 1)
    {
        return Ok(false);
    }
    for end in s_ends(g, &fam) {
        if 2 * end.body().len() == k - 1 {
            continue;
        }
        for e in tree.edges() {
            if e.set().intersection(end.body()).len() == 1
                && !crate::connectivity::is_contractible(g, *e, k)?
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn replay_t6(g: &Graph, tree: &RootedTree, k: usize, weakened: bool) -> Result<bool> {
    if vertex_connectivity(g) != k || !is_spanning_tree(g, tree) {
        return Ok(false);
    }
    let fam = SetFamily::tree_edges(tree);
    if !weakened
        && s_fragments(g, &fam)
            .iter()
            .any(|f| 2 * f.body().len() < k - 1)
    {
        return Ok(false);
    }
    let r = crate::fragments::build_r_family(g, tree, k)?;
    let r_frags = s_fragments(g, &r);
    let contractible = crate::connectivity::contractible_edges(g, k)?;
    for end in s_ends(g, &r) {
        if 2 * end.body().len() == k - 1 {
            continue;
        }
        if tree
            .edges()
            .iter()
            .any(|e| e.set().intersects(end.body()) && contractible.contains(e))
        {
            continue;
        }
        let rescued = r_frags.iter().any(|c| {
            c.body().is_subset_of(end.boundary())
                && 2 * c.body().len() == k - 1
                && tree
                    .edges()
                    .iter()
                    .all(|e| e.set().intersection(c.body()).len() != 1 || contractible.contains(e))
        });
        if !rescued {
            return Ok(true);
        }
    }
    Ok(false)
}

fn replay_l2(g: &Graph, tree: &RootedTree, k: usize, weakened: bool) -> Result<bool> {
    if vertex_connectivity(g) != k || g.is_complete() || !is_spanning_tree(g, tree) {
        return Ok(false);
    }
    let fam = SetFamily::tree_edges(tree);
    if !weakened
        && s_fragments(g, &fam)
            .iter()
            .any(|f| 2 * f.body().len() < k - 1)
    {
        return Ok(false);
    }
    if count_contractible(g, tree, k)? >= 2 {
        return Ok(false);
    }
    let r = crate::fragments::build_r_family(g, tree, k)?;
    let contractible = crate::connectivity::contractible_edges(g, k)?;
    let witness = s_ends(g, &r).iter().any(|b| {
        2 * b.body().len() == k - 1
            && tree
                .edges()
                .iter()
                .all(|e| !e.set().intersects(b.body()) || !contractible.contains(e))
    });
    Ok(!witness)
}

fn replay_mader_general(g: &Graph, tree: &RootedTree, weakened: bool) -> bool {
    if g.is_complete() || !is_spanning_tree(g, tree) {
        return false;
    }
    let fam = SetFamily::tree_edges(tree);
    let pool = if weakened {
        s_fragments(g, &fam)
    } else {
        s_atoms(g, &fam)
    };
    for a in &pool {
        for s in fam.sets() {
            for &t in &smallest_separating_sets(g) {
                if !s.is_subset_of(t.difference(a.fragment.complement())) || !t.intersects(a.body())
                {
                    continue;
                }
                let fails = if weakened {
                    !mader_conclusion(&a.fragment, t)
                } else {
                    check_mader_general(g, &fam, &a.fragment, *s, t) == Ok(false)
                };
                if fails {
                    return true;
                }
            }
        }
    }
    false
}

// ---------------------------------------------------------------------
// Fox census
// ---------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoxEntry {
    pub graph6: String,
    pub is_fox: bool,
    /// A spanning tree without contractible edges, when one exists.
    pub certificate: Option<Vec<[usize; 2]>>,
}

/// Fox verdict for every k-connected graph of the corpus; graphs that are
/// not k-connected are left out.
pub fn fox_census(corpus: &[Graph], k: usize) -> Vec<FoxEntry> {
    corpus
        .par_iter()
        .map(|g| {
            if !is_k_connected(g, k) {
                return None;
            }
            let cert = find_fox_certificate(g, k).expect("graph is k-connected");
            Some(FoxEntry {
                graph6: emit_graph6(g),
                is_fox: cert.is_some(),
                certificate: cert.map(|c| tree_pairs(&c.tree)),
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

// ---------------------------------------------------------------------
// Corpora
//
// One representative per isomorphism class, enumerated incrementally: a
// connected graph on n vertices always has a non-cut vertex, so attaching
// a new last vertex to every nonempty subset of every (n-1)-class and
// canonicalizing reaches every class exactly once.
// ---------------------------------------------------------------------

/// Largest order for the generic class enumerator (261080 classes at 9
/// already take minutes to build).
pub const MAX_CLASS_ORDER: usize = 9;
/// Largest order for the cubic class enumerator.
pub const MAX_CUBIC_ORDER: usize = 10;

static CLASS_CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
static CUBIC_CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();

/// The canonical form used for class deduplication: the lexicographically
/// largest upper-triangle bitstring over all vertex orderings, packed
/// row by row. Backtracking with prefix pruning; fine up to 16 vertices.
/// Two graphs get the same code exactly when they are isomorphic.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.order();
    assert!(n <= 16, "canonical codes support at most 16 vertices");
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut rows: Vec<u16> = Vec::with_capacity(n);
    let mut best: Vec<u16> = Vec::new();
    search(g, &mut placed, 0, &mut rows, &mut best);
    return best
        .iter()
        .enumerate()
        .skip(1)
        .fold(0u128, |code, (i, &row)| (code << i) | row as u128);

    fn search(
        g: &Graph,
        placed: &mut Vec<usize>,
        used: u64,
        rows: &mut Vec<u16>,
        best: &mut Vec<u16>,
    ) {
        let n = g.order();
        let i = placed.len();
        if i == n {
            if best.is_empty() || rows[..] > best[..] {
                *best = rows.clone();
            }
            return;
        }
        let mut cands: Vec<(u16, usize)> = (0..n)
            .filter(|v| used & (1 << v) == 0)
            .map(|v| {
                let row = placed
                    .iter()
                    .fold(0u16, |acc, &p| (acc << 1) | u16::from(g.has_edge(v, p)));
                (row, v)
            })
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (row, v) in cands {
            rows.push(row);
            // A prefix below the best is hopeless; equal or above must be
            // explored. The best can change mid-loop, so compare fresh.
            let viable = best.is_empty() || rows[..] >= best[..i + 1];
            if viable {
                placed.push(v);
                search(g, placed, used | 1 << v, rows, best);
                placed.pop();
            }
            rows.pop();
        }
    }
}

/// One representative per isomorphism class of connected graphs on
/// exactly `n` vertices, in a fixed order. Cached across calls.
pub fn connected_classes(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 || n > MAX_CLASS_ORDER {
        return Err(Error::Precondition(format!(
            "class enumeration supports 1..={MAX_CLASS_ORDER} vertices, got {n}"
        )));
    }
    let cache = CLASS_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let classes = if n == 1 {
        vec![Graph::new(1)?]
    } else {
        let smaller = connected_classes(n - 1)?;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for rep in smaller.iter() {
            for subset in 1u64..(1 << (n - 1)) {
                let mut g = Graph::new(n)?;
                for e in rep.edges() {
                    g.add_edge(e.u(), e.v())?;
                }
                for v in VertexSet(subset).iter() {
                    g.add_edge(v, n - 1)?;
                }
                if seen.insert(canonical_code(&g)) {
                    out.push(g);
                }
            }
        }
        out
    };
    let arc = Arc::new(classes);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// All connected classes on 1..=n vertices, flattened in order.
pub fn connected_classes_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for i in 1..=n {
        out.extend(connected_classes(i)?.iter().cloned());
    }
    Ok(out)
}

/// One representative per isomorphism class of connected cubic graphs on
/// exactly `n` vertices. Empty for odd or tiny `n`. The generator fixes
/// the neighborhood of vertex 0 as {1,2,3}, which every class admits, and
/// deduplicates by canonical code.
pub fn cubic_classes(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n > MAX_CUBIC_ORDER {
        return Err(Error::Precondition(format!(
            "cubic enumeration supports up to {MAX_CUBIC_ORDER} vertices, got {n}"
        )));
    }
    if n < 4 || n % 2 == 1 {
        return Ok(Arc::new(Vec::new()));
    }
    let cache = CUBIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let mut adj: Vec<VertexSet> = vec![VertexSet(0); n];
    for v in 1..=3 {
        adj[0].insert(v);
        adj[v].insert(0);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    complete_cubic(&mut adj, 1, &mut |adj| {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        let g = Graph::from_edges(n, &edges).expect("generator output is simple");
        if g.is_connected() && seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    });
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(n, arc.clone());
    Ok(arc)
}

/// Backtracking completion to a 3-regular graph: vertex `u` picks its
/// still-missing neighbors among later unsaturated vertices.
fn complete_cubic(adj: &mut Vec<VertexSet>, u: usize, emit: &mut impl FnMut(&Vec<VertexSet>)) {
    let n = adj.len();
    if u == n {
        emit(adj);
        return;
    }
    let need = 3 - adj[u].len();
    if need == 0 {
        complete_cubic(adj, u + 1, emit);
        return;
    }
    let cands: Vec<usize> = (u + 1..n)
        .filter(|&v| adj[v].len() < 3 && !adj[u].contains(v))
        .collect();
    choose(adj, u, &cands, 0, need, emit);

    fn choose(
        adj: &mut Vec<VertexSet>,
        u: usize,
        cands: &[usize],
        from: usize,
        need: usize,
        emit: &mut impl FnMut(&Vec<VertexSet>),
    ) {
        if need == 0 {
            complete_cubic(adj, u + 1, emit);
            return;
        }
        if cands.len() - from < need {
            return;
        }
        for i in from..cands.len() {
            let v = cands[i];
            if adj[v].len() == 3 {
                continue;
            }
            adj[u].insert(v);
            adj[v].insert(u);
            choose(adj, u, cands, i + 1, need - 1, emit);
            adj[u].remove(v);
            adj[v].remove(u);
        }
    }
}

pub fn cubic_classes_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for i in (4..=n).step_by(2) {
        out.extend(cubic_classes(i)?.iter().cloned());
    }
    Ok(out)
}

/// Parse a corpus of graph6 lines. Empty lines and the optional
/// `>>graph6<<` header are skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_start_matches(">>graph6<<");
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("line {}: {reason}", i + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
