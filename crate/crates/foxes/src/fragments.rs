//! Fragment systems relative to a family of vertex sets.
//!
//! For a family 𝔖 of vertex sets, a fragment is an 𝔖-fragment when its
//! boundary contains some member of 𝔖. The inclusion-minimal 𝔖-fragments
//! are the 𝔖-ends, those of minimum cardinality the 𝔖-atoms. Taking 𝔖 to
//! be all singletons recovers the classical fragments, ends, and atoms.
//! Taking 𝔖 to be the endpoint sets of spanning tree edges drives the
//! tree statements: a tree edge is green when it is not k-contractible,
//! and red when it is green with exactly one endpoint in some 𝔖-end.

use crate::connectivity::{
    self, all_fragments, separators_with_kappa, validate_fragment, Fragment,
};
use crate::graph::{Edge, Graph, VertexSet};
use crate::trees::{is_spanning_tree, RootedTree};
use crate::{Error, Result};
use std::fmt;

/// Where a set family came from; carried along for reporting.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyOrigin {
    Singletons,
    TreeEdges,
    RFamily,
    Custom,
}

/// A family 𝔖 of vertex sets, deduplicated and kept in ascending
/// member-list order so the first matching witness is the least one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFamily {
    sets: Vec<VertexSet>,
    origin: FamilyOrigin,
}

impl SetFamily {
    fn build(mut sets: Vec<VertexSet>, origin: FamilyOrigin) -> SetFamily {
        sets.sort_by(|a, b| a.cmp_lex(*b));
        sets.dedup();
        SetFamily { sets, origin }
    }

    /// All singletons of `0..n`: the classical system.
    pub fn singletons(n: usize) -> SetFamily {
        SetFamily::build(
            (0..n).map(VertexSet::singleton).collect(),
            FamilyOrigin::Singletons,
        )
    }

    /// The endpoint sets of the tree's edges.
    pub fn tree_edges(t: &RootedTree) -> SetFamily {
        SetFamily::build(
            t.edges().iter().map(|e| e.set()).collect(),
            FamilyOrigin::TreeEdges,
        )
    }

    pub fn custom(sets: Vec<VertexSet>) -> SetFamily {
        SetFamily::build(sets, FamilyOrigin::Custom)
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn origin(&self) -> FamilyOrigin {
        self.origin
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.contains(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The least member contained in `boundary`, if any.
    fn witness_within(&self, boundary: VertexSet) -> Option<VertexSet> {
        self.sets.iter().copied().find(|s| s.is_subset_of(boundary))
    }
}

/// A fragment together with the least family member inside its boundary.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SFragment {
    pub fragment: Fragment,
    pub witness: VertexSet,
}

impl SFragment {
    pub fn body(&self) -> VertexSet {
        self.fragment.body()
    }

    pub fn boundary(&self) -> VertexSet {
        self.fragment.boundary()
    }
}

/// Every fragment whose boundary contains a member of the family, in
/// `all_fragments` order.
pub fn s_fragments(g: &Graph, family: &SetFamily) -> Vec<SFragment> {
    all_fragments(g)
        .into_iter()
        .filter_map(|fragment| {
            family
                .witness_within(fragment.boundary())
                .map(|witness| SFragment { fragment, witness })
        })
        .collect()
}

/// The inclusion-minimal 𝔖-fragments (by body).
pub fn s_ends(g: &Graph, family: &SetFamily) -> Vec<SFragment> {
    let all = s_fragments(g, family);
    all.iter()
        .filter(|a| {
            !all.iter()
                .any(|b| b.body() != a.body() && b.body().is_subset_of(a.body()))
        })
        .copied()
        .collect()
}

/// The minimum-cardinality 𝔖-fragments. Every atom is an end.
pub fn s_atoms(g: &Graph, family: &SetFamily) -> Vec<SFragment> {
    let all = s_fragments(g, family);
    let Some(min) = all.iter().map(|f| f.body().len()).min() else {
        return Vec::new();
    };
    all.into_iter().filter(|f| f.body().len() == min).collect()
}

/// The derived family ℜ: endpoint sets of tree edges having exactly one
/// endpoint in some 𝔖-end, where 𝔖 is the tree-edge family of `q`. The
/// family is combinatorial; `k` only gates the precondition that the
/// statements using ℜ assume.
pub fn build_r_family(g: &Graph, q: &RootedTree, k: usize) -> Result<SetFamily> {
    require_spanning_of_k_connected(g, q, k)?;
    let ends = s_ends(g, &SetFamily::tree_edges(q));
    let sets = q
        .edges()
        .iter()
        .filter(|e| {
            ends.iter()
                .any(|a| e.set().intersection(a.body()).len() == 1)
        })
        .map(|e| e.set())
        .collect();
    Ok(SetFamily {
        sets,
        origin: FamilyOrigin::RFamily,
    })
}

fn require_spanning_of_k_connected(g: &Graph, q: &RootedTree, k: usize) -> Result<()> {
    if !connectivity::is_k_connected(g, k) {
        return Err(Error::NotKConnected {
            k,
            order: g.order(),
            kappa: connectivity::vertex_connectivity(g),
        });
    }
    if !is_spanning_tree(g, q) {
        return Err(Error::Precondition(format!(
            "not a spanning tree of the graph: {:?}",
            q.edges()
        )));
    }
    Ok(())
}

fn require_atom(g: &Graph, family: &SetFamily, atom: &Fragment, kappa: usize) -> Result<()> {
    validate_fragment(g, atom, kappa)?;
    let atoms = s_atoms(g, family);
    if !atoms.iter().any(|a| a.body() == atom.body()) {
        return Err(Error::Precondition(format!(
            "{} is not an atom of the family",
            atom.body()
        )));
    }
    Ok(())
}

fn require_separator(g: &Graph, t: VertexSet, kappa: usize) -> Result<()> {
    if t.len() != kappa || !t.is_subset_of(g.vertex_set()) || g.components(t).len() < 2 {
        return Err(Error::NotASeparator(t));
    }
    Ok(())
}

/// The general atom containment statement: for an 𝔖-atom A, a family
/// member `s`, and a smallest separating set `t` with `s ⊆ t - Ā` and
/// `t ∩ A` nonempty, A must lie inside `t` and |A| is at most
/// |t - boundary(A)| / 2. Precondition violations are errors, a failed
/// conclusion is `Ok(false)`.
pub fn check_mader_general(
    g: &Graph,
    family: &SetFamily,
    atom: &Fragment,
    s: VertexSet,
    t: VertexSet,
) -> Result<bool> {
    let (kappa, _) = separators_with_kappa(g);
    require_atom(g, family, atom, kappa)?;
    require_separator(g, t, kappa)?;
    if !family.contains(s) {
        return Err(Error::Precondition(format!("{s} is not in the family")));
    }
    if !s.is_subset_of(t.difference(atom.complement())) {
        return Err(Error::Precondition(format!(
            "{s} does not lie in {t} minus the atom's complement"
        )));
    }
    if !t.intersects(atom.body()) {
        return Err(Error::Precondition(format!(
            "{t} misses the atom {}",
            atom.body()
        )));
    }
    Ok(mader_conclusion(atom, t))
}

pub(crate) fn mader_conclusion(atom: &Fragment, t: VertexSet) -> bool {
    atom.body().is_subset_of(t) && 2 * atom.len() <= t.difference(atom.boundary()).len()
}

/// The classical special case over the singleton family, which adds the
/// bound |A| <= connectivity / 2.
pub fn check_mader_special(g: &Graph, atom: &Fragment, t: VertexSet) -> Result<bool> {
    let (kappa, _) = separators_with_kappa(g);
    require_atom(g, &SetFamily::singletons(g.order()), atom, kappa)?;
    require_separator(g, t, kappa)?;
    if !t.intersects(atom.body()) {
        return Err(Error::Precondition(format!(
            "{t} misses the atom {}",
            atom.body()
        )));
    }
    Ok(mader_conclusion(atom, t) && 2 * atom.len() <= kappa)
}

/// The size threshold (k-1)/2 as an exact rational, never rounded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    pub num: usize,
    pub den: usize,
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SizeClass {
    /// Exactly (k-1)/2 vertices. The threshold is kept as an exact
    /// rational, so for even k nothing is small.
    Small,
    Big,
}

/// How a fragment sits relative to a spanning tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FragmentClassification {
    pub size: SizeClass,
    /// Some k-contractible tree edge has an endpoint in the body.
    pub good: bool,
    /// Every tree edge with exactly one endpoint in the body is
    /// k-contractible.
    pub very_good: bool,
    pub threshold: Ratio,
}

pub fn classify_fragment(
    g: &Graph,
    q: &RootedTree,
    f: &Fragment,
    k: usize,
) -> Result<FragmentClassification> {
    if k == 0 {
        return Err(Error::Precondition(
            "classification needs k >= 1".to_string(),
        ));
    }
    require_spanning_of_k_connected(g, q, k)?;
    let (kappa, _) = separators_with_kappa(g);
    validate_fragment(g, f, kappa)?;
    let contractible = connectivity::contractible_edges(g, k)?;
    Ok(classify_core(q, f, k, &contractible))
}

pub(crate) fn classify_core(
    q: &RootedTree,
    f: &Fragment,
    k: usize,
    contractible: &[Edge],
) -> FragmentClassification {
    let body = f.body();
    let size = if 2 * body.len() == k - 1 {
        SizeClass::Small
    } else {
        SizeClass::Big
    };
    let good = q
        .edges()
        .iter()
        .any(|e| e.set().intersects(body) && contractible.contains(e));
    let very_good = q
        .edges()
        .iter()
        .filter(|e| e.set().intersection(body).len() == 1)
        .all(|e| contractible.contains(e));
    FragmentClassification {
        size,
        good,
        very_good,
        threshold: Ratio { num: k - 1, den: 2 },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeColor {
    /// k-contractible.
    Contractible,
    /// Not k-contractible.
    Green,
    /// Green with exactly one endpoint in some 𝔖-end of the tree-edge
    /// family.
    Red,
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EdgeColor::Contractible => "contractible",
            EdgeColor::Green => "green",
            EdgeColor::Red => "red",
        };
        write!(f, "{name}")
    }
}

/// Color every tree edge of `q` relative to `g` and `k`.
pub fn color_tree_edges(g: &Graph, q: &RootedTree, k: usize) -> Result<Vec<(Edge, EdgeColor)>> {
    require_spanning_of_k_connected(g, q, k)?;
    let contractible = connectivity::contractible_edges(g, k)?;
    let ends = s_ends(g, &SetFamily::tree_edges(q));
    Ok(q.edges()
        .iter()
        .map(|&e| {
            let color = if contractible.contains(&e) {
                EdgeColor::Contractible
            } else if ends
                .iter()
                .any(|a| e.set().intersection(a.body()).len() == 1)
            {
                EdgeColor::Red
            } else {
                EdgeColor::Green
            };
            (e, color)
        })
        .collect())
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

    fn wheel5() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 5),
                (2, 5),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap()
    }

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    /// A spanning tree of the prism: stars at 0 and 3 joined by the
    /// matching edge 0-3, its only 3-contractible edge.
    fn prism_tree() -> RootedTree {
        RootedTree::new(
            vec![edge(0, 1), edge(0, 2), edge(0, 3), edge(3, 4), edge(3, 5)],
            None,
        )
    }

    fn spoke_star() -> RootedTree {
        RootedTree::new(
            vec![edge(0, 5), edge(1, 5), edge(2, 5), edge(3, 5), edge(4, 5)],
            None,
        )
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn family_constructors_sort_and_dedup() {
        let f = SetFamily::custom(vec![set(&[1, 2]), set(&[0, 3]), set(&[1, 2])]);
        assert_eq!(f.sets(), &[set(&[0, 3]), set(&[1, 2])]);
        assert_eq!(SetFamily::singletons(3).sets().len(), 3);
        assert_eq!(SetFamily::tree_edges(&prism_tree()).sets().len(), 5);
    }

    #[test]
    fn singleton_family_recovers_all_fragments() {
        let g = prism();
        let classical = s_fragments(&g, &SetFamily::singletons(6));
        assert_eq!(classical.len(), all_fragments(&g).len());
        // Witness is the least singleton of the boundary.
        let one = classical.iter().find(|f| f.body() == set(&[0])).unwrap();
        assert_eq!(one.witness, set(&[1]));
    }

    #[test]
    fn empty_family_gives_nothing() {
        let g = prism();
        let empty = SetFamily::custom(Vec::new());
        assert!(s_fragments(&g, &empty).is_empty());
        assert!(s_ends(&g, &empty).is_empty());
        assert!(s_atoms(&g, &empty).is_empty());
    }

    #[test]
    fn tree_edge_family_on_the_prism() {
        let g = prism();
        let fam = SetFamily::tree_edges(&prism_tree());
        let frags = s_fragments(&g, &fam);
        let bodies: std::collections::BTreeSet<Vec<usize>> =
            frags.iter().map(|f| f.body().to_vec()).collect();
        let want: std::collections::BTreeSet<Vec<usize>> = [
            vec![1],
            vec![2],
            vec![4],
            vec![5],
            vec![0, 1],
            vec![0, 2],
            vec![3, 4],
            vec![3, 5],
        ]
        .into_iter()
        .collect();
        assert_eq!(bodies, want);

        let ends: std::collections::BTreeSet<Vec<usize>> =
            s_ends(&g, &fam).iter().map(|f| f.body().to_vec()).collect();
        let want_ends: std::collections::BTreeSet<Vec<usize>> =
            [vec![1], vec![2], vec![4], vec![5]].into_iter().collect();
        assert_eq!(ends, want_ends);
        // All ends have cardinality one here, so the atoms coincide.
        let atoms = s_atoms(&g, &fam);
        assert_eq!(atoms.len(), 4);
    }

    #[test]
    fn complements_of_s_fragments_are_s_fragments() {
        let g = prism();
        for fam in [
            SetFamily::singletons(6),
            SetFamily::tree_edges(&prism_tree()),
        ] {
            let frags = s_fragments(&g, &fam);
            for f in &frags {
                assert!(
                    frags.iter().any(|h| h.body() == f.fragment.complement()),
                    "complement of {} missing",
                    f.body()
                );
            }
        }
    }

    #[test]
    fn atoms_are_ends() {
        let g = wheel5();
        let star = spoke_star();
        let fam = SetFamily::tree_edges(&star);
        let ends = s_ends(&g, &fam);
        for a in s_atoms(&g, &fam) {
            assert!(ends.iter().any(|e| e.body() == a.body()));
        }
    }

    #[test]
    fn wheel_spoke_family_ends_are_rim_singletons() {
        let g = wheel5();
        let ends = s_ends(&g, &SetFamily::tree_edges(&spoke_star()));
        let bodies: std::collections::BTreeSet<Vec<usize>> =
            ends.iter().map(|f| f.body().to_vec()).collect();
        let want: std::collections::BTreeSet<Vec<usize>> = (0..5).map(|v| vec![v]).collect();
        assert_eq!(bodies, want);
    }

    #[test]
    fn r_family_of_the_prism_tree() {
        let g = prism();
        let r = build_r_family(&g, &prism_tree(), 3).unwrap();
        assert_eq!(r.origin(), FamilyOrigin::RFamily);
        // Every tree edge except the contractible bridge 0-3 has exactly
        // one endpoint in one of the singleton ends 1, 2, 4, 5.
        assert_eq!(
            r.sets(),
            &[set(&[0, 1]), set(&[0, 2]), set(&[3, 4]), set(&[3, 5])]
        );
    }

    #[test]
    fn r_family_is_empty_when_no_tree_edge_is_green() {
        // K6 at k=4: a complete graph has no smallest separating sets,
        // hence no fragments, no ends, and an empty derived family.
        let k6 = Graph::complete(6).unwrap();
        let path = RootedTree::new((1..6).map(|v| edge(v - 1, v)).collect(), None);
        let r = build_r_family(&k6, &path, 4).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn mader_general_on_a_qualifying_prism_triple() {
        let g = prism();
        let fam = SetFamily::tree_edges(&prism_tree());
        let atoms = s_atoms(&g, &fam);
        let atom = atoms.iter().find(|a| a.body() == set(&[2])).unwrap();
        let s = set(&[0, 2]);
        let t = set(&[0, 2, 4]);
        assert_eq!(
            check_mader_general(&g, &fam, &atom.fragment, s, t),
            Ok(true)
        );
    }

    #[test]
    fn mader_general_rejects_broken_preconditions() {
        let g = prism();
        let fam = SetFamily::tree_edges(&prism_tree());
        let atoms = s_atoms(&g, &fam);
        let atom = atoms
            .iter()
            .find(|a| a.body() == set(&[2]))
            .unwrap()
            .fragment;
        // s not in the family
        assert!(matches!(
            check_mader_general(&g, &fam, &atom, set(&[1, 2]), set(&[0, 2, 4])),
            Err(Error::Precondition(_))
        ));
        // t not a separator
        assert!(matches!(
            check_mader_general(&g, &fam, &atom, set(&[0, 2]), set(&[0, 2, 3])),
            Err(Error::NotASeparator(_))
        ));
        // t is a genuine separator containing s = {0,1} but missing the
        // atom {2}
        assert!(matches!(
            check_mader_general(&g, &fam, &atom, set(&[0, 1]), set(&[0, 1, 5])),
            Err(Error::Precondition(_))
        ));
        // a non-atom fragment
        let big = all_fragments(&g)
            .into_iter()
            .find(|f| f.len() == 2)
            .unwrap();
        assert!(matches!(
            check_mader_general(&g, &fam, &big, set(&[0, 2]), set(&[0, 2, 4])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mader_special_on_prism_atoms() {
        let g = prism();
        let atoms = s_atoms(&g, &SetFamily::singletons(6));
        assert_eq!(atoms.len(), 6); // every singleton fragment
        for a in &atoms {
            let v = a.body().min_vertex().unwrap();
            for t in connectivity::smallest_separating_sets(&g) {
                if t.contains(v) {
                    assert_eq!(check_mader_special(&g, &a.fragment, t), Ok(true));
                }
            }
        }
    }

    #[test]
    fn classification_on_the_prism_tree() {
        let g = prism();
        let q = prism_tree();
        let frags = s_fragments(&g, &SetFamily::tree_edges(&q));
        let two = frags.iter().find(|f| f.body() == set(&[2])).unwrap();
        let c = classify_fragment(&g, &q, &two.fragment, 3).unwrap();
        assert_eq!(c.size, SizeClass::Small);
        assert_eq!(c.threshold, Ratio { num: 2, den: 2 });
        assert!(!c.good); // the only tree edge at 2 is the green 0-2
        assert!(!c.very_good);

        let pair = frags.iter().find(|f| f.body() == set(&[3, 4])).unwrap();
        let c = classify_fragment(&g, &q, &pair.fragment, 3).unwrap();
        assert_eq!(c.size, SizeClass::Big);
        assert!(c.good); // the contractible 0-3 ends in the body
        assert!(!c.very_good); // 3-5 leaves the body and is green
    }

    #[test]
    fn coloring_the_prism_tree_and_the_spoke_star() {
        let g = prism();
        let colors = color_tree_edges(&g, &prism_tree(), 3).unwrap();
        let of = |e: Edge| colors.iter().find(|(x, _)| *x == e).unwrap().1;
        assert_eq!(of(edge(0, 3)), EdgeColor::Contractible);
        for e in [edge(0, 1), edge(0, 2), edge(3, 4), edge(3, 5)] {
            assert_eq!(of(e), EdgeColor::Red);
        }

        let w = wheel5();
        let colors = color_tree_edges(&w, &spoke_star(), 3).unwrap();
        assert!(colors.iter().all(|&(_, c)| c == EdgeColor::Red));
    }

    #[test]
    fn coloring_k4_is_all_green() {
        // No edge of K4 is 3-contractible and there are no fragments at
        // all, hence no ends and nothing red.
        let k4 = Graph::complete(4).unwrap();
        let q = RootedTree::new(vec![edge(0, 1), edge(1, 2), edge(2, 3)], None);
        let colors = color_tree_edges(&k4, &q, 3).unwrap();
        assert!(colors.iter().all(|&(_, c)| c == EdgeColor::Green));
    }
}
