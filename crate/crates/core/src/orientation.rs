//! Treelike orientations as rooted Hasse trees.
//!
//! An arborescence orients as a single rooted tree whose root is the greatest
//! element (every vertex is comparable exactly to its ancestors and
//! descendants). A double-arborescence splits around a universal root `r`
//! into a lower tree (root greatest) and an upper tree (root least); the two
//! sides are completely joined through `r` by transitivity.
//!
//! Construction is definition-level: universal-vertex peeling for the single
//! tree, co-component bipartition with backtracking for the double one. The
//! split-tree route in [`crate::splitdec`] decides the same classes
//! independently; the test suite plays the two against each other.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Which end of the tree the root occupies in the underlying order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// The root is the greatest element; parents are larger than children.
    RootGreatest,
    /// The root is the least element; parents are smaller than children.
    RootLeast,
}

impl Direction {
    fn as_str(self) -> &'static str {
        match self {
            Direction::RootGreatest => "root-greatest",
            Direction::RootLeast => "root-least",
        }
    }
}

/// A poset whose Hasse diagram is a tree: `u` and `v` are comparable iff one
/// is an ancestor of the other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedForestPoset {
    root: usize,
    parent: BTreeMap<usize, usize>,
    direction: Direction,
}

impl RootedForestPoset {
    /// Single-vertex poset.
    pub fn trivial(root: usize, direction: Direction) -> Self {
        RootedForestPoset {
            root,
            parent: BTreeMap::new(),
            direction,
        }
    }

    /// Builds a poset from explicit parent links, validating that they form
    /// a tree rooted at `root`.
    pub fn from_parents(
        root: usize,
        parent: BTreeMap<usize, usize>,
        direction: Direction,
    ) -> Result<Self, Error> {
        let bad = |msg: String| Error::BadConfig(msg);
        if parent.contains_key(&root) {
            return Err(bad(format!("root {root} must not have a parent")));
        }
        for (&child, &p) in &parent {
            if p != root && !parent.contains_key(&p) {
                return Err(bad(format!("parent {p} of {child} is not a member")));
            }
        }
        let poset = RootedForestPoset { root, parent, direction };
        for &v in poset.parent.keys() {
            if poset.depth_checked(v).is_none() {
                return Err(bad(format!("parent links cycle at vertex {v}")));
            }
        }
        Ok(poset)
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root
    }

    #[inline]
    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent.get(&v).copied()
    }

    /// Number of vertices spanned.
    pub fn len(&self) -> usize {
        self.parent.len() + 1
    }

    /// All spanned vertices in increasing order.
    pub fn members(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.parent.keys().copied().collect();
        let pos = out.partition_point(|&v| v < self.root);
        out.insert(pos, self.root);
        out
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent.contains_key(&v)
    }

    /// Children of each vertex, sorted ascending. Vertices without children
    /// are absent.
    pub fn children_map(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&child, &p) in &self.parent {
            map.entry(p).or_default().push(child);
        }
        map
    }

    /// Same tree with the order read the other way around.
    pub fn flipped(&self) -> Self {
        let direction = match self.direction {
            Direction::RootGreatest => Direction::RootLeast,
            Direction::RootLeast => Direction::RootGreatest,
        };
        RootedForestPoset {
            root: self.root,
            parent: self.parent.clone(),
            direction,
        }
    }

    /// Distance to the root, or `None` when the parent links cycle.
    fn depth_checked(&self, v: usize) -> Option<usize> {
        let mut cur = v;
        let mut steps = 0usize;
        while let Some(&p) = self.parent.get(&cur) {
            cur = p;
            steps += 1;
            if steps > self.parent.len() {
                return None;
            }
        }
        (cur == self.root).then_some(steps)
    }

    /// True iff `a` is a strict ancestor of `d`.
    pub fn is_ancestor(&self, a: usize, d: usize) -> bool {
        let mut cur = d;
        while let Some(&p) = self.parent.get(&cur) {
            if p == a {
                return true;
            }
            cur = p;
        }
        false
    }

    /// Comparability of two distinct vertices: ancestry one way or the other.
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        u == v || self.is_ancestor(u, v) || self.is_ancestor(v, u)
    }

    /// A maximum-length root-to-leaf path, root first. Ties break to the
    /// lexicographically smallest vertex sequence.
    pub fn longest_chain(&self) -> Vec<usize> {
        let children = self.children_map();
        // Heights bottom-up: process vertices by decreasing depth.
        let mut order: Vec<(usize, usize)> = self
            .members()
            .iter()
            .map(|&v| (self.depth_checked(v).expect("valid tree"), v))
            .collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut height: BTreeMap<usize, usize> = BTreeMap::new();
        for &(_, v) in &order {
            let h = children
                .get(&v)
                .map(|kids| 1 + kids.iter().map(|c| height[c]).max().unwrap())
                .unwrap_or(0);
            height.insert(v, h);
        }
        let mut chain = vec![self.root];
        let mut cur = self.root;
        while let Some(kids) = children.get(&cur) {
            // Children are sorted ascending, so the first max-height child is
            // the lexicographically smallest continuation.
            let best = *kids.iter().max_by_key(|c| (height[c], std::cmp::Reverse(**c))).unwrap();
            chain.push(best);
            cur = best;
        }
        chain
    }

    /// DOT rendering: directed edges child → parent, root double-circled.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n");
        out.push_str(&format!("  label=\"{}\";\n", self.direction.as_str()));
        out.push_str(&format!("  {} [shape=doublecircle];\n", self.root));
        for (&child, &p) in &self.parent {
            out.push_str(&format!("  {child} -> {p};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{root, parents: [[child, parent], ..], direction}`.
    pub fn to_json(&self) -> Value {
        json!({
            "root": self.root,
            "parents": self.parent.iter().map(|(&c, &p)| json!([c, p])).collect::<Vec<_>>(),
            "direction": self.direction.as_str(),
        })
    }
}

/// Orientation of a double-arborescence: a lower and an upper tree glued at
/// the shared universal root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleArbOrientation {
    root: usize,
    below: RootedForestPoset,
    above: RootedForestPoset,
}

impl DoubleArbOrientation {
    /// Glues two side posets, validating the sharing invariants.
    pub fn new(below: RootedForestPoset, above: RootedForestPoset) -> Result<Self, Error> {
        let bad = |msg: &str| Error::BadConfig(msg.to_string());
        if below.root != above.root {
            return Err(bad("sides must share their root"));
        }
        if below.direction != Direction::RootGreatest || above.direction != Direction::RootLeast {
            return Err(bad("below must be root-greatest and above root-least"));
        }
        if below.parent.keys().any(|v| above.contains(*v)) {
            return Err(bad("sides may only share the root"));
        }
        Ok(DoubleArbOrientation {
            root: below.root,
            below,
            above,
        })
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.root
    }

    #[inline]
    pub fn below(&self) -> &RootedForestPoset {
        &self.below
    }

    #[inline]
    pub fn above(&self) -> &RootedForestPoset {
        &self.above
    }

    pub fn len(&self) -> usize {
        self.below.len() + self.above.len() - 1
    }

    pub fn members(&self) -> Vec<usize> {
        let mut out = self.below.members();
        out.extend(self.above.parent.keys().copied());
        out.sort_unstable();
        out
    }

    pub fn contains(&self, v: usize) -> bool {
        self.below.contains(v) || self.above.contains(v)
    }

    /// Comparability: within a side by ancestry; across sides always (both
    /// compare through the root by transitivity).
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        match (self.below.contains(u), self.below.contains(v)) {
            (true, true) => self.below.comparable(u, v),
            (false, false) => self.above.comparable(u, v),
            // One strictly below the root, the other strictly above (the
            // root itself lands in the same-side arms).
            _ => true,
        }
    }

    /// Deepest chain through the root: deepest lower path ascending, the
    /// root, then the deepest upper path descending from it.
    pub fn longest_chain(&self) -> Vec<usize> {
        let mut chain: Vec<usize> = self.below.longest_chain().into_iter().rev().collect();
        chain.extend(self.above.longest_chain().into_iter().skip(1));
        chain
    }

    /// DOT rendering of both side trees (edges child → parent).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph double_orientation {\n");
        out.push_str(&format!("  {} [shape=doublecircle];\n", self.root));
        for (name, side) in [("below", &self.below), ("above", &self.above)] {
            out.push_str(&format!("  subgraph cluster_{name} {{\n    label=\"{name} ({})\";\n", side.direction.as_str()));
            for (&child, &p) in &side.parent {
                out.push_str(&format!("    {child} -> {p};\n"));
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "root": self.root,
            "below": self.below.to_json(),
            "above": self.above.to_json(),
        })
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Anything whose comparability relation can be checked against a graph.
pub trait Orientation {
    fn span(&self) -> Vec<usize>;
    fn pair_comparable(&self, u: usize, v: usize) -> bool;
}

impl Orientation for RootedForestPoset {
    fn span(&self) -> Vec<usize> {
        self.members()
    }
    fn pair_comparable(&self, u: usize, v: usize) -> bool {
        self.comparable(u, v)
    }
}

impl Orientation for DoubleArbOrientation {
    fn span(&self) -> Vec<usize> {
        self.members()
    }
    fn pair_comparable(&self, u: usize, v: usize) -> bool {
        self.comparable(u, v)
    }
}

/// Checks that an orientation spans exactly `V(G)` and that comparability
/// reproduces adjacency pair for pair.
pub fn verify_treelike_orientation<O: Orientation>(g: &Graph, o: &O) -> bool {
    let span = o.span();
    if span.len() != g.n() || span.iter().enumerate().any(|(i, &v)| i != v) {
        return false;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if o.pair_comparable(u, v) != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

// ---- construction ----------------------------------------------------------

/// Orients `G[s]` as an arborescence: picks a universal vertex as root
/// (forced to `forced_root` when given, else the lowest) and recurses into
/// the components left after removing it. Fills `parent` and returns the
/// root, or `None` when some piece has no universal vertex.
fn orient_within(
    g: &Graph,
    s: &VertexSet,
    forced_root: Option<usize>,
    parent: &mut BTreeMap<usize, usize>,
) -> Option<usize> {
    let inside = s.len();
    let universal =
        |v: usize| -> bool { s.contains(v) && g.neighbors(v).intersection(s).len() == inside - 1 };
    let root = match forced_root {
        Some(r) => universal(r).then_some(r)?,
        None => {
            let mut found = None;
            for v in s.iter() {
                if universal(v) {
                    found = Some(v);
                    break;
                }
            }
            found?
        }
    };
    let mut rest = s.clone();
    rest.remove(root);
    for comp in g.components_within(&rest) {
        let sub_root = orient_within(g, &comp, None, parent)?;
        parent.insert(sub_root, root);
    }
    Some(root)
}

/// Orients a connected graph as an arborescence (root greatest), or `None`
/// when the graph is not one.
pub fn arborescence_orientation(g: &Graph) -> Result<Option<RootedForestPoset>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut parent = BTreeMap::new();
    Ok(
        orient_within(g, &VertexSet::full(g.n()), None, &mut parent).map(|root| {
            RootedForestPoset {
                root,
                parent,
                direction: Direction::RootGreatest,
            }
        }),
    )
}

/// Orients a connected graph as a double-arborescence, or `None` when the
/// graph is not one.
///
/// The bipartition around the root is derived from transitivity: the two
/// strict sides must be completely joined, so each co-component of `G - r`
/// goes wholly to one side. Only co-components containing a non-edge ("fat")
/// constrain the split — two of them in one side would leave a 4-cycle there,
/// which no arborescence contains — so singletons go below greedily and the
/// at most two fat components are placed by backtracking.
pub fn double_arborescence_orientation(g: &Graph) -> Result<Option<DoubleArbOrientation>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let Some(r) = g.universal_vertices().first() else {
        return Ok(None);
    };
    if n == 1 {
        let below = RootedForestPoset::trivial(r, Direction::RootGreatest);
        let above = RootedForestPoset::trivial(r, Direction::RootLeast);
        return Ok(Some(DoubleArbOrientation::new(below, above).expect("trivial sides")));
    }

    let mut rest = VertexSet::full(n);
    rest.remove(r);
    let mut singles = VertexSet::empty(n);
    let mut fats: Vec<VertexSet> = Vec::new();
    for part in g.co_components(&rest) {
        if part.len() == 1 {
            singles.union_with(&part);
        } else {
            fats.push(part);
        }
    }
    if fats.len() > 2 {
        return Ok(None);
    }

    let empty = VertexSet::empty(n);
    let placements: Vec<(VertexSet, VertexSet)> = match fats.as_slice() {
        [] => vec![(singles.clone(), empty)],
        [f] => vec![
            (singles.union(f), empty.clone()),
            (singles.clone(), f.clone()),
        ],
        [f0, f1] => vec![
            (singles.union(f0), f1.clone()),
            (singles.union(f1), f0.clone()),
        ],
        _ => unreachable!(),
    };

    for (low, high) in placements {
        let mut below_side = low;
        below_side.insert(r);
        let mut above_side = high;
        above_side.insert(r);

        let mut below_parent = BTreeMap::new();
        if orient_within(g, &below_side, Some(r), &mut below_parent).is_none() {
            continue;
        }
        let mut above_parent = BTreeMap::new();
        if orient_within(g, &above_side, Some(r), &mut above_parent).is_none() {
            continue;
        }
        let below = RootedForestPoset {
            root: r,
            parent: below_parent,
            direction: Direction::RootGreatest,
        };
        let above = RootedForestPoset {
            root: r,
            parent: above_parent,
            direction: Direction::RootLeast,
        };
        return Ok(Some(DoubleArbOrientation::new(below, above).expect("sides share only the root")));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_triangle_join;

    fn arb(g: &Graph) -> Option<RootedForestPoset> {
        arborescence_orientation(g).unwrap()
    }

    fn darb(g: &Graph) -> Option<DoubleArbOrientation> {
        double_arborescence_orientation(g).unwrap()
    }

    #[test]
    fn star_orients_from_the_center() {
        let p = arb(&Graph::star(3)).unwrap();
        assert_eq!(p.root(), 0);
        assert_eq!(p.children_map()[&0], vec![1, 2, 3]);
        assert_eq!(p.direction(), Direction::RootGreatest);
        assert!(verify_treelike_orientation(&Graph::star(3), &p));
    }

    #[test]
    fn paths_and_cycles_of_length_four_do_not_orient() {
        assert!(arb(&Graph::path(4)).is_none());
        assert!(arb(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn complete_graph_orients_as_a_chain() {
        let p = arb(&Graph::complete(3)).unwrap();
        assert_eq!(p.longest_chain(), vec![0, 1, 2]);
        assert_eq!(p.len(), 3);
        assert!(verify_treelike_orientation(&Graph::complete(3), &p));
    }

    #[test]
    fn disconnected_input_is_a_usage_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(matches!(arborescence_orientation(&g), Err(Error::Disconnected)));
        assert!(matches!(double_arborescence_orientation(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn any_arborescence_doubles_with_a_bare_upper_side() {
        let o = darb(&Graph::star(3)).unwrap();
        assert_eq!(o.root(), 0);
        assert_eq!(o.above().len(), 1);
        assert_eq!(o.below().len(), 4);
        assert!(verify_treelike_orientation(&Graph::star(3), &o));
    }

    /// Wheel with hub 4 over the rim cycle ⟨0,1,2,3⟩: the rim splits into the
    /// antipodal pairs {0,2} and {1,3}, one per side.
    #[test]
    fn wheel_splits_its_rim_across_the_sides() {
        let g = Graph::wheel(4);
        let o = darb(&g).unwrap();
        assert_eq!(o.root(), 4);
        let below: Vec<usize> = o.below().members();
        let above: Vec<usize> = o.above().members();
        let sides = (below.clone(), above.clone());
        assert!(
            sides == (vec![0, 2, 4], vec![1, 3, 4]) || sides == (vec![1, 3, 4], vec![0, 2, 4]),
            "unexpected sides {sides:?}"
        );
        assert!(verify_treelike_orientation(&g, &o));
        // Maximum clique of the wheel is a triangle through the hub.
        let chain = o.longest_chain();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[1], 4);
    }

    #[test]
    fn gem_has_no_double_orientation() {
        assert!(darb(&Graph::gem()).is_none());
    }

    #[test]
    fn doc_example_graph_is_not_a_double_arborescence() {
        assert!(darb(&two_triangle_join()).is_none());
        assert!(arb(&two_triangle_join()).is_none());
    }

    #[test]
    fn chain_of_a_star_is_center_plus_smallest_leaf() {
        let p = arb(&Graph::star(3)).unwrap();
        assert_eq!(p.longest_chain(), vec![0, 1]);
    }

    #[test]
    fn fake_poset_fails_verification() {
        // Star-shaped poset rooted at an end of the path: claims 0 comparable
        // to everyone, but the path lacks edge 0-2.
        let fake = RootedForestPoset::from_parents(
            0,
            [(1, 0), (2, 0), (3, 0)].into_iter().collect(),
            Direction::RootGreatest,
        )
        .unwrap();
        assert!(!verify_treelike_orientation(&Graph::path(4), &fake));
    }

    #[test]
    fn from_parents_rejects_cycles_and_orphans() {
        let cyclic: BTreeMap<usize, usize> = [(1, 2), (2, 1)].into_iter().collect();
        assert!(RootedForestPoset::from_parents(0, cyclic, Direction::RootGreatest).is_err());
        let orphan: BTreeMap<usize, usize> = [(1, 5)].into_iter().collect();
        assert!(RootedForestPoset::from_parents(0, orphan, Direction::RootGreatest).is_err());
    }

    #[test]
    fn longest_chain_prefers_lexicographically_smallest() {
        // Two depth-2 branches; the chain must walk the smaller child ids.
        let p = RootedForestPoset::from_parents(
            0,
            [(1, 0), (2, 0), (3, 1), (4, 2)].into_iter().collect(),
            Direction::RootGreatest,
        )
        .unwrap();
        assert_eq!(p.longest_chain(), vec![0, 1, 3]);
    }

    #[test]
    fn double_chain_runs_lower_leaf_to_upper_leaf() {
        let o = darb(&Graph::wheel(4)).unwrap();
        let chain = o.longest_chain();
        assert_eq!(chain.len(), 3);
        assert_ne!(chain[0], 4);
        assert_eq!(chain[1], 4);
        assert_ne!(chain[2], 4);
    }

    #[test]
    fn serializers_mention_root_and_direction() {
        let p = arb(&Graph::star(2)).unwrap();
        let dot = p.to_dot();
        assert!(dot.contains("0 [shape=doublecircle]"));
        assert!(dot.contains("1 -> 0"));
        let js = p.to_json();
        assert_eq!(js["root"], 0);
        assert_eq!(js["direction"], "root-greatest");
        assert_eq!(js["parents"].as_array().unwrap().len(), 2);
    }
}
