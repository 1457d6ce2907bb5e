//! Clique-star split-decomposition trees and the recognition queries that
//! read graph classes directly off the tree.
//!
//! A connected distance-hereditary graph prunes to a single vertex by
//! repeatedly removing pendant vertices and twins. Replaying that
//! elimination backwards grows the unique minimal split-decomposition tree:
//! every insertion subdivides the host's tree edge with a fresh 3-vertex
//! component, and a normalization pass merges the two component shapes the
//! minimal tree forbids (clique-clique contacts and star-center-to-star-leaf
//! contacts). All structural queries — accessibility between pendants,
//! center-center paths, s-leaf paths — walk alternated paths: sequences that
//! strictly alternate between tree edges and component-internal edges.
//!
//! Throughout, tree nodes `0..n` are the pendants (one per graph vertex, same
//! id) and higher ids are the marked internal vertices of components.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use serde_json::{json, Value};
use std::collections::VecDeque;

// ---- tree shape -------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompKind {
    Clique,
    Star,
}

/// One split component: a clique or a star over marked internal vertices.
#[derive(Clone, Debug)]
pub struct Component {
    pub kind: CompKind,
    /// Member node ids, ascending.
    pub members: Vec<usize>,
    /// The center (stars only).
    pub center: Option<usize>,
}

impl Component {
    /// Component-internal neighbors of member `x`: everyone else in a
    /// clique, the center ⟷ leaves in a star.
    fn f_neighbors(&self, x: usize) -> Vec<usize> {
        match self.kind {
            CompKind::Clique => self.members.iter().copied().filter(|&m| m != x).collect(),
            CompKind::Star => {
                let c = self.center.expect("stars have a center");
                if x == c {
                    self.members.iter().copied().filter(|&m| m != c).collect()
                } else {
                    vec![c]
                }
            }
        }
    }

    fn f_adjacent(&self, x: usize, y: usize) -> bool {
        match self.kind {
            CompKind::Clique => x != y,
            CompKind::Star => x != y && (Some(x) == self.center || Some(y) == self.center),
        }
    }
}

/// The minimal split-decomposition tree of a distance-hereditary graph.
///
/// Graphs on one or two vertices have no room for a 3-vertex component and
/// are stored degenerate: just their pendants (plus the single tree edge for
/// K2).
#[derive(Clone, Debug)]
pub struct CliqueStarTree {
    n: usize,
    /// Per node: the component owning it, `None` for pendants.
    comp_of: Vec<Option<usize>>,
    /// Per node: the other end of its unique tree edge (`None` only for the
    /// single pendant of K1).
    t_link: Vec<Option<usize>>,
    components: Vec<Component>,
}

impl CliqueStarTree {
    /// Number of graph vertices (= pendant nodes `0..n`).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total node count, pendants plus marked vertices.
    pub fn node_count(&self) -> usize {
        self.comp_of.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// True for the component-less trees of K1 and K2.
    pub fn is_degenerate(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_pendant(&self, node: usize) -> bool {
        node < self.n
    }

    /// Index of the component owning a marked node.
    pub fn component_of(&self, node: usize) -> Option<usize> {
        self.comp_of[node]
    }

    /// The other end of `node`'s unique tree edge.
    pub fn t_link(&self, node: usize) -> Option<usize> {
        self.t_link[node]
    }

    /// All tree edges as ordered pairs.
    pub fn t_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, link) in self.t_link.iter().enumerate() {
            if let Some(b) = *link {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Tree edges joining two marked vertices (the "marked edges").
    pub fn marked_edges(&self) -> Vec<(usize, usize)> {
        self.t_edges()
            .into_iter()
            .filter(|&(a, b)| !self.is_pendant(a) && !self.is_pendant(b))
            .collect()
    }

    /// Human-readable node name: pendants by their vertex id, marked
    /// vertices as `m<id>`.
    pub fn node_label(&self, node: usize) -> String {
        if self.is_pendant(node) {
            node.to_string()
        } else {
            format!("m{node}")
        }
    }

    fn is_star_center(&self, node: usize) -> bool {
        self.comp_of[node]
            .map(|c| self.components[c].center == Some(node))
            .unwrap_or(false)
    }

    /// Checks every structural invariant of a minimal clique-star tree:
    /// pendant bijection, one tree edge per node, components of at least
    /// three vertices, no clique-clique and no center-to-other-star-leaf
    /// marked edges, and overall tree shape after contracting components.
    pub fn validate(&self) -> Result<(), String> {
        let total = self.node_count();
        // Pendants first, marked vertices owned by exactly one component.
        let mut owner = vec![None; total];
        for (ci, comp) in self.components.iter().enumerate() {
            if comp.members.len() < 3 {
                return Err(format!("component {ci} has {} < 3 vertices", comp.members.len()));
            }
            match (comp.kind, comp.center) {
                (CompKind::Star, Some(c)) if comp.members.contains(&c) => {}
                (CompKind::Clique, None) => {}
                _ => return Err(format!("component {ci} has an inconsistent center")),
            }
            for &m in &comp.members {
                if m < self.n {
                    return Err(format!("pendant {m} listed inside component {ci}"));
                }
                if owner[m].replace(ci).is_some() {
                    return Err(format!("node {m} owned by two components"));
                }
            }
        }
        for node in 0..total {
            if (self.comp_of[node] != owner[node]) || (node < self.n) != (owner[node].is_none()) {
                return Err(format!("ownership mismatch at node {node}"));
            }
        }
        // One symmetric tree edge per node (single pendant of K1 aside).
        for node in 0..total {
            match self.t_link[node] {
                Some(peer) => {
                    if self.t_link[peer] != Some(node) {
                        return Err(format!("tree edge {node}-{peer} not symmetric"));
                    }
                    if self.comp_of[node].is_some() && self.comp_of[node] == self.comp_of[peer] {
                        return Err(format!("tree edge {node}-{peer} inside one component"));
                    }
                }
                None => {
                    if total > 1 {
                        return Err(format!("node {node} has no tree edge"));
                    }
                }
            }
        }
        // Forbidden marked-edge shapes.
        for (a, b) in self.marked_edges() {
            let ca = &self.components[self.comp_of[a].unwrap()];
            let cb = &self.components[self.comp_of[b].unwrap()];
            if ca.kind == CompKind::Clique && cb.kind == CompKind::Clique {
                return Err(format!("clique-clique marked edge {a}-{b}"));
            }
            let center_leaf = (self.is_star_center(a) && cb.kind == CompKind::Star && !self.is_star_center(b))
                || (self.is_star_center(b) && ca.kind == CompKind::Star && !self.is_star_center(a));
            if center_leaf {
                return Err(format!("star-center to star-leaf marked edge {a}-{b}"));
            }
        }
        // Contracting each component to a point must leave a tree.
        let atoms = self.n + self.components.len();
        let edges = self.t_edges().len();
        if atoms != edges + 1 && !(total == 1 && edges == 0) {
            return Err(format!("{atoms} contracted nodes but {edges} tree edges"));
        }
        if !self.contracted_connected() {
            return Err("contracted tree is disconnected".into());
        }
        Ok(())
    }

    /// Atom id in the contracted tree: pendants stay themselves, marked
    /// vertices collapse into `n + component`.
    fn atom(&self, node: usize) -> usize {
        match self.comp_of[node] {
            None => node,
            Some(c) => self.n + c,
        }
    }

    fn contracted_connected(&self) -> bool {
        let atoms = self.n + self.components.len();
        if atoms == 0 {
            return false;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); atoms];
        for (a, b) in self.t_edges() {
            adj[self.atom(a)].push(self.atom(b));
            adj[self.atom(b)].push(self.atom(a));
        }
        let mut seen = vec![false; atoms];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == atoms
    }

    /// DOT rendering: components as clusters, star centers double-circled,
    /// tree edges solid, component-internal edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph split_tree {\n  node [shape=circle];\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v} [shape=square];\n"));
        }
        for (ci, comp) in self.components.iter().enumerate() {
            let kind = match comp.kind {
                CompKind::Clique => "clique",
                CompKind::Star => "star",
            };
            out.push_str(&format!("  subgraph cluster_{ci} {{\n    label=\"{kind}\";\n"));
            for &m in &comp.members {
                let shape = if comp.center == Some(m) { " [shape=doublecircle]" } else { "" };
                out.push_str(&format!("    m{m}{shape};\n"));
            }
            match comp.kind {
                CompKind::Clique => {
                    for (i, &a) in comp.members.iter().enumerate() {
                        for &b in comp.members.iter().skip(i + 1) {
                            out.push_str(&format!("    m{a} -- m{b} [style=dashed];\n"));
                        }
                    }
                }
                CompKind::Star => {
                    let c = comp.center.unwrap();
                    for &m in comp.members.iter().filter(|&&m| m != c) {
                        out.push_str(&format!("    m{c} -- m{m} [style=dashed];\n"));
                    }
                }
            }
            out.push_str("  }\n");
        }
        for (a, b) in self.t_edges() {
            let name = |x: usize| {
                if self.is_pendant(x) {
                    format!("{x}")
                } else {
                    format!("m{x}")
                }
            };
            out.push_str(&format!("  {} -- {};\n", name(a), name(b)));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{n, components: [{kind, center?, members}], edges}`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "components": self.components.iter().map(|c| json!({
                "kind": match c.kind { CompKind::Clique => "clique", CompKind::Star => "star" },
                "center": c.center,
                "members": c.members,
            })).collect::<Vec<_>>(),
            "edges": self.t_edges().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })
    }
}

// ---- pruning ------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveKind {
    /// Degree-1 vertex removed; anchor is its neighbor.
    Pendant,
    /// `N[removed] = N[anchor]` (adjacent twins).
    TrueTwin,
    /// `N(removed) = N(anchor)` (non-adjacent twins).
    FalseTwin,
}

/// One elimination step: `removed` leaves the graph, justified by `anchor`.
#[derive(Clone, Copy, Debug)]
pub struct Move {
    pub removed: usize,
    pub kind: MoveKind,
    pub anchor: usize,
}

/// A full pendant/twin elimination down to a single vertex.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub moves: Vec<Move>,
    pub last: usize,
}

/// Result of pruning: either the elimination or the irreducible core on
/// which no pendant or twin exists.
#[derive(Clone, Debug)]
pub enum PruneOutcome {
    Reduced(Elimination),
    Stuck(VertexSet),
}

/// Pendant/twin pruning with the stuck core reported on failure.
///
/// Each step removes the first move found, scanning pendants by vertex id
/// and then twin pairs lexicographically (removing the higher twin). Any
/// greedy order reduces a distance-hereditary graph fully, so the scan order
/// only fixes which certificate is produced.
pub fn prune_dh_detailed(g: &Graph) -> Result<PruneOutcome, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut rows: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive = VertexSet::full(n);
    let mut moves = Vec::with_capacity(n - 1);

    while alive.len() > 1 {
        let mv = find_move(&rows, &alive);
        match mv {
            Some(mv) => {
                for u in rows[mv.removed].clone().iter() {
                    rows[u].remove(mv.removed);
                }
                rows[mv.removed] = VertexSet::empty(n);
                alive.remove(mv.removed);
                moves.push(mv);
            }
            None => return Ok(PruneOutcome::Stuck(alive)),
        }
    }
    Ok(PruneOutcome::Reduced(Elimination {
        moves,
        last: alive.first().expect("one vertex remains"),
    }))
}

fn find_move(rows: &[VertexSet], alive: &VertexSet) -> Option<Move> {
    for v in alive.iter() {
        if rows[v].len() == 1 {
            return Some(Move {
                removed: v,
                kind: MoveKind::Pendant,
                anchor: rows[v].first().unwrap(),
            });
        }
    }
    let members: Vec<usize> = alive.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in members.iter().skip(i + 1) {
            if rows[u] == rows[v] {
                return Some(Move { removed: v, kind: MoveKind::FalseTwin, anchor: u });
            }
            let mut cu = rows[u].clone();
            cu.insert(u);
            let mut cv = rows[v].clone();
            cv.insert(v);
            if cu == cv {
                return Some(Move { removed: v, kind: MoveKind::TrueTwin, anchor: u });
            }
        }
    }
    None
}

/// Pendant/twin elimination of a connected graph, or `None` when the graph
/// is not distance-hereditary.
pub fn prune_dh(g: &Graph) -> Result<Option<Elimination>, Error> {
    Ok(match prune_dh_detailed(g)? {
        PruneOutcome::Reduced(e) => Some(e),
        PruneOutcome::Stuck(_) => None,
    })
}

// ---- incremental construction --------------------------------------------------

/// Mutable tree under construction. Nodes are never reused; merges tombstone
/// the two marked endpoints and their components, and `finish` compacts.
struct Builder {
    n: usize,
    comp_of: Vec<Option<usize>>,
    t_link: Vec<Option<usize>>,
    dead_node: Vec<bool>,
    comps: Vec<Option<Component>>,
}

impl Builder {
    /// All pendants pre-exist as nodes 0..n; vertices not yet inserted
    /// simply have no tree edge.
    fn new(n: usize) -> Self {
        Builder {
            n,
            comp_of: vec![None; n],
            t_link: vec![None; n],
            dead_node: vec![false; n],
            comps: Vec::new(),
        }
    }

    fn new_marked(&mut self, comp: usize) -> usize {
        self.comp_of.push(Some(comp));
        self.t_link.push(None);
        self.dead_node.push(false);
        self.comp_of.len() - 1
    }

    fn tie(&mut self, a: usize, b: usize) {
        self.t_link[a] = Some(b);
        self.t_link[b] = Some(a);
    }

    /// Replays one elimination move backwards: vertex `x` joins the tree
    /// next to the already-present `v`.
    fn insert(&mut self, x: usize, kind: MoveKind, v: usize) {
        match self.t_link[v] {
            None => {
                // Second vertex overall: the degenerate pendant-pendant edge.
                debug_assert!(
                    kind != MoveKind::FalseTwin,
                    "a connected 2-vertex graph cannot end in a false twin"
                );
                self.tie(v, x);
            }
            Some(q) => {
                // Subdivide the tree edge v-q with a fresh 3-vertex
                // component; which node takes the center decides whether x
                // copies v's neighborhood, extends it, or hangs off it.
                let ci = self.comps.len();
                let (kind_c, center_slot) = match kind {
                    MoveKind::Pendant => (CompKind::Star, 0),
                    MoveKind::FalseTwin => (CompKind::Star, 2),
                    MoveKind::TrueTwin => (CompKind::Clique, usize::MAX),
                };
                let to_v = self.new_marked(ci);
                let to_x = self.new_marked(ci);
                let to_q = self.new_marked(ci);
                let center = match center_slot {
                    0 => Some(to_v),
                    2 => Some(to_q),
                    _ => None,
                };
                self.comps.push(Some(Component {
                    kind: kind_c,
                    members: vec![to_v, to_x, to_q],
                    center,
                }));
                self.tie(to_v, v);
                self.tie(to_x, x);
                self.tie(to_q, q);
                self.normalize();
            }
        }
    }

    fn center_of(&self, ci: usize) -> Option<usize> {
        self.comps[ci].as_ref().unwrap().center
    }

    fn kind_of(&self, ci: usize) -> CompKind {
        self.comps[ci].as_ref().unwrap().kind
    }

    /// Merges away forbidden marked edges until none remain. Insertion adds
    /// at most one marked edge, so this loop runs at most once per insert in
    /// practice; the fixpoint form keeps the invariant self-evident.
    fn normalize(&mut self) {
        while let Some((a, b)) = self.find_violation() {
            self.merge(a, b);
        }
    }

    /// First marked edge violating minimality: clique-clique first, then
    /// star-center to another star's leaf.
    fn find_violation(&self) -> Option<(usize, usize)> {
        for (ci, slot) in self.comps.iter().enumerate() {
            let Some(comp) = slot else { continue };
            if comp.kind != CompKind::Clique {
                continue;
            }
            for &m in &comp.members {
                let peer = self.t_link[m].expect("marked vertices keep their tree edge");
                if let Some(cj) = self.comp_of.get(peer).copied().flatten() {
                    if cj != ci && self.kind_of(cj) == CompKind::Clique {
                        return Some((m, peer));
                    }
                }
            }
        }
        for (ci, slot) in self.comps.iter().enumerate() {
            let Some(comp) = slot else { continue };
            let Some(c) = comp.center else { continue };
            let _ = ci;
            let peer = self.t_link[c].expect("marked vertices keep their tree edge");
            if let Some(cj) = self.comp_of.get(peer).copied().flatten() {
                if self.kind_of(cj) == CompKind::Star && self.center_of(cj) != Some(peer) {
                    return Some((c, peer));
                }
            }
        }
        None
    }

    /// Merges the two components joined by the marked edge `a-b` into one,
    /// deleting both marked endpoints. Clique + clique gives the union
    /// clique; star center `a` + star leaf `b` gives one star centered at
    /// `b`'s old center.
    fn merge(&mut self, a: usize, b: usize) {
        let ca = self.comp_of[a].unwrap();
        let cb = self.comp_of[b].unwrap();
        debug_assert_ne!(ca, cb);
        let comp_a = self.comps[ca].take().unwrap();
        let comp_b = self.comps[cb].take().unwrap();
        let merged_kind = comp_a.kind;
        debug_assert_eq!(comp_a.kind, comp_b.kind);
        let center = match merged_kind {
            CompKind::Clique => None,
            CompKind::Star => {
                debug_assert_eq!(comp_a.center, Some(a));
                debug_assert_ne!(comp_b.center, Some(b));
                comp_b.center
            }
        };
        let ci = self.comps.len();
        let mut members: Vec<usize> = comp_a
            .members
            .iter()
            .chain(comp_b.members.iter())
            .copied()
            .filter(|&m| m != a && m != b)
            .collect();
        members.sort_unstable();
        for &m in &members {
            self.comp_of[m] = Some(ci);
        }
        self.comps.push(Some(Component { kind: merged_kind, members, center }));
        for dead in [a, b] {
            self.dead_node[dead] = true;
            self.t_link[dead] = None;
            self.comp_of[dead] = None;
        }
    }

    /// Compacts tombstoned nodes and components into the final tree.
    fn finish(self) -> CliqueStarTree {
        let total = self.comp_of.len();
        let mut new_id = vec![usize::MAX; total];
        let mut next = 0;
        for node in 0..total {
            if !self.dead_node[node] {
                new_id[node] = next;
                next += 1;
            }
        }
        let mut comp_id = vec![usize::MAX; self.comps.len()];
        let mut components = Vec::new();
        for (ci, slot) in self.comps.iter().enumerate() {
            if let Some(comp) = slot {
                comp_id[ci] = components.len();
                components.push(Component {
                    kind: comp.kind,
                    members: comp.members.iter().map(|&m| new_id[m]).collect(),
                    center: comp.center.map(|c| new_id[c]),
                });
            }
        }
        let mut comp_of = vec![None; next];
        let mut t_link = vec![None; next];
        for node in 0..total {
            if self.dead_node[node] {
                continue;
            }
            comp_of[new_id[node]] = self.comp_of[node].map(|c| comp_id[c]);
            t_link[new_id[node]] = self.t_link[node].map(|p| new_id[p]);
        }
        for comp in &mut components {
            comp.members.sort_unstable();
        }
        CliqueStarTree {
            n: self.n,
            comp_of,
            t_link,
            components,
        }
    }
}

/// Builds the minimal clique-star split tree of a connected graph, or
/// `None` when the graph is not distance-hereditary.
pub fn build_clique_star_tree(g: &Graph) -> Result<Option<CliqueStarTree>, Error> {
    let Some(elim) = prune_dh(g)? else {
        return Ok(None);
    };
    let mut b = Builder::new(g.n());
    for mv in elim.moves.iter().rev() {
        b.insert(mv.removed, mv.kind, mv.anchor);
    }
    let tree = b.finish();
    debug_assert_eq!(tree.validate(), Ok(()));
    Ok(Some(tree))
}

// ---- alternated paths ------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    /// Tree edge.
    T,
    /// Component-internal edge.
    F,
}

/// A path whose edges strictly alternate between tree edges and
/// component-internal edges.
#[derive(Clone, Debug)]
pub struct AlternatedPath {
    pub nodes: Vec<usize>,
    pub kinds: Vec<EdgeKind>,
}

impl AlternatedPath {
    /// `a -T- m4 -F- m5 -T- b` style rendering.
    pub fn describe(&self, tree: &CliqueStarTree) -> String {
        let mut out = tree.node_label(self.nodes[0]);
        for (i, kind) in self.kinds.iter().enumerate() {
            let k = match kind {
                EdgeKind::T => "T",
                EdgeKind::F => "F",
            };
            out.push_str(&format!(" -{k}- {}", tree.node_label(self.nodes[i + 1])));
        }
        out
    }

    fn assert_alternates(&self) {
        debug_assert_eq!(self.kinds.len() + 1, self.nodes.len());
        debug_assert!(self.kinds.windows(2).all(|w| w[0] != w[1]), "edge kinds must alternate");
    }
}

/// The graph realized by the tree: pendants are the vertices, and two are
/// adjacent exactly when an alternated path joins them.
///
/// Also asserts the maximal-path facts the construction relies on: walking
/// outward from any component vertex ends at a pendant, and distinct
/// starting vertices of one component reach distinct pendants.
pub fn accessibility_graph(tree: &CliqueStarTree) -> Graph {
    assert_maximal_path_properties(tree);
    let mut g = Graph::empty(tree.n());
    for a in 0..tree.n() {
        let Some(first) = tree.t_link(a) else { continue };
        if tree.is_pendant(first) {
            if a < first {
                g.add_edge(a, first);
            }
            continue;
        }
        // States are marked vertices entered through their tree edge; the
        // next step is forced to be an F-edge, then the tree edge of the
        // F-neighbor. In a tree each marked vertex is entered at most once.
        let mut seen = vec![false; tree.node_count()];
        let mut queue = VecDeque::from([first]);
        seen[first] = true;
        while let Some(x) = queue.pop_front() {
            let comp = &tree.components()[tree.component_of(x).expect("internal node")];
            for y in comp.f_neighbors(x) {
                let z = tree.t_link(y).expect("marked vertices keep their tree edge");
                if tree.is_pendant(z) {
                    if a < z {
                        g.add_edge(a, z);
                    }
                } else if !seen[z] {
                    seen[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    g
}

/// Walks the unique outward maximal alternated path from each component
/// vertex (avoiding its own component's edges) and asserts the two
/// structural facts: it ends at a pendant, and within one component the
/// endpoints are pairwise distinct.
fn assert_maximal_path_properties(tree: &CliqueStarTree) {
    for (ci, comp) in tree.components().iter().enumerate() {
        let mut endpoints = Vec::with_capacity(comp.members.len());
        for &start in &comp.members {
            let mut cur = start;
            let endpoint = loop {
                let next = tree.t_link(cur).expect("marked vertices keep their tree edge");
                if tree.is_pendant(next) {
                    break next;
                }
                let c = &tree.components()[tree.component_of(next).unwrap()];
                // Deterministic F-step: centers walk to their smallest leaf,
                // everyone else meets the center / the smallest clique peer.
                cur = *c.f_neighbors(next).first().expect("components have ≥ 3 members");
            };
            endpoints.push(endpoint);
        }
        endpoints.sort_unstable();
        let before = endpoints.len();
        endpoints.dedup();
        assert_eq!(
            endpoints.len(),
            before,
            "component {ci}: maximal paths from distinct vertices must reach distinct pendants"
        );
    }
}

/// The unique contracted-tree route between two components, as the list of
/// visited components with the member vertex used to enter and to exit.
/// Entry of the first and exit of the last are the components' path-facing
/// vertices; the outer sides are `usize::MAX`.
fn component_route(tree: &CliqueStarTree, from: usize, to: usize) -> Vec<(usize, usize, usize)> {
    debug_assert_ne!(from, to);
    let atoms = tree.n() + tree.components().len();
    // parent[atom] = (previous atom, tree edge endpoint inside previous, endpoint inside atom)
    let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; atoms];
    let mut seen = vec![false; atoms];
    let start = tree.n() + from;
    let goal = tree.n() + to;
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    'bfs: while let Some(at) = queue.pop_front() {
        let nodes: Vec<usize> = if at < tree.n() {
            vec![at]
        } else {
            tree.components()[at - tree.n()].members.clone()
        };
        for x in nodes {
            let Some(y) = tree.t_link(x) else { continue };
            let next = tree.atom(y);
            if seen[next] {
                continue;
            }
            seen[next] = true;
            parent[next] = Some((at, x, y));
            if next == goal {
                break 'bfs;
            }
            queue.push_back(next);
        }
    }
    // Reconstruct: (component index, entry vertex, exit vertex).
    let mut route: Vec<(usize, usize, usize)> = Vec::new();
    let mut at = goal;
    let mut entry_of_at = usize::MAX;
    while at != start {
        let (prev, exit_prev, entry) = parent[at].expect("tree is connected");
        debug_assert!(at >= tree.n(), "pendants cannot lie on a component route");
        route.push((at - tree.n(), entry, entry_of_at));
        at = prev;
        entry_of_at = exit_prev;
    }
    route.push((from, usize::MAX, entry_of_at));
    route.reverse();
    route
}

/// Alternated path between the path-facing vertices of two components, if
/// the interior admits one: every intermediate component must be crossed
/// between two component-adjacent vertices.
fn alternated_between(tree: &CliqueStarTree, from: usize, to: usize) -> Option<AlternatedPath> {
    let route = component_route(tree, from, to);
    let mut nodes = Vec::new();
    let mut kinds = Vec::new();
    for (i, &(ci, entry, exit)) in route.iter().enumerate() {
        let comp = &tree.components()[ci];
        if i == 0 {
            nodes.push(exit);
        } else if i == route.len() - 1 {
            kinds.push(EdgeKind::T);
            nodes.push(entry);
        } else {
            if !comp.f_adjacent(entry, exit) {
                return None;
            }
            kinds.push(EdgeKind::T);
            nodes.push(entry);
            kinds.push(EdgeKind::F);
            nodes.push(exit);
        }
    }
    let path = AlternatedPath { nodes, kinds };
    path.assert_alternates();
    Some(path)
}

/// Star components of the tree, by index.
fn star_indices(tree: &CliqueStarTree) -> Vec<usize> {
    tree.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kind == CompKind::Star)
        .map(|(i, _)| i)
        .collect()
}

/// An alternated path joining the centers of two star components and
/// avoiding both components' own edges, or `None`. Present exactly when the
/// realized graph contains an induced 4-cycle.
pub fn find_center_center_path(tree: &CliqueStarTree) -> Option<AlternatedPath> {
    let stars = star_indices(tree);
    for (i, &ci) in stars.iter().enumerate() {
        for &cj in stars.iter().skip(i + 1) {
            if let Some(path) = alternated_between(tree, ci, cj) {
                let enter_ok = tree.components()[ci].center == Some(path.nodes[0]);
                let exit_ok = tree.components()[cj].center == Some(*path.nodes.last().unwrap());
                if enter_ok && exit_ok {
                    return Some(path);
                }
            }
        }
    }
    None
}

/// An alternated path joining non-center leaves of two star components and
/// avoiding both components' own edges, or `None`. Present exactly when the
/// realized graph contains an induced 4-vertex path.
pub fn find_s_leaf_path(tree: &CliqueStarTree) -> Option<AlternatedPath> {
    let stars = star_indices(tree);
    for (i, &ci) in stars.iter().enumerate() {
        for &cj in stars.iter().skip(i + 1) {
            if let Some(path) = alternated_between(tree, ci, cj) {
                let enter_ok = tree.components()[ci].center != Some(path.nodes[0]);
                let exit_ok = tree.components()[cj].center != Some(*path.nodes.last().unwrap());
                if enter_ok && exit_ok {
                    return Some(path);
                }
            }
        }
    }
    None
}

// ---- classification ------------------------------------------------------------

/// Why a clique-star tree fails the treelike-comparability conditions.
#[derive(Clone, Debug)]
pub enum TreelikeObstruction {
    /// A clique component carries three or more marked edges.
    CliqueMarks { component: usize, marked: Vec<usize> },
    /// A marked edge joins two star centers.
    CenterCenterEdge { a: usize, b: usize },
}

/// How far up the class chain a graph reaches.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphClass {
    NotDistanceHereditary,
    DistanceHereditary,
    TreelikeComparability,
    StrictDoubleArborescence,
    Arborescence,
}

impl GraphClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphClass::NotDistanceHereditary => "not distance-hereditary",
            GraphClass::DistanceHereditary => "distance-hereditary",
            GraphClass::TreelikeComparability => "treelike comparability",
            GraphClass::StrictDoubleArborescence => "double-arborescence (strict)",
            GraphClass::Arborescence => "arborescence",
        }
    }
}

/// Tree-side classification of a connected graph, with certificates for
/// every flag that failed (and the paths that justify the positive ones).
#[derive(Clone, Debug)]
pub struct RecognitionReport {
    pub is_dh: bool,
    pub is_treelike: bool,
    pub is_double_arb: bool,
    pub is_arb: bool,
    /// Irreducible core left by pruning when the graph is not DH.
    pub dh_obstruction: Option<VertexSet>,
    pub treelike_obstruction: Option<TreelikeObstruction>,
    pub center_center_path: Option<AlternatedPath>,
    pub s_leaf_path: Option<AlternatedPath>,
    pub tree: Option<CliqueStarTree>,
}

impl RecognitionReport {
    /// Most specific class the flags admit.
    pub fn class(&self) -> GraphClass {
        if self.is_arb {
            GraphClass::Arborescence
        } else if self.is_double_arb {
            GraphClass::StrictDoubleArborescence
        } else if self.is_treelike {
            GraphClass::TreelikeComparability
        } else if self.is_dh {
            GraphClass::DistanceHereditary
        } else {
            GraphClass::NotDistanceHereditary
        }
    }
}

fn treelike_obstruction(tree: &CliqueStarTree) -> Option<TreelikeObstruction> {
    for (ci, comp) in tree.components().iter().enumerate() {
        if comp.kind != CompKind::Clique {
            continue;
        }
        let marked: Vec<usize> = comp
            .members
            .iter()
            .copied()
            .filter(|&m| {
                tree.t_link(m)
                    .map(|peer| !tree.is_pendant(peer))
                    .unwrap_or(false)
            })
            .collect();
        if marked.len() > 2 {
            return Some(TreelikeObstruction::CliqueMarks { component: ci, marked });
        }
    }
    for (a, b) in tree.marked_edges() {
        if tree.is_star_center(a) && tree.is_star_center(b) {
            return Some(TreelikeObstruction::CenterCenterEdge { a, b });
        }
    }
    None
}

/// Classifies a connected graph from its split tree alone: distance
/// hereditary (tree exists), treelike comparability (every clique has at
/// most two marked vertices, no center-center marked edge), double
/// arborescence (treelike and no s-leaf path), arborescence (no
/// center-center path and no s-leaf path).
pub fn classify_via_tree(g: &Graph) -> Result<RecognitionReport, Error> {
    match prune_dh_detailed(g)? {
        PruneOutcome::Stuck(core) => Ok(RecognitionReport {
            is_dh: false,
            is_treelike: false,
            is_double_arb: false,
            is_arb: false,
            dh_obstruction: Some(core),
            treelike_obstruction: None,
            center_center_path: None,
            s_leaf_path: None,
            tree: None,
        }),
        PruneOutcome::Reduced(elim) => {
            let mut b = Builder::new(g.n());
            for mv in elim.moves.iter().rev() {
                b.insert(mv.removed, mv.kind, mv.anchor);
            }
            let tree = b.finish();
            debug_assert_eq!(tree.validate(), Ok(()));
            let obstruction = treelike_obstruction(&tree);
            let center_center = find_center_center_path(&tree);
            let s_leaf = find_s_leaf_path(&tree);
            let is_treelike = obstruction.is_none();
            Ok(RecognitionReport {
                is_dh: true,
                is_treelike,
                is_double_arb: is_treelike && s_leaf.is_none(),
                is_arb: center_center.is_none() && s_leaf.is_none(),
                dh_obstruction: None,
                treelike_obstruction: obstruction,
                center_center_path: center_center,
                s_leaf_path: s_leaf,
                tree: Some(tree),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_triangle_join;

    fn tree_of(g: &Graph) -> CliqueStarTree {
        let tree = build_clique_star_tree(g).unwrap().unwrap();
        tree.validate().unwrap();
        tree
    }

    #[test]
    fn trees_prune_by_pendants_alone() {
        let path = Graph::path(5);
        let elim = prune_dh(&path).unwrap().unwrap();
        assert_eq!(elim.moves.len(), 4);
        assert!(elim.moves.iter().all(|m| m.kind == MoveKind::Pendant));
    }

    #[test]
    fn five_cycle_is_irreducible() {
        match prune_dh_detailed(&Graph::cycle(5)).unwrap() {
            PruneOutcome::Stuck(core) => assert_eq!(core.len(), 5),
            PruneOutcome::Reduced(_) => panic!("C5 must not reduce"),
        }
        assert!(build_clique_star_tree(&Graph::cycle(5)).unwrap().is_none());
    }

    #[test]
    fn doc_example_starts_with_a_true_twin() {
        let mv = prune_dh(&two_triangle_join()).unwrap().unwrap().moves[0];
        assert_eq!(mv.kind, MoveKind::TrueTwin);
        assert_eq!((mv.anchor, mv.removed), (0, 1));
    }

    #[test]
    fn complete_graph_is_one_clique_component() {
        let tree = tree_of(&Graph::complete(4));
        assert_eq!(tree.components().len(), 1);
        let comp = &tree.components()[0];
        assert_eq!(comp.kind, CompKind::Clique);
        assert_eq!(comp.members.len(), 4);
        // All four members attach straight to pendants.
        assert!(comp
            .members
            .iter()
            .all(|&m| tree.t_link(m).map(|p| tree.is_pendant(p)).unwrap_or(false)));
    }

    #[test]
    fn star_graph_is_one_star_component() {
        let tree = tree_of(&Graph::star(3));
        assert_eq!(tree.components().len(), 1);
        let comp = &tree.components()[0];
        assert_eq!(comp.kind, CompKind::Star);
        let center = comp.center.unwrap();
        // The center's tree edge reaches the hub's pendant (vertex 0).
        assert_eq!(tree.t_link(center), Some(0));
    }

    #[test]
    fn doc_example_tree_has_two_cliques_and_two_stars() {
        let tree = tree_of(&two_triangle_join());
        assert_eq!(tree.components().len(), 4);
        let cliques = tree.components().iter().filter(|c| c.kind == CompKind::Clique).count();
        assert_eq!(cliques, 2);
        assert_eq!(tree.components().len() - cliques, 2);
    }

    #[test]
    fn tiny_graphs_build_degenerate_trees() {
        let k1 = tree_of(&Graph::parse("1").unwrap());
        assert!(k1.is_degenerate());
        assert_eq!(k1.node_count(), 1);
        assert_eq!(k1.t_link(0), None);

        let k2 = tree_of(&Graph::complete(2));
        assert!(k2.is_degenerate());
        assert_eq!(k2.t_edges(), vec![(0, 1)]);

        let p3 = tree_of(&Graph::path(3));
        assert_eq!(p3.components().len(), 1);
    }

    #[test]
    fn accessibility_reproduces_the_source_graph() {
        for g in [
            Graph::parse("1").unwrap(),
            Graph::complete(2),
            Graph::complete(4),
            Graph::star(3),
            Graph::path(4),
            Graph::cycle(4),
            Graph::wheel(4),
            Graph::net(),
            two_triangle_join(),
        ] {
            let tree = tree_of(&g);
            assert_eq!(accessibility_graph(&tree), g, "identity failed for {g:?}");
        }
    }

    #[test]
    fn four_cycle_tree_is_two_stars_center_to_center() {
        let tree = tree_of(&Graph::cycle(4));
        assert_eq!(tree.components().len(), 2);
        assert!(tree.components().iter().all(|c| c.kind == CompKind::Star));
        let path = find_center_center_path(&tree).expect("C4 has a center-center path");
        assert_eq!(path.nodes.len(), 2);
        assert_eq!(path.kinds, vec![EdgeKind::T]);
        assert!(find_s_leaf_path(&tree).is_none());
    }

    #[test]
    fn path_graph_tree_has_an_s_leaf_path() {
        let tree = tree_of(&Graph::path(4));
        let path = find_s_leaf_path(&tree).expect("P4 has an s-leaf path");
        assert_eq!(path.kinds.first(), Some(&EdgeKind::T));
        assert!(find_center_center_path(&tree).is_none());
    }

    #[test]
    fn doc_example_paths_match_its_subgraphs() {
        // Contains an induced P4 but no induced C4.
        let tree = tree_of(&two_triangle_join());
        assert!(find_s_leaf_path(&tree).is_some());
        assert!(find_center_center_path(&tree).is_none());
    }

    #[test]
    fn wheel_has_center_center_but_no_s_leaf() {
        let tree = tree_of(&Graph::wheel(4));
        assert!(find_center_center_path(&tree).is_some());
        assert!(find_s_leaf_path(&tree).is_none());
    }

    #[test]
    fn star_tree_admits_no_paths() {
        let tree = tree_of(&Graph::star(3));
        assert!(find_center_center_path(&tree).is_none());
        assert!(find_s_leaf_path(&tree).is_none());
    }

    #[test]
    fn classify_star_as_arborescence() {
        let report = classify_via_tree(&Graph::star(3)).unwrap();
        assert!(report.is_dh && report.is_treelike && report.is_double_arb && report.is_arb);
        assert_eq!(report.class(), GraphClass::Arborescence);
    }

    #[test]
    fn classify_wheel_as_strict_double_arborescence() {
        let report = classify_via_tree(&Graph::wheel(4)).unwrap();
        assert!(report.is_double_arb);
        assert!(!report.is_arb);
        assert!(report.center_center_path.is_some());
        assert_eq!(report.class(), GraphClass::StrictDoubleArborescence);
    }

    #[test]
    fn classify_doc_example_as_treelike_only() {
        let report = classify_via_tree(&two_triangle_join()).unwrap();
        assert!(report.is_treelike);
        assert!(!report.is_double_arb);
        assert!(report.s_leaf_path.is_some());
        assert_eq!(report.class(), GraphClass::TreelikeComparability);
    }

    #[test]
    fn classify_gem_as_not_distance_hereditary() {
        let report = classify_via_tree(&Graph::gem()).unwrap();
        assert!(!report.is_dh);
        assert_eq!(report.dh_obstruction.as_ref().map(|c| c.len()), Some(5));
        assert_eq!(report.class(), GraphClass::NotDistanceHereditary);
    }

    #[test]
    fn classify_net_as_distance_hereditary_only() {
        // The net is DH but its triangle needs three marked vertices.
        let report = classify_via_tree(&Graph::net()).unwrap();
        assert!(report.is_dh);
        assert!(!report.is_treelike);
        assert!(matches!(
            report.treelike_obstruction,
            Some(TreelikeObstruction::CliqueMarks { .. })
        ));
        assert_eq!(report.class(), GraphClass::DistanceHereditary);
    }

    #[test]
    fn classify_tiny_graphs_as_arborescences() {
        for g in [Graph::parse("1").unwrap(), Graph::complete(2), Graph::path(3)] {
            assert_eq!(classify_via_tree(&g).unwrap().class(), GraphClass::Arborescence);
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(matches!(prune_dh(&g), Err(Error::Disconnected)));
        assert!(matches!(classify_via_tree(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn serializers_cover_components_and_edges() {
        let tree = tree_of(&Graph::cycle(4));
        let js = tree.to_json();
        assert_eq!(js["n"], 4);
        assert_eq!(js["components"].as_array().unwrap().len(), 2);
        assert!(!js["edges"].as_array().unwrap().is_empty());
        let dot = tree.to_dot();
        assert!(dot.contains("cluster_0"));
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("doublecircle"));
    }

    #[test]
    fn path_descriptions_read_well() {
        let tree = tree_of(&Graph::cycle(4));
        let path = find_center_center_path(&tree).unwrap();
        let text = path.describe(&tree);
        assert!(text.contains("-T-"), "got {text}");
    }
}
