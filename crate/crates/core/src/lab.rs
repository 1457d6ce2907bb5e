//! Instance generators, exhaustive small-graph enumeration, and the
//! cross-characterization harness that checks both recognition routes
//! against each other (and against raw forbidden-subgraph search) on every
//! instance it sees.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::orientation::{
    arborescence_orientation, double_arborescence_orientation, verify_treelike_orientation,
    Direction, DoubleArbOrientation, RootedForestPoset,
};
use crate::splitdec::classify_via_tree;
use crate::wordrep::{double_arb_minword, represents};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::OnceLock;

// ---- deterministic rng ------------------------------------------------------

/// Splitmix-style 64-bit generator, written out so seeds reproduce across
/// platforms and languages: the state advances by `0x9E3779B97F4A7C15` and
/// the output mix is `z ^= z>>30, z *= 0xBF58476D1CE4E5B9, z ^= z>>27,
/// z *= 0x94D049BB133111EB, z ^= z>>31`.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw from `0..bound` (modulo bias is irrelevant at our
    /// bounds and determinism is the point).
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

// ---- generators ------------------------------------------------------------

/// Shape parameters for the random generators.
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    /// Target vertex count.
    pub n: usize,
    /// RNG seed; identical seeds give identical graphs everywhere.
    pub seed: u64,
    /// Soft cap on children per node during random attachment (the
    /// strictness fix-up may still hand the root an extra child).
    pub branching: usize,
    /// Force both sides of a double-arborescence to hold an incomparable
    /// pair, so the result is never a plain arborescence.
    pub strict: bool,
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GenConfig { n, seed, branching: 3, strict: false }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.n == 0 {
            return Err(Error::BadConfig("generators need n ≥ 1".into()));
        }
        if self.branching == 0 {
            return Err(Error::BadConfig("branching must be at least 1".into()));
        }
        Ok(())
    }
}

/// Random rooted tree: attaches `ids` in order, each to a uniformly chosen
/// earlier node that still has branching capacity (the newest node always
/// has room, so the pool is never empty).
fn grow_tree(
    rng: &mut SplitMix64,
    root: usize,
    ids: &[usize],
    branching: usize,
) -> BTreeMap<usize, usize> {
    let mut parent = BTreeMap::new();
    let mut pool = vec![root];
    let mut child_count: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in ids {
        let eligible: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|p| child_count.get(p).copied().unwrap_or(0) < branching)
            .collect();
        let p = eligible[rng.below(eligible.len())];
        parent.insert(v, p);
        *child_count.entry(p).or_insert(0) += 1;
        pool.push(v);
    }
    parent
}

fn depth_in(parent: &BTreeMap<usize, usize>, root: usize, mut v: usize) -> usize {
    let mut d = 0;
    while v != root {
        v = parent[&v];
        d += 1;
    }
    d
}

/// Guarantees the side holds two incomparable elements: if the tree is a
/// bare chain, its deepest node is re-attached directly to the root, giving
/// the root two subtrees.
fn ensure_incomparable_pair(parent: &mut BTreeMap<usize, usize>, root: usize) {
    debug_assert!(parent.len() >= 2);
    let mut child_count: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parent.values() {
        *child_count.entry(p).or_insert(0) += 1;
    }
    if child_count.values().all(|&c| c <= 1) {
        let deepest = *parent
            .keys()
            .max_by_key(|&&v| (depth_in(parent, root, v), std::cmp::Reverse(v)))
            .expect("side is non-empty");
        parent.insert(deepest, root);
    }
}

fn closure_edges_of_tree(g: &mut Graph, root: usize, parent: &BTreeMap<usize, usize>) {
    for &v in parent.keys() {
        let mut anc = parent[&v];
        loop {
            g.add_edge(v, anc);
            if anc == root {
                break;
            }
            anc = parent[&anc];
        }
    }
}

/// Random arborescence: the comparability graph of a random rooted tree,
/// returned with the root-greatest orientation that proves it.
pub fn gen_arborescence(cfg: &GenConfig) -> Result<(Graph, RootedForestPoset), Error> {
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let ids: Vec<usize> = (1..cfg.n).collect();
    let parent = grow_tree(&mut rng, 0, &ids, cfg.branching);
    let mut g = Graph::empty(cfg.n);
    closure_edges_of_tree(&mut g, 0, &parent);
    let poset = RootedForestPoset::from_parents(0, parent, Direction::RootGreatest)?;
    debug_assert!(verify_treelike_orientation(&g, &poset));
    Ok((g, poset))
}

/// Random double-arborescence: two random rooted trees glued at root 0, the
/// first taken below the root and the second above, closed under ancestor
/// comparability plus the below × above join. With `strict`, both sides get
/// at least two mutually incomparable vertices, which needs n ≥ 5.
pub fn gen_double_arborescence(cfg: &GenConfig) -> Result<(Graph, DoubleArbOrientation), Error> {
    cfg.validate()?;
    if cfg.strict && cfg.n < 5 {
        return Err(Error::Unsatisfiable(
            "a strict double-arborescence needs two incomparable vertices per side plus the root (n ≥ 5)".into(),
        ));
    }
    let mut rng = SplitMix64::new(cfg.seed);
    let (g, o) = gen_double_arb_with(&mut rng, cfg.n, cfg.branching, cfg.strict, 0)?;
    Ok((g, o))
}

/// Core double-arborescence builder over vertices `offset..offset+n` with
/// root `offset`; the caller owns the rng stream.
fn gen_double_arb_with(
    rng: &mut SplitMix64,
    n: usize,
    branching: usize,
    strict: bool,
    offset: usize,
) -> Result<(Graph, DoubleArbOrientation), Error> {
    let root = 0;
    let below_count = if strict {
        debug_assert!(n >= 5);
        2 + rng.below(n - 4) // both sides keep ≥ 2 non-root vertices
    } else {
        rng.below(n)
    };
    let below_ids: Vec<usize> = (1..=below_count).collect();
    let above_ids: Vec<usize> = (below_count + 1..n).collect();
    let mut below_parent = grow_tree(rng, root, &below_ids, branching);
    let mut above_parent = grow_tree(rng, root, &above_ids, branching);
    if strict {
        ensure_incomparable_pair(&mut below_parent, root);
        ensure_incomparable_pair(&mut above_parent, root);
    }

    let mut g = Graph::empty(n);
    closure_edges_of_tree(&mut g, root, &below_parent);
    closure_edges_of_tree(&mut g, root, &above_parent);
    for &u in below_parent.keys() {
        for &v in above_parent.keys() {
            g.add_edge(u, v);
        }
    }

    let shift = |m: BTreeMap<usize, usize>| m.into_iter().map(|(c, p)| (c + offset, p + offset)).collect();
    let below = RootedForestPoset::from_parents(root + offset, shift(below_parent), Direction::RootGreatest)?;
    let above = RootedForestPoset::from_parents(root + offset, shift(above_parent), Direction::RootLeast)?;
    let o = DoubleArbOrientation::new(below, above)?;
    if offset == 0 {
        debug_assert!(verify_treelike_orientation(&g, &o));
    }
    Ok((g, o))
}

/// Random path of `k` strict double-arborescences: blocks of at least five
/// vertices each, roots joined by a path whose edges are oriented uniformly
/// at random, then the whole order relation is closed transitively. The
/// union of the block trees and the root path is itself a tree, so the
/// closure is a treelike comparability graph; strict blocks make `k` the
/// true number of double-arborescences in it.
pub fn gen_path_of_double_arborescences(k: usize, cfg: &GenConfig) -> Result<Graph, Error> {
    cfg.validate()?;
    if k == 0 {
        return Err(Error::BadConfig("k must be at least 1".into()));
    }
    if cfg.n < 5 * k {
        return Err(Error::Unsatisfiable(format!(
            "{k} strict double-arborescences need at least {} vertices, got {}",
            5 * k,
            cfg.n
        )));
    }
    let mut rng = SplitMix64::new(cfg.seed);
    let mut sizes = vec![5usize; k];
    for _ in 0..cfg.n - 5 * k {
        sizes[rng.below(k)] += 1;
    }

    // Directed cover relation: an edge u -> v means u is smaller. Below-side
    // tree edges point child -> parent (toward the root), above-side edges
    // parent -> child, and each root-path edge gets a random direction.
    let mut cover: Vec<Vec<usize>> = vec![Vec::new(); cfg.n];
    let mut roots = Vec::with_capacity(k);
    let mut offset = 0;
    for &size in &sizes {
        let (_, o) = gen_double_arb_with(&mut rng, size, cfg.branching, true, offset)?;
        roots.push(o.root());
        for v in o.below().members() {
            if let Some(p) = o.below().parent_of(v) {
                cover[v].push(p);
            }
        }
        for v in o.above().members() {
            if let Some(p) = o.above().parent_of(v) {
                cover[p].push(v);
            }
        }
        offset += size;
    }
    for w in roots.windows(2) {
        if rng.chance() {
            cover[w[0]].push(w[1]);
        } else {
            cover[w[1]].push(w[0]);
        }
    }

    // Explicit transitive closure over a topological order, with the
    // acyclicity of the cover relation asserted rather than assumed.
    let mut indeg = vec![0usize; cfg.n];
    for outs in &cover {
        for &v in outs {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..cfg.n).filter(|&v| indeg[v] == 0).collect();
    let mut topo = Vec::with_capacity(cfg.n);
    while let Some(u) = stack.pop() {
        topo.push(u);
        for &v in &cover[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    assert_eq!(topo.len(), cfg.n, "cover relation must be acyclic");
    let mut above: Vec<VertexSet> = vec![VertexSet::empty(cfg.n); cfg.n];
    for &u in topo.iter().rev() {
        for &v in &cover[u] {
            let larger = above[v].clone();
            above[u].insert(v);
            above[u].union_with(&larger);
        }
    }
    let mut g = Graph::empty(cfg.n);
    for u in 0..cfg.n {
        for v in above[u].iter() {
            g.add_edge(u, v);
        }
    }
    debug_assert!(g.is_connected());
    Ok(g)
}

// ---- exhaustive enumeration ---------------------------------------------------

/// Number of edge masks on `n` labeled vertices.
pub fn edge_mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Decodes an upper-triangle edge mask (pair (i, j), i < j, in row-major
/// order) into a graph.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    g
}

/// Every connected simple graph on `n` labeled vertices, exactly once.
/// Guarded at n ≤ 7 (2,097,152 masks); partition the mask range over
/// `graph_from_edge_mask` directly to parallelize.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    if n == 0 || n > 7 {
        return Err(Error::TooLarge { what: "exhaustive graph enumeration", limit: 7, got: n });
    }
    Ok((0..edge_mask_count(n)).filter_map(move |mask| {
        let g = graph_from_edge_mask(n, mask);
        g.is_connected().then_some(g)
    }))
}

/// Keeps one representative per isomorphism class. Quadratic in the list
/// length with a backtracking isomorphism check per pair: meant for
/// human-readable counts and small pattern sets, not for bulk sweeps.
pub fn dedup_by_iso(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    'next: for g in graphs {
        for r in &reps {
            if r.n() == g.n()
                && r.edge_count() == g.edge_count()
                && g.find_induced_copy(r).expect("representatives stay small").is_some()
            {
                continue 'next;
            }
        }
        reps.push(g);
    }
    reps
}

// ---- cross-characterization ----------------------------------------------------

/// Verdicts for one graph through every route we implement.
#[derive(Clone, Copy, Debug)]
pub struct CrossFlags {
    /// Arborescence by definition-side orientation search.
    pub def_arb: bool,
    /// Arborescence read off the split tree.
    pub tree_arb: bool,
    /// Double-arborescence by definition-side orientation search.
    pub def_darb: bool,
    /// Double-arborescence read off the split tree.
    pub tree_darb: bool,
    /// No induced 4-vertex path.
    pub p4_free: bool,
    /// No induced 4-cycle.
    pub c4_free: bool,
    /// Distance-hereditary (prunes to a point).
    pub dh: bool,
    /// Treelike comparability per the split-tree conditions.
    pub treelike: bool,
}

impl CrossFlags {
    pub fn to_json(&self) -> Value {
        json!({
            "def_arb": self.def_arb,
            "tree_arb": self.tree_arb,
            "def_darb": self.def_darb,
            "tree_darb": self.tree_darb,
            "p4_free": self.p4_free,
            "c4_free": self.c4_free,
            "dh": self.dh,
            "treelike": self.treelike,
        })
    }
}

/// One violated equivalence.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub law: &'static str,
    pub detail: String,
}

/// Flags plus every equivalence that failed on this instance; an empty
/// mismatch list means all applicable characterizations agreed.
#[derive(Clone, Debug)]
pub struct CrossReport {
    pub flags: CrossFlags,
    pub mismatches: Vec<Mismatch>,
}

impl CrossReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// `{graph, flags, mismatches}` with the graph as its edge-list text.
    pub fn to_json(&self, g: &Graph) -> Value {
        json!({
            "graph": g.to_edge_list(),
            "flags": self.flags.to_json(),
            "mismatches": self.mismatches.iter().map(|m| json!({
                "law": m.law,
                "detail": m.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Strict double-arborescence patterns on 5 and 6 vertices, one per
/// isomorphism class, harvested from the exhaustive sweep. The smallest
/// strict double-arborescence has five vertices, so these are exactly the
/// patterns any 6-vertex graph could contain.
fn strict_double_arb_patterns() -> &'static [Graph] {
    static PATTERNS: OnceLock<Vec<Graph>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let mut found = Vec::new();
        for n in 5..=6 {
            for g in enumerate_connected_graphs(n).expect("n within guard") {
                let report = classify_via_tree(&g).expect("enumerated graphs are connected");
                if report.is_double_arb && !report.is_arb {
                    found.push(g);
                }
            }
        }
        dedup_by_iso(found)
    })
}

/// Evaluates every class verdict through both recognition routes plus raw
/// forbidden-subgraph search, and records each equivalence that fails:
///
/// * arborescence ⟺ (P4, C4)-free, and tree route ⟺ definition route;
/// * double-arborescence ⟺ P4-free ∧ treelike, and tree ⟺ definition;
/// * on DH graphs: induced C4 ⟺ center-center path, induced P4 ⟺ s-leaf path;
/// * on treelike graphs up to 6 vertices: induced C4 ⟺ induced strict
///   double-arborescence;
/// * on double-arborescences: the constructed word represents the graph and
///   has length 2n − k.
pub fn crosscheck(g: &Graph) -> Result<CrossReport, Error> {
    let def_arb = arborescence_orientation(g)?;
    let def_darb = double_arborescence_orientation(g)?;
    let p4_free = g.find_induced_copy(&Graph::path(4))?.is_none();
    let c4_free = g.find_induced_copy(&Graph::cycle(4))?.is_none();
    let tree_report = classify_via_tree(g)?;

    let flags = CrossFlags {
        def_arb: def_arb.is_some(),
        tree_arb: tree_report.is_arb,
        def_darb: def_darb.is_some(),
        tree_darb: tree_report.is_double_arb,
        p4_free,
        c4_free,
        dh: tree_report.is_dh,
        treelike: tree_report.is_treelike,
    };

    let mut mismatches = Vec::new();
    let mut law = |holds: bool, name: &'static str, detail: String| {
        if !holds {
            mismatches.push(Mismatch { law: name, detail });
        }
    };

    law(
        flags.def_arb == (flags.p4_free && flags.c4_free),
        "arborescence-vs-forbidden-subgraphs",
        format!("def_arb={} p4_free={} c4_free={}", flags.def_arb, flags.p4_free, flags.c4_free),
    );
    law(
        flags.tree_arb == flags.def_arb,
        "arborescence-tree-vs-definition",
        format!("tree_arb={} def_arb={}", flags.tree_arb, flags.def_arb),
    );
    law(
        flags.def_darb == (flags.p4_free && flags.treelike),
        "double-arborescence-vs-forbidden",
        format!(
            "def_darb={} p4_free={} treelike={}",
            flags.def_darb, flags.p4_free, flags.treelike
        ),
    );
    law(
        flags.tree_darb == flags.def_darb,
        "double-arborescence-tree-vs-definition",
        format!("tree_darb={} def_darb={}", flags.tree_darb, flags.def_darb),
    );
    if flags.dh {
        let center_center = tree_report.center_center_path.is_some();
        let s_leaf = tree_report.s_leaf_path.is_some();
        law(
            flags.c4_free == !center_center,
            "four-cycle-vs-center-center-path",
            format!("c4_free={} center_center_path={center_center}", flags.c4_free),
        );
        law(
            flags.p4_free == !s_leaf,
            "four-path-vs-s-leaf-path",
            format!("p4_free={} s_leaf_path={s_leaf}", flags.p4_free),
        );
    }
    if flags.treelike && g.n() <= 6 {
        let has_strict = strict_double_arb_patterns()
            .iter()
            .filter(|p| p.n() <= g.n())
            .any(|p| g.find_induced_copy(p).expect("patterns stay small").is_some());
        law(
            flags.c4_free == !has_strict,
            "four-cycle-vs-strict-double-arborescence",
            format!("c4_free={} induced_strict_double_arb={has_strict}", flags.c4_free),
        );
    }
    if let Some(o) = &def_darb {
        let w = double_arb_minword(o);
        let k = o.longest_chain().len();
        let sound = represents(&w, g)?.ok && w.len() == 2 * g.n() - k;
        law(
            sound,
            "word-length-law",
            format!("|w|={} expected {} (n={}, k={k})", w.len(), 2 * g.n() - k, g.n()),
        );
    }

    Ok(CrossReport { flags, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::two_triangle_join;

    #[test]
    fn splitmix_matches_reference_vectors() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
        let mut rng = SplitMix64::new(1_234_567);
        assert_eq!(rng.next_u64(), 0x599E_D017_FB08_FC85);
        assert_eq!(rng.next_u64(), 0x2C73_F084_5854_0FA5);
    }

    #[test]
    fn generators_are_deterministic() {
        let cfg = GenConfig::new(24, 99);
        let (g1, _) = gen_arborescence(&cfg).unwrap();
        let (g2, _) = gen_arborescence(&cfg).unwrap();
        assert_eq!(g1, g2);
        let cfg = GenConfig { strict: true, ..GenConfig::new(24, 99) };
        let (d1, _) = gen_double_arborescence(&cfg).unwrap();
        let (d2, _) = gen_double_arborescence(&cfg).unwrap();
        assert_eq!(d1, d2);
        let p1 = gen_path_of_double_arborescences(3, &cfg).unwrap();
        let p2 = gen_path_of_double_arborescences(3, &cfg).unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn tiny_arborescences_are_complete_graphs() {
        let (k1, _) = gen_arborescence(&GenConfig::new(1, 5)).unwrap();
        assert_eq!(k1, Graph::parse("1").unwrap());
        let (k2, _) = gen_arborescence(&GenConfig::new(2, 5)).unwrap();
        assert_eq!(k2, Graph::complete(2));
    }

    #[test]
    fn generated_arborescences_classify_as_arborescences() {
        for seed in [42, 7, 2024] {
            let (g, poset) = gen_arborescence(&GenConfig::new(8, seed)).unwrap();
            assert!(verify_treelike_orientation(&g, &poset));
            assert!(classify_via_tree(&g).unwrap().is_arb);
        }
    }

    #[test]
    fn minimal_strict_double_arborescence_is_the_wheel() {
        for seed in 0..6 {
            let cfg = GenConfig { strict: true, ..GenConfig::new(5, seed) };
            let (g, _) = gen_double_arborescence(&cfg).unwrap();
            assert_eq!(g.edge_count(), Graph::wheel(4).edge_count());
            assert!(g.find_induced_copy(&Graph::wheel(4)).unwrap().is_some());
        }
    }

    #[test]
    fn strict_generation_needs_five_vertices() {
        let cfg = GenConfig { strict: true, ..GenConfig::new(4, 1) };
        assert!(matches!(gen_double_arborescence(&cfg), Err(Error::Unsatisfiable(_))));
    }

    #[test]
    fn generated_double_arborescences_classify_correctly() {
        let (g, o) = gen_double_arborescence(&GenConfig::new(50, 7)).unwrap();
        assert!(verify_treelike_orientation(&g, &o));
        assert!(classify_via_tree(&g).unwrap().is_double_arb);
        for seed in [3, 11] {
            let cfg = GenConfig { strict: true, ..GenConfig::new(30, seed) };
            let (g, _) = gen_double_arborescence(&cfg).unwrap();
            let report = classify_via_tree(&g).unwrap();
            assert!(report.is_double_arb && !report.is_arb);
        }
    }

    #[test]
    fn path_of_one_block_is_a_double_arborescence() {
        let g = gen_path_of_double_arborescences(1, &GenConfig::new(9, 13)).unwrap();
        let report = classify_via_tree(&g).unwrap();
        assert!(report.is_double_arb && !report.is_arb);
    }

    #[test]
    fn longer_paths_are_treelike_with_an_induced_p4() {
        for (k, n, seed) in [(2, 10, 1), (2, 14, 8), (4, 25, 5)] {
            let g = gen_path_of_double_arborescences(k, &GenConfig::new(n, seed)).unwrap();
            let report = classify_via_tree(&g).unwrap();
            assert!(report.is_treelike, "k={k} seed={seed}");
            assert!(!report.is_double_arb, "k={k} seed={seed}");
            assert!(g.find_induced_copy(&Graph::path(4)).unwrap().is_some());
        }
    }

    #[test]
    fn path_generation_needs_five_vertices_per_block() {
        let err = gen_path_of_double_arborescences(3, &GenConfig::new(14, 1));
        assert!(matches!(err, Err(Error::Unsatisfiable(_))));
        let err = gen_path_of_double_arborescences(0, &GenConfig::new(14, 1));
        assert!(matches!(err, Err(Error::BadConfig(_))));
    }

    #[test]
    fn enumeration_counts_match_the_classics() {
        let count = |n| enumerate_connected_graphs(n).unwrap().count();
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 1);
        assert_eq!(count(3), 4);
        assert_eq!(count(4), 38);
        assert_eq!(count(5), 728);
        assert!(matches!(
            enumerate_connected_graphs(8),
            Err(Error::TooLarge { limit: 7, got: 8, .. })
        ));
    }

    #[test]
    fn dedup_counts_isomorphism_classes() {
        let all: Vec<Graph> = enumerate_connected_graphs(4).unwrap().collect();
        assert_eq!(dedup_by_iso(all).len(), 6);
    }

    #[test]
    fn the_only_five_vertex_strict_pattern_is_the_wheel() {
        let fives: Vec<&Graph> = strict_double_arb_patterns().iter().filter(|p| p.n() == 5).collect();
        assert_eq!(fives.len(), 1);
        assert!(fives[0].find_induced_copy(&Graph::wheel(4)).unwrap().is_some());
    }

    #[test]
    fn crosscheck_agrees_on_the_fixtures() {
        let star = crosscheck(&Graph::star(3)).unwrap();
        assert!(star.ok());
        assert!(star.flags.def_arb && star.flags.tree_arb && star.flags.def_darb);

        let gem = crosscheck(&Graph::gem()).unwrap();
        assert!(gem.ok());
        assert!(!gem.flags.dh && !gem.flags.treelike && !gem.flags.def_darb);

        let doc = crosscheck(&two_triangle_join()).unwrap();
        assert!(doc.ok());
        assert!(doc.flags.treelike && !doc.flags.tree_darb);

        let wheel = crosscheck(&Graph::wheel(4)).unwrap();
        assert!(wheel.ok());
        assert!(wheel.flags.def_darb && !wheel.flags.def_arb);

        let c5 = crosscheck(&Graph::cycle(5)).unwrap();
        assert!(c5.ok());
        assert!(!c5.flags.dh && c5.flags.c4_free && !c5.flags.p4_free);
    }

    #[test]
    fn crosscheck_rejects_disconnected_graphs() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(matches!(crosscheck(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn crosscheck_json_shape() {
        let g = Graph::star(3);
        let js = crosscheck(&g).unwrap().to_json(&g);
        assert!(js["graph"].as_str().unwrap().starts_with('4'));
        assert_eq!(js["mismatches"].as_array().unwrap().len(), 0);
        assert_eq!(js["flags"]["def_arb"], true);
    }
}
