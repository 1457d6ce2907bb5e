//! Simple undirected graphs over dense integer vertex ids.
//!
//! Adjacency is stored as one bit-set row per vertex, which keeps the
//! exhaustive sweeps cheap and makes neighborhood algebra (subset tests,
//! co-components, universal vertices) one-liners. Graphs are immutable after
//! construction apart from [`Graph::add_edge`], which maintains symmetry and
//! irreflexivity itself.

use crate::bitset::VertexSet;
use crate::error::Error;
use std::fmt;

/// Largest pattern accepted by [`Graph::find_induced_copy`].
pub const PATTERN_CAP: usize = 8;

/// A simple undirected graph on vertices `0..n`, with optional display labels.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    names: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Label-exact equality: same vertex count and same adjacency rows.
    /// Display names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            names: None,
        }
    }

    /// Builds a graph from an edge slice. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the undirected edge `{u, v}`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) outside 0..{}", self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// All edges as ordered pairs `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Attaches display labels (one per vertex). Ids stay the canonical
    /// identity; labels only affect rendering.
    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
    }

    /// Display label of `v`: its name if set, else its decimal id.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a display label or decimal id back to a vertex.
    pub fn vertex_by_name(&self, label: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(v) = names.iter().position(|s| s == label) {
                return Some(v);
            }
        }
        label.parse::<usize>().ok().filter(|&v| v < self.n)
    }

    // ---- structural primitives -------------------------------------------

    /// True iff every vertex is reachable from vertex 0 (`true` for K1).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let start = VertexSet::singleton(self.n, 0);
        self.reach_within(&VertexSet::full(self.n), &start).len() == self.n
    }

    /// Vertices adjacent to everything else.
    pub fn universal_vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.adj[v].len() == self.n - 1 {
                out.insert(v);
            }
        }
        out
    }

    /// Closure of `seed` under adjacency, restricted to `within`.
    fn reach_within(&self, within: &VertexSet, seed: &VertexSet) -> VertexSet {
        let mut seen = seed.intersection(within);
        let mut frontier = seen.clone();
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let mut next = self.adj[v].intersection(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier.union_with(&next);
        }
        seen
    }

    /// Connected components of the induced subgraph `G[s]`, each a subset of
    /// `s`, ordered by smallest member.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(s, &VertexSet::singleton(self.n, v));
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the *complement* of `G[s]`. Vertices in
    /// different parts are completely joined in `G`.
    pub fn co_components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            // Closure of {v} under complement adjacency within s.
            let mut comp = VertexSet::singleton(self.n, v);
            let mut frontier = comp.clone();
            while let Some(u) = frontier.first() {
                frontier.remove(u);
                let mut next = self.adj[u].complement();
                next.remove(u);
                next.intersect_with(s);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier.union_with(&next);
            }
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// The induced subgraph `G[s]` on fresh ids `0..|s|`, plus the map from
    /// new ids back to the originals.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = s.iter().collect();
        let mut fwd = vec![usize::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let mut g = Graph::empty(back.len());
        for (new, &old) in back.iter().enumerate() {
            for nb in self.adj[old].intersection(s).iter() {
                if fwd[nb] > new {
                    g.add_edge(new, fwd[nb]);
                }
            }
        }
        if let Some(names) = &self.names {
            g.set_names(back.iter().map(|&old| names[old].clone()).collect());
        }
        (g, back)
    }

    /// Complement graph on the same vertices.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    // ---- induced-subgraph search -----------------------------------------

    /// Exhaustive search for an induced copy of `pattern` (≤ 8 vertices).
    ///
    /// Returns the lexicographically least injective map `m` (as a vector
    /// indexed by pattern vertex) with `x~y` in the pattern ⟺ `m(x)~m(y)`
    /// here, or `None` if no copy exists.
    pub fn find_induced_copy(&self, pattern: &Graph) -> Result<Option<Vec<usize>>, Error> {
        let k = pattern.n;
        if k > PATTERN_CAP {
            return Err(Error::TooLarge {
                what: "induced-pattern search",
                limit: PATTERN_CAP,
                got: k,
            });
        }
        if k > self.n {
            return Ok(None);
        }
        let mut map = vec![usize::MAX; k];
        let mut used = VertexSet::empty(self.n);
        if self.embed(pattern, 0, &mut map, &mut used) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    fn embed(&self, pattern: &Graph, i: usize, map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        if i == pattern.n {
            return true;
        }
        'cand: for c in 0..self.n {
            if used.contains(c) {
                continue;
            }
            for j in 0..i {
                if pattern.has_edge(j, i) != self.has_edge(map[j], c) {
                    continue 'cand;
                }
            }
            map[i] = c;
            used.insert(c);
            if self.embed(pattern, i + 1, map, used) {
                return true;
            }
            used.remove(c);
            map[i] = usize::MAX;
        }
        false
    }

    // ---- fixed patterns ----------------------------------------------------

    /// Path on `n` vertices: `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star `K_{1,k}`: center 0 with `k` leaves.
    pub fn star(k: usize) -> Graph {
        let mut g = Graph::empty(k + 1);
        for v in 1..=k {
            g.add_edge(0, v);
        }
        g
    }

    /// The house: 4-cycle `0-1-3-2-0` with a roof apex 4 over edge `1-3`.
    pub fn house() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 4)])
    }

    /// The gem: path `3-0-1-2` plus a universal vertex 4.
    pub fn gem() -> Graph {
        Graph::from_edges(5, &[(3, 0), (0, 1), (1, 2), (4, 0), (4, 1), (4, 2), (4, 3)])
    }

    /// The domino: two 4-cycles `0-1-4-3-0` and `0-2-5-3-0` sharing edge `0-3`.
    pub fn domino() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (3, 5)])
    }

    /// The net: triangle `0-1-2` with a pendant on each corner.
    pub fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)])
    }

    /// Wheel `W_k`: cycle on `0..k` plus a universal hub `k`.
    pub fn wheel(k: usize) -> Graph {
        assert!(k >= 3, "wheels need a rim of at least 3 vertices");
        let mut g = Graph::empty(k + 1);
        for v in 0..k {
            g.add_edge(v, (v + 1) % k);
            g.add_edge(v, k);
        }
        g
    }

    // ---- edge-list text format ---------------------------------------------

    /// Parses the edge-list format: `#` starts a comment, the first
    /// meaningful line is the vertex count `n ≥ 1`, every further line is an
    /// edge `u v` with `0 ≤ u,v < n`, `u ≠ v`. Duplicate edges collapse.
    pub fn parse(text: &str) -> Result<Graph, Error> {
        let fail = |line: usize, msg: String| Error::Parse { line, msg };
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            match &mut graph {
                None => {
                    let n: usize = line
                        .parse()
                        .map_err(|_| fail(line_no, format!("expected vertex count, got {line:?}")))?;
                    if n == 0 {
                        return Err(fail(line_no, "vertex count must be at least 1".into()));
                    }
                    graph = Some(Graph::empty(n));
                }
                Some(g) => {
                    let mut it = line.split_whitespace();
                    let (u, v) = match (it.next(), it.next(), it.next()) {
                        (Some(a), Some(b), None) => (a, b),
                        _ => return Err(fail(line_no, format!("expected edge \"u v\", got {line:?}"))),
                    };
                    let parse_id = |tok: &str| {
                        tok.parse::<usize>()
                            .map_err(|_| fail(line_no, format!("bad vertex id {tok:?}")))
                    };
                    let (u, v) = (parse_id(u)?, parse_id(v)?);
                    if u >= g.n || v >= g.n {
                        return Err(fail(line_no, format!("vertex id out of range 0..{}", g.n)));
                    }
                    if u == v {
                        return Err(fail(line_no, format!("self-loop at vertex {u}")));
                    }
                    g.add_edge(u, v);
                }
            }
        }
        graph.ok_or_else(|| fail(text.lines().count().max(1), "missing vertex count".into()))
    }

    /// Serializes back to the edge-list format accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// The 6-vertex example graph used throughout the docs and tests: a triangle
/// `0-1-2` and a triangle `3-4-5` glued by the complete join of `{0,1}` and
/// `{4,5}`.
#[cfg(test)]
pub(crate) fn two_triangle_join() -> Graph {
    Graph::parse("6\n2 0\n2 1\n0 1\n0 4\n0 5\n1 5\n1 4\n4 5\n4 3\n5 3").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_small_graphs() {
        let p3 = Graph::parse("3\n0 1\n1 2").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(p3, Graph::path(3));

        let k1 = Graph::parse("1").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);

        // Comments, blank lines and duplicate edges are all tolerated.
        let g = Graph::parse("# header\n3\n\n0 1 # an edge\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = |text: &str| match Graph::parse(text) {
            Err(Error::Parse { line, msg }) => (line, msg),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("3\n0 1\n1 5").0, 3); // out of range
        assert_eq!(err("3\n1 1").0, 2); // self-loop
        assert_eq!(err("3\n0 1 2").0, 2); // malformed edge
        assert_eq!(err("x").0, 1); // bad count
        assert_eq!(err("# nothing\n").0, 1); // missing count
        assert_eq!(err("0").0, 1); // empty graph rejected
    }

    #[test]
    fn parse_round_trips_through_to_edge_list() {
        let g = two_triangle_join();
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::parse("1").unwrap().is_connected());
        assert!(two_triangle_join().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn universal_vertex_scan() {
        assert_eq!(
            Graph::complete(3).universal_vertices().iter().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        assert_eq!(Graph::path(3).universal_vertices().iter().collect::<Vec<_>>(), vec![1]);
        assert!(two_triangle_join().universal_vertices().is_empty());
    }

    #[test]
    fn co_component_examples() {
        let all4 = VertexSet::full(4);
        let parts = Graph::complete(4).co_components(&all4);
        assert_eq!(parts.len(), 4);

        let parts = Graph::cycle(4).co_components(&all4);
        let as_vecs: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().collect()).collect();
        assert_eq!(as_vecs, vec![vec![0, 2], vec![1, 3]]);

        let parts = Graph::path(3).co_components(&VertexSet::full(3));
        let as_vecs: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().collect()).collect();
        assert_eq!(as_vecs, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn co_components_are_completely_joined() {
        let g = two_triangle_join();
        let parts = g.co_components(&VertexSet::full(g.n()));
        for (i, a) in parts.iter().enumerate() {
            for b in parts.iter().skip(i + 1) {
                for u in a.iter() {
                    for v in b.iter() {
                        assert!(g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_relabels_densely() {
        let g = two_triangle_join();
        let (h, back) = g.induced(&VertexSet::from_iter(6, [1, 3, 4, 5]));
        assert_eq!(back, vec![1, 3, 4, 5]);
        // 1-4, 1-5, 4-5, 3-4, 3-5 survive.
        assert_eq!(h.edge_count(), 5);
        assert!(h.has_edge(0, 2) && h.has_edge(1, 2) && !h.has_edge(0, 1));
    }

    #[test]
    fn no_induced_p4_inside_c4() {
        assert_eq!(Graph::cycle(4).find_induced_copy(&Graph::path(4)).unwrap(), None);
    }

    #[test]
    fn first_p4_of_the_doc_example() {
        // The least embedding maps the path 0-1-2-3 onto 2-0-4-3.
        let m = two_triangle_join().find_induced_copy(&Graph::path(4)).unwrap();
        assert_eq!(m, Some(vec![2, 0, 4, 3]));
    }

    #[test]
    fn wheel_rim_is_an_induced_c4() {
        let m = Graph::wheel(4).find_induced_copy(&Graph::cycle(4)).unwrap().unwrap();
        let mut rim = m.clone();
        rim.sort();
        assert_eq!(rim, vec![0, 1, 2, 3]);
    }

    #[test]
    fn pattern_cap_is_enforced() {
        let big = Graph::path(9);
        match Graph::path(12).find_induced_copy(&big) {
            Err(Error::TooLarge { limit: 8, got: 9, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn fixed_patterns_have_expected_shape() {
        for (g, n, m) in [
            (Graph::house(), 5, 6),
            (Graph::gem(), 5, 7),
            (Graph::domino(), 6, 7),
            (Graph::net(), 6, 6),
            (Graph::wheel(4), 5, 8),
        ] {
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), m);
            assert!(g.is_connected());
        }
        // The gem's universal vertex and the net's triangle.
        assert_eq!(Graph::gem().universal_vertices().iter().collect::<Vec<_>>(), vec![4]);
        assert_eq!(Graph::net().degree(3), 1);
    }

    #[test]
    fn names_resolve_and_render() {
        let mut g = Graph::path(2);
        assert_eq!(g.name(1), "1");
        g.set_names(vec!["r".into(), "x".into()]);
        assert_eq!(g.name(1), "x");
        assert_eq!(g.vertex_by_name("x"), Some(1));
        assert_eq!(g.vertex_by_name("1"), Some(1));
        assert_eq!(g.vertex_by_name("zz"), None);
    }
}
