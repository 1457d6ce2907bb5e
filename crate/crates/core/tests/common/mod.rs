//! Oracles for the integration suites, kept deliberately independent of the
//! library's own algorithms: exhaustive subset scans instead of orientation
//! or tree machinery, and a forward-insertion generator instead of pruning.

#![allow(dead_code)] // each test target uses its own subset of the oracles

use arborep::lab::SplitMix64;
use arborep::Graph;

/// Maximum clique size by scanning every vertex subset.
pub fn max_clique_size(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "subset-scan oracle is exponential");
    let mut best = 0;
    'mask: for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for (i, &u) in verts.iter().enumerate() {
            for &v in verts.iter().skip(i + 1) {
                if !g.has_edge(u, v) {
                    continue 'mask;
                }
            }
        }
        best = size;
    }
    best
}

/// Induced-subgraph presence by brute force: every subset of the right size,
/// every bijection onto the pattern, edge-for-edge comparison.
pub fn has_induced_subgraph(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > g.n() {
        return false;
    }
    let mut subset = Vec::with_capacity(k);
    subsets(g.n(), k, 0, &mut subset, &mut |chosen| {
        let mut map = chosen.to_vec();
        permutations(&mut map, 0, &mut |perm| {
            // perm[i] plays pattern vertex i.
            for a in 0..k {
                for b in a + 1..k {
                    if pattern.has_edge(a, b) != g.has_edge(perm[a], perm[b]) {
                        return false;
                    }
                }
            }
            true
        })
    })
}

fn subsets(
    n: usize,
    k: usize,
    from: usize,
    acc: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if acc.len() == k {
        return found(acc);
    }
    for v in from..n {
        if n - v < k - acc.len() {
            break;
        }
        acc.push(v);
        if subsets(n, k, v + 1, acc, found) {
            acc.pop();
            return true;
        }
        acc.pop();
    }
    false
}

fn permutations(items: &mut [usize], at: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == items.len() {
        return found(items);
    }
    for i in at..items.len() {
        items.swap(at, i);
        if permutations(items, at + 1, found) {
            items.swap(at, i);
            return true;
        }
        items.swap(at, i);
    }
    false
}

/// Random connected distance-hereditary graph grown by forward insertions
/// (pendant, true twin, false twin) — the construction direction, so no
/// pruning code is involved in producing it.
pub fn random_dh_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for v in 1..n {
        let anchor = rng.below(v);
        let anchor_nbrs: Vec<usize> = g.neighbors(anchor).iter().collect();
        match rng.below(3) {
            0 => g.add_edge(v, anchor),
            1 => {
                for &u in &anchor_nbrs {
                    g.add_edge(v, u);
                }
                g.add_edge(v, anchor);
            }
            _ if !anchor_nbrs.is_empty() => {
                for &u in &anchor_nbrs {
                    g.add_edge(v, u);
                }
            }
            _ => g.add_edge(v, anchor),
        }
    }
    g
}
