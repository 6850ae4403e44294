//! Small-graph corpora: isomorphism classes up to 8 vertices and seeded random graphs.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::matching::maximum_matching;

/// Largest order the canonical-form enumerator handles.
pub const MAX_ENUM_N: usize = 8;

/// Adjacency bit string of `g` under the relabeling `order` (position -> vertex),
/// upper triangle in graph6 column order, most significant bit first.
fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Colour refinement started from degrees; the resulting colours are isomorphism invariant.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| rank.binary_search(&s).expect("present"))
            .collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let after = rank.len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

/// Canonical code: the smallest adjacency bit string over all vertex orders that list the
/// refinement cells in colour order. Two graphs are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical_code is meant for small graphs");
    let colors = refined_colors(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let ncolors = colors.iter().max().map_or(0, |&c| c + 1);
    for c in 0..ncolors {
        cells.push((0..g.n()).filter(|&v| colors[v] == c).collect());
    }
    let mut order = Vec::with_capacity(g.n());
    let mut best = u64::MAX;
    permute_cells(g, &mut cells, 0, &mut order, &mut best);
    best
}

fn permute_cells(g: &Graph, cells: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        *best = (*best).min(code_under(g, order));
        return;
    }
    let k = cells[ci].len();
    permute_within(g, cells, ci, 0, k, order, best);
}

fn permute_within(
    g: &Graph,
    cells: &mut [Vec<usize>],
    ci: usize,
    i: usize,
    k: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if i == k {
        let base = order.len();
        order.extend_from_slice(&cells[ci]);
        permute_cells(g, cells, ci + 1, order, best);
        order.truncate(base);
        return;
    }
    for j in i..k {
        cells[ci].swap(i, j);
        permute_within(g, cells, ci, i + 1, k, order, best);
        cells[ci].swap(i, j);
    }
}

/// Rebuild the graph from its canonical code.
pub fn decode_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if (code >> (total - 1 - k)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid code")
}

fn all_graphs_cached(n: usize) -> &'static [Graph] {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_ENUM_N + 1] = [const { OnceLock::new() }; MAX_ENUM_N + 1];
    CACHE[n].get_or_init(|| {
        if n <= 1 {
            return vec![Graph::empty(n)];
        }
        // every graph on n vertices is some graph on n-1 vertices plus one more vertex
        let mut codes = BTreeSet::new();
        for h in all_graphs_cached(n - 1) {
            for mask in 0u32..(1 << (n - 1)) {
                let g = Graph::from_fn(n, |u, v| {
                    if v == n - 1 {
                        mask >> u & 1 == 1
                    } else {
                        h.has_edge(u, v)
                    }
                });
                codes.insert(canonical_code(&g));
            }
        }
        codes.into_iter().map(|c| decode_code(n, c)).collect()
    })
}

/// All graphs on `n` vertices up to isomorphism, in canonical labeling, sorted by code.
pub fn enumerate_graphs(n: usize) -> Result<&'static [Graph], GraphError> {
    if n > MAX_ENUM_N {
        return Err(GraphError::EnumerationRange { n, min: 0, max: MAX_ENUM_N });
    }
    Ok(all_graphs_cached(n))
}

/// Connected graphs on `n` vertices up to isomorphism, `2 <= n <= 7`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(2..=7).contains(&n) {
        return Err(GraphError::EnumerationRange { n, min: 2, max: 7 });
    }
    Ok(all_graphs_cached(n).iter().filter(|g| g.is_connected()).cloned().collect())
}

/// Isolate-free graphs on `n` vertices up to isomorphism, `2 <= n <= 8`.
pub fn enumerate_isolate_free_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(2..=MAX_ENUM_N).contains(&n) {
        return Err(GraphError::EnumerationRange { n, min: 2, max: MAX_ENUM_N });
    }
    Ok(all_graphs_cached(n).iter().filter(|g| g.first_isolated().is_none()).cloned().collect())
}

/// A named collection of graphs, as selected by a corpus spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Connected,
    IsolateFree,
    PerfectMatching,
}

/// Parse `connected:6`, `isolatefree:6`, `perfectmatching:6`; returns every graph of
/// that kind with `2 <= n <= max`.
pub fn corpus(spec: &str) -> Result<Vec<Graph>, String> {
    let (kind, max) = spec.split_once(':').ok_or_else(|| format!("bad corpus `{spec}`"))?;
    let max: usize = max.parse().map_err(|_| format!("bad corpus size in `{spec}`"))?;
    let kind = match kind {
        "connected" => CorpusKind::Connected,
        "isolatefree" => CorpusKind::IsolateFree,
        "perfectmatching" => CorpusKind::PerfectMatching,
        _ => return Err(format!("unknown corpus kind `{kind}`")),
    };
    corpus_of(kind, 2..=max).map_err(|e| e.to_string())
}

pub fn corpus_of(kind: CorpusKind, sizes: std::ops::RangeInclusive<usize>) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for n in sizes {
        let graphs = match kind {
            CorpusKind::Connected => enumerate_connected_graphs(n)?,
            CorpusKind::IsolateFree => enumerate_isolate_free_graphs(n)?,
            CorpusKind::PerfectMatching => enumerate_isolate_free_graphs(n)?
                .into_iter()
                .filter(|g| maximum_matching(g).is_perfect())
                .collect(),
        };
        out.extend(graphs);
    }
    Ok(out)
}

/// Seeded G(n, p) sample with isolated vertices patched by one random edge each.
pub fn random_isolate_free(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::from_edge_list(n, &edges).expect("valid");
    while let Some(v) = g.first_isolated() {
        let mut w = rng.gen_range(0..n - 1);
        if w >= v {
            w += 1;
        }
        edges.push((v, w));
        g = Graph::from_edge_list(n, &edges).expect("valid");
    }
    g
}

/// `count` random isolate-free graphs with orders drawn from `sizes`, reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.15..0.6);
            random_isolate_free(n, p, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: sweep every labelled graph and dedupe by the minimum code over all n! orders.
    fn brute_force_classes(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut perms = vec![];
        let mut p: Vec<usize> = (0..n).collect();
        heap_permutations(&mut p, n, &mut perms);
        let mut seen = BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let code = perms.iter().map(|o| code_under(&g, o)).min().unwrap();
            seen.insert(code);
        }
        seen.into_iter().map(|c| decode_code(n, c)).collect()
    }

    fn heap_permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap_permutations(p, k - 1, out);
            if k % 2 == 0 {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn brute_force_counts_match_known_sequence() {
        let connected: Vec<usize> = (2..=5)
            .map(|n| brute_force_classes(n).iter().filter(|g| g.is_connected()).count())
            .collect();
        assert_eq!(connected, vec![1, 2, 6, 21]);
    }

    #[test]
    fn canonical_enumeration_agrees_with_brute_force() {
        for n in 2..=5 {
            let fast: BTreeSet<u64> = enumerate_graphs(n).unwrap().iter().map(canonical_code).collect();
            let slow: BTreeSet<u64> = brute_force_classes(n).iter().map(canonical_code).collect();
            assert_eq!(fast.len(), enumerate_graphs(n).unwrap().len());
            assert_eq!(fast, slow, "n={n}");
        }
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 21, 112]);
        assert!(enumerate_connected_graphs(1).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn isolate_free_counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate_isolate_free_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 23, 122]);
    }

    #[test]
    fn canonical_code_is_relabel_invariant() {
        let g = Graph::petersen();
        let c = canonical_code(&g);
        let perm = [3, 7, 1, 0, 9, 2, 8, 5, 4, 6];
        assert_eq!(canonical_code(&g.permuted(&perm)), c);
        assert_ne!(canonical_code(&Graph::cycle(10).unwrap()), c);
    }

    #[test]
    fn random_graphs_are_isolate_free_and_reproducible() {
        let a = random_corpus(11, 20, 2..=10);
        let b = random_corpus(11, 20, 2..=10);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.first_isolated().is_none()));
    }

    #[test]
    fn corpus_specs() {
        assert_eq!(corpus("connected:4").unwrap().len(), 1 + 2 + 6);
        assert_eq!(corpus("perfectmatching:2").unwrap().len(), 1);
        assert!(corpus("trees:4").is_err());
    }
}
