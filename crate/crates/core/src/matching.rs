//! Maximum matching in general graphs and the star/triangle classification of
//! matching edges used by Dom's Bicolored-game strategy.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// How the external (unmatched) vertices attach to a matching edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// No external neighbor.
    Bare,
    /// One external vertex adjacent to both endpoints.
    Triangle { external: usize },
    /// All external neighbors hang on `center`.
    Star { center: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingStructure {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Unmatched vertices, ascending.
    pub external: Vec<usize>,
    /// Parallel to `pairs`; empty until [`classify_matching`] fills it.
    pub kinds: Vec<EdgeKind>,
    /// `mate[v]` is v's partner, or `None` for external vertices.
    pub mate: Vec<Option<usize>>,
    /// `edge_of[v]` is the index in `pairs` of v's matching edge.
    pub edge_of: Vec<Option<usize>>,
}

impl MatchingStructure {
    fn from_mate(mate: Vec<Option<usize>>) -> Self {
        let mut pairs: Vec<_> = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect();
        pairs.sort_unstable();
        let mut edge_of = vec![None; mate.len()];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            edge_of[u] = Some(i);
            edge_of[v] = Some(i);
        }
        let external = (0..mate.len()).filter(|&v| mate[v].is_none()).collect();
        MatchingStructure { pairs, external, kinds: Vec::new(), mate, edge_of }
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_perfect(&self) -> bool {
        self.external.is_empty()
    }

    pub fn is_external(&self, v: usize) -> bool {
        self.mate[v].is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered twice")]
    Overlap(usize),
    #[error("external vertices {0} and {1} are adjacent; the matching is not maximum")]
    ExternalEdge(usize, usize),
    #[error("matching edge ({0}, {1}) has external neighbors on both ends that differ; the matching is not maximum")]
    Contradiction(usize, usize),
}

/// Maximum-cardinality matching via Edmonds' blossom contraction.
///
/// Free vertices are tried as roots in ascending order and neighbors are scanned in
/// adjacency order, so the output is a deterministic function of the graph.
pub fn maximum_matching(g: &Graph) -> MatchingStructure {
    let n = g.n();
    let mut mate = vec![NONE; n];
    // greedy warm start, lowest index first
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(g, &mate, root) {
                let mut v = end;
                while v != NONE {
                    let pv = search.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    MatchingStructure::from_mate(mate.into_iter().map(|m| (m != NONE).then_some(m)).collect())
}

struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Validate `pairs` as a matching of `g` and classify each edge as bare, triangle or star.
pub fn classify_matching(g: &Graph, pairs: &[(usize, usize)]) -> Result<MatchingStructure, MatchingError> {
    let mut mate = vec![None; g.n()];
    for &(u, v) in pairs {
        if !g.has_edge(u, v) {
            return Err(MatchingError::NotAnEdge(u, v));
        }
        for (a, b) in [(u, v), (v, u)] {
            if mate[a].is_some() {
                return Err(MatchingError::Overlap(a));
            }
            mate[a] = Some(b);
        }
    }
    let mut ms = MatchingStructure::from_mate(mate);
    for &x in &ms.external {
        if let Some(&y) = g.neighbors(x).iter().find(|&&y| ms.mate[y].is_none()) {
            return Err(MatchingError::ExternalEdge(x, y));
        }
    }
    let external_nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v).iter().copied().filter(|&w| ms.mate[w].is_none()).collect()
    };
    let mut kinds = Vec::with_capacity(ms.pairs.len());
    for &(u, v) in &ms.pairs {
        let eu = external_nbrs(u);
        let ev = external_nbrs(v);
        let kind = match (eu.is_empty(), ev.is_empty()) {
            (true, true) => EdgeKind::Bare,
            (false, true) => EdgeKind::Star { center: u },
            (true, false) => EdgeKind::Star { center: v },
            (false, false) => {
                if eu.len() == 1 && eu == ev {
                    EdgeKind::Triangle { external: eu[0] }
                } else {
                    return Err(MatchingError::Contradiction(u, v));
                }
            }
        };
        kinds.push(kind);
    }
    ms.kinds = kinds;
    Ok(ms)
}

/// Maximum matching followed by classification; infallible because the matching is maximum.
pub fn matching_structure(g: &Graph) -> MatchingStructure {
    let m = maximum_matching(g);
    classify_matching(g, &m.pairs).expect("a maximum matching always classifies")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_nu(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
            let Some((&(u, v), rest)) = edges.split_first() else { return 0 };
            let skip = rec(rest, used);
            if used[u] || used[v] {
                return skip;
            }
            used[u] = true;
            used[v] = true;
            let take = 1 + rec(rest, used);
            used[u] = false;
            used[v] = false;
            skip.max(take)
        }
        let edges: Vec<_> = g.edges().collect();
        rec(&edges, &mut vec![false; g.n()])
    }

    #[test]
    fn small_examples() {
        let c4 = maximum_matching(&Graph::cycle(4).unwrap());
        assert_eq!(c4.size(), 2);
        assert!(c4.external.is_empty());
        let p3 = maximum_matching(&Graph::path(3).unwrap());
        assert_eq!((p3.size(), p3.external.len()), (1, 1));
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let p = Graph::petersen();
        assert_eq!(brute_force_nu(&p), 5);
        assert_eq!(maximum_matching(&p).size(), 5);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4-5: greedy picks (0,1),(2,3),
        // leaving 4,5 matched only through a blossom-aware augmentation
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), brute_force_nu(&g));
        let odd = Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6), (6, 7)],
        )
        .unwrap();
        assert_eq!(maximum_matching(&odd).size(), brute_force_nu(&odd));
    }

    #[test]
    fn classification_examples() {
        let p3 = Graph::path(3).unwrap();
        let ms = classify_matching(&p3, &[(0, 1)]).unwrap();
        assert_eq!(ms.external, vec![2]);
        assert_eq!(ms.kinds, vec![EdgeKind::Star { center: 1 }]);

        let c3 = Graph::cycle(3).unwrap();
        let ms = classify_matching(&c3, &[(0, 1)]).unwrap();
        assert_eq!(ms.kinds, vec![EdgeKind::Triangle { external: 2 }]);

        let c4 = Graph::cycle(4).unwrap();
        let ms = classify_matching(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(ms.kinds, vec![EdgeKind::Bare, EdgeKind::Bare]);
    }

    #[test]
    fn non_maximum_matchings_are_rejected() {
        // P4 with only the middle edge: both ends external, one on each side
        let p4 = Graph::path(4).unwrap();
        assert_eq!(classify_matching(&p4, &[(1, 2)]), Err(MatchingError::Contradiction(1, 2)));
        assert_eq!(classify_matching(&p4, &[]), Err(MatchingError::ExternalEdge(0, 1)));
        assert_eq!(classify_matching(&p4, &[(0, 2)]), Err(MatchingError::NotAnEdge(0, 2)));
        assert_eq!(classify_matching(&p4, &[(0, 1), (1, 2)]), Err(MatchingError::Overlap(1)));
    }
}
