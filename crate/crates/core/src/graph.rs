//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A finite simple graph. Adjacency lists are kept sorted and symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Build from a symmetric adjacency predicate (used by the enumerators).
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if f(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v] = N(v) ∪ {v}`, sorted ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n() });
        }
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        Ok(out)
    }

    /// Iterate `N[v]` without allocating (v first, then its neighbors).
    #[inline]
    pub fn closed_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.adj[v].iter().copied())
    }

    pub fn first_isolated(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, matching the order of [`Graph::components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n()];
        for (i, comp) in self.components().iter().enumerate() {
            for &v in comp {
                label[v] = i;
            }
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall { kind: "cycle", n, min: 3 });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall { kind: "path", n, min: 2 });
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall { kind: "complete graph", n, min: 2 });
        }
        Ok(Self::from_fn(n, |_, _| true))
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edge_list(10, &edges).expect("static edge list")
    }

    /// `self ⊎ other`; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + off).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Graph induced on `vertices`; returns it with the list mapping new ids to old ones.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        (Graph { adj }, vertices.to_vec())
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[v]].sort_unstable();
        }
        Graph { adj }
    }

    /// Vertex pairs `u != v` with `N[u] ⊆ N[v]`, as `(u, v)`, lexicographic by `(v, u)`.
    pub fn dominated_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n() {
            for &u in &self.adj[v] {
                if self.closed_iter(u).all(|w| w == v || self.has_edge(v, w)) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Record of a 3-subdivision: every base edge `wz` became the path `w–x–y–z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    pub base: Graph,
    /// Per base edge `(w, z)` with `w < z`: the inserted `(x, y)` with `x ~ w`, `y ~ z`.
    pub paths: Vec<((usize, usize), (usize, usize))>,
    /// Base vertex `v` keeps id `base_ids[v]` in the subdivided graph.
    pub base_ids: Vec<usize>,
}

/// What a vertex of a subdivided graph was.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdivisionRole {
    Base(usize),
    /// Interior vertex of the path for edge `edge`; `near` is the base end it touches,
    /// `far` the opposite base end, `partner` the other interior vertex.
    Interior {
        edge: usize,
        near: usize,
        far: usize,
        partner: usize,
    },
}

impl SubdivisionMap {
    pub fn role(&self, v: usize) -> SubdivisionRole {
        let nb = self.base.n();
        if v < nb {
            return SubdivisionRole::Base(v);
        }
        let edge = (v - nb) / 2;
        let ((w, z), (x, y)) = self.paths[edge];
        if v == x {
            SubdivisionRole::Interior { edge, near: w, far: z, partner: y }
        } else {
            SubdivisionRole::Interior { edge, near: z, far: w, partner: x }
        }
    }

    /// Interior vertices adjacent to base vertex `w`, paired with the partner and far end,
    /// ordered by the near interior id.
    pub fn spokes(&self, w: usize) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> = self
            .paths
            .iter()
            .filter_map(|&((a, b), (x, y))| {
                if a == w {
                    Some((x, y, b))
                } else if b == w {
                    Some((y, x, a))
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Replace every edge by a path of length 3. Base vertices keep their ids; the two
/// interior vertices of the `i`-th edge (in [`Graph::edges`] order) get `n + 2i`, `n + 2i + 1`.
pub fn subdivide3(g: &Graph) -> (Graph, SubdivisionMap) {
    let n = g.n();
    let base_edges: Vec<_> = g.edges().collect();
    let mut edges = Vec::with_capacity(3 * base_edges.len());
    let mut paths = Vec::with_capacity(base_edges.len());
    for (i, &(w, z)) in base_edges.iter().enumerate() {
        let x = n + 2 * i;
        let y = x + 1;
        edges.extend([(w, x), (x, y), (y, z)]);
        paths.push(((w, z), (x, y)));
    }
    let sub = Graph::from_edge_list(n + 2 * base_edges.len(), &edges).expect("valid by construction");
    let map = SubdivisionMap {
        base: g.clone(),
        paths,
        base_ids: (0..n).collect(),
    };
    (sub, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap());
        assert_eq!(Graph::from_edge_list(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn closed_neighborhoods() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.closed_neighborhood(0).unwrap(), vec![0, 1, 3]);
        assert_eq!(Graph::complete(4).unwrap().closed_neighborhood(2).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(Graph::path(3).unwrap().closed_neighborhood(0).unwrap(), vec![0, 1]);
        assert!(c4.closed_neighborhood(4).is_err());
    }

    #[test]
    fn components_of_union() {
        let g = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(8).unwrap());
        assert_eq!(g.n(), 12);
        assert_eq!(g.m(), 12);
        let comps = g.components();
        assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 8]);
        assert_eq!(comps[1][0], 4);
        assert!(!g.is_connected());
        assert!(Graph::complete(5).unwrap().is_connected());
        assert_eq!(Graph::empty(3).first_isolated(), Some(0));
    }

    #[test]
    fn generators() {
        let c8 = Graph::cycle(8).unwrap();
        assert_eq!((c8.n(), c8.m()), (8, 8));
        assert!((0..8).all(|v| c8.degree(v) == 2));
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(1).is_err());
        assert!(Graph::complete(1).is_err());
        let p = Graph::petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn subdivision_counts() {
        let (c9, map) = subdivide3(&Graph::cycle(3).unwrap());
        assert_eq!((c9.n(), c9.m()), (9, 9));
        assert!(c9.is_connected() && (0..9).all(|v| c9.degree(v) == 2));
        assert_eq!(map.paths.len(), 3);

        let (p4, _) = subdivide3(&Graph::complete(2).unwrap());
        assert_eq!((p4.n(), p4.m()), (4, 3));
        assert_eq!(p4.degree(0), 1);

        let (k4s, map) = subdivide3(&Graph::complete(4).unwrap());
        assert_eq!((k4s.n(), k4s.m()), (16, 18));
        for &((w, z), (x, y)) in &map.paths {
            assert!(k4s.has_edge(w, x) && k4s.has_edge(x, y) && k4s.has_edge(y, z));
        }
        match map.role(5) {
            SubdivisionRole::Interior { near, far, partner, .. } => {
                assert!(k4s.has_edge(5, near) && k4s.has_edge(partner, far))
            }
            SubdivisionRole::Base(_) => panic!("5 is interior"),
        }
        assert_eq!(map.spokes(0).len(), 3);
    }

    #[test]
    fn dominated_pairs_on_paths_and_cycles() {
        assert_eq!(Graph::path(4).unwrap().dominated_pairs()[0], (0, 1));
        assert!(Graph::cycle(8).unwrap().dominated_pairs().is_empty());
        assert_eq!(Graph::complete(3).unwrap().dominated_pairs().len(), 6);
    }

    #[test]
    fn induced_and_permuted() {
        let g = Graph::cycle(5).unwrap();
        let (h, map) = g.induced(&[1, 2, 3]);
        assert_eq!(h, Graph::path(3).unwrap());
        assert_eq!(map, vec![1, 2, 3]);
        let perm = [4, 3, 2, 1, 0];
        let r = g.permuted(&perm);
        assert_eq!(r.m(), 5);
        assert!(r.has_edge(4, 3) && r.has_edge(0, 4));
    }
}
