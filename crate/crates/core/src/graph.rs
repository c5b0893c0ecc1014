//! Simple undirected graphs stored as one adjacency bit-row per vertex.
//!
//! Every row is a slice of `u64` words, so the number of common neighbours of
//! two vertices is the popcount of the intersection of their rows. Vertices
//! are always labelled `0..n`.

use std::fmt;

use crate::error::GraphError;

const WORD: usize = 64;

/// An immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(WORD);
        Graph { n, stride, bits: vec![0; n * stride] }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop { v });
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.stride + u / WORD] |= 1 << (u % WORD);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// The adjacency bit-row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Whether `u ~ v`. Out-of-range vertices are never adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree_of(v))
    }

    pub(crate) fn degree_of(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|com{u, v}|`, the number of vertices adjacent to both `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex { v });
        }
        Ok(self.common_count(u, v))
    }

    pub(crate) fn common_count(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree_of(v)).collect()
    }

    /// The common degree when every vertex has the same degree. The graph on
    /// zero vertices is 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree_of(0) };
        (1..self.n).all(|v| self.degree_of(v) == k).then_some(k)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
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

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.size() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| self.common_count(u, v) == 0)
    }

    pub fn is_k4_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| {
            let common: Vec<usize> = self.neighbors(u).filter(|&w| self.has_edge(v, w)).collect();
            common.iter().enumerate().all(|(i, &a)| common[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
        })
    }

    /// No diamond (K4 minus an edge) as a subgraph: every edge lies in at most
    /// one triangle.
    pub fn is_diamond_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| self.common_count(u, v) <= 1)
    }

    /// No 4-cycle as a subgraph: no two vertices share two neighbours.
    pub fn is_c4_free(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.common_count(u, v) <= 1))
    }

    /// Every component is a cycle (on at least three vertices).
    pub fn is_disjoint_union_of_cycles(&self) -> bool {
        self.degrees().iter().all(|&d| d == 2)
    }

    /// Every component is a `K3` or a `K2`.
    pub fn is_disjoint_union_of_triangles_and_edges(&self) -> bool {
        self.components().iter().all(|c| {
            let all_adjacent = c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| self.has_edge(a, b)));
            (c.len() == 2 || c.len() == 3) && all_adjacent
        })
    }
}

/// Two distinct edges of a graph, each stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgePair {
    pub e1: (usize, usize),
    pub e2: (usize, usize),
}

/// Which small subgraphs contain a disjoint edge pair together with its cross
/// edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairPattern {
    pub in_p4: bool,
    pub in_c4: bool,
    pub in_diamond: bool,
    pub in_k4: bool,
}

fn ordered((a, b): (usize, usize)) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl EdgePair {
    pub fn new(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Result<Self, GraphError> {
        for &(u, v) in &[e1, e2] {
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge { u, v });
            }
        }
        let (e1, e2) = (ordered(e1), ordered(e2));
        if e1 == e2 {
            return Err(GraphError::SameEdge);
        }
        Ok(EdgePair { e1, e2 })
    }

    pub fn disjoint(&self) -> bool {
        let (a, b) = self.e1;
        let (c, d) = self.e2;
        a != c && a != d && b != c && b != d
    }

    fn require_disjoint(&self) -> Result<(), GraphError> {
        if self.disjoint() {
            Ok(())
        } else {
            let ((a, b), (c, d)) = (self.e1, self.e2);
            Err(GraphError::NotDisjoint { a, b, c, d })
        }
    }

    /// Presence of the cross edges `ac, ad, bc, bd`.
    fn cross(&self, g: &Graph) -> [bool; 4] {
        let ((a, b), (c, d)) = (self.e1, self.e2);
        [g.has_edge(a, c), g.has_edge(a, d), g.has_edge(b, c), g.has_edge(b, d)]
    }

    /// Number of edges joining the two (disjoint) edges; this is the number of
    /// common neighbours of the two edges as vertices of the line graph.
    pub fn cross_edges(&self, g: &Graph) -> Result<usize, GraphError> {
        self.require_disjoint()?;
        Ok(self.cross(g).iter().filter(|&&x| x).count())
    }

    pub fn pattern(&self, g: &Graph) -> Result<PairPattern, GraphError> {
        self.require_disjoint()?;
        let [ac, ad, bc, bd] = self.cross(g);
        let count = [ac, ad, bc, bd].iter().filter(|&&x| x).count();
        Ok(PairPattern {
            in_p4: count >= 1,
            in_c4: (ac && bd) || (ad && bc),
            in_diamond: count >= 3,
            in_k4: count == 4,
        })
    }
}

/// All unordered pairs of disjoint edges of `g`.
pub fn disjoint_edge_pairs(g: &Graph) -> Vec<EdgePair> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            let p = EdgePair { e1, e2 };
            if p.disjoint() {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn edge_list_errors_name_the_pair() {
        let err = Graph::from_edges(3, &[(0, 3)]).unwrap_err();
        assert_eq!(err, GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 });
        assert!(err.to_string().contains("(0, 3)"));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]).unwrap_err(), GraphError::Loop { v: 1 });
    }

    #[test]
    fn small_graphs() {
        let k3 = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(k3.size(), 3);
        assert_eq!(k3.degree(0), Ok(2));
        assert!(k3.is_complete());
        let k1 = g(1, &[]);
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.is_regular(), Some(0));
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]);
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::empty(0).is_regular(), Some(0));
    }

    #[test]
    fn degree_and_common_neighbours() {
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(petersen.degree(7), Ok(3));
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.common_neighbors(0, 1), Ok(2));
        assert_eq!(k4.common_neighbors(2, 2), Err(GraphError::SameVertex { v: 2 }));
        assert!(k4.degree(4).is_err());
        // Every non-adjacent pair of the Petersen graph has one common neighbour.
        for u in 0..10 {
            for v in u + 1..10 {
                if !petersen.has_edge(u, v) {
                    assert_eq!(petersen.common_neighbors(u, v), Ok(1));
                }
            }
        }
        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(star.is_regular(), None);
    }

    #[test]
    fn cross_edges_and_patterns() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let p = EdgePair::new(&k4, (0, 1), (2, 3)).unwrap();
        assert_eq!(p.cross_edges(&k4), Ok(4));
        assert_eq!(p.pattern(&k4).unwrap(), PairPattern { in_p4: true, in_c4: true, in_diamond: true, in_k4: true });

        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let p = EdgePair::new(&c4, (0, 1), (2, 3)).unwrap();
        assert_eq!(p.cross_edges(&c4), Ok(2));
        assert_eq!(p.pattern(&c4).unwrap(), PairPattern { in_p4: true, in_c4: true, in_diamond: false, in_k4: false });

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let p = EdgePair::new(&p4, (0, 1), (2, 3)).unwrap();
        assert_eq!(p.pattern(&p4).unwrap(), PairPattern { in_p4: true, in_c4: false, in_diamond: false, in_k4: false });

        let two_k2 = g(4, &[(0, 1), (2, 3)]);
        let p = EdgePair::new(&two_k2, (1, 0), (3, 2)).unwrap();
        assert_eq!(p.cross_edges(&two_k2), Ok(0));

        let adjacent = EdgePair::new(&c4, (0, 1), (1, 2)).unwrap();
        assert!(!adjacent.disjoint());
        assert!(matches!(adjacent.cross_edges(&c4), Err(GraphError::NotDisjoint { .. })));
        assert_eq!(EdgePair::new(&c4, (0, 1), (1, 0)), Err(GraphError::SameEdge));
        assert_eq!(EdgePair::new(&c4, (0, 2), (1, 3)), Err(GraphError::NotAnEdge { u: 0, v: 2 }));
    }

    #[test]
    fn forbidden_subgraphs() {
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert!(petersen.is_triangle_free());
        assert!(petersen.is_c4_free());
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert!(!k4.is_k4_free());
        assert!(!k4.is_diamond_free());
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert!(!c4.is_c4_free());
        assert!(c4.is_diamond_free());
        let diamond = g(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(!diamond.is_diamond_free());
        assert!(diamond.is_k4_free());
    }

    #[test]
    fn structural_predicates() {
        let c3_c5 = generate(&FamilySpec::DisjointUnion(vec![FamilySpec::Cycle(3), FamilySpec::Cycle(5)])).unwrap();
        assert!(c3_c5.is_disjoint_union_of_cycles());
        assert!(!c3_c5.is_connected());
        let k3_k2 =
            generate(&FamilySpec::DisjointUnion(vec![FamilySpec::Complete(3), FamilySpec::Complete(2)])).unwrap();
        assert!(k3_k2.is_disjoint_union_of_triangles_and_edges());
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert!(!p3.is_complete());
        assert!(!p3.is_edgeless());
        assert!(!p3.is_disjoint_union_of_cycles());
        assert!(!p3.is_disjoint_union_of_triangles_and_edges());
        assert!(Graph::empty(3).is_edgeless());
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let p = c5.permuted(&[4, 2, 0, 3, 1]);
        assert_eq!(p.size(), 5);
        assert_eq!(p.is_regular(), Some(2));
        assert_eq!(c5.induced(&[0, 1, 2]).edges(), vec![(0, 1), (1, 2)]);
    }
}
