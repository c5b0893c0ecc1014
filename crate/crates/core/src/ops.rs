//! Graph operations.
//!
//! Product vertex `(i, j)` with `i` in the first factor and `j` in the
//! second has index `i * n2 + j`. Join keeps the first graph's labels and
//! shifts the second by `n1`. Line and subdivision graphs number edges in the
//! lexicographic order of [`Graph::edges`].

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationKind {
    Complement,
    Cartesian,
    Direct,
    Composition,
    Strong,
    Join,
    LineGraph,
    Subdivision,
    SemiTotalPoint,
}

impl OperationKind {
    pub const ALL: [OperationKind; 9] = [
        OperationKind::Complement,
        OperationKind::Cartesian,
        OperationKind::Direct,
        OperationKind::Composition,
        OperationKind::Strong,
        OperationKind::Join,
        OperationKind::LineGraph,
        OperationKind::Subdivision,
        OperationKind::SemiTotalPoint,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            OperationKind::Complement => "complement",
            OperationKind::Cartesian => "cartesian",
            OperationKind::Direct => "direct",
            OperationKind::Composition => "composition",
            OperationKind::Strong => "strong",
            OperationKind::Join => "join",
            OperationKind::LineGraph => "line",
            OperationKind::Subdivision => "subdivision",
            OperationKind::SemiTotalPoint => "semi-total",
        }
    }

    /// Number of graph operands.
    pub fn arity(self) -> usize {
        match self {
            OperationKind::Complement
            | OperationKind::LineGraph
            | OperationKind::Subdivision
            | OperationKind::SemiTotalPoint => 1,
            _ => 2,
        }
    }

    /// Applies the operation.
    ///
    /// # Panics
    ///
    /// Panics if `operands.len() != self.arity()`.
    pub fn apply(self, operands: &[&Graph]) -> Graph {
        assert_eq!(operands.len(), self.arity(), "{} takes {} operand(s)", self.tag(), self.arity());
        let a = operands[0];
        match self {
            OperationKind::Complement => complement(a),
            OperationKind::Cartesian => cartesian(a, operands[1]),
            OperationKind::Direct => direct(a, operands[1]),
            OperationKind::Composition => composition(a, operands[1]),
            OperationKind::Strong => strong(a, operands[1]),
            OperationKind::Join => join(a, operands[1]),
            OperationKind::LineGraph => line_graph(a).graph,
            OperationKind::Subdivision => subdivision(a),
            OperationKind::SemiTotalPoint => semi_total_point(a),
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for OperationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace(['_', '-'], "");
        let kind = match key.as_str() {
            "complement" => OperationKind::Complement,
            "cartesian" => OperationKind::Cartesian,
            "direct" | "tensor" | "kronecker" => OperationKind::Direct,
            "composition" | "lexicographic" | "wreath" => OperationKind::Composition,
            "strong" | "normal" => OperationKind::Strong,
            "join" => OperationKind::Join,
            "line" | "linegraph" => OperationKind::LineGraph,
            "subdivision" => OperationKind::Subdivision,
            "semitotal" | "semitotalpoint" => OperationKind::SemiTotalPoint,
            _ => {
                let tags: Vec<&str> = OperationKind::ALL.iter().map(|k| k.tag()).collect();
                return Err(format!("unknown operation {s:?}; expected one of {}", tags.join(", ")));
            }
        };
        Ok(kind)
    }
}

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.order(), |u, v| !g.has_edge(u, v))
}

fn product(g1: &Graph, g2: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> Graph {
    let n2 = g2.order();
    Graph::from_fn(g1.order() * n2, |a, b| adjacent(a / n2, a % n2, b / n2, b % n2))
}

pub fn cartesian(g1: &Graph, g2: &Graph) -> Graph {
    product(g1, g2, |i, j, i2, j2| (i == i2 && g2.has_edge(j, j2)) || (j == j2 && g1.has_edge(i, i2)))
}

pub fn direct(g1: &Graph, g2: &Graph) -> Graph {
    product(g1, g2, |i, j, i2, j2| g1.has_edge(i, i2) && g2.has_edge(j, j2))
}

/// The lexicographic product `G1[G2]`.
pub fn composition(g1: &Graph, g2: &Graph) -> Graph {
    product(g1, g2, |i, j, i2, j2| g1.has_edge(i, i2) || (i == i2 && g2.has_edge(j, j2)))
}

pub fn strong(g1: &Graph, g2: &Graph) -> Graph {
    product(g1, g2, |i, j, i2, j2| {
        let same_or_adj_1 = i == i2 || g1.has_edge(i, i2);
        let same_or_adj_2 = j == j2 || g2.has_edge(j, j2);
        same_or_adj_1 && same_or_adj_2
    })
}

pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    Graph::from_fn(n1 + g2.order(), |u, v| match (u < n1, v < n1) {
        (true, true) => g1.has_edge(u, v),
        (false, false) => g2.has_edge(u - n1, v - n1),
        _ => true,
    })
}

/// A line graph together with the edge of the original graph each vertex
/// stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
}

impl LineGraph {
    /// Vertex of the line graph corresponding to edge `(u, v)` of the original.
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

pub fn line_graph(g: &Graph) -> LineGraph {
    let edges = g.edges();
    let graph = Graph::from_fn(edges.len(), |x, y| {
        let ((a, b), (c, d)) = (edges[x], edges[y]);
        a == c || a == d || b == c || b == d
    });
    LineGraph { graph, edges }
}

/// `S(G)`: original vertices keep their labels and the vertex for edge `e` is
/// `n + e`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges();
    let half: Vec<(usize, usize)> =
        edges.iter().enumerate().flat_map(|(e, &(u, v))| [(u, n + e), (v, n + e)]).collect();
    Graph::from_edges(n + edges.len(), &half).expect("subdivision endpoints are in range")
}

/// `R(G)`: `G` plus a vertex `n + e` for every edge `e`, adjacent to both of
/// its endpoints.
pub fn semi_total_point(g: &Graph) -> Graph {
    let n = g.order();
    let edges = g.edges();
    let mut all = edges.clone();
    for (e, &(u, v)) in edges.iter().enumerate() {
        all.push((u, n + e));
        all.push((v, n + e));
    }
    Graph::from_edges(n + edges.len(), &all).expect("semi-total endpoints are in range")
}

/// Two copies of `R(C_n)` with their `i`-th edge vertices identified.
///
/// Labels: `0..n` is the first cycle, `n..2n` the second, and `2n + i` the
/// shared vertex for cycle edge `{i, i+1 mod n}`.
pub fn merged_double_semi_total(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!("merged double R(C_n) needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(6 * n);
    for i in 0..n {
        let j = (i + 1) % n;
        let shared = 2 * n + i;
        edges.extend([(i, j), (n + i, n + j), (i, shared), (j, shared), (n + i, shared), (n + j, shared)]);
    }
    Graph::from_edges(3 * n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::classify::{classify, PairParam};
    use crate::families::{disjoint_union, generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        fam(FamilySpec::Cycle(n))
    }
    fn complete(n: usize) -> Graph {
        fam(FamilySpec::Complete(n))
    }

    #[test]
    fn complement_examples() {
        assert!(are_isomorphic(&complement(&cycle(5)), &cycle(5)));
        let three_k2 = disjoint_union(&disjoint_union(&complete(2), &complete(2)), &complete(2));
        assert!(are_isomorphic(&complement(&fam(FamilySpec::Octahedron)), &three_k2));
    }

    #[test]
    fn cartesian_examples() {
        assert!(are_isomorphic(&cartesian(&complete(2), &complete(2)), &cycle(4)));
        let r = classify(&cartesian(&cycle(5), &cycle(5)));
        assert_eq!((r.n, r.regular_k, r.edge_regular), (25, Some(4), PairParam::Yes(0)));
        let prism = cartesian(&complete(3), &complete(2));
        assert_eq!(prism.is_regular(), Some(3));
        assert_eq!(prism.order(), 6);
        // (i, j) -> i * n2 + j
        assert!(prism.has_edge(0, 1) && prism.has_edge(0, 2) && prism.has_edge(0, 4));
    }

    #[test]
    fn direct_examples() {
        let r = classify(&direct(&complete(3), &complete(3)));
        assert_eq!((r.n, r.regular_k, r.edge_regular), (9, Some(4), PairParam::Yes(1)));
        let two_k2 = disjoint_union(&complete(2), &complete(2));
        assert!(are_isomorphic(&direct(&complete(2), &complete(2)), &two_k2));
        assert!(are_isomorphic(&direct(&cycle(5), &complete(2)), &cycle(10)));
    }

    #[test]
    fn composition_examples() {
        assert!(are_isomorphic(&composition(&complete(2), &complete(2)), &complete(4)));
        let g = composition(&cycle(5), &Graph::empty(2));
        assert_eq!((g.order(), g.is_regular()), (10, Some(4)));
        let g = composition(&fam(FamilySpec::Petersen), &cycle(4));
        assert_eq!(g.is_regular(), Some(3 * 4 + 2));
    }

    #[test]
    fn strong_examples() {
        assert!(are_isomorphic(&strong(&complete(2), &complete(2)), &complete(4)));
        assert_eq!(strong(&cycle(5), &fam(FamilySpec::Petersen)).is_regular(), Some(2 + 3 + 6));
        assert!(are_isomorphic(&strong(&cycle(4), &complete(1)), &cycle(4)));
    }

    #[test]
    fn join_examples() {
        let oct = join(&cycle(4), &Graph::empty(2));
        assert!(are_isomorphic(&oct, &fam(FamilySpec::Octahedron)));
        assert!(are_isomorphic(&join(&complete(1), &complete(1)), &complete(2)));
        let r = classify(&join(&cycle(4), &cycle(4)));
        assert_eq!((r.n, r.regular_k, r.edge_regular), (8, Some(6), PairParam::Yes(4)));
        assert_eq!(join(&cycle(5), &Graph::empty(0)), cycle(5));
        assert_eq!(join(&Graph::empty(0), &cycle(5)), cycle(5));
    }

    #[test]
    fn line_graph_examples() {
        assert!(are_isomorphic(&line_graph(&cycle(5)).graph, &cycle(5)));
        for n in 1..=6 {
            let star = fam(FamilySpec::CompleteBipartite(1, n));
            assert!(are_isomorphic(&line_graph(&star).graph, &complete(n)));
        }
        assert!(are_isomorphic(&line_graph(&complete(4)).graph, &fam(FamilySpec::Octahedron)));
        let l = line_graph(&cycle(4));
        assert_eq!(l.edges, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(l.vertex_of(3, 0), Some(1));
        assert_eq!(l.vertex_of(0, 2), None);
    }

    #[test]
    fn subdivision_examples() {
        for n in 3..=7 {
            assert!(are_isomorphic(&subdivision(&cycle(n)), &cycle(2 * n)));
        }
        let s = subdivision(&complete(4));
        assert_eq!(s.order(), 10);
        let degs = s.degrees();
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 6);
        assert_eq!(&degs[..4], &[3, 3, 3, 3]);
    }

    #[test]
    fn semi_total_examples() {
        assert!(are_isomorphic(&semi_total_point(&complete(2)), &complete(3)));
        for n in 3..=6 {
            let r = semi_total_point(&cycle(n));
            let degs = r.degrees();
            assert!(degs[..n].iter().all(|&d| d == 4));
            assert!(degs[n..].iter().all(|&d| d == 2));
        }
        let r3 = semi_total_point(&cycle(3));
        assert_eq!((r3.order(), r3.size()), (6, 9));
    }

    #[test]
    fn merged_double_construction() {
        assert!(merged_double_semi_total(2).is_err());
        for n in 4..=10 {
            let r = classify(&merged_double_semi_total(n).unwrap());
            assert_eq!((r.n, r.regular_k, r.edge_regular), (3 * n, Some(4), PairParam::Yes(1)), "n = {n}");
        }
        let c = classify(&complement(&merged_double_semi_total(4).unwrap()));
        assert_eq!((c.n, c.regular_k, c.pseudo), (12, Some(7), PairParam::Yes(5)));
    }

    // For n = 3 each cycle is a triangle, so a cycle edge has the third cycle
    // vertex as an extra common neighbour while a spoke to a shared vertex
    // does not: the graph is 4-regular but not edge-regular.
    #[test]
    fn merged_double_of_triangle_is_not_edge_regular() {
        let g = merged_double_semi_total(3).unwrap();
        let r = classify(&g);
        assert_eq!((r.n, r.regular_k), (9, Some(4)));
        assert_eq!(r.edge_regular, PairParam::No);
        assert_eq!(g.common_neighbors(0, 1), Ok(2));
        assert_eq!(g.common_neighbors(0, 6), Ok(1));
        assert_eq!(classify(&complement(&g)).pseudo, PairParam::No);
    }

    #[test]
    fn operation_tags_round_trip() {
        for k in OperationKind::ALL {
            assert_eq!(k.tag().parse::<OperationKind>(), Ok(k));
        }
        assert_eq!("Semi_Total".parse::<OperationKind>(), Ok(OperationKind::SemiTotalPoint));
        assert!("product".parse::<OperationKind>().is_err());
        assert_eq!(OperationKind::Join.apply(&[&cycle(4), &Graph::empty(2)]).size(), 12);
    }
}
