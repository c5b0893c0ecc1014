//! Named graph families with fixed labellings.
//!
//! * `Cycle(n)`: `0 - 1 - ... - (n-1) - 0`.
//! * `Path(n)`: `0 - 1 - ... - (n-1)`.
//! * `CompleteBipartite(m, n)` and `CompleteMultipartite`: blocks labelled
//!   consecutively, first block first.
//! * `Octahedron`: `C4 ∨ 2K1`, the cycle on `0..4` and the apexes `4, 5`.
//! * `Petersen`: Kneser graph `K(5, 2)`; vertex `i` is the `i`-th 2-subset of
//!   `{0..4}` in lexicographic order, adjacent when disjoint.
//! * `MergedDoubleRC(n)`: see [`ops::merged_double_semi_total`].

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::ops;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Edgeless(usize),
    Octahedron,
    Petersen,
    DisjointUnion(Vec<FamilySpec>),
    MergedDoubleRC(usize),
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let invalid = |m: String| Err(GraphError::InvalidFamily(m));
    let g = match spec {
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return invalid(format!("cycle needs n >= 3, got {n}"));
            }
            Graph::from_fn(*n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
        }
        FamilySpec::Path(n) => {
            if *n == 0 {
                return invalid("path needs n >= 1".into());
            }
            Graph::from_fn(*n, |u, v| v == u + 1)
        }
        FamilySpec::Complete(n) => Graph::from_fn(*n, |_, _| true),
        FamilySpec::Edgeless(n) => Graph::empty(*n),
        FamilySpec::CompleteBipartite(a, b) => complete_multipartite(&[*a, *b]),
        FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
        FamilySpec::Octahedron => ops::join(&generate(&FamilySpec::Cycle(4))?, &Graph::empty(2)),
        FamilySpec::Petersen => {
            let subsets: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            Graph::from_fn(10, |x, y| {
                let ((a, b), (c, d)) = (subsets[x], subsets[y]);
                a != c && a != d && b != c && b != d
            })
        }
        FamilySpec::DisjointUnion(parts) => {
            let mut g = Graph::empty(0);
            for p in parts {
                g = disjoint_union(&g, &generate(p)?);
            }
            g
        }
        FamilySpec::MergedDoubleRC(n) => ops::merged_double_semi_total(*n)?,
    };
    Ok(g)
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let block: Vec<usize> = parts.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    Graph::from_fn(block.len(), |u, v| block[u] != block[v])
}

/// `G1 + G2` with the labels of `G2` shifted by `n1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    Graph::from_fn(n1 + g2.order(), |u, v| match (u < n1, v < n1) {
        (true, true) => g1.has_edge(u, v),
        (false, false) => g2.has_edge(u - n1, v - n1),
        _ => false,
    })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            FamilySpec::CompleteMultipartite(p) => {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "K{}", s.join(","))
            }
            FamilySpec::Edgeless(n) => write!(f, "{n}K1"),
            FamilySpec::Octahedron => write!(f, "octahedron"),
            FamilySpec::Petersen => write!(f, "Petersen"),
            FamilySpec::DisjointUnion(parts) => {
                let s: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", s.join("+"))
            }
            FamilySpec::MergedDoubleRC(n) => write!(f, "merged-double-R(C{n})"),
        }
    }
}

impl FamilySpec {
    /// Parses a family from command-line words, e.g. `["cycle", "5"]` or
    /// `["cycle", "3", "+", "cycle", "4"]` for a disjoint union.
    pub fn from_words<S: AsRef<str>>(words: &[S]) -> Result<Self, GraphError> {
        let words: Vec<&str> = words.iter().map(|w| w.as_ref()).collect();
        let parts: Vec<&[&str]> = words.split(|w| *w == "+").collect();
        if parts.len() > 1 {
            return parts.iter().map(|p| Self::single(p)).collect::<Result<_, _>>().map(FamilySpec::DisjointUnion);
        }
        Self::single(&words)
    }

    fn single(words: &[&str]) -> Result<Self, GraphError> {
        let bad = |m: String| GraphError::InvalidFamily(m);
        let (name, rest) = words.split_first().ok_or_else(|| bad("missing family name".into()))?;
        let nums = rest
            .iter()
            .map(|w| w.parse::<usize>().map_err(|_| bad(format!("{name}: {w:?} is not a non-negative integer"))))
            .collect::<Result<Vec<_>, _>>()?;
        let want = |count: usize| -> Result<(), GraphError> {
            if nums.len() == count {
                Ok(())
            } else {
                Err(bad(format!("{name} takes {count} parameter(s), got {}", nums.len())))
            }
        };
        let spec = match name.to_ascii_lowercase().replace('_', "-").as_str() {
            "cycle" => {
                want(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "path" => {
                want(1)?;
                FamilySpec::Path(nums[0])
            }
            "complete" => {
                want(1)?;
                FamilySpec::Complete(nums[0])
            }
            "edgeless" | "empty" => {
                want(1)?;
                FamilySpec::Edgeless(nums[0])
            }
            "complete-bipartite" | "bipartite" => {
                want(2)?;
                FamilySpec::CompleteBipartite(nums[0], nums[1])
            }
            "star" => {
                want(1)?;
                FamilySpec::CompleteBipartite(1, nums[0])
            }
            "complete-multipartite" | "multipartite" => {
                if nums.is_empty() {
                    return Err(bad("complete-multipartite needs at least one part size".into()));
                }
                FamilySpec::CompleteMultipartite(nums)
            }
            "octahedron" => {
                want(0)?;
                FamilySpec::Octahedron
            }
            "petersen" => {
                want(0)?;
                FamilySpec::Petersen
            }
            "merged-double-rc" | "merged-double" => {
                want(1)?;
                FamilySpec::MergedDoubleRC(nums[0])
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let words: Vec<&str> = s.split_whitespace().collect();
        FamilySpec::from_words(&words)
    }
}
