//! Regularity profile of a graph: degree, λ over adjacent pairs, μ over
//! non-adjacent pairs, strong regularity and the Deza value set.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Outcome of asking whether a class of vertex pairs has a constant number of
/// common neighbours in a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairParam {
    /// The graph is irregular, or the counts differ.
    No,
    /// The graph is regular but has no pair of this kind.
    Vacuous,
    Yes(usize),
}

impl PairParam {
    /// Whether the condition holds, treating a vacuous condition as held.
    pub fn holds(self) -> bool {
        !matches!(self, PairParam::No)
    }

    pub fn value(self) -> Option<usize> {
        match self {
            PairParam::Yes(x) => Some(x),
            _ => None,
        }
    }

    /// Vacuous matches every value.
    pub fn matches(self, value: usize) -> bool {
        match self {
            PairParam::No => false,
            PairParam::Vacuous => true,
            PairParam::Yes(x) => x == value,
        }
    }
}

/// Strongly regular parameters; `None` marks a vacuous λ (no edges) or μ
/// (no non-edges).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: Option<usize>,
    pub mu: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassificationReport {
    pub n: usize,
    pub regular_k: Option<usize>,
    pub edge_regular: PairParam,
    pub pseudo: PairParam,
    pub srg: Option<SrgParams>,
    /// Distinct common-neighbour counts over all vertex pairs, when there are
    /// at most two of them (empty for graphs with fewer than two vertices).
    pub deza: Option<Vec<usize>>,
}

pub fn classify(g: &Graph) -> ClassificationReport {
    let n = g.order();
    let regular_k = g.is_regular();
    let mut adjacent = BTreeSet::new();
    let mut non_adjacent = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_count(u, v);
            if g.has_edge(u, v) {
                adjacent.insert(c);
            } else {
                non_adjacent.insert(c);
            }
        }
    }
    let param = |values: &BTreeSet<usize>| match (regular_k, values.len()) {
        (None, _) => PairParam::No,
        (Some(_), 0) => PairParam::Vacuous,
        (Some(_), 1) => PairParam::Yes(*values.first().unwrap()),
        _ => PairParam::No,
    };
    let edge_regular = param(&adjacent);
    let pseudo = param(&non_adjacent);
    let srg = match (regular_k, edge_regular.holds() && pseudo.holds()) {
        (Some(k), true) => Some(SrgParams { n, k, lambda: edge_regular.value(), mu: pseudo.value() }),
        _ => None,
    };
    let all: BTreeSet<usize> = adjacent.union(&non_adjacent).copied().collect();
    let deza = (all.len() <= 2).then(|| all.into_iter().collect());
    ClassificationReport { n, regular_k, edge_regular, pseudo, srg, deza }
}

pub fn is_edge_regular_with(g: &Graph, n: usize, k: usize, lambda: usize) -> bool {
    let r = classify(g);
    r.n == n && r.regular_k == Some(k) && r.edge_regular.matches(lambda)
}

pub fn is_pseudo_with(g: &Graph, n: usize, k: usize, mu: usize) -> bool {
    let r = classify(g);
    r.n == n && r.regular_k == Some(k) && r.pseudo.matches(mu)
}

pub fn is_srg_with(g: &Graph, n: usize, k: usize, lambda: usize, mu: usize) -> bool {
    let r = classify(g);
    r.n == n && r.regular_k == Some(k) && r.edge_regular.matches(lambda) && r.pseudo.matches(mu)
}

impl ClassificationReport {
    pub fn is_edge_regular(&self) -> bool {
        self.edge_regular.holds()
    }

    pub fn is_pseudo(&self) -> bool {
        self.pseudo.holds()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson::from(self)).expect("report serializes")
    }
}

impl fmt::Display for PairParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairParam::No => write!(f, "no"),
            PairParam::Vacuous => write!(f, "vacuous"),
            PairParam::Yes(x) => write!(f, "yes ({x})"),
        }
    }
}

fn opt(x: Option<usize>, sentinel: &str) -> String {
    x.map_or_else(|| sentinel.to_string(), |v| v.to_string())
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "regular: {}", self.regular_k.map_or("no".to_string(), |k| format!("k = {k}")))?;
        writeln!(f, "edge-regular: {}", self.edge_regular)?;
        writeln!(f, "pseudo strongly regular: {}", self.pseudo)?;
        match self.srg {
            Some(p) => writeln!(
                f,
                "strongly regular: ({}, {}, {}, {})",
                p.n,
                p.k,
                opt(p.lambda, "vacuous"),
                opt(p.mu, "vacuous")
            )?,
            None => writeln!(f, "strongly regular: no")?,
        }
        match &self.deza {
            Some(v) => {
                let vals: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                writeln!(f, "deza: {{{}}}", vals.join(", "))
            }
            None => writeln!(f, "deza: no"),
        }
    }
}

/// Stable JSON shape of a report.
///
/// `edge_regular`/`pseudo` are true when the condition holds, including the
/// vacuous case; `lambda`/`mu` are null unless a value was observed. `srg` is
/// `[n, k, lambda, mu]` with null for vacuous entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub k: Option<usize>,
    pub edge_regular: bool,
    pub lambda: Option<usize>,
    pub lambda_vacuous: bool,
    pub pseudo: bool,
    pub mu: Option<usize>,
    pub mu_vacuous: bool,
    pub srg: Option<(usize, usize, Option<usize>, Option<usize>)>,
    pub deza: Option<Vec<usize>>,
}

impl From<&ClassificationReport> for ReportJson {
    fn from(r: &ClassificationReport) -> Self {
        ReportJson {
            n: r.n,
            k: r.regular_k,
            edge_regular: r.edge_regular.holds(),
            lambda: r.edge_regular.value(),
            lambda_vacuous: r.edge_regular == PairParam::Vacuous,
            pseudo: r.pseudo.holds(),
            mu: r.pseudo.value(),
            mu_vacuous: r.pseudo == PairParam::Vacuous,
            srg: r.srg.map(|p| (p.n, p.k, p.lambda, p.mu)),
            deza: r.deza.clone(),
        }
    }
}

impl From<ReportJson> for ClassificationReport {
    fn from(j: ReportJson) -> Self {
        let param = |holds: bool, vacuous: bool, value: Option<usize>| match (holds, vacuous, value) {
            (true, true, _) => PairParam::Vacuous,
            (true, false, Some(x)) => PairParam::Yes(x),
            _ => PairParam::No,
        };
        ClassificationReport {
            n: j.n,
            regular_k: j.k,
            edge_regular: param(j.edge_regular, j.lambda_vacuous, j.lambda),
            pseudo: param(j.pseudo, j.mu_vacuous, j.mu),
            srg: j.srg.map(|(n, k, lambda, mu)| SrgParams { n, k, lambda, mu }),
            deza: j.deza,
        }
    }
}

impl Serialize for ClassificationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassificationReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        ReportJson::deserialize(d).map(Into::into)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::ops;

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn octahedron_is_6_4_2() {
        let r = classify(&fam(FamilySpec::Octahedron));
        assert_eq!((r.n, r.regular_k, r.edge_regular), (6, Some(4), PairParam::Yes(2)));
        assert_eq!(r.pseudo, PairParam::Yes(4));
    }

    #[test]
    fn merged_double_semi_total_examples() {
        let r = classify(&fam(FamilySpec::MergedDoubleRC(5)));
        assert_eq!((r.n, r.regular_k, r.edge_regular), (15, Some(4), PairParam::Yes(1)));
        let c = classify(&ops::complement(&fam(FamilySpec::MergedDoubleRC(4))));
        assert_eq!((c.n, c.regular_k, c.pseudo), (12, Some(7), PairParam::Yes(5)));
    }

    #[test]
    fn c5_is_strongly_regular() {
        let r = classify(&fam(FamilySpec::Cycle(5)));
        assert_eq!(r.srg, Some(SrgParams { n: 5, k: 2, lambda: Some(0), mu: Some(1) }));
        assert_eq!(r.deza, Some(vec![0, 1]));
    }

    #[test]
    fn star_is_irregular() {
        let r = classify(&fam(FamilySpec::CompleteBipartite(1, 3)));
        assert_eq!(r.regular_k, None);
        assert_eq!(r.edge_regular, PairParam::No);
        assert_eq!(r.pseudo, PairParam::No);
        assert_eq!(r.srg, None);
    }

    #[test]
    fn vacuous_boundaries() {
        let k4 = classify(&fam(FamilySpec::Complete(4)));
        assert_eq!(k4.pseudo, PairParam::Vacuous);
        assert_eq!(k4.srg, Some(SrgParams { n: 4, k: 3, lambda: Some(2), mu: None }));
        let e3 = classify(&Graph::empty(3));
        assert_eq!(e3.edge_regular, PairParam::Vacuous);
        assert_eq!(e3.pseudo, PairParam::Yes(0));
        let k1 = classify(&Graph::empty(1));
        assert_eq!(k1.srg, Some(SrgParams { n: 1, k: 0, lambda: None, mu: None }));
        assert_eq!(k1.deza, Some(vec![]));
    }

    #[test]
    fn parameter_predicates() {
        assert!(is_edge_regular_with(&fam(FamilySpec::Complete(4)), 4, 3, 2));
        assert!(is_srg_with(&fam(FamilySpec::Petersen), 10, 3, 0, 1));
        assert!(!is_edge_regular_with(&fam(FamilySpec::Cycle(6)), 6, 2, 1));
        assert!(is_pseudo_with(&fam(FamilySpec::Complete(4)), 4, 3, 17));
    }

    #[test]
    fn json_round_trip_and_keys() {
        for g in [fam(FamilySpec::Petersen), fam(FamilySpec::Complete(3)), fam(FamilySpec::Path(4)), Graph::empty(2)] {
            let r = classify(&g);
            let v = r.to_json();
            for key in ["n", "k", "lambda", "mu", "srg", "deza", "lambda_vacuous", "mu_vacuous"] {
                assert!(v.get(key).is_some(), "missing {key}");
            }
            let back: ClassificationReport = serde_json::from_value(v).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn text_form() {
        let s = classify(&fam(FamilySpec::Complete(3))).to_string();
        assert!(s.contains("edge-regular: yes (1)"));
        assert!(s.contains("strongly regular: (3, 2, 1, vacuous)"));
    }
}
