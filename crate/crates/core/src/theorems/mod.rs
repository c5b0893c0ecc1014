//! One verifier per claim about how graph operations act on edge-regular,
//! pseudo strongly regular and strongly regular graphs.
//!
//! Each verifier computes two things that share no code path: the
//! *predicted* parameters, from the input parameters and the claimed formula
//! alone, and the *observed* classification, by brute force on the
//! constructed graph. For "if and only if" claims both directions are checked.
//!
//! Conventions:
//!
//! * A vacuous λ (no edges) or μ (no non-edges) is a free variable: a formula
//!   that mentions it is unconstrained, and an equation chain holds when its
//!   determinate members agree.
//! * Complete and edgeless inputs are *degenerate*. When the claimed
//!   hypothesis fails on a degenerate input but the conclusion still holds,
//!   the verdict is [`Status::Excluded`] instead of a disagreement.
//! * Non-existence claims become bounded sweeps: they report "no
//!   counterexample up to n = N" or list the counterexamples found.

mod products;
mod sweeps;
mod unary;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{ClassificationReport, PairParam};
use crate::graph::Graph;
use crate::io::encode_graph6;

pub use products::{
    verify_cartesian_edge, verify_cartesian_pseudo, verify_composition_edge, verify_composition_pseudo,
    verify_direct_edge, verify_join_edge, verify_join_pseudo, verify_strong_edge,
};
pub use sweeps::{
    census_corpus, sweep_direct_pseudo, sweep_line_no_mu3, sweep_strong_pseudo, sweep_subdivision_pseudo,
    verify_direct_pseudo_nonexistence, verify_line_no_mu3, verify_strong_pseudo_nonexistence,
    verify_subdivision_pseudo_nonexistence,
};
pub use unary::{
    verify_complement_duality, verify_complement_srg, verify_line_edge, verify_line_mu_bound,
    verify_line_pseudo_characterization, verify_subdivision_edge,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    ComplementDuality,
    ComplementSrgCorollary,
    CartesianEdge,
    CartesianPseudo,
    DirectEdge,
    DirectPseudoNonexistence,
    CompositionEdge,
    CompositionPseudo,
    StrongEdge,
    StrongPseudoNonexistence,
    JoinEdge,
    JoinPseudo,
    LineEdge,
    LineMuAtMost4,
    LineNoMu3,
    LinePseudoCharacterization,
    SubdivisionEdge,
    SubdivisionPseudoNonexistence,
}

/// How a verifier is fed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Unary,
    Binary,
    /// A bounded sweep over a census.
    Sweep,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::ComplementDuality,
        TheoremId::ComplementSrgCorollary,
        TheoremId::CartesianEdge,
        TheoremId::CartesianPseudo,
        TheoremId::DirectEdge,
        TheoremId::DirectPseudoNonexistence,
        TheoremId::CompositionEdge,
        TheoremId::CompositionPseudo,
        TheoremId::StrongEdge,
        TheoremId::StrongPseudoNonexistence,
        TheoremId::JoinEdge,
        TheoremId::JoinPseudo,
        TheoremId::LineEdge,
        TheoremId::LineMuAtMost4,
        TheoremId::LineNoMu3,
        TheoremId::LinePseudoCharacterization,
        TheoremId::SubdivisionEdge,
        TheoremId::SubdivisionPseudoNonexistence,
    ];

    pub fn arity(self) -> Arity {
        use TheoremId::*;
        match self {
            ComplementDuality
            | ComplementSrgCorollary
            | LineEdge
            | LineMuAtMost4
            | LinePseudoCharacterization
            | SubdivisionEdge => Arity::Unary,
            DirectPseudoNonexistence | StrongPseudoNonexistence | LineNoMu3 | SubdivisionPseudoNonexistence => {
                Arity::Sweep
            }
            _ => Arity::Binary,
        }
    }

    /// Runs a unary or binary verifier. Returns `None` when the operand count
    /// does not match [`TheoremId::arity`] or the theorem is a sweep.
    pub fn verify(self, operands: &[&Graph]) -> Option<TheoremVerdict> {
        use TheoremId::*;
        let v = match (self, operands) {
            (ComplementDuality, [g]) => verify_complement_duality(g),
            (ComplementSrgCorollary, [g]) => verify_complement_srg(g),
            (LineEdge, [g]) => verify_line_edge(g),
            (LineMuAtMost4, [g]) => verify_line_mu_bound(g),
            (LinePseudoCharacterization, [g]) => verify_line_pseudo_characterization(g),
            (SubdivisionEdge, [g]) => verify_subdivision_edge(g),
            (CartesianEdge, [a, b]) => verify_cartesian_edge(a, b),
            (CartesianPseudo, [a, b]) => verify_cartesian_pseudo(a, b),
            (DirectEdge, [a, b]) => verify_direct_edge(a, b),
            (CompositionEdge, [a, b]) => verify_composition_edge(a, b),
            (CompositionPseudo, [a, b]) => verify_composition_pseudo(a, b),
            (StrongEdge, [a, b]) => verify_strong_edge(a, b),
            (JoinEdge, [a, b]) => verify_join_edge(a, b),
            (JoinPseudo, [a, b]) => verify_join_pseudo(a, b),
            _ => return None,
        };
        Some(v)
    }

    /// Runs a sweep over a connected census with at most `max_n` vertices.
    pub fn sweep(self, max_n: usize) -> Option<TheoremVerdict> {
        use TheoremId::*;
        Some(match self {
            DirectPseudoNonexistence => verify_direct_pseudo_nonexistence(max_n),
            StrongPseudoNonexistence => verify_strong_pseudo_nonexistence(max_n),
            LineNoMu3 => verify_line_no_mu3(max_n),
            SubdivisionPseudoNonexistence => verify_subdivision_pseudo_nonexistence(max_n),
            _ => return None,
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().to_ascii_lowercase() == key)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Prediction and observation agree in every direction checked.
    Agree,
    Disagree,
    /// The inputs do not satisfy the claim's standing assumptions.
    NotApplicable,
    /// The hypothesis fails on a degenerate input while the conclusion holds.
    Excluded,
}

/// Parameters a claim predicts for the constructed graph. `None` entries are
/// unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub n: i64,
    pub k: i64,
    pub lambda: Option<i64>,
    pub mu: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    /// graph6 of every input graph.
    pub inputs: Vec<String>,
    /// Optional human names for the inputs, parallel to `inputs`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
    pub hypothesis_holds: bool,
    pub predicted: Option<Predicted>,
    pub observed: Vec<ClassificationReport>,
    pub status: Status,
    pub agree: bool,
    pub detail: String,
}

impl TheoremVerdict {
    pub(crate) fn new(theorem: TheoremId, inputs: &[&Graph]) -> Self {
        TheoremVerdict {
            theorem,
            inputs: inputs.iter().map(|g| g6(g)).collect(),
            names: Vec::new(),
            hypothesis_holds: false,
            predicted: None,
            observed: Vec::new(),
            status: Status::Agree,
            agree: true,
            detail: String::new(),
        }
    }

    pub(crate) fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self.agree = status != Status::Disagree;
        self
    }

    pub(crate) fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.detail = why.into();
        self.with_status(Status::NotApplicable)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

pub(crate) fn g6(g: &Graph) -> String {
    encode_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

/// Parameters of an input graph as signed integers; vacuous or failing
/// conditions become `None`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Params {
    pub n: i64,
    pub k: i64,
    pub lambda: Option<i64>,
    pub mu: Option<i64>,
}

impl Params {
    pub fn of(r: &ClassificationReport) -> Self {
        Params {
            n: r.n as i64,
            k: r.regular_k.unwrap_or(0) as i64,
            lambda: r.edge_regular.value().map(|x| x as i64),
            mu: r.pseudo.value().map(|x| x as i64),
        }
    }
}

/// Whether the determinate members of an equation chain agree, and their
/// common value.
pub(crate) fn chain(values: &[Option<i64>]) -> (bool, Option<i64>) {
    let mut known = values.iter().flatten();
    let first = known.next().copied();
    let holds = known.all(|&v| Some(v) == first);
    (holds, first)
}

fn param_matches(p: PairParam, want: Option<i64>) -> bool {
    match p {
        PairParam::No => false,
        PairParam::Vacuous => true,
        PairParam::Yes(x) => want.is_none_or(|w| w == x as i64),
    }
}

fn shape_matches(pred: &Predicted, r: &ClassificationReport) -> bool {
    r.n as i64 == pred.n && r.regular_k.map(|k| k as i64) == Some(pred.k)
}

pub(crate) fn edge_matches(pred: &Predicted, r: &ClassificationReport) -> bool {
    shape_matches(pred, r) && param_matches(r.edge_regular, pred.lambda)
}

pub(crate) fn pseudo_matches(pred: &Predicted, r: &ClassificationReport) -> bool {
    shape_matches(pred, r) && param_matches(r.pseudo, pred.mu)
}

pub(crate) fn srg_matches(pred: &Predicted, r: &ClassificationReport) -> bool {
    edge_matches(pred, r) && pseudo_matches(pred, r)
}

pub(crate) fn is_degenerate(g: &Graph) -> bool {
    g.is_complete() || g.is_edgeless()
}

/// Status of an "if and only if" claim.
pub(crate) fn decide(hypothesis: bool, matched: bool, conclusion_holds: bool, degenerate: bool) -> Status {
    match (hypothesis, conclusion_holds) {
        (true, _) if matched => Status::Agree,
        (true, _) => Status::Disagree,
        (false, false) => Status::Agree,
        (false, true) if degenerate => Status::Excluded,
        (false, true) => Status::Disagree,
    }
}

pub(crate) fn fmt_opt(x: Option<i64>) -> String {
    x.map_or_else(|| "free".into(), |v| v.to_string())
}

/// A graph with a display name.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph { name: name.into(), graph }
    }
}

/// Inputs for [`verify_all`]. Binary product verifiers run on ordered pairs
/// with `n1 * n2 <= product_limit`, join verifiers on pairs with
/// `n1 + n2 <= join_limit`; the sweeps use the same bounds.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub graphs: Vec<NamedGraph>,
    pub product_limit: usize,
    pub join_limit: usize,
}

impl Corpus {
    pub fn new(graphs: Vec<NamedGraph>) -> Self {
        Corpus { graphs, product_limit: 36, join_limit: 12 }
    }
}

/// Runs every applicable verifier over the corpus. Output order is fixed:
/// unary verifiers per graph, then binary verifiers per ordered pair, then
/// the four sweeps.
pub fn verify_all(corpus: &Corpus) -> Vec<TheoremVerdict> {
    use TheoremId::*;
    let gs = &corpus.graphs;
    if gs.is_empty() {
        return Vec::new();
    }
    let unary = [
        ComplementDuality,
        ComplementSrgCorollary,
        LineEdge,
        LineMuAtMost4,
        LinePseudoCharacterization,
        SubdivisionEdge,
    ];
    let products = [CartesianEdge, CartesianPseudo, DirectEdge, CompositionEdge, CompositionPseudo, StrongEdge];
    let joins = [JoinEdge, JoinPseudo];

    let named = |mut v: TheoremVerdict, names: &[&str]| {
        v.names = names.iter().map(|s| s.to_string()).collect();
        v
    };
    let mut out: Vec<TheoremVerdict> = gs
        .par_iter()
        .flat_map_iter(|a| unary.iter().map(move |t| named(t.verify(&[&a.graph]).unwrap(), &[&a.name])))
        .collect();
    let pairs: Vec<(&NamedGraph, &NamedGraph)> = gs.iter().flat_map(|a| gs.iter().map(move |b| (a, b))).collect();
    out.extend(
        pairs
            .par_iter()
            .flat_map_iter(|&(a, b)| {
                let (n1, n2) = (a.graph.order(), b.graph.order());
                let prod = (n1 * n2 <= corpus.product_limit).then_some(products.iter()).into_iter().flatten();
                let join = (n1 + n2 <= corpus.join_limit).then_some(joins.iter()).into_iter().flatten();
                prod.chain(join).map(move |t| named(t.verify(&[&a.graph, &b.graph]).unwrap(), &[&a.name, &b.name]))
            })
            .collect::<Vec<_>>(),
    );
    let graphs: Vec<Graph> = gs.iter().map(|g| g.graph.clone()).collect();
    let max_n = graphs.iter().map(Graph::order).max().unwrap_or(0);
    out.push(sweep_direct_pseudo(&graphs, corpus.product_limit, max_n));
    out.push(sweep_strong_pseudo(&graphs, corpus.product_limit, max_n));
    out.push(sweep_line_no_mu3(&graphs, max_n));
    out.push(sweep_subdivision_pseudo(&graphs, max_n));
    out
}

/// Counts per status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub not_applicable: usize,
    pub excluded: usize,
}

pub fn summarize(verdicts: &[TheoremVerdict]) -> Summary {
    let mut s = Summary { total: verdicts.len(), ..Summary::default() };
    for v in verdicts {
        match v.status {
            Status::Agree => s.agree += 1,
            Status::Disagree => s.disagree += 1,
            Status::NotApplicable => s.not_applicable += 1,
            Status::Excluded => s.excluded += 1,
        }
    }
    s
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "verdicts: {}, agree: {}, not applicable: {}, excluded: {}, disagreements: {}",
            self.total, self.agree, self.not_applicable, self.excluded, self.disagree
        )
    }
}

/// Human-readable table, one verdict per line.
pub fn render_table(verdicts: &[TheoremVerdict]) -> String {
    let mut out =
        format!("{:<30} {:<28} {:<5} {:<22} {:<14} {}\n", "theorem", "inputs", "hyp", "predicted", "status", "detail");
    for v in verdicts {
        let inputs = if v.names.is_empty() { v.inputs.join(", ") } else { v.names.join(", ") };
        let pred = v
            .predicted
            .map_or("-".to_string(), |p| format!("({}, {}, {}, {})", p.n, p.k, fmt_opt(p.lambda), fmt_opt(p.mu)));
        let status = serde_json::to_value(v.status).unwrap();
        out.push_str(&format!(
            "{:<30} {:<28} {:<5} {:<22} {:<14} {}\n",
            v.theorem.to_string(),
            inputs,
            v.hypothesis_holds,
            pred,
            status.as_str().unwrap_or(""),
            v.detail
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn chain_semantics() {
        assert_eq!(chain(&[Some(2), None, Some(2)]), (true, Some(2)));
        assert_eq!(chain(&[Some(2), Some(3)]), (false, Some(2)));
        assert_eq!(chain(&[None, None]), (true, None));
        assert_eq!(chain(&[]), (true, None));
    }

    #[test]
    fn decision_table() {
        assert_eq!(decide(true, true, true, false), Status::Agree);
        assert_eq!(decide(true, false, true, false), Status::Disagree);
        assert_eq!(decide(false, false, false, false), Status::Agree);
        assert_eq!(decide(false, false, true, true), Status::Excluded);
        assert_eq!(decide(false, false, true, false), Status::Disagree);
    }

    #[test]
    fn ids_parse_in_both_spellings() {
        for t in TheoremId::ALL {
            assert_eq!(t.to_string().parse::<TheoremId>(), Ok(t));
        }
        assert_eq!("line-no-mu3".parse::<TheoremId>(), Ok(TheoremId::LineNoMu3));
        assert_eq!("complement_duality".parse::<TheoremId>(), Ok(TheoremId::ComplementDuality));
        assert!("fermat".parse::<TheoremId>().is_err());
    }

    #[test]
    fn dispatch_checks_arity() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(TheoremId::CartesianEdge.verify(&[&c5]).is_none());
        assert!(TheoremId::LineEdge.verify(&[&c5]).is_some());
        assert!(TheoremId::LineNoMu3.verify(&[&c5]).is_none());
        assert!(TheoremId::LineEdge.sweep(5).is_none());
    }

    #[test]
    fn empty_corpus_gives_no_verdicts() {
        assert!(verify_all(&Corpus::new(Vec::new())).is_empty());
    }

    #[test]
    fn verdict_json_shape() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let v = verify_cartesian_edge(&c5, &c5);
        let j: serde_json::Value = serde_json::from_str(&v.to_json_line()).unwrap();
        assert_eq!(j["theorem"], "CartesianEdge");
        assert_eq!(j["inputs"][0], "Dhc");
        assert_eq!(j["status"], "agree");
        assert_eq!(j["agree"], true);
        assert_eq!(j["predicted"]["lambda"], 0);
        assert_eq!(j["observed"][0]["k"], 4);
    }
}
