//! Cartesian, direct, composition and strong products, and the join.

use crate::classify::{classify, ClassificationReport};
use crate::graph::Graph;
use crate::ops;

use super::{
    chain, decide, edge_matches, fmt_opt, is_degenerate, pseudo_matches, Params, Predicted, Status, TheoremId,
    TheoremVerdict,
};

struct Pair<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    r1: ClassificationReport,
    r2: ClassificationReport,
    p1: Params,
    p2: Params,
}

impl<'a> Pair<'a> {
    fn new(g1: &'a Graph, g2: &'a Graph) -> Self {
        let (r1, r2) = (classify(g1), classify(g2));
        let (p1, p2) = (Params::of(&r1), Params::of(&r2));
        Pair { g1, g2, r1, r2, p1, p2 }
    }

    fn degenerate(&self) -> bool {
        is_degenerate(self.g1) || is_degenerate(self.g2)
    }

    fn both_edge_regular(&self) -> bool {
        self.r1.is_edge_regular() && self.r2.is_edge_regular()
    }

    fn both_pseudo(&self) -> bool {
        self.r1.is_pseudo() && self.r2.is_pseudo()
    }

    fn verdict(&self, theorem: TheoremId) -> TheoremVerdict {
        TheoremVerdict::new(theorem, &[self.g1, self.g2])
    }

    /// Fills in the observation and the status of an "iff" claim about
    /// edge-regularity (`pseudo == false`) or pseudo strong regularity.
    fn finish(
        &self,
        mut v: TheoremVerdict,
        hypothesis: bool,
        predicted: Predicted,
        product: &Graph,
        pseudo: bool,
        trace: String,
    ) -> TheoremVerdict {
        let observed = classify(product);
        let (matched, holds) = if pseudo {
            (pseudo_matches(&predicted, &observed), observed.is_pseudo())
        } else {
            (edge_matches(&predicted, &observed), observed.is_edge_regular())
        };
        let status = decide(hypothesis, matched, holds, self.degenerate());
        v.hypothesis_holds = hypothesis;
        v.predicted = hypothesis.then_some(predicted);
        let what = if pseudo { "pseudo strongly regular" } else { "edge-regular" };
        v.detail = match status {
            Status::Excluded => {
                format!("{trace}; product is {what} although the hypothesis fails (degenerate factor, logged)")
            }
            _ => format!("{trace}; product {} {what}", if holds { "is" } else { "is not" }),
        };
        v.observed = vec![observed, self.r1.clone(), self.r2.clone()];
        v.with_status(status)
    }
}

pub fn verify_cartesian_edge(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::CartesianEdge);
    if !pair.both_edge_regular() {
        return v.not_applicable("both factors must be edge-regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let (hyp, lambda) = chain(&[p1.lambda, p2.lambda]);
    let predicted = Predicted { n: p1.n * p2.n, k: p1.k + p2.k, lambda, mu: None };
    let trace = format!("lambda1 = {}, lambda2 = {}", fmt_opt(p1.lambda), fmt_opt(p2.lambda));
    pair.finish(v, hyp, predicted, &ops::cartesian(g1, g2), false, trace)
}

/// Claimed: the Cartesian product is pseudo strongly regular exactly when one
/// factor is complete and the other edgeless.
pub fn verify_cartesian_pseudo(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::CartesianPseudo);
    if !pair.both_pseudo() {
        return v.not_applicable("both factors must be pseudo strongly regular");
    }
    let hyp = (g1.is_complete() && g2.is_edgeless()) || (g1.is_edgeless() && g2.is_complete());
    let (p1, p2) = (pair.p1, pair.p2);
    // n2 disjoint copies of K_n1 (or the symmetric case): mu = 0.
    let predicted = Predicted { n: p1.n * p2.n, k: p1.k + p2.k, lambda: None, mu: Some(0) };
    let trace = format!(
        "complete/edgeless: G1 {}/{}, G2 {}/{}",
        g1.is_complete(),
        g1.is_edgeless(),
        g2.is_complete(),
        g2.is_edgeless()
    );
    pair.finish(v, hyp, predicted, &ops::cartesian(g1, g2), true, trace)
}

/// Claimed unconditionally: `G1 × G2` is edge-regular with parameters
/// `(n1 n2, k1 k2, λ1 λ2)`.
pub fn verify_direct_edge(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let mut v = pair.verdict(TheoremId::DirectEdge);
    if !pair.both_edge_regular() {
        return v.not_applicable("both factors must be edge-regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let lambda = p1.lambda.zip(p2.lambda).map(|(a, b)| a * b);
    let predicted = Predicted { n: p1.n * p2.n, k: p1.k * p2.k, lambda, mu: None };
    let observed = classify(&ops::direct(g1, g2));
    let ok = edge_matches(&predicted, &observed);
    v.hypothesis_holds = true;
    v.predicted = Some(predicted);
    v.detail = format!("predicted lambda = {}, observed {}", fmt_opt(lambda), observed.edge_regular);
    v.observed = vec![observed, pair.r1.clone(), pair.r2.clone()];
    v.with_status(if ok { Status::Agree } else { Status::Disagree })
}

/// Claimed: `G1[G2]` is edge-regular iff `λ1 n2 + 2 λ2 = k1 n2 + λ2`.
///
/// The hypothesis is evaluated exactly as claimed. Counting common neighbours
/// of an edge between different `G1`-blocks gives `λ1 n2 + 2 k2`, so the
/// trace also reports that corrected condition.
pub fn verify_composition_edge(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::CompositionEdge);
    if !pair.both_edge_regular() {
        return v.not_applicable("both factors must be edge-regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let across = p1.lambda.zip(p2.lambda).map(|(l1, l2)| l1 * p2.n + 2 * l2);
    let within = p2.lambda.map(|l2| p1.k * p2.n + l2);
    let (hyp, lambda) = chain(&[across, within]);
    let predicted = Predicted { n: p1.n * p2.n, k: p1.k * p2.n + p2.k, lambda, mu: None };
    let corrected_across = p1.lambda.map(|l1| l1 * p2.n + 2 * p2.k);
    let (corrected, _) = chain(&[corrected_across, within]);
    let trace = format!(
        "lambda1*n2 + 2*lambda2 = {}, k1*n2 + lambda2 = {}; with 2*k2 in place of 2*lambda2 the condition is {}",
        fmt_opt(across),
        fmt_opt(within),
        corrected
    );
    pair.finish(v, hyp, predicted, &ops::composition(g1, g2), false, trace)
}

/// Claimed: `G1[G2]` is pseudo strongly regular iff `μ1 = k1` and `μ2 = 0`,
/// with `μ = μ1 n2 = k1 n2 + μ2`.
pub fn verify_composition_pseudo(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::CompositionPseudo);
    if !pair.both_pseudo() {
        return v.not_applicable("both factors must be pseudo strongly regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let hyp = p1.mu.is_none_or(|m| m == p1.k) && p2.mu.is_none_or(|m| m == 0);
    let (_, mu) = chain(&[p1.mu.map(|m| m * p2.n), p2.mu.map(|m| p1.k * p2.n + m)]);
    let predicted = Predicted { n: p1.n * p2.n, k: p1.k * p2.n + p2.k, lambda: None, mu };
    let trace = format!("mu1 = {}, k1 = {}, mu2 = {}", fmt_opt(p1.mu), p1.k, fmt_opt(p2.mu));
    pair.finish(v, hyp, predicted, &ops::composition(g1, g2), true, trace)
}

/// Claimed: `G1 ⊠ G2` is edge-regular iff
/// `λ2 + k1 λ2 + 2 k1 = λ1 + k2 λ1 + 2 k2 = λ1 λ2 + 2 λ2 + 2 λ1 + 2`.
pub fn verify_strong_edge(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::StrongEdge);
    if !pair.both_edge_regular() {
        return v.not_applicable("both factors must be edge-regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let (k1, k2) = (p1.k, p2.k);
    let first = p2.lambda.map(|l2| l2 + k1 * l2 + 2 * k1);
    let second = p1.lambda.map(|l1| l1 + k2 * l1 + 2 * k2);
    let diagonal = p1.lambda.zip(p2.lambda).map(|(l1, l2)| l1 * l2 + 2 * l2 + 2 * l1 + 2);
    let (hyp, lambda) = chain(&[first, second, diagonal]);
    let predicted = Predicted { n: p1.n * p2.n, k: k1 + k2 + k1 * k2, lambda, mu: None };
    let trace = format!("expressions {}, {}, {}", fmt_opt(first), fmt_opt(second), fmt_opt(diagonal));
    pair.finish(v, hyp, predicted, &ops::strong(g1, g2), false, trace)
}

/// Claimed: `G1 ∨ G2` is edge-regular iff `k1 + n2 = k2 + n1` and
/// `λ1 + n2 = λ2 + n1 = k1 + k2`.
pub fn verify_join_edge(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::JoinEdge);
    if !pair.both_edge_regular() {
        return v.not_applicable("both factors must be edge-regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let regular = p1.k + p2.n == p2.k + p1.n;
    let (lambdas, lambda) = chain(&[p1.lambda.map(|l| l + p2.n), p2.lambda.map(|l| l + p1.n), Some(p1.k + p2.k)]);
    let predicted = Predicted { n: p1.n + p2.n, k: p1.k + p2.n, lambda, mu: None };
    let trace = format!(
        "k1+n2 = {}, k2+n1 = {}; lambda1+n2 = {}, lambda2+n1 = {}, k1+k2 = {}",
        p1.k + p2.n,
        p2.k + p1.n,
        fmt_opt(p1.lambda.map(|l| l + p2.n)),
        fmt_opt(p2.lambda.map(|l| l + p1.n)),
        p1.k + p2.k
    );
    pair.finish(v, regular && lambdas, predicted, &ops::join(g1, g2), false, trace)
}

/// Claimed: `G1 ∨ G2` is pseudo strongly regular iff `k1 + n2 = k2 + n1` and
/// `μ1 + n2 = μ2 + n1`.
pub fn verify_join_pseudo(g1: &Graph, g2: &Graph) -> TheoremVerdict {
    let pair = Pair::new(g1, g2);
    let v = pair.verdict(TheoremId::JoinPseudo);
    if !pair.both_pseudo() {
        return v.not_applicable("both factors must be pseudo strongly regular");
    }
    let (p1, p2) = (pair.p1, pair.p2);
    let regular = p1.k + p2.n == p2.k + p1.n;
    let (mus, mu) = chain(&[p1.mu.map(|m| m + p2.n), p2.mu.map(|m| m + p1.n)]);
    let predicted = Predicted { n: p1.n + p2.n, k: p1.k + p2.n, lambda: None, mu };
    let trace = format!(
        "k1+n2 = {}, k2+n1 = {}; mu1+n2 = {}, mu2+n1 = {}",
        p1.k + p2.n,
        p2.k + p1.n,
        fmt_opt(p1.mu.map(|m| m + p2.n)),
        fmt_opt(p2.mu.map(|m| m + p1.n))
    );
    pair.finish(v, regular && mus, predicted, &ops::join(g1, g2), true, trace)
}
