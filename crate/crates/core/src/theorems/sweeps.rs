//! Bounded searches for counterexamples to the non-existence claims.

use rayon::prelude::*;

use crate::census::run_census;
use crate::classify::{classify, PairParam};
use crate::graph::Graph;
use crate::ops;

use super::{g6, is_degenerate, Status, TheoremId, TheoremVerdict};

/// Connected regular graphs with at most `max_n` vertices, one per
/// isomorphism class.
pub fn census_corpus(max_n: usize) -> Vec<Graph> {
    run_census(max_n, true).iter().map(|r| r.graph()).collect()
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.order()];
    for start in 0..g.order() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let s = side[u].unwrap();
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        stack.push(w);
                    }
                    Some(t) if t == s => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

struct Tally {
    checked: usize,
    logged: Vec<String>,
    counterexamples: Vec<String>,
}

impl Tally {
    fn verdict(self, theorem: TheoremId, max_n: usize, what: &str) -> TheoremVerdict {
        let mut v = TheoremVerdict::new(theorem, &[]);
        v.hypothesis_holds = true;
        let logged = if self.logged.is_empty() {
            String::new()
        } else {
            format!("; {} degenerate case(s) logged: {}", self.logged.len(), preview(&self.logged))
        };
        if self.counterexamples.is_empty() {
            v.detail = format!("no counterexample up to n = {max_n} ({} {what} checked){logged}", self.checked);
            v.with_status(Status::Agree)
        } else {
            v.detail = format!(
                "{} counterexample(s) up to n = {max_n}: {}{logged}",
                self.counterexamples.len(),
                preview(&self.counterexamples)
            );
            v.with_status(Status::Disagree)
        }
    }
}

fn preview(items: &[String]) -> String {
    const SHOWN: usize = 8;
    let mut s = items.iter().take(SHOWN).cloned().collect::<Vec<_>>().join(", ");
    if items.len() > SHOWN {
        s.push_str(&format!(", ... {} more", items.len() - SHOWN));
    }
    s
}

fn pseudo_pairs<'a>(pseudo: &[&'a Graph], product_limit: usize) -> Vec<(&'a Graph, &'a Graph)> {
    pseudo
        .iter()
        .flat_map(|&a| pseudo.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a.order() * b.order() <= product_limit)
        .collect()
}

enum Outcome {
    Fine,
    Logged(String),
    Counterexample(String),
}

fn tally(outcomes: Vec<Outcome>) -> Tally {
    let mut t = Tally { checked: outcomes.len(), logged: Vec::new(), counterexamples: Vec::new() };
    for o in outcomes {
        match o {
            Outcome::Fine => {}
            Outcome::Logged(s) => t.logged.push(s),
            Outcome::Counterexample(s) => t.counterexamples.push(s),
        }
    }
    t
}

fn product_sweep(
    theorem: TheoremId,
    graphs: &[Graph],
    product_limit: usize,
    max_n: usize,
    product: fn(&Graph, &Graph) -> Graph,
) -> TheoremVerdict {
    let pseudo: Vec<&Graph> = graphs.iter().filter(|g| classify(g).is_pseudo()).collect();
    let outcomes = pseudo_pairs(&pseudo, product_limit)
        .par_iter()
        .map(|&(a, b)| match classify(&product(a, b)).pseudo {
            PairParam::Yes(mu) => {
                let label = format!("({}, {}) mu = {mu}", g6(a), g6(b));
                if is_degenerate(a) || is_degenerate(b) {
                    Outcome::Logged(label)
                } else {
                    Outcome::Counterexample(label)
                }
            }
            _ => Outcome::Fine,
        })
        .collect();
    tally(outcomes).verdict(theorem, max_n, "pseudo pairs")
}

/// Direct products of pseudo strongly regular graphs from `graphs` with
/// `n1 * n2 <= product_limit` are never pseudo, apart from degenerate factors.
pub fn sweep_direct_pseudo(graphs: &[Graph], product_limit: usize, max_n: usize) -> TheoremVerdict {
    product_sweep(TheoremId::DirectPseudoNonexistence, graphs, product_limit, max_n, ops::direct)
}

/// Strong products of pseudo strongly regular graphs are never pseudo, apart
/// from degenerate factors.
pub fn sweep_strong_pseudo(graphs: &[Graph], product_limit: usize, max_n: usize) -> TheoremVerdict {
    product_sweep(TheoremId::StrongPseudoNonexistence, graphs, product_limit, max_n, ops::strong)
}

/// No line graph is pseudo strongly regular with μ = 3.
pub fn sweep_line_no_mu3(graphs: &[Graph], max_n: usize) -> TheoremVerdict {
    let outcomes = graphs
        .par_iter()
        .map(|g| match classify(&ops::line_graph(g).graph).pseudo {
            PairParam::Yes(3) => Outcome::Counterexample(g6(g)),
            _ => Outcome::Fine,
        })
        .collect();
    tally(outcomes).verdict(TheoremId::LineNoMu3, max_n, "graphs")
}

/// No subdivision graph is non-vacuously pseudo strongly regular. Along the
/// way, every `S(G)` must be bipartite, and `S(G)` regular forces `G` to be
/// 2-regular or edgeless.
pub fn sweep_subdivision_pseudo(graphs: &[Graph], max_n: usize) -> TheoremVerdict {
    let outcomes = graphs
        .par_iter()
        .map(|g| {
            let s = ops::subdivision(g);
            let r = classify(&s);
            if !is_bipartite(&s) {
                return Outcome::Counterexample(format!("{}: S(G) not bipartite", g6(g)));
            }
            if r.regular_k.is_some() && !(g.is_edgeless() || g.is_regular() == Some(2)) {
                return Outcome::Counterexample(format!("{}: S(G) regular but G is not 2-regular", g6(g)));
            }
            match r.pseudo {
                PairParam::Yes(mu) if g.is_edgeless() => Outcome::Logged(format!("{} mu = {mu}", g6(g))),
                PairParam::Yes(mu) => Outcome::Counterexample(format!("{} mu = {mu}", g6(g))),
                _ => Outcome::Fine,
            }
        })
        .collect();
    tally(outcomes).verdict(TheoremId::SubdivisionPseudoNonexistence, max_n, "graphs")
}

const PRODUCT_LIMIT: usize = 36;

pub fn verify_direct_pseudo_nonexistence(max_n: usize) -> TheoremVerdict {
    sweep_direct_pseudo(&census_corpus(max_n), PRODUCT_LIMIT, max_n)
}

pub fn verify_strong_pseudo_nonexistence(max_n: usize) -> TheoremVerdict {
    sweep_strong_pseudo(&census_corpus(max_n), PRODUCT_LIMIT, max_n)
}

pub fn verify_line_no_mu3(max_n: usize) -> TheoremVerdict {
    sweep_line_no_mu3(&census_corpus(max_n), max_n)
}

pub fn verify_subdivision_pseudo_nonexistence(max_n: usize) -> TheoremVerdict {
    sweep_subdivision_pseudo(&census_corpus(max_n), max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    fn fam(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn bipartite_check() {
        assert!(is_bipartite(&fam("cycle 6")));
        assert!(!is_bipartite(&fam("cycle 5")));
        assert!(is_bipartite(&Graph::empty(3)));
        assert!(is_bipartite(&fam("bipartite 2 3")));
    }

    #[test]
    fn direct_sweep() {
        let v = verify_direct_pseudo_nonexistence(6);
        assert_eq!(v.status, Status::Agree, "{}", v.detail);
        assert!(v.detail.starts_with("no counterexample up to n = 6"));
        // K3 x K3 is the 3 x 3 rook graph: pseudo, but K3 is complete.
        let v = sweep_direct_pseudo(&[fam("complete 3")], 36, 3);
        assert_eq!(v.status, Status::Agree);
        assert!(v.detail.contains("1 degenerate case(s) logged"));
    }

    #[test]
    fn strong_sweep() {
        let v = verify_strong_pseudo_nonexistence(5);
        assert_eq!(v.status, Status::Agree, "{}", v.detail);
        let c5 = fam("cycle 5");
        assert_eq!(classify(&ops::strong(&c5, &c5)).pseudo, PairParam::No);
    }

    #[test]
    fn line_sweep() {
        assert_eq!(verify_line_no_mu3(7).status, Status::Agree);
        assert_eq!(classify(&ops::line_graph(&fam("complete 4")).graph).pseudo, PairParam::Yes(4));
        assert_eq!(classify(&ops::line_graph(&fam("cycle 5")).graph).pseudo, PairParam::Yes(1));
    }

    #[test]
    fn subdivision_sweep() {
        assert_eq!(verify_subdivision_pseudo_nonexistence(6).status, Status::Agree);
        assert_eq!(classify(&ops::subdivision(&fam("cycle 3"))).pseudo, PairParam::No);
        assert_eq!(classify(&ops::subdivision(&fam("complete 2"))).regular_k, None);
        let v = sweep_subdivision_pseudo(&[Graph::empty(3)], 3);
        assert_eq!(v.status, Status::Agree);
        assert!(v.detail.contains("logged"));
    }

    // Disjoint unions of cliques are pseudo with mu = 0, and so are their
    // direct and strong products. The connected census never meets them.
    #[test]
    fn disconnected_cliques_break_the_product_sweeps() {
        let two_k2 = fam("complete 2 + complete 2");
        let v = sweep_strong_pseudo(std::slice::from_ref(&two_k2), 36, 4);
        assert_eq!(v.status, Status::Disagree);
        assert!(v.detail.contains("mu = 0"));
        assert_eq!(sweep_direct_pseudo(&[two_k2], 36, 4).status, Status::Disagree);
    }

    #[test]
    fn counterexamples_are_reported() {
        // Two triangles sit outside the connected census; S(2K3) = 2C6 is not
        // pseudo either, so the sweep stays clean on it.
        let two_k3 = fam("complete 3 + complete 3");
        assert_eq!(sweep_subdivision_pseudo(&[two_k3], 6).status, Status::Agree);
        let t = tally(vec![Outcome::Counterexample("X".into()), Outcome::Fine]);
        let v = t.verdict(TheoremId::LineNoMu3, 4, "graphs");
        assert_eq!(v.status, Status::Disagree);
        assert!(v.detail.starts_with("1 counterexample(s) up to n = 4: X"));
    }
}
