//! Canonical labelling and isomorphism for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency string (graph6 bit order) over the leaves of an
//! individualisation-refinement search tree. Cells are refined to an equitable
//! partition at every node, and subtrees that are images of an explored
//! sibling under an automorphism already found are skipped. Both steps are
//! label-invariant, so the minimum is also the minimum over every relabelling
//! that respects the refinement, and equal forms mean isomorphic graphs.

use crate::graph::Graph;

type Partition = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. New cells replace the old one in place, ordered by
/// neighbour count.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].clone();
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (splitter.iter().filter(|&&w| g.has_edge(v, w)).count(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            cells = next;
            if split {
                continue 'outer;
            }
        }
        return cells;
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.extend_from_slice(&(n as u32).to_be_bytes());
    let (mut acc, mut fill) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(order[i], order[j]) as u8;
            fill += 1;
            if fill == 8 {
                out.push(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(acc << (8 - fill));
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition, fixed: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = encode(self.g, &order);
            match &self.best {
                Some((best, best_order)) if *best == code => {
                    let mut map = vec![0; order.len()];
                    for (p, &v) in best_order.iter().enumerate() {
                        map[v] = order[p];
                    }
                    self.automorphisms.push(map);
                }
                Some((best, _)) if *best < code => {}
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if explored.iter().any(|&w| self.same_orbit(fixed, v, w)) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            fixed.push(v);
            self.visit(refine(self.g, child), fixed);
            fixed.pop();
            explored.push(v);
        }
    }

    /// Whether some automorphism fixing `fixed` pointwise links `a` and `b`.
    fn same_orbit(&self, fixed: &[usize], a: usize, b: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for map in &self.automorphisms {
            if fixed.iter().all(|&f| map[f] == f) {
                for (v, &w) in map.iter().enumerate() {
                    let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                    parent[rv] = rw;
                }
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }
}

/// Returns the canonical form together with a canonical ordering: position `p`
/// of the canonical labelling holds vertex `order[p]` of `g`.
pub fn canonical_labeling(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (encode(g, &[]), Vec::new());
    }
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.visit(refine(g, vec![(0..n).collect()]), &mut Vec::new());
    search.best.expect("search reaches at least one leaf")
}

/// Relabelling-invariant byte string; equal exactly for isomorphic graphs.
///
/// Exact for every order, and fast for the small graphs this crate works
/// with (up to a few dozen vertices). Highly regular graphs with large
/// automorphism groups are the slow case.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_labeling(g).0
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_labeling(g);
    let mut perm = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    g.permuted(&perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}
