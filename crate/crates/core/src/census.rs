//! Exhaustive enumeration of small regular graphs up to isomorphism.
//!
//! Rows of the adjacency matrix are filled in order. When row `i` is filled,
//! two later vertices whose columns agree on every earlier row are
//! interchangeable, and only the choice that makes row `i` lexicographically
//! larger is kept. The labelling of a graph that maximises the upper triangle
//! read row by row survives this pruning, so every isomorphism class is
//! reached; survivors are then deduplicated by canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonical_graph};
use crate::classify::{classify, ClassificationReport};
use crate::graph::Graph;
use crate::io::{decode_graph6, encode_graph6};
use crate::ops::complement;

/// Largest order the census accepts.
pub const MAX_CENSUS_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub canonical: Vec<u8>,
    pub g6: String,
    pub n: usize,
    pub k: usize,
    pub report: ClassificationReport,
}

impl CensusRecord {
    pub fn new(g: &Graph) -> Self {
        let c = canonical_graph(g);
        let report = classify(&c);
        CensusRecord {
            canonical: canonical_form(&c),
            g6: encode_graph6(&c).expect("census graphs are small"),
            n: c.order(),
            k: report.regular_k.unwrap_or(0),
            report,
        }
    }

    pub fn graph(&self) -> Graph {
        decode_graph6(&self.g6).expect("census records hold valid graph6")
    }

    fn sort_key(&self) -> (usize, usize, &[u8]) {
        (self.n, self.k, &self.canonical)
    }
}

fn to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn from_hex(s: &str) -> Option<Vec<u8>> {
    if !s.len().is_multiple_of(2) {
        return None;
    }
    (0..s.len()).step_by(2).map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok()).collect()
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    g6: String,
    n: usize,
    k: usize,
    canonical: String,
    classification: ClassificationReport,
}

impl Serialize for CensusRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RecordJson {
            g6: self.g6.clone(),
            n: self.n,
            k: self.k,
            canonical: to_hex(&self.canonical),
            classification: self.report.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CensusRecord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RecordJson::deserialize(d)?;
        let canonical = from_hex(&j.canonical).ok_or_else(|| serde::de::Error::custom("canonical is not hex"))?;
        Ok(CensusRecord { canonical, g6: j.g6, n: j.n, k: j.k, report: j.classification })
    }
}

struct Backtrack {
    n: usize,
    k: usize,
    rows: Vec<u32>,
    degree: Vec<usize>,
    out: Vec<Graph>,
}

impl Backtrack {
    fn row(&mut self, i: usize) {
        if i == self.n {
            let g = Graph::from_fn(self.n, |u, v| self.rows[u] >> v & 1 == 1);
            self.out.push(g);
            return;
        }
        let need = self.k - self.degree[i];
        // class[j] = first later vertex whose column over rows 0..i equals j's.
        let mut class = vec![usize::MAX; self.n];
        let mask = (1u32 << i) - 1;
        for j in i + 1..self.n {
            let col = self.column(j) & mask;
            class[j] = (i + 1..j).find(|&h| class[h] == h && self.column(h) & mask == col).unwrap_or(j);
        }
        let mut chosen = Vec::with_capacity(need);
        self.choose(i, i + 1, need, &class, &mut chosen);
    }

    fn column(&self, j: usize) -> u32 {
        (0..self.n).fold(0, |acc, q| acc | (self.rows[q] >> j & 1) << q)
    }

    fn choose(&mut self, i: usize, from: usize, need: usize, class: &[usize], chosen: &mut Vec<usize>) {
        if need == 0 {
            // Vertices after `i` must still be completable from later rows.
            let feasible = (i + 1..self.n).all(|j| self.k - self.degree[j] <= self.n - i - 2);
            if feasible {
                self.row(i + 1);
            }
            return;
        }
        for j in from..self.n {
            if self.n - j < need {
                break;
            }
            if self.degree[j] == self.k {
                continue;
            }
            // Within a class the chosen columns form a prefix. Class members
            // share their degree so far, so a skipped member is never full.
            if (class[j]..j).any(|h| class[h] == class[j] && !chosen.contains(&h)) {
                continue;
            }
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
            self.degree[i] += 1;
            self.degree[j] += 1;
            chosen.push(j);
            self.choose(i, j + 1, need - 1, class, chosen);
            chosen.pop();
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
            self.degree[i] -= 1;
            self.degree[j] -= 1;
        }
    }
}

fn labeled_candidates(n: usize, k: usize) -> Vec<Graph> {
    let mut bt = Backtrack { n, k, rows: vec![0; n], degree: vec![0; n], out: Vec::new() };
    bt.row(0);
    bt.out
}

fn dedupe(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for g in graphs {
        seen.entry(canonical_form(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

/// One representative of every isomorphism class of `k`-regular graphs on
/// `n` vertices (connected ones only when `connected_only`), sorted by
/// canonical form. Returns an empty list when `n * k` is odd or `k >= n`
/// (except the single vertex, `n = 1, k = 0`).
///
/// # Panics
///
/// Panics if `n` exceeds [`MAX_CENSUS_ORDER`].
pub fn enumerate_regular(n: usize, k: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= MAX_CENSUS_ORDER, "census supports n <= {MAX_CENSUS_ORDER}");
    if (n * k) % 2 == 1 || (k >= n && !(n == 1 && k == 0)) || n == 0 {
        return Vec::new();
    }
    // The complement of a k-regular graph is (n-1-k)-regular; enumerate the
    // sparser side.
    let graphs: Vec<Graph> = if 2 * k > n - 1 {
        dedupe(labeled_candidates(n, n - 1 - k)).iter().map(complement).collect()
    } else {
        labeled_candidates(n, k)
    };
    let mut out: Vec<(Vec<u8>, Graph)> = dedupe(graphs.into_iter().filter(|g| !connected_only || g.is_connected()))
        .into_iter()
        .map(|g| (canonical_form(&g), canonical_graph(&g)))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

/// Every regular graph with `1 <= n <= max_n`, classified and sorted by
/// `(n, k, canonical)`. Cells `(n, k)` are enumerated in parallel.
pub fn run_census(max_n: usize, connected_only: bool) -> Vec<CensusRecord> {
    assert!(max_n <= MAX_CENSUS_ORDER, "census supports n <= {MAX_CENSUS_ORDER}");
    let cells: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    let mut records: Vec<CensusRecord> = cells
        .par_iter()
        .flat_map_iter(|&(n, k)| enumerate_regular(n, k, connected_only).into_iter().map(|g| CensusRecord::new(&g)))
        .collect();
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    records
}

/// Records satisfying `pred`, in their original order.
pub fn query(records: &[CensusRecord], pred: impl Fn(&ClassificationReport) -> bool) -> Vec<&CensusRecord> {
    records.iter().filter(|r| pred(&r.report)).collect()
}

pub fn to_jsonl(records: &[CensusRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("record serializes") + "\n").collect()
}

pub fn from_jsonl(text: &str) -> Result<Vec<CensusRecord>, (usize, serde_json::Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| (i + 1, e)))
        .collect()
}
