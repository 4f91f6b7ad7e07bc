//! Brute-force search over catalogued maximal connected subgroups: shortest
//! unrefinable chains by breadth-first search, and chain-length spectra.

use crate::catalog::{product_edges, Rule};
use crate::chain::{ChainCertificate, ChainKind, Endpoint, Segment, SegmentKind};
use crate::length::length_of;
use crate::realforms::ReductiveDescriptor;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {0} expansions exhausted before any chain completed")]
    BudgetExhausted(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    #[serde(serialize_with = "as_string")]
    pub group: ReductiveDescriptor,
    pub min_found: u64,
    pub max_found_reductive: u64,
    pub edge_count: usize,
    pub state_count: usize,
    pub frontier_truncated: bool,
}

fn as_string<S: serde::Serializer>(g: &ReductiveDescriptor, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// The explored part of the subgroup DAG below a group.
#[derive(Debug, Clone, Default)]
pub struct Exploration {
    pub root: ReductiveDescriptor,
    /// Children of each expanded state, canonical and sorted, with the rule used.
    pub edges: BTreeMap<ReductiveDescriptor, Vec<(ReductiveDescriptor, Rule)>>,
    pub truncated: bool,
}

impl Exploration {
    /// Breadth-first expansion from `g`, at most `budget` states expanded.
    pub fn explore(g: &ReductiveDescriptor, budget: usize) -> Self {
        let root = g.isogeny_canonical();
        let mut edges = BTreeMap::new();
        let mut queued = BTreeSet::from([root.clone()]);
        let mut queue = VecDeque::from([root.clone()]);
        let mut truncated = false;
        while let Some(s) = queue.pop_front() {
            if edges.len() >= budget {
                truncated = true;
                break;
            }
            let mut kids: Vec<(ReductiveDescriptor, Rule)> =
                product_edges(&s).into_iter().map(|e| (e.child.isogeny_canonical(), e.rule)).collect();
            kids.sort();
            kids.dedup_by(|a, b| a.0 == b.0);
            for (k, _) in &kids {
                if queued.insert(k.clone()) {
                    queue.push_back(k.clone());
                }
            }
            edges.insert(s, kids);
        }
        Self { root, edges, truncated }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    /// Shortest path from the root to the trivial group: its states and the
    /// rule of each step.
    pub fn shortest_path(&self) -> Option<(Vec<ReductiveDescriptor>, Vec<Rule>)> {
        let trivial = ReductiveDescriptor::trivial();
        let mut prev: BTreeMap<&ReductiveDescriptor, (&ReductiveDescriptor, Rule)> = BTreeMap::new();
        let mut seen = BTreeSet::from([&self.root]);
        let mut queue = VecDeque::from([&self.root]);
        while let Some(s) = queue.pop_front() {
            if *s == trivial {
                let (mut states, mut rules) = (vec![s.clone()], vec![]);
                let mut cur = s;
                while let Some(&(p, rule)) = prev.get(cur) {
                    states.push(p.clone());
                    rules.push(rule);
                    cur = p;
                }
                states.reverse();
                rules.reverse();
                return Some((states, rules));
            }
            for (k, rule) in self.edges.get(s).into_iter().flatten() {
                if seen.insert(k) {
                    prev.insert(k, (s, *rule));
                    queue.push_back(k);
                }
            }
        }
        None
    }

    fn longest_reductive(&self) -> Option<u64> {
        let mut memo = BTreeMap::new();
        self.longest_from(&self.root, &mut memo)
    }

    fn longest_from(&self, s: &ReductiveDescriptor, memo: &mut BTreeMap<ReductiveDescriptor, Option<u64>>) -> Option<u64> {
        if s.is_trivial() {
            return Some(0);
        }
        if let Some(v) = memo.get(s) {
            return *v;
        }
        let best = self.edges.get(s)?.iter().filter_map(|(k, _)| self.longest_from(k, memo)).max().map(|v| v + 1);
        memo.insert(s.clone(), best);
        best
    }

    /// Graphviz rendering of the explored DAG.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph subgroups {\n  rankdir=TB;\n");
        let mut ids = BTreeMap::new();
        for (parent, kids) in &self.edges {
            for node in std::iter::once(parent).chain(kids.iter().map(|k| &k.0)) {
                let n = ids.len();
                ids.entry(node).or_insert_with(|| {
                    let _ = writeln!(out, "  n{n} [label=\"{node}\"];");
                    n
                });
            }
        }
        for (parent, kids) in &self.edges {
            for (k, rule) in kids {
                let _ = writeln!(out, "  n{} -> n{} [label=\"{rule}\"];", ids[parent], ids[k]);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Shortest catalogued chain from `g` to the trivial group.
pub fn enumerate_depth(g: &ReductiveDescriptor, budget: usize) -> Result<SearchReport, OracleError> {
    let ex = Exploration::explore(g, budget);
    let (_, rules) = ex.shortest_path().ok_or(OracleError::BudgetExhausted(budget))?;
    Ok(SearchReport {
        group: g.clone(),
        min_found: rules.len() as u64,
        max_found_reductive: if ex.truncated { 0 } else { ex.longest_reductive().unwrap_or(0) },
        edge_count: ex.edge_count(),
        state_count: ex.edges.len(),
        frontier_truncated: ex.truncated,
    })
}

/// The chain behind `enumerate_depth`, as a certificate for `verify_chain`.
pub fn shortest_certificate(g: &ReductiveDescriptor, budget: usize) -> Result<ChainCertificate, OracleError> {
    let ex = Exploration::explore(g, budget);
    let (states, rules) = ex.shortest_path().ok_or(OracleError::BudgetExhausted(budget))?;
    let segments: Vec<Segment> = states[1..]
        .iter()
        .zip(rules)
        .map(|(s, rule)| Segment {
            kind: SegmentKind::ReductiveEdge,
            count: 1,
            rule: rule.to_string(),
            cite: rule.cite().into(),
            endpoint: Endpoint::Group(s.clone()),
        })
        .collect();
    Ok(ChainCertificate {
        kind: ChainKind::Shortest,
        start: ex.root.clone(),
        claimed_total: segments.len() as u64,
        segments,
    })
}

/// Lengths of chains from `g` down to 1: reductive edges one step at a time,
/// plus at each state the longest chain through its parabolics, soluble
/// radical and compact blocks (counted, not expanded).
pub fn spectrum(g: &ReductiveDescriptor, budget: usize) -> Result<BTreeSet<u64>, OracleError> {
    let ex = Exploration::explore(g, budget);
    if ex.truncated {
        return Err(OracleError::BudgetExhausted(budget));
    }
    let mut memo = BTreeMap::new();
    Ok(spectrum_from(&ex, &ex.root, &mut memo))
}

fn spectrum_from(
    ex: &Exploration,
    s: &ReductiveDescriptor,
    memo: &mut BTreeMap<ReductiveDescriptor, BTreeSet<u64>>,
) -> BTreeSet<u64> {
    if let Some(v) = memo.get(s) {
        return v.clone();
    }
    let mut out = BTreeSet::from([length_of(s)]);
    for (k, _) in ex.edges.get(s).into_iter().flatten() {
        out.extend(spectrum_from(ex, k, memo).into_iter().map(|v| v + 1));
    }
    memo.insert(s.clone(), out.clone());
    out
}
