//! Chain certificates: longest chains realising l(G) and short chains
//! realising the depth upper bounds, each re-verifiable segment by segment.

use crate::catalog::{justifying_rules, validate_edge, Rejection, Rule};
use crate::length::{compact_simple_length, length_of, LengthBreakdown};
use crate::realforms::*;
use crate::rootdata::{Family, SimpleRootSystem};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("chains are built for simple groups only, got `{0}`")]
    NotSimple(String),
    #[error("construction produced an uncatalogued step: {0}")]
    Defect(#[from] Rejection),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentKind {
    ParabolicDescent,
    SolvableCodim1,
    ReductiveEdge,
    CompactBlock,
}

impl fmt::Display for SegmentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ParabolicDescent => "parabolic-descent",
            Self::SolvableCodim1 => "solvable-codim1",
            Self::ReductiveEdge => "reductive-edge",
            Self::CompactBlock => "compact-block",
        })
    }
}

/// Where a segment ends: a reductive group, or a non-reductive stage
/// described by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    Group(ReductiveDescriptor),
    Opaque(String),
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Group(g) => write!(f, "{g}"),
            Endpoint::Opaque(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub count: u64,
    pub rule: String,
    pub cite: String,
    pub endpoint: Endpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Longest,
    Shortest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCertificate {
    pub kind: ChainKind,
    pub start: ReductiveDescriptor,
    pub segments: Vec<Segment>,
    pub claimed_total: u64,
}

impl ChainCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let segments: Vec<serde_json::Value> = self
            .segments
            .iter()
            .map(|s| {
                serde_json::json!({
                    "kind": s.kind,
                    "count": s.count,
                    "rule": s.rule,
                    "cite": s.cite,
                    "endpoint": s.endpoint.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "start": self.start.to_string(),
            "segments": segments,
            "claimed_total": self.claimed_total,
        })
    }
}

impl fmt::Display for ChainCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.start)?;
        for s in &self.segments {
            writeln!(f, "  > {:<28} +{:<3} {} [{}]", s.endpoint.to_string(), s.count, s.kind, s.rule)?;
        }
        write!(f, "total {}", self.claimed_total)
    }
}

/// Longest-chain certificate for a simple G: descent through the
/// distinguished orbits to the minimal parabolic, then the soluble radical one
/// dimension at a time, then a compact block per kernel factor.
pub fn longest_chain(g: &RealForm) -> ChainCertificate {
    let b = LengthBreakdown::from_tables(g);
    let kernel = g.anisotropic_kernel();
    let mut segments = Vec::new();
    if b.real_rank_derived > 0 {
        segments.push(Segment {
            kind: SegmentKind::ParabolicDescent,
            count: b.real_rank_derived,
            rule: Rule::Parabolic(b.real_rank_derived as u32).to_string(),
            cite: Rule::Parabolic(0).cite().into(),
            endpoint: Endpoint::Opaque("P_Δ₀".into()),
        });
    }
    let radical = b.phi_plus - b.phi0_plus + b.rank - b.kernel_rank;
    if radical > 0 {
        segments.push(Segment {
            kind: SegmentKind::SolvableCodim1,
            count: radical,
            rule: "soluble-radical".into(),
            cite: "a connected soluble group of dimension d has length d".into(),
            endpoint: Endpoint::Group(kernel.as_group()),
        });
    }
    let mut rest: Vec<SimpleRootSystem> = kernel.factors().to_vec();
    while let Some(x) = rest.pop() {
        let remaining = AnisotropicKernel::new(rest.clone()).as_group();
        segments.push(Segment {
            kind: SegmentKind::CompactBlock,
            count: compact_simple_length(x),
            rule: format!("compact-length({x})"),
            cite: "length of a compact simple group".into(),
            endpoint: Endpoint::Group(remaining),
        });
    }
    let claimed_total = segments.iter().map(|s| s.count).sum();
    ChainCertificate { kind: ChainKind::Longest, start: ReductiveDescriptor::simple(*g), segments, claimed_total }
}

fn p(s: &str) -> ReductiveDescriptor {
    parse(s).expect("chain states parse")
}

fn one(g: RealForm) -> ReductiveDescriptor {
    ReductiveDescriptor::simple(g)
}

fn su2() -> ReductiveDescriptor {
    one(RealForm::SpecialUnitary(2, 0))
}

fn a1_tail(a1: ReductiveDescriptor) -> Vec<ReductiveDescriptor> {
    vec![a1, ReductiveDescriptor::torus(1), ReductiveDescriptor::trivial()]
}

fn compact_path(x: SimpleRootSystem) -> Vec<ReductiveDescriptor> {
    let mut v: Vec<_> = x.descent_chain().into_iter().map(|y| one(RealForm::compact_form(y))).collect();
    v.pop();
    v.extend(a1_tail(su2()));
    v
}

fn split_path(x: SimpleRootSystem) -> Vec<ReductiveDescriptor> {
    if x == SimpleRootSystem::d(4) {
        return vec![p("SO(4,4)"), p("SU(2,1)"), p("SL(2,R)"), p("T(1)"), p("1")];
    }
    let mut v: Vec<_> = x.descent_chain().into_iter().map(|y| one(RealForm::split_form(y))).collect();
    v.pop();
    v.extend(a1_tail(p("SL(2,R)")));
    v
}

fn prepend(head: ReductiveDescriptor, mut tail: Vec<ReductiveDescriptor>) -> Vec<ReductiveDescriptor> {
    tail.insert(0, head);
    tail
}

fn descriptor_path(d: &ReductiveDescriptor) -> Vec<ReductiveDescriptor> {
    if let Some(g) = d.as_simple() {
        return simple_path(g);
    }
    if d.factors().is_empty() {
        return (0..=d.torus_dim()).rev().map(ReductiveDescriptor::torus).collect();
    }
    let first = d.factors()[0];
    assert!(
        d.torus_dim() == 0 && d.factors().iter().all(|f| f.isogeny_key() == first.isogeny_key()),
        "no generic chain for {d}"
    );
    prepend(d.clone(), descriptor_path(&d.remove_factor(0)))
}

/// States G = S₀ > S₁ > ⋯ > 1 of the short chain for a simple group.
fn simple_path(g: &RealForm) -> Vec<ReductiveDescriptor> {
    use ExceptionalLabel as L;
    let me = one(*g);
    let rs = g.root_system();
    if g.is_compact() {
        return compact_path(rs);
    }
    if let RealForm::Realification(x) = g {
        return prepend(me, compact_path(*x));
    }
    if g.is_split() {
        return split_path(rs);
    }
    match *g {
        RealForm::SpecialUnitary(p, q) if p == q => prepend(me, simple_path(&RealForm::SymplecticSplit(p))),
        RealForm::SpecialUnitary(p, q) => prepend(me, descriptor_path(&canonical_so(p, q))),
        RealForm::SpecialOrthogonal(5, 3) => prepend(me, split_path(SimpleRootSystem::a(2))),
        RealForm::SpecialOrthogonal(p, q) if p == q + 2 => prepend(me, descriptor_path(&canonical_so(p - 1, q))),
        RealForm::SpecialOrthogonal(p, q) => prepend(me, orthogonal_path(p, q)),
        RealForm::SpecialLinearH(n) => prepend(me, compact_path(SimpleRootSystem::c(n))),
        RealForm::SOStar(k) => prepend(me, descriptor_path(&canonical_so_complex(k))),
        RealForm::SymplecticPQ(p, q) => prepend(me, symplectic_path(p, q)),
        RealForm::Exceptional(l) => match l {
            L::EII => prepend(me, split_path(SimpleRootSystem::exceptional(Family::F4))),
            L::FII => prepend(me, compact_path(SimpleRootSystem::b(4))),
            L::EIV => prepend(me, compact_path(SimpleRootSystem::exceptional(Family::F4))),
            L::EVI => prepend(me, simple_path(&RealForm::SpecialUnitary(2, 1))),
            L::EIII => prepend(me, simple_path(&RealForm::Exceptional(L::FII))),
            L::EVII => prepend(me, simple_path(&RealForm::SpecialLinearH(4))),
            L::EIX => vec![me, p("SL(3,R)*SU(2)"), p("SU(2)*SU(2)"), su2(), p("T(1)"), p("1")],
            _ => unreachable!("{g} is split or compact"),
        },
        RealForm::SpecialLinearR(_) | RealForm::SymplecticSplit(_) | RealForm::Realification(_) => {
            unreachable!("{g} is split")
        }
    }
}

fn symplectic_path(p_: u32, q: u32) -> Vec<ReductiveDescriptor> {
    let sp = |n| canonical_sp(n, 0);
    let tail = || vec![p("SU(2)*SU(2)"), su2(), p("T(1)"), p("1")];
    match (p_, q) {
        (1, 1) => tail(),
        (p_, q) if p_ == q => vec![sp(p_).product(&sp(p_)), sp(p_), su2(), p("T(1)"), p("1")],
        (p_, 1) => prepend(sp(p_).product(&su2()), tail()),
        (p_, q) => {
            let mut v = vec![sp(p_).product(&sp(q)), sp(p_).product(&su2())];
            v.extend(tail());
            v
        }
    }
}

/// Chains for non-quasisplit SO(p,q), p − q ≥ 3, q ≥ 1, after the first state.
fn orthogonal_path(p_: u32, q: u32) -> Vec<ReductiveDescriptor> {
    let so = |a, b| canonical_so(a, b);
    let d = p_ - q;
    if d == 3 || d == 4 {
        return descriptor_path(&so(p_ - 1, q));
    }
    if q == 1 {
        return descriptor_path(&so(p_, 0));
    }
    if q == 2 {
        return descriptor_path(&so(p_, 1));
    }
    let odd = |n: u32| n % 2 == 1;
    let a1_pair_tail = || vec![p("SU(2)*SU(2)"), su2(), p("T(1)"), p("1")];
    let with = |a: &ReductiveDescriptor, b: &ReductiveDescriptor| a.product(b);
    match (odd(p_), odd(q)) {
        (true, true) if q == 7 => {
            let mut v = vec![
                with(&so(p_, 0), &so(7, 0)),
                with(&su2(), &so(7, 0)),
                with(&su2(), &p("G2c")),
            ];
            v.extend(a1_pair_tail());
            v
        }
        (true, true) => {
            let mut v = vec![with(&so(p_, 0), &so(q, 0)), with(&su2(), &so(q, 0))];
            v.extend(a1_pair_tail());
            v
        }
        (false, true) => descriptor_path(&so(p_ - 1, q)),
        (true, false) if q != 8 => descriptor_path(&so(p_, q - 1)),
        (true, false) => {
            let mut v = vec![
                with(&so(p_, 0), &so(8, 0)),
                with(&su2(), &so(8, 0)),
                with(&su2(), &p("SU(3)")),
            ];
            v.extend(a1_pair_tail());
            v
        }
        (false, false) => {
            let split_tail = |b: ReductiveDescriptor| {
                vec![
                    with(&su2(), &b),
                    p("SU(2)*SL(2,R)"),
                    p("SU(2)*T(1)"),
                    p("T(2)"),
                    p("T(1)"),
                    p("1"),
                ]
            };
            if (p_, q) == (12, 4) {
                vec![
                    p("SO(11)*SO(4,1)"),
                    p("SO(11)*SU(2)*SU(2)"),
                    p("SU(2)*SU(2)*SU(2)"),
                    p("SU(2)*SU(2)"),
                    su2(),
                    p("T(1)"),
                    p("1"),
                ]
            } else if d == 8 {
                let b = so(q, q - 1);
                prepend(with(&so(9, 0), &b), split_tail(b))
            } else {
                let b = so(q + 1, q);
                prepend(with(&so(d - 1, 0), &b), split_tail(b))
            }
        }
    }
}

fn edge_certificate(g: &RealForm, states: &[ReductiveDescriptor]) -> Result<ChainCertificate, ChainError> {
    let mut segments = Vec::new();
    for pair in states.windows(2) {
        let edge = validate_edge(&pair[0], &pair[1])?;
        segments.push(Segment {
            kind: SegmentKind::ReductiveEdge,
            count: 1,
            rule: edge.rule.to_string(),
            cite: edge.rule.cite().into(),
            endpoint: Endpoint::Group(pair[1].clone()),
        });
    }
    let claimed_total = segments.len() as u64;
    Ok(ChainCertificate { kind: ChainKind::Shortest, start: one(*g), segments, claimed_total })
}

fn proof_states(g: &RealForm) -> Vec<ReductiveDescriptor> {
    let mut states = simple_path(g);
    states.dedup_by(|a, b| a.isogeny_canonical() == b.isogeny_canonical());
    states
}

/// The unrefinable chain from the case-by-case depth constructions, verbatim.
/// Its length can sit strictly below `depth(g).upper`.
pub fn proof_chain(g: &RealForm) -> Result<ChainCertificate, ChainError> {
    edge_certificate(g, &proof_states(g))
}

/// Certificate for the depth upper bound: an unrefinable chain of exactly
/// `depth(g).upper` catalogued steps. Follows the proof construction and, when
/// that is shorter, diverts to a longer catalogued continuation.
pub fn depth_chain(g: &RealForm) -> Result<ChainCertificate, ChainError> {
    let hint = proof_states(g);
    let target = crate::depth::depth(g).upper as usize;
    if hint.len() > target {
        return edge_certificate(g, &hint);
    }
    let mut failed = std::collections::BTreeSet::new();
    let start = hint[0].isogeny_canonical();
    let hint: Vec<_> = hint.iter().map(ReductiveDescriptor::isogeny_canonical).collect();
    match stretch(&start, target, Some(&hint[1..]), &mut failed) {
        Some(mut path) => {
            path[0] = one(*g);
            edge_certificate(g, &path)
        }
        None => edge_certificate(g, &hint),
    }
}

/// A catalogued path from `s` to 1 with exactly `need` steps, trying the
/// hinted successor first.
fn stretch(
    s: &ReductiveDescriptor,
    need: usize,
    hint: Option<&[ReductiveDescriptor]>,
    failed: &mut std::collections::BTreeSet<(ReductiveDescriptor, usize)>,
) -> Option<Vec<ReductiveDescriptor>> {
    if need == 0 {
        return s.is_trivial().then(|| vec![s.clone()]);
    }
    if s.is_trivial() || failed.contains(&(s.clone(), need)) {
        return None;
    }
    let mut kids: Vec<ReductiveDescriptor> =
        crate::catalog::product_edges(s).into_iter().map(|e| e.child.isogeny_canonical()).collect();
    kids.sort();
    kids.dedup();
    let preferred = hint.and_then(|h| h.first()).filter(|h| kids.contains(h)).cloned();
    if let Some(p) = &preferred {
        if let Some(mut path) = stretch(p, need - 1, hint.map(|h| &h[1..]), failed) {
            path.insert(0, s.clone());
            return Some(path);
        }
    }
    for k in kids.iter().filter(|k| Some(*k) != preferred.as_ref()) {
        if let Some(mut path) = stretch(k, need - 1, None, failed) {
            path.insert(0, s.clone());
            return Some(path);
        }
    }
    failed.insert((s.clone(), need));
    None
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub total: u64,
    pub diagnostics: Vec<String>,
}

/// Re-checks every segment of a certificate independently of its builder.
pub fn verify_chain(c: &ChainCertificate) -> Verification {
    let mut diag = Vec::new();
    let total: u64 = c.segments.iter().map(|s| s.count).sum();
    if total != c.claimed_total {
        diag.push(format!("segment counts sum to {total}, claimed {}", c.claimed_total));
    }
    match c.segments.last().map(|s| &s.endpoint) {
        Some(Endpoint::Group(g)) if g.is_trivial() => {}
        None if c.start.is_trivial() => {}
        other => diag.push(format!("chain ends at {} instead of 1", other.map_or("<start>".into(), |e| e.to_string()))),
    }
    if c.segments.iter().any(|s| s.count == 0) {
        diag.push("segment with zero count".into());
    }
    match c.kind {
        ChainKind::Shortest => verify_edges(c, &mut diag),
        ChainKind::Longest => verify_longest(c, &mut diag),
    }
    Verification { ok: diag.is_empty(), total, diagnostics: diag }
}

fn verify_edges(c: &ChainCertificate, diag: &mut Vec<String>) {
    let mut prev = c.start.clone();
    for (i, s) in c.segments.iter().enumerate() {
        let Endpoint::Group(next) = &s.endpoint else {
            diag.push(format!("segment {i}: opaque endpoint in an edge chain"));
            continue;
        };
        if s.kind != SegmentKind::ReductiveEdge || s.count != 1 {
            diag.push(format!("segment {i}: expected a single reductive edge"));
        }
        let rules = justifying_rules(&prev, next);
        if rules.is_empty() {
            let why = validate_edge(&prev, next).err().map(|r| r.to_string()).unwrap_or_default();
            diag.push(format!("segment {i}: {why}"));
        } else if !rules.iter().any(|r| r.to_string() == s.rule) {
            diag.push(format!("segment {i}: {prev} > {next} is not justified by {}", s.rule));
        }
        prev = next.clone();
    }
}

fn verify_longest(c: &ChainCertificate, diag: &mut Vec<String>) {
    let Some(g) = c.start.as_simple() else {
        diag.push(format!("longest chains start at a simple group, not {}", c.start));
        return;
    };
    let b = LengthBreakdown::from_satake(g);
    if c.claimed_total != length_of(&c.start) {
        diag.push(format!("claimed {} but l({g}) = {}", c.claimed_total, length_of(&c.start)));
    }
    let mut segs = c.segments.iter().peekable();
    let parabolic = segs.next_if(|s| s.kind == SegmentKind::ParabolicDescent).map_or(0, |s| s.count);
    if parabolic != b.real_rank_derived {
        diag.push(format!("parabolic descent has {parabolic} steps, real rank is {}", b.real_rank_derived));
    }
    let radical = segs.next_if(|s| s.kind == SegmentKind::SolvableCodim1).map_or(0, |s| s.count);
    let expected = b.phi_plus - b.phi0_plus + b.rank - b.kernel_rank;
    if radical != expected {
        diag.push(format!("soluble segment has {radical} steps, radical dimension is {expected}"));
    }
    let mut kernel: Vec<SimpleRootSystem> = match g {
        RealForm::Realification(_) => vec![],
        _ => g.satake_index().map(|s| s.kernel_types()).unwrap_or_default(),
    };
    kernel.iter_mut().for_each(|x| *x = x.isogeny_normal());
    let mut prev = AnisotropicKernel::new(kernel.clone()).as_group();
    for (i, s) in segs.enumerate() {
        if s.kind != SegmentKind::CompactBlock {
            diag.push(format!("unexpected {} segment after the compact blocks began", s.kind));
            continue;
        }
        let Endpoint::Group(next) = &s.endpoint else {
            diag.push(format!("compact block {i} has no group endpoint"));
            continue;
        };
        let removed = compact_difference(&prev, next);
        match removed {
            Some(x) if compact_simple_length(x) == s.count => {}
            Some(x) => diag.push(format!("block for ({x})c counts {}, its length is {}", s.count, compact_simple_length(x))),
            None => diag.push(format!("compact block {i}: {next} is not {prev} minus one factor")),
        }
        prev = next.clone();
    }
    if !prev.is_trivial() {
        diag.push(format!("compact blocks leave {prev}"));
    }
}

/// The single compact factor present in `a` but not in `b`.
fn compact_difference(a: &ReductiveDescriptor, b: &ReductiveDescriptor) -> Option<SimpleRootSystem> {
    let (a, b) = (a.isogeny_canonical(), b.isogeny_canonical());
    if a.torus_dim() != b.torus_dim() || a.factors().len() != b.factors().len() + 1 {
        return None;
    }
    let mut rest = b.factors().to_vec();
    let mut missing = None;
    for f in a.factors() {
        if let Some(pos) = rest.iter().position(|x| x == f) {
            rest.remove(pos);
        } else if missing.is_none() {
            missing = Some(*f);
        } else {
            return None;
        }
    }
    let f = missing?;
    f.is_compact().then(|| f.root_system())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> RealForm {
        s.parse().unwrap()
    }

    #[test]
    fn longest_sp21() {
        let c = longest_chain(&g("Sp(2,1)"));
        let counts: Vec<u64> = c.segments.iter().map(|s| s.count).collect();
        assert_eq!(counts, vec![1, 8, 2, 2]);
        assert_eq!(c.claimed_total, 13);
        assert!(verify_chain(&c).ok, "{:?}", verify_chain(&c));
    }

    #[test]
    fn longest_fi_and_su3() {
        let c = longest_chain(&g("FI"));
        assert_eq!(c.segments.iter().map(|s| s.count).collect::<Vec<_>>(), vec![4, 28]);
        let c = longest_chain(&g("SU(3)"));
        assert_eq!(c.segments.len(), 1);
        assert_eq!(c.claimed_total, 4);
        assert!(verify_chain(&c).ok);
    }

    #[test]
    fn depth_chains() {
        let c = depth_chain(&g("Sp(2,1)")).unwrap();
        assert_eq!(c.claimed_total, 5);
        assert!(verify_chain(&c).ok);
        assert_eq!(depth_chain(&g("Sp(1,1)")).unwrap().claimed_total, 4);
        assert_eq!(depth_chain(&g("SO(14,7)")).unwrap().claimed_total, 8);
        assert_eq!(depth_chain(&g("SU(2,2)")).unwrap().claimed_total, 4);
        assert_eq!(depth_chain(&g("EIX")).unwrap().claimed_total, 5);
        assert_eq!(proof_chain(&g("SO(9,3)")).unwrap().claimed_total, 5);
        let c = depth_chain(&g("SO(9,3)")).unwrap();
        assert_eq!(c.claimed_total, 7);
        assert!(verify_chain(&c).ok);
    }

    #[test]
    fn tampering_is_detected() {
        let mut c = longest_chain(&g("EIX"));
        assert!(verify_chain(&c).ok);
        c.segments[1].count += 1;
        assert!(!verify_chain(&c).ok);
        let mut c = depth_chain(&g("EIX")).unwrap();
        c.segments[0].endpoint = Endpoint::Group(parse("SU(2)*SU(2)").unwrap());
        assert!(!verify_chain(&c).ok);
    }
}

#[cfg(test)]
mod sweep {
    use super::*;
    use crate::depth::depth;

    fn in_sweep(g: &RealForm) -> bool {
        match *g {
            RealForm::SpecialUnitary(p, q) | RealForm::SpecialOrthogonal(p, q) | RealForm::SymplecticPQ(p, q) => p + q <= 12,
            RealForm::SpecialLinearR(n) | RealForm::SpecialLinearH(n) | RealForm::SymplecticSplit(n) => n <= 12,
            RealForm::SOStar(k) => k <= 12,
            RealForm::Realification(x) => x.rank() < 12,
            RealForm::Exceptional(_) => true,
        }
    }

    #[test]
    fn every_depth_chain_is_catalogued_and_within_bounds() {
        for family in Family::ALL {
            let (lo, hi) = family.rank_range();
            for rank in lo..=hi.min(12) {
                let x = SimpleRootSystem::new(family, rank).unwrap();
                for g in RealForm::real_forms_of(x) {
                    let d = depth(&g);
                    let p = proof_chain(&g).unwrap_or_else(|e| panic!("{g}: {e}"));
                    assert!(verify_chain(&p).ok, "{g}: {:?}", verify_chain(&p).diagnostics);
                    assert!(p.claimed_total >= u64::from(d.lower) && p.claimed_total <= u64::from(d.upper), "{g}: chain {} vs {d}", p.claimed_total);
                    let c = depth_chain(&g).unwrap();
                    assert!(verify_chain(&c).ok, "{g}: {:?}", verify_chain(&c).diagnostics);
                    let total = u32::try_from(c.claimed_total).unwrap();
                    assert!(d.lower <= total && total <= d.upper, "{g}: chain {total} vs {d}");
                    if in_sweep(&g) {
                        assert_eq!(total, d.upper, "{g}");
                    }
                    let l = longest_chain(&g);
                    assert!(verify_chain(&l).ok, "{g}: {:?}", verify_chain(&l).diagnostics);
                }
            }
        }
    }
}
