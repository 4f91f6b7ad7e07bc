//! Maximal connected subgroups: the classical catalog rows, maximal compact
//! subgroups, realification rules, named inclusions and product rules.

use crate::realforms::*;
use crate::rootdata::{Family, SimpleRootSystem};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{group} is {why}; the classical catalog covers non-split non-compact classical groups only")]
    Unsupported { group: String, why: &'static str },
    #[error("{0} is compact and is its own maximal compact subgroup")]
    Compact(String),
}

/// Justification for an edge M < G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// Row of the classical maximal-subgroup table, numbered 1..=21.
    Table3(u8),
    /// Step through a distinguished orbit of the Satake index.
    Parabolic(u32),
    MaximalCompact,
    /// M(ℂ) maximal connected in G(ℂ).
    RealformOfComplexMaximal,
    Diagonal,
    /// A simple factor replaced by one of its maximal subgroups.
    FactorDrop,
    TorusDrop,
    Named(&'static str),
}

impl Rule {
    pub fn cite(&self) -> &'static str {
        match self {
            Rule::Table3(1..=3) => "classical catalog, SU(p,q) rows",
            Rule::Table3(4..=5) => "classical catalog, SLₙ(ℍ) rows",
            Rule::Table3(6..=11) => "classical catalog, SO(p,q) rows",
            Rule::Table3(12..=16) => "classical catalog, SO*(2n) rows",
            Rule::Table3(_) => "classical catalog, Sp(p,q) rows",
            Rule::Parabolic(_) => "maximal parabolic through one distinguished orbit",
            Rule::MaximalCompact => "K° is a maximal connected subgroup",
            Rule::RealformOfComplexMaximal => "real form of a maximal connected subgroup of G(ℂ)",
            Rule::Diagonal => "diagonal copy of G₀ in G₀ × G₀",
            Rule::FactorDrop => "maximal subgroup of one simple factor times the rest",
            Rule::TorusDrop => "codimension-one subtorus",
            Rule::Named(_) => "explicit inclusion used in the depth constructions",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Table3(k) => write!(f, "table3-row-{k}"),
            Rule::Parabolic(o) => write!(f, "parabolic({o})"),
            Rule::MaximalCompact => f.write_str("maximal-compact"),
            Rule::RealformOfComplexMaximal => f.write_str("realform-of-complex-maximal"),
            Rule::Diagonal => f.write_str("diagonal"),
            Rule::FactorDrop => f.write_str("factor-drop"),
            Rule::TorusDrop => f.write_str("torus-drop"),
            Rule::Named(label) => write!(f, "named({label})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalEdge {
    pub parent: ReductiveDescriptor,
    pub child: ReductiveDescriptor,
    pub rule: Rule,
    pub constraints: String,
}

impl MaximalEdge {
    fn new(parent: ReductiveDescriptor, child: ReductiveDescriptor, rule: Rule, constraints: impl Into<String>) -> Self {
        Self { parent, child, rule, constraints: constraints.into() }
    }

    /// One JSON line: `{"parent":…,"child":…,"rule":…,"cite":…}`.
    pub fn to_json_line(&self) -> String {
        serde_json::json!({
            "parent": self.parent.to_string(),
            "child": self.child.to_string(),
            "rule": self.rule.to_string(),
            "cite": self.rule.cite(),
        })
        .to_string()
    }
}

impl fmt::Display for MaximalEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} > {}  [{}]", self.parent, self.child, self.rule)?;
        if !self.constraints.is_empty() {
            write!(f, " {}", self.constraints)?;
        }
        Ok(())
    }
}

fn t1() -> ReductiveDescriptor {
    ReductiveDescriptor::torus(1)
}

fn simple(g: RealForm) -> ReductiveDescriptor {
    ReductiveDescriptor::simple(g)
}

/// Splits (p, q) into two nonzero parts, each unordered pair once.
fn splits(p: u32, q: u32) -> Vec<((u32, u32), (u32, u32))> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p1 in 0..=p {
        for q1 in 0..=q {
            let (a, b) = ((p1, q1), (p - p1, q - q1));
            if a.0 + a.1 == 0 || b.0 + b.1 == 0 {
                continue;
            }
            if seen.insert(a.min(b)) {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out
}

/// Signatures (p₁,q₁), (p₂,q₂) of size n₁·n₂ = n with n₁ ≥ min1, n₂ ≥ min2,
/// whose tensor signature {p₁q₂+p₂q₁, p₁p₂+q₁q₂} equals {a, b}.
fn tensor_signatures(a: u32, b: u32, min1: u32, min2: u32, scale: u32) -> Vec<((u32, u32), (u32, u32))> {
    let n = (a + b) / scale;
    let mut out = Vec::new();
    if !(a + b).is_multiple_of(scale) {
        return out;
    }
    let want = (a.max(b), a.min(b));
    for n1 in min1..=n {
        if !n.is_multiple_of(n1) || n / n1 < min2 {
            continue;
        }
        let n2 = n / n1;
        for p1 in 0..=n1 {
            for p2 in 0..=n2 {
                let (q1, q2) = (n1 - p1, n2 - p2);
                let x = scale * (p1 * q2 + p2 * q1);
                let y = scale * (p1 * p2 + q1 * q2);
                if (x.max(y), x.min(y)) == want {
                    out.push(((p1, q1), (p2, q2)));
                }
            }
        }
    }
    out
}

/// Smallest n ≥ 1 with n(n+1)/2 = p and n(n−1)/2 = q, if any.
fn triangular(p: u32, q: u32) -> Option<u32> {
    let n = p.checked_sub(q)?;
    (n >= 1 && n * (n + 1) / 2 == p && n * (n - 1) / 2 == q).then_some(n)
}

struct Collector {
    parent: ReductiveDescriptor,
    edges: Vec<MaximalEdge>,
}

impl Collector {
    fn push(&mut self, child: ReductiveDescriptor, rule: Rule, constraints: String) {
        if child == self.parent || child.dimension() >= self.parent.dimension() {
            return;
        }
        if self.edges.iter().any(|e| e.child == child && e.rule == rule) {
            return;
        }
        self.edges.push(MaximalEdge::new(self.parent.clone(), child, rule, constraints));
    }
}

/// Reductive maximal connected subgroups of a non-split, non-compact
/// classical group from the classical catalog, together with the real forms
/// of maximal irreducible complex subgroups used in the depth constructions.
pub fn reductive_maximal(g: &RealForm) -> Result<Vec<MaximalEdge>, CatalogError> {
    let why = if g.is_exceptional() {
        Some("exceptional")
    } else if matches!(g, RealForm::Realification(_)) {
        Some("a realification")
    } else if g.is_compact() {
        Some("compact")
    } else if g.is_split() {
        Some("split")
    } else {
        None
    };
    if let Some(why) = why {
        return Err(CatalogError::Unsupported { group: g.to_string(), why });
    }
    let mut c = Collector { parent: simple(*g), edges: Vec::new() };
    classical_rows(g, &mut c);
    Ok(c.edges)
}

fn classical_rows(g: &RealForm, c: &mut Collector) {
    let row = Rule::Table3;
    let case_b = Rule::RealformOfComplexMaximal;
    match *g {
        RealForm::SpecialUnitary(p, q) => {
            for ((p1, q1), (p2, q2)) in splits(p, q) {
                let child = canonical_su(p1, q1).product(&canonical_su(p2, q2)).product(&t1());
                c.push(child, row(1), format!("(p1,q1)=({p1},{q1}) (p2,q2)=({p2},{q2})"));
            }
            for ((p1, q1), (p2, q2)) in tensor_signatures(p, q, 2, 2, 1) {
                let child = canonical_su(p1, q1).product(&canonical_su(p2, q2));
                c.push(child, row(2), format!("SU({p1},{q1}) ⊗ SU({p2},{q2})"));
            }
            if let Some(n) = triangular(p, q).filter(|&n| n >= 2) {
                c.push(canonical_sl_complex(n), row(3), format!("n={n}"));
            }
            if p + q >= 3 {
                c.push(canonical_so(p, q), case_b, "SOₙ(ℂ) < SLₙ(ℂ)".into());
            }
            if p % 2 == 0 && q % 2 == 0 && p + q >= 4 {
                c.push(canonical_sp(p / 2, q / 2), case_b, "Sp₂ₙ(ℂ) < SL₂ₙ(ℂ)".into());
            }
            if p == q {
                c.push(canonical_sp_split(p), case_b, "Sp₂ₖ(ℂ) < SL₂ₖ(ℂ)".into());
                c.push(canonical_sostar(p), case_b, "SO₂ₖ(ℂ) < SL₂ₖ(ℂ)".into());
            }
        }
        RealForm::SpecialLinearH(n) => {
            c.push(canonical_sl_complex(n).product(&t1()), row(4), String::new());
            for n1 in 2..=n {
                if n % n1 == 0 {
                    let child = canonical_slr(n1).product(&canonical_slh(n / n1));
                    c.push(child, row(5), format!("n1={n1} n2={}", n / n1));
                }
            }
            for q in 0..=n / 2 {
                c.push(canonical_sp(n - q, q), case_b, "Sp₂ₙ(ℂ) < SL₂ₙ(ℂ)".into());
            }
            c.push(canonical_sostar(n), case_b, "SO₂ₙ(ℂ) < SL₂ₙ(ℂ)".into());
        }
        RealForm::SpecialOrthogonal(p, q) => {
            for ((p1, q1), (p2, q2)) in splits(p, q) {
                let child = canonical_so(p1, q1).product(&canonical_so(p2, q2));
                c.push(child, row(6), format!("(p1,q1)=({p1},{q1}) (p2,q2)=({p2},{q2})"));
            }
            if p % 2 == 0 && q % 2 == 0 {
                c.push(canonical_su(p / 2, q / 2).product(&t1()), row(7), String::new());
            }
            for ((p1, q1), (p2, q2)) in tensor_signatures(p, q, 3, 3, 1) {
                let child = canonical_so(p1, q1).product(&canonical_so(p2, q2));
                c.push(child, row(8), format!("SO({p1},{q1}) ⊗ SO({p2},{q2})"));
            }
            for ((p1, q1), (p2, q2)) in tensor_signatures(p, q, 1, 1, 4) {
                let child = canonical_sp(p1, q1).product(&canonical_sp(p2, q2));
                c.push(child, row(9), format!("Sp({p1},{q1}) ⊗ Sp({p2},{q2})"));
            }
            if let Some(n) = triangular(p, q).filter(|&n| n >= 2) {
                c.push(canonical_so_complex(n), row(10), format!("n={n}"));
            }
            if let Some(n) = (1..=p).find(|&n| n * (2 * n + 1) == p && n * (2 * n - 1) == q) {
                c.push(canonical_sp_complex(n), row(11), format!("n={n}"));
            }
        }
        RealForm::SOStar(n) => {
            for n1 in 1..=n / 2 {
                let child = canonical_sostar(n1).product(&canonical_sostar(n - n1));
                c.push(child, row(12), format!("n1={n1} n2={}", n - n1));
            }
            c.push(canonical_so_complex(n), row(13), String::new());
            for q in 0..=n / 2 {
                c.push(canonical_su(n - q, q).product(&t1()), row(14), format!("(p,q)=({},{q})", n - q));
            }
            for m in 1..=n {
                if n % (2 * m) != 0 {
                    continue;
                }
                let s = n / (2 * m);
                for q in 0..=s / 2 {
                    let child = canonical_sp_split(m).product(&canonical_sp(s - q, q));
                    c.push(child, row(15), format!("m={m} (p,q)=({},{q})", s - q));
                }
            }
            for m in 2..=n {
                if n % m != 0 || n / m < 3 {
                    continue;
                }
                let s = n / m;
                for q in 0..=s / 2 {
                    let child = canonical_sostar(m).product(&canonical_so(s - q, q));
                    c.push(child, row(16), format!("m={m} (p,q)=({},{q})", s - q));
                }
            }
        }
        RealForm::SymplecticPQ(p, q) => {
            for ((p1, q1), (p2, q2)) in splits(p, q) {
                let child = canonical_sp(p1, q1).product(&canonical_sp(p2, q2));
                c.push(child, row(17), format!("(p1,q1)=({p1},{q1}) (p2,q2)=({p2},{q2})"));
            }
            c.push(canonical_su(p, q).product(&t1()), row(18), String::new());
            for ((p1, q1), (p2, q2)) in tensor_signatures(p, q, 1, 3, 1) {
                let child = canonical_sp(p1, q1).product(&canonical_so(p2, q2));
                c.push(child, row(19), format!("Sp({p1},{q1}) ⊗ SO({p2},{q2})"));
            }
            if p == q {
                for n1 in 1..=p {
                    if p % n1 == 0 && p / n1 >= 2 {
                        let child = canonical_sp_split(n1).product(&canonical_sostar(p / n1));
                        c.push(child, row(20), format!("n1={n1} n2={}", p / n1));
                    }
                }
                c.push(canonical_sp_complex(p), row(21), format!("n={p}"));
            }
        }
        _ => {}
    }
}

/// The edge G > K° to the identity component of a maximal compact subgroup.
pub fn maximal_compact_edge(g: &RealForm) -> Result<MaximalEdge, CatalogError> {
    if g.is_compact() {
        return Err(CatalogError::Compact(g.to_string()));
    }
    Ok(MaximalEdge::new(simple(*g), g.maximal_compact(), Rule::MaximalCompact, ""))
}

/// The explicit inclusions quoted in the depth constructions.
pub fn named_exceptional_edges() -> Vec<MaximalEdge> {
    use ExceptionalLabel as L;
    let ex = |l| simple(RealForm::Exceptional(l));
    let p = |s: &str| parse(s).expect("named edge endpoints parse");
    let rows: [(ReductiveDescriptor, ReductiveDescriptor, &'static str); 9] = [
        (ex(L::EVI), p("SU(2,1)"), "EVI>PSU(2,1)"),
        (ex(L::EIII), ex(L::FII), "EIII>FII"),
        (ex(L::EVII), p("SL(4,H)"), "EVII>SL4(H)"),
        (ex(L::EIX), p("SL(3,R)*SU(2)"), "EIX>PSL3(R)xPSU(2)"),
        (ex(L::EII), ex(L::FI), "EII>FI"),
        (p("SO(5,3)"), p("SL(3,R)"), "SO(5,3)>SL3(R)"),
        (p("SO(4,4)"), p("SU(2,1)"), "SO(4,4)>SU(2,1)"),
        (p("SO(8)"), p("SU(3)"), "SO(8)>(A2)c"),
        (p("SU(2)"), ReductiveDescriptor::torus(1), "SU(2)>T"),
    ];
    rows.into_iter().map(|(a, b, label)| MaximalEdge::new(a, b, Rule::Named(label), "")).collect()
}

/// Every canonical descriptor isomorphic to `g` up to isogeny.
pub fn isogeny_class(g: &RealForm) -> Vec<RealForm> {
    let key = g.isogeny_key();
    let mut out = vec![key];
    let twins: &[(RealForm, RealForm)] = &[
        (RealForm::SymplecticPQ(2, 0), RealForm::SpecialOrthogonal(5, 0)),
        (RealForm::SymplecticPQ(1, 1), RealForm::SpecialOrthogonal(4, 1)),
        (RealForm::SOStar(4), RealForm::SpecialOrthogonal(6, 2)),
        (
            RealForm::Realification(SimpleRootSystem::raw(Family::C, 2)),
            RealForm::Realification(SimpleRootSystem::raw(Family::B, 2)),
        ),
    ];
    out.extend(twins.iter().filter(|(k, _)| *k == key).map(|(_, t)| *t));
    out
}

fn descent_edges(g: &RealForm, c: &mut Collector) {
    let Some(next) = g.root_system().descent_step() else { return };
    let rule = Rule::RealformOfComplexMaximal;
    let cite = format!("{} < {}", next, g.root_system());
    if g.is_compact() {
        c.push(simple(RealForm::compact_form(next)), rule, cite);
    } else if g.is_split() && g.root_system() != SimpleRootSystem::d(4) {
        c.push(simple(RealForm::split_form(next)), rule, cite);
    } else if let RealForm::Realification(x) = g {
        let down = x.descent_step().expect("checked above");
        c.push(simple(RealForm::Realification(down)), rule, format!("{down} < {x}"));
    }
}

/// Rows of the classical catalog specialised to q = 0.
fn compact_classical_edges(g: &RealForm, c: &mut Collector) {
    if g.is_compact() && !g.is_exceptional() {
        classical_rows(g, c);
    }
}

/// All catalogued maximal connected subgroups of a simple group.
pub fn simple_edges(g: &RealForm) -> Vec<MaximalEdge> {
    let mut c = Collector { parent: simple(*g), edges: Vec::new() };
    for rep in isogeny_class(g) {
        if let Ok(edges) = reductive_maximal(&rep) {
            for e in edges {
                c.push(e.child, e.rule, e.constraints);
            }
        }
        if let Ok(e) = maximal_compact_edge(&rep) {
            c.push(e.child, e.rule, e.constraints);
        }
        if let RealForm::Realification(x) = rep {
            for f in RealForm::real_forms_of(x) {
                c.push(simple(f), Rule::RealformOfComplexMaximal, "real form of X".into());
            }
        }
        descent_edges(&rep, &mut c);
        compact_classical_edges(&rep, &mut c);
        let me = simple(rep);
        for e in named_exceptional_edges().into_iter().filter(|e| e.parent == me) {
            c.push(e.child, e.rule, e.constraints);
        }
    }
    c.edges
}

/// All catalogued maximal connected subgroups of a reductive group.
pub fn product_edges(g: &ReductiveDescriptor) -> Vec<MaximalEdge> {
    if let Some(f) = g.as_simple() {
        return simple_edges(f);
    }
    let mut c = Collector { parent: g.clone(), edges: Vec::new() };
    let k = g.torus_dim();
    if k > 0 {
        c.push(g.with_torus(k - 1), Rule::TorusDrop, String::new());
    }
    let factors = g.factors();
    let keys: Vec<RealForm> = factors.iter().map(|f| f.isogeny_key()).collect();
    for i in 0..factors.len() {
        if i > 0 && keys[i] == keys[i - 1] && factors[i] == factors[i - 1] {
            continue;
        }
        if let Some(j) = (i + 1..factors.len()).find(|&j| keys[j] == keys[i]) {
            c.push(g.remove_factor(j), Rule::Diagonal, format!("diagonal {}", factors[i]));
        }
        for e in simple_edges(&factors[i]) {
            let constraints = format!("{} > {} [{}]", factors[i], e.child, e.rule);
            c.push(g.replace_factor(i, &e.child), Rule::FactorDrop, constraints);
        }
    }
    c.edges
}

/// Why a proposed edge was rejected, with the closest catalogued children.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{child} is not a catalogued maximal connected subgroup of {parent}; nearest: {}", nearest.join("; "))]
pub struct Rejection {
    pub parent: String,
    pub child: String,
    pub nearest: Vec<String>,
}

/// Every catalogued rule justifying `child < parent`.
pub fn justifying_rules(parent: &ReductiveDescriptor, child: &ReductiveDescriptor) -> Vec<Rule> {
    let target = child.isogeny_canonical();
    product_edges(parent).into_iter().filter(|e| e.child.isogeny_canonical() == target).map(|e| e.rule).collect()
}

/// Finds a rule justifying `child < parent` as a maximal connected subgroup.
pub fn validate_edge(parent: &ReductiveDescriptor, child: &ReductiveDescriptor) -> Result<MaximalEdge, Rejection> {
    let target = child.isogeny_canonical();
    let edges = product_edges(parent);
    if let Some(e) = edges.iter().find(|e| e.child.isogeny_canonical() == target) {
        return Ok(e.clone());
    }
    let dim = child.dimension();
    let mut near: Vec<&MaximalEdge> = edges.iter().collect();
    near.sort_by_key(|e| (e.child.dimension().abs_diff(dim), e.child.to_string()));
    Err(Rejection {
        parent: parent.to_string(),
        child: child.to_string(),
        nearest: near.iter().take(3).map(|e| format!("{} [{}]", e.child, e.rule)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> RealForm {
        s.parse().unwrap()
    }

    fn children(s: &str) -> Vec<String> {
        reductive_maximal(&g(s)).unwrap().iter().map(|e| e.child.to_string()).collect()
    }

    #[test]
    fn su21_rows() {
        let c = children("SU(2,1)");
        assert!(c.contains(&"SL(2,R)*T(1)".to_string()), "{c:?}");
        assert!(c.contains(&"SU(2)*T(1)".to_string()), "{c:?}");
        assert!(c.contains(&"SL(2,R)".to_string()), "{c:?}");
    }

    #[test]
    fn sp21_rows() {
        let c = children("Sp(2,1)");
        for want in ["SU(2)*Sp(1,1)", "SU(2)*Sp(2)", "SU(2,1)*T(1)"] {
            assert!(c.contains(&want.to_string()), "{want} missing from {c:?}");
        }
    }

    #[test]
    fn so51_rows() {
        // SO(5,1) is canonicalised to SL(2,H).
        let c = children("SO(5,1)");
        assert!(c.contains(&"SL(2,C)*T(1)".to_string()), "{c:?}");
        assert!(c.contains(&"Sp(1,1)".to_string()), "{c:?}");
    }

    #[test]
    fn refuses_outside_catalog() {
        for s in ["SL(3,R)", "SU(3)", "EIX", "SL(2,C)", "SO(4,4)"] {
            assert!(reductive_maximal(&g(s)).is_err(), "{s}");
        }
    }

    #[test]
    fn maximal_compacts() {
        assert_eq!(maximal_compact_edge(&g("SL(3,H)")).unwrap().child.to_string(), "Sp(3)");
        assert_eq!(maximal_compact_edge(&g("EIII")).unwrap().child.to_string(), "SO(10)*T(1)");
        assert_eq!(maximal_compact_edge(&g("G2(C)")).unwrap().child.to_string(), "G2c");
        assert!(maximal_compact_edge(&g("SU(3)")).is_err());
    }

    #[test]
    fn validation() {
        let p = |s: &str| parse(s).unwrap();
        let e = validate_edge(&p("SU(3,3)"), &p("Sp(6,R)")).unwrap();
        assert_eq!(e.rule, Rule::RealformOfComplexMaximal);
        let e = validate_edge(&p("SU(2)*SU(2)"), &p("SU(2)")).unwrap();
        assert_eq!(e.rule, Rule::Diagonal);
        let r = validate_edge(&p("SU(2,1)"), &p("SU(2,1)")).unwrap_err();
        assert!(!r.nearest.is_empty());
        assert_eq!(validate_edge(&p("EVI"), &p("SU(2,1)")).unwrap().rule, Rule::Named("EVI>PSU(2,1)"));
    }
}
