//! Depth λ(G): the shortest unrefinable chain of connected subgroups.

use crate::realforms::{ExceptionalLabel, RealForm, ReductiveDescriptor};
use crate::rootdata::Family;
use serde::Serialize;
use std::collections::BTreeMap;

/// Upper bound on the depth of any real algebraic group.
pub const DEPTH_CEILING: u32 = 9;

/// A rule consulted while deciding a depth value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleFired {
    pub id: &'static str,
    pub cite: &'static str,
}

impl RuleFired {
    const fn new(id: &'static str, cite: &'static str) -> Self {
        Self { id, cite }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub rules_fired: Vec<RuleFired>,
}

impl DepthResult {
    fn exact(v: u32, rule: RuleFired) -> Self {
        Self { lower: v, upper: v, exact: true, rules_fired: vec![rule] }
    }

    fn interval(lower: u32, upper: u32, rule: RuleFired) -> Self {
        debug_assert!(lower <= upper);
        Self { lower, upper, exact: false, rules_fired: vec![rule] }
    }

    pub fn value(&self) -> Option<u32> {
        self.exact.then_some(self.lower)
    }
}

impl std::fmt::Display for DepthResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exact {
            write!(f, "exact {}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// η_pq, first matching clause wins.
pub fn eta(p: u32, q: u32) -> u32 {
    let d = p.saturating_sub(q);
    if d == 3 || q == 1 {
        3
    } else if d == 4 || q == 2 {
        2
    } else if q == 7 && p >= 14 && p.is_multiple_of(2) {
        0
    } else {
        1
    }
}

/// ζ_k = 1 iff k is odd and k ≠ 7.
pub fn zeta(k: u32) -> u32 {
    u32::from(k % 2 == 1 && k != 7)
}

fn delta(a: u32, b: u32) -> u32 {
    u32::from(a == b)
}

const COMPACT: RuleFired = RuleFired::new("compact", "compact simple group: λ = λ_ℂ(G(ℂ)) − 1");
const REALIFICATION: RuleFired = RuleFired::new("realification", "complex group as a real group: λ(X_ℝ) = λ_ℂ(X)");
const QUASISPLIT: RuleFired = RuleFired::new("quasisplit", "quasisplit group: λ = λ_ℂ(G(ℂ)) − 1");
const EXCEPTIONAL: RuleFired = RuleFired::new("exceptional-table", "depth column of the exceptional table");
const RANK_ONE_FOUR: RuleFired =
    RuleFired::new("depth-four", "SLₙ(ℍ) (n > 1) and SO(2k+1,1) (k > 3) have depth 4");
const SOSTAR: RuleFired = RuleFired::new("sostar-bound", "SO*(2k): 4 ≤ λ ≤ 6 − ζ_k");
const SP_PQ: RuleFired = RuleFired::new("sp-pq-bound", "Sp(p,q): 4 ≤ λ ≤ 6 − δ_pq − δ_1q");
const SO_PQ: RuleFired = RuleFired::new("so-pq-bound", "non-quasisplit SO(p,q): λ ≤ 8 − η_pq");
const SU_PQ: RuleFired = RuleFired::new("su-pq-bound", "non-quasisplit SU(p,q): λ ≤ 9 − η_pq");
const NOT_THREE: RuleFired =
    RuleFired::new("depth-three-forces-quasisplit", "depth 3 forces quasisplit or compact, so λ ≥ 4");
const TORUS: RuleFired = RuleFired::new("torus", "central torus of dimension k adds k");
const ISOTYPIC: RuleFired = RuleFired::new("isotypic-product", "G₀^m has depth λ(G₀) + m − 1");
const HETEROGENEOUS: RuleFired =
    RuleFired::new("heterogeneous-product", "max λ(Gᵢ) + m − 1 ≤ λ ≤ Σ blocks, plus torus");
const SMALL_DEPTH: RuleFired = RuleFired::new("small-depth", "classification of groups of depth at most 3");

fn exceptional_depth(l: ExceptionalLabel) -> u32 {
    use ExceptionalLabel as L;
    match l {
        L::GI | L::G2c | L::FI | L::F4c | L::EV | L::E7c | L::EVIII | L::E8c => 3,
        L::FII | L::EI | L::EII | L::EIV | L::E6c | L::EVI => 4,
        L::EIII | L::EVII | L::EIX => 5,
    }
}

/// λ(G) for a simple G: an exact value or a proven interval.
pub fn depth(g: &RealForm) -> DepthResult {
    let key = g.isogeny_key();
    if key != *g {
        return depth(&key);
    }
    let lc = g.root_system().complex_depth() as u32;
    let floor = 4.max(lc - 1);
    if g.is_compact() {
        return DepthResult::exact(lc - 1, COMPACT);
    }
    if let RealForm::Realification(x) = g {
        return DepthResult::exact(x.complex_depth() as u32, REALIFICATION);
    }
    if g.is_quasisplit() {
        return DepthResult::exact(lc - 1, QUASISPLIT);
    }
    match *g {
        RealForm::Exceptional(l) => DepthResult::exact(exceptional_depth(l), EXCEPTIONAL),
        RealForm::SpecialLinearH(_) => DepthResult::exact(4, RANK_ONE_FOUR),
        RealForm::SpecialOrthogonal(p, 1) if p % 2 == 1 && p >= 9 => DepthResult::exact(4, RANK_ONE_FOUR),
        RealForm::SOStar(k) => with_floor(DepthResult::interval(floor, 6 - zeta(k), SOSTAR)),
        RealForm::SymplecticPQ(p, q) => {
            let upper = 6 - delta(p, q) - delta(1, q);
            let mut r = with_floor(DepthResult::interval(4, upper, SP_PQ));
            r.exact = r.lower == r.upper;
            r
        }
        RealForm::SpecialOrthogonal(p, q) => with_floor(DepthResult::interval(floor, 8 - eta(p, q), SO_PQ)),
        RealForm::SpecialUnitary(p, q) => with_floor(DepthResult::interval(floor, 9 - eta(p, q), SU_PQ)),
        RealForm::SpecialLinearR(_) | RealForm::SymplecticSplit(_) | RealForm::Realification(_) => {
            unreachable!("{g} is quasisplit")
        }
    }
}

fn with_floor(mut r: DepthResult) -> DepthResult {
    r.rules_fired.push(NOT_THREE);
    r
}

/// Depth at most three, or `Deeper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SmallDepth {
    Zero,
    One,
    Two,
    Three,
    Deeper,
}

impl SmallDepth {
    pub fn value(self) -> Option<u32> {
        match self {
            Self::Zero => Some(0),
            Self::One => Some(1),
            Self::Two => Some(2),
            Self::Three => Some(3),
            Self::Deeper => None,
        }
    }
}

fn is_a1(g: &RealForm) -> bool {
    g.complexification() == (crate::rootdata::SimpleRootSystem::a(1), 1)
}

/// Decides whether λ(G) ≤ 3 and, if so, its value.
pub fn small_depth_classify(g: &ReductiveDescriptor) -> SmallDepth {
    let k = g.torus_dim();
    let dim = g.dimension();
    match dim {
        0 => return SmallDepth::Zero,
        1 => return SmallDepth::One,
        2 => return SmallDepth::Two,
        _ => {}
    }
    let factors = g.factors();
    match (factors, k) {
        ([], 3) => SmallDepth::Three,
        ([], _) => SmallDepth::Deeper,
        ([f], 0) if is_a1(f) => SmallDepth::Two,
        ([f], 1) if is_a1(f) => SmallDepth::Three,
        ([a, b], 0) if a == b && is_a1(a) => SmallDepth::Three,
        ([f], 0) => {
            let (rs, mult) = f.complexification();
            let three = if mult == 2 {
                rs.rank() == 1
            } else if f.is_compact() {
                rs.complex_depth() == 4
            } else {
                f.is_quasisplit()
                    && match rs.family() {
                        Family::A => rs.rank() == 2,
                        Family::B => rs.rank() != 3,
                        Family::C | Family::G2 | Family::F4 | Family::E7 | Family::E8 => true,
                        Family::D | Family::E6 => false,
                    }
            };
            if three {
                SmallDepth::Three
            } else {
                SmallDepth::Deeper
            }
        }
        _ => SmallDepth::Deeper,
    }
}

/// λ(G) for a reductive G = G₁ ⋯ G_m T^k.
pub fn depth_product(g: &ReductiveDescriptor) -> DepthResult {
    let k = g.torus_dim();
    let mut result = match g.factors() {
        [] => DepthResult::exact(k, TORUS),
        [f] if k == 0 => depth(f),
        factors => {
            let mut blocks: BTreeMap<RealForm, u32> = BTreeMap::new();
            for f in factors {
                *blocks.entry(f.isogeny_key()).or_default() += 1;
            }
            let m = factors.len() as u32;
            let per_block: Vec<(DepthResult, u32)> = blocks.iter().map(|(f, &mult)| (depth(f), mult)).collect();
            let mut rules: Vec<RuleFired> = Vec::new();
            if k > 0 {
                rules.push(TORUS);
            }
            let r = if let [(d, mult)] = per_block.as_slice() {
                rules.push(ISOTYPIC);
                rules.extend(d.rules_fired.iter().copied());
                DepthResult {
                    lower: d.lower + mult - 1 + k,
                    upper: d.upper + mult - 1 + k,
                    exact: d.exact,
                    rules_fired: rules,
                }
            } else {
                rules.push(HETEROGENEOUS);
                let lower = per_block.iter().map(|(d, _)| d.lower).max().unwrap_or(0) + m - 1 + k;
                let upper = per_block.iter().map(|(d, mult)| d.upper + mult - 1).sum::<u32>() + k;
                DepthResult { lower, upper, exact: lower == upper, rules_fired: rules }
            };
            r
        }
    };
    match small_depth_classify(g).value() {
        Some(v) if !result.exact => {
            debug_assert!(result.lower <= v && v <= result.upper, "{g}: {v} outside {result}");
            result.lower = v;
            result.upper = v;
            result.exact = true;
            result.rules_fired.push(SMALL_DEPTH);
        }
        Some(v) => debug_assert_eq!(v, result.lower, "{g}"),
        None if result.lower < 4 => {
            result.lower = 4;
            result.exact = result.lower == result.upper;
            result.rules_fired.push(SMALL_DEPTH);
        }
        None => {}
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> DepthResult {
        depth_product(&s.parse().unwrap())
    }

    #[test]
    fn anchors() {
        assert_eq!(d("SL(7,R)").value(), Some(5));
        assert_eq!(d("SO(9,1)").value(), Some(4));
        let so10 = d("SO*(10)");
        assert_eq!((so10.lower, so10.upper, so10.exact), (4, 5, false));
        assert_eq!(d("SO(14,7)").upper, 8);
        assert_eq!(d("Sp(1,1)").value(), Some(4));
        assert_eq!(d("EIX").value(), Some(5));
        assert_eq!(d("SL(2,C)").value(), Some(3));
        assert_eq!(d("SU(2)*SU(2)").value(), Some(3));
        assert_eq!(d("SL(2,R)*T(1)").value(), Some(3));
        assert_eq!(d("T(5)").value(), Some(5));
        let so71 = d("SO(7,1)");
        assert_eq!((so71.lower, so71.upper), (4, 5));
    }

    #[test]
    fn eta_clause_order() {
        assert_eq!(eta(10, 7), 3);
        assert_eq!(eta(14, 7), 0);
        assert_eq!(eta(15, 7), 1);
        assert_eq!(eta(9, 1), 3);
        assert_eq!(eta(6, 2), 2);
        assert_eq!(zeta(7), 0);
        assert_eq!(zeta(5), 1);
        assert_eq!(zeta(6), 0);
    }

    #[test]
    fn small_depth() {
        let c = |s: &str| small_depth_classify(&s.parse().unwrap());
        assert_eq!(c("SL(2,R)"), SmallDepth::Two);
        assert_eq!(c("Sp(6,R)"), SmallDepth::Three);
        assert_eq!(c("SU(2,1)"), SmallDepth::Three);
        assert_eq!(c("SU(3,1)"), SmallDepth::Deeper);
        assert_eq!(c("SU(2)*SL(2,R)"), SmallDepth::Deeper);
        assert_eq!(c("T(2)"), SmallDepth::Two);
    }
}
