#![allow(dead_code)]

use realgroups::realforms::{ExceptionalLabel, RealForm};
use realgroups::rootdata::{Family, SimpleRootSystem};

/// Size parameter bounded by a sweep: p + q, n or k for the classical
/// families, rank + 1 for realifications.
pub fn size(g: &RealForm) -> u32 {
    match *g {
        RealForm::SpecialLinearR(n) | RealForm::SpecialLinearH(n) | RealForm::SymplecticSplit(n) => n,
        RealForm::SpecialUnitary(p, q) | RealForm::SpecialOrthogonal(p, q) | RealForm::SymplecticPQ(p, q) => p + q,
        RealForm::SOStar(k) => k,
        RealForm::Realification(x) => x.rank() + 1,
        RealForm::Exceptional(_) => 0,
    }
}

/// Every simple descriptor of size at most `bound`, exceptional labels and
/// realifications included, in a fixed order.
pub fn sweep(bound: u32) -> Vec<RealForm> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let (lo, hi) = family.rank_range();
        for rank in lo..=hi.min(bound) {
            let x = SimpleRootSystem::new(family, rank).unwrap();
            out.extend(RealForm::real_forms_of(x).into_iter().filter(|g| size(g) <= bound));
            if rank < bound {
                out.push(RealForm::Realification(x));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn exceptional() -> Vec<RealForm> {
    ExceptionalLabel::ALL.iter().map(|l| RealForm::Exceptional(*l)).collect()
}

pub fn g(s: &str) -> RealForm {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}
