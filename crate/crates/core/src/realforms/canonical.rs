//! Canonical descriptors for families given by raw parameters, resolving
//! low-rank isomorphisms to a single representative.

use super::{RealForm, ReductiveDescriptor};
use crate::rootdata::SimpleRootSystem;

fn one(g: RealForm) -> ReductiveDescriptor {
    ReductiveDescriptor::simple(g)
}

fn sl2r() -> RealForm {
    RealForm::SpecialLinearR(2)
}

fn su2() -> RealForm {
    RealForm::SpecialUnitary(2, 0)
}

pub fn canonical_slr(n: u32) -> ReductiveDescriptor {
    match n {
        0 | 1 => ReductiveDescriptor::trivial(),
        n => one(RealForm::SpecialLinearR(n)),
    }
}

pub fn canonical_slh(n: u32) -> ReductiveDescriptor {
    match n {
        0 => ReductiveDescriptor::trivial(),
        1 => one(su2()),
        n => one(RealForm::SpecialLinearH(n)),
    }
}

/// SU(p,q) in either parameter order; SU(n) is SU(n,0).
pub fn canonical_su(p: u32, q: u32) -> ReductiveDescriptor {
    let (p, q) = (p.max(q), p.min(q));
    match (p, q) {
        (0 | 1, 0) => ReductiveDescriptor::trivial(),
        (1, 1) => one(sl2r()),
        _ => one(RealForm::SpecialUnitary(p, q)),
    }
}

/// SO(p,q) in either parameter order; SO(n) is SO(n,0).
pub fn canonical_so(p: u32, q: u32) -> ReductiveDescriptor {
    let (p, q) = (p.max(q), p.min(q));
    match (p, q) {
        (2, 0) | (1, 1) => ReductiveDescriptor::torus(1),
        (0 | 1, _) => ReductiveDescriptor::trivial(),
        (3, 0) => one(su2()),
        (2, 1) => one(sl2r()),
        (4, 0) => ReductiveDescriptor::new(vec![su2(), su2()], 0),
        (3, 1) => one(RealForm::Realification(SimpleRootSystem::a(1))),
        (2, 2) => ReductiveDescriptor::new(vec![sl2r(), sl2r()], 0),
        (3, 2) => one(RealForm::SymplecticSplit(2)),
        (6, 0) => one(RealForm::SpecialUnitary(4, 0)),
        (5, 1) => one(RealForm::SpecialLinearH(2)),
        (4, 2) => one(RealForm::SpecialUnitary(2, 2)),
        (3, 3) => one(RealForm::SpecialLinearR(4)),
        _ => one(RealForm::SpecialOrthogonal(p, q)),
    }
}

/// SO*(2k), given k.
pub fn canonical_sostar(k: u32) -> ReductiveDescriptor {
    match k {
        0 => ReductiveDescriptor::trivial(),
        1 => ReductiveDescriptor::torus(1),
        2 => ReductiveDescriptor::new(vec![su2(), sl2r()], 0),
        3 => one(RealForm::SpecialUnitary(3, 1)),
        k => one(RealForm::SOStar(k)),
    }
}

/// Sp₂ₙ(ℝ), given n.
pub fn canonical_sp_split(n: u32) -> ReductiveDescriptor {
    match n {
        0 => ReductiveDescriptor::trivial(),
        1 => one(sl2r()),
        n => one(RealForm::SymplecticSplit(n)),
    }
}

/// Sp(p,q) in either parameter order; Sp(n) is Sp(n,0).
pub fn canonical_sp(p: u32, q: u32) -> ReductiveDescriptor {
    let (p, q) = (p.max(q), p.min(q));
    match (p, q) {
        (0, 0) => ReductiveDescriptor::trivial(),
        (1, 0) => one(su2()),
        _ => one(RealForm::SymplecticPQ(p, q)),
    }
}

/// SLₙ(ℂ) viewed as a real group.
pub fn canonical_sl_complex(n: u32) -> ReductiveDescriptor {
    match n {
        0 | 1 => ReductiveDescriptor::trivial(),
        n => one(RealForm::Realification(SimpleRootSystem::a(n - 1))),
    }
}

/// SOₙ(ℂ) viewed as a real group.
pub fn canonical_so_complex(n: u32) -> ReductiveDescriptor {
    let real = |x| RealForm::Realification(x);
    match n {
        0 | 1 => ReductiveDescriptor::trivial(),
        2 => ReductiveDescriptor::torus(2),
        3 => one(real(SimpleRootSystem::a(1))),
        4 => ReductiveDescriptor::new(vec![real(SimpleRootSystem::a(1)); 2], 0),
        6 => one(real(SimpleRootSystem::a(3))),
        n if n % 2 == 1 => one(real(SimpleRootSystem::b(n / 2))),
        n => one(real(SimpleRootSystem::d(n / 2))),
    }
}

/// Sp₂ₙ(ℂ) viewed as a real group, given n.
pub fn canonical_sp_complex(n: u32) -> ReductiveDescriptor {
    match n {
        0 => ReductiveDescriptor::trivial(),
        1 => one(RealForm::Realification(SimpleRootSystem::a(1))),
        n => one(RealForm::Realification(SimpleRootSystem::c(n))),
    }
}
