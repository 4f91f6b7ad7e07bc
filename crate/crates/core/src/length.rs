//! Length l(G): the longest unrefinable chain of connected subgroups.

use crate::realforms::{RealForm, ReductiveDescriptor};
use crate::rootdata::{Family, SimpleRootSystem};
use serde::Serialize;

/// Length of the compact real form of `rs`.
pub fn compact_simple_length(rs: SimpleRootSystem) -> u64 {
    let r = u64::from(rs.rank());
    match rs.family() {
        Family::A => 2 * (r + 1) - 2,
        Family::C => 3 * r - 1,
        Family::B => so_compact(2 * r + 1),
        Family::D => so_compact(2 * r),
        Family::G2 => 5,
        Family::F4 => 11,
        Family::E6 => 13,
        Family::E7 => 17,
        Family::E8 => 20,
    }
}

fn so_compact(n: u64) -> u64 {
    n + n / 4 - 1
}

/// The six summands of l(G) for a simple G, and their total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthBreakdown {
    pub phi_plus: u64,
    pub phi0_plus: u64,
    pub rank: u64,
    pub real_rank_derived: u64,
    pub kernel_rank: u64,
    pub kernel_length: u64,
    pub total: u64,
}

impl LengthBreakdown {
    fn assemble(phi_plus: u64, phi0_plus: u64, rank: u64, real_rank: u64, kernel: &[SimpleRootSystem]) -> Self {
        let kernel_rank: u64 = kernel.iter().map(|x| u64::from(x.rank())).sum();
        let kernel_length: u64 = kernel.iter().map(|&x| compact_simple_length(x)).sum();
        let total = phi_plus - phi0_plus + rank + real_rank - kernel_rank + kernel_length;
        Self { phi_plus, phi0_plus, rank, real_rank_derived: real_rank, kernel_rank, kernel_length, total }
    }

    /// Breakdown read off the rank and kernel tables.
    pub fn from_tables(g: &RealForm) -> Self {
        let (rs, mult) = g.complexification();
        let (r, rr) = g.ranks();
        let kernel = g.anisotropic_kernel();
        Self::assemble(
            u64::from(mult) * rs.positive_root_count(),
            kernel.positive_root_count(),
            u64::from(r),
            u64::from(rr),
            kernel.factors(),
        )
    }

    /// Breakdown derived from the Satake index: the real rank counts
    /// distinguished orbits and the kernel is the blackened subdiagram.
    /// A realification X_ℝ is treated as a form of X² with Δ₀ = ∅.
    pub fn from_satake(g: &RealForm) -> Self {
        if let RealForm::Realification(x) = g {
            let r = u64::from(x.rank());
            return Self::assemble(2 * x.positive_root_count(), 0, 2 * r, r, &[]);
        }
        let idx = g.satake_index().expect("simple real forms carry a Satake index");
        let kernel = idx.kernel_types();
        let phi0 = kernel.iter().map(|x| x.positive_root_count()).sum();
        Self::assemble(
            idx.system().positive_root_count(),
            phi0,
            idx.node_count() as u64,
            u64::from(idx.real_rank()),
            &kernel,
        )
    }
}

/// l(G) for a simple G. Compact forms use the compact base values and
/// realifications use 2|Φ⁺| + 3r.
pub fn simple_length(g: &RealForm) -> u64 {
    let rs = g.root_system();
    match g {
        RealForm::Realification(x) => 2 * x.positive_root_count() + 3 * u64::from(x.rank()),
        _ if g.is_compact() => compact_simple_length(rs),
        _ => LengthBreakdown::from_tables(g).total,
    }
}

/// Per-factor length report for a reductive group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub total: u64,
    pub torus_dim: u32,
    pub factors: Vec<FactorLength>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorLength {
    pub group: String,
    pub length: u64,
    pub breakdown: LengthBreakdown,
}

/// l(G) = k + Σ l(Gᵢ) for G = G₁ ⋯ G_m T^k.
pub fn length(g: &ReductiveDescriptor) -> LengthReport {
    let factors: Vec<FactorLength> = g
        .factors()
        .iter()
        .map(|f| {
            let length = simple_length(f);
            let breakdown = LengthBreakdown::from_satake(f);
            debug_assert_eq!(length, breakdown.total, "length routes disagree for {f}");
            FactorLength { group: f.to_string(), length, breakdown }
        })
        .collect();
    let total = u64::from(g.torus_dim()) + factors.iter().map(|f| f.length).sum::<u64>();
    LengthReport { total, torus_dim: g.torus_dim(), factors }
}

pub fn length_of(g: &ReductiveDescriptor) -> u64 {
    length(g).total
}

/// Λ_G: the length of the chain through the minimal parabolic, computed from
/// Satake data alone.
pub fn lambda_lower_bound(g: &ReductiveDescriptor) -> u64 {
    u64::from(g.torus_dim()) + g.factors().iter().map(|f| LengthBreakdown::from_satake(f).total).sum::<u64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> u64 {
        length_of(&s.parse().unwrap())
    }

    #[test]
    fn anchors() {
        assert_eq!(l("SU(4,2)"), 22);
        assert_eq!(l("Sp(2,2)"), 22);
        assert_eq!(l("SL(2,C)"), 5);
        assert_eq!(l("EIX"), 125);
        assert_eq!(l("1"), 0);
        assert_eq!(l("SO(7,2)"), 21);
        assert_eq!(l("SL(5,R)"), 18);
        assert_eq!(l("SO(9)"), 10);
        assert_eq!(l("SU(2)*SL(2,R)*T(3)"), 2 + 3 + 3);
    }

    #[test]
    fn compact_base_values() {
        assert_eq!(compact_simple_length(SimpleRootSystem::a(3)), 6);
        assert_eq!(compact_simple_length(SimpleRootSystem::b(4)), 10);
        assert_eq!(compact_simple_length(SimpleRootSystem::exceptional(Family::E8)), 20);
        assert_eq!(compact_simple_length(SimpleRootSystem::b(2)), compact_simple_length(SimpleRootSystem::c(2)));
    }
}
