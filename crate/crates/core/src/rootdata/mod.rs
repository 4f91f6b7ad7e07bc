//! Root-system arithmetic for the simple Dynkin families.

mod dynkin;

pub use dynkin::{DynkinDiagram, NodeId};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest rank accepted for the classical families. Keeps every derived
/// quantity comfortably inside `u64`.
pub const MAX_RANK: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("rank {rank} is not admissible for family {family}")]
    InvalidRank { family: Family, rank: u32 },
    #[error("unknown Dynkin family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// Admissible rank range, inclusive.
    pub fn rank_range(self) -> (u32, u32) {
        match self {
            Family::A => (1, MAX_RANK),
            Family::B | Family::C => (2, MAX_RANK),
            Family::D => (4, MAX_RANK),
            Family::E6 => (6, 6),
            Family::E7 => (7, 7),
            Family::E8 => (8, 8),
            Family::F4 => (4, 4),
            Family::G2 => (2, 2),
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.symbol() == upper)
            .ok_or_else(|| RootDataError::UnknownFamily(s.to_string()))
    }
}

/// A simple root system: a Dynkin family together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleRootSystem {
    family: Family,
    rank: u32,
}

impl SimpleRootSystem {
    pub fn new(family: Family, rank: u32) -> Result<Self, RootDataError> {
        let (lo, hi) = family.rank_range();
        if rank < lo || rank > hi {
            return Err(RootDataError::InvalidRank { family, rank });
        }
        Ok(Self { family, rank })
    }

    /// The exceptional system of the given family (its rank is implied).
    pub fn exceptional(family: Family) -> Self {
        let (rank, _) = family.rank_range();
        assert!(!family.is_classical(), "{family} is not exceptional");
        Self { family, rank }
    }

    pub(crate) const fn raw(family: Family, rank: u32) -> Self {
        Self { family, rank }
    }

    pub fn a(rank: u32) -> Self {
        Self::new(Family::A, rank).expect("admissible A rank")
    }
    pub fn b(rank: u32) -> Self {
        Self::new(Family::B, rank).expect("admissible B rank")
    }
    pub fn c(rank: u32) -> Self {
        Self::new(Family::C, rank).expect("admissible C rank")
    }
    pub fn d(rank: u32) -> Self {
        Self::new(Family::D, rank).expect("admissible D rank")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// |Φ⁺|
    pub fn positive_root_count(&self) -> u64 {
        let n = u64::from(self.rank);
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }

    pub fn dimension(&self) -> u64 {
        2 * self.positive_root_count() + u64::from(self.rank)
    }

    /// Length of the simple complex group: dim(B) + r.
    pub fn complex_length(&self) -> u64 {
        self.positive_root_count() + 2 * u64::from(self.rank)
    }

    /// Depth of the simple complex group.
    pub fn complex_depth(&self) -> u64 {
        match (self.family, self.rank) {
            (Family::A, 1) => 3,
            (Family::A, 6) => 6,
            (Family::A, r) if r >= 3 => 5,
            (Family::B, 3) | (Family::D, _) | (Family::E6, _) => 5,
            _ => 4,
        }
    }

    /// Next member of the standard descent towards A₁ used for depth chains:
    /// A₂ₖ₋₁ > Cₖ, A₂ₖ > Bₖ (A₆ > B₃ > G₂), D₄ > A₂, Dₖ > Bₖ₋₁, E₆ > F₄, and
    /// everything else directly to A₁.
    pub fn descent_step(&self) -> Option<SimpleRootSystem> {
        let r = self.rank;
        let next = match self.family {
            Family::A if r == 1 => return None,
            Family::A if r == 2 => Self::a(1),
            Family::A if r % 2 == 1 => Self::c(r.div_ceil(2)),
            Family::A => Self::b(r / 2),
            Family::B if r == 3 => Self::exceptional(Family::G2),
            Family::D if r == 4 => Self::a(2),
            Family::D => Self::b(r - 1),
            Family::E6 => Self::exceptional(Family::F4),
            Family::B | Family::C | Family::E7 | Family::E8 | Family::F4 | Family::G2 => Self::a(1),
        };
        Some(next)
    }

    /// The full descent chain starting at `self` and ending at A₁.
    pub fn descent_chain(&self) -> Vec<SimpleRootSystem> {
        let mut chain = vec![*self];
        while let Some(next) = chain.last().and_then(|x| x.descent_step()) {
            chain.push(next);
        }
        chain
    }

    pub fn dynkin(&self) -> DynkinDiagram {
        DynkinDiagram::of(*self)
    }

    /// Isogeny-insensitive normal form: B₂ and C₂ coincide.
    pub fn isogeny_normal(&self) -> SimpleRootSystem {
        match (self.family, self.rank) {
            (Family::B, 2) => Self::c(2),
            _ => *self,
        }
    }
}

impl fmt::Display for SimpleRootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}{}", self.family, self.rank)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

impl FromStr for SimpleRootSystem {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Ok(f) = s.parse::<Family>() {
            if !f.is_classical() {
                return Ok(Self::exceptional(f));
            }
        }
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let family: Family = head.parse()?;
        let rank: u32 = tail
            .parse()
            .map_err(|_| RootDataError::UnknownFamily(s.to_string()))?;
        Self::new(family, rank)
    }
}

pub fn positive_root_count(rs: SimpleRootSystem) -> u64 {
    rs.positive_root_count()
}

pub fn complex_length(rs: SimpleRootSystem) -> u64 {
    rs.complex_length()
}

pub fn complex_depth(rs: SimpleRootSystem) -> u64 {
    rs.complex_depth()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_ranges_are_enforced() {
        assert!(SimpleRootSystem::new(Family::A, 0).is_err());
        assert!(SimpleRootSystem::new(Family::B, 1).is_err());
        assert!(SimpleRootSystem::new(Family::C, 1).is_err());
        assert!(SimpleRootSystem::new(Family::D, 3).is_err());
        assert!(SimpleRootSystem::new(Family::E6, 7).is_err());
        assert!(SimpleRootSystem::new(Family::G2, 2).is_ok());
        assert!(SimpleRootSystem::new(Family::A, MAX_RANK + 1).is_err());
    }

    #[test]
    fn anchors() {
        assert_eq!(SimpleRootSystem::a(1).positive_root_count(), 1);
        assert_eq!(SimpleRootSystem::exceptional(Family::E8).positive_root_count(), 120);
        assert_eq!(SimpleRootSystem::d(4).positive_root_count(), 12);
        assert_eq!(SimpleRootSystem::a(1).complex_length(), 3);
        assert_eq!(SimpleRootSystem::exceptional(Family::E8).complex_length(), 136);
        assert_eq!(SimpleRootSystem::c(10).complex_length(), 120);
        assert_eq!(SimpleRootSystem::a(6).complex_depth(), 6);
        assert_eq!(SimpleRootSystem::b(3).complex_depth(), 5);
        assert_eq!(SimpleRootSystem::exceptional(Family::G2).complex_depth(), 4);
    }

    #[test]
    fn descent_length_matches_complex_depth() {
        for family in Family::ALL {
            let (lo, hi) = family.rank_range();
            for rank in lo..=hi.min(30) {
                let rs = SimpleRootSystem::new(family, rank).unwrap();
                let steps = rs.descent_chain().len() as u64 - 1;
                assert_eq!(steps + 3, rs.complex_depth(), "{rs}");
            }
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["A1", "B3", "C10", "D4", "E6", "F4", "G2"] {
            let rs: SimpleRootSystem = s.parse().unwrap();
            assert_eq!(rs.to_string(), s);
        }
    }
}
