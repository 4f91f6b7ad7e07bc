//! Real forms of simple groups, reductive products, and their structural data.

mod canonical;
mod json;
mod parse;
mod satake;

pub use canonical::*;
pub use json::{DescriptorJson, ReductiveJson};
pub use parse::{parse, parse_simple};
pub use satake::SatakeIndex;

use crate::rootdata::{Family, SimpleRootSystem};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest integer parameter accepted by the parser and constructors.
pub const MAX_PARAM: u32 = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealFormError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("expected a simple group, found `{0}`")]
    NotSimple(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalLabel {
    GI,
    G2c,
    FI,
    FII,
    F4c,
    EI,
    EII,
    EIII,
    EIV,
    E6c,
    EV,
    EVI,
    EVII,
    E7c,
    EVIII,
    EIX,
    E8c,
}

impl ExceptionalLabel {
    pub const ALL: [ExceptionalLabel; 17] = [
        Self::GI,
        Self::G2c,
        Self::FI,
        Self::FII,
        Self::F4c,
        Self::EI,
        Self::EII,
        Self::EIII,
        Self::EIV,
        Self::E6c,
        Self::EV,
        Self::EVI,
        Self::EVII,
        Self::E7c,
        Self::EVIII,
        Self::EIX,
        Self::E8c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::GI => "GI",
            Self::G2c => "G2c",
            Self::FI => "FI",
            Self::FII => "FII",
            Self::F4c => "F4c",
            Self::EI => "EI",
            Self::EII => "EII",
            Self::EIII => "EIII",
            Self::EIV => "EIV",
            Self::E6c => "E6c",
            Self::EV => "EV",
            Self::EVI => "EVI",
            Self::EVII => "EVII",
            Self::E7c => "E7c",
            Self::EVIII => "EVIII",
            Self::EIX => "EIX",
            Self::E8c => "E8c",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Self::GI | Self::G2c => Family::G2,
            Self::FI | Self::FII | Self::F4c => Family::F4,
            Self::EI | Self::EII | Self::EIII | Self::EIV | Self::E6c => Family::E6,
            Self::EV | Self::EVI | Self::EVII | Self::E7c => Family::E7,
            Self::EVIII | Self::EIX | Self::E8c => Family::E8,
        }
    }

    pub fn compact(family: Family) -> Option<Self> {
        Some(match family {
            Family::G2 => Self::G2c,
            Family::F4 => Self::F4c,
            Family::E6 => Self::E6c,
            Family::E7 => Self::E7c,
            Family::E8 => Self::E8c,
            _ => return None,
        })
    }

    pub fn split(family: Family) -> Option<Self> {
        Some(match family {
            Family::G2 => Self::GI,
            Family::F4 => Self::FI,
            Family::E6 => Self::EI,
            Family::E7 => Self::EV,
            Family::E8 => Self::EVIII,
            _ => return None,
        })
    }

    /// (rank, real rank)
    pub fn ranks(self) -> (u32, u32) {
        let r = self.family().rank_range().0;
        let rr = match self {
            Self::GI => 2,
            Self::FI => 4,
            Self::FII => 1,
            Self::EI => 6,
            Self::EII => 4,
            Self::EIII | Self::EIV => 2,
            Self::EV => 7,
            Self::EVI => 4,
            Self::EVII => 3,
            Self::EVIII => 8,
            Self::EIX => 4,
            Self::G2c | Self::F4c | Self::E6c | Self::E7c | Self::E8c => 0,
        };
        (r, rr)
    }

    pub fn kernel(self) -> Vec<SimpleRootSystem> {
        let x = SimpleRootSystem::exceptional;
        match self {
            Self::GI | Self::FI | Self::EI | Self::EII | Self::EV | Self::EVIII => vec![],
            Self::FII => vec![SimpleRootSystem::b(3)],
            Self::EIII => vec![SimpleRootSystem::a(3)],
            Self::EIV | Self::EVII | Self::EIX => vec![SimpleRootSystem::d(4)],
            Self::EVI => vec![SimpleRootSystem::a(1); 3],
            Self::G2c => vec![x(Family::G2)],
            Self::F4c => vec![x(Family::F4)],
            Self::E6c => vec![x(Family::E6)],
            Self::E7c => vec![x(Family::E7)],
            Self::E8c => vec![x(Family::E8)],
        }
    }
}

impl fmt::Display for ExceptionalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalLabel {
    type Err = RealFormError;

    /// Accepts roman-numeral labels (`EIII`) and family-qualified synonyms
    /// (`E6_III`, `E6III`), case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace(['_', ' '], "");
        let direct = Self::ALL.into_iter().find(|l| l.name().to_ascii_uppercase() == key);
        if let Some(l) = direct {
            return Ok(l);
        }
        let synonym = Self::ALL.into_iter().find(|l| {
            let name = l.name().to_ascii_uppercase();
            let fam = l.family().symbol();
            name.strip_prefix(&fam[..1])
                .map(|numeral| format!("{fam}{numeral}") == key)
                .unwrap_or(false)
        });
        synonym.ok_or_else(|| RealFormError::Parse {
            position: 0,
            message: format!("unknown exceptional label `{s}`"),
        })
    }
}

/// A real form of a simple complex group, or the realification of one.
///
/// Values are canonical: parameters are ordered `p >= q` and low-rank
/// isogeny aliases are already resolved (see [`parse`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealForm {
    /// SLₙ(ℝ), n ≥ 2
    SpecialLinearR(u32),
    /// SLₙ(ℍ), n ≥ 2
    SpecialLinearH(u32),
    /// SU(p,q), compact when q = 0
    SpecialUnitary(u32, u32),
    /// SO(p,q), compact when q = 0
    SpecialOrthogonal(u32, u32),
    /// SO*(2k), k ≥ 4
    SOStar(u32),
    /// Sp₂ₙ(ℝ), n ≥ 2
    SymplecticSplit(u32),
    /// Sp(p,q), compact when q = 0
    SymplecticPQ(u32, u32),
    Exceptional(ExceptionalLabel),
    /// X viewed as a real group.
    Realification(SimpleRootSystem),
}

fn range(msg: impl Into<String>) -> RealFormError {
    RealFormError::Range(msg.into())
}

impl RealForm {
    /// Checks that `self` is a canonical descriptor.
    pub fn validate(&self) -> Result<(), RealFormError> {
        let cap = |v: u32| {
            if v > MAX_PARAM {
                Err(range(format!("parameter {v} exceeds {MAX_PARAM}")))
            } else {
                Ok(())
            }
        };
        match *self {
            Self::SpecialLinearR(n) | Self::SpecialLinearH(n) | Self::SymplecticSplit(n) => {
                cap(n)?;
                if n < 2 {
                    return Err(range(format!("{self:?} needs n >= 2")));
                }
            }
            Self::SOStar(k) => {
                cap(k)?;
                if k < 4 {
                    return Err(range("SO*(2k) needs k >= 4"));
                }
            }
            Self::SpecialUnitary(p, q) => {
                cap(p)?;
                if p < q || p + q < 2 || (p, q) == (1, 1) {
                    return Err(range(format!("SU({p},{q}) is not canonical")));
                }
            }
            Self::SpecialOrthogonal(p, q) => {
                cap(p)?;
                let alias = matches!((p, q), (3, 2) | (6, 0) | (5, 1) | (4, 2) | (3, 3));
                if p < q || p + q < 5 || alias {
                    return Err(range(format!("SO({p},{q}) is not canonical")));
                }
            }
            Self::SymplecticPQ(p, q) => {
                cap(p)?;
                if p < q || p + q < 2 {
                    return Err(range(format!("Sp({p},{q}) is not canonical")));
                }
            }
            Self::Exceptional(_) => {}
            Self::Realification(x) => {
                SimpleRootSystem::new(x.family(), x.rank()).map_err(|e| range(e.to_string()))?;
            }
        }
        Ok(())
    }

    /// Root system of the complexification and its multiplicity
    /// (2 for realifications, whose complexification is X²).
    pub fn complexification(&self) -> (SimpleRootSystem, u32) {
        let rs = match *self {
            Self::SpecialLinearR(n) => SimpleRootSystem::a(n - 1),
            Self::SpecialLinearH(n) => SimpleRootSystem::a(2 * n - 1),
            Self::SpecialUnitary(p, q) => SimpleRootSystem::a(p + q - 1),
            Self::SpecialOrthogonal(p, q) => so_type(p + q),
            Self::SOStar(k) => SimpleRootSystem::d(k),
            Self::SymplecticSplit(n) => SimpleRootSystem::c(n),
            Self::SymplecticPQ(p, q) => SimpleRootSystem::c(p + q),
            Self::Exceptional(l) => SimpleRootSystem::exceptional(l.family()),
            Self::Realification(x) => return (x, 2),
        };
        (rs, 1)
    }

    pub fn root_system(&self) -> SimpleRootSystem {
        self.complexification().0
    }

    /// (r(G), r_ℝ(G))
    pub fn ranks(&self) -> (u32, u32) {
        match *self {
            Self::SpecialLinearR(n) => (n - 1, n - 1),
            Self::SpecialLinearH(n) => (2 * n - 1, n - 1),
            Self::SpecialUnitary(p, q) => (p + q - 1, q),
            Self::SpecialOrthogonal(p, q) => ((p + q) / 2, q),
            Self::SOStar(k) => (k, k / 2),
            Self::SymplecticSplit(n) => (n, n),
            Self::SymplecticPQ(p, q) => (p + q, q),
            Self::Exceptional(l) => l.ranks(),
            Self::Realification(x) => (2 * x.rank(), x.rank()),
        }
    }

    pub fn rank(&self) -> u32 {
        self.ranks().0
    }

    pub fn real_rank(&self) -> u32 {
        self.ranks().1
    }

    pub fn dimension(&self) -> u64 {
        let (rs, mult) = self.complexification();
        rs.dimension() * u64::from(mult)
    }

    pub fn anisotropic_kernel(&self) -> AnisotropicKernel {
        let a1 = SimpleRootSystem::a(1);
        let factors = match *self {
            Self::SpecialLinearR(_) | Self::SymplecticSplit(_) | Self::Realification(_) => vec![],
            Self::SpecialLinearH(n) => vec![a1; n as usize],
            Self::SpecialUnitary(p, q) => {
                if p - q >= 2 {
                    vec![SimpleRootSystem::a(p - q - 1)]
                } else {
                    vec![]
                }
            }
            Self::SpecialOrthogonal(p, q) => compact_so_kernel(p - q),
            Self::SOStar(k) => vec![a1; (k / 2) as usize],
            Self::SymplecticPQ(p, q) => {
                let mut v = vec![a1; q as usize];
                match p - q {
                    0 => {}
                    1 => v.push(a1),
                    d => v.push(SimpleRootSystem::c(d)),
                }
                v
            }
            Self::Exceptional(l) => l.kernel(),
        };
        AnisotropicKernel::new(factors)
    }

    pub fn is_compact(&self) -> bool {
        self.real_rank() == 0
    }

    pub fn is_quasisplit(&self) -> bool {
        self.anisotropic_kernel().is_empty()
    }

    pub fn is_split(&self) -> bool {
        if matches!(self, Self::Realification(_)) || !self.is_quasisplit() {
            return false;
        }
        self.satake_index().is_ok_and(|s| s.pairing_is_trivial())
    }

    /// (is_compact, is_split, is_quasisplit)
    pub fn predicates(&self) -> (bool, bool, bool) {
        (self.is_compact(), self.is_split(), self.is_quasisplit())
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self, Self::Exceptional(_))
    }

    pub fn satake_index(&self) -> Result<SatakeIndex, RealFormError> {
        SatakeIndex::of(self)
    }

    /// Identity component of a maximal compact subgroup.
    pub fn maximal_compact(&self) -> ReductiveDescriptor {
        use ExceptionalLabel as L;
        let su = |n| canonical_su(n, 0);
        let so = |n| canonical_so(n, 0);
        let sp = |n| canonical_sp(n, 0);
        let t = ReductiveDescriptor::torus(1);
        let ex = |l| ReductiveDescriptor::simple(Self::Exceptional(l));
        match *self {
            _ if self.is_compact() => ReductiveDescriptor::simple(*self),
            Self::SpecialLinearR(n) => so(n),
            Self::SpecialLinearH(n) => sp(n),
            Self::SpecialUnitary(p, q) => su(p).product(&su(q)).product(&t),
            Self::SpecialOrthogonal(p, q) => so(p).product(&so(q)),
            Self::SOStar(k) | Self::SymplecticSplit(k) => su(k).product(&t),
            Self::SymplecticPQ(p, q) => sp(p).product(&sp(q)),
            Self::Realification(x) => ReductiveDescriptor::simple(Self::compact_form(x)),
            Self::Exceptional(l) => match l {
                L::GI => su(2).product(&su(2)),
                L::FI => sp(3).product(&su(2)),
                L::FII => so(9),
                L::EI => sp(4),
                L::EII => su(6).product(&su(2)),
                L::EIII => so(10).product(&t),
                L::EIV => ex(L::F4c),
                L::EV => su(8),
                L::EVI => so(12).product(&su(2)),
                L::EVII => ex(L::E6c).product(&t),
                L::EVIII => so(16),
                L::EIX => ex(L::E7c).product(&su(2)),
                L::G2c | L::F4c | L::E6c | L::E7c | L::E8c => unreachable!("compact"),
            },
        }
    }

    /// The compact real form of a simple complex group.
    pub fn compact_form(x: SimpleRootSystem) -> RealForm {
        let r = x.rank();
        match x.family() {
            Family::A => Self::SpecialUnitary(r + 1, 0),
            Family::B => Self::SpecialOrthogonal(2 * r + 1, 0),
            Family::C => Self::SymplecticPQ(r, 0),
            Family::D => Self::SpecialOrthogonal(2 * r, 0),
            f => Self::Exceptional(ExceptionalLabel::compact(f).expect("exceptional")),
        }
    }

    /// The split real form of a simple complex group.
    pub fn split_form(x: SimpleRootSystem) -> RealForm {
        let r = x.rank();
        match x.family() {
            Family::A => Self::SpecialLinearR(r + 1),
            Family::B if r == 2 => Self::SymplecticSplit(2),
            Family::B => Self::SpecialOrthogonal(r + 1, r),
            Family::C => Self::SymplecticSplit(r),
            Family::D => Self::SpecialOrthogonal(r, r),
            f => Self::Exceptional(ExceptionalLabel::split(f).expect("exceptional")),
        }
    }

    /// Every real form of `x` up to isomorphism, in canonical order.
    pub fn real_forms_of(x: SimpleRootSystem) -> Vec<RealForm> {
        let r = x.rank();
        let mut out: Vec<ReductiveDescriptor> = Vec::new();
        match x.family() {
            Family::A => {
                let n = r + 1;
                out.push(ReductiveDescriptor::simple(Self::SpecialLinearR(n)));
                if n.is_multiple_of(2) && n >= 4 {
                    out.push(ReductiveDescriptor::simple(Self::SpecialLinearH(n / 2)));
                }
                out.extend((0..=n / 2).map(|q| canonical_su(n - q, q)));
            }
            Family::B | Family::D => {
                let n = if x.family() == Family::B { 2 * r + 1 } else { 2 * r };
                out.extend((0..=n / 2).map(|q| canonical_so(n - q, q)));
                if x.family() == Family::D {
                    out.push(ReductiveDescriptor::simple(Self::SOStar(r)));
                }
            }
            Family::C => {
                out.push(ReductiveDescriptor::simple(Self::SymplecticSplit(r)));
                out.extend((0..=r / 2).map(|q| canonical_sp(r - q, q)));
            }
            f => out.extend(
                ExceptionalLabel::ALL
                    .into_iter()
                    .filter(|l| l.family() == f)
                    .map(|l| ReductiveDescriptor::simple(Self::Exceptional(l))),
            ),
        }
        let mut forms: Vec<RealForm> = out
            .iter()
            .map(|d| *d.as_simple().expect("real forms of simple groups are simple"))
            .collect();
        forms.sort();
        forms.dedup();
        forms
    }

    /// Normal form identifying isomorphic descriptors that the canonical
    /// parameterisation keeps apart: B₂ = C₂ forms and SO(6,2) = SO*(8).
    pub fn isogeny_key(&self) -> RealForm {
        match *self {
            Self::SpecialOrthogonal(5, 0) => Self::SymplecticPQ(2, 0),
            Self::SpecialOrthogonal(4, 1) => Self::SymplecticPQ(1, 1),
            Self::SpecialOrthogonal(6, 2) => Self::SOStar(4),
            Self::Realification(x) => Self::Realification(x.isogeny_normal()),
            other => other,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&DescriptorJson::from(self)).expect("descriptor serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, RealFormError> {
        let raw: DescriptorJson =
            serde_json::from_str(s).map_err(|e| RealFormError::Parse { position: e.column(), message: e.to_string() })?;
        raw.try_into()
    }
}

fn so_type(n: u32) -> SimpleRootSystem {
    if n % 2 == 1 {
        SimpleRootSystem::b(n / 2)
    } else {
        SimpleRootSystem::d(n / 2)
    }
}

/// Kernel of SO(p,q) in terms of d = p − q: the compact SO(d) for d ≥ 3.
fn compact_so_kernel(d: u32) -> Vec<SimpleRootSystem> {
    let a1 = SimpleRootSystem::a(1);
    match d {
        0..=2 => vec![],
        3 => vec![a1],
        4 => vec![a1, a1],
        5 => vec![SimpleRootSystem::b(2)],
        6 => vec![SimpleRootSystem::a(3)],
        _ => vec![so_type(d)],
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::SpecialLinearR(n) => write!(f, "SL({n},R)"),
            Self::SpecialLinearH(n) => write!(f, "SL({n},H)"),
            Self::SpecialUnitary(n, 0) => write!(f, "SU({n})"),
            Self::SpecialUnitary(p, q) => write!(f, "SU({p},{q})"),
            Self::SpecialOrthogonal(n, 0) => write!(f, "SO({n})"),
            Self::SpecialOrthogonal(p, q) => write!(f, "SO({p},{q})"),
            Self::SOStar(k) => write!(f, "SOstar({})", 2 * k),
            Self::SymplecticSplit(n) => write!(f, "Sp({},R)", 2 * n),
            Self::SymplecticPQ(n, 0) => write!(f, "Sp({n})"),
            Self::SymplecticPQ(p, q) => write!(f, "Sp({p},{q})"),
            Self::Exceptional(l) => write!(f, "{l}"),
            Self::Realification(x) => {
                let r = x.rank();
                match x.family() {
                    Family::A => write!(f, "SL({},C)", r + 1),
                    Family::B => write!(f, "SO({},C)", 2 * r + 1),
                    Family::C => write!(f, "Sp({},C)", 2 * r),
                    Family::D => write!(f, "SO({},C)", 2 * r),
                    fam => write!(f, "{fam}(C)"),
                }
            }
        }
    }
}

impl FromStr for RealForm {
    type Err = RealFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_simple(s)
    }
}

/// Compact semisimple anisotropic kernel C_G(S)′ as a sorted list of
/// compact simple factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AnisotropicKernel {
    compact_factors: Vec<SimpleRootSystem>,
}

impl AnisotropicKernel {
    pub fn new(mut compact_factors: Vec<SimpleRootSystem>) -> Self {
        compact_factors.sort();
        Self { compact_factors }
    }

    pub fn factors(&self) -> &[SimpleRootSystem] {
        &self.compact_factors
    }

    pub fn is_empty(&self) -> bool {
        self.compact_factors.is_empty()
    }

    pub fn rank(&self) -> u64 {
        self.compact_factors.iter().map(|x| u64::from(x.rank())).sum()
    }

    pub fn positive_root_count(&self) -> u64 {
        self.compact_factors.iter().map(|x| x.positive_root_count()).sum()
    }

    /// Factors up to isogeny (B₂ = C₂), sorted.
    pub fn isogeny_normal(&self) -> Vec<SimpleRootSystem> {
        let mut v: Vec<_> = self.compact_factors.iter().map(|x| x.isogeny_normal()).collect();
        v.sort();
        v
    }

    pub fn as_group(&self) -> ReductiveDescriptor {
        let factors = self.compact_factors.iter().map(|&x| RealForm::compact_form(x)).collect();
        ReductiveDescriptor::new(factors, 0)
    }
}

impl fmt::Display for AnisotropicKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.compact_factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.compact_factors.iter().map(|x| format!("({x})c")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// A commuting product of simple real groups and a central torus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReductiveDescriptor {
    factors: Vec<RealForm>,
    torus_dim: u32,
}

impl ReductiveDescriptor {
    pub fn new(mut factors: Vec<RealForm>, torus_dim: u32) -> Self {
        factors.sort();
        Self { factors, torus_dim }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn torus(k: u32) -> Self {
        Self::new(vec![], k)
    }

    pub fn simple(g: RealForm) -> Self {
        Self::new(vec![g], 0)
    }

    pub fn factors(&self) -> &[RealForm] {
        &self.factors
    }

    pub fn torus_dim(&self) -> u32 {
        self.torus_dim
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.torus_dim == 0
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus_dim == 0
    }

    pub fn as_simple(&self) -> Option<&RealForm> {
        match self.factors.as_slice() {
            [g] if self.torus_dim == 0 => Some(g),
            _ => None,
        }
    }

    pub fn product(&self, other: &ReductiveDescriptor) -> ReductiveDescriptor {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::new(factors, self.torus_dim + other.torus_dim)
    }

    pub fn dimension(&self) -> u64 {
        u64::from(self.torus_dim) + self.factors.iter().map(|g| g.dimension()).sum::<u64>()
    }

    pub fn is_compact(&self) -> bool {
        self.factors.iter().all(|g| g.is_compact())
    }

    /// Replaces factor `index` by `replacement`.
    pub fn replace_factor(&self, index: usize, replacement: &ReductiveDescriptor) -> ReductiveDescriptor {
        let mut factors = self.factors.clone();
        factors.remove(index);
        factors.extend_from_slice(&replacement.factors);
        Self::new(factors, self.torus_dim + replacement.torus_dim)
    }

    pub fn remove_factor(&self, index: usize) -> ReductiveDescriptor {
        self.replace_factor(index, &Self::trivial())
    }

    pub fn with_torus(&self, torus_dim: u32) -> ReductiveDescriptor {
        Self { factors: self.factors.clone(), torus_dim }
    }

    /// Descriptor with every factor replaced by its isogeny key.
    pub fn isogeny_canonical(&self) -> ReductiveDescriptor {
        Self::new(self.factors.iter().map(|g| g.isogeny_key()).collect(), self.torus_dim)
    }

    pub fn validate(&self) -> Result<(), RealFormError> {
        self.factors.iter().try_for_each(|g| g.validate())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ReductiveJson::from(self)).expect("descriptor serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, RealFormError> {
        let raw: ReductiveJson =
            serde_json::from_str(s).map_err(|e| RealFormError::Parse { position: e.column(), message: e.to_string() })?;
        raw.try_into()
    }
}

impl From<RealForm> for ReductiveDescriptor {
    fn from(g: RealForm) -> Self {
        Self::simple(g)
    }
}

impl fmt::Display for ReductiveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|g| g.to_string()).collect();
        if self.torus_dim > 0 {
            parts.push(format!("T({})", self.torus_dim));
        }
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for ReductiveDescriptor {
    type Err = RealFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> RealForm {
        s.parse().unwrap()
    }

    #[test]
    fn table_ranks() {
        assert_eq!(g("SL(3,H)").ranks(), (5, 2));
        assert_eq!(g("EIII").ranks(), (6, 2));
        assert_eq!(g("SU(5)").ranks(), (4, 0));
        assert_eq!(g("SOstar(10)").ranks(), (5, 2));
        assert_eq!(g("SL(3,C)").ranks(), (4, 2));
    }

    #[test]
    fn kernels() {
        let a1 = SimpleRootSystem::a(1);
        assert_eq!(g("SU(4,2)").anisotropic_kernel().factors(), &[a1]);
        assert_eq!(g("Sp(3,1)").anisotropic_kernel().factors(), &[a1, SimpleRootSystem::c(2)]);
        assert_eq!(g("EIX").anisotropic_kernel().factors(), &[SimpleRootSystem::d(4)]);
        assert_eq!(g("SO(9,2)").anisotropic_kernel().factors(), &[SimpleRootSystem::b(3)]);
        assert!(g("SL(5,R)").anisotropic_kernel().is_empty());
    }

    #[test]
    fn predicate_anchors() {
        assert_eq!(g("SO(5,4)").predicates(), (false, true, true));
        assert_eq!(g("SU(4,3)").predicates(), (false, false, true));
        assert_eq!(g("FII").predicates(), (false, false, false));
        assert_eq!(g("Sp(3)").predicates(), (true, false, false));
        assert_eq!(g("SO(6,4)").predicates(), (false, false, true));
        assert_eq!(g("SL(2,C)").predicates(), (false, false, true));
    }

    #[test]
    fn maximal_compacts() {
        assert_eq!(g("SL(3,H)").maximal_compact().to_string(), "Sp(3)");
        assert_eq!(g("EIII").maximal_compact().to_string(), "SO(10)*T(1)");
        assert_eq!(g("G2(C)").maximal_compact().to_string(), "G2c");
        assert_eq!(g("SU(2,1)").maximal_compact().to_string(), "SU(2)*T(1)");
        assert_eq!(g("SL(4,R)").maximal_compact().to_string(), "SU(2)*SU(2)");
    }

    #[test]
    fn real_form_counts() {
        // A3: SL4R, SL2H, SU(4), SU(3,1), SU(2,2)
        assert_eq!(RealForm::real_forms_of(SimpleRootSystem::a(3)).len(), 5);
        // D4: SO(8), SO(7,1), SO(6,2), SO(5,3), SO(4,4), SO*(8)
        assert_eq!(RealForm::real_forms_of(SimpleRootSystem::d(4)).len(), 6);
        assert_eq!(RealForm::real_forms_of(SimpleRootSystem::exceptional(Family::E6)).len(), 5);
        for x in [SimpleRootSystem::a(5), SimpleRootSystem::b(4), SimpleRootSystem::c(3)] {
            for f in RealForm::real_forms_of(x) {
                assert_eq!(f.root_system().isogeny_normal(), x.isogeny_normal(), "{f}");
            }
        }
    }

    #[test]
    fn split_and_compact_forms() {
        for family in Family::ALL {
            let (lo, hi) = family.rank_range();
            for rank in lo..=hi.min(9) {
                let x = SimpleRootSystem::new(family, rank).unwrap();
                let s = RealForm::split_form(x);
                let c = RealForm::compact_form(x);
                assert!(s.validate().is_ok() && c.validate().is_ok(), "{x}");
                assert!(s.is_split(), "{s}");
                assert!(c.is_compact(), "{c}");
                assert_eq!(s.real_rank(), x.rank());
            }
        }
    }
}
