//! Satake indices: blackened nodes and the ∗-action on the Dynkin diagram.

use super::{ExceptionalLabel, RealForm, RealFormError};
use crate::rootdata::{DynkinDiagram, NodeId, SimpleRootSystem};
use std::collections::BTreeSet;
use std::fmt;

/// Satake index of a real form of a simple complex group. Nodes are 0-based
/// in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeIndex {
    diagram: DynkinDiagram,
    blackened: BTreeSet<NodeId>,
    pairing: Vec<NodeId>,
    orbits: Vec<BTreeSet<NodeId>>,
}

/// Opposition involution i ↦ n−1−i on a chain of n nodes.
fn opposition(n: usize) -> Vec<NodeId> {
    (0..n).map(|i| n - 1 - i).collect()
}

fn identity(n: usize) -> Vec<NodeId> {
    (0..n).collect()
}

/// Converts 1-based node labels to 0-based ids.
fn nodes(one_based: impl IntoIterator<Item = u32>) -> BTreeSet<NodeId> {
    one_based.into_iter().map(|i| i as usize - 1).collect()
}

impl SatakeIndex {
    pub fn new(
        system: SimpleRootSystem,
        blackened: BTreeSet<NodeId>,
        pairing: Vec<NodeId>,
    ) -> Result<Self, RealFormError> {
        let diagram = system.dynkin();
        let n = diagram.node_count();
        let bad = |m: &str| Err(RealFormError::Unsupported(format!("invalid Satake index for {system}: {m}")));
        if pairing.len() != n || pairing.iter().any(|&j| j >= n) {
            return bad("pairing is not a permutation of the nodes");
        }
        if (0..n).any(|i| pairing[pairing[i]] != i) {
            return bad("pairing is not an involution");
        }
        for &(i, j, m) in diagram.bonds() {
            if diagram.bond(pairing[i], pairing[j]) != m {
                return bad("pairing is not a diagram automorphism");
            }
        }
        if blackened.iter().any(|&b| b >= n || !blackened.contains(&pairing[b])) {
            return bad("blackened set is not pairing-stable");
        }
        let orbits = (0..n)
            .filter(|i| !blackened.contains(i) && pairing[*i] >= *i)
            .map(|i| BTreeSet::from([i, pairing[i]]))
            .collect();
        Ok(Self { diagram, blackened, pairing, orbits })
    }

    pub fn of(g: &RealForm) -> Result<Self, RealFormError> {
        let rs = g.root_system();
        let n = rs.rank();
        let nu = n as usize;
        let (black, pairing) = match *g {
            RealForm::Realification(_) => {
                return Err(RealFormError::Unsupported(format!(
                    "{g} is a realification; its index is two mirrored diagrams"
                )))
            }
            RealForm::SpecialLinearR(_) | RealForm::SymplecticSplit(_) => (BTreeSet::new(), identity(nu)),
            RealForm::SpecialLinearH(_) => (nodes((1..=n).step_by(2)), identity(nu)),
            RealForm::SpecialUnitary(p, q) => (nodes(q + 1..p), opposition(nu)),
            RealForm::SpecialOrthogonal(p, q) => {
                let mut pairing = identity(nu);
                let d = p - q;
                if (p + q) % 2 == 0 && d % 4 == 2 {
                    pairing.swap(nu - 2, nu - 1);
                }
                let black = if (p + q) % 2 == 0 && d == 2 { BTreeSet::new() } else { nodes(q + 1..=n) };
                (black, pairing)
            }
            RealForm::SOStar(k) => {
                let mut pairing = identity(nu);
                let black = if k % 2 == 0 {
                    nodes((1..k).step_by(2))
                } else {
                    pairing.swap(nu - 2, nu - 1);
                    nodes((1..k - 1).step_by(2))
                };
                (black, pairing)
            }
            RealForm::SymplecticPQ(p, q) => {
                let mut black = nodes((1..2 * q).step_by(2));
                black.extend(nodes(2 * q + 1..=p + q));
                (black, identity(nu))
            }
            RealForm::Exceptional(l) => exceptional(l, nu),
        };
        Self::new(rs, black, pairing)
    }

    pub fn system(&self) -> SimpleRootSystem {
        self.diagram.system()
    }

    pub fn node_count(&self) -> usize {
        self.diagram.node_count()
    }

    pub fn blackened(&self) -> &BTreeSet<NodeId> {
        &self.blackened
    }

    pub fn pairing(&self) -> &[NodeId] {
        &self.pairing
    }

    /// Distinguished orbits: pairing orbits of white nodes.
    pub fn orbits(&self) -> &[BTreeSet<NodeId>] {
        &self.orbits
    }

    pub fn real_rank(&self) -> u32 {
        self.orbits.len() as u32
    }

    pub fn pairing_is_trivial(&self) -> bool {
        self.pairing.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Root system types of the blackened subdiagram.
    pub fn kernel_types(&self) -> Vec<SimpleRootSystem> {
        self.diagram.classify(&self.blackened)
    }
}

fn exceptional(l: ExceptionalLabel, n: usize) -> (BTreeSet<NodeId>, Vec<NodeId>) {
    use ExceptionalLabel as L;
    let e6_opp = || vec![5, 1, 4, 3, 2, 0];
    match l {
        L::GI | L::FI | L::EI | L::EV | L::EVIII => (BTreeSet::new(), identity(n)),
        L::G2c | L::F4c | L::E7c | L::E8c => ((0..n).collect(), identity(n)),
        L::E6c => ((0..n).collect(), e6_opp()),
        L::FII => (nodes([1, 2, 3]), identity(n)),
        L::EII => (BTreeSet::new(), e6_opp()),
        L::EIII => (nodes([3, 4, 5]), e6_opp()),
        L::EIV | L::EVII | L::EIX => (nodes([2, 3, 4, 5]), identity(n)),
        L::EVI => (nodes([2, 5, 7]), identity(n)),
    }
}

impl fmt::Display for SatakeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |s: &BTreeSet<NodeId>| s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        let orbits: Vec<String> = self.orbits.iter().map(|o| format!("{{{}}}", one(o))).collect();
        write!(
            f,
            "{} black={{{}}} orbits=[{}]",
            self.system(),
            one(&self.blackened),
            orbits.join(" ")
        )
    }
}
