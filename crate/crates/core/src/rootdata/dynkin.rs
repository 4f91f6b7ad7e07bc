//! Dynkin diagrams in Bourbaki numbering and classification of subdiagrams.

use super::{Family, SimpleRootSystem};
use std::collections::{BTreeSet, VecDeque};

/// Zero-based node index. Rendered one-based.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    system: SimpleRootSystem,
    /// (i, j, bond multiplicity) with i < j.
    bonds: Vec<(NodeId, NodeId, u8)>,
    long: Vec<bool>,
}

impl DynkinDiagram {
    pub fn of(system: SimpleRootSystem) -> Self {
        let n = system.rank() as usize;
        let mut bonds = Vec::new();
        let mut long = vec![true; n];
        let chain = |bonds: &mut Vec<_>, nodes: &[NodeId]| {
            for w in nodes.windows(2) {
                bonds.push((w[0].min(w[1]), w[0].max(w[1]), 1u8));
            }
        };
        match system.family() {
            Family::A => chain(&mut bonds, &(0..n).collect::<Vec<_>>()),
            Family::B | Family::C => {
                chain(&mut bonds, &(0..n - 1).collect::<Vec<_>>());
                bonds.push((n - 2, n - 1, 2));
                if system.family() == Family::B {
                    long[n - 1] = false;
                } else {
                    long.iter_mut().take(n - 1).for_each(|l| *l = false);
                }
            }
            Family::D => {
                chain(&mut bonds, &(0..n - 1).collect::<Vec<_>>());
                bonds.push((n - 3, n - 1, 1));
            }
            Family::E6 | Family::E7 | Family::E8 => {
                let mut spine = vec![0, 2];
                spine.extend(3..n);
                chain(&mut bonds, &spine);
                bonds.push((1, 3, 1));
            }
            Family::F4 => {
                bonds.extend([(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
                long[2] = false;
                long[3] = false;
            }
            Family::G2 => {
                bonds.push((0, 1, 3));
                long[0] = false;
            }
        }
        bonds.sort_unstable();
        Self { system, bonds, long }
    }

    pub fn system(&self) -> SimpleRootSystem {
        self.system
    }

    pub fn node_count(&self) -> usize {
        self.long.len()
    }

    pub fn bonds(&self) -> &[(NodeId, NodeId, u8)] {
        &self.bonds
    }

    pub fn is_long(&self, node: NodeId) -> bool {
        self.long[node]
    }

    pub fn bond(&self, i: NodeId, j: NodeId) -> u8 {
        let (a, b) = (i.min(j), i.max(j));
        self.bonds
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map_or(0, |&(_, _, m)| m)
    }

    pub fn neighbours(&self, node: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.bonds.iter().filter_map(move |&(a, b, _)| {
            if a == node {
                Some(b)
            } else if b == node {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Connected components of the subdiagram induced on `nodes`.
    pub fn components(&self, nodes: &BTreeSet<NodeId>) -> Vec<BTreeSet<NodeId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in nodes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if nodes.contains(&w) && seen.insert(w) {
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Type of each connected component of the subdiagram on `nodes`,
    /// sorted. Two-node double-bond components are reported as B₂.
    pub fn classify(&self, nodes: &BTreeSet<NodeId>) -> Vec<SimpleRootSystem> {
        let mut out: Vec<_> = self
            .components(nodes)
            .iter()
            .map(|c| self.classify_connected(c))
            .collect();
        out.sort();
        out
    }

    fn classify_connected(&self, comp: &BTreeSet<NodeId>) -> SimpleRootSystem {
        let n = comp.len() as u32;
        let inner: Vec<_> = self
            .bonds
            .iter()
            .filter(|(a, b, _)| comp.contains(a) && comp.contains(b))
            .copied()
            .collect();
        let max_bond = inner.iter().map(|b| b.2).max().unwrap_or(0);
        if n == 1 {
            return SimpleRootSystem::raw(Family::A, 1);
        }
        if max_bond == 3 {
            return SimpleRootSystem::raw(Family::G2, 2);
        }
        if max_bond == 2 && n == 2 {
            return SimpleRootSystem::raw(Family::C, 2);
        }
        if max_bond == 2 {
            let degree_one_double = inner
                .iter()
                .filter(|b| b.2 == 2)
                .any(|&(a, b, _)| self.degree_in(a, comp) == 1 || self.degree_in(b, comp) == 1);
            if n == 4 && !degree_one_double {
                return SimpleRootSystem::raw(Family::F4, 4);
            }
            let long = comp.iter().filter(|&&v| self.long[v]).count() as u32;
            let family = if long == n - 1 { Family::B } else { Family::C };
            return SimpleRootSystem::raw(family, n);
        }
        let branch = comp.iter().find(|&&v| self.degree_in(v, comp) == 3);
        let Some(&centre) = branch else {
            return SimpleRootSystem::raw(Family::A, n);
        };
        let mut arms: Vec<u32> = self
            .neighbours(centre)
            .filter(|w| comp.contains(w))
            .map(|w| self.arm_length(centre, w, comp))
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => SimpleRootSystem::raw(Family::D, n),
            [1, 2, 2] => SimpleRootSystem::raw(Family::E6, 6),
            [1, 2, 3] => SimpleRootSystem::raw(Family::E7, 7),
            [1, 2, 4] => SimpleRootSystem::raw(Family::E8, 8),
            other => unreachable!("no simple diagram has arms {other:?}"),
        }
    }

    fn degree_in(&self, v: NodeId, comp: &BTreeSet<NodeId>) -> usize {
        self.neighbours(v).filter(|w| comp.contains(w)).count()
    }

    fn arm_length(&self, from: NodeId, first: NodeId, comp: &BTreeSet<NodeId>) -> u32 {
        let (mut prev, mut cur, mut len) = (from, first, 1);
        loop {
            let next = self.neighbours(cur).find(|&w| w != prev && comp.contains(&w));
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => return len,
            }
        }
    }
}
