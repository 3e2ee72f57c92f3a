//! `<`-closed invariant sets of idempotents and the lattice they form.
//!
//! Everything here only looks at idempotents and at conjugates `xpx⁻¹`, so it
//! runs on truncated semigroups too. A conjugate that leaves the fragment is
//! skipped.
//!
//! With a zero, `Cl` of any nonempty set contains `0`, and `∅` and `{0}` give
//! the same open set. The bottom of the lattice is then `{0}` and `∅` is not
//! listed.

mod maps;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::groupoid::escape;
use crate::semigroup::{ElementId, NaturalOrder, Semigroup};

pub use maps::{
    gamma_i, lattice_maps, minimality_report, simplicity_report, GammaI, LatticeMaps, MinimalityReport,
    SimplicityReport, Verdict,
};
pub use maps::verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0} is not an idempotent")]
    NotIdempotents(ElementId),
    #[error("condition (L) fails, so the lattice correspondence does not apply")]
    LcViolated,
    #[error("not an invariant order ideal: {0} breaks it")]
    NotInvariantIdeal(ElementId),
}

/// A set of idempotents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct UnitIdeal(pub BTreeSet<ElementId>);

impl UnitIdeal {
    pub fn contains(&self, x: ElementId) -> bool {
        self.0.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &UnitIdeal) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &UnitIdeal) -> UnitIdeal {
        UnitIdeal(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &UnitIdeal) -> UnitIdeal {
        UnitIdeal(self.0.intersection(&other.0).copied().collect())
    }
}

impl FromIterator<ElementId> for UnitIdeal {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        UnitIdeal(iter.into_iter().collect())
    }
}

/// The idempotents of a semigroup with their order, shared by the closure
/// and lattice computations.
pub struct Units<'a, S: Semigroup + ?Sized> {
    s: &'a S,
    order: NaturalOrder,
    idempotents: Vec<ElementId>,
    /// `(p, xpx⁻¹)` for every `x` with `p ≺ x⁻¹x` and the conjugate inside
    /// the fragment.
    conjugates: Vec<Vec<ElementId>>,
}

impl<'a, S: Semigroup + ?Sized> Units<'a, S> {
    pub fn new(s: &'a S) -> Self {
        let order = NaturalOrder::on_idempotents(s);
        let idempotents = s.idempotents();
        let mut conjugates = vec![Vec::new(); s.len()];
        for x in s.elements() {
            let src = s.source(x);
            for q in order.down(src).ones().map(ElementId) {
                if let Some(c) = s.conjugate(x, q) {
                    conjugates[q.0].push(c);
                }
            }
        }
        for c in &mut conjugates {
            c.sort();
            c.dedup();
        }
        Units { s, order, idempotents, conjugates }
    }

    pub fn semigroup(&self) -> &S {
        self.s
    }

    pub fn order(&self) -> &NaturalOrder {
        &self.order
    }

    pub fn idempotents(&self) -> &[ElementId] {
        &self.idempotents
    }

    pub fn all(&self) -> UnitIdeal {
        self.idempotents.iter().copied().collect()
    }

    fn check(&self, set: &UnitIdeal) -> Result<(), IdealError> {
        match set.iter().find(|&p| p.0 >= self.s.len() || !self.s.is_idempotent(p)) {
            Some(p) => Err(IdealError::NotIdempotents(p)),
            None => Ok(()),
        }
    }

    fn reach(&self, set: &UnitIdeal) -> FixedBitSet {
        let list: Vec<ElementId> = set.iter().collect();
        self.order.down_union(&list)
    }

    /// `Cl(I) = {p : p < (p₁, …, pₙ), pᵢ ∈ I, n ≥ 1}`. Covering is monotone
    /// in the list, so testing against all of `I` at once is exact.
    pub fn closure(&self, set: &UnitIdeal) -> Result<UnitIdeal, IdealError> {
        self.check(set)?;
        if set.is_empty() {
            return Ok(UnitIdeal::default());
        }
        let reach = self.reach(set);
        Ok(self
            .idempotents
            .iter()
            .copied()
            .filter(|&p| self.order.covered_by_reach(p, &reach))
            .collect())
    }

    pub fn is_lt_closed(&self, set: &UnitIdeal) -> bool {
        matches!(self.closure(set), Ok(c) if c == *set)
    }

    pub fn is_order_ideal(&self, set: &UnitIdeal) -> bool {
        set.iter().all(|p| self.order.down(p).ones().all(|q| set.contains(ElementId(q))))
    }

    /// First `p ∈ I` with a conjugate outside `I`.
    pub fn invariance_witness(&self, set: &UnitIdeal) -> Option<ElementId> {
        set.iter().find(|p| self.conjugates[p.0].iter().any(|&c| !set.contains(c)))
    }

    pub fn is_invariant(&self, set: &UnitIdeal) -> bool {
        self.invariance_witness(set).is_none()
    }

    /// Smallest invariant order ideal containing `I`.
    pub fn invariant_hull(&self, set: &UnitIdeal) -> UnitIdeal {
        let mut out = set.clone();
        let mut stack: Vec<ElementId> = set.iter().collect();
        while let Some(p) = stack.pop() {
            let below = self.order.down(p).ones().map(ElementId);
            for q in below.chain(self.conjugates[p.0].iter().copied()) {
                if out.0.insert(q) {
                    stack.push(q);
                }
            }
        }
        out
    }

    /// Smallest `<`-closed invariant set containing `I`.
    pub fn generate(&self, set: &UnitIdeal) -> Result<UnitIdeal, IdealError> {
        self.check(set)?;
        let mut cur = set.clone();
        loop {
            let next = self.closure(&self.invariant_hull(&cur))?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Least node: `{0}` with a zero, `∅` otherwise.
    pub fn bottom(&self) -> UnitIdeal {
        self.s.zero().into_iter().filter(|&z| self.s.is_idempotent(z)).collect()
    }

    /// All `<`-closed invariant sets, as joins of the principal ones.
    pub fn lattice(&self) -> IdealLattice {
        let bottom = self.bottom();
        let principal: Vec<UnitIdeal> = self
            .idempotents
            .iter()
            .map(|&p| self.generate(&std::iter::once(p).collect()).expect("idempotent"))
            .collect();
        let mut seen: BTreeSet<UnitIdeal> = BTreeSet::new();
        seen.insert(bottom.clone());
        let mut queue = vec![bottom];
        while let Some(node) = queue.pop() {
            for p in &principal {
                let joined = self.generate(&node.union(p)).expect("idempotents");
                if seen.insert(joined.clone()) {
                    queue.push(joined);
                }
            }
        }
        IdealLattice::from_nodes(seen.into_iter().collect(), |a, b| {
            self.generate(&a.union(b)).expect("idempotents")
        })
    }

    pub fn label(&self, set: &UnitIdeal) -> String {
        let names: Vec<String> = set.iter().map(|p| self.s.label(p)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Nodes ordered by size then members, with join and meet tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    pub nodes: Vec<UnitIdeal>,
    pub joins: Vec<Vec<usize>>,
    pub meets: Vec<Vec<usize>>,
}

impl IdealLattice {
    fn from_nodes(mut nodes: Vec<UnitIdeal>, join: impl Fn(&UnitIdeal, &UnitIdeal) -> UnitIdeal) -> Self {
        nodes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<&UnitIdeal, usize> = nodes.iter().enumerate().map(|(k, n)| (n, k)).collect();
        let n = nodes.len();
        let mut joins = vec![vec![0; n]; n];
        let mut meets = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                joins[a][b] = index[&join(&nodes[a], &nodes[b])];
                meets[a][b] = *index
                    .get(&nodes[a].intersection(&nodes[b]))
                    .expect("intersections of closed invariant sets are closed invariant");
            }
        }
        IdealLattice { nodes, joins, meets }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, set: &UnitIdeal) -> Option<usize> {
        self.nodes.iter().position(|n| n == set)
    }

    /// Join is the least upper bound and meet the greatest lower bound
    /// among the nodes, under inclusion.
    pub fn check_axioms(&self) -> bool {
        let n = self.len();
        let le = |a: usize, b: usize| self.nodes[a].is_subset(&self.nodes[b]);
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (j, m) = (self.joins[a][b], self.meets[a][b]);
                le(a, j)
                    && le(b, j)
                    && le(m, a)
                    && le(m, b)
                    && (0..n).all(|c| (!(le(a, c) && le(b, c)) || le(j, c)) && (!(le(c, a) && le(c, b)) || le(c, m)))
            })
        })
    }

    /// Hasse diagram under inclusion.
    pub fn to_dot<S: Semigroup + ?Sized>(&self, units: &Units<'_, S>, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
        out.push_str("  rankdir=BT;\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  i{k} [label=\"{}\"];", escape(&units.label(node)));
        }
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.nodes[a].is_subset(&self.nodes[b]);
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    let _ = writeln!(out, "  i{a} -> i{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn node_labels<S: Semigroup + ?Sized>(&self, units: &Units<'_, S>) -> Vec<Vec<String>> {
        self.nodes
            .iter()
            .map(|n| n.iter().map(|p| units.semigroup().label(p)).collect())
            .collect()
    }
}

/// `Cl(I)` on a complete semigroup.
pub fn closure_cl<S: Semigroup + ?Sized>(s: &S, set: &UnitIdeal) -> Result<UnitIdeal, IdealError> {
    Units::new(s).closure(set)
}

pub fn enumerate_ideal_lattice<S: Semigroup + ?Sized>(s: &S) -> IdealLattice {
    Units::new(s).lattice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::semigroup::InverseSemigroup;

    fn set(s: &InverseSemigroup, names: &[&str]) -> UnitIdeal {
        names.iter().map(|n| s.by_name(n).unwrap()).collect()
    }

    /// Every subset of idempotents that is `<`-closed and invariant, by scan.
    fn oracle(s: &InverseSemigroup) -> Vec<UnitIdeal> {
        let u = Units::new(s);
        let idem = u.idempotents().to_vec();
        let mut out: Vec<UnitIdeal> = (0u32..1 << idem.len())
            .map(|mask| (0..idem.len()).filter(|k| mask >> k & 1 == 1).map(|k| idem[k]).collect::<UnitIdeal>())
            .filter(|c| u.is_lt_closed(c) && u.is_invariant(c))
            .filter(|c| !(c.is_empty() && s.zero().is_some()))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn closure_examples() {
        let b2 = corpus::semigroup("brandt2");
        assert_eq!(closure_cl(&b2, &set(&b2, &["e11"])).unwrap(), set(&b2, &["0", "e11"]));
        assert!(closure_cl(&b2, &UnitIdeal::default()).unwrap().is_empty());
        let all = Units::new(&b2).all();
        assert_eq!(closure_cl(&b2, &all).unwrap(), all);
        assert_eq!(
            closure_cl(&b2, &set(&b2, &["e12"])),
            Err(IdealError::NotIdempotents(b2.by_name("e12").unwrap()))
        );
        let chain = corpus::semigroup("chain3");
        assert_eq!(closure_cl(&chain, &set(&chain, &["p"])).unwrap(), set(&chain, &["0", "p", "t"]));
    }

    #[test]
    fn closure_operator_laws() {
        for (name, s) in corpus::semigroups() {
            let u = Units::new(&s);
            let idem = u.idempotents().to_vec();
            let subsets: Vec<UnitIdeal> = (0u32..1 << idem.len())
                .map(|mask| (0..idem.len()).filter(|k| mask >> k & 1 == 1).map(|k| idem[k]).collect())
                .collect();
            for a in &subsets {
                let ca = u.closure(a).unwrap();
                assert!(a.is_subset(&ca), "{name}");
                assert_eq!(u.closure(&ca).unwrap(), ca, "{name}");
                for b in &subsets {
                    if a.is_subset(b) {
                        assert!(ca.is_subset(&u.closure(b).unwrap()), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_matches_subset_scan() {
        for (name, s) in corpus::semigroups() {
            let lattice = enumerate_ideal_lattice(&s);
            assert_eq!(lattice.nodes, oracle(&s), "{name}");
            assert!(lattice.check_axioms(), "{name}");
            if let Some(z) = s.zero() {
                assert!(lattice.nodes.iter().all(|n| n.contains(z)), "{name}");
            }
        }
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(enumerate_ideal_lattice(&corpus::semigroup("brandt2")).len(), 2);
        assert_eq!(enumerate_ideal_lattice(&corpus::semigroup("semilattice3")).len(), 4);
        assert_eq!(enumerate_ideal_lattice(&corpus::semigroup("trivial_group")).len(), 2);
        assert_eq!(enumerate_ideal_lattice(&corpus::semigroup("brandt2_twice")).len(), 4);
    }

    #[test]
    fn dot_output() {
        let s = corpus::semigroup("brandt2");
        let u = Units::new(&s);
        let dot = u.lattice().to_dot(&u, "brandt2");
        assert!(dot.contains("i0 -> i1;"));
        assert!(dot.contains("{0,e11,e22}"));
    }
}
