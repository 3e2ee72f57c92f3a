//! The directed-set completion `O(Γ)` and the groupoids built on it.
//!
//! For a finite semigroup every directed subset has a least element, so a
//! class `[A]` is represented by that element and `O(Γ)` is a copy of `Γ`.
//! The general construction over all directed subsets is kept as a test
//! oracle.

mod paterson;
mod quotient;
mod radius;
mod report;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::groupoid::{minimal_subgroupoid, restricted_product_groupoid, FiniteGroupoid};
use crate::semigroup::{ElementId, InverseSemigroup, Semigroup};

pub use paterson::{paterson_groupoid, Paterson, PatersonChecks};
pub use quotient::{quotient_tilde, Quotient};
pub use radius::{check_radius, RadiusFunction, RadiusReport};
pub use report::{
    basis_checks, completion_report, consistency_roundtrip, hasse_dot, BasisChecks, CompletionReport,
    RoundtripReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("empty set")]
    EmptySet,
    #[error("set is not directed: {0} and {1} have no lower bound in it")]
    NotDirected(ElementId, ElementId),
    #[error("descriptor excludes {excluded}, which is not below {top}")]
    MalformedDescriptor { top: ElementId, excluded: ElementId },
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("relation <> is not a congruence at ({0}, {1})")]
    NotCongruence(ElementId, ElementId),
    #[error("radius axiom {axiom} fails at {witness:?}")]
    ViolatedAxiom { axiom: &'static str, witness: Vec<ElementId> },
}

/// A class `[A]` of `O(Γ)`, represented by the least element of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CompletionElement {
    pub least: ElementId,
}

fn check_range(s: &InverseSemigroup, a: &[ElementId]) -> Result<(), CompletionError> {
    match a.iter().find(|x| x.0 >= s.len()) {
        Some(x) => Err(CompletionError::OutOfRange(x.0)),
        None => Ok(()),
    }
}

/// First pair of `a` without a lower bound in `a`.
fn undirected_pair(s: &InverseSemigroup, a: &[ElementId]) -> Option<(ElementId, ElementId)> {
    let order = s.order();
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            if !a.iter().any(|&z| order.leq(z, x) && order.leq(z, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Every pair in `a` has a lower bound in `a`.
pub fn is_directed(s: &InverseSemigroup, a: &[ElementId]) -> Result<bool, CompletionError> {
    if a.is_empty() {
        return Err(CompletionError::EmptySet);
    }
    check_range(s, a)?;
    Ok(undirected_pair(s, a).is_none())
}

/// `[A]`: the least element of a directed set.
pub fn class_of(s: &InverseSemigroup, a: &[ElementId]) -> Result<CompletionElement, CompletionError> {
    if a.is_empty() {
        return Err(CompletionError::EmptySet);
    }
    check_range(s, a)?;
    if let Some((x, y)) = undirected_pair(s, a) {
        return Err(CompletionError::NotDirected(x, y));
    }
    let mut set = FixedBitSet::with_capacity(s.len());
    a.iter().for_each(|x| set.insert(x.0));
    let least = s.order().least(&set).expect("a finite directed set has a least element");
    Ok(CompletionElement { least })
}

/// `O(Γ)` together with the embedding `x ↦ [{x}]`.
#[derive(Debug, Clone)]
pub struct Completion {
    pub semigroup: InverseSemigroup,
    pub embedding: Vec<CompletionElement>,
}

pub fn completion_semigroup(s: &InverseSemigroup) -> Completion {
    Completion {
        semigroup: s.clone(),
        embedding: s.elements().map(|least| CompletionElement { least }).collect(),
    }
}

/// `G_u(Γ) = G(O(Γ))`.
pub fn universal_groupoid(s: &InverseSemigroup) -> FiniteGroupoid {
    restricted_product_groupoid(&completion_semigroup(s).semigroup)
}

/// `G_m(Γ) = M(O(Γ))`.
pub fn minimal_groupoid(s: &InverseSemigroup) -> FiniteGroupoid {
    minimal_subgroupoid(&completion_semigroup(s).semigroup)
}

/// `U_{x; x₁, …, xₙ}` or `V_{x; x₁, …, xₙ}`: a top element and excluded
/// elements below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisSetDescriptor {
    pub top: ElementId,
    pub excluded: Vec<ElementId>,
}

impl BasisSetDescriptor {
    pub fn principal(top: ElementId) -> Self {
        BasisSetDescriptor { top, excluded: Vec::new() }
    }

    pub fn new(top: ElementId, excluded: Vec<ElementId>) -> Self {
        BasisSetDescriptor { top, excluded }
    }

    fn check(&self, s: &InverseSemigroup) -> Result<(), CompletionError> {
        check_range(s, &[self.top])?;
        check_range(s, &self.excluded)?;
        match self.excluded.iter().find(|&&x| !s.order().leq(x, self.top)) {
            Some(&x) => Err(CompletionError::MalformedDescriptor { top: self.top, excluded: x }),
            None => Ok(()),
        }
    }
}

/// `{X : X ≺ x, X ⊀ xᵢ}`, as elements of `G_u(Γ)`.
pub fn basis_u(s: &InverseSemigroup, d: &BasisSetDescriptor) -> Result<Vec<ElementId>, CompletionError> {
    d.check(s)?;
    let order = s.order();
    let mut set = order.down(d.top).clone();
    set.difference_with(&order.down_union(&d.excluded));
    Ok(set.ones().map(ElementId).collect())
}

/// [`basis_u`] intersected with `G_m(Γ)`.
pub fn basis_v(s: &InverseSemigroup, d: &BasisSetDescriptor) -> Result<Vec<ElementId>, CompletionError> {
    let order = s.order();
    Ok(basis_u(s, d)?.into_iter().filter(|&x| order.is_minimal(x)).collect())
}

/// `V_x`.
pub fn v_set(s: &InverseSemigroup, x: ElementId) -> Vec<ElementId> {
    basis_v(s, &BasisSetDescriptor::principal(x)).expect("principal descriptor is well formed")
}

/// `j(X)`: bit `x` is set iff `X ≺ x`.
pub fn membership_vector(s: &InverseSemigroup, x: CompletionElement) -> FixedBitSet {
    s.order().up(x.least).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn ids(s: &InverseSemigroup, names: &[&str]) -> Vec<ElementId> {
        names.iter().map(|n| s.by_name(n).unwrap()).collect()
    }

    #[test]
    fn directed_sets() {
        let b2 = corpus::semigroup("brandt2");
        assert!(is_directed(&b2, &ids(&b2, &["e12"])).unwrap());
        assert!(!is_directed(&b2, &ids(&b2, &["e11", "e12"])).unwrap());
        assert_eq!(is_directed(&b2, &[]), Err(CompletionError::EmptySet));
        let x = b2.by_name("e12").unwrap();
        let down: Vec<ElementId> = b2.order().down(x).ones().map(ElementId).collect();
        assert!(is_directed(&b2, &down).unwrap());
        assert_eq!(class_of(&b2, &ids(&b2, &["0", "e11"])).unwrap().least, b2.by_name("0").unwrap());
        assert!(matches!(
            class_of(&b2, &ids(&b2, &["e11", "e12"])),
            Err(CompletionError::NotDirected(..))
        ));
        let i2 = corpus::semigroup("sym_inverse_monoid2");
        assert_eq!(class_of(&i2, &ids(&i2, &["id", "id1"])).unwrap().least, i2.by_name("id1").unwrap());
    }

    #[test]
    fn basis_sets() {
        let b2 = corpus::semigroup("brandt2");
        let [z, e11] = [b2.by_name("0").unwrap(), b2.by_name("e11").unwrap()];
        assert_eq!(basis_u(&b2, &BasisSetDescriptor::new(e11, vec![z])).unwrap(), vec![e11]);
        assert_eq!(v_set(&b2, e11), vec![e11]);
        assert!(v_set(&b2, z).is_empty());
        assert_eq!(
            basis_u(&b2, &BasisSetDescriptor::new(z, vec![e11])),
            Err(CompletionError::MalformedDescriptor { top: z, excluded: e11 })
        );

        let i2 = corpus::semigroup("sym_inverse_monoid2");
        let id = i2.by_name("id").unwrap();
        assert_eq!(v_set(&i2, id), ids(&i2, &["id1", "id2"]));
        assert_eq!(v_set(&i2, i2.by_name("swap").unwrap()), ids(&i2, &["m12", "m21"]));
        let u = basis_u(&i2, &BasisSetDescriptor::new(id, ids(&i2, &["id1"]))).unwrap();
        assert_eq!(u, ids(&i2, &["id2", "id"]));

        let chain = corpus::semigroup("chain3");
        let t = chain.by_name("t").unwrap();
        let all: Vec<ElementId> = chain.elements().collect();
        assert_eq!(basis_u(&chain, &BasisSetDescriptor::principal(t)).unwrap(), all);
    }

    #[test]
    fn membership_vectors() {
        let b2 = corpus::semigroup("brandt2");
        let e12 = b2.by_name("e12").unwrap();
        let v = membership_vector(&b2, CompletionElement { least: e12 });
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![e12.0]);
        let i2 = corpus::semigroup("sym_inverse_monoid2");
        let v = membership_vector(&i2, CompletionElement { least: i2.by_name("id1").unwrap() });
        assert_eq!(v.ones().map(ElementId).collect::<Vec<_>>(), ids(&i2, &["id1", "id"]));
        for (_, s) in corpus::semigroups() {
            let vs: std::collections::HashSet<Vec<usize>> = completion_semigroup(&s)
                .embedding
                .iter()
                .map(|&x| membership_vector(&s, x).ones().collect())
                .collect();
            assert_eq!(vs.len(), s.len());
        }
    }

    #[test]
    fn groupoid_sizes() {
        let b2 = corpus::semigroup("brandt2");
        assert_eq!(universal_groupoid(&b2).len(), 5);
        let m = minimal_groupoid(&b2);
        assert!(crate::groupoid::find_isomorphism(&m, &FiniteGroupoid::pair(2)).is_some());
        assert_eq!(minimal_groupoid(&corpus::semigroup("semilattice2")).units().len(), 1);
        assert_eq!(universal_groupoid(&corpus::semigroup("trivial_group")).len(), 1);
    }
}
