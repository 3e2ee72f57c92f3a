//! Exhaustive verification of the order-theoretic laws every finite inverse
//! semigroup satisfies. Each check scans all applicable tuples and reports the
//! first counterexample, so a passing run is a proof for that table.

use serde::Serialize;

use super::{classify, meet, meet_closed_form, ElementId, InverseSemigroup, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    pub statement: &'static str,
    pub tuples: usize,
    /// First failing tuple, as element names.
    pub counterexample: Option<Vec<String>>,
}

impl LawOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Check {
    law: &'static str,
    statement: &'static str,
    tuples: usize,
    counterexample: Option<Vec<ElementId>>,
}

impl Check {
    fn new(law: &'static str, statement: &'static str) -> Self {
        Check { law, statement, tuples: 0, counterexample: None }
    }

    fn test(&mut self, ok: bool, witness: &[ElementId]) {
        self.tuples += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness.to_vec());
        }
    }

    fn finish(self, s: &InverseSemigroup) -> LawOutcome {
        LawOutcome {
            law: self.law,
            statement: self.statement,
            tuples: self.tuples,
            counterexample: self
                .counterexample
                .map(|w| w.into_iter().map(|x| s.name(x)).collect()),
        }
    }
}

/// `x ≺ y ⇔ x⁻¹ ≺ y⁻¹ ⇔ ∃p ∈ Γ⁽⁰⁾: x = py ⇔ ∃q ∈ Γ⁽⁰⁾: x = yq`, plus the
/// partial-order axioms.
pub fn order_equivalences(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let idem = s.idempotents();
    let mut c = Check::new("order-equivalences", "x≺y ⇔ x⁻¹≺y⁻¹ ⇔ x=py ⇔ x=yq; ≺ is a partial order");
    for x in s.elements() {
        c.test(order.leq(x, x), &[x]);
        for y in s.elements() {
            let a = order.leq(x, y);
            let b = order.leq(s.inv(x), s.inv(y));
            let left = idem.iter().any(|&p| s.mul(p, y) == x);
            let right = idem.iter().any(|&q| s.mul(y, q) == x);
            c.test(a == b && a == left && a == right, &[x, y]);
            if x != y {
                c.test(!(a && order.leq(y, x)), &[x, y]);
            }
            for z in s.elements() {
                if a && order.leq(y, z) {
                    c.test(order.leq(x, z), &[x, y, z]);
                }
            }
        }
    }
    c.finish(s)
}

/// `x₁ ≺ y₁ ∧ x₂ ≺ y₂ ⇒ x₁x₂ ≺ y₁y₂`.
pub fn order_compatibility(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let pairs = order.pairs();
    let mut c = Check::new("order-compatibility", "x₁≺y₁, x₂≺y₂ ⇒ x₁x₂ ≺ y₁y₂");
    for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            c.test(order.leq(s.mul(x1, x2), s.mul(y1, y2)), &[x1, y1, x2, y2]);
        }
    }
    c.finish(s)
}

/// `x` minimal ⇔ `x⁻¹` minimal ⇔ `x⁻¹x` minimal ⇔ `xx⁻¹` minimal.
pub fn minimality_equivalences(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let mut c = Check::new("minimality-equivalences", "x ∈ Γ_min ⇔ x⁻¹ ∈ Γ_min ⇔ x⁻¹x ∈ Γ_min ⇔ xx⁻¹ ∈ Γ_min");
    for x in s.elements() {
        let m = order.is_minimal(x);
        c.test(
            m == order.is_minimal(s.inv(x))
                && m == order.is_minimal(s.source(x))
                && m == order.is_minimal(s.range(x)),
            &[x],
        );
    }
    c.finish(s)
}

/// For minimal `x, y`: `xy ≠ 0 ⇔ x⁻¹x = yy⁻¹ ⇔ xy` minimal.
pub fn minimal_products(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let min = order.minimal_elements();
    let mut c = Check::new("minimal-products", "x,y ∈ Γ_min: xy≠0 ⇔ x⁻¹x=yy⁻¹ ⇔ xy ∈ Γ_min");
    for &x in &min {
        for &y in &min {
            let xy = s.mul(x, y);
            let nonzero = Some(xy) != s.zero();
            let matching = s.source(x) == s.range(y);
            let minimal = order.is_minimal(xy);
            c.test(nonzero == matching && matching == minimal, &[x, y]);
        }
    }
    c.finish(s)
}

/// Elements with a common successor and a nonzero common lower bound have the
/// meet `xx⁻¹yy⁻¹x`, and this also equals `xx⁻¹yy⁻¹y`.
pub fn meet_formula(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let mut c = Check::new("meet-formula", "common successor ∧ nonzero lower bound ⇒ x∧y = xx⁻¹yy⁻¹x = xx⁻¹yy⁻¹y");
    for x in s.elements() {
        for y in s.elements() {
            let mut succ = order.up(x).clone();
            succ.intersect_with(order.up(y));
            if succ.count_ones(..) == 0 {
                continue;
            }
            let lb = order.lower_bounds(x, y);
            let nonzero = lb.ones().any(|z| Some(ElementId(z)) != s.zero());
            if !nonzero {
                continue;
            }
            let closed = meet_closed_form(s, x, y);
            let other = s.mul(s.mul(s.range(x), s.range(y)), y);
            let searched = order.greatest(&lb);
            c.test(closed == searched && closed == Some(other), &[x, y]);
        }
    }
    c.finish(s)
}

/// E-unitary or 0-E-unitary implies (L).
pub fn unitary_implies_lattice(s: &InverseSemigroup) -> LawOutcome {
    let f = classify(s);
    let mut c = Check::new("unitary-implies-L", "E-unitary ∨ 0-E-unitary ⇒ (L)");
    c.test(!(f.e_unitary || f.zero_e_unitary) || f.lattice, &[]);
    c.finish(s)
}

/// `x ≺ y ⇒ x < y`.
pub fn order_implies_covering(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let mut c = Check::new("order-implies-covering", "x≺y ⇒ x<(y)");
    for (x, y) in order.pairs() {
        c.test(order.covered_by(x, &[y]).unwrap_or(false), &[x, y]);
    }
    c.finish(s)
}

/// Consistency of [`meet`] with the lower-bound sets: a value is returned
/// exactly when a largest common lower bound with a nonzero one exists.
pub fn meet_search(s: &InverseSemigroup) -> LawOutcome {
    let order = s.order();
    let mut c = Check::new("meet-search", "meet(x,y) is the largest common lower bound");
    for x in s.elements() {
        for y in s.elements() {
            if let Ok(m) = meet(s, order, x, y) {
                let ok = order.leq(m, x)
                    && order.leq(m, y)
                    && order.lower_bounds(x, y).ones().all(|z| order.leq(ElementId(z), m));
                c.test(ok, &[x, y]);
            }
        }
    }
    c.finish(s)
}

/// Every law above.
pub fn check_all(s: &InverseSemigroup) -> Vec<LawOutcome> {
    vec![
        order_equivalences(s),
        order_compatibility(s),
        minimality_equivalences(s),
        minimal_products(s),
        meet_formula(s),
        meet_search(s),
        unitary_implies_lattice(s),
        order_implies_covering(s),
    ]
}
