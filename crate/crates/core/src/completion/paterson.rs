use std::collections::HashMap;

use serde::Serialize;

use super::universal_groupoid;
use crate::groupoid::{is_isomorphism, FiniteGroupoid};
use crate::semigroup::{ElementId, InverseSemigroup, Semigroup};

/// The pair model `H_u(Γ)` and the maps `J: G_u → H_u`, `K: H_u → G_u`.
#[derive(Debug, Clone)]
pub struct Paterson {
    pub groupoid: FiniteGroupoid,
    /// Members `(P, x)` of each class.
    pub classes: Vec<Vec<(ElementId, ElementId)>>,
    /// `J(X) = [XX⁻¹, X]`, indexed by `X`.
    pub j: Vec<usize>,
    /// `K([P, x]) = Px`, indexed by class.
    pub k: Vec<usize>,
    pub checks: PatersonChecks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatersonChecks {
    /// Product and involution do not depend on representatives.
    pub well_defined: bool,
    /// `[XX⁻¹, x]` is the same class for every `x` with `X ≺ x`.
    pub j_independent: bool,
    /// `Px` does not depend on the representative.
    pub k_well_defined: bool,
    pub k_after_j: bool,
    pub j_after_k: bool,
    pub j_homomorphism: bool,
    pub k_homomorphism: bool,
    pub axioms: bool,
}

impl PatersonChecks {
    pub fn all(&self) -> bool {
        self.well_defined
            && self.j_independent
            && self.k_well_defined
            && self.k_after_j
            && self.j_after_k
            && self.j_homomorphism
            && self.k_homomorphism
            && self.axioms
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

pub fn paterson_groupoid(s: &InverseSemigroup) -> Paterson {
    let order = s.order();
    let pairs: Vec<(ElementId, ElementId)> = s
        .idempotents()
        .into_iter()
        .flat_map(|p| s.elements().map(move |x| (p, x)))
        .filter(|&(p, x)| order.leq(p, s.range(x)))
        .collect();
    let at: HashMap<(ElementId, ElementId), usize> = pairs.iter().enumerate().map(|(k, &pr)| (pr, k)).collect();

    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    for (a, &(p, x)) in pairs.iter().enumerate() {
        for (b, &(q, y)) in pairs.iter().enumerate().skip(a + 1) {
            if p == q && order.up(p).ones().any(|w| s.mul(ElementId(w), x) == s.mul(ElementId(w), y)) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut class_of = vec![0; pairs.len()];
    let mut classes: Vec<Vec<(ElementId, ElementId)>> = Vec::new();
    let mut root_class = HashMap::new();
    for k in 0..pairs.len() {
        let r = find(&mut parent, k);
        let c = *root_class.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[k] = c;
        classes[c].push(pairs[k]);
    }
    let cls = |p: ElementId, x: ElementId| class_of[at[&(p, x)]];

    let m = classes.len();
    let star = |(p, x): (ElementId, ElementId)| {
        let xi = s.inv(x);
        (s.mul(s.mul(xi, p), x), xi)
    };
    let mut well_defined = true;
    let mut inverse = vec![0; m];
    for (c, members) in classes.iter().enumerate() {
        let images: Vec<usize> = members.iter().map(|&pr| {
            let (q, y) = star(pr);
            cls(q, y)
        }).collect();
        well_defined &= images.iter().all(|&i| i == images[0]);
        inverse[c] = images[0];
    }
    let mut product = vec![None; m * m];
    for a in 0..m {
        for b in 0..m {
            let mut results = Vec::new();
            for &(p, x) in &classes[a] {
                for &(q, y) in &classes[b] {
                    let defined = q == star((p, x)).0;
                    results.push(defined.then(|| cls(p, s.mul(x, y))));
                }
            }
            well_defined &= results.iter().all(|r| *r == results[0]);
            product[a * m + b] = results[0];
        }
    }
    let names = classes
        .iter()
        .map(|c| format!("[{},{}]", s.name(c[0].0), s.name(c[0].1)))
        .collect();
    let groupoid = FiniteGroupoid::from_parts((0..m).collect(), names, product, inverse);

    let j: Vec<usize> = s.elements().map(|x| cls(s.range(x), x)).collect();
    let j_independent = s
        .elements()
        .all(|x| order.up(x).ones().all(|w| cls(s.range(x), ElementId(w)) == j[x.0]));
    let k_images: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| c.iter().map(|&(p, x)| s.mul(p, x).0).collect())
        .collect();
    let k_well_defined = k_images.iter().all(|v| v.iter().all(|&y| y == v[0]));
    let k: Vec<usize> = k_images.iter().map(|v| v[0]).collect();

    let gu = universal_groupoid(s);
    let checks = PatersonChecks {
        well_defined,
        j_independent,
        k_well_defined,
        k_after_j: s.elements().all(|x| k[j[x.0]] == x.0),
        j_after_k: (0..m).all(|c| j[k[c]] == c),
        j_homomorphism: is_isomorphism(&gu, &groupoid, &j),
        k_homomorphism: is_isomorphism(&groupoid, &gu, &k),
        axioms: groupoid.check_axioms().is_ok(),
    };
    Paterson { groupoid, classes, j, k, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn sizes_and_checks() {
        for (name, expected) in [("trivial_group", 1), ("brandt2", 5), ("sym_inverse_monoid2", 7)] {
            let p = paterson_groupoid(&corpus::semigroup(name));
            assert_eq!(p.groupoid.len(), expected, "{name}");
            assert!(p.checks.all(), "{name}: {:?}", p.checks);
        }
    }

    #[test]
    fn source_based_j_is_not_a_pair() {
        // With P = X⁻¹X the pair (P, x) need not satisfy P ≺ xx⁻¹.
        let b2 = corpus::semigroup("brandt2");
        let x = b2.by_name("e12").unwrap();
        assert!(!b2.order().leq(b2.source(x), b2.range(x)));
    }

    #[test]
    fn identification_merges_pairs() {
        // In I₂, (id1, id) and (id1, swap) differ, (id1, id) and (id1, id1) agree.
        let i2 = corpus::semigroup("sym_inverse_monoid2");
        let p = paterson_groupoid(&i2);
        let n = |s: &str| i2.by_name(s).unwrap();
        let class = |a: &str, b: &str| p.classes.iter().position(|c| c.contains(&(n(a), n(b)))).unwrap();
        assert_eq!(class("id1", "id"), class("id1", "id1"));
        assert_ne!(class("id1", "id"), class("id1", "swap"));
        assert_eq!(class("id1", "swap"), class("id1", "m12"));
    }
}
