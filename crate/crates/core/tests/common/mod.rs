//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ordgroupoid::semigroup::{from_closed_set, ElementId, InverseSemigroup, Semigroup};

/// All nonempty downward directed subsets, by subset scan.
pub fn directed_subsets(s: &InverseSemigroup) -> Vec<Vec<ElementId>> {
    let n = s.len();
    assert!(n <= 12, "subset scan is for small tables");
    let order = s.order();
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(ElementId).collect::<Vec<_>>())
        .filter(|a| {
            a.iter().all(|&x| {
                a.iter().all(|&y| a.iter().any(|&z| order.leq(z, x) && order.leq(z, y)))
            })
        })
        .collect()
}

/// `A ≺ B`: every `b ∈ B` has some `a ∈ A` below it.
pub fn set_leq(s: &InverseSemigroup, a: &[ElementId], b: &[ElementId]) -> bool {
    let order = s.order();
    b.iter().all(|&y| a.iter().any(|&x| order.leq(x, y)))
}

pub fn set_product(s: &InverseSemigroup, a: &[ElementId], b: &[ElementId]) -> Vec<ElementId> {
    let set: BTreeSet<ElementId> = a.iter().flat_map(|&x| b.iter().map(move |&y| s.mul(x, y))).collect();
    set.into_iter().collect()
}

/// Checks that `O(Γ)`, built from every directed subset modulo `~`, is
/// isomorphic to `Γ` through `x ↦ [{x}]`: the map is onto the classes,
/// one-to-one, multiplicative, and matches the orders.
pub fn completion_oracle(s: &InverseSemigroup) -> Result<usize, String> {
    let sets = directed_subsets(s);
    let equiv = |a: &[ElementId], b: &[ElementId]| set_leq(s, a, b) && set_leq(s, b, a);
    // The element each directed set is equivalent to, as a singleton.
    let mut rep = Vec::with_capacity(sets.len());
    for a in &sets {
        let hits: Vec<ElementId> = s.elements().filter(|&x| equiv(a, &[x])).collect();
        match hits.as_slice() {
            [x] => rep.push(*x),
            [] => return Err(format!("{:?} is not equivalent to any singleton", names(s, a))),
            _ => return Err(format!("{:?} is equivalent to several singletons", names(s, a))),
        }
    }
    let classes: BTreeSet<ElementId> = rep.iter().copied().collect();
    if classes.len() != s.len() {
        return Err(format!("{} classes for {} elements", classes.len(), s.len()));
    }
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            let ab = set_product(s, a, b);
            if !equiv(&ab, &[s.mul(rep[i], rep[j])]) {
                return Err(format!("[{:?}][{:?}] is not [{{xy}}]", names(s, a), names(s, b)));
            }
            if set_leq(s, a, b) != s.order().leq(rep[i], rep[j]) {
                return Err(format!("order differs at {:?}, {:?}", names(s, a), names(s, b)));
            }
        }
    }
    Ok(sets.len())
}

pub fn names(s: &InverseSemigroup, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| s.name(x)).collect()
}

/// A partial injection on `{0, …, N-1}`; `N` marks an undefined point.
pub type PartialMap = Vec<u8>;

fn compose(f: &PartialMap, g: &PartialMap) -> PartialMap {
    // `fg`: first `f`, then `g`.
    let n = f.len() as u8;
    f.iter().map(|&y| if y == n { n } else { g[y as usize] }).collect()
}

fn invert(f: &PartialMap) -> PartialMap {
    let n = f.len() as u8;
    let mut out = vec![n; f.len()];
    for (x, &y) in f.iter().enumerate() {
        if y != n {
            out[y as usize] = x as u8;
        }
    }
    out
}

/// Whether a map is injective on its domain.
pub fn is_injective(f: &PartialMap) -> bool {
    let n = f.len() as u8;
    let mut seen = BTreeSet::new();
    f.iter().filter(|&&y| y != n).all(|&y| seen.insert(y))
}

/// The inverse subsemigroup of the symmetric inverse monoid generated by
/// `gens` and their inverses.
pub fn generated_semigroup(gens: &[PartialMap]) -> InverseSemigroup {
    let mut elements: BTreeSet<PartialMap> = gens.iter().flat_map(|g| [g.clone(), invert(g)]).collect();
    loop {
        let current: Vec<PartialMap> = elements.iter().cloned().collect();
        let before = elements.len();
        for a in &current {
            for b in &current {
                elements.insert(compose(a, b));
            }
        }
        if elements.len() == before {
            break;
        }
    }
    let elements: Vec<PartialMap> = elements.into_iter().collect();
    let labels: Vec<String> = elements
        .iter()
        .map(|f| {
            let n = f.len() as u8;
            f.iter().map(|&y| if y == n { '-' } else { char::from(b'0' + y) }).collect()
        })
        .collect();
    from_closed_set(&elements, labels, |f| elements.iter().position(|e| e == f), compose)
        .expect("partial injections form an inverse semigroup")
}
