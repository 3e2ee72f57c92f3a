use std::collections::HashMap;

use super::{FiniteGroupoid, GroupoidError};
use crate::semigroup::{from_closed_set, ElementId, InverseSemigroup};

/// Largest groupoid accepted by [`all_bisections`] by default.
pub const DEFAULT_BISECTION_CAP: usize = 16;

/// The inverse semigroup `S(G)` of bisections, with the member list of each
/// element. Element `0` is the empty bisection.
#[derive(Debug, Clone)]
pub struct Bisections {
    pub semigroup: InverseSemigroup,
    pub members: Vec<Vec<usize>>,
}

impl Bisections {
    /// Index of the bisection `{g}`.
    pub fn singleton(&self, g: usize) -> ElementId {
        ElementId(
            self.members
                .iter()
                .position(|m| m.as_slice() == [g])
                .expect("every arrow is a bisection"),
        )
    }

    /// Bisections containing `g`.
    pub fn containing(&self, g: usize) -> Vec<ElementId> {
        (0..self.members.len())
            .filter(|&k| self.members[k].contains(&g))
            .map(ElementId)
            .collect()
    }
}

/// Every subset on which source and range are injective, ordered by size and
/// then lexicographically, with the setwise product.
pub fn all_bisections(g: &FiniteGroupoid, cap: usize) -> Result<Bisections, GroupoidError> {
    let n = g.len();
    if n > cap || n >= usize::BITS as usize {
        return Err(GroupoidError::CapExceeded { size: n, cap });
    }
    let mut members: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect::<Vec<_>>())
        .filter(|m| g.is_bisection(m))
        .collect();
    members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: HashMap<Vec<usize>, usize> =
        members.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
    let names = members
        .iter()
        .map(|m| {
            let inner: Vec<&str> = m.iter().map(|&x| g.name(x)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let semigroup = from_closed_set(
        &members,
        names,
        |m| index.get(m).copied(),
        |a, b| g.set_product(a, b),
    )
    .expect("bisections of a groupoid form an inverse semigroup");
    Ok(Bisections { semigroup, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::Semigroup;

    #[test]
    fn counts() {
        let one = all_bisections(&FiniteGroupoid::pair(1), DEFAULT_BISECTION_CAP).unwrap();
        assert_eq!(one.semigroup.len(), 2);
        // Partial injections on 2 and 3 points.
        let two = all_bisections(&FiniteGroupoid::pair(2), DEFAULT_BISECTION_CAP).unwrap();
        assert_eq!(two.semigroup.len(), 7);
        let three = all_bisections(&FiniteGroupoid::pair(3), DEFAULT_BISECTION_CAP).unwrap();
        assert_eq!(three.semigroup.len(), 34);
        let z2 = all_bisections(&FiniteGroupoid::cyclic_group(2), DEFAULT_BISECTION_CAP).unwrap();
        assert_eq!(z2.members, vec![vec![], vec![0], vec![1]]);
    }

    #[test]
    fn idempotents_are_unit_subsets() {
        let g = FiniteGroupoid::pair(2);
        let b = all_bisections(&g, DEFAULT_BISECTION_CAP).unwrap();
        assert_eq!(b.semigroup.zero(), Some(ElementId(0)));
        for x in b.semigroup.elements() {
            let all_units = b.members[x.0].iter().all(|&h| g.is_unit(h));
            assert_eq!(b.semigroup.is_idempotent(x), all_units);
        }
    }

    #[test]
    fn cap() {
        assert_eq!(
            all_bisections(&FiniteGroupoid::pair(3), 8).unwrap_err(),
            GroupoidError::CapExceeded { size: 9, cap: 8 }
        );
    }
}
