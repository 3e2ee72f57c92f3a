use super::CompletionError;
use crate::semigroup::{from_closed_set, ElementId, InverseSemigroup, Semigroup};

/// `Γ̃ = Γ/<>` with the projection `π`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub semigroup: InverseSemigroup,
    /// `π(x)` for every `x`.
    pub projection: Vec<ElementId>,
    /// Members of each class, ascending; classes ordered by least member.
    pub classes: Vec<Vec<ElementId>>,
}

impl Quotient {
    pub fn project(&self, x: ElementId) -> ElementId {
        self.projection[x.0]
    }

    /// Every class is a singleton.
    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// `x <> y`: `x < (y)` and `y < (x)`.
pub fn equivalent(s: &InverseSemigroup, x: ElementId, y: ElementId) -> bool {
    let order = s.order();
    order.covered_by_reach(x, order.down(y)) && order.covered_by_reach(y, order.down(x))
}

pub fn quotient_tilde(s: &InverseSemigroup) -> Result<Quotient, CompletionError> {
    let mut projection = vec![ElementId(usize::MAX); s.len()];
    let mut classes: Vec<Vec<ElementId>> = Vec::new();
    for x in s.elements() {
        if projection[x.0].0 != usize::MAX {
            continue;
        }
        let class: Vec<ElementId> = s.elements().filter(|&y| equivalent(s, x, y)).collect();
        for &y in &class {
            projection[y.0] = ElementId(classes.len());
        }
        classes.push(class);
    }
    for x in s.elements() {
        for y in s.elements() {
            let xy = projection[s.mul(x, y).0];
            let rep = projection[s.mul(classes[projection[x.0].0][0], classes[projection[y.0].0][0]).0];
            if xy != rep {
                return Err(CompletionError::NotCongruence(x, y));
            }
        }
    }
    let names = classes
        .iter()
        .map(|c| match c.as_slice() {
            [x] => s.name(*x),
            _ => format!("[{}]", c.iter().map(|&x| s.name(x)).collect::<Vec<_>>().join("=")),
        })
        .collect();
    let index: Vec<usize> = (0..classes.len()).collect();
    let semigroup = from_closed_set(
        &index,
        names,
        |&k| Some(k),
        |&a, &b| projection[s.mul(classes[a][0], classes[b][0]).0].0,
    )
    .expect("the quotient of an inverse semigroup by a congruence is inverse");
    Ok(Quotient { semigroup, projection, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn corpus_quotients() {
        for (name, s) in corpus::semigroups() {
            let q = quotient_tilde(&s).unwrap();
            let qo = q.semigroup.order();
            for x in s.elements() {
                for y in s.elements() {
                    let covered = s.covered_by(x, &[y]).unwrap();
                    assert_eq!(qo.leq(q.project(x), q.project(y)), covered, "{name}");
                    assert_eq!(q.project(s.mul(x, y)), q.semigroup.mul(q.project(x), q.project(y)));
                }
            }
        }
    }

    #[test]
    fn trivial_cases() {
        for name in ["trivial_group", "brandt2", "semilattice4", "sym_inverse_monoid2"] {
            assert!(quotient_tilde(&corpus::semigroup(name)).unwrap().is_trivial(), "{name}");
        }
    }

    #[test]
    fn covered_top_collapses() {
        // In the chain 0 < p < t every nonzero element meets p, so t <> p.
        let chain = corpus::semigroup("chain3");
        let q = quotient_tilde(&chain).unwrap();
        assert_eq!(q.semigroup.len(), 2);
        assert_eq!(q.project(chain.by_name("p").unwrap()), q.project(chain.by_name("t").unwrap()));
    }
}
