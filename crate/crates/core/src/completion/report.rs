use std::fmt::Write as _;

use serde::Serialize;

use super::{
    basis_u, basis_v, class_of, completion_semigroup, minimal_groupoid, paterson_groupoid, quotient::equivalent,
    universal_groupoid, v_set, BasisSetDescriptor,
};
use crate::groupoid::{all_bisections, escape, is_isomorphism, GroupoidError, FiniteGroupoid};
use crate::semigroup::{classify, ElementId, Flags, InverseSemigroup, Semigroup};

/// Exhaustive checks of the basis sets `U` and `V` on one semigroup.
/// `None` marks a check whose hypotheses do not hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BasisChecks {
    /// Each `U_x` is a bisection of `G_u(Γ)`.
    pub u_bisections: bool,
    /// `U_{xy} = U_x U_y` and `U_{x⁻¹} = U_x⁻¹`.
    pub u_homomorphism: bool,
    pub u_injective: bool,
    /// `U_{xp; xp₁} = x U_{p; p₁}` for `p₁ ≺ p ≺ x⁻¹x`.
    pub product_rule: bool,
    /// Distinct classes are separated by some `U_{x; z}`.
    pub separation: bool,
    /// Intersections of basis sets contain a basis set around each point.
    pub refinement: bool,
    /// `j` is injective.
    pub membership_injective: bool,
    /// `V_{xy} = V_x V_y` and `V_{x⁻¹} = V_x⁻¹`.
    pub v_homomorphism: bool,
    /// `x < (x₁, …, xₙ) ⇔ V_x ⊆ ∪ V_{xᵢ}` for lists of length at most 3.
    pub covering_matches_v: Option<bool>,
    /// The same equivalence restricted to idempotents.
    pub covering_matches_v_idempotents: Option<bool>,
    /// `V_x = V_y ⇔ x <> y`.
    pub v_equal_iff_equivalent: Option<bool>,
    /// Every `V_{x; z}` is a union of sets `V_y`.
    pub v_sets_form_basis: Option<bool>,
}

impl BasisChecks {
    pub fn all(&self) -> bool {
        let opt = [
            self.covering_matches_v,
            self.covering_matches_v_idempotents,
            self.v_equal_iff_equivalent,
            self.v_sets_form_basis,
        ];
        self.u_bisections
            && self.u_homomorphism
            && self.u_injective
            && self.product_rule
            && self.separation
            && self.refinement
            && self.membership_injective
            && self.v_homomorphism
            && opt.iter().all(|c| c.unwrap_or(true))
    }
}

fn idx(v: &[ElementId]) -> Vec<usize> {
    v.iter().map(|x| x.0).collect()
}

/// All lists of length 1 to `max` over `pool`, in lexicographic order.
pub(crate) fn lists(pool: &[ElementId], max: usize) -> Vec<Vec<ElementId>> {
    let mut out: Vec<Vec<ElementId>> = Vec::new();
    let mut layer: Vec<Vec<ElementId>> = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|l| pool.iter().map(move |&x| [l.as_slice(), &[x]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `V_x ⊆ ∪ V_{xᵢ}`.
fn v_covered(v: &[Vec<ElementId>], x: ElementId, xs: &[ElementId]) -> bool {
    v[x.0].iter().all(|m| xs.iter().any(|&y| v[y.0].contains(m)))
}

pub fn basis_checks(s: &InverseSemigroup) -> BasisChecks {
    let order = s.order();
    let flags = classify(s);
    let gu = universal_groupoid(s);
    let all: Vec<ElementId> = s.elements().collect();
    let u: Vec<Vec<usize>> = all
        .iter()
        .map(|&x| idx(&basis_u(s, &BasisSetDescriptor::principal(x)).unwrap()))
        .collect();
    let v: Vec<Vec<ElementId>> = all.iter().map(|&x| v_set(s, x)).collect();

    let u_bisections = u.iter().all(|set| gu.is_bisection(set));
    let u_homomorphism = all.iter().all(|&x| {
        gu.set_inverse(&u[x.0]) == u[s.inv(x).0]
            && all.iter().all(|&y| gu.set_product(&u[x.0], &u[y.0]) == u[s.mul(x, y).0])
    });
    let u_injective = {
        let mut sorted = u.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == u.len()
    };

    let mut product_rule = true;
    for p in s.idempotents() {
        let excl: Vec<Vec<ElementId>> = std::iter::once(Vec::new())
            .chain(order.down(p).ones().map(|q| vec![ElementId(q)]))
            .collect();
        for x in all.iter().copied().filter(|&x| order.leq(p, s.source(x))) {
            for ps in &excl {
                let lhs = basis_u(s, &BasisSetDescriptor::new(s.mul(x, p), ps.iter().map(|&q| s.mul(x, q)).collect()));
                let rhs = basis_u(s, &BasisSetDescriptor::new(p, ps.clone()));
                product_rule &= match (lhs, rhs) {
                    (Ok(l), Ok(r)) => idx(&l) == gu.set_product(&u[x.0], &idx(&r)),
                    _ => false,
                };
            }
        }
    }

    let single_descriptors: Vec<BasisSetDescriptor> = order
        .pairs()
        .into_iter()
        .map(|(z, x)| BasisSetDescriptor::new(x, vec![z]))
        .chain(all.iter().map(|&x| BasisSetDescriptor::principal(x)))
        .collect();
    let single_u: Vec<Vec<ElementId>> = single_descriptors.iter().map(|d| basis_u(s, d).unwrap()).collect();
    let separation = all.iter().all(|&a| {
        all.iter()
            .filter(|&&b| b != a)
            .all(|&b| single_u.iter().any(|set| set.contains(&a) && !set.contains(&b)))
    });

    // For X in U_{x; x₁} ∩ U_{y; y₁} and every X ≺ z ≺ x, y the set
    // U_{z; z·x₁⁻¹x₁, z·y₁⁻¹y₁} contains X and lies in the intersection.
    let mut refinement = true;
    for (i, d) in single_descriptors.iter().enumerate() {
        for (k, e) in single_descriptors.iter().enumerate() {
            let inter: Vec<ElementId> = single_u[i].iter().copied().filter(|m| single_u[k].contains(m)).collect();
            for &point in &inter {
                for z in order.up(point).ones().map(ElementId) {
                    if !(order.leq(z, d.top) && order.leq(z, e.top)) {
                        continue;
                    }
                    let excluded = d
                        .excluded
                        .iter()
                        .chain(&e.excluded)
                        .map(|&w| s.mul(z, s.source(w)))
                        .collect();
                    let set = basis_u(s, &BasisSetDescriptor::new(z, excluded)).unwrap();
                    refinement &= set.contains(&point) && set.iter().all(|m| inter.contains(m));
                }
            }
        }
    }

    let membership_injective = {
        let mut ups: Vec<Vec<usize>> = all.iter().map(|&x| order.up(x).ones().collect()).collect();
        ups.sort();
        ups.dedup();
        ups.len() == all.len()
    };

    let nonzero = |z: ElementId| !order.is_zero(z);
    let v_product = |a: &[ElementId], b: &[ElementId]| {
        let mut out: Vec<ElementId> = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| s.mul(x, y)))
            .filter(|&z| nonzero(z))
            .collect();
        out.sort();
        out.dedup();
        out
    };
    let v_homomorphism = all.iter().all(|&x| {
        let mut inv: Vec<ElementId> = v[x.0].iter().map(|&m| s.inv(m)).collect();
        inv.sort();
        inv == v[s.inv(x).0] && all.iter().all(|&y| v_product(&v[x.0], &v[y.0]) == v[s.mul(x, y).0])
    });

    let lc = flags.lc;
    let covering_agrees = |pool: &[ElementId]| {
        lists(pool, 3).iter().all(|xs| {
            pool.iter()
                .all(|&x| order.covered_by(x, xs).unwrap() == v_covered(&v, x, xs))
        })
    };
    let covering_matches_v = lc.then(|| covering_agrees(&all));
    let covering_matches_v_idempotents = flags.has_zero.then(|| covering_agrees(&s.idempotents()));
    let v_equal_iff_equivalent =
        lc.then(|| all.iter().all(|&x| all.iter().all(|&y| (v[x.0] == v[y.0]) == equivalent(s, x, y))));
    let v_sets_form_basis = lc.then(|| {
        single_descriptors.iter().all(|d| {
            let set = basis_v(s, d).unwrap();
            set.iter().all(|m| all.iter().any(|&y| v[y.0].contains(m) && v[y.0].iter().all(|w| set.contains(w))))
        })
    });

    BasisChecks {
        u_bisections,
        u_homomorphism,
        u_injective,
        product_rule,
        separation,
        refinement,
        membership_injective,
        v_homomorphism,
        covering_matches_v,
        covering_matches_v_idempotents,
        v_equal_iff_equivalent,
        v_sets_form_basis,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletionReport {
    pub semigroup: String,
    pub flags: Flags,
    #[serde(rename = "|O|")]
    pub size: usize,
    /// `x ↦ [{x}]`.
    pub iso_witness: Vec<(String, String)>,
    pub basis_checks: BasisChecks,
    pub paterson_iso: bool,
}

pub fn completion_report(name: &str, s: &InverseSemigroup) -> CompletionReport {
    let c = completion_semigroup(s);
    CompletionReport {
        semigroup: name.to_string(),
        flags: classify(s),
        size: c.semigroup.len(),
        iso_witness: s
            .elements()
            .map(|x| (s.name(x), format!("[{{{}}}]", c.semigroup.name(c.embedding[x.0].least))))
            .collect(),
        basis_checks: basis_checks(s),
        paterson_iso: paterson_groupoid(s).checks.all(),
    }
}

/// Hasse diagram of `O(Γ)`, smaller elements at the bottom.
pub fn hasse_dot(s: &InverseSemigroup, title: &str) -> String {
    let order = s.order();
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
    out.push_str("  rankdir=BT;\n");
    for x in s.elements() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", x.0, escape(&s.name(x)));
    }
    for (x, y) in order.pairs() {
        let covers = x != y
            && !s
                .elements()
                .any(|z| z != x && z != y && order.leq(x, z) && order.leq(z, y));
        if covers {
            let _ = writeln!(out, "  n{} -> n{};", x.0, y.0);
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundtripReport {
    pub groupoid_size: usize,
    pub bisections: usize,
    pub minimal_groupoid_size: usize,
    /// `g ↦ [A_g]` as indices into `G_m`, when every `A_g` is directed.
    pub map: Option<Vec<usize>>,
    pub isomorphism: bool,
}

/// Rebuilds a groupoid as `G_m` of its bisection semigroup, sending `g` to
/// the class of the bisections containing it.
pub fn consistency_roundtrip(g: &FiniteGroupoid, cap: usize) -> Result<RoundtripReport, GroupoidError> {
    let b = all_bisections(g, cap)?;
    let s = &b.semigroup;
    let gm = minimal_groupoid(s);
    let map: Option<Vec<usize>> = (0..g.len())
        .map(|h| {
            let class = class_of(s, &b.containing(h)).ok()?;
            gm.by_tag(class.least.0)
        })
        .collect();
    let isomorphism = map.as_ref().is_some_and(|f| is_isomorphism(g, &gm, f));
    Ok(RoundtripReport {
        groupoid_size: g.len(),
        bisections: s.len(),
        minimal_groupoid_size: gm.len(),
        map,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::groupoid::DEFAULT_BISECTION_CAP;

    #[test]
    fn basis_checks_on_corpus() {
        for (name, s) in corpus::semigroups() {
            let c = basis_checks(&s);
            assert!(c.all(), "{name}: {c:?}");
        }
    }

    #[test]
    fn roundtrips() {
        for g in [
            FiniteGroupoid::pair(1),
            FiniteGroupoid::pair(2),
            FiniteGroupoid::pair(3),
            FiniteGroupoid::cyclic_group(2),
        ] {
            let r = consistency_roundtrip(&g, DEFAULT_BISECTION_CAP).unwrap();
            assert!(r.isomorphism, "{r:?}");
            assert_eq!(r.minimal_groupoid_size, g.len());
        }
    }

    #[test]
    fn hasse_of_chain() {
        let dot = hasse_dot(&corpus::semigroup("chain3"), "chain3");
        assert!(dot.contains("n0 -> n1;") && dot.contains("n1 -> n2;"));
        assert!(!dot.contains("n0 -> n2;"));
    }

    #[test]
    fn list_enumeration() {
        let pool = [ElementId(0), ElementId(1)];
        assert_eq!(lists(&pool, 3).len(), 2 + 4 + 8);
    }
}
