use std::collections::BTreeSet;

use serde::Serialize;

use super::{IdealError, IdealLattice, UnitIdeal, Units};
use crate::completion::{minimal_groupoid, v_set};
use crate::groupoid::{is_isomorphism, UnitSubset};
use crate::semigroup::{classify, validate, ElementId, InverseSemigroup, Semigroup};

/// (L) is required. A semigroup without zero is treated as if a zero were
/// adjoined, which changes none of the sets involved.
fn require_lattice(s: &InverseSemigroup) -> Result<(), IdealError> {
    if classify(s).lattice {
        Ok(())
    } else {
        Err(IdealError::LcViolated)
    }
}

/// `I(Γ)`, `V(Γ)` and the maps between them.
#[derive(Debug, Clone)]
pub struct LatticeMaps {
    pub ideals: IdealLattice,
    /// Invariant unit sets of `G_m(Γ)`, as sets of elements of `Γ`.
    pub open_sets: Vec<BTreeSet<ElementId>>,
    /// `S_u(I) = ∪_{q ∈ I} V_q`, as an index into `open_sets`.
    pub s_u: Vec<Option<usize>>,
    /// `S_i(V) = {q : V_q ⊆ V}`, as an index into `ideals.nodes`.
    pub s_i: Vec<Option<usize>>,
    pub verdict: MapsVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapsVerdict {
    pub s_u_lands_in_v: bool,
    pub s_i_lands_in_i: bool,
    pub s_i_after_s_u: bool,
    pub s_u_after_s_i: bool,
    pub preserves_join: bool,
    pub preserves_meet: bool,
}

impl MapsVerdict {
    pub fn all(&self) -> bool {
        self.s_u_lands_in_v
            && self.s_i_lands_in_i
            && self.s_i_after_s_u
            && self.s_u_after_s_i
            && self.preserves_join
            && self.preserves_meet
    }
}

pub fn lattice_maps(s: &InverseSemigroup) -> Result<LatticeMaps, IdealError> {
    require_lattice(s)?;
    let units = Units::new(s);
    let ideals = units.lattice();
    let gm = minimal_groupoid(s);
    let open_sets: Vec<BTreeSet<ElementId>> = gm
        .invariant_unit_subsets()
        .into_iter()
        .map(|e| e.0.into_iter().map(|u| ElementId(gm.tag(u))).collect())
        .collect();
    let v: Vec<Vec<ElementId>> = s.elements().map(|x| v_set(s, x)).collect();

    let su_set = |i: &UnitIdeal| -> BTreeSet<ElementId> { i.iter().flat_map(|q| v[q.0].iter().copied()).collect() };
    let si_set = |o: &BTreeSet<ElementId>| -> UnitIdeal {
        units.idempotents().iter().copied().filter(|q| v[q.0].iter().all(|m| o.contains(m))).collect()
    };
    let open_index = |o: &BTreeSet<ElementId>| open_sets.iter().position(|x| x == o);

    let s_u: Vec<Option<usize>> = ideals.nodes.iter().map(|i| open_index(&su_set(i))).collect();
    let s_i: Vec<Option<usize>> = open_sets.iter().map(|o| ideals.index_of(&si_set(o))).collect();
    let n = ideals.len();
    let s_u_lands_in_v = s_u.iter().all(Option::is_some);
    let s_i_lands_in_i = s_i.iter().all(Option::is_some);
    let s_i_after_s_u = (0..n).all(|k| s_u[k].and_then(|o| s_i[o]) == Some(k));
    let s_u_after_s_i = (0..open_sets.len()).all(|o| s_i[o].and_then(|k| s_u[k]) == Some(o));
    let mut preserves_join = s_u_lands_in_v && s_i_lands_in_i;
    let mut preserves_meet = preserves_join;
    if preserves_join {
        for a in 0..n {
            for b in 0..n {
                let (ua, ub) = (&open_sets[s_u[a].unwrap()], &open_sets[s_u[b].unwrap()]);
                let union: BTreeSet<ElementId> = ua.union(ub).copied().collect();
                let inter: BTreeSet<ElementId> = ua.intersection(ub).copied().collect();
                preserves_join &= open_sets[s_u[ideals.joins[a][b]].unwrap()] == union;
                preserves_meet &= open_sets[s_u[ideals.meets[a][b]].unwrap()] == inter;
            }
        }
        for (a, oa) in open_sets.iter().enumerate() {
            for (b, ob) in open_sets.iter().enumerate() {
                let (ia, ib) = (s_i[a].unwrap(), s_i[b].unwrap());
                let union: BTreeSet<ElementId> = oa.union(ob).copied().collect();
                let inter: BTreeSet<ElementId> = oa.intersection(ob).copied().collect();
                preserves_join &= ideals.index_of(&si_set(&union)) == Some(ideals.joins[ia][ib]);
                preserves_meet &= ideals.index_of(&si_set(&inter)) == Some(ideals.meets[ia][ib]);
            }
        }
    }
    let verdict = MapsVerdict {
        s_u_lands_in_v,
        s_i_lands_in_i,
        s_i_after_s_u,
        s_u_after_s_i,
        preserves_join,
        preserves_meet,
    };
    Ok(LatticeMaps { ideals, open_sets, s_u, s_i, verdict })
}

/// `∀p ≠ 0, q ∈ Γ⁽⁰⁾ ∃x₁…xₙ: xⱼ⁻¹xⱼ ≺ p, q < (x₁x₁⁻¹, …, xₙxₙ⁻¹)`.
///
/// Covering is monotone in the list, so the maximal list
/// `{xx⁻¹ : x⁻¹x ≺ p}` decides each pair exactly. Returns the first failing
/// `(p, q)`.
fn condition_ii_witness(s: &InverseSemigroup, units: &Units<'_, InverseSemigroup>) -> Option<(ElementId, ElementId)> {
    let order = units.order();
    for &p in units.idempotents() {
        if order.is_zero(p) {
            continue;
        }
        let list: Vec<ElementId> = s
            .elements()
            .filter(|&x| order.leq(s.source(x), p))
            .map(|x| s.range(x))
            .collect();
        let reach = order.down_union(&list);
        if let Some(&q) = units.idempotents().iter().find(|&&q| !order.covered_by_reach(q, &reach)) {
            return Some((p, q));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    /// (i): the lattice has no node besides its bottom and top.
    pub no_nontrivial_ideals: bool,
    /// (ii), decided exactly.
    pub condition_ii: bool,
    /// (iii): `G_m(Γ)` has at most one orbit.
    pub groupoid_minimal: bool,
    pub all_equal: bool,
    /// A node strictly between bottom and top, as element names.
    pub nontrivial_ideal: Option<Vec<String>>,
    /// A failing pair `(p, q)` for (ii).
    pub condition_ii_witness: Option<(String, String)>,
}

pub fn minimality_report(s: &InverseSemigroup) -> Result<MinimalityReport, IdealError> {
    require_lattice(s)?;
    let units = Units::new(s);
    let lattice = units.lattice();
    let (bottom, top) = (units.bottom(), units.all());
    let nontrivial = lattice.nodes.iter().find(|n| **n != bottom && **n != top);
    let witness = condition_ii_witness(s, &units);
    let gm = minimal_groupoid(s);
    let no_nontrivial_ideals = nontrivial.is_none();
    let condition_ii = witness.is_none();
    let groupoid_minimal = gm.orbits().len() <= 1;
    Ok(MinimalityReport {
        no_nontrivial_ideals,
        condition_ii,
        groupoid_minimal,
        all_equal: no_nontrivial_ideals == condition_ii && condition_ii == groupoid_minimal,
        nontrivial_ideal: nontrivial.map(|n| n.iter().map(|p| s.name(p)).collect()),
        condition_ii_witness: witness.map(|(p, q)| (s.name(p), s.name(q))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Simple,
    NotSimple,
    Conditional,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Simple => "SIMPLE",
            Verdict::NotSimple => "NOT-SIMPLE",
            Verdict::Conditional => "CONDITIONAL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub condition: bool,
    pub witness: Option<(String, String)>,
    pub principal: bool,
    pub assumed_essentially_principal: bool,
    pub verdict: Verdict,
    pub note: &'static str,
}

const NOTE_PRINCIPAL: &str = "finite G_m: essentially principal iff every unit is aperiodic";
const NOTE_ASSUMED: &str = "essential principality assumed";
const NOTE_FAILS: &str = "a nontrivial open invariant unit set gives a nontrivial ideal";
const NOTE_UNKNOWN: &str = "condition holds but G_m has isotropy; simplicity is not decided";

/// The verdict for a given condition outcome and principality data.
pub fn verdict(condition: bool, principal: bool, assume: bool) -> (Verdict, &'static str) {
    match (condition, principal, assume) {
        (false, _, _) => (Verdict::NotSimple, NOTE_FAILS),
        (true, true, _) => (Verdict::Simple, NOTE_PRINCIPAL),
        (true, false, true) => (Verdict::Simple, NOTE_ASSUMED),
        (true, false, false) => (Verdict::Conditional, NOTE_UNKNOWN),
    }
}

pub fn simplicity_report(s: &InverseSemigroup, assume_essentially_principal: bool) -> Result<SimplicityReport, IdealError> {
    require_lattice(s)?;
    let units = Units::new(s);
    let witness = condition_ii_witness(s, &units);
    let principal = minimal_groupoid(s).is_principal();
    let (v, note) = verdict(witness.is_none(), principal, assume_essentially_principal);
    Ok(SimplicityReport {
        condition: witness.is_none(),
        witness: witness.map(|(p, q)| (s.name(p), s.name(q))),
        principal,
        assumed_essentially_principal: assume_essentially_principal,
        verdict: v,
        note,
    })
}

/// `Γ_I = {x : xx⁻¹ ∈ I}` and the reduction isomorphism
/// `G_m(Γ_I) ≅ G_m(Γ)_{V(I)}`.
#[derive(Debug, Clone)]
pub struct GammaI {
    pub semigroup: InverseSemigroup,
    /// The element of `Γ` behind each element of `Γ_I`; `None` for an
    /// adjoined zero.
    pub embedding: Vec<Option<ElementId>>,
    pub zero_adjoined: bool,
    /// `V(I)`, as elements of `Γ`.
    pub v_of_i: BTreeSet<ElementId>,
    pub reduction_iso: bool,
}

pub fn gamma_i(s: &InverseSemigroup, ideal: &UnitIdeal) -> Result<GammaI, IdealError> {
    let units = Units::new(s);
    units.check(ideal)?;
    if let Some(p) = ideal.iter().find(|&p| !units.order().down(p).ones().all(|q| ideal.contains(ElementId(q)))) {
        return Err(IdealError::NotInvariantIdeal(p));
    }
    if let Some(p) = units.invariance_witness(ideal) {
        return Err(IdealError::NotInvariantIdeal(p));
    }
    let zero_adjoined = s.zero().is_none();
    let mut embedding: Vec<Option<ElementId>> = Vec::new();
    if zero_adjoined {
        embedding.push(None);
    }
    embedding.extend(s.elements().filter(|&x| ideal.contains(s.range(x))).map(Some));
    let pos = |x: Option<ElementId>| embedding.iter().position(|&e| e == x);
    let zero_of_s = s.zero();
    let project = |x: Option<ElementId>, y: Option<ElementId>| match (x, y) {
        (Some(a), Some(b)) => pos(Some(s.mul(a, b))).expect("Γ_I is a subsemigroup"),
        _ => pos(if zero_adjoined { None } else { zero_of_s }).expect("zero lies in Γ_I"),
    };
    let n = embedding.len();
    if n == 0 {
        // Only the empty ideal on a semigroup with zero gets here.
        return Err(IdealError::NotInvariantIdeal(zero_of_s.expect("zero")));
    }
    let raw: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| project(embedding[i], embedding[j])).collect()).collect();
    let names = embedding
        .iter()
        .map(|e| e.map_or_else(|| "0".to_string(), |x| s.name(x)))
        .collect();
    let zero_pos = ElementId(project(embedding[0], None));
    let semigroup = validate(&raw, Some(names)).expect("Γ_I is an inverse subsemigroup").with_zero(zero_pos);

    let v_of_i: BTreeSet<ElementId> = ideal.iter().flat_map(|q| v_set(s, q)).collect();
    let gm = minimal_groupoid(s);
    let e: UnitSubset = (0..gm.len())
        .filter(|&u| gm.is_unit(u) && v_of_i.contains(&ElementId(gm.tag(u))))
        .collect();
    let reduction_iso = match gm.reduction(&e) {
        Ok(reduced) => {
            let gm_i = minimal_groupoid(&semigroup);
            let f: Option<Vec<usize>> = (0..gm_i.len())
                .map(|k| embedding[gm_i.tag(k)].and_then(|x| reduced.by_tag(x.0)))
                .collect();
            f.is_some_and(|f| is_isomorphism(&gm_i, &reduced, &f))
        }
        Err(_) => false,
    };
    Ok(GammaI { semigroup, embedding, zero_adjoined, v_of_i, reduction_iso })
}
