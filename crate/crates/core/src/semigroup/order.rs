use fixedbitset::FixedBitSet;
use thiserror::Error;

use super::{ElementId, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("covering list is empty")]
    EmptyList,
}

/// Why a meet does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeetError {
    #[error("{0} and {1} have no common lower bound other than zero")]
    NoNonzeroLowerBound(ElementId, ElementId),
    #[error("{0} and {1} have nonzero common lower bounds but no largest one")]
    NoLargestLowerBound(ElementId, ElementId),
}

/// The natural partial order `x ≺ y ⇔ x·y⁻¹ = x·x⁻¹`, stored as down-sets and
/// up-sets.
///
/// An order built with [`NaturalOrder::on_idempotents`] only fills the rows of
/// idempotents. Everything below an idempotent is idempotent, so covering and
/// minimality questions about idempotents are still answered exactly.
#[derive(Debug, Clone)]
pub struct NaturalOrder {
    zero: Option<ElementId>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    rows: FixedBitSet,
}

impl NaturalOrder {
    pub fn new<S: Semigroup + ?Sized>(s: &S) -> Self {
        let all: Vec<ElementId> = s.elements().collect();
        Self::build(s, &all, &all)
    }

    /// The order restricted to Γ⁽⁰⁾; only idempotent rows are filled.
    pub fn on_idempotents<S: Semigroup + ?Sized>(s: &S) -> Self {
        let idem = s.idempotents();
        Self::build(s, &idem, &idem)
    }

    fn build<S: Semigroup + ?Sized>(s: &S, rows: &[ElementId], cols: &[ElementId]) -> Self {
        let n = s.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut filled = FixedBitSet::with_capacity(n);
        for &y in rows {
            filled.insert(y.0);
        }
        let yinv: Vec<ElementId> = rows.iter().map(|&y| s.inv(y)).collect();
        for &x in cols {
            let xx = s.range(x);
            for (k, &y) in rows.iter().enumerate() {
                if s.try_mul(x, yinv[k]) == Some(xx) {
                    down[y.0].insert(x.0);
                    up[x.0].insert(y.0);
                }
            }
        }
        NaturalOrder { zero: s.zero(), down, up, rows: filled }
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    /// `x ≺ y`.
    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.down[y.0].contains(x.0)
    }

    pub fn down(&self, x: ElementId) -> &FixedBitSet {
        &self.down[x.0]
    }

    pub fn up(&self, x: ElementId) -> &FixedBitSet {
        &self.up[x.0]
    }

    pub fn has_row(&self, x: ElementId) -> bool {
        self.rows.contains(x.0)
    }

    pub fn is_zero(&self, x: ElementId) -> bool {
        self.zero == Some(x)
    }

    /// All pairs `(x, y)` with `x ≺ y`, sorted.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for (y, d) in self.down.iter().enumerate() {
            out.extend(d.ones().map(|x| (ElementId(x), ElementId(y))));
        }
        out.sort_by_key(|&(x, y)| (x, y));
        out
    }

    /// Γ_min: nonzero elements whose only nonzero predecessor is themselves.
    pub fn minimal_elements(&self) -> Vec<ElementId> {
        self.rows
            .ones()
            .map(ElementId)
            .filter(|&x| self.is_minimal(x))
            .collect()
    }

    pub fn is_minimal(&self, x: ElementId) -> bool {
        !self.is_zero(x)
            && self.down[x.0]
                .ones()
                .all(|y| y == x.0 || self.is_zero(ElementId(y)))
    }

    fn without_zero(&self, mut set: FixedBitSet) -> FixedBitSet {
        if let Some(z) = self.zero {
            set.set(z.0, false);
        }
        set
    }

    /// Union of the down-sets of `xs`.
    pub fn down_union(&self, xs: &[ElementId]) -> FixedBitSet {
        let mut reach = FixedBitSet::with_capacity(self.len());
        for &x in xs {
            reach.union_with(&self.down[x.0]);
        }
        reach
    }

    /// `x < (x₁, …, xₙ)`: every nonzero `y ≺ x` has a nonzero `z` below both
    /// `y` and some `xⱼ`.
    pub fn covered_by(&self, x: ElementId, xs: &[ElementId]) -> Result<bool, OrderError> {
        if xs.is_empty() {
            return Err(OrderError::EmptyList);
        }
        Ok(self.covered_by_reach(x, &self.down_union(xs)))
    }

    /// [`Self::covered_by`] against a precomputed [`Self::down_union`].
    pub fn covered_by_reach(&self, x: ElementId, reach: &FixedBitSet) -> bool {
        let below = self.without_zero(self.down[x.0].clone());
        below.ones().all(|y| {
            let mut common = self.down[y].clone();
            common.intersect_with(reach);
            self.without_zero(common).count_ones(..) > 0
        })
    }

    /// Common lower bounds of `x` and `y`.
    pub fn lower_bounds(&self, x: ElementId, y: ElementId) -> FixedBitSet {
        let mut lb = self.down[x.0].clone();
        lb.intersect_with(&self.down[y.0]);
        lb
    }

    /// Largest element of `set`, if there is one.
    pub fn greatest(&self, set: &FixedBitSet) -> Option<ElementId> {
        set.ones()
            .map(ElementId)
            .find(|&m| set.is_subset(&self.down[m.0]))
    }

    /// Least element of `set`, if there is one.
    pub fn least(&self, set: &FixedBitSet) -> Option<ElementId> {
        set.ones().map(ElementId).find(|&m| set.is_subset(&self.up[m.0]))
    }
}

/// `x·x⁻¹·y·y⁻¹·x`, the meet of two elements that share a successor.
pub fn meet_closed_form<S: Semigroup + ?Sized>(s: &S, x: ElementId, y: ElementId) -> Option<ElementId> {
    let p = s.range(x);
    let q = s.range(y);
    let pq = s.try_mul(p, q)?;
    s.try_mul(pq, x)
}

/// Largest common lower bound of `x` and `y`, found by exhaustive search.
///
/// When `x` and `y` have a common successor the closed form
/// [`meet_closed_form`] must agree with the search; a mismatch is a bug in
/// the table and panics in debug builds.
pub fn meet<S: Semigroup + ?Sized>(
    s: &S,
    order: &NaturalOrder,
    x: ElementId,
    y: ElementId,
) -> Result<ElementId, MeetError> {
    let lb = order.lower_bounds(x, y);
    if order.without_zero(lb.clone()).count_ones(..) == 0 {
        return Err(MeetError::NoNonzeroLowerBound(x, y));
    }
    let m = order
        .greatest(&lb)
        .ok_or(MeetError::NoLargestLowerBound(x, y))?;
    if cfg!(debug_assertions) {
        let mut succ = order.up(x).clone();
        succ.intersect_with(order.up(y));
        if succ.count_ones(..) > 0 {
            debug_assert_eq!(meet_closed_form(s, x, y), Some(m));
        }
    }
    Ok(m)
}
