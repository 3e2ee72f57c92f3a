//! Finite inverse semigroups given by Cayley tables.
//!
//! An [`InverseSemigroup`] is only ever produced by [`validate`], which checks
//! associativity and the existence and uniqueness of inverses exhaustively.
//! Everything downstream works on element indices ([`ElementId`]); names are
//! carried along for display only.

mod classify;
pub mod laws;
mod order;
mod parse;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

pub use classify::{classify, Flags};
pub use order::{meet, meet_closed_form, MeetError, NaturalOrder, OrderError};
pub use parse::{parse_cayley, write_cayley, ParseError};

/// Position of an element in the element list of a semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Table access shared by complete semigroups and truncated fragments.
///
/// `try_mul` returns `None` when the product exists in the ambient semigroup
/// but falls outside the represented fragment. Complete semigroups never
/// return `None`.
pub trait Semigroup {
    fn len(&self) -> usize;

    fn try_mul(&self, x: ElementId, y: ElementId) -> Option<ElementId>;

    fn inv(&self, x: ElementId) -> ElementId;

    fn zero(&self) -> Option<ElementId>;

    fn label(&self, x: ElementId) -> String {
        x.0.to_string()
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn elements(&self) -> std::iter::Map<std::ops::Range<usize>, fn(usize) -> ElementId> {
        (0..self.len()).map(ElementId as fn(usize) -> ElementId)
    }

    fn is_idempotent(&self, x: ElementId) -> bool {
        self.try_mul(x, x) == Some(x)
    }

    /// Γ⁽⁰⁾, in index order.
    fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// `x⁻¹x`. Always inside the fragment for the semigroups in this crate.
    fn source(&self, x: ElementId) -> ElementId {
        self.try_mul(self.inv(x), x)
            .expect("x^-1 x lies in every fragment containing x")
    }

    /// `xx⁻¹`.
    fn range(&self, x: ElementId) -> ElementId {
        self.try_mul(x, self.inv(x))
            .expect("x x^-1 lies in every fragment containing x")
    }

    /// `x·p·x⁻¹`, or `None` if an intermediate product leaves the fragment.
    fn conjugate(&self, x: ElementId, p: ElementId) -> Option<ElementId> {
        let xp = self.try_mul(x, p)?;
        self.try_mul(xp, self.inv(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("empty table: a semigroup needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("{names} names given for {expected} elements")]
    NameCount { names: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element {x} has several inverses: {candidates:?}")]
    NonUniqueInverse { x: usize, candidates: Vec<usize> },
}

/// A validated finite inverse semigroup.
#[derive(Debug)]
pub struct InverseSemigroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    zero: Option<ElementId>,
    names: Option<Vec<String>>,
    order: OnceLock<NaturalOrder>,
}

impl Clone for InverseSemigroup {
    fn clone(&self) -> Self {
        InverseSemigroup {
            n: self.n,
            table: self.table.clone(),
            inv: self.inv.clone(),
            zero: self.zero,
            names: self.names.clone(),
            order: OnceLock::new(),
        }
    }
}

impl PartialEq for InverseSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for InverseSemigroup {}

/// Checks a raw Cayley table and derives inverses and the zero.
///
/// Entry `raw[i][j]` is the product of element `i` with element `j`.
/// Failures are exact: the first failing associativity triple in
/// lexicographic order, or the first element without a unique inverse.
pub fn validate(
    raw: &[Vec<usize>],
    names: Option<Vec<String>>,
) -> Result<InverseSemigroup, ValidationError> {
    let n = raw.len();
    if n == 0 {
        return Err(ValidationError::Empty);
    }
    if let Some(names) = &names {
        if names.len() != n {
            return Err(ValidationError::NameCount { names: names.len(), expected: n });
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for (row, entries) in raw.iter().enumerate() {
        if entries.len() != n {
            return Err(ValidationError::Ragged { row, len: entries.len(), expected: n });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(ValidationError::OutOfRange { row, col, value });
            }
            table.push(value);
        }
    }
    let mul = |x: usize, y: usize| table[x * n + y];

    for x in 0..n {
        for y in 0..n {
            let xy = mul(x, y);
            for z in 0..n {
                if mul(xy, z) != mul(x, mul(y, z)) {
                    return Err(ValidationError::NotAssociative { x, y, z });
                }
            }
        }
    }

    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let candidates: Vec<usize> = (0..n)
            .filter(|&y| mul(mul(x, y), x) == x && mul(mul(y, x), y) == y)
            .collect();
        match candidates.as_slice() {
            [] => return Err(ValidationError::NoInverse(x)),
            [y] => inv.push(*y),
            _ => return Err(ValidationError::NonUniqueInverse { x, candidates }),
        }
    }

    // A one-element table is read as the trivial group, not as {0}.
    let zero = if n < 2 {
        None
    } else {
        (0..n)
            .find(|&z| (0..n).all(|x| mul(z, x) == z && mul(x, z) == z))
            .map(ElementId)
    };

    Ok(InverseSemigroup { n, table, inv, zero, names, order: OnceLock::new() })
}

impl InverseSemigroup {
    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.table[x.0 * self.n + y.0])
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: ElementId) -> String {
        match &self.names {
            Some(names) => names[x.0].clone(),
            None => x.0.to_string(),
        }
    }

    /// Looks an element up by display name.
    pub fn by_name(&self, name: &str) -> Option<ElementId> {
        self.names
            .as_ref()
            .and_then(|names| names.iter().position(|n| n == name))
            .map(ElementId)
    }

    /// The raw table, row-major.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The natural partial order, computed once and cached.
    pub fn order(&self) -> &NaturalOrder {
        self.order.get_or_init(|| NaturalOrder::new(self))
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        self.order().minimal_elements()
    }

    pub fn covered_by(&self, x: ElementId, xs: &[ElementId]) -> Result<bool, OrderError> {
        self.order().covered_by(x, xs)
    }

    pub fn meet(&self, x: ElementId, y: ElementId) -> Result<ElementId, MeetError> {
        meet(self, self.order(), x, y)
    }

    /// Declares `z` the zero. Only needed for the one-element semigroup
    /// `{0}`, which [`validate`] reads as the trivial group.
    pub fn with_zero(mut self, z: ElementId) -> Self {
        assert!(
            self.elements().all(|x| self.mul(z, x) == z && self.mul(x, z) == z),
            "{z} is not a zero"
        );
        self.zero = Some(z);
        self.order = OnceLock::new();
        self
    }

    /// Renames elements, keeping the structure.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }
}

impl Semigroup for InverseSemigroup {
    fn len(&self) -> usize {
        self.n
    }

    fn try_mul(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        Some(self.mul(x, y))
    }

    fn inv(&self, x: ElementId) -> ElementId {
        ElementId(self.inv[x.0])
    }

    fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    fn label(&self, x: ElementId) -> String {
        self.name(x)
    }
}

/// Builds the table of a semigroup whose elements are already known values
/// with a multiplication, then validates it. Used by the constructions that
/// produce new semigroups (bisections, quotients, subsemigroups).
pub fn from_closed_set<T, F>(
    elements: &[T],
    names: Vec<String>,
    index_of: impl Fn(&T) -> Option<usize>,
    mul: F,
) -> Result<InverseSemigroup, ValidationError>
where
    F: Fn(&T, &T) -> T,
{
    let n = elements.len();
    let mut raw = vec![vec![0; n]; n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let c = mul(a, b);
            // A product outside the set shows up as an out-of-range entry.
            raw[i][j] = index_of(&c).unwrap_or(n);
        }
    }
    validate(&raw, Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn brandt() -> InverseSemigroup {
        // 0, e11, e12, e21, e22 with matrix-unit multiplication.
        let units = [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)];
        let mut raw = vec![vec![0; 5]; 5];
        for (i, &(a, b)) in units.iter().enumerate() {
            for (j, &(c, d)) in units.iter().enumerate() {
                if i == 0 || j == 0 || b != c {
                    raw[i][j] = 0;
                } else {
                    raw[i][j] = units.iter().position(|&u| u == (a, d)).unwrap();
                }
            }
        }
        let names = ["0", "e11", "e12", "e21", "e22"].map(String::from).to_vec();
        validate(&raw, Some(names)).unwrap()
    }

    #[test]
    fn trivial_group_has_no_zero() {
        let s = validate(&[vec![0]], None).unwrap();
        assert_eq!(s.zero(), None);
        assert_eq!(s.inv(ElementId(0)), ElementId(0));
    }

    #[test]
    fn brandt_inverse_and_zero() {
        let s = brandt();
        assert_eq!(s.inv(s.by_name("e12").unwrap()), s.by_name("e21").unwrap());
        assert_eq!(s.zero(), s.by_name("0"));
        for x in s.elements() {
            assert_eq!(s.inv(s.inv(x)), x);
        }
    }

    #[test]
    fn left_zero_semigroup_has_non_unique_inverse() {
        let err = validate(&[vec![0, 0], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, ValidationError::NonUniqueInverse { x: 0, candidates: vec![0, 1] });
    }

    #[test]
    fn corrupted_table_reports_triple() {
        let s = brandt();
        let mut raw = s.rows();
        raw[1][2] = 1; // e11*e12 should be e12
        match validate(&raw, None) {
            Err(ValidationError::NotAssociative { .. }) => {}
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        assert_eq!(validate(&[], None).unwrap_err(), ValidationError::Empty);
        assert_eq!(
            validate(&[vec![0, 1], vec![0]], None).unwrap_err(),
            ValidationError::Ragged { row: 1, len: 1, expected: 2 }
        );
        assert_eq!(
            validate(&[vec![0, 2], vec![0, 1]], None).unwrap_err(),
            ValidationError::OutOfRange { row: 0, col: 1, value: 2 }
        );
    }

    #[test]
    fn null_semigroup_has_no_inverse() {
        // 1*y*1 = 0 != 1 for every y.
        let err = validate(&[vec![0, 0], vec![0, 0]], None).unwrap_err();
        assert_eq!(err, ValidationError::NoInverse(1));
    }
}
