use serde::Serialize;

use super::{meet, ElementId, InverseSemigroup, MeetError, Semigroup};

/// Structural conditions decided exhaustively on a finite semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    #[serde(rename = "E_unitary")]
    pub e_unitary: bool,
    #[serde(rename = "zero_E_unitary")]
    pub zero_e_unitary: bool,
    /// Any two elements with a nonzero common lower bound have a meet.
    #[serde(rename = "L")]
    pub lattice: bool,
    /// Trapping condition.
    #[serde(rename = "T")]
    pub trapping: bool,
    /// Zero, (L), and a closed minimal unit space. The last part is automatic
    /// for finite semigroups, where every subset of the unit space is closed.
    #[serde(rename = "LC")]
    pub lc: bool,
    pub has_zero: bool,
}

pub fn classify(s: &InverseSemigroup) -> Flags {
    let order = s.order();
    let idem: Vec<ElementId> = s.idempotents();
    let is_idem = |x: ElementId| s.is_idempotent(x);
    let zero = s.zero();

    let upward_closed = |skip_zero: bool| {
        idem.iter()
            .filter(|&&e| !(skip_zero && Some(e) == zero))
            .all(|&e| {
                order
                    .up(e)
                    .ones()
                    .map(ElementId)
                    .all(|y| is_idem(y) && !(skip_zero && Some(y) == zero))
            })
    };
    let e_unitary = upward_closed(false);
    let zero_e_unitary = upward_closed(true);

    let lattice = s.elements().all(|x| {
        s.elements()
            .all(|y| !matches!(meet(s, order, x, y), Err(MeetError::NoLargestLowerBound(..))))
    });

    // For q ≺ p the most generous admissible list is every r ≺ p with r ≺ q
    // or rq = 0; covering is monotone in the list, so testing that one list
    // decides the condition. q = 0 is included; it is harmless.
    let trapping = zero.is_some()
        && idem.iter().all(|&p| {
            idem.iter().filter(|&&q| order.leq(q, p)).all(|&q| {
                let mut list: Vec<ElementId> = idem
                    .iter()
                    .copied()
                    .filter(|&r| order.leq(r, p) && (order.leq(r, q) || Some(s.mul(r, q)) == zero))
                    .collect();
                list.push(q);
                order.covered_by(p, &list).unwrap_or(false)
            })
        });

    Flags {
        e_unitary,
        zero_e_unitary,
        lattice,
        trapping,
        lc: zero.is_some() && lattice,
        has_zero: zero.is_some(),
    }
}
