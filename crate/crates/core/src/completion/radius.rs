use super::CompletionError;
use crate::semigroup::{ElementId, InverseSemigroup, Semigroup};

/// Values in `[0, ∞]`; `f64::INFINITY` stands for `∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusFunction {
    pub values: Vec<f64>,
}

impl RadiusFunction {
    pub fn new(values: Vec<f64>) -> Self {
        RadiusFunction { values }
    }

    pub fn get(&self, x: ElementId) -> f64 {
        self.values[x.0]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusReport {
    /// `R(X) = sup {R(x) : X ≺ x}` for every class.
    pub lifted: Vec<f64>,
    /// `R(X) = ∞` exactly on the minimal classes, among nonzero classes.
    pub admissible: bool,
}

/// Checks (R1)–(R3) exhaustively and lifts `R` to `O(Γ)`.
pub fn check_radius(s: &InverseSemigroup, r: &RadiusFunction) -> Result<RadiusReport, CompletionError> {
    if r.values.len() != s.len() {
        return Err(CompletionError::OutOfRange(r.values.len()));
    }
    let fail = |axiom, witness: &[ElementId]| Err(CompletionError::ViolatedAxiom { axiom, witness: witness.to_vec() });
    if let Some(x) = s.elements().find(|&x| !(r.get(x) >= 0.0)) {
        return fail("range", &[x]);
    }
    if let Some(x) = s.elements().find(|&x| r.get(s.inv(x)) != r.get(x)) {
        return fail("R1", &[x]);
    }
    for x in s.elements() {
        for y in s.elements() {
            if r.get(s.mul(x, y)) < r.get(x).min(r.get(y)) {
                return fail("R2", &[x, y]);
            }
        }
    }
    let order = s.order();
    for (x, y) in order.pairs() {
        if r.get(y) > r.get(x) {
            return fail("R3", &[x, y]);
        }
    }
    let lifted: Vec<f64> = s
        .elements()
        .map(|x| order.up(x).ones().map(|y| r.values[y]).fold(f64::NEG_INFINITY, f64::max))
        .collect();
    let admissible = s
        .elements()
        .filter(|&x| !order.is_zero(x))
        .all(|x| (lifted[x.0] == f64::INFINITY) == order.is_minimal(x));
    Ok(RadiusReport { lifted, admissible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn constant_zero() {
        let s = corpus::semigroup("brandt2");
        let report = check_radius(&s, &RadiusFunction::new(vec![0.0; 5])).unwrap();
        assert!(!report.admissible);
    }

    #[test]
    fn infinite_on_minimal() {
        let s = corpus::semigroup("brandt2");
        let inf = f64::INFINITY;
        // With R(0) = 0, e12·e12 = 0 breaks (R2).
        let err = check_radius(&s, &RadiusFunction::new(vec![0.0, inf, inf, inf, inf])).unwrap_err();
        assert!(matches!(err, CompletionError::ViolatedAxiom { axiom: "R2", .. }));
        let report = check_radius(&s, &RadiusFunction::new(vec![inf; 5])).unwrap();
        assert!(report.admissible);
        assert_eq!(report.lifted, vec![inf; 5]);
    }

    #[test]
    fn asymmetric() {
        let s = corpus::semigroup("brandt2");
        let err = check_radius(&s, &RadiusFunction::new(vec![5.0, 1.0, 2.0, 1.0, 1.0])).unwrap_err();
        assert!(matches!(err, CompletionError::ViolatedAxiom { axiom: "R1", .. }));
    }

    #[test]
    fn chain_radius() {
        // 0 < p < t: R(t) = 1, R(p) = ∞, R(0) = ∞.
        let s = corpus::semigroup("chain3");
        let inf = f64::INFINITY;
        let r = RadiusFunction::new(vec![inf, inf, 1.0]);
        assert!(check_radius(&s, &r).unwrap().admissible);
        let bad = RadiusFunction::new(vec![inf, 1.0, 2.0]);
        assert!(matches!(check_radius(&s, &bad), Err(CompletionError::ViolatedAxiom { axiom: "R3", .. })));
    }
}
