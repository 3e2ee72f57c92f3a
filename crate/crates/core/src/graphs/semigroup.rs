//! The graph inverse semigroup `Γ(g)` of pairs `(α, β)` with `r(α) = r(β)`,
//! truncated to paths of length at most `maxlen`.

use std::collections::HashMap;

use serde::Serialize;

use super::{DirectedGraph, FinitePath, GraphError};
use crate::semigroup::{ElementId, NaturalOrder, Semigroup};

/// A nonzero element `(α, β)` of `Γ(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPair {
    pub alpha: FinitePath,
    pub beta: FinitePath,
}

impl PathPair {
    pub fn new(alpha: FinitePath, beta: FinitePath) -> Result<Self, GraphError> {
        if alpha.range() != beta.range() {
            return Err(GraphError::RangeMismatch);
        }
        Ok(PathPair { alpha, beta })
    }

    pub fn inverse(&self) -> PathPair {
        PathPair { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    pub fn is_idempotent(&self) -> bool {
        self.alpha == self.beta
    }

    /// Length of the longer path.
    pub fn depth(&self) -> usize {
        self.alpha.len().max(self.beta.len())
    }

    /// `(γ, δ) ≺ (α, β)` read off the paths: `γ = αμ` and `δ = βμ`.
    pub fn below(&self, other: &PathPair) -> bool {
        match (other.alpha.strip_from(&self.alpha), other.beta.strip_from(&self.beta)) {
            (Some(m1), Some(m2)) => m1 == m2,
            _ => false,
        }
    }

    pub fn label(&self, g: &DirectedGraph) -> String {
        format!("({},{})", g.path_label(&self.alpha), g.path_label(&self.beta))
    }
}

/// The product in `Γ(g)` with no length bound; `None` is zero.
///
/// `(α, β)(βμ, δ) = (αμ, δ)` and `(α, γμ)(γ, δ) = (α, δμ)`; every other
/// product is zero.
pub fn pair_product(x: &PathPair, y: &PathPair) -> Option<PathPair> {
    if let Some(mu) = x.beta.strip_from(&y.alpha) {
        return Some(PathPair { alpha: x.alpha.concat(&mu), beta: y.beta.clone() });
    }
    if let Some(mu) = y.alpha.strip_from(&x.beta) {
        return Some(PathPair { alpha: x.alpha.clone(), beta: y.beta.concat(&mu) });
    }
    None
}

/// Length of the longest common suffix of `α` and `β`.
pub fn radius(alpha: &FinitePath, beta: &FinitePath) -> Result<usize, GraphError> {
    if alpha.range() != beta.range() {
        return Err(GraphError::RangeMismatch);
    }
    Ok(alpha
        .edges()
        .iter()
        .rev()
        .zip(beta.edges().iter().rev())
        .take_while(|(a, b)| a == b)
        .count())
}

/// `Γ(g)` restricted to pairs of paths of length at most `maxlen`.
///
/// Element 0 is the zero. A product whose paths are too long is reported as
/// overflow (`try_mul` returns `None`); it is never confused with zero.
#[derive(Debug, Clone)]
pub struct GraphSemigroup {
    graph: DirectedGraph,
    maxlen: usize,
    pairs: Vec<PathPair>,
    index: HashMap<PathPair, usize>,
}

impl GraphSemigroup {
    pub fn new(graph: &DirectedGraph, maxlen: usize) -> Self {
        let paths = graph.paths_up_to(maxlen);
        let mut pairs = Vec::new();
        for a in &paths {
            for b in paths.iter().filter(|b| b.range() == a.range()) {
                pairs.push(PathPair { alpha: a.clone(), beta: b.clone() });
            }
        }
        let index = pairs.iter().enumerate().map(|(k, p)| (p.clone(), k + 1)).collect();
        GraphSemigroup { graph: graph.clone(), maxlen, pairs, index }
    }

    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn maxlen(&self) -> usize {
        self.maxlen
    }

    pub const ZERO: ElementId = ElementId(0);

    /// The pair behind a nonzero element.
    pub fn pair(&self, x: ElementId) -> Option<&PathPair> {
        x.0.checked_sub(1).map(|k| &self.pairs[k])
    }

    pub fn id_of(&self, p: &PathPair) -> Option<ElementId> {
        self.index.get(p).map(|&k| ElementId(k))
    }

    /// Number of products that leave the fragment.
    pub fn overflow_count(&self) -> usize {
        let mut n = 0;
        for x in self.elements() {
            for y in self.elements() {
                if self.try_mul(x, y).is_none() {
                    n += 1;
                }
            }
        }
        n
    }

    /// Compares the table order with the characterization `γ = αμ, δ = βμ`
    /// and checks that elements with a nonzero common lower bound are
    /// comparable.
    pub fn order_report(&self) -> OrderReport {
        let order = NaturalOrder::new(self);
        let mut mismatches = Vec::new();
        let mut incomparable = Vec::new();
        let mut relations = 0;
        for x in self.elements() {
            for y in self.elements() {
                let table = order.leq(x, y);
                relations += usize::from(table);
                let paths = match (self.pair(x), self.pair(y)) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(a), Some(b)) => a.below(b),
                };
                if table != paths && mismatches.len() < 5 {
                    mismatches.push([self.label(x), self.label(y)]);
                }
                if x < y && !order.leq(x, y) && !order.leq(y, x) {
                    let mut lb = order.lower_bounds(x, y);
                    lb.set(0, false);
                    if lb.count_ones(..) > 0 && incomparable.len() < 5 {
                        incomparable.push([self.label(x), self.label(y)]);
                    }
                }
            }
        }
        OrderReport {
            elements: self.len(),
            relations,
            characterization_holds: mismatches.is_empty(),
            common_lower_bound_comparable: incomparable.is_empty(),
            mismatches,
            incomparable,
        }
    }

    /// Checks the radius axioms on every in-fragment product and order pair.
    /// The zero counts as having infinite radius.
    pub fn radius_check(&self) -> RadiusCheck {
        let r = |x: ElementId| self.pair(x).map(|p| radius(&p.alpha, &p.beta).expect("same range"));
        let ge = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b,
        };
        let mut check = RadiusCheck::default();
        for x in self.elements() {
            check.r1 &= r(self.inv(x)) == r(x);
            for y in self.elements() {
                if let Some(xy) = self.try_mul(x, y) {
                    check.products += 1;
                    let least = match (r(x), r(y)) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (a, b) => a.or(b),
                    };
                    check.r2 &= ge(r(xy), least);
                }
                if let (Some(a), Some(b)) = (self.pair(x), self.pair(y)) {
                    if a.below(b) {
                        check.r3 &= ge(r(x), r(y));
                    }
                }
            }
        }
        check
    }
}

/// See [`GraphSemigroup::order_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub elements: usize,
    pub relations: usize,
    pub characterization_holds: bool,
    pub common_lower_bound_comparable: bool,
    pub mismatches: Vec<[String; 2]>,
    pub incomparable: Vec<[String; 2]>,
}

/// See [`GraphSemigroup::radius_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusCheck {
    pub products: usize,
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
}

impl Default for RadiusCheck {
    fn default() -> Self {
        RadiusCheck { products: 0, r1: true, r2: true, r3: true }
    }
}

impl RadiusCheck {
    pub fn all(&self) -> bool {
        self.r1 && self.r2 && self.r3
    }
}

impl Semigroup for GraphSemigroup {
    fn len(&self) -> usize {
        self.pairs.len() + 1
    }

    fn try_mul(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        let (Some(a), Some(b)) = (self.pair(x), self.pair(y)) else {
            return Some(Self::ZERO);
        };
        match pair_product(a, b) {
            None => Some(Self::ZERO),
            Some(p) => self.id_of(&p),
        }
    }

    fn inv(&self, x: ElementId) -> ElementId {
        match self.pair(x) {
            None => Self::ZERO,
            Some(p) => self.id_of(&p.inverse()).expect("inverse has the same lengths"),
        }
    }

    fn zero(&self) -> Option<ElementId> {
        Some(Self::ZERO)
    }

    fn label(&self, x: ElementId) -> String {
        match self.pair(x) {
            None => "0".to_string(),
            Some(p) => p.label(&self.graph),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graphs::load_graph;

    fn graph(name: &str) -> DirectedGraph {
        load_graph(corpus::graph_text(name)).unwrap()
    }

    fn pp(g: &DirectedGraph, a: &[&str], b: &[&str]) -> PathPair {
        PathPair::new(g.path_by_names(a).unwrap(), g.path_by_names(b).unwrap()).unwrap()
    }

    #[test]
    fn sizes() {
        // 1 + 2 + 4 paths at the single vertex, all pairs, plus zero.
        assert_eq!(GraphSemigroup::new(&graph("o2"), 2).len(), 7 * 7 + 1);
        assert_eq!(GraphSemigroup::new(&graph("loop"), 3).len(), 4 * 4 + 1);
    }

    #[test]
    fn product_rules() {
        let g = graph("o2");
        assert_eq!(pair_product(&pp(&g, &["a"], &["b"]), &pp(&g, &["b", "a"], &["v"])), Some(pp(&g, &["a", "a"], &["v"])));
        assert_eq!(pair_product(&pp(&g, &["v"], &["a", "b"]), &pp(&g, &["a"], &["b"])), Some(pp(&g, &["v"], &["b", "b"])));
        assert_eq!(pair_product(&pp(&g, &["v"], &["a"]), &pp(&g, &["b"], &["v"])), None);
        let s = GraphSemigroup::new(&g, 1);
        let x = s.id_of(&pp(&g, &["a"], &["v"])).unwrap();
        let y = s.id_of(&pp(&g, &["a"], &["v"])).unwrap();
        assert_eq!(s.try_mul(x, y), None, "overflow is not zero");
        let z = s.id_of(&pp(&g, &["b"], &["v"])).unwrap();
        assert_eq!(s.try_mul(s.inv(x), z), Some(GraphSemigroup::ZERO));
    }

    #[test]
    fn order_matches_paths() {
        for name in ["o2", "sink2", "loop"] {
            let report = GraphSemigroup::new(&graph(name), 2).order_report();
            assert!(report.characterization_holds, "{name}: {:?}", report.mismatches);
            assert!(report.common_lower_bound_comparable, "{name}: {:?}", report.incomparable);
        }
    }

    #[test]
    fn radius_values() {
        let g = graph("sink2");
        let r = |a: &[&str], b: &[&str]| radius(&g.path_by_names(a).unwrap(), &g.path_by_names(b).unwrap());
        assert_eq!(r(&["e", "b"], &["a", "e", "b"]), Ok(2));
        assert_eq!(r(&["e"], &["a", "e"]), Ok(1));
        assert_eq!(r(&["w"], &["e"]), Ok(0));
        assert_eq!(r(&["v"], &["e"]), Err(GraphError::RangeMismatch));
        for name in ["o2", "sink2"] {
            assert!(GraphSemigroup::new(&graph(name), 2).radius_check().all(), "{name}");
        }
    }
}
