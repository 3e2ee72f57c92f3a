//! Eventually periodic infinite paths, the graph groupoid on them, and the
//! minimal classes of `O(Γ(g))` written as `(α, β)` followed by a tail.

use super::{DirectedGraph, FinitePath, GraphError, PathPair};

/// An infinite path `prefix · cycle · cycle · …`.
///
/// The stored form is canonical: the cycle is primitive and the prefix is as
/// short as possible, so equal paths have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoPath {
    prefix: FinitePath,
    cycle: Vec<usize>,
}

impl LassoPath {
    pub fn new(g: &DirectedGraph, prefix: FinitePath, cycle: Vec<usize>) -> Result<Self, GraphError> {
        let closed = !cycle.is_empty()
            && g.path(prefix.range(), &cycle).map(|c| c.range() == prefix.range()).unwrap_or(false);
        if !closed {
            return Err(GraphError::NotALasso);
        }
        Ok(Self::canonical(g, prefix, cycle))
    }

    fn canonical(g: &DirectedGraph, mut prefix: FinitePath, mut cycle: Vec<usize>) -> Self {
        let n = cycle.len();
        if let Some(d) = (1..=n).find(|&d| n % d == 0 && (d..n).all(|i| cycle[i] == cycle[i - d])) {
            cycle.truncate(d);
        }
        while let Some(e) = prefix.last() {
            if e != *cycle.last().expect("nonempty cycle") {
                break;
            }
            prefix.edges.pop();
            prefix.end = g.source(e);
            cycle.rotate_right(1);
        }
        LassoPath { prefix, cycle }
    }

    pub fn prefix(&self) -> &FinitePath {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// `s(x)`.
    pub fn source(&self) -> usize {
        self.prefix.source()
    }

    /// The `i`-th edge, counting from 1.
    pub fn edge(&self, i: usize) -> usize {
        assert!(i >= 1);
        let p = self.prefix.len();
        if i <= p {
            self.prefix.edges[i - 1]
        } else {
            self.cycle[(i - p - 1) % self.cycle.len()]
        }
    }

    /// `x₁ ⋯ xₙ`.
    pub fn take(&self, g: &DirectedGraph, n: usize) -> FinitePath {
        let edges: Vec<usize> = (1..=n).map(|i| self.edge(i)).collect();
        g.path(self.source(), &edges).expect("lasso edges connect")
    }

    /// `x_{n+1} x_{n+2} ⋯`.
    pub fn drop(&self, g: &DirectedGraph, n: usize) -> LassoPath {
        let p = self.prefix.len();
        if n <= p {
            let start = if n == 0 { self.source() } else { g.range(self.prefix.edges[n - 1]) };
            let prefix = g.path(start, &self.prefix.edges[n..]).expect("suffix of a path");
            return LassoPath { prefix, cycle: self.cycle.clone() };
        }
        let mut cycle = self.cycle.clone();
        let shift = (n - p) % cycle.len();
        cycle.rotate_left(shift);
        let start = g.source(cycle[0]);
        LassoPath { prefix: FinitePath::vertex(start), cycle }
    }

    /// `α·x`; panics unless `r(α) = s(x)`.
    pub fn prepend(&self, g: &DirectedGraph, alpha: &FinitePath) -> LassoPath {
        Self::canonical(g, alpha.concat(&self.prefix), self.cycle.clone())
    }

    /// Index after which the path is periodic.
    fn preperiod(&self) -> usize {
        self.prefix.len()
    }

    pub fn label(&self, g: &DirectedGraph) -> String {
        let cycle: Vec<&str> = self.cycle.iter().map(|&e| g.edge_name(e)).collect();
        if self.prefix.is_empty() {
            format!("({})^", cycle.join("."))
        } else {
            format!("{}.({})^", g.path_label(&self.prefix), cycle.join("."))
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `x ~ₖ y`: `xᵢ = y_{i+k}` for all large `i`.
pub fn lag_equiv(x: &LassoPath, k: i64, y: &LassoPath) -> bool {
    // Past both preperiods the comparison is periodic with period lcm.
    let start = 1i64.max(x.preperiod() as i64 + 1).max(y.preperiod() as i64 + 1 - k);
    let lcm = x.cycle.len() / gcd(x.cycle.len(), y.cycle.len()) * y.cycle.len();
    (start..start + lcm as i64).all(|i| x.edge(i as usize) == y.edge((i + k) as usize))
}

/// An element `(x, k, y)` of the graph groupoid `G(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupoidTriple {
    pub x: LassoPath,
    pub k: i64,
    pub y: LassoPath,
}

impl GroupoidTriple {
    pub fn new(x: LassoPath, k: i64, y: LassoPath) -> Result<Self, GraphError> {
        if !lag_equiv(&x, k, &y) {
            return Err(GraphError::NotEquivalent(k));
        }
        Ok(GroupoidTriple { x, k, y })
    }

    /// `(x, k, y)(y, l, z) = (x, k + l, z)`.
    pub fn compose(&self, other: &GroupoidTriple) -> Result<GroupoidTriple, GraphError> {
        if self.y != other.x {
            return Err(GraphError::NotComposable);
        }
        Ok(GroupoidTriple { x: self.x.clone(), k: self.k + other.k, y: other.y.clone() })
    }

    pub fn inverse(&self) -> GroupoidTriple {
        GroupoidTriple { x: self.y.clone(), k: -self.k, y: self.x.clone() }
    }

    /// `g⁻¹g = (y, 0, y)`.
    pub fn source(&self) -> GroupoidTriple {
        GroupoidTriple { x: self.y.clone(), k: 0, y: self.y.clone() }
    }

    /// `gg⁻¹ = (x, 0, x)`.
    pub fn range(&self) -> GroupoidTriple {
        GroupoidTriple { x: self.x.clone(), k: 0, y: self.x.clone() }
    }

    pub fn is_unit(&self) -> bool {
        self.k == 0 && self.x == self.y
    }

    pub fn label(&self, g: &DirectedGraph) -> String {
        format!("({}, {}, {})", self.x.label(g), self.k, self.y.label(g))
    }
}

/// `t ∈ Z(α, β)`: `x = αz`, `y = βz` for one tail `z`, and
/// `k = |β| − |α|`.
pub fn z_set_membership(
    g: &DirectedGraph,
    alpha: &FinitePath,
    beta: &FinitePath,
    t: &GroupoidTriple,
) -> Result<bool, GraphError> {
    if alpha.range() != beta.range() {
        return Err(GraphError::RangeMismatch);
    }
    Ok(t.k == beta.len() as i64 - alpha.len() as i64
        && t.x.take(g, alpha.len()) == *alpha
        && t.y.take(g, beta.len()) == *beta
        && t.x.drop(g, alpha.len()) == t.y.drop(g, beta.len()))
}

/// A minimal element of `O(Γ(g))`: the class of the chain
/// `(α x₁⋯xₙ, β x₁⋯xₙ)` for a tail `x` starting at `r(α)`.
///
/// Canonical when `α` and `β` do not end in the same edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalClass {
    pub alpha: FinitePath,
    pub beta: FinitePath,
    pub tail: LassoPath,
}

impl MinimalClass {
    pub fn new(g: &DirectedGraph, mut alpha: FinitePath, mut beta: FinitePath, mut tail: LassoPath) -> Result<Self, GraphError> {
        if alpha.range() != beta.range() || tail.source() != alpha.range() {
            return Err(GraphError::RangeMismatch);
        }
        while let (Some(a), Some(b)) = (alpha.last(), beta.last()) {
            if a != b {
                break;
            }
            alpha.edges.pop();
            alpha.end = g.source(a);
            beta.edges.pop();
            beta.end = g.source(a);
            tail = tail.prepend(g, &g.path(g.source(a), &[a]).expect("edge"));
        }
        Ok(MinimalClass { alpha, beta, tail })
    }

    /// The `n`-th chain element `(α x₁⋯xₙ, β x₁⋯xₙ)`.
    pub fn representative(&self, g: &DirectedGraph, n: usize) -> PathPair {
        let mu = self.tail.take(g, n);
        PathPair { alpha: self.alpha.concat(&mu), beta: self.beta.concat(&mu) }
    }

    /// `X ≺ (α, β)`, decided on a representative; the answer does not depend
    /// on which one once both paths are long enough.
    pub fn below(&self, g: &DirectedGraph, pair: &PathPair) -> bool {
        let n = pair.depth();
        self.representative(g, n).below(pair)
    }

    /// `h(X) = (αx, |β| − |α|, βx)`.
    pub fn to_triple(&self, g: &DirectedGraph) -> GroupoidTriple {
        GroupoidTriple {
            x: self.tail.prepend(g, &self.alpha),
            k: self.beta.len() as i64 - self.alpha.len() as i64,
            y: self.tail.prepend(g, &self.beta),
        }
    }

    /// `j(x, k, y)`: the chain `(x₁⋯xₙ, y₁⋯y_{n+k})` from the first `n` past
    /// which the tails agree.
    pub fn from_triple(g: &DirectedGraph, t: &GroupoidTriple) -> MinimalClass {
        let first = 0i64.max(-t.k) as usize;
        let n = (first..)
            .find(|&n| t.x.drop(g, n) == t.y.drop(g, (n as i64 + t.k) as usize))
            .expect("lag-equivalent paths agree eventually");
        MinimalClass {
            alpha: t.x.take(g, n),
            beta: t.y.take(g, (n as i64 + t.k) as usize),
            tail: t.x.drop(g, n),
        }
    }

    /// `XY` in `G_m(Γ(g))`, computed from the product of deep representatives
    /// in `Γ(g)`. `None` when that product is zero.
    pub fn product(&self, g: &DirectedGraph, other: &MinimalClass) -> Option<MinimalClass> {
        let depth = 2 * (self.alpha.len()
            + self.beta.len()
            + other.alpha.len()
            + other.beta.len()
            + self.tail.preperiod()
            + other.tail.preperiod())
            + self.tail.cycle.len() * other.tail.cycle.len()
            + 2;
        let a = self.representative(g, depth);
        let b = other.representative(g, depth);
        let ab = super::pair_product(&a, &b)?;
        // The longer middle path carries on with its own tail.
        let tail = if a.beta.is_prefix_of(&b.alpha) {
            other.tail.drop(g, depth)
        } else {
            self.tail.drop(g, depth)
        };
        Some(MinimalClass::new(g, ab.alpha, ab.beta, tail).expect("product of matching classes"))
    }

    pub fn label(&self, g: &DirectedGraph) -> String {
        format!("[{},{};{}]", g.path_label(&self.alpha), g.path_label(&self.beta), self.tail.label(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graphs::load_graph;

    fn o2() -> DirectedGraph {
        load_graph(corpus::graph_text("o2")).unwrap()
    }

    fn lasso(g: &DirectedGraph, prefix: &[&str], cycle: &[&str]) -> LassoPath {
        let v = g.source(g.edge_by_name(cycle.first().or(prefix.first()).unwrap()).unwrap());
        let start = prefix.first().map(|e| g.source(g.edge_by_name(e).unwrap())).unwrap_or(v);
        let p: Vec<usize> = prefix.iter().map(|e| g.edge_by_name(e).unwrap()).collect();
        let c: Vec<usize> = cycle.iter().map(|e| g.edge_by_name(e).unwrap()).collect();
        LassoPath::new(g, g.path(start, &p).unwrap(), c).unwrap()
    }

    #[test]
    fn canonical_form() {
        let g = o2();
        assert_eq!(lasso(&g, &["a", "b"], &["a", "b"]), lasso(&g, &[], &["a", "b"]));
        assert_eq!(lasso(&g, &["b"], &["a", "b"]), lasso(&g, &[], &["b", "a"]));
        assert_eq!(lasso(&g, &[], &["a", "a"]), lasso(&g, &[], &["a"]));
        assert_ne!(lasso(&g, &["b"], &["a"]), lasso(&g, &[], &["a"]));
        let x = lasso(&g, &["b", "b"], &["a", "b"]);
        assert_eq!(x.edge(1), g.edge_by_name("b").unwrap());
        assert_eq!(x.drop(&g, 2), lasso(&g, &[], &["a", "b"]));
        assert_eq!(x.drop(&g, 3), lasso(&g, &[], &["b", "a"]));
        assert_eq!(x.drop(&g, 1).prepend(&g, &x.take(&g, 1)), x);
        assert!(LassoPath::new(&g, FinitePath::vertex(0), vec![]).is_err());
    }

    #[test]
    fn lags() {
        let g = o2();
        let aaa = lasso(&g, &[], &["a"]);
        let baa = lasso(&g, &["b"], &["a"]);
        assert!(lag_equiv(&baa, 0, &aaa));
        assert!(lag_equiv(&baa, 5, &aaa));
        let ab = lasso(&g, &[], &["a", "b"]);
        let ba = lasso(&g, &[], &["b", "a"]);
        assert!(lag_equiv(&ab, 1, &ba) && lag_equiv(&ab, -1, &ba) && !lag_equiv(&ab, 0, &ba));
        assert!(!lag_equiv(&aaa, 0, &ab));
        let t = GroupoidTriple::new(baa.clone(), 1, aaa.clone()).unwrap();
        assert_eq!(t.compose(&t.inverse()).unwrap(), t.range());
        assert_eq!(t.inverse().compose(&t).unwrap(), t.source());
        assert_eq!(t.compose(&t), Err(GraphError::NotComposable));
        assert_eq!(GroupoidTriple::new(aaa, 0, ab).unwrap_err(), GraphError::NotEquivalent(0));
    }

    #[test]
    fn z_sets() {
        let g = o2();
        let a = g.path_by_names(&["a"]).unwrap();
        let b = g.path_by_names(&["b"]).unwrap();
        let bb = g.path_by_names(&["b", "b"]).unwrap();
        let x = lasso(&g, &["a"], &["b"]);
        let t = GroupoidTriple::new(x.clone(), 1, x.clone()).unwrap();
        // x = a·b^∞, y = x, k = 1: the tails after a and after b.b agree.
        assert_eq!(z_set_membership(&g, &a, &bb, &t), Ok(false));
        let y = lasso(&g, &[], &["b"]);
        let t = GroupoidTriple::new(x, 1, y).unwrap();
        assert_eq!(z_set_membership(&g, &a, &bb, &t), Ok(true));
        assert_eq!(z_set_membership(&g, &a, &b, &t), Ok(false));
    }

    #[test]
    fn classes_roundtrip() {
        let g = o2();
        let x = lasso(&g, &["a", "b"], &["a"]);
        let y = lasso(&g, &["b"], &["a"]);
        let t = GroupoidTriple::new(x, -1, y).unwrap();
        let c = MinimalClass::from_triple(&g, &t);
        assert_eq!(g.path_label(&c.alpha), "a");
        assert_eq!(g.path_label(&c.beta), "v");
        assert_eq!(c.to_triple(&g), t);
        let same = MinimalClass::new(&g, c.representative(&g, 2).alpha, c.representative(&g, 2).beta, c.tail.drop(&g, 2)).unwrap();
        assert_eq!(same, c);
        let unit = c.product(&g, &MinimalClass::from_triple(&g, &t.inverse())).unwrap();
        assert_eq!(unit.to_triple(&g), t.range());
    }
}
