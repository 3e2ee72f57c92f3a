//! The isomorphism `G(g) ≅ G_m(Γ(g))`, checked on lassos.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{
    lag_equiv, pair_product, z_set_membership, DirectedGraph, GraphError, GroupoidTriple, LassoPath, MinimalClass, PathPair,
};

/// Sampling bounds for [`graphiso_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsoBounds {
    pub prefix: usize,
    pub cycle: usize,
    pub lag: i64,
    /// Longest path in the chain elements checked for descent.
    pub maxlen: usize,
    /// Longest paths in the `(α, β)` pairs tested against `Z`-sets.
    pub z_depth: usize,
}

impl Default for IsoBounds {
    fn default() -> Self {
        IsoBounds { prefix: 3, cycle: 2, lag: 2, maxlen: 8, z_depth: 2 }
    }
}

/// Distinct lassos with prefix and cycle within the bounds.
pub fn enumerate_lassos(g: &DirectedGraph, prefix: usize, cycle: usize) -> Vec<LassoPath> {
    let mut out = BTreeSet::new();
    let paths = g.paths_up_to(prefix.max(cycle));
    for p in paths.iter().filter(|p| p.len() <= prefix) {
        for c in paths.iter().filter(|c| (1..=cycle).contains(&c.len())) {
            if c.source() == p.range() && c.range() == p.range() {
                out.insert(LassoPath::new(g, p.clone(), c.edges().to_vec()).expect("closed cycle"));
            }
        }
    }
    out.into_iter().collect()
}

/// All triples `(x, k, y)` over `lassos` with `|k| ≤ lag`.
pub fn enumerate_triples(lassos: &[LassoPath], lag: i64) -> Vec<GroupoidTriple> {
    let mut out = Vec::new();
    for x in lassos {
        for y in lassos {
            for k in -lag..=lag {
                if lag_equiv(x, k, y) {
                    out.push(GroupoidTriple { x: x.clone(), k, y: y.clone() });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub bounds: IsoBounds,
    pub lassos: usize,
    pub triples: usize,
    pub composable_pairs: usize,
    pub tested_pairs: usize,
    pub classes: usize,
    pub z_tests: usize,
    /// `h(j(t)) = t` for every sampled triple.
    pub h_after_j: bool,
    /// `j(h(X)) = X` for every sampled class.
    pub j_after_h: bool,
    /// `j(st) = j(s)j(t)` on composable pairs, and `j(s)j(t)` is undefined
    /// on the others.
    pub homomorphism: bool,
    pub inverse_preserved: bool,
    /// Groupoid laws on the sampled triples.
    pub groupoid_laws: bool,
    /// The chains behind `j(t)` descend in the order `xy⁻¹ = xx⁻¹`.
    pub chains_descend: bool,
    /// `t ∈ Z(α, β) ⇔ j(t) ≺ (α, β)`.
    pub z_sets_match: bool,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn all(&self) -> bool {
        self.h_after_j
            && self.j_after_h
            && self.homomorphism
            && self.inverse_preserved
            && self.groupoid_laws
            && self.chains_descend
            && self.z_sets_match
    }
}

/// Checks that `j` and `h` are inverse groupoid isomorphisms on every lasso
/// triple within `bounds`.
pub fn graphiso_check(g: &DirectedGraph, bounds: IsoBounds) -> Result<IsoReport, GraphError> {
    let lassos = enumerate_lassos(g, bounds.prefix, bounds.cycle);
    let triples = enumerate_triples(&lassos, bounds.lag);
    let classes: Vec<MinimalClass> = triples.iter().map(|t| MinimalClass::from_triple(g, t)).collect();

    let needed = classes.iter().map(|c| c.alpha.len().max(c.beta.len())).max().unwrap_or(0) + 1;
    if bounds.maxlen < needed {
        return Err(GraphError::BoundTooSmall { maxlen: bounds.maxlen, needed });
    }
    let mut failures = Vec::new();
    let mut fail = |ok: bool, what: String| {
        if !ok && failures.len() < 10 {
            failures.push(what);
        }
        ok
    };

    let mut h_after_j = true;
    let mut chains_descend = true;
    let mut inverse_preserved = true;
    for (t, c) in triples.iter().zip(&classes) {
        h_after_j &= fail(c.to_triple(g) == *t, format!("h(j(t)) ≠ t for {}", t.label(g)));
        inverse_preserved &= fail(
            MinimalClass::from_triple(g, &t.inverse()) == MinimalClass::new(g, c.beta.clone(), c.alpha.clone(), c.tail.clone())?,
            format!("j(t⁻¹) ≠ j(t)⁻¹ for {}", t.label(g)),
        );
        let chain: Vec<PathPair> = (0..)
            .map(|n| c.representative(g, n))
            .take_while(|p| p.depth() <= bounds.maxlen)
            .collect();
        let descends = chain.windows(2).all(|w| {
            let (x, y) = (&w[1], &w[0]);
            x != y && pair_product(x, &y.inverse()) == pair_product(x, &x.inverse())
        });
        chains_descend &= fail(descends && chain.len() >= 2, format!("chain of j(t) does not descend for {}", t.label(g)));
    }

    // Classes built directly from pairs and tails, not through j.
    let mut direct = BTreeSet::new();
    let pairs = g.paths_up_to(2);
    let tails = enumerate_lassos(g, 1, bounds.cycle);
    for a in &pairs {
        for b in pairs.iter().filter(|b| b.range() == a.range()) {
            for t in tails.iter().filter(|t| t.source() == a.range()) {
                direct.insert(MinimalClass::new(g, a.clone(), b.clone(), t.clone())?);
            }
        }
    }
    let mut j_after_h = true;
    for c in &direct {
        j_after_h &= fail(MinimalClass::from_triple(g, &c.to_triple(g)) == *c, format!("j(h(X)) ≠ X for {}", c.label(g)));
    }

    let mut by_start: BTreeMap<&LassoPath, Vec<usize>> = BTreeMap::new();
    for (i, t) in triples.iter().enumerate() {
        by_start.entry(&t.x).or_default().push(i);
    }
    let mut homomorphism = true;
    let mut groupoid_laws = true;
    let mut composable_pairs = 0;
    let mut tested_pairs = 0;
    for (s, cs) in triples.iter().zip(&classes) {
        groupoid_laws &= fail(
            s.inverse().inverse() == *s
                && s.compose(&s.source()).as_ref() == Ok(s)
                && s.range().compose(s).as_ref() == Ok(s)
                && s.compose(&s.inverse()) == Ok(s.range()),
            format!("unit or inverse law fails at {}", s.label(g)),
        );
        let next = by_start.get(&s.y).map(Vec::as_slice).unwrap_or(&[]);
        for &i in next {
            let t = &triples[i];
            let st = s.compose(t)?;
            composable_pairs += 1;
            homomorphism &= fail(
                cs.product(g, &classes[i]).as_ref() == Some(&MinimalClass::from_triple(g, &st)),
                format!("j(st) ≠ j(s)j(t) for {} and {}", s.label(g), t.label(g)),
            );
            if let Some(&u) = by_start.get(&t.y).and_then(|v| v.first()) {
                let u = &triples[u];
                groupoid_laws &= fail(
                    st.compose(u) == s.compose(&t.compose(u)?),
                    format!("associativity fails at {}", s.label(g)),
                );
            }
        }
        // A few pairs that do not compose: their class product must be zero.
        for (t, ct) in triples.iter().zip(&classes).filter(|(t, _)| t.x != s.y).take(3) {
            tested_pairs += 1;
            homomorphism &= fail(
                cs.product(g, ct).is_none(),
                format!("j(s)j(t) defined for {} and {}", s.label(g), t.label(g)),
            );
        }
    }
    tested_pairs += composable_pairs;

    let z_pairs: Vec<PathPair> = {
        let paths = g.paths_up_to(bounds.z_depth);
        let mut out = Vec::new();
        for a in &paths {
            for b in paths.iter().filter(|b| b.range() == a.range()) {
                out.push(PathPair { alpha: a.clone(), beta: b.clone() });
            }
        }
        out
    };
    let mut z_sets_match = true;
    let mut z_tests = 0;
    for (t, c) in triples.iter().zip(&classes) {
        for p in &z_pairs {
            z_tests += 1;
            let member = z_set_membership(g, &p.alpha, &p.beta, t)?;
            z_sets_match &= fail(
                member == c.below(g, p),
                format!("Z{} and V disagree at {}", p.label(g), t.label(g)),
            );
        }
    }

    Ok(IsoReport {
        bounds,
        lassos: lassos.len(),
        triples: triples.len(),
        composable_pairs,
        tested_pairs,
        classes: direct.len(),
        z_tests,
        h_after_j,
        j_after_h,
        homomorphism,
        inverse_preserved,
        groupoid_laws,
        chains_descend,
        z_sets_match,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graphs::load_graph;

    #[test]
    fn small_bounds() {
        let g = load_graph(corpus::graph_text("sink2")).unwrap();
        let bounds = IsoBounds { prefix: 2, cycle: 1, lag: 1, maxlen: 6, z_depth: 2 };
        let report = graphiso_check(&g, bounds).unwrap();
        assert!(report.all(), "{:?}", report.failures);
        assert!(report.composable_pairs > 0);
    }

    #[test]
    fn bound_too_small() {
        let g = load_graph(corpus::graph_text("o2")).unwrap();
        let bounds = IsoBounds { maxlen: 1, ..IsoBounds::default() };
        assert!(matches!(graphiso_check(&g, bounds), Err(GraphError::BoundTooSmall { maxlen: 1, .. })));
    }
}
