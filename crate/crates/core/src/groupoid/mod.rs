//! Finite groupoids with an explicit partial product.
//!
//! Elements are indices `0..len()`. Each element also carries a `tag`, the
//! index of the element it came from (a semigroup element or an element of a
//! parent groupoid), so structures built along different routes can be
//! compared for equality directly.

mod bisection;
mod iso;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{ElementId, InverseSemigroup, Semigroup};

pub use bisection::{all_bisections, Bisections, DEFAULT_BISECTION_CAP};
pub use iso::{find_isomorphism, is_isomorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("unit set is not invariant: arrow {0} leaves it")]
    NotInvariant(usize),
    #[error("element {0} is not a unit")]
    NotUnit(usize),
    #[error("groupoid has {size} elements, above the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// A failed groupoid axiom and the tuple that breaks it.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("axiom {axiom} fails at {witness:?}")]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    tags: Vec<usize>,
    names: Vec<String>,
    product: Vec<Option<usize>>,
    inverse: Vec<usize>,
}

/// A subset of the unit space.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct UnitSubset(pub BTreeSet<usize>);

impl UnitSubset {
    pub fn contains(&self, u: usize) -> bool {
        self.0.contains(&u)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for UnitSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        UnitSubset(iter.into_iter().collect())
    }
}

impl FiniteGroupoid {
    /// Builds a groupoid from raw tables without checking anything; run
    /// [`FiniteGroupoid::check_axioms`] on untrusted input.
    pub fn from_parts(
        tags: Vec<usize>,
        names: Vec<String>,
        product: Vec<Option<usize>>,
        inverse: Vec<usize>,
    ) -> Self {
        let n = names.len();
        assert_eq!(tags.len(), n);
        assert_eq!(product.len(), n * n);
        assert_eq!(inverse.len(), n);
        FiniteGroupoid { tags, names, product, inverse }
    }

    pub fn empty() -> Self {
        FiniteGroupoid::from_parts(vec![], vec![], vec![], vec![])
    }

    /// The pair groupoid on `n` points: arrows `(i, j)`, `(i, j)(j, k) = (i, k)`.
    pub fn pair(n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut product = vec![None; n * n * n * n];
        let mut names = Vec::with_capacity(n * n);
        let mut inverse = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                names.push(format!("({i},{j})"));
                inverse.push(idx(j, i));
                for k in 0..n {
                    product[idx(i, j) * n * n + idx(j, k)] = Some(idx(i, k));
                }
            }
        }
        FiniteGroupoid::from_parts((0..n * n).collect(), names, product, inverse)
    }

    /// The cyclic group of order `n` as a one-unit groupoid.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        let product = (0..n * n).map(|k| Some((k / n + k % n) % n)).collect();
        let inverse = (0..n).map(|g| (n - g) % n).collect();
        let names = (0..n).map(|g| if g == 0 { "e".to_string() } else { format!("g{g}") }).collect();
        FiniteGroupoid::from_parts((0..n).collect(), names, product, inverse)
    }

    /// Disjoint union; elements of `other` are renumbered after `self`.
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> Self {
        let (a, b) = (self.len(), other.len());
        let n = a + b;
        let mut product = vec![None; n * n];
        for x in 0..a {
            for y in 0..a {
                product[x * n + y] = self.mul(x, y);
            }
        }
        for x in 0..b {
            for y in 0..b {
                product[(a + x) * n + a + y] = other.mul(x, y).map(|z| z + a);
            }
        }
        let inverse = self
            .inverse
            .iter()
            .copied()
            .chain(other.inverse.iter().map(|&g| g + a))
            .collect();
        let names = self
            .names
            .iter()
            .map(|s| format!("L{s}"))
            .chain(other.names.iter().map(|s| format!("R{s}")))
            .collect();
        FiniteGroupoid::from_parts((0..n).collect(), names, product, inverse)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tag(&self, g: usize) -> usize {
        self.tags[g]
    }

    pub fn tags(&self) -> &[usize] {
        &self.tags
    }

    /// Index of the element carrying `tag`.
    pub fn by_tag(&self, tag: usize) -> Option<usize> {
        self.tags.iter().position(|&t| t == tag)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> Option<usize> {
        self.product[x * self.len() + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `g⁻¹g`.
    pub fn source(&self, g: usize) -> usize {
        self.mul(self.inv(g), g).expect("g^-1 g is defined in a groupoid")
    }

    /// `gg⁻¹`.
    pub fn range(&self, g: usize) -> usize {
        self.mul(g, self.inv(g)).expect("g g^-1 is defined in a groupoid")
    }

    /// The unit space `{gg⁻¹}`, sorted.
    pub fn units(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.len()).map(|g| self.range(g)).collect();
        set.into_iter().collect()
    }

    pub fn is_unit(&self, g: usize) -> bool {
        self.range(g) == g
    }

    /// Exhaustive check of (G1)–(G4) and associativity where defined.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let n = self.len();
        let fail = |axiom, witness: &[usize]| Err(AxiomViolation { axiom, witness: witness.to_vec() });
        for x in 0..n {
            if self.inverse[x] >= n {
                return fail("range", &[x]);
            }
            for y in 0..n {
                if matches!(self.mul(x, y), Some(z) if z >= n) {
                    return fail("range", &[x, y]);
                }
            }
        }
        for x in 0..n {
            let xi = self.inv(x);
            if self.inv(xi) != x {
                return fail("G1", &[x]);
            }
            let Some(s) = self.mul(xi, x) else { return fail("G3", &[x]) };
            let Some(r) = self.mul(x, xi) else { return fail("G4", &[x]) };
            for y in 0..n {
                if let Some(xy) = self.mul(x, y) {
                    if self.mul(s, y) != Some(y) || self.mul(xi, xy) != Some(y) {
                        return fail("G3", &[x, y]);
                    }
                }
                if let Some(yx) = self.mul(y, x) {
                    if self.mul(y, r) != Some(y) || self.mul(yx, xi) != Some(y) {
                        return fail("G4", &[y, x]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.mul(x, y) else { continue };
                for z in 0..n {
                    let Some(yz) = self.mul(y, z) else { continue };
                    match (self.mul(xy, z), self.mul(x, yz)) {
                        (Some(a), Some(b)) if a == b => {}
                        (Some(_), Some(_)) => return fail("associativity", &[x, y, z]),
                        _ => return fail("G2", &[x, y, z]),
                    }
                }
            }
        }
        Ok(())
    }

    /// The subgroupoid on `{g : g⁻¹g ∈ E}`.
    pub fn reduction(&self, e: &UnitSubset) -> Result<FiniteGroupoid, GroupoidError> {
        for &u in &e.0 {
            if u >= self.len() || !self.is_unit(u) {
                return Err(GroupoidError::NotUnit(u));
            }
        }
        if let Some(g) = (0..self.len()).find(|&g| e.contains(self.source(g)) && !e.contains(self.range(g))) {
            return Err(GroupoidError::NotInvariant(g));
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&g| e.contains(self.source(g))).collect();
        Ok(self.restrict(&keep))
    }

    /// Restriction to a subset closed under the partial product and inverse.
    pub(crate) fn restrict(&self, keep: &[usize]) -> FiniteGroupoid {
        let m = keep.len();
        let pos = |g: usize| keep.binary_search(&g).ok();
        let mut product = vec![None; m * m];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                product[i * m + j] = self.mul(x, y).map(|z| pos(z).expect("closed under products"));
            }
        }
        let inverse = keep.iter().map(|&g| pos(self.inv(g)).expect("closed under inverse")).collect();
        FiniteGroupoid::from_parts(
            keep.iter().map(|&g| self.tags[g]).collect(),
            keep.iter().map(|&g| self.names[g].clone()).collect(),
            product,
            inverse,
        )
    }

    pub fn is_invariant(&self, e: &UnitSubset) -> bool {
        (0..self.len()).all(|g| !e.contains(self.source(g)) || e.contains(self.range(g)))
    }

    /// Orbits of the unit space, each sorted, ordered by least unit.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let units = self.units();
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for g in 0..self.len() {
            let (a, b) = (find(&mut parent, self.source(g)), find(&mut parent, self.range(g)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut root_of = std::collections::BTreeMap::new();
        for &u in &units {
            let r = find(&mut parent, u);
            let k = *root_of.entry(r).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[k].push(u);
        }
        orbits
    }

    /// Every invariant subset of the unit space, as a union of orbits.
    /// Sorted by size, then lexicographically.
    pub fn invariant_unit_subsets(&self) -> Vec<UnitSubset> {
        let orbits = self.orbits();
        assert!(orbits.len() < 24, "too many orbits to enumerate invariant subsets");
        let mut out: Vec<UnitSubset> = (0u32..1 << orbits.len())
            .map(|mask| {
                orbits
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .flat_map(|(_, o)| o.iter().copied())
                    .collect()
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The isotropy group at unit `u`.
    pub fn isotropy(&self, u: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&g| self.source(g) == u && self.range(g) == u)
            .collect()
    }

    /// Units with trivial isotropy.
    pub fn aperiodic_points(&self) -> Vec<usize> {
        self.units()
            .into_iter()
            .filter(|&u| self.isotropy(u) == [u])
            .collect()
    }

    /// Every unit aperiodic. For a finite (discrete) groupoid this is the same
    /// as essential principality: the aperiodic points of a closed invariant
    /// set are dense in it only if they exhaust it.
    pub fn is_principal(&self) -> bool {
        self.aperiodic_points().len() == self.units().len()
    }

    /// `{ab : a ∈ A, b ∈ B, ab defined}`, sorted.
    pub fn set_product(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = a
            .iter()
            .flat_map(|&x| b.iter().filter_map(move |&y| self.mul(x, y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `{a⁻¹ : a ∈ A}`, sorted.
    pub fn set_inverse(&self, a: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = a.iter().map(|&x| self.inv(x)).collect();
        out.sort_unstable();
        out
    }

    /// A set on which `g ↦ g⁻¹g` and `g ↦ gg⁻¹` are injective.
    pub fn is_bisection(&self, members: &[usize]) -> bool {
        let mut sources = BTreeSet::new();
        let mut ranges = BTreeSet::new();
        members
            .iter()
            .all(|&g| sources.insert(self.source(g)) && ranges.insert(self.range(g)))
    }

    /// Orbit graph in DOT: one node per unit, one edge per ordered pair of
    /// distinct units joined by at least one arrow, labelled with the count.
    pub fn orbit_dot(&self, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
        for u in self.units() {
            let _ = writeln!(out, "  u{u} [label=\"{}\"];", escape(&self.names[u]));
        }
        let mut counts = std::collections::BTreeMap::new();
        for g in 0..self.len() {
            let (s, r) = (self.source(g), self.range(g));
            if s != r {
                *counts.entry((s, r)).or_insert(0usize) += 1;
            }
        }
        for ((s, r), c) in counts {
            let _ = writeln!(out, "  u{s} -> u{r} [label=\"{c}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GroupoidJson {
        let n = self.len();
        GroupoidJson {
            elements: self.names.clone(),
            units: self.units().into_iter().map(|u| self.names[u].clone()).collect(),
            inverse: (0..n).map(|g| self.names[self.inv(g)].clone()).collect(),
            product: (0..n)
                .map(|x| (0..n).map(|y| self.mul(x, y).map(|z| self.names[z].clone())).collect())
                .collect(),
        }
    }
}

/// JSON view of the product table; `null` marks an undefined product.
#[derive(Debug, Clone, Serialize)]
pub struct GroupoidJson {
    pub elements: Vec<String>,
    pub units: Vec<String>,
    pub inverse: Vec<String>,
    pub product: Vec<Vec<Option<String>>>,
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `G(Γ)`: all of Γ, with `x*y = xy` defined exactly when `x⁻¹x = yy⁻¹`.
pub fn restricted_product_groupoid(s: &InverseSemigroup) -> FiniteGroupoid {
    let n = s.len();
    let mut product = vec![None; n * n];
    for x in s.elements() {
        for y in s.elements() {
            if s.source(x) == s.range(y) {
                product[x.0 * n + y.0] = Some(s.mul(x, y).0);
            }
        }
    }
    FiniteGroupoid::from_parts(
        (0..n).collect(),
        s.elements().map(|x| s.name(x)).collect(),
        product,
        s.elements().map(|x| s.inv(x).0).collect(),
    )
}

/// `M(Γ)`: the minimal elements, with `x*y = xy` defined exactly when
/// `xy ≠ 0`.
pub fn minimal_subgroupoid(s: &InverseSemigroup) -> FiniteGroupoid {
    let min = s.minimal_elements();
    let m = min.len();
    let pos = |x: ElementId| min.binary_search(&x).ok();
    let mut product = vec![None; m * m];
    for (i, &x) in min.iter().enumerate() {
        for (j, &y) in min.iter().enumerate() {
            let xy = s.mul(x, y);
            if Some(xy) != s.zero() {
                product[i * m + j] = Some(pos(xy).expect("nonzero products of minimal elements are minimal"));
            }
        }
    }
    FiniteGroupoid::from_parts(
        min.iter().map(|x| x.0).collect(),
        min.iter().map(|&x| s.name(x)).collect(),
        product,
        min.iter().map(|&x| pos(s.inv(x)).expect("inverse of minimal is minimal")).collect(),
    )
}

/// `Γ⁽⁰⁾ ∩ Γ_min` as a unit subset of `G(Γ)`.
pub fn minimal_units(s: &InverseSemigroup) -> UnitSubset {
    s.minimal_elements()
        .into_iter()
        .filter(|&x| s.is_idempotent(x))
        .map(|x| x.0)
        .collect()
}
