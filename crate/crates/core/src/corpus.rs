//! The bundled example semigroups and graphs.

use crate::semigroup::{parse_cayley, InverseSemigroup};

/// `(name, Cayley text)` for every bundled semigroup.
pub const SEMIGROUPS: &[(&str, &str)] = &[
    ("trivial_group", include_str!("../corpus/trivial_group.cayley")),
    ("z2", include_str!("../corpus/z2.cayley")),
    ("semilattice2", include_str!("../corpus/semilattice2.cayley")),
    ("semilattice3", include_str!("../corpus/semilattice3.cayley")),
    ("chain3", include_str!("../corpus/chain3.cayley")),
    ("semilattice4", include_str!("../corpus/semilattice4.cayley")),
    ("brandt2", include_str!("../corpus/brandt2.cayley")),
    ("sym_inverse_monoid2", include_str!("../corpus/sym_inverse_monoid2.cayley")),
    ("z2_with_zero", include_str!("../corpus/z2_with_zero.cayley")),
    ("brandt2_twice", include_str!("../corpus/brandt2_twice.cayley")),
];

/// `(name, edge list)` for every bundled graph.
pub const GRAPHS: &[(&str, &str)] = &[
    ("o2", include_str!("../corpus/o2.graph")),
    ("sink2", include_str!("../corpus/sink2.graph")),
    ("loop", include_str!("../corpus/loop.graph")),
];

pub fn semigroups() -> Vec<(&'static str, InverseSemigroup)> {
    SEMIGROUPS
        .iter()
        .map(|&(name, text)| (name, parse_cayley(text).expect("bundled table is valid")))
        .collect()
}

/// A bundled semigroup by name; panics on an unknown name.
pub fn semigroup(name: &str) -> InverseSemigroup {
    let (_, text) = SEMIGROUPS
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no bundled semigroup `{name}`"));
    parse_cayley(text).expect("bundled table is valid")
}

pub fn graph_text(name: &str) -> &'static str {
    GRAPHS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .unwrap_or_else(|| panic!("no bundled graph `{name}`"))
}
