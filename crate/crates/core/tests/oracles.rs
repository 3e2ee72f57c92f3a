//! Library results against brute-force oracles.

mod common;

use ordgroupoid::completion::{minimal_groupoid, universal_groupoid, v_set};
use ordgroupoid::corpus;
use ordgroupoid::graphs::{hereditary_saturated_lattice, is_hereditary, is_saturated, load_graph};
use ordgroupoid::groupoid::minimal_units;
use ordgroupoid::ideals::{enumerate_ideal_lattice, Units};
use ordgroupoid::semigroup::{classify, ElementId, Semigroup};

#[test]
fn completion_matches_directed_set_oracle() {
    for (name, s) in corpus::semigroups() {
        if s.len() <= 8 {
            common::completion_oracle(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn minimal_groupoid_is_reduction() {
    for (name, s) in corpus::semigroups() {
        let reduced = universal_groupoid(&s).reduction(&minimal_units(&s)).unwrap();
        assert_eq!(minimal_groupoid(&s), reduced, "{name}");
    }
}

#[test]
fn covering_matches_v_sets() {
    for (name, s) in corpus::semigroups().into_iter().filter(|(_, s)| classify(s).lc) {
        let v: Vec<Vec<ElementId>> = s.elements().map(|x| v_set(&s, x)).collect();
        let elems: Vec<ElementId> = s.elements().collect();
        let mut lists: Vec<Vec<ElementId>> = elems.iter().map(|&a| vec![a]).collect();
        for &a in &elems {
            for &b in &elems {
                lists.push(vec![a, b]);
                for &c in &elems {
                    lists.push(vec![a, b, c]);
                }
            }
        }
        for x in s.elements() {
            for xs in &lists {
                let covered = s.covered_by(x, xs).unwrap();
                let inside = v[x.0].iter().all(|m| xs.iter().any(|y| v[y.0].contains(m)));
                assert_eq!(covered, inside, "{name}: {} < {:?}", s.name(x), common::names(&s, xs));
            }
        }
    }
}

#[test]
fn ideal_lattice_matches_subset_scan() {
    for (name, s) in corpus::semigroups() {
        let units = Units::new(&s);
        let idem = units.idempotents().to_vec();
        let mut scan: Vec<_> = (0u32..1 << idem.len())
            .map(|m| (0..idem.len()).filter(|k| m >> k & 1 == 1).map(|k| idem[k]).collect())
            .filter(|c| units.is_lt_closed(c) && units.is_invariant(c))
            .filter(|c: &ordgroupoid::ideals::UnitIdeal| !(c.is_empty() && s.zero().is_some()))
            .collect();
        scan.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(enumerate_ideal_lattice(&s).nodes, scan, "{name}");
    }
}

#[test]
fn hs_lattice_matches_subset_scan() {
    for (name, text) in corpus::GRAPHS {
        let g = load_graph(text).unwrap();
        let n = g.vertex_count();
        let mut scan: Vec<std::collections::BTreeSet<usize>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
            .filter(|h| is_hereditary(&g, h) && is_saturated(&g, h))
            .collect();
        scan.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(hereditary_saturated_lattice(&g).nodes, scan, "{name}");
    }
}
