//! `--corpus`: every bundled example through every pipeline.

use crate::completion::{completion_report, consistency_roundtrip};
use crate::corpus;
use crate::graphs::{graph_simplicity, graphiso_check, lemma_it_check, load_graph, GraphSemigroup, IsoBounds};
use crate::groupoid::{FiniteGroupoid, DEFAULT_BISECTION_CAP};
use crate::ideals::{lattice_maps, minimality_report, simplicity_report};
use crate::semigroup::{classify, laws};

use super::{EXIT_OK, EXIT_VIOLATION};

fn cell(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "n/a",
    }
}

pub(super) fn run_corpus() -> i32 {
    let mut all = true;
    let mut check = |v: Option<bool>| {
        all &= v != Some(false);
        cell(v)
    };

    println!("{:<20} {:<6} {:<6} {:<10} {:<8} {:<6} {:<7} verdict", "semigroup", "valid", "laws", "completion", "paterson", "ideals", "minimal");
    for (name, s) in corpus::semigroups() {
        let laws = laws::check_all(&s).iter().all(|o| o.holds());
        let report = completion_report(name, &s);
        let lc = classify(&s).lc;
        let ideals = lc.then(|| lattice_maps(&s).map(|m| m.verdict.all()).unwrap_or(false));
        let minimal = lc.then(|| minimality_report(&s).map(|m| m.all_equal).unwrap_or(false));
        let verdict = simplicity_report(&s, false).map(|r| r.verdict.to_string()).unwrap_or_else(|_| "n/a".into());
        println!(
            "{:<20} {:<6} {:<6} {:<10} {:<8} {:<6} {:<7} {}",
            name,
            check(Some(true)),
            check(Some(laws)),
            check(Some(report.basis_checks.all())),
            check(Some(report.paterson_iso)),
            check(ideals),
            check(minimal),
            verdict
        );
    }

    println!();
    println!("{:<20} {:<6} {:<6} {:<6} {:<6} verdict", "graph", "valid", "order", "it", "iso");
    let bounds = IsoBounds { prefix: 2, cycle: 2, lag: 1, ..IsoBounds::default() };
    for (name, text) in corpus::GRAPHS {
        let Ok(g) = load_graph(text) else {
            println!("{name:<20} {}", check(Some(false)));
            continue;
        };
        let order = GraphSemigroup::new(&g, 3).order_report();
        let it = lemma_it_check(&g, 3).map(|r| r.all()).unwrap_or(false);
        let iso = graphiso_check(&g, bounds).map(|r| r.all()).unwrap_or(false);
        let verdict = graph_simplicity(&g, 3, false).map(|r| r.verdict.to_string()).unwrap_or_else(|_| "n/a".into());
        println!(
            "{:<20} {:<6} {:<6} {:<6} {:<6} {}",
            name,
            check(Some(true)),
            check(Some(order.characterization_holds && order.common_lower_bound_comparable)),
            check(Some(it)),
            check(Some(iso)),
            verdict
        );
    }

    println!();
    println!("{:<20} roundtrip", "groupoid");
    let groupoids = [
        ("trivial", FiniteGroupoid::pair(1)),
        ("z2", FiniteGroupoid::cyclic_group(2)),
        ("pair2", FiniteGroupoid::pair(2)),
        ("pair3", FiniteGroupoid::pair(3)),
    ];
    for (name, g) in groupoids {
        let ok = consistency_roundtrip(&g, DEFAULT_BISECTION_CAP).map(|r| r.isomorphism).unwrap_or(false);
        println!("{name:<20} {}", check(Some(ok)));
    }

    if all {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}
