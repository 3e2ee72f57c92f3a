//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! property check fails, 2 on unreadable or malformed input.

mod corpus_run;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::completion::{completion_report, hasse_dot, minimal_groupoid, quotient_tilde, universal_groupoid, CompletionError};
use crate::graphs::{
    cycle_exit_check, graph_simplicity, graphiso_check, hereditary_saturated_lattice, lemma_it_check, load_graph,
    enumerate_lassos, enumerate_triples, DirectedGraph, GraphError, GraphSemigroup, IsoBounds, PathPair,
};
use crate::groupoid::escape;
use crate::ideals::{lattice_maps, minimality_report, simplicity_report, IdealError, Units};
use crate::semigroup::{classify, laws, parse_cayley, InverseSemigroup, Semigroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Default path bound for graph fragments.
pub const DEFAULT_MAX_LEN: usize = 3;
/// Default path bound for the isomorphism chains.
pub const DEFAULT_ISO_MAX_LEN: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "ordgroupoid", version, about = "Groupoids from the natural order of finite inverse semigroups")]
pub struct Cli {
    /// Run the bundled corpus and print a pass/fail matrix.
    #[arg(long)]
    pub corpus: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyse a Cayley table.
    Semigroup {
        #[arg(value_enum)]
        action: SemigroupAction,
        file: PathBuf,
        #[command(flatten)]
        opts: Options,
    },
    /// Analyse an edge list.
    Graph {
        #[arg(value_enum)]
        action: GraphAction,
        file: PathBuf,
        /// Longest path kept in the truncated semigroup.
        #[arg(long)]
        max_len: Option<usize>,
        #[command(flatten)]
        opts: Options,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemigroupAction {
    Check,
    Order,
    Props,
    Groupoid,
    Quotient,
    Ideals,
    Minimal,
    Simplicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphAction {
    Check,
    Semigroup,
    Groupoid,
    HsLattice,
    Iso,
    Ideals,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Write a DOT diagram here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Treat the minimal groupoid as essentially principal.
    #[arg(long)]
    pub assume_essentially_principal: bool,
    /// Add wall-clock time to the JSON report. Off by default so reports are
    /// byte-identical across runs.
    #[arg(long)]
    pub timing: bool,
}

/// The JSON report written by `--json`.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: InputDescriptor,
    pub flags: FlagRecord,
    pub ok: bool,
    pub verdict: Option<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub path: String,
    pub format: &'static str,
    pub bytes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlagRecord {
    pub assume_essentially_principal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
}

/// What a pipeline produced.
struct Outcome {
    ok: bool,
    verdict: Option<String>,
    summary: Vec<String>,
    result: Value,
    dot: Option<String>,
}

impl Outcome {
    fn new(ok: bool, result: Value) -> Self {
        Outcome { ok, verdict: None, summary: Vec::new(), result, dot: None }
    }

    fn line(mut self, text: impl Into<String>) -> Self {
        self.summary.push(text.into());
        self
    }

    fn dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    fn verdict(mut self, v: impl ToString) -> Self {
        self.verdict = Some(v.to_string());
        self
    }
}

/// An input problem: message for stderr, exit code 2.
struct InputError(String);

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn ok_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    if cli.corpus {
        return corpus_run::run_corpus();
    }
    let Some(command) = cli.command else {
        eprintln!("nothing to do: give a subcommand or --corpus");
        return EXIT_INPUT;
    };
    let start = Instant::now();
    let (path, opts, label, format, max_len) = match &command {
        Command::Semigroup { action, file, opts } => {
            (file, opts, format!("semigroup {}", action_name(action)), "cayley", None)
        }
        Command::Graph { action, file, max_len, opts } => {
            (file, opts, format!("graph {}", action_name(action)), "edge-list", *max_len)
        }
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let outcome = match &command {
        Command::Semigroup { action, .. } => semigroup_command(*action, &text, path, opts),
        Command::Graph { action, max_len, .. } => graph_command(*action, &text, path, *max_len, opts),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(InputError(msg)) => {
            eprintln!("{}: {msg}", path.display());
            return EXIT_INPUT;
        }
    };
    for line in &outcome.summary {
        println!("{line}");
    }
    if let Some(v) = &outcome.verdict {
        println!("verdict: {v}");
    }
    let report = AnalysisReport {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: label,
        input: InputDescriptor { path: path.display().to_string(), format, bytes: text.len() },
        flags: FlagRecord { assume_essentially_principal: opts.assume_essentially_principal, max_len },
        ok: outcome.ok,
        verdict: outcome.verdict.clone(),
        result: outcome.result,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis()),
    };
    if let Some(p) = &opts.json {
        let mut body = serde_json::to_string_pretty(&report).expect("reports serialize");
        body.push('\n');
        if let Err(e) = write_file(p, &body) {
            return e;
        }
    }
    if let Some(p) = &opts.dot {
        match &outcome.dot {
            Some(dot) => {
                if let Err(e) = write_file(p, dot) {
                    return e;
                }
            }
            None => eprintln!("no diagram for {}", report.command),
        }
    }
    if outcome.ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), i32> {
    std::fs::write(path, body).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_INPUT
    })
}

fn action_name<T: ValueEnum>(a: &T) -> String {
    a.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn title(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn names(s: &InverseSemigroup, xs: impl IntoIterator<Item = crate::semigroup::ElementId>) -> Vec<String> {
    xs.into_iter().map(|x| s.name(x)).collect()
}

fn semigroup_command(action: SemigroupAction, text: &str, path: &Path, opts: &Options) -> Result<Outcome, InputError> {
    let s = parse_cayley(text).map_err(|e| InputError(e.to_string()))?;
    let name = title(path);
    let flags = classify(&s);
    let lattice_note = |e: IdealError| {
        Outcome::new(true, json!({ "applicable": false, "reason": e.to_string(), "flags": flags }))
            .line(format!("not applicable: {e}"))
    };
    Ok(match action {
        SemigroupAction::Check => Outcome::new(
            true,
            json!({
                "valid": true,
                "elements": names(&s, s.elements()),
                "zero": s.zero().map(|z| s.name(z)),
                "idempotents": names(&s, s.idempotents()),
                "inverse": s.elements().map(|x| s.name(s.inv(x))).collect::<Vec<_>>(),
            }),
        )
        .line(format!("valid inverse semigroup, {} elements, {} idempotents", s.len(), s.idempotents().len())),
        SemigroupAction::Order => {
            let order = s.order();
            let pairs: Vec<[String; 2]> =
                order.pairs().into_iter().filter(|(x, y)| x != y).map(|(x, y)| [s.name(x), s.name(y)]).collect();
            let minimal = names(&s, order.minimal_elements());
            Outcome::new(true, json!({ "strict_pairs": pairs, "minimal": minimal }))
                .line(format!("{} strict order pairs", pairs.len()))
                .line(format!("minimal: {}", minimal.join(" ")))
                .dot(hasse_dot(&s, &name))
        }
        SemigroupAction::Props => {
            let outcomes = laws::check_all(&s);
            let ok = outcomes.iter().all(|o| o.holds());
            let mut out = Outcome::new(ok, json!({ "flags": flags, "laws": outcomes }))
                .line(format!(
                    "E_unitary={} zero_E_unitary={} L={} T={} LC={}",
                    flags.e_unitary, flags.zero_e_unitary, flags.lattice, flags.trapping, flags.lc
                ))
                .dot(hasse_dot(&s, &name));
            for o in &outcomes {
                out = out.line(format!("{:<24} {} ({} tuples)", o.law, ok_word(o.holds()), o.tuples));
            }
            out
        }
        SemigroupAction::Groupoid => {
            let report = completion_report(&name, &s);
            let gu = universal_groupoid(&s);
            let gm = minimal_groupoid(&s);
            let ok = report.basis_checks.all() && report.paterson_iso && gu.check_axioms().is_ok() && gm.check_axioms().is_ok();
            Outcome::new(
                ok,
                json!({
                    "completion": report,
                    "universal": gu.to_json(),
                    "minimal": gm.to_json(),
                    "minimal_orbits": gm.orbits().len(),
                    "minimal_principal": gm.is_principal(),
                }),
            )
            .line(format!("|G_u| = {}, |G_m| = {}, orbits of G_m: {}", gu.len(), gm.len(), gm.orbits().len()))
            .line(format!("basis checks {}", ok_word(report.basis_checks.all())))
            .line(format!("Paterson model {}", ok_word(report.paterson_iso)))
            .dot(gm.orbit_dot(&name))
        }
        SemigroupAction::Quotient => match quotient_tilde(&s) {
            Ok(q) => {
                let classes: Vec<Vec<String>> = q.classes.iter().map(|c| names(&s, c.iter().copied())).collect();
                Outcome::new(true, json!({ "classes": classes, "trivial": q.is_trivial() }))
                    .line(format!("{} classes, trivial: {}", classes.len(), q.is_trivial()))
                    .dot(hasse_dot(&q.semigroup, &format!("{name}/~")))
            }
            Err(e @ CompletionError::NotCongruence(..)) => {
                Outcome::new(false, json!({ "error": e.to_string() })).line(e.to_string())
            }
            Err(e) => return Err(InputError(e.to_string())),
        },
        SemigroupAction::Ideals => match lattice_maps(&s) {
            Ok(maps) => {
                let units = Units::new(&s);
                let ok = maps.verdict.all() && maps.ideals.check_axioms();
                Outcome::new(
                    ok,
                    json!({
                        "applicable": true,
                        "ideals": maps.ideals.node_labels(&units),
                        "open_sets": maps.open_sets.iter().map(|v| names(&s, v.iter().copied())).collect::<Vec<_>>(),
                        "maps": maps.verdict,
                    }),
                )
                .line(format!("{} ideals, {} open invariant sets", maps.ideals.len(), maps.open_sets.len()))
                .line(format!("S_u and S_i {}", ok_word(maps.verdict.all())))
                .dot(maps.ideals.to_dot(&units, &name))
            }
            Err(e) => lattice_note(e),
        },
        SemigroupAction::Minimal => match minimality_report(&s) {
            Ok(r) => Outcome::new(r.all_equal, to_value(&r))
                .line(format!(
                    "(i) {} (ii) {} (iii) {}",
                    r.no_nontrivial_ideals, r.condition_ii, r.groupoid_minimal
                ))
                .line(format!("criteria agree: {}", r.all_equal)),
            Err(e) => lattice_note(e),
        },
        SemigroupAction::Simplicity => match simplicity_report(&s, opts.assume_essentially_principal) {
            Ok(r) => Outcome::new(true, to_value(&r)).line(r.note).verdict(r.verdict),
            Err(e) => lattice_note(e),
        },
    })
}

fn graph_input(text: &str) -> Result<DirectedGraph, InputError> {
    load_graph(text).map_err(|e| InputError(e.to_string()))
}

/// Hasse diagram of the idempotents `(α, α)` of a fragment: the tree of paths.
fn path_tree_dot(s: &GraphSemigroup, title: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
    out.push_str("  rankdir=BT;\n");
    let idem = s.idempotents();
    for p in &idem {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", p.0, escape(&s.label(*p)));
    }
    for p in &idem {
        let Some(pair) = s.pair(*p).filter(|pair| !pair.alpha.is_empty()) else {
            continue;
        };
        let edges = pair.alpha.edges();
        let parent = s.graph().path(pair.alpha.source(), &edges[..edges.len() - 1]).expect("prefix of a path");
        let up = PathPair { alpha: parent.clone(), beta: parent };
        let _ = writeln!(out, "  n{} -> n{};", p.0, s.id_of(&up).expect("shorter path is in the fragment").0);
    }
    out.push_str("}\n");
    out
}

fn graph_command(
    action: GraphAction,
    text: &str,
    path: &Path,
    max_len: Option<usize>,
    opts: &Options,
) -> Result<Outcome, InputError> {
    let g = graph_input(text)?;
    let name = title(path);
    let maxlen = max_len.unwrap_or(DEFAULT_MAX_LEN);
    Ok(match action {
        GraphAction::Check => {
            let (exit, cycle) = cycle_exit_check(&g);
            Outcome::new(
                true,
                json!({
                    "vertices": (0..g.vertex_count()).map(|v| g.vertex_name(v)).collect::<Vec<_>>(),
                    "edges": (0..g.edge_count())
                        .map(|e| [g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))])
                        .collect::<Vec<_>>(),
                    "cycle_exit": exit,
                    "cycle_without_exit": cycle,
                }),
            )
            .line(format!("valid graph, {} vertices, {} edges", g.vertex_count(), g.edge_count()))
            .line(format!("every cycle has an exit: {exit}"))
            .dot(g.to_dot(&name))
        }
        GraphAction::Semigroup => {
            let s = GraphSemigroup::new(&g, maxlen);
            let order = s.order_report();
            let radius = s.radius_check();
            let ok = order.characterization_holds && order.common_lower_bound_comparable && radius.all();
            Outcome::new(
                ok,
                json!({
                    "max_len": maxlen,
                    "elements": s.len(),
                    "idempotents": s.idempotents().len(),
                    "order": order,
                    "radius": radius,
                }),
            )
            .line(format!("{} elements with paths of length <= {maxlen}", s.len()))
            .line(format!("order characterization {}", ok_word(order.characterization_holds)))
            .line(format!("common lower bound implies comparable {}", ok_word(order.common_lower_bound_comparable)))
            .line(format!("radius axioms {}", ok_word(radius.all())))
            .dot(path_tree_dot(&s, &name))
        }
        GraphAction::Groupoid => {
            let bounds = IsoBounds { prefix: 2, cycle: 2, lag: 1, ..IsoBounds::default() };
            let lassos = enumerate_lassos(&g, bounds.prefix, bounds.cycle);
            let triples = enumerate_triples(&lassos, bounds.lag);
            let isotropy: BTreeMap<String, Vec<i64>> = lassos
                .iter()
                .map(|x| (x.label(&g), triples.iter().filter(|t| t.x == *x && t.y == *x).map(|t| t.k).collect()))
                .collect();
            let laws = triples.iter().all(|t| {
                t.inverse().inverse() == *t
                    && t.compose(&t.inverse()).as_ref() == Ok(&t.range())
                    && t.compose(&t.source()).as_ref() == Ok(t)
            });
            let periodic = isotropy.values().filter(|ks| ks.iter().any(|&k| k != 0)).count();
            Outcome::new(
                laws,
                json!({
                    "bounds": bounds,
                    "lassos": lassos.iter().map(|x| x.label(&g)).collect::<Vec<_>>(),
                    "triples": triples.len(),
                    "isotropy_lags": isotropy,
                    "groupoid_laws": laws,
                }),
            )
            .line(format!("{} lassos, {} triples with |k| <= {}", lassos.len(), triples.len(), bounds.lag))
            .line(format!("{periodic} lassos with nontrivial isotropy in range"))
            .line(format!("groupoid laws {}", ok_word(laws)))
        }
        GraphAction::HsLattice => {
            let lattice = hereditary_saturated_lattice(&g);
            Outcome::new(lattice.check_axioms(), json!({ "nodes": lattice.labels(&g) }))
                .line(format!("{} hereditary saturated sets", lattice.len()))
                .dot(lattice.to_dot(&g, &name))
        }
        GraphAction::Iso => {
            let bounds = IsoBounds { maxlen: max_len.unwrap_or(DEFAULT_ISO_MAX_LEN), ..IsoBounds::default() };
            match graphiso_check(&g, bounds) {
                Ok(r) => Outcome::new(r.all(), to_value(&r))
                    .line(format!("{} lassos, {} triples, {} composable pairs", r.lassos, r.triples, r.composable_pairs))
                    .line(format!("h∘j {} j∘h {}", ok_word(r.h_after_j), ok_word(r.j_after_h)))
                    .line(format!("homomorphism {}", ok_word(r.homomorphism)))
                    .line(format!("Z-sets match V-sets {}", ok_word(r.z_sets_match))),
                Err(e) => return Err(InputError(e.to_string())),
            }
        }
        GraphAction::Ideals => {
            let lattice = hereditary_saturated_lattice(&g);
            match (lemma_it_check(&g, maxlen), graph_simplicity(&g, maxlen, opts.assume_essentially_principal)) {
                (Ok(it), Ok(simple)) => Outcome::new(it.all(), json!({ "lemma_it": it, "simplicity": simple }))
                    .line(format!("{} ideals at max length {maxlen}, {} hereditary saturated sets", it.ideals, lattice.len()))
                    .line(format!("bijection {}", ok_word(it.bijective && it.inverse_maps)))
                    .line(format!("lattice maps {}", ok_word(it.preserves_joins && it.preserves_meets)))
                    .line(format!("every cycle has an exit: {}", simple.cycle_exit))
                    .line(simple.note)
                    .verdict(simple.verdict)
                    .dot(lattice.to_dot(&g, &name)),
                (Err(GraphError::NotStabilized { maxlen, next, at_maxlen, at_next }), _) => Outcome::new(
                    false,
                    json!({ "error": "not stabilized", "max_len": maxlen, "next": next, "at_max_len": at_maxlen, "at_next": at_next }),
                )
                .line(format!("ideal lattice changes between max length {maxlen} and {next}")),
                (Err(e), _) | (_, Err(e)) => return Err(InputError(e.to_string())),
            }
        }
    })
}
