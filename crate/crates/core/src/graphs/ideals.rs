//! Hereditary saturated vertex sets and their match with the `<`-closed
//! invariant ideals of a truncated `Γ(g)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::{DirectedGraph, GraphError, GraphSemigroup};
use crate::groupoid::escape;
use crate::ideals::{verdict, UnitIdeal, Units, Verdict};
use crate::semigroup::Semigroup;

pub type VertexSet = BTreeSet<usize>;

/// The smallest hereditary saturated set containing `set`.
pub fn hs_hull(g: &DirectedGraph, set: &VertexSet) -> VertexSet {
    let mut out: VertexSet = BTreeSet::new();
    for &v in set {
        out.extend(g.reachable(v).iter().enumerate().filter(|(_, &r)| r).map(|(w, _)| w));
    }
    loop {
        let added: Vec<usize> = (0..g.vertex_count())
            .filter(|v| !out.contains(v))
            .filter(|&v| g.out_edges(v).all(|e| out.contains(&g.range(e))))
            .collect();
        if added.is_empty() {
            return out;
        }
        out.extend(added);
    }
}

pub fn is_hereditary(g: &DirectedGraph, set: &VertexSet) -> bool {
    set.iter().all(|&v| g.out_edges(v).all(|e| set.contains(&g.range(e))))
}

pub fn is_saturated(g: &DirectedGraph, set: &VertexSet) -> bool {
    (0..g.vertex_count())
        .filter(|v| !set.contains(v))
        .all(|v| g.out_edges(v).any(|e| !set.contains(&g.range(e))))
}

/// Hereditary saturated sets ordered by size then members, with join and
/// meet tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexLattice {
    pub nodes: Vec<VertexSet>,
    pub joins: Vec<Vec<usize>>,
    pub meets: Vec<Vec<usize>>,
}

impl VertexLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, set: &VertexSet) -> Option<usize> {
        self.nodes.iter().position(|n| n == set)
    }

    pub fn check_axioms(&self) -> bool {
        let n = self.len();
        let le = |a: usize, b: usize| self.nodes[a].is_subset(&self.nodes[b]);
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (j, m) = (self.joins[a][b], self.meets[a][b]);
                le(a, j)
                    && le(b, j)
                    && le(m, a)
                    && le(m, b)
                    && (0..n).all(|c| (!(le(a, c) && le(b, c)) || le(j, c)) && (!(le(c, a) && le(c, b)) || le(c, m)))
            })
        })
    }

    pub fn labels(&self, g: &DirectedGraph) -> Vec<Vec<String>> {
        self.nodes.iter().map(|n| vertex_names(g, n)).collect()
    }

    pub fn to_dot(&self, g: &DirectedGraph, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(title));
        out.push_str("  rankdir=BT;\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  h{k} [label=\"{{{}}}\"];", escape(&vertex_names(g, node).join(",")));
        }
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.nodes[a].is_subset(&self.nodes[b]);
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    let _ = writeln!(out, "  h{a} -> h{b};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn vertex_names(g: &DirectedGraph, set: &VertexSet) -> Vec<String> {
    set.iter().map(|&v| g.vertex_name(v).to_string()).collect()
}

/// All hereditary saturated sets, as joins of the hulls of single vertices.
pub fn hereditary_saturated_lattice(g: &DirectedGraph) -> VertexLattice {
    let principal: Vec<VertexSet> = (0..g.vertex_count()).map(|v| hs_hull(g, &BTreeSet::from([v]))).collect();
    let bottom = hs_hull(g, &BTreeSet::new());
    let mut seen = BTreeSet::from([bottom.clone()]);
    let mut queue = vec![bottom];
    while let Some(node) = queue.pop() {
        for p in &principal {
            let joined = hs_hull(g, &node.union(p).copied().collect());
            if seen.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut nodes: Vec<VertexSet> = seen.into_iter().collect();
    nodes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: BTreeMap<&VertexSet, usize> = nodes.iter().enumerate().map(|(k, n)| (n, k)).collect();
    let n = nodes.len();
    let mut joins = vec![vec![0; n]; n];
    let mut meets = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            joins[a][b] = index[&hs_hull(g, &nodes[a].union(&nodes[b]).copied().collect())];
            meets[a][b] = index[&nodes[a].intersection(&nodes[b]).copied().collect::<VertexSet>()];
        }
    }
    VertexLattice { nodes, joins, meets }
}

/// `I ↦ {r(p) : p ∈ I}` on idempotents `(α, α)`.
fn ranges(s: &GraphSemigroup, ideal: &UnitIdeal) -> VertexSet {
    ideal.iter().filter_map(|p| s.pair(p)).map(|p| p.alpha.range()).collect()
}

/// `H ↦ {p : r(p) ∈ H}`, with the zero.
fn ideal_of(s: &GraphSemigroup, units: &Units<'_, GraphSemigroup>, set: &VertexSet) -> UnitIdeal {
    units
        .idempotents()
        .iter()
        .copied()
        .filter(|&p| s.pair(p).map_or(true, |pair| set.contains(&pair.alpha.range())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaItReport {
    pub maxlen: usize,
    pub semigroup_size: usize,
    pub idempotents: usize,
    pub ideals: usize,
    pub hereditary_saturated: Vec<Vec<String>>,
    /// `{r(p) : p ∈ I}` for each ideal, in lattice order.
    pub images: Vec<Vec<String>>,
    pub bijective: bool,
    pub inverse_maps: bool,
    pub preserves_joins: bool,
    pub preserves_meets: bool,
    pub stabilized: bool,
}

impl LemmaItReport {
    pub fn all(&self) -> bool {
        self.bijective && self.inverse_maps && self.preserves_joins && self.preserves_meets && self.stabilized
    }
}

fn image_lattice(g: &DirectedGraph, maxlen: usize) -> (GraphSemigroup, Vec<VertexSet>) {
    let s = GraphSemigroup::new(g, maxlen);
    let nodes = Units::new(&s).lattice().nodes;
    let images = nodes.iter().map(|n| ranges(&s, n)).collect();
    (s, images)
}

/// Matches the ideal lattice of the fragment of `Γ(g)` with paths of length
/// at most `maxlen` against the hereditary saturated sets, and checks that
/// the fragment with `maxlen + 1` gives the same sets.
pub fn lemma_it_check(g: &DirectedGraph, maxlen: usize) -> Result<LemmaItReport, GraphError> {
    let hs = hereditary_saturated_lattice(g);
    let s = GraphSemigroup::new(g, maxlen);
    let units = Units::new(&s);
    let lattice = units.lattice();
    let images: Vec<VertexSet> = lattice.nodes.iter().map(|n| ranges(&s, n)).collect();

    let (_, next) = image_lattice(g, maxlen + 1);
    let sorted = |v: &[VertexSet]| v.iter().cloned().collect::<BTreeSet<_>>();
    if sorted(&images) != sorted(&next) {
        let labels = |v: &[VertexSet]| v.iter().map(|n| vertex_names(g, n)).collect();
        return Err(GraphError::NotStabilized {
            maxlen,
            next: maxlen + 1,
            at_maxlen: labels(&images),
            at_next: labels(&next),
        });
    }

    let bijective = images.len() == hs.len() && sorted(&images) == sorted(&hs.nodes);
    let inverse_maps = lattice.nodes.iter().zip(&images).all(|(node, h)| ideal_of(&s, &units, h) == *node)
        && hs.nodes.iter().all(|h| ranges(&s, &ideal_of(&s, &units, h)) == *h);
    let mut preserves_joins = bijective;
    let mut preserves_meets = bijective;
    if bijective {
        let to_hs: Vec<usize> = images.iter().map(|h| hs.index_of(h).expect("bijective")).collect();
        for a in 0..lattice.len() {
            for b in 0..lattice.len() {
                preserves_joins &= to_hs[lattice.joins[a][b]] == hs.joins[to_hs[a]][to_hs[b]];
                preserves_meets &= to_hs[lattice.meets[a][b]] == hs.meets[to_hs[a]][to_hs[b]];
            }
        }
    }
    Ok(LemmaItReport {
        maxlen,
        semigroup_size: s.len(),
        idempotents: units.idempotents().len(),
        ideals: lattice.len(),
        hereditary_saturated: hs.labels(g),
        images: images.iter().map(|n| vertex_names(g, n)).collect(),
        bijective,
        inverse_maps,
        preserves_joins,
        preserves_meets,
        stabilized: true,
    })
}

/// Whether every cycle has an exit. Returns the edges of a cycle without
/// one when there is such a cycle.
pub fn cycle_exit_check(g: &DirectedGraph) -> (bool, Option<Vec<String>>) {
    let single = |v: usize| -> Option<usize> {
        let mut out = g.out_edges(v);
        match (out.next(), out.next()) {
            (Some(e), None) => Some(e),
            _ => None,
        }
    };
    for v in 0..g.vertex_count() {
        let mut cycle = Vec::new();
        let mut u = v;
        while let Some(e) = single(u) {
            cycle.push(g.edge_name(e).to_string());
            u = g.range(e);
            if u == v {
                return (false, Some(cycle));
            }
            if cycle.len() > g.vertex_count() {
                break;
            }
        }
    }
    (true, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSimplicity {
    pub hereditary_saturated: usize,
    /// The fragment's ideal lattice has two nodes.
    pub minimal: bool,
    pub ideals: usize,
    /// Every cycle has an exit; stands in for essential principality.
    pub cycle_exit: bool,
    pub cycle_without_exit: Option<Vec<String>>,
    pub assumed_essentially_principal: bool,
    pub verdict: Verdict,
    pub note: &'static str,
}

/// Simplicity of the minimal groupoid of `Γ(g)`: minimality from the ideal
/// lattice of the fragment, essential principality from the cycle-exit
/// condition.
pub fn graph_simplicity(g: &DirectedGraph, maxlen: usize, assume: bool) -> Result<GraphSimplicity, GraphError> {
    let it = lemma_it_check(g, maxlen)?;
    let minimal = it.ideals == 2 && it.hereditary_saturated.len() == 2;
    let (cycle_exit, cycle_without_exit) = cycle_exit_check(g);
    let (v, _) = verdict(minimal, cycle_exit, assume);
    let note = match (minimal, cycle_exit, assume) {
        (false, _, _) => "a hereditary saturated set other than the empty set and all vertices exists",
        (true, true, _) => "minimal, and every cycle has an exit",
        (true, false, true) => "minimal; essential principality assumed",
        (true, false, false) => "minimal, but a cycle has no exit, so essential principality is not established",
    };
    Ok(GraphSimplicity {
        hereditary_saturated: it.hereditary_saturated.len(),
        minimal,
        ideals: it.ideals,
        cycle_exit,
        cycle_without_exit,
        assumed_essentially_principal: assume,
        verdict: v,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graphs::load_graph;

    fn graph(name: &str) -> DirectedGraph {
        load_graph(corpus::graph_text(name)).unwrap()
    }

    /// Every subset that is hereditary and saturated, by scan.
    fn oracle(g: &DirectedGraph) -> Vec<VertexSet> {
        let n = g.vertex_count();
        let mut out: Vec<VertexSet> = (0u32..1 << n)
            .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect::<VertexSet>())
            .filter(|h| is_hereditary(g, h) && is_saturated(g, h))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn hs_lattices() {
        for name in ["o2", "sink2", "loop"] {
            let g = graph(name);
            let lattice = hereditary_saturated_lattice(&g);
            assert_eq!(lattice.nodes, oracle(&g), "{name}");
            assert!(lattice.check_axioms(), "{name}");
        }
        assert_eq!(hereditary_saturated_lattice(&graph("o2")).len(), 2);
        let sink = graph("sink2");
        assert_eq!(hereditary_saturated_lattice(&sink).labels(&sink), vec![vec![], vec!["w".to_string()], vec!["v".into(), "w".into()]]);
    }

    #[test]
    fn lemma_it_small() {
        for name in ["o2", "sink2", "loop"] {
            let report = lemma_it_check(&graph(name), 2).unwrap();
            assert!(report.all(), "{name}: {report:?}");
        }
    }

    #[test]
    fn cycle_exits() {
        assert!(cycle_exit_check(&graph("o2")).0);
        assert_eq!(cycle_exit_check(&graph("loop")), (false, Some(vec!["a".to_string()])));
        assert_eq!(cycle_exit_check(&graph("sink2")), (false, Some(vec!["b".to_string()])));
        let two = load_graph("edge e v w\nedge f w v\nedge g w w\n").unwrap();
        assert!(cycle_exit_check(&two).0);
    }

    #[test]
    fn verdicts() {
        assert_eq!(graph_simplicity(&graph("o2"), 2, false).unwrap().verdict, Verdict::Simple);
        assert_eq!(graph_simplicity(&graph("loop"), 2, false).unwrap().verdict, Verdict::Conditional);
        assert_eq!(graph_simplicity(&graph("sink2"), 2, false).unwrap().verdict, Verdict::NotSimple);
    }
}
