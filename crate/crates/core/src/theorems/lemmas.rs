use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::NamedGraph;
use crate::error::{Error, Result};
use crate::format::to_sparse6;
use crate::matching::{self, MatchingOracle, RemovableEdgeSet};
use crate::multigraph::{EdgeId, MultiGraph, VertexSet};
use crate::theorems::{verify_lemma6_with, RoundTrip};
use crate::tightcuts::{self, LeafKind, TightCutEngine};
use crate::Limits;

/// How the suite computes `RE(G)`; swappable so tests can inject a faulty one.
pub type RemovableFn = fn(&MultiGraph) -> Result<RemovableEdgeSet>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    /// Every edge of a brace on six or more vertices is removable.
    L1,
    /// Every brace on six or more vertices is 3-connected.
    L2,
    /// An edge is removable iff it is removable in each tight cut contraction containing it.
    L3,
    /// `b(G) = b(G/X) + b(G/X̄)` for every tight cut.
    L4,
    /// Every tight cut of a near-brick has exactly one bipartite shore.
    L5,
    /// Bisubdividing an edge keeps `b` and removes exactly that edge from `RE`.
    L6,
    /// Deleting one of two parallel edges cannot create removable edges.
    Claim1,
    /// The brick and brace multiset does not depend on the first tight cut chosen.
    DecompInvariance,
    /// The only simple matching covered graphs on four vertices are `C4` and `K4`.
    FourVertexCensus,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::L1,
        LemmaId::L2,
        LemmaId::L3,
        LemmaId::L4,
        LemmaId::L5,
        LemmaId::L6,
        LemmaId::Claim1,
        LemmaId::DecompInvariance,
        LemmaId::FourVertexCensus,
    ];
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A counterexample, replayable from its sparse6 encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub instances_checked: usize,
    /// Instances outside the statement's hypothesis (bisubdivisions that are not matching covered).
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    fn new(lemma_id: LemmaId) -> Self {
        LemmaReport { lemma_id, instances_checked: 0, skipped: 0, violations: Vec::new() }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Configuration of a lemma run: which statements, which removability routine,
/// which bisubdivision lengths.
#[derive(Clone, Debug)]
pub struct LemmaSuite {
    limits: Limits,
    lemmas: BTreeSet<LemmaId>,
    removable: RemovableFn,
    lengths: Vec<usize>,
}

impl LemmaSuite {
    /// Every lemma, the library's removability routine, lengths 3 and 5.
    pub fn new(limits: Limits) -> Self {
        LemmaSuite {
            limits,
            lemmas: LemmaId::ALL.into_iter().collect(),
            removable: matching::removable_edges,
            lengths: vec![3, 5],
        }
    }

    pub fn with_lemmas(mut self, lemmas: impl IntoIterator<Item = LemmaId>) -> Self {
        self.lemmas = lemmas.into_iter().collect();
        self
    }

    pub fn with_removable(mut self, removable: RemovableFn) -> Self {
        self.removable = removable;
        self
    }

    pub fn with_lengths(mut self, lengths: Vec<usize>) -> Self {
        self.lengths = lengths;
        self
    }

    pub fn start(&self) -> LemmaRun<'_> {
        LemmaRun { suite: self, reports: self.lemmas.iter().map(|&id| (id, LemmaReport::new(id))).collect() }
    }

    pub fn run<'a>(&self, corpus: impl IntoIterator<Item = &'a MultiGraph>) -> Result<Vec<LemmaReport>> {
        let mut run = self.start();
        for g in corpus {
            run.check(g)?;
        }
        Ok(run.finish())
    }

    fn wants(&self, id: LemmaId) -> bool {
        self.lemmas.contains(&id)
    }
}

/// Every lemma over a corpus with default settings.
pub fn run_lemma_suite(corpus: &[MultiGraph], limits: &Limits) -> Result<Vec<LemmaReport>> {
    LemmaSuite::new(*limits).run(corpus)
}

/// A lemma run in progress; feed graphs one at a time.
pub struct LemmaRun<'s> {
    suite: &'s LemmaSuite,
    reports: BTreeMap<LemmaId, LemmaReport>,
}

struct Tally<'r> {
    report: Option<&'r mut LemmaReport>,
    graph: &'r MultiGraph,
}

impl Tally<'_> {
    fn pass(&mut self) {
        if let Some(r) = self.report.as_deref_mut() {
            r.instances_checked += 1;
        }
    }

    fn fail(&mut self, detail: String) {
        if let Some(r) = self.report.as_deref_mut() {
            r.instances_checked += 1;
            r.violations.push(Violation { graph: to_sparse6(self.graph), detail });
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(detail())
        }
    }
}

impl LemmaRun<'_> {
    fn tally<'r>(&'r mut self, id: LemmaId, graph: &'r MultiGraph) -> Tally<'r> {
        Tally { report: self.reports.get_mut(&id), graph }
    }

    pub fn finish(self) -> Vec<LemmaReport> {
        self.reports.into_values().collect()
    }

    /// Checks every selected statement on one graph.
    pub fn check(&mut self, g: &MultiGraph) -> Result<()> {
        let suite = self.suite;
        let limits = &suite.limits;
        let oracle = MatchingOracle::new(g)?;
        let mc = oracle.is_matching_covered();
        let n = g.vertex_count();

        if suite.wants(LemmaId::FourVertexCensus) && n == 4 && g.is_simple() {
            let ok = !mc || [NamedGraph::C4, NamedGraph::K4]
                .iter()
                .any(|h| g.are_isomorphic(&h.build().expect("fixed construction")).unwrap_or(false));
            self.tally(LemmaId::FourVertexCensus, g).check(ok, || "matching covered but neither C4 nor K4".into());
        }

        if suite.wants(LemmaId::L6) {
            for (e, _) in g.edges() {
                for &length in &suite.lengths {
                    match verify_lemma6_with(g, e, length, limits, suite.removable)? {
                        RoundTrip::Skipped => {
                            if let Some(r) = self.reports.get_mut(&LemmaId::L6) {
                                r.skipped += 1;
                            }
                        }
                        RoundTrip::Passed => self.tally(LemmaId::L6, g).pass(),
                        RoundTrip::Failed(detail) => self.tally(LemmaId::L6, g).fail(detail),
                    }
                }
            }
        }

        if !mc {
            return Ok(());
        }
        let needs_re = [LemmaId::L1, LemmaId::L3, LemmaId::Claim1].iter().any(|&l| suite.wants(l));
        let re = if needs_re { Some((suite.removable)(g)?) } else { None };
        let bipartite = oracle.adjacency().is_bipartite_within(oracle.full().bits());
        let engine = TightCutEngine::with_oracle(g, oracle.clone())?;

        if (suite.wants(LemmaId::L1) || suite.wants(LemmaId::L2))
            && bipartite
            && n >= 6
            && engine.select_nontrivial_tight_cut(limits)?.is_none()
        {
            if let Some(re) = &re {
                let stuck: Vec<EdgeId> = g.edges().map(|(e, _)| e).filter(|&e| !re.contains(e)).collect();
                self.tally(LemmaId::L1, g).check(stuck.is_empty(), || format!("brace edges {stuck:?} are not removable"));
            }
            self.tally(LemmaId::L2, g).check(g.is_k_connected(3), || "brace is not 3-connected".into());
        }

        if suite.wants(LemmaId::Claim1) {
            let re = re.as_ref().expect("computed above");
            for (e1, (u, v)) in g.edges() {
                if g.multiplicity(u, v) < 2 {
                    continue;
                }
                let smaller = g.delete_edge(e1)?;
                let allowed = re.mapped(&g.deletion_map(e1));
                let got = (suite.removable)(&smaller)?;
                self.tally(LemmaId::Claim1, g).check(got.is_subset(&allowed), || {
                    format!("deleting parallel edge {e1} makes removable edges outside RE(G): {:?}", got.iter().collect::<Vec<_>>())
                });
            }
        }

        let cut_lemmas = [LemmaId::L3, LemmaId::L4, LemmaId::L5, LemmaId::DecompInvariance];
        if !cut_lemmas.iter().any(|&l| suite.wants(l)) {
            return Ok(());
        }
        let shores = engine.nontrivial_tight_shores(limits)?;
        let b = tightcuts::count_bricks(g, oracle.clone(), limits)?;

        if suite.wants(LemmaId::L5) && b == 1 {
            let trivial = (0..n).map(VertexSet::singleton);
            for shore in trivial.chain(shores.iter().copied()) {
                let adj = oracle.adjacency();
                let sides = [shore, shore.complement(n)].map(|s| adj.is_bipartite_within(s.bits()));
                self.tally(LemmaId::L5, g).check(sides[0] != sides[1], || {
                    format!("tight cut with shore {shore:?} has {} bipartite shores", sides.iter().filter(|&&s| s).count())
                });
            }
        }

        let baseline = if suite.wants(LemmaId::DecompInvariance) && !shores.is_empty() {
            Some(leaf_multiset(&tightcuts::tight_cut_decomposition(g, limits)?.leaves()))
        } else {
            None
        };

        for &shore in &shores {
            let g_x = g.contract_shore(shore)?;
            let g_xbar = g.contract_shore(shore.complement(n))?;

            if suite.wants(LemmaId::L3) {
                let re = re.as_ref().expect("computed above");
                let (re_x, re_xbar) = ((suite.removable)(&g_x.graph)?, (suite.removable)(&g_xbar.graph)?);
                let wrong: Vec<EdgeId> = g
                    .edges()
                    .map(|(e, _)| e)
                    .filter(|&e| {
                        let in_x = g_x.edge_map[e.0].is_none_or(|f| re_x.contains(f));
                        let in_xbar = g_xbar.edge_map[e.0].is_none_or(|f| re_xbar.contains(f));
                        re.contains(e) != (in_x && in_xbar)
                    })
                    .collect();
                self.tally(LemmaId::L3, g).check(wrong.is_empty(), || {
                    format!("across the tight cut with shore {shore:?}, removability of {wrong:?} disagrees with the contractions")
                });
            }

            if suite.wants(LemmaId::L4) {
                let parts = tightcuts::brick_count(&g_x.graph, limits)? + tightcuts::brick_count(&g_xbar.graph, limits)?;
                self.tally(LemmaId::L4, g).check(parts == b, || {
                    format!("b = {b} but the contractions along shore {shore:?} have {parts} bricks together")
                });
            }

            if let Some(baseline) = &baseline {
                let left = tightcuts::tight_cut_decomposition(&g_x.graph, limits)?;
                let right = tightcuts::tight_cut_decomposition(&g_xbar.graph, limits)?;
                let mut leaves = left.leaves();
                leaves.extend(right.leaves());
                let other = leaf_multiset(&leaves);
                let same = same_multiset(baseline, &other)?;
                self.tally(LemmaId::DecompInvariance, g).check(same, || {
                    format!("starting from the tight cut with shore {shore:?} changes the bricks and braces")
                });
            }
        }
        Ok(())
    }
}

fn leaf_multiset(leaves: &[&tightcuts::DecompositionNode]) -> Vec<(LeafKind, MultiGraph)> {
    leaves.iter().map(|l| (l.leaf_kind.expect("leaves carry a kind"), l.graph.underlying_simple())).collect()
}

/// Multiset equality up to isomorphism of the graphs.
fn same_multiset(a: &[(LeafKind, MultiGraph)], b: &[(LeafKind, MultiGraph)]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for (kind, g) in a {
        for (j, (kind_b, h)) in b.iter().enumerate() {
            if !used[j] && kind == kind_b && g.are_isomorphic(h)? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}
