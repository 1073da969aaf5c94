//! Executable checks of the `Δ − 2` removable-edge bound and its supporting lemmas.

mod extremal;
mod lemmas;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classify::{self, NamedGraph};
use crate::error::Result;
use crate::format::to_sparse6;
use crate::matching::{MatchingOracle, RemovableEdgeSet};
use crate::multigraph::{EdgeId, MultiGraph};
use crate::tightcuts;
use crate::Limits;

pub use extremal::{assess, extremal_check, extremal_search, Assessment, ExtremalWitness, WitnessKind};
pub use lemmas::{run_lemma_suite, LemmaId, LemmaReport, LemmaRun, LemmaSuite, RemovableFn, Violation};

/// Why a graph falls outside a theorem's hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HypothesisFailure {
    #[serde(rename = "not-matching-covered")]
    NotMatchingCovered,
    #[serde(rename = "not-near-brick")]
    NotNearBrick,
    #[serde(rename = "not-brick")]
    NotBrick,
    #[serde(rename = "not-irreducible")]
    NotIrreducible,
    #[serde(rename = "is-K4")]
    IsK4,
    #[serde(rename = "is-C6-bar")]
    IsC6Bar,
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisFailure::NotMatchingCovered => "not-matching-covered",
            HypothesisFailure::NotNearBrick => "not-near-brick",
            HypothesisFailure::NotBrick => "not-brick",
            HypothesisFailure::NotIrreducible => "not-irreducible",
            HypothesisFailure::IsK4 => "is-K4",
            HypothesisFailure::IsC6Bar => "is-C6-bar",
        })
    }
}

/// Outcome of checking one graph against a theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    /// Defaults to the sparse6 encoding of the graph.
    pub graph_id: String,
    pub hypothesis_holds: bool,
    pub hypothesis_failures: Vec<HypothesisFailure>,
    pub delta: usize,
    /// `|RE(G)|`; absent when the graph is not matching covered.
    pub removable_count: Option<usize>,
    /// `Δ − 2`.
    pub bound: i64,
    /// `removable_count ≥ max(bound, 0)`; present exactly when the hypothesis holds.
    pub satisfied: Option<bool>,
}

impl TheoremVerdict {
    /// A hypothesis-satisfying graph with too few removable edges.
    pub fn is_violation(&self) -> bool {
        self.satisfied == Some(false)
    }
}

/// Which graph-level facts a verdict needs, computed once.
pub(crate) struct Facts {
    pub oracle: MatchingOracle,
    pub matching_covered: bool,
    pub removable: Option<RemovableEdgeSet>,
}

impl Facts {
    pub(crate) fn of(g: &MultiGraph) -> Result<Self> {
        let oracle = MatchingOracle::new(g)?;
        let matching_covered = oracle.is_matching_covered();
        let removable = matching_covered.then(|| oracle.removable_edges(g));
        Ok(Facts { oracle, matching_covered, removable })
    }
}

fn c6_bar() -> &'static MultiGraph {
    static C6_BAR: OnceLock<MultiGraph> = OnceLock::new();
    C6_BAR.get_or_init(|| NamedGraph::C6Bar.build().expect("fixed construction"))
}

/// `K4` or `C6-bar` as a simple graph; multigraphs are never excluded.
fn exclusion(g: &MultiGraph) -> Result<Option<HypothesisFailure>> {
    if !g.is_simple() {
        return Ok(None);
    }
    Ok(match (g.vertex_count(), g.edge_count()) {
        (4, 6) => Some(HypothesisFailure::IsK4),
        (6, 9) if g.are_isomorphic(c6_bar())? => Some(HypothesisFailure::IsC6Bar),
        _ => None,
    })
}

fn verdict(g: &MultiGraph, facts: &Facts, failures: Vec<HypothesisFailure>) -> Result<TheoremVerdict> {
    let delta = g.max_degree()?;
    let bound = delta as i64 - 2;
    let removable_count = facts.removable.as_ref().map(RemovableEdgeSet::len);
    let hypothesis_holds = failures.is_empty();
    let satisfied = hypothesis_holds.then(|| removable_count.is_some_and(|c| c as i64 >= bound.max(0)));
    Ok(TheoremVerdict {
        graph_id: to_sparse6(g),
        hypothesis_holds,
        hypothesis_failures: failures,
        delta,
        removable_count,
        bound,
        satisfied,
    })
}

/// Bricks other than `K4` and `C6-bar` have at least `Δ − 2` removable edges.
pub fn verify_theorem1(g: &MultiGraph) -> Result<TheoremVerdict> {
    let facts = Facts::of(g)?;
    theorem1_with(g, &facts)
}

pub(crate) fn theorem1_with(g: &MultiGraph, facts: &Facts) -> Result<TheoremVerdict> {
    let mut failures = Vec::new();
    if !facts.matching_covered {
        failures.push(HypothesisFailure::NotMatchingCovered);
    } else if !classify::is_brick(g) {
        failures.push(HypothesisFailure::NotBrick);
    }
    failures.extend(exclusion(g)?);
    verdict(g, facts, failures)
}

/// Irreducible near-bricks other than `K4` and `C6-bar` have at least `Δ − 2`
/// removable edges.
pub fn verify_theorem2(g: &MultiGraph, limits: &Limits) -> Result<TheoremVerdict> {
    let facts = Facts::of(g)?;
    theorem2_with(g, &facts, limits)
}

pub(crate) fn theorem2_with(g: &MultiGraph, facts: &Facts, limits: &Limits) -> Result<TheoremVerdict> {
    let mut failures = Vec::new();
    if !facts.matching_covered {
        failures.push(HypothesisFailure::NotMatchingCovered);
    } else if tightcuts::count_bricks(g, facts.oracle.clone(), limits)? != 1 {
        failures.push(HypothesisFailure::NotNearBrick);
    }
    if !classify::is_irreducible(g) {
        failures.push(HypothesisFailure::NotIrreducible);
    }
    failures.extend(exclusion(g)?);
    verdict(g, facts, failures)
}

/// Result of one bisubdivision round trip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RoundTrip {
    /// The bisubdivision is not matching covered, so there is nothing to check.
    Skipped,
    Passed,
    Failed(String),
}

/// Checks, for `H` = `G` with edge `e` replaced by a path of odd `length ≥ 3`
/// and `H` matching covered: `G` is matching covered, `b(G) = b(H)`,
/// `RE(H) = RE(G) − e` under the edge renumbering, and retracting the new
/// ear gives back `G` up to isomorphism.
pub fn verify_lemma6_roundtrip(g: &MultiGraph, e: EdgeId, length: usize, limits: &Limits) -> Result<RoundTrip> {
    verify_lemma6_with(g, e, length, limits, crate::matching::removable_edges)
}

pub(crate) fn verify_lemma6_with(
    g: &MultiGraph,
    e: EdgeId,
    length: usize,
    limits: &Limits,
    removable: RemovableFn,
) -> Result<RoundTrip> {
    let bis = g.bisubdivide(e, length)?;
    let h = &bis.graph;
    let h_oracle = MatchingOracle::new(h)?;
    if !h_oracle.is_matching_covered() {
        return Ok(RoundTrip::Skipped);
    }
    let g_oracle = MatchingOracle::new(g)?;
    if !g_oracle.is_matching_covered() {
        return Ok(RoundTrip::Failed(format!("bisubdivision at {e} is matching covered but the graph is not")));
    }
    let (bg, bh) = (tightcuts::count_bricks(g, g_oracle, limits)?, tightcuts::count_bricks(h, h_oracle, limits)?);
    if bg != bh {
        return Ok(RoundTrip::Failed(format!("b = {bg} before and {bh} after bisubdividing {e} (length {length})")));
    }
    // the subdivided edge has no image, so mapping drops it
    let expected = removable(g)?.mapped(&bis.edge_map);
    let actual = removable(h)?;
    if actual != expected {
        return Ok(RoundTrip::Failed(format!(
            "RE after bisubdividing {e} (length {length}) is {:?}, expected {:?}",
            actual.iter().collect::<Vec<_>>(),
            expected.iter().collect::<Vec<_>>()
        )));
    }
    let back = h.retract_ear(&bis.ear)?;
    if !back.are_isomorphic(g)? {
        return Ok(RoundTrip::Failed(format!("retracting the ear at {e} does not restore the graph")));
    }
    Ok(RoundTrip::Passed)
}

/// All 64 labelled simple graphs on four vertices, and those that are matching covered.
#[derive(Clone, Debug)]
pub struct FourVertexCensus {
    pub graphs_examined: usize,
    pub matching_covered: Vec<MultiGraph>,
}

pub fn four_vertex_census() -> FourVertexCensus {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    let mut matching_covered = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
        let g = MultiGraph::from_edges(4, edges).expect("valid pairs");
        if crate::matching::is_matching_covered(&g) {
            matching_covered.push(g);
        }
    }
    FourVertexCensus { graphs_examined: 1 << pairs.len(), matching_covered }
}

/// Every graph obtained from a matching covered simple graph by doubling one edge.
pub fn doubled_edge_variants(g: &MultiGraph) -> Vec<MultiGraph> {
    if !g.is_simple() || !crate::matching::is_matching_covered(g) {
        return Vec::new();
    }
    g.edges()
        .map(|(_, (u, v))| {
            let mut d = g.clone();
            d.add_edge(u, v).expect("existing edge");
            d
        })
        .collect()
}

/// [`doubled_edge_variants`] over a whole corpus.
pub fn doubled_edge_corpus(corpus: &[MultiGraph]) -> Vec<MultiGraph> {
    corpus.iter().flat_map(doubled_edge_variants).collect()
}
