use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::multigraph::MultiGraph;
use crate::theorems::{theorem1_with, theorem2_with, Facts, HypothesisFailure, TheoremVerdict};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// Satisfies the hypothesis and has exactly `Δ − 2` removable edges.
    Sharp,
    /// A near-brick whose only defect is reducibility, with fewer than `Δ − 2`
    /// removable edges.
    IrreducibilityNecessary,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalWitness {
    pub kind: WitnessKind,
    pub graph: MultiGraph,
    pub verdict: TheoremVerdict,
}

/// Both theorem verdicts for one graph plus its witness classification,
/// sharing one matching oracle.
#[derive(Clone, Debug, Serialize)]
pub struct Assessment {
    pub theorem1: TheoremVerdict,
    pub theorem2: TheoremVerdict,
    pub witness: Option<WitnessKind>,
}

pub fn assess(g: &MultiGraph, limits: &Limits) -> Result<Assessment> {
    let facts = Facts::of(g)?;
    let theorem1 = theorem1_with(g, &facts)?;
    let theorem2 = theorem2_with(g, &facts, limits)?;
    let witness = witness_kind(&theorem2);
    Ok(Assessment { theorem1, theorem2, witness })
}

fn witness_kind(verdict: &TheoremVerdict) -> Option<WitnessKind> {
    let count = verdict.removable_count? as i64;
    if verdict.hypothesis_holds && count == verdict.bound {
        Some(WitnessKind::Sharp)
    } else if verdict.hypothesis_failures == [HypothesisFailure::NotIrreducible] && count < verdict.bound {
        Some(WitnessKind::IrreducibilityNecessary)
    } else {
        None
    }
}

/// Classifies one graph as a witness of the bound's sharpness, of the need
/// for irreducibility, or neither.
pub fn extremal_check(g: &MultiGraph, limits: &Limits) -> Result<Option<ExtremalWitness>> {
    let facts = Facts::of(g)?;
    if !facts.matching_covered {
        return Ok(None);
    }
    let verdict = theorem2_with(g, &facts, limits)?;
    Ok(witness_kind(&verdict).map(|kind| ExtremalWitness { kind, graph: g.clone(), verdict }))
}

/// [`extremal_check`] over a corpus, keeping corpus order.
pub fn extremal_search(corpus: &[MultiGraph], limits: &Limits) -> Result<Vec<ExtremalWitness>> {
    let mut out = Vec::new();
    for g in corpus {
        out.extend(extremal_check(g, limits)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::NamedGraph;

    #[test]
    fn k33_is_never_a_witness() {
        assert!(extremal_search(&[NamedGraph::K33.build().unwrap()], &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn doubled_then_subdivided_k4_needs_irreducibility() {
        // K4 plus a second copy of edge 01, then that copy replaced by a path of length 3
        let mut g = NamedGraph::K4.build().unwrap();
        let twin = g.add_edge(0, 1).unwrap();
        let h = g.bisubdivide(twin, 3).unwrap().graph;
        let found = extremal_search(&[g, h], &Limits::default()).unwrap();
        // the doubled K4 itself attains the bound: Δ = 4 and both parallel edges are removable
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].kind, WitnessKind::Sharp);
        assert_eq!((found[0].verdict.delta, found[0].verdict.removable_count), (4, Some(2)));
        assert_eq!(found[1].kind, WitnessKind::IrreducibilityNecessary);
        assert_eq!((found[1].verdict.delta, found[1].verdict.removable_count), (4, Some(1)));
    }
}
