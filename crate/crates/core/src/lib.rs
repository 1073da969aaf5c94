//! Structural analysis of matching covered graphs.
//!
//! The crate works on small loopless multigraphs and answers the questions
//! that come up when studying removable edges: does every edge lie in a
//! perfect matching, which edges can be deleted while keeping that property,
//! which cuts are tight, and what the brick/brace decomposition looks like.
//! On top of that sit executable checks of the `Δ − 2` lower bound on the
//! number of removable edges of bricks and irreducible near-bricks, together
//! with the supporting lemmas, run over exhaustive graph corpora.
//!
//! Everything is exact. Vertex sets are 64-bit masks, so most operations
//! require at most 64 vertices; the exhaustive searches (tight cut scan,
//! isomorphism, matching enumeration) are additionally capped by [`Limits`].

pub mod classify;
pub mod corpus;
mod error;
pub mod format;
pub mod matching;
pub mod multigraph;
pub mod theorems;
pub mod tightcuts;

pub use classify::{GraphClass, NamedGraph};
pub use error::{Error, Result};
pub use matching::{MatchingOracle, PerfectMatching, RemovableEdgeSet};
pub use multigraph::{EdgeId, MultiGraph, SingleEar, VertexSet};
pub use theorems::{LemmaId, LemmaReport, TheoremVerdict};
pub use tightcuts::{Cut, DecompositionNode, LeafKind};

/// Size caps for the exhaustive parts of the toolkit.
///
/// Exceeding a cap is always a hard [`Error::TooLarge`], never a silently
/// truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by the tight cut shore scan and everything built on it.
    pub max_n: usize,
    /// Largest order accepted by perfect matching enumeration.
    pub max_pm_enum: usize,
}

impl Limits {
    pub const DEFAULT_MAX_N: usize = 16;

    pub const fn new(max_n: usize, max_pm_enum: usize) -> Self {
        Limits { max_n, max_pm_enum }
    }

    pub(crate) fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::TooLarge { n, cap: self.max_n })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(Self::DEFAULT_MAX_N, Self::DEFAULT_MAX_N)
    }
}
