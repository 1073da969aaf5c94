//! Bricks, braces, near-bricks and irreducibility, plus a few named graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{self, MatchingOracle};
use crate::multigraph::MultiGraph;
use crate::tightcuts::{self, TightCutEngine};
use crate::Limits;

/// Structural flags of one graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphClass {
    pub matching_covered: bool,
    pub brick: bool,
    pub brace: bool,
    pub near_brick: bool,
    pub irreducible: bool,
    pub bipartite: bool,
}

/// Computes every flag of [`GraphClass`].
///
/// Deciding `brace` and `near_brick` may need a tight cut scan, so the order
/// cap of `limits` applies to matching covered graphs that are neither
/// bipartite braces decided early nor bricks.
pub fn classify(g: &MultiGraph, limits: &Limits) -> Result<GraphClass> {
    let bipartite = g.is_bipartite();
    let irreducible = is_irreducible(g);
    if g.vertex_count() > 64 {
        let matching_covered = matching::is_matching_covered(g);
        let brick = is_brick(g);
        if matching_covered && !brick {
            return Err(Error::TooLarge { n: g.vertex_count(), cap: limits.max_n });
        }
        return Ok(GraphClass { matching_covered, brick, brace: false, near_brick: brick, irreducible, bipartite });
    }
    let oracle = MatchingOracle::new(g)?;
    let matching_covered = oracle.is_matching_covered();
    let brick = elp_brick(g, &oracle);
    let mut class = GraphClass { matching_covered, brick, brace: false, near_brick: brick, irreducible, bipartite };
    if matching_covered && !brick {
        if bipartite {
            class.brace = TightCutEngine::with_oracle(g, oracle)?.select_nontrivial_tight_cut(limits)?.is_none();
        } else {
            class.near_brick = tightcuts::count_bricks(g, oracle, limits)? == 1;
        }
    }
    Ok(class)
}

fn elp_brick(g: &MultiGraph, oracle: &MatchingOracle) -> bool {
    let n = g.vertex_count();
    n >= 4 && n.is_multiple_of(2) && oracle.adjacency().is_k_connected(3) && oracle.is_bicritical()
}

/// Brick test by the Edmonds–Lovász–Pulleyblank characterization: 3-connected and bicritical.
pub fn is_brick(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || n % 2 == 1 {
        return false;
    }
    match MatchingOracle::new(g) {
        Ok(oracle) => elp_brick(g, &oracle),
        Err(_) => g.is_k_connected(3) && matching::is_bicritical(g),
    }
}

/// Brick test straight from the definition: matching covered, nonbipartite and
/// free of nontrivial tight cuts.
pub fn is_brick_by_definition(g: &MultiGraph, limits: &Limits) -> Result<bool> {
    limits.check_n(g.vertex_count())?;
    if g.is_bipartite() || !matching::is_matching_covered(g) {
        return Ok(false);
    }
    Ok(tightcuts::find_nontrivial_tight_cut(g, limits)?.is_none())
}

/// Matching covered, bipartite and free of nontrivial tight cuts.
pub fn is_brace(g: &MultiGraph, limits: &Limits) -> Result<bool> {
    if !g.is_bipartite() || !matching::is_matching_covered(g) {
        return Ok(false);
    }
    Ok(tightcuts::find_nontrivial_tight_cut(g, limits)?.is_none())
}

/// No single ear of odd length at least three.
pub fn is_irreducible(g: &MultiGraph) -> bool {
    !g.find_single_ears().iter().any(|ear| ear.contains_long_odd_ear())
}

/// Whether some edge joins two vertices of degree 2.
///
/// For 2-connected graphs on at least four vertices this is exactly the
/// negation of [`is_irreducible`].
pub fn has_adjacent_degree_two_pair(g: &MultiGraph) -> bool {
    let deg = g.degrees();
    g.edges().any(|(_, (u, v))| deg[u] == 2 && deg[v] == 2)
}

/// Cubic simple graphs on eight vertices that are bricks with exactly one removable edge.
pub fn find_r8_candidates(corpus: &[MultiGraph]) -> Vec<MultiGraph> {
    corpus
        .iter()
        .filter(|g| {
            g.vertex_count() == 8
                && g.is_simple()
                && g.degrees().iter().all(|&d| d == 3)
                && is_brick(g)
                && matching::removable_edges(g).is_ok_and(|re| re.len() == 1)
        })
        .cloned()
        .collect()
}

/// Small reference graphs with fixed labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    K2,
    C4,
    C6,
    K4,
    /// Complement of the 6-cycle.
    C6Bar,
    K33,
    Cycle(usize),
    /// Triangles `{0,1,2}` and `{3,4,5}` joined by the rungs `i–(i+3)`.
    Prism,
}

impl NamedGraph {
    pub fn build(self) -> Result<MultiGraph> {
        match self {
            NamedGraph::K2 => MultiGraph::from_edges(2, [(0, 1)]),
            NamedGraph::C4 => NamedGraph::Cycle(4).build(),
            NamedGraph::C6 => NamedGraph::Cycle(6).build(),
            NamedGraph::K4 => MultiGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            NamedGraph::C6Bar => Ok(NamedGraph::Cycle(6).build()?.complement()),
            NamedGraph::K33 => MultiGraph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))),
            NamedGraph::Cycle(k) if k < 3 => Err(Error::BadCycleLength(k)),
            NamedGraph::Cycle(k) => MultiGraph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))),
            NamedGraph::Prism => MultiGraph::from_edges(
                6,
                [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
            ),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::K2 => f.write_str("K2"),
            NamedGraph::C4 => f.write_str("C4"),
            NamedGraph::C6 => f.write_str("C6"),
            NamedGraph::K4 => f.write_str("K4"),
            NamedGraph::C6Bar => f.write_str("C6-bar"),
            NamedGraph::K33 => f.write_str("K33"),
            NamedGraph::Cycle(k) => write!(f, "cycle({k})"),
            NamedGraph::Prism => f.write_str("prism"),
        }
    }
}

/// Accepts `K2`, `C4`, `C6`, `K4`, `C6-bar` (or `C6_BAR`), `K33` (or `K3,3`),
/// `prism`, `cycle(k)` and `Ck`, ignoring case.
impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let named = match key.as_str() {
            "k2" => NamedGraph::K2,
            "c4" => NamedGraph::C4,
            "c6" => NamedGraph::C6,
            "k4" => NamedGraph::K4,
            "c6-bar" | "c6bar" => NamedGraph::C6Bar,
            "k33" | "k3,3" => NamedGraph::K33,
            "prism" => NamedGraph::Prism,
            _ => {
                let digits = key
                    .strip_prefix("cycle(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| key.strip_prefix('c'));
                match digits.and_then(|d| d.parse::<usize>().ok()) {
                    Some(k) if k >= 3 => NamedGraph::Cycle(k),
                    Some(k) => return Err(Error::BadCycleLength(k)),
                    None => return Err(Error::UnknownName(s.to_string())),
                }
            }
        };
        Ok(named)
    }
}
