//! Perfect matchings: existence, enumeration, matching covered graphs and removable edges.

mod blossom;
mod enumerate;
mod oracle;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexSet};

pub use enumerate::{count_perfect_matchings, enumerate_perfect_matchings, perfect_matching_masks};
pub use oracle::{MatchingOracle, TABLE_MAX_N};

/// A perfect matching as a sorted list of edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching(Vec<EdgeId>);

impl PerfectMatching {
    pub(crate) fn from_sorted(edges: Vec<EdgeId>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        PerfectMatching(edges)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    /// Checks that the edges are pairwise disjoint and cover every vertex of `g`.
    pub fn is_perfect_in(&self, g: &MultiGraph) -> bool {
        let mut covered = vec![false; g.vertex_count()];
        for &e in &self.0 {
            let Ok((u, v)) = g.endpoints(e) else { return false };
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.into_iter().all(|c| c)
    }
}

/// `RE(G)`: the edges whose deletion leaves a matching covered graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RemovableEdgeSet(BTreeSet<EdgeId>);

impl RemovableEdgeSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &RemovableEdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Images under an edge renumbering; edges mapped to `None` are dropped.
    pub fn mapped(&self, map: &[Option<EdgeId>]) -> RemovableEdgeSet {
        self.0.iter().filter_map(|e| map[e.0]).collect()
    }
}

impl FromIterator<EdgeId> for RemovableEdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        RemovableEdgeSet(iter.into_iter().collect())
    }
}

/// Exact perfect matching existence (blossom algorithm); any order.
pub fn has_perfect_matching(g: &MultiGraph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for (_, (u, v)) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    2 * blossom::maximum_matching_size(&adj) == n
}

/// Whether `G − S` has a perfect matching.
pub fn has_pm_avoiding(g: &MultiGraph, s: VertexSet) -> Result<bool> {
    if s.bound() > g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: s.bound() - 1, n: g.vertex_count() });
    }
    Ok(MatchingOracle::new(g)?.has_pm_avoiding(s))
}

fn has_pm_without_vertices(g: &MultiGraph, vs: &[usize]) -> bool {
    let mut doomed = vec![false; g.vertex_count()];
    for &v in vs {
        doomed[v] = true;
    }
    has_perfect_matching(&g.delete_vertices(&doomed).0)
}

/// At least two vertices, connected, and every edge in some perfect matching.
pub fn is_matching_covered(g: &MultiGraph) -> bool {
    match MatchingOracle::new(g) {
        Ok(oracle) => oracle.is_matching_covered(),
        Err(_) => {
            g.vertex_count() >= 2
                && g.is_connected()
                && g.underlying_simple().edges().all(|(_, (u, v))| has_pm_without_vertices(g, &[u, v]))
        }
    }
}

/// Whether `G − x − y` has a perfect matching for all distinct `x`, `y`.
pub fn is_bicritical(g: &MultiGraph) -> bool {
    match MatchingOracle::new(g) {
        Ok(oracle) => oracle.is_bicritical(),
        Err(_) => {
            let n = g.vertex_count();
            (0..n).all(|x| (x + 1..n).all(|y| has_pm_without_vertices(g, &[x, y])))
        }
    }
}

/// Whether `G − e` is matching covered; `G` itself must be matching covered.
pub fn is_removable(g: &MultiGraph, e: EdgeId) -> Result<bool> {
    g.endpoints(e)?;
    match MatchingOracle::new(g) {
        Ok(oracle) => {
            if !oracle.is_matching_covered() {
                return Err(Error::NotMatchingCovered);
            }
            oracle.is_removable(g, e)
        }
        Err(_) => {
            if !is_matching_covered(g) {
                return Err(Error::NotMatchingCovered);
            }
            Ok(is_matching_covered(&g.delete_edge(e)?))
        }
    }
}

/// `RE(G)`; `G` must be matching covered.
pub fn removable_edges(g: &MultiGraph) -> Result<RemovableEdgeSet> {
    match MatchingOracle::new(g) {
        Ok(oracle) => {
            if !oracle.is_matching_covered() {
                return Err(Error::NotMatchingCovered);
            }
            Ok(oracle.removable_edges(g))
        }
        Err(_) => {
            if !is_matching_covered(g) {
                return Err(Error::NotMatchingCovered);
            }
            let mut out = Vec::new();
            for (e, _) in g.edges() {
                if is_matching_covered(&g.delete_edge(e)?) {
                    out.push(e);
                }
            }
            Ok(out.into_iter().collect())
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::classify::NamedGraph;
    use crate::Limits;

    fn named(g: NamedGraph) -> MultiGraph {
        g.build().unwrap()
    }

    /// Enumeration oracle: matching covered iff connected and the union of all
    /// perfect matchings is every edge.
    pub(crate) fn matching_covered_by_enumeration(g: &MultiGraph) -> bool {
        let masks = perfect_matching_masks(g, &Limits::default()).unwrap();
        let union = masks.iter().fold(0u64, |a, m| a | m);
        let all = if g.edge_count() == 64 { u64::MAX } else { (1u64 << g.edge_count()) - 1 };
        g.vertex_count() >= 2 && g.is_connected() && union == all
    }

    pub(crate) fn removable_by_enumeration(g: &MultiGraph) -> RemovableEdgeSet {
        g.edges()
            .map(|(e, _)| e)
            .filter(|&e| matching_covered_by_enumeration(&g.delete_edge(e).unwrap()))
            .collect()
    }

    #[test]
    fn existence_examples() {
        assert!(has_perfect_matching(&named(NamedGraph::K4)));
        assert!(!has_perfect_matching(&named(NamedGraph::Cycle(3))));
        let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(has_perfect_matching(&p4));
        let star = MultiGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_perfect_matching(&star));
    }

    #[test]
    fn avoiding_examples() {
        let k4 = named(NamedGraph::K4);
        for x in 0..4 {
            for y in x + 1..4 {
                assert!(has_pm_avoiding(&k4, [x, y].into_iter().collect()).unwrap());
            }
        }
        let c6 = named(NamedGraph::C6);
        assert!(!has_pm_avoiding(&c6, [0, 2].into_iter().collect()).unwrap());
        assert!(has_pm_avoiding(&c6, [0, 3].into_iter().collect()).unwrap());
        assert!(has_pm_avoiding(&c6, VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let lim = Limits::default();
        assert_eq!(enumerate_perfect_matchings(&named(NamedGraph::C6), &lim).unwrap().len(), 2);
        let k4 = named(NamedGraph::K4);
        let pms = enumerate_perfect_matchings(&k4, &lim).unwrap();
        assert_eq!(pms.len(), 3);
        assert!(pms.windows(2).all(|w| w[0] < w[1]));
        assert!(pms.iter().all(|m| m.is_perfect_in(&k4)));
        assert_eq!(enumerate_perfect_matchings(&named(NamedGraph::K2), &lim).unwrap().len(), 1);
        let big = named(NamedGraph::Cycle(18));
        assert_eq!(
            enumerate_perfect_matchings(&big, &lim),
            Err(Error::TooLarge { n: 18, cap: 16 })
        );
        // a doubled edge doubles the matchings through it
        let thick = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 1)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&thick, &lim).unwrap().len(), 3);
    }

    /// K4 by brute force over all 2^6 edge subsets.
    #[test]
    fn k4_matchings_by_subset_brute_force() {
        let k4 = named(NamedGraph::K4);
        let brute = (0u32..64)
            .filter(|s| {
                let mut deg = [0; 4];
                for (e, (u, v)) in k4.edges() {
                    if s >> e.0 & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                deg.iter().all(|&d| d == 1)
            })
            .count();
        assert_eq!(brute, 3);
    }

    #[test]
    fn matching_covered_examples() {
        assert!(is_matching_covered(&named(NamedGraph::K2)));
        assert!(is_matching_covered(&named(NamedGraph::K4)));
        let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_matching_covered(&p4));
        assert!(!matching_covered_by_enumeration(&p4));
        assert!(!is_matching_covered(&MultiGraph::new(1).unwrap()));
    }

    #[test]
    fn removable_examples() {
        let k4 = named(NamedGraph::K4);
        for e in 0..6 {
            assert!(!is_removable(&k4, EdgeId(e)).unwrap());
        }
        assert!(removable_by_enumeration(&k4).is_empty());

        let mut thick = k4.clone();
        let twin = thick.add_edge(0, 1).unwrap();
        assert!(is_removable(&thick, EdgeId(0)).unwrap());
        assert!(is_removable(&thick, twin).unwrap());

        let k33 = named(NamedGraph::K33);
        assert_eq!(removable_edges(&k33).unwrap().len(), 9);
        assert!(removable_edges(&named(NamedGraph::C6Bar)).unwrap().is_empty());
        assert!(removable_edges(&named(NamedGraph::C4)).unwrap().is_empty());
        assert!(removable_by_enumeration(&named(NamedGraph::C6Bar)).is_empty());

        let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(removable_edges(&p4), Err(Error::NotMatchingCovered));
        assert_eq!(is_removable(&p4, EdgeId(0)), Err(Error::NotMatchingCovered));
        assert!(is_removable(&k4, EdgeId(9)).is_err());
    }

    #[test]
    fn bicritical_examples() {
        assert!(is_bicritical(&named(NamedGraph::K4)));
        assert!(!is_bicritical(&named(NamedGraph::C6)));
        assert!(is_bicritical(&named(NamedGraph::Prism)));
    }

    #[test]
    fn table_and_blossom_agree() {
        let graphs = [
            named(NamedGraph::Prism),
            named(NamedGraph::K33),
            named(NamedGraph::C6),
            MultiGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap(),
        ];
        for g in &graphs {
            let tab = MatchingOracle::new(g).unwrap();
            let slow = MatchingOracle::untabulated(g).unwrap();
            for s in 0..1u64 << g.vertex_count() {
                let s = VertexSet::from_bits(s);
                assert_eq!(tab.has_pm_on(s), slow.has_pm_on(s), "{g:?} on {s:?}");
            }
            assert_eq!(tab.removable_edges(g), slow.removable_edges(g));
        }
    }

    #[test]
    fn large_graphs_take_the_slow_route() {
        // a 70-cycle with chords is beyond bitmask range but still answerable
        let mut g = named(NamedGraph::Cycle(70));
        assert!(has_perfect_matching(&g));
        assert!(is_matching_covered(&g));
        g.add_edge(0, 34).unwrap();
        assert!(!is_matching_covered(&g));
        assert!(removable_edges(&named(NamedGraph::Cycle(66))).unwrap().is_empty());
    }
}
