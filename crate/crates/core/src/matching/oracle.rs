use crate::error::Result;
use crate::matching::{blossom, RemovableEdgeSet};
use crate::multigraph::{Adjacency, EdgeId, MultiGraph, VertexSet};

/// Largest order for which the oracle tabulates every vertex subset.
pub const TABLE_MAX_N: usize = 20;

/// Answers "does `G[S]` have a perfect matching?" for arbitrary vertex subsets `S`.
///
/// Parallel edges never matter for the existence of a perfect matching, so
/// the oracle only looks at the underlying simple graph. Up to
/// [`TABLE_MAX_N`] vertices every subset is precomputed by dynamic
/// programming (match the lowest vertex of `S` to each neighbour in turn);
/// beyond that each query runs the blossom algorithm on `G[S]`.
#[derive(Clone, Debug)]
pub struct MatchingOracle {
    adj: Adjacency,
    table: Option<Vec<u64>>,
}

impl MatchingOracle {
    pub fn new(g: &MultiGraph) -> Result<Self> {
        let adj = Adjacency::of(g)?;
        let table = (adj.n() <= TABLE_MAX_N).then(|| tabulate(&adj));
        Ok(MatchingOracle { adj, table })
    }

    /// An oracle that answers every query with the blossom algorithm.
    pub fn untabulated(g: &MultiGraph) -> Result<Self> {
        Ok(MatchingOracle { adj: Adjacency::of(g)?, table: None })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.n()
    }

    pub fn full(&self) -> VertexSet {
        VertexSet::full(self.adj.n())
    }

    pub(crate) fn adjacency(&self) -> &Adjacency {
        &self.adj
    }

    /// Whether `G[within]` has a perfect matching.
    #[inline]
    pub fn has_pm_on(&self, within: VertexSet) -> bool {
        let s = within.bits();
        if s.count_ones() % 2 == 1 {
            return false;
        }
        match &self.table {
            Some(t) => t[(s >> 6) as usize] >> (s & 63) & 1 == 1,
            None => {
                let members: Vec<usize> = within.iter().collect();
                let mut index = vec![usize::MAX; self.adj.n()];
                for (i, &v) in members.iter().enumerate() {
                    index[v] = i;
                }
                let lists: Vec<Vec<usize>> = members
                    .iter()
                    .map(|&v| VertexSet::from_bits(self.adj.row(v) & s).iter().map(|w| index[w]).collect())
                    .collect();
                2 * blossom::maximum_matching_size(&lists) == members.len()
            }
        }
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.has_pm_on(self.full())
    }

    /// Whether `G − S` has a perfect matching.
    pub fn has_pm_avoiding(&self, s: VertexSet) -> bool {
        self.has_pm_on(self.full().difference(s))
    }

    /// Whether `G[within] − uv` has a perfect matching.
    #[inline]
    pub fn has_pm_on_without(&self, within: VertexSet, u: usize, v: usize) -> bool {
        if !(within.contains(u) && within.contains(v)) {
            return self.has_pm_on(within);
        }
        // u must be matched to some neighbour other than v
        let rest = within.without(u);
        VertexSet::from_bits(self.adj.row(u) & rest.bits() & !(1 << v))
            .iter()
            .any(|w| self.has_pm_on(rest.without(w)))
    }

    /// Whether the edge `uv` lies in some perfect matching.
    pub fn pair_in_some_pm(&self, u: usize, v: usize) -> bool {
        self.adj.has_edge(u, v) && self.has_pm_avoiding(VertexSet::singleton(u).with(v))
    }

    pub fn is_matching_covered(&self) -> bool {
        let n = self.adj.n();
        n >= 2
            && self.adj.is_connected_within(self.adj.full())
            && self.adj.pairs().all(|(u, v)| self.has_pm_avoiding(VertexSet::singleton(u).with(v)))
    }

    /// `G − x − y` has a perfect matching for every pair of distinct vertices.
    pub fn is_bicritical(&self) -> bool {
        let n = self.adj.n();
        let full = self.full();
        (0..n).all(|x| (x + 1..n).all(|y| self.has_pm_on(full.without(x).without(y))))
    }

    /// Whether the underlying simple graph stays matching covered after deleting the pair `uv`.
    pub fn simple_edge_removable(&self, u: usize, v: usize) -> bool {
        let mut rest = self.adj.clone();
        rest.remove_edge(u, v);
        let full = self.full();
        if self.adj.n() < 2 || !rest.is_connected_within(full.bits()) {
            return false;
        }
        self.adj.pairs().filter(|&p| p != (u.min(v), u.max(v))).all(|(x, y)| {
            self.has_pm_on_without(full.without(x).without(y), u, v)
        })
    }

    /// `RE(G)` for the graph this oracle was built from.
    ///
    /// Assumes `g` is matching covered. A parallel edge is always removable
    /// since its twin keeps the underlying simple graph intact.
    pub fn removable_edges(&self, g: &MultiGraph) -> RemovableEdgeSet {
        debug_assert_eq!(g.vertex_count(), self.adj.n());
        let n = g.vertex_count();
        let mut mult = vec![0u32; n * n];
        for &(u, v) in g.edge_list() {
            mult[u * n + v] += 1;
        }
        let mut verdict = vec![None::<bool>; n * n];
        g.edges()
            .filter(|&(_, (u, v))| {
                mult[u * n + v] > 1
                    || *verdict[u * n + v].get_or_insert_with(|| self.simple_edge_removable(u, v))
            })
            .map(|(e, _)| e)
            .collect()
    }

    /// Removability of a single identified edge of `g` (assumed matching covered).
    pub fn is_removable(&self, g: &MultiGraph, e: EdgeId) -> Result<bool> {
        let (u, v) = g.endpoints(e)?;
        Ok(g.multiplicity(u, v) > 1 || self.simple_edge_removable(u, v))
    }
}

fn tabulate(adj: &Adjacency) -> Vec<u64> {
    let n = adj.n();
    let size = 1usize << n;
    let mut t = vec![0u64; size.div_ceil(64)];
    t[0] = 1;
    for s in 1..size as u64 {
        if s.count_ones() % 2 == 1 {
            continue;
        }
        let low = s.trailing_zeros() as usize;
        let rest = s & !(1 << low);
        let mut cand = adj.row(low) & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            let sub = rest & !(1 << w);
            if t[(sub >> 6) as usize] >> (sub & 63) & 1 == 1 {
                t[(s >> 6) as usize] |= 1 << (s & 63);
                break;
            }
        }
    }
    t
}
