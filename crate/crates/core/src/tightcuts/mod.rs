//! Cuts, tight cuts and the tight cut decomposition.
//!
//! A cut `∂(X)` of a matching covered graph is tight when every perfect
//! matching uses exactly one of its edges. Tightness is certified here
//! without enumerating matchings: for odd `|X|` every perfect matching meets
//! `∂(X)` an odd number of times, so the cut fails to be tight exactly when
//! two vertex-disjoint cut edges extend to a perfect matching together.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::MatchingOracle;
use crate::multigraph::{subsets_of_size, EdgeId, MultiGraph, VertexSet};
use crate::Limits;

/// A cut `∂(X)`: a shore together with the edges leaving it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cut {
    shore: VertexSet,
    edges: Vec<EdgeId>,
}

impl Cut {
    pub fn shore(&self) -> VertexSet {
        self.shore
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The other shore, `X̄`.
    pub fn opposite_shore(&self, n: usize) -> VertexSet {
        self.shore.complement(n)
    }

    /// A cut is trivial when one of its shores is a single vertex.
    pub fn is_trivial(&self, n: usize) -> bool {
        self.shore.len() == 1 || self.shore.len() + 1 == n
    }
}

/// `∂(X)` for a nonempty proper subset `X`.
pub fn cut_of(g: &MultiGraph, x: VertexSet) -> Result<Cut> {
    let full = g.vertex_set()?;
    if x.bound() > g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: x.bound() - 1, n: g.vertex_count() });
    }
    if x.is_empty() || x == full {
        return Err(Error::DegenerateShore);
    }
    let edges = g
        .edges()
        .filter(|&(_, (u, v))| x.contains(u) != x.contains(v))
        .map(|(e, _)| e)
        .collect();
    Ok(Cut { shore: x, edges })
}

/// Tight cut queries against one matching covered graph.
#[derive(Clone, Debug)]
pub struct TightCutEngine<'g> {
    graph: &'g MultiGraph,
    oracle: MatchingOracle,
}

impl<'g> TightCutEngine<'g> {
    /// Fails with [`Error::NotMatchingCovered`] unless `g` is matching covered.
    pub fn new(g: &'g MultiGraph) -> Result<Self> {
        Self::with_oracle(g, MatchingOracle::new(g)?)
    }

    pub fn with_oracle(g: &'g MultiGraph, oracle: MatchingOracle) -> Result<Self> {
        if !oracle.is_matching_covered() {
            return Err(Error::NotMatchingCovered);
        }
        Ok(TightCutEngine { graph: g, oracle })
    }

    pub fn graph(&self) -> &'g MultiGraph {
        self.graph
    }

    pub fn oracle(&self) -> &MatchingOracle {
        &self.oracle
    }

    /// Whether `∂(shore)` is tight.
    pub fn is_tight(&self, shore: VertexSet) -> bool {
        let x = shore.bits();
        if x.count_ones().is_multiple_of(2) {
            return false;
        }
        let adj = self.oracle.adjacency();
        let full = self.oracle.full();
        let xbar = full.bits() & !x;
        // unordered pairs of vertex-disjoint cut edges u1v1, u2v2 with u1 < u2 in X
        for u1 in shore {
            for v1 in VertexSet::from_bits(adj.row(u1) & xbar) {
                for u2 in VertexSet::from_bits(x >> u1 >> 1 << 1 << u1) {
                    for v2 in VertexSet::from_bits(adj.row(u2) & xbar & !(1 << v1)) {
                        let rest = full.without(u1).without(v1).without(u2).without(v2);
                        if self.oracle.has_pm_on(rest) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All nontrivial tight cuts, each given by its shore containing vertex 0, in
    /// increasing numeric order of that shore.
    pub fn nontrivial_tight_shores(&self, limits: &Limits) -> Result<Vec<VertexSet>> {
        let n = self.graph.vertex_count();
        limits.check_n(n)?;
        let mut out = Vec::new();
        if n < 6 {
            return Ok(out);
        }
        for k in (3..=n - 3).step_by(2) {
            for rest in subsets_of_size(n - 1, k - 1) {
                let shore = VertexSet::from_bits(rest.bits() << 1 | 1);
                if self.is_tight(shore) {
                    out.push(shore);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The nontrivial tight cut used to split this graph in a decomposition.
    ///
    /// Among all nontrivial tight cuts, the returned shore is bipartite if any
    /// tight cut has a bipartite shore, then of minimum size, then numerically
    /// smallest as a bitmask.
    pub fn select_nontrivial_tight_cut(&self, limits: &Limits) -> Result<Option<Cut>> {
        let n = self.graph.vertex_count();
        limits.check_n(n)?;
        if n < 6 {
            return Ok(None);
        }
        let adj = self.oracle.adjacency();
        for want_bipartite in [true, false] {
            for k in (3..=n - 3).step_by(2) {
                for shore in subsets_of_size(n, k) {
                    if adj.is_bipartite_within(shore.bits()) != want_bipartite {
                        continue;
                    }
                    if self.is_tight(shore) {
                        return cut_of(self.graph, shore).map(Some);
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Whether the cut is tight; `g` must be matching covered.
pub fn is_tight(g: &MultiGraph, cut: &Cut) -> Result<bool> {
    if cut.shore.bound() > g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: cut.shore.bound() - 1, n: g.vertex_count() });
    }
    Ok(TightCutEngine::new(g)?.is_tight(cut.shore))
}

/// A nontrivial tight cut chosen by the rule of
/// [`TightCutEngine::select_nontrivial_tight_cut`], or `None` for bricks and braces.
pub fn find_nontrivial_tight_cut(g: &MultiGraph, limits: &Limits) -> Result<Option<Cut>> {
    limits.check_n(g.vertex_count())?;
    TightCutEngine::new(g)?.select_nontrivial_tight_cut(limits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Brick,
    Brace,
}

/// A node of a tight cut decomposition tree.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionNode {
    pub graph: MultiGraph,
    /// The nontrivial tight cut this node was split along; `None` on leaves.
    pub split: Option<Cut>,
    /// `[G/X, G/X̄]` for internal nodes, where `X` is the split's shore.
    pub children: Vec<DecompositionNode>,
    /// Set exactly on leaves.
    pub leaf_kind: Option<LeafKind>,
}

impl DecompositionNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaves(&self) -> Vec<&DecompositionNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            if node.is_leaf() {
                out.push(node);
            } else {
                stack.extend(node.children.iter().rev());
            }
        }
        out
    }

    pub fn brick_count(&self) -> usize {
        self.leaves().iter().filter(|l| l.leaf_kind == Some(LeafKind::Brick)).count()
    }

    pub fn brace_count(&self) -> usize {
        self.leaves().iter().filter(|l| l.leaf_kind == Some(LeafKind::Brace)).count()
    }
}

/// The full tight cut decomposition of a matching covered graph.
///
/// Every graph in the tree is split along the cut chosen by
/// [`find_nontrivial_tight_cut`]; leaves are exactly the graphs without a
/// nontrivial tight cut.
pub fn tight_cut_decomposition(g: &MultiGraph, limits: &Limits) -> Result<DecompositionNode> {
    limits.check_n(g.vertex_count())?;
    let engine = TightCutEngine::new(g)?;
    let Some(cut) = engine.select_nontrivial_tight_cut(limits)? else {
        let kind = if engine.oracle().adjacency().is_bipartite_within(engine.oracle().full().bits()) {
            LeafKind::Brace
        } else {
            LeafKind::Brick
        };
        return Ok(DecompositionNode { graph: g.clone(), split: None, children: Vec::new(), leaf_kind: Some(kind) });
    };
    let n = g.vertex_count();
    let children = [cut.shore, cut.opposite_shore(n)]
        .into_iter()
        .map(|shore| tight_cut_decomposition(&g.contract_shore(shore)?.graph, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionNode { graph: g.clone(), split: Some(cut), children, leaf_kind: None })
}

/// `b(G)`, the number of bricks in a tight cut decomposition.
///
/// Bipartite graphs are answered with 0 and 3-connected bicritical graphs
/// (bricks, by the Edmonds–Lovász–Pulleyblank theorem) with 1 without a
/// shore scan; everything else is split along a nontrivial tight cut.
pub fn brick_count(g: &MultiGraph, limits: &Limits) -> Result<usize> {
    let oracle = MatchingOracle::new(g)?;
    if !oracle.is_matching_covered() {
        return Err(Error::NotMatchingCovered);
    }
    count_bricks(g, oracle, limits)
}

pub(crate) fn count_bricks(g: &MultiGraph, oracle: MatchingOracle, limits: &Limits) -> Result<usize> {
    let adj = oracle.adjacency();
    let n = g.vertex_count();
    if adj.is_bipartite_within(adj.full()) {
        return Ok(0);
    }
    if n >= 4 && adj.is_k_connected(3) && oracle.is_bicritical() {
        return Ok(1);
    }
    let engine = TightCutEngine::with_oracle(g, oracle)?;
    let Some(cut) = engine.select_nontrivial_tight_cut(limits)? else {
        return Ok(1);
    };
    let mut total = 0;
    for shore in [cut.shore, cut.opposite_shore(n)] {
        let child = g.contract_shore(shore)?.graph;
        let child_oracle = MatchingOracle::new(&child)?;
        total += count_bricks(&child, child_oracle, limits)?;
    }
    Ok(total)
}

/// Matching covered with exactly one brick.
pub fn is_near_brick(g: &MultiGraph, limits: &Limits) -> Result<bool> {
    let oracle = MatchingOracle::new(g)?;
    if !oracle.is_matching_covered() {
        return Ok(false);
    }
    Ok(count_bricks(g, oracle, limits)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::NamedGraph;
    use crate::matching::perfect_matching_masks;

    fn named(g: NamedGraph) -> MultiGraph {
        g.build().unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn tight_by_enumeration(g: &MultiGraph, cut: &Cut) -> bool {
        let mask = cut.edges().iter().fold(0u64, |a, e| a | 1 << e.0);
        perfect_matching_masks(g, &Limits::default())
            .unwrap()
            .iter()
            .all(|m| (m & mask).count_ones() == 1)
    }

    fn bisubdivided_k4() -> MultiGraph {
        named(NamedGraph::K4).bisubdivide(EdgeId(0), 3).unwrap().graph
    }

    #[test]
    fn cut_sizes() {
        assert_eq!(cut_of(&named(NamedGraph::C6), set(&[0, 1, 2])).unwrap().edges().len(), 2);
        assert_eq!(cut_of(&named(NamedGraph::K4), set(&[0])).unwrap().edges().len(), 3);
        assert_eq!(cut_of(&named(NamedGraph::Prism), set(&[0, 1, 2])).unwrap().edges().len(), 3);
        assert_eq!(cut_of(&named(NamedGraph::K4), VertexSet::empty()), Err(Error::DegenerateShore));
        assert_eq!(cut_of(&named(NamedGraph::K4), VertexSet::full(4)), Err(Error::DegenerateShore));
    }

    #[test]
    fn tightness_examples() {
        let c6 = named(NamedGraph::C6);
        let cut = cut_of(&c6, set(&[0, 1, 2])).unwrap();
        assert!(is_tight(&c6, &cut).unwrap());
        assert!(tight_by_enumeration(&c6, &cut));

        let prism = named(NamedGraph::Prism);
        for v in 0..6 {
            assert!(is_tight(&prism, &cut_of(&prism, set(&[v])).unwrap()).unwrap());
        }
        let tri = cut_of(&prism, set(&[0, 1, 2])).unwrap();
        assert!(!is_tight(&prism, &tri).unwrap());
        assert!(!tight_by_enumeration(&prism, &tri));

        let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_tight(&p4, &cut_of(&p4, set(&[0])).unwrap()), Err(Error::NotMatchingCovered));
    }

    #[test]
    fn even_shores_are_never_tight() {
        let k4 = named(NamedGraph::K4);
        let cut = cut_of(&k4, set(&[0, 1])).unwrap();
        assert!(!is_tight(&k4, &cut).unwrap());
        assert!(!tight_by_enumeration(&k4, &cut));
    }

    #[test]
    fn finding_nontrivial_tight_cuts() {
        let lim = Limits::default();
        assert_eq!(find_nontrivial_tight_cut(&named(NamedGraph::K4), &lim).unwrap(), None);

        let h = bisubdivided_k4();
        let cut = find_nontrivial_tight_cut(&h, &lim).unwrap().unwrap();
        assert_eq!(cut.shore().len(), 3);
        // the shore holds both subdivision vertices and one end of the path
        assert!(cut.shore().contains(4) && cut.shore().contains(5));
        assert!(cut.shore().contains(0) != cut.shore().contains(1));

        let c6 = named(NamedGraph::C6);
        let cut = find_nontrivial_tight_cut(&c6, &lim).unwrap().unwrap();
        assert_eq!(cut.shore(), set(&[0, 1, 2]));

        let big = named(NamedGraph::Cycle(18));
        assert_eq!(find_nontrivial_tight_cut(&big, &lim), Err(Error::TooLarge { n: 18, cap: 16 }));
    }

    #[test]
    fn decomposition_examples() {
        let lim = Limits::default();
        let k4 = tight_cut_decomposition(&named(NamedGraph::K4), &lim).unwrap();
        assert!(k4.is_leaf());
        assert_eq!(k4.leaf_kind, Some(LeafKind::Brick));

        let c6 = tight_cut_decomposition(&named(NamedGraph::C6), &lim).unwrap();
        let leaves = c6.leaves();
        assert_eq!(leaves.len(), 2);
        for leaf in leaves {
            assert_eq!(leaf.leaf_kind, Some(LeafKind::Brace));
            assert!(leaf.graph.are_isomorphic(&named(NamedGraph::C4)).unwrap());
        }

        let h = tight_cut_decomposition(&bisubdivided_k4(), &lim).unwrap();
        let leaves = h.leaves();
        assert_eq!(leaves.len(), 2);
        let brick = leaves.iter().find(|l| l.leaf_kind == Some(LeafKind::Brick)).unwrap();
        assert!(brick.graph.are_isomorphic(&named(NamedGraph::K4)).unwrap());
        let brace = leaves.iter().find(|l| l.leaf_kind == Some(LeafKind::Brace)).unwrap();
        assert!(brace.graph.underlying_simple().are_isomorphic(&named(NamedGraph::C4)).unwrap());
    }

    #[test]
    fn brick_count_examples() {
        let lim = Limits::default();
        assert_eq!(brick_count(&named(NamedGraph::K4), &lim).unwrap(), 1);
        assert_eq!(brick_count(&named(NamedGraph::C6), &lim).unwrap(), 0);
        assert_eq!(brick_count(&bisubdivided_k4(), &lim).unwrap(), 1);
        assert!(is_near_brick(&named(NamedGraph::Prism), &lim).unwrap());
        assert!(!is_near_brick(&named(NamedGraph::K33), &lim).unwrap());
        assert!(is_near_brick(&bisubdivided_k4(), &lim).unwrap());
    }

    #[test]
    fn two_bricks_around_a_brace() {
        // K33 with two vertices of the same colour class replaced by triangles
        let g = MultiGraph::from_edges(
            10,
            [
                (0, 1), (0, 2), (1, 2), (0, 7), (1, 8), (2, 9), (3, 4), (3, 5),
                (4, 5), (3, 7), (4, 8), (5, 9), (6, 7), (6, 8), (6, 9),
            ],
        )
        .unwrap();
        let lim = Limits::default();
        let tree = tight_cut_decomposition(&g, &lim).unwrap();
        assert_eq!(tree.brick_count(), 2);
        assert_eq!(brick_count(&g, &lim).unwrap(), 2);
        assert!(!is_near_brick(&g, &lim).unwrap());
        for leaf in tree.leaves() {
            if leaf.leaf_kind == Some(LeafKind::Brick) {
                assert!(leaf.graph.are_isomorphic(&named(NamedGraph::K4)).unwrap());
            }
        }
    }
}
