//! Loopless multigraphs with individually identified edges.
//!
//! Edges are addressed by [`EdgeId`], their position in the edge list, so two
//! parallel edges are distinct objects and deleting one copy is unambiguous.
//! Every transform that removes edges renumbers the survivors in their
//! original relative order and hands back the old-to-new mapping.

pub(crate) mod adjacency;
mod ears;
mod iso;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use adjacency::Adjacency;
pub use ears::SingleEar;
pub use iso::ISO_MAX_N;
pub use vertex_set::{Members, VertexSet};
pub(crate) use vertex_set::subsets_of_size;
#[cfg(test)]
pub(crate) use ears::tests::has_long_odd_ear_by_search;

/// Index of an edge in a [`MultiGraph`]'s edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A loopless multigraph on the vertices `0..n`.
///
/// Endpoints are stored with the smaller vertex first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Result of [`MultiGraph::contract_shore`].
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: MultiGraph,
    /// New index of every old vertex; shore vertices all map to `contracted_vertex`.
    pub vertex_map: Vec<usize>,
    /// New id of every old edge, `None` for edges inside the shore.
    pub edge_map: Vec<Option<EdgeId>>,
    /// The vertex the shore was shrunk to; always the last vertex.
    pub contracted_vertex: usize,
}

/// Result of [`MultiGraph::bisubdivide`].
#[derive(Clone, Debug)]
pub struct Bisubdivision {
    pub graph: MultiGraph,
    /// The path that replaced the edge, from its smaller to its larger end.
    pub ear: SingleEar,
    /// New id of every old edge; the subdivided edge maps to `None`.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl MultiGraph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(MultiGraph { n, edges: Vec::new() })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = MultiGraph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop { vertex: u });
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(EdgeId(self.edges.len() - 1))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeId, (usize, usize))> + '_ {
        self.edges.iter().enumerate().map(|(i, &uv)| (EdgeId(i), uv))
    }

    pub(crate) fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.edges.get(e.0).copied().ok_or(Error::InvalidEdge { edge: e, m: self.edges.len() })
    }

    pub fn vertex_set(&self) -> Result<VertexSet> {
        if self.n > VertexSet::CAPACITY {
            return Err(Error::TooLarge { n: self.n, cap: VertexSet::CAPACITY });
        }
        Ok(VertexSet::full(self.n))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.bound() > self.n {
            return Err(Error::VertexOutOfRange { vertex: s.bound() - 1, n: self.n });
        }
        Ok(())
    }

    /// Number of edge entries incident to `v`, counting multiplicity.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Δ(G).
    pub fn max_degree(&self) -> Result<usize> {
        self.degrees().into_iter().max().ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.degrees().into_iter().min().ok_or(Error::EmptyGraph)
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&uv| uv == key).count()
    }

    /// Whether edge `e` has a parallel twin.
    pub fn has_parallel(&self, e: EdgeId) -> Result<bool> {
        let (u, v) = self.endpoints(e)?;
        Ok(self.multiplicity(u, v) > 1)
    }

    pub fn is_simple(&self) -> bool {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    pub(crate) fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(EdgeId(i));
            inc[v].push(EdgeId(i));
        }
        inc
    }

    /// The end of `e` other than `v`.
    pub(crate) fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `G − e`. Edges after `e` move down by one.
    pub fn delete_edge(&self, e: EdgeId) -> Result<MultiGraph> {
        self.endpoints(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e.0);
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Where every edge of `G` lands in `G − e`.
    pub fn deletion_map(&self, e: EdgeId) -> Vec<Option<EdgeId>> {
        (0..self.edges.len())
            .map(|i| match i.cmp(&e.0) {
                std::cmp::Ordering::Less => Some(EdgeId(i)),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(EdgeId(i - 1)),
            })
            .collect()
    }

    /// `G[X]`, with the members of `X` relabelled `0..|X|` in increasing order.
    /// The second component lists the original vertex of every new vertex.
    pub fn induced(&self, x: VertexSet) -> Result<(MultiGraph, Vec<usize>)> {
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(x)?;
        let old: Vec<usize> = x.iter().collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| x.contains(u) && x.contains(v))
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        Ok((MultiGraph { n: old.len(), edges }, old))
    }

    /// Removes a set of vertices; survivors keep their relative order.
    pub(crate) fn delete_vertices(&self, doomed: &[bool]) -> (MultiGraph, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.n];
        let mut k = 0;
        for v in 0..self.n {
            if !doomed[v] {
                new_index[v] = k;
                k += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !doomed[u] && !doomed[v])
            .map(|&(u, v)| (new_index[u], new_index[v]))
            .collect();
        (MultiGraph { n: k, edges }, new_index)
    }

    /// `G/(X → x)`: shrinks the shore `X` to a single vertex.
    ///
    /// The vertices of `X̄` keep their relative order and the new vertex `x` comes last.
    /// Edges of `∂(X)` survive (parallel edges included), edges inside `X` disappear.
    pub fn contract_shore(&self, x: VertexSet) -> Result<Contraction> {
        let full = self.vertex_set()?;
        self.check_set(x)?;
        if x.is_empty() || x == full {
            return Err(Error::DegenerateShore);
        }
        let mut vertex_map = vec![0; self.n];
        let mut k = 0;
        for (v, slot) in vertex_map.iter_mut().enumerate() {
            if !x.contains(v) {
                *slot = k;
                k += 1;
            }
        }
        for v in x {
            vertex_map[v] = k;
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            if x.contains(u) && x.contains(v) {
                edge_map.push(None);
            } else {
                let (a, b) = (vertex_map[u], vertex_map[v]);
                edge_map.push(Some(EdgeId(edges.len())));
                edges.push((a.min(b), a.max(b)));
            }
        }
        Ok(Contraction {
            graph: MultiGraph { n: k + 1, edges },
            vertex_map,
            edge_map,
            contracted_vertex: k,
        })
    }

    /// One edge per adjacent pair, in order of first appearance.
    pub fn underlying_simple(&self) -> MultiGraph {
        let mut seen = std::collections::HashSet::new();
        let edges = self.edges.iter().copied().filter(|uv| seen.insert(*uv)).collect();
        MultiGraph { n: self.n, edges }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0).iter().all(|&r| r)
    }

    fn reachable_from(&self, s: usize) -> Vec<bool> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &inc[v] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertex connectivity at least `k`, judged on the underlying simple graph:
    /// at least `k + 1` vertices and no separating set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        match Adjacency::of(self) {
            Ok(adj) => adj.is_k_connected(k),
            Err(_) => self.is_k_connected_slow(k),
        }
    }

    fn is_k_connected_slow(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        let mut doomed = vec![false; self.n];
        fn rec(g: &MultiGraph, doomed: &mut Vec<bool>, from: usize, left: usize) -> bool {
            let (h, _) = g.delete_vertices(doomed);
            if !h.is_connected() {
                return false;
            }
            if left == 0 {
                return true;
            }
            for v in from..g.n {
                doomed[v] = true;
                let ok = rec(g, doomed, v + 1, left - 1);
                doomed[v] = false;
                if !ok {
                    return false;
                }
            }
            true
        }
        k == 0 || rec(self, &mut doomed, 0, k - 1)
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let inc = self.incidence();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &e in &inc[v] {
                    let w = self.other_end(e, v);
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Replaces edge `e = uv` by a path of odd `length ≥ 3`.
    ///
    /// The `length − 1` new vertices are appended after the existing ones, `e`
    /// is deleted as by [`delete_edge`](Self::delete_edge), and the path edges
    /// are appended at the end of the edge list, running from `u` to `v`.
    pub fn bisubdivide(&self, e: EdgeId, length: usize) -> Result<Bisubdivision> {
        let (u, v) = self.endpoints(e)?;
        if length < 3 || length.is_multiple_of(2) {
            return Err(Error::BadPathLength(length));
        }
        let mut graph = self.delete_edge(e)?;
        let edge_map = self.deletion_map(e);
        let mut vertices = vec![u];
        vertices.extend(self.n..self.n + length - 1);
        vertices.push(v);
        graph.n += length - 1;
        let mut ear_edges = Vec::with_capacity(length);
        for w in vertices.windows(2) {
            ear_edges.push(graph.add_edge(w[0], w[1])?);
        }
        Ok(Bisubdivision { graph, ear: SingleEar::new(vertices, ear_edges), edge_map })
    }

    pub fn complement(&self) -> MultiGraph {
        let simple = self.underlying_simple();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if simple.multiplicity(u, v) == 0 {
                    edges.push((u, v));
                }
            }
        }
        MultiGraph { n: self.n, edges }
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, [", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
