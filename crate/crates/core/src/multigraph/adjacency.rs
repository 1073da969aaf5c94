use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, VertexSet};

/// Bitmask adjacency of the underlying simple graph, for graphs on at most 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Adjacency {
    rows: Vec<u64>,
}

impl Adjacency {
    pub(crate) fn of(g: &MultiGraph) -> Result<Self> {
        let n = g.vertex_count();
        if n > VertexSet::CAPACITY {
            return Err(Error::TooLarge { n, cap: VertexSet::CAPACITY });
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in g.edge_list() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Adjacency { rows })
    }

    pub(crate) fn n(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn full(&self) -> u64 {
        VertexSet::full(self.n()).bits()
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Pairs `(u, v)` with `u < v` that are adjacent.
    pub(crate) fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(u, &row)| {
            VertexSet::from_bits(row >> u >> 1 << 1 << u).iter().map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `start` inside `within`.
    #[inline]
    pub(crate) fn component(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `within` is connected (the empty set counts as connected).
    #[inline]
    pub(crate) fn is_connected_within(&self, within: u64) -> bool {
        if within == 0 {
            return true;
        }
        self.component(within.trailing_zeros() as usize, within) == within
    }

    /// Two-colours the subgraph induced by `within`; returns one colour class or `None`.
    pub(crate) fn bipartition_within(&self, within: u64) -> Option<u64> {
        let mut left = 0u64;
        let mut right = 0u64;
        let mut todo = within;
        while todo != 0 {
            let s = todo.trailing_zeros() as usize;
            let mut frontier = 1u64 << s;
            let mut on_left = true;
            left |= frontier;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                next &= within;
                let (same, other) = if on_left { (left, right) } else { (right, left) };
                if next & same != 0 {
                    return None;
                }
                let fresh = next & !other;
                if on_left {
                    right |= fresh;
                } else {
                    left |= fresh;
                }
                frontier = fresh;
                on_left = !on_left;
            }
            todo &= !(left | right);
        }
        Some(left)
    }

    pub(crate) fn is_bipartite_within(&self, within: u64) -> bool {
        self.bipartition_within(within).is_some()
    }

    /// Vertex connectivity at least `k` (at least `k + 1` vertices and no separating set of
    /// fewer than `k` vertices).
    pub(crate) fn is_k_connected(&self, k: usize) -> bool {
        let n = self.n();
        if n <= k {
            return false;
        }
        let full = self.full();
        match k {
            0 => true,
            1 => self.is_connected_within(full),
            2 => (0..n).all(|x| self.is_connected_within(full & !(1 << x))),
            3 => (0..n).all(|x| {
                (x + 1..n).all(|y| self.is_connected_within(full & !(1 << x) & !(1 << y)))
            }) && self.is_k_connected(2),
            _ => (0..k)
                .flat_map(|size| crate::multigraph::vertex_set::subsets_of_size(n, size))
                .all(|s| self.is_connected_within(full & !s.bits())),
        }
    }
}
