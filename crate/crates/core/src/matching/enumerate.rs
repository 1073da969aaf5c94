use crate::error::{Error, Result};
use crate::matching::PerfectMatching;
use crate::multigraph::{EdgeId, MultiGraph, VertexSet};
use crate::Limits;

fn check(g: &MultiGraph, limits: &Limits) -> Result<()> {
    let n = g.vertex_count();
    let cap = limits.max_pm_enum.min(VertexSet::CAPACITY);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

fn walk(
    g: &MultiGraph,
    inc: &[Vec<EdgeId>],
    uncovered: u64,
    chosen: &mut Vec<EdgeId>,
    emit: &mut dyn FnMut(&[EdgeId]),
) {
    if uncovered == 0 {
        emit(chosen);
        return;
    }
    let v = uncovered.trailing_zeros() as usize;
    for &e in &inc[v] {
        let w = g.other_end(e, v);
        if uncovered >> w & 1 == 1 {
            chosen.push(e);
            walk(g, inc, uncovered & !(1 << v) & !(1 << w), chosen, emit);
            chosen.pop();
        }
    }
}

/// Every perfect matching of `g` as a set of edge ids, in lexicographic order.
///
/// Parallel edges give distinct matchings. The order of `g` is capped by
/// `limits.max_pm_enum`; exceeding it is an error.
pub fn enumerate_perfect_matchings(g: &MultiGraph, limits: &Limits) -> Result<Vec<PerfectMatching>> {
    check(g, limits)?;
    let inc = g.incidence();
    let mut out = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        walk(g, &inc, VertexSet::full(g.vertex_count()).bits(), &mut Vec::new(), &mut |m| {
            let mut edges = m.to_vec();
            edges.sort_unstable();
            out.push(PerfectMatching::from_sorted(edges));
        });
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of perfect matchings, parallel edges counted separately; same cap as enumeration.
pub fn count_perfect_matchings(g: &MultiGraph, limits: &Limits) -> Result<u64> {
    check(g, limits)?;
    let inc = g.incidence();
    let mut count = 0u64;
    if g.vertex_count().is_multiple_of(2) {
        walk(g, &inc, VertexSet::full(g.vertex_count()).bits(), &mut Vec::new(), &mut |_| count += 1);
    }
    Ok(count)
}

/// Perfect matchings as bitmasks over edge ids (bit `i` is edge `i`); needs at most 64 edges.
pub fn perfect_matching_masks(g: &MultiGraph, limits: &Limits) -> Result<Vec<u64>> {
    check(g, limits)?;
    if g.edge_count() > 64 {
        return Err(Error::TooLarge { n: g.edge_count(), cap: 64 });
    }
    let inc = g.incidence();
    let mut out = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        walk(g, &inc, VertexSet::full(g.vertex_count()).bits(), &mut Vec::new(), &mut |m| {
            out.push(m.iter().fold(0u64, |acc, e| acc | 1 << e.0));
        });
    }
    Ok(out)
}
