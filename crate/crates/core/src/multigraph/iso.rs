use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

/// Largest order [`MultiGraph::are_isomorphic`] accepts.
pub const ISO_MAX_N: usize = 16;

struct Shape {
    n: usize,
    /// Edge multiplicities, row-major.
    mult: Vec<u32>,
    /// Per-vertex invariant: degree, number of distinct neighbours, sorted neighbour degrees.
    signature: Vec<(usize, usize, Vec<usize>)>,
}

impl Shape {
    fn of(g: &MultiGraph) -> Shape {
        let n = g.vertex_count();
        let mut mult = vec![0u32; n * n];
        for &(u, v) in g.edge_list() {
            mult[u * n + v] += 1;
            mult[v * n + u] += 1;
        }
        let deg = g.degrees();
        let signature = (0..n)
            .map(|v| {
                let mut nd: Vec<usize> = (0..n)
                    .filter(|&w| mult[v * n + w] > 0)
                    .flat_map(|w| std::iter::repeat_n(deg[w], mult[v * n + w] as usize))
                    .collect();
                nd.sort_unstable();
                let distinct = (0..n).filter(|&w| mult[v * n + w] > 0).count();
                (deg[v], distinct, nd)
            })
            .collect();
        Shape { n, mult, signature }
    }

    fn m(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }
}

impl MultiGraph {
    /// Exact isomorphism test that respects edge multiplicities.
    ///
    /// Backtracking over vertex images, pruned by a degree/neighbour-degree
    /// signature. Both graphs must have at most [`ISO_MAX_N`] vertices.
    pub fn are_isomorphic(&self, other: &MultiGraph) -> Result<bool> {
        for n in [self.n, other.n] {
            if n > ISO_MAX_N {
                return Err(Error::TooLarge { n, cap: ISO_MAX_N });
            }
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let (a, b) = (Shape::of(self), Shape::of(other));
        let mut sa = a.signature.clone();
        let mut sb = b.signature.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(false);
        }

        // Map vertices of `a` in an order where each vertex has many already-placed neighbours.
        let n = a.n;
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&w| a.m(v, w) > 0).count();
                    (links, a.signature[v].0, std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }

        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(extend(&a, &b, &order, 0, &mut image, &mut used))
    }
}

fn extend(
    a: &Shape,
    b: &Shape,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.n {
        if used[w] || a.signature[v] != b.signature[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| a.m(v, x) == b.m(w, image[x]));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(a, b, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}
