use brickyard::classify::{is_brick, is_brick_by_definition, is_irreducible};
use brickyard::format::{parse_edgelist, parse_sparse6, to_edgelist, to_sparse6};
use brickyard::matching::is_matching_covered;
use brickyard::tightcuts::{brick_count, tight_cut_decomposition};
use brickyard::{Limits, MultiGraph};
use proptest::prelude::*;

/// Order and sorted edge list; sparse6 fixes its own edge order.
fn shape(g: &MultiGraph) -> (usize, Vec<(usize, usize)>) {
    let mut edges: Vec<_> = g.edges().map(|(_, e)| e).collect();
    edges.sort_unstable();
    (g.vertex_count(), edges)
}

/// Loopless multigraphs on `lo..=hi` vertices with up to `per_vertex * n` edges.
fn multigraph(lo: usize, hi: usize, per_vertex: usize) -> impl Strategy<Value = MultiGraph> {
    (lo..=hi).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=per_vertex * n).prop_map(move |pairs| {
            MultiGraph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

/// A Hamiltonian cycle plus chords, so always 2-connected, with parallel
/// chords allowed and many vertices of degree two.
fn two_connected(lo: usize, hi: usize) -> impl Strategy<Value = MultiGraph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n).prop_map(move |chords| {
            let cycle = (0..n).map(|i| (i, (i + 1) % n));
            MultiGraph::from_edges(n, cycle.chain(chords.into_iter().filter(|(u, v)| u != v))).unwrap()
        })
    })
}

/// Whether some path `a - x - y - b` uses three distinct edges and has both
/// inner vertices of degree two, found by trying every triple of edges.
fn has_length_three_ear(g: &MultiGraph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, e)| e).collect();
    let deg = g.degrees();
    let other = |(u, v): (usize, usize), w: usize| if u == w { Some(v) } else if v == w { Some(u) } else { None };
    for (i, &mid) in edges.iter().enumerate() {
        let (x, y) = mid;
        if deg[x] != 2 || deg[y] != 2 {
            continue;
        }
        for (j, &left) in edges.iter().enumerate() {
            for (k, &right) in edges.iter().enumerate() {
                if i == j || i == k || j == k {
                    continue;
                }
                if other(left, x).is_some() && other(right, y).is_some() {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sparse6_round_trips_multigraphs(g in multigraph(1, 70, 3)) {
        prop_assert_eq!(shape(&parse_sparse6(to_sparse6(&g).as_bytes()).unwrap()), shape(&g));
    }

    #[test]
    fn edgelist_round_trips_multigraphs(g in multigraph(1, 40, 3)) {
        prop_assert_eq!(parse_edgelist(to_edgelist(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn brick_test_agrees_with_definition(g in multigraph(4, 10, 4)) {
        prop_assert_eq!(is_brick(&g), is_brick_by_definition(&g, &Limits::default()).unwrap());
    }

    #[test]
    fn irreducibility_agrees_with_ear_search(g in two_connected(4, 12)) {
        prop_assert_eq!(is_irreducible(&g), !has_length_three_ear(&g));
    }

    #[test]
    fn brick_count_matches_decomposition(g in multigraph(4, 10, 4)) {
        let limits = Limits::default();
        if is_matching_covered(&g) {
            let tree = tight_cut_decomposition(&g, &limits).unwrap();
            prop_assert_eq!(brick_count(&g, &limits).unwrap(), tree.brick_count());
            for leaf in tree.leaves() {
                prop_assert!(leaf.split.is_none());
            }
        }
    }
}
