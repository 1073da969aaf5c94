//! Edmonds' augmenting-path algorithm with blossom shrinking (maximum cardinality).

const NONE: usize = usize::MAX;

/// Maximum matching of the graph given by adjacency lists; returns the mate of every vertex.
pub(crate) fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut state = State {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    // greedy start
    for (v, nbrs) in adj.iter().enumerate() {
        if state.mate[v] == NONE {
            if let Some(&w) = nbrs.iter().find(|&&w| state.mate[w] == NONE && w != v) {
                state.mate[v] = w;
                state.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if state.mate[root] != NONE {
            continue;
        }
        let mut v = state.find_augmenting_path(root);
        while v != NONE {
            let pv = state.parent[v];
            let ppv = state.mate[pv];
            state.mate[v] = pv;
            state.mate[pv] = v;
            v = ppv;
        }
    }
    state.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

pub(crate) fn maximum_matching_size(adj: &[Vec<usize>]) -> usize {
    maximum_matching(adj).iter().filter(|m| m.is_some()).count() / 2
}

struct State<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl State<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    #[test]
    fn needs_a_blossom() {
        // odd cycle 0..4 with a pendant path from 0; greedy start leaves room for a blossom
        let adj = lists(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)]);
        let mate = maximum_matching(&adj);
        assert_eq!(mate.iter().filter(|m| m.is_some()).count(), 6);
        for (v, m) in mate.iter().enumerate() {
            if let Some(w) = m {
                assert_eq!(mate[*w], Some(v));
                assert!(adj[v].contains(w));
            }
        }
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert_eq!(maximum_matching_size(&lists(10, &edges)), 5);
    }

    #[test]
    fn star_matches_once() {
        assert_eq!(maximum_matching_size(&lists(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])), 1);
    }
}
