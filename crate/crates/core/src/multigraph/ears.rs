use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph};

/// A path whose internal vertices all have degree two in the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleEar {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl SingleEar {
    pub(crate) fn new(vertices: Vec<usize>, edges: Vec<EdgeId>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        SingleEar { vertices, edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Whether some subpath is a single ear of odd length at least three.
    ///
    /// Any three consecutive edges of the path form one, so this is just `length ≥ 3`.
    pub fn contains_long_odd_ear(&self) -> bool {
        self.length() >= 3
    }
}

impl MultiGraph {
    /// The maximal paths of `G` whose internal vertices have degree two.
    ///
    /// Each edge lies on exactly one reported path, except that a closed run of
    /// degree-two vertices (a cycle hanging off one vertex, or a whole cycle
    /// component) is reported as the path obtained by dropping its last edge.
    pub fn find_single_ears(&self) -> Vec<SingleEar> {
        let deg = self.degrees();
        let inc = self.incidence();
        let mut used = vec![false; self.edge_count()];
        let mut ears = Vec::new();

        // the edge at degree-two vertex `v` other than `via`
        let other_edge = |v: usize, via: EdgeId| -> EdgeId {
            *inc[v].iter().find(|&&f| f != via).expect("degree-two vertex has two edge entries")
        };

        for start in 0..self.edge_count() {
            if used[start] {
                continue;
            }
            let e = EdgeId(start);
            used[start] = true;
            let (a, b) = self.edges[start];

            // walk forward from b
            let mut fwd_vertices = vec![b];
            let mut fwd_edges = Vec::new();
            let (mut cur, mut via) = (b, e);
            let mut closed = false;
            while deg[cur] == 2 {
                if cur == a {
                    closed = true;
                    break;
                }
                let f = other_edge(cur, via);
                used[f.0] = true;
                cur = self.other_end(f, cur);
                via = f;
                fwd_edges.push(f);
                fwd_vertices.push(cur);
                if cur == a {
                    closed = true;
                    break;
                }
            }

            let mut back_vertices = Vec::new();
            let mut back_edges = Vec::new();
            if !closed {
                let (mut cur, mut via) = (a, e);
                while deg[cur] == 2 {
                    let f = other_edge(cur, via);
                    used[f.0] = true;
                    cur = self.other_end(f, cur);
                    via = f;
                    back_edges.push(f);
                    back_vertices.push(cur);
                    if cur == *fwd_vertices.last().unwrap() {
                        break;
                    }
                }
            }

            back_vertices.reverse();
            back_edges.reverse();
            let mut vertices = back_vertices;
            vertices.push(a);
            vertices.extend(fwd_vertices);
            let mut edges = back_edges;
            edges.push(e);
            edges.extend(fwd_edges);

            if vertices.first() == vertices.last() {
                vertices.pop();
                edges.pop();
            }
            ears.push(SingleEar::new(vertices, edges));
        }
        ears
    }

    /// Replaces a single ear of odd length at least three by one edge joining its ends.
    ///
    /// Interior vertices are removed (survivors keep their relative order) and the
    /// new edge is appended last.
    pub fn retract_ear(&self, ear: &SingleEar) -> Result<MultiGraph> {
        let len = ear.length();
        if len < 3 || len.is_multiple_of(2) {
            return Err(Error::NotSingleEar(format!("length {len} is not odd and at least 3")));
        }
        if ear.vertices.len() != len + 1 {
            return Err(Error::NotSingleEar("vertex and edge counts disagree".into()));
        }
        let mut seen = vec![false; self.n];
        for &v in &ear.vertices {
            self.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotSingleEar(format!("vertex {v} repeats")));
            }
        }
        for (i, &f) in ear.edges.iter().enumerate() {
            let (u, v) = self.endpoints(f)?;
            let (x, y) = (ear.vertices[i], ear.vertices[i + 1]);
            if (u, v) != (x.min(y), x.max(y)) {
                return Err(Error::NotSingleEar(format!("edge {f} does not join {x} and {y}")));
            }
        }
        let deg = self.degrees();
        if let Some(&v) = ear.interior().iter().find(|&&v| deg[v] != 2) {
            return Err(Error::NotSingleEar(format!("interior vertex {v} has degree {}", deg[v])));
        }
        let mut doomed = vec![false; self.n];
        for &v in ear.interior() {
            doomed[v] = true;
        }
        let (mut g, new_index) = self.delete_vertices(&doomed);
        let (s, t) = ear.ends();
        g.add_edge(new_index[s], new_index[t])?;
        Ok(g)
    }
}
