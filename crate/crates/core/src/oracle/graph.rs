use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::ring::ConcreteRing;
use super::Limits;

/// A simple undirected graph with dense bit-matrix adjacency and sorted
/// neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    neighbors: Vec<Vec<u32>>,
}

/// Graph transformations supported by [`transform`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Complement,
    Line,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            neighbors: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are
    /// rejected.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::Internal(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) outside 0..{n}"
                )));
            }
            g.set(u, v);
            g.set(v, u);
        }
        g.rebuild_neighbors();
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn rebuild_neighbors(&mut self) {
        for u in 0..self.n {
            self.neighbors[u] = (0..self.n)
                .filter(|&v| self.has_edge(u, v))
                .map(|v| v as u32)
                .collect();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `n m` on the first line, then one `u v` line per edge (0-indexed).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Connected components, by breadth-first search.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &v in &self.neighbors[u] {
                    if !std::mem::replace(&mut seen[v as usize], true) {
                        queue.push(v as usize);
                    }
                }
            }
        }
        count
    }
}

/// `Cay(R, R^×)`: `a ~ b` iff `a - b` is a unit.
pub fn cayley_graph(ring: &ConcreteRing) -> Graph {
    let n = ring.order() as usize;
    let unit: Vec<bool> = (0..ring.order()).map(|x| ring.is_unit(x)).collect();
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if unit[ring.sub(a as u64, b as u64) as usize] {
                g.set(a, b);
                g.set(b, a);
            }
        }
    }
    g.rebuild_neighbors();
    g
}

/// `G ⊗ H`: `(u, v) ~ (x, y)` iff `u ~ x` and `v ~ y`. Vertex `(u, v)` has
/// index `u + v·|G|`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() * h.n();
    let mut out = Graph::empty(n);
    for (u, x) in g.edges() {
        for (v, y) in h.edges() {
            for (a, b) in [
                (u + v * g.n(), x + y * g.n()),
                (u + y * g.n(), x + v * g.n()),
            ] {
                out.set(a, b);
                out.set(b, a);
            }
        }
    }
    out.rebuild_neighbors();
    out
}

pub fn transform(g: &Graph, kind: Transform) -> Result<Graph> {
    transform_with(g, kind, &Limits::default())
}

/// Complement or line graph. Line-graph vertices are the edges of `g` in
/// [`Graph::edges`] order.
pub fn transform_with(g: &Graph, kind: Transform, limits: &Limits) -> Result<Graph> {
    match kind {
        Transform::Complement => {
            let mut out = Graph::empty(g.n());
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u != v && !g.has_edge(u, v) {
                        out.set(u, v);
                    }
                }
            }
            out.rebuild_neighbors();
            Ok(out)
        }
        Transform::Line => {
            let line_edges: u64 = g
                .degrees()
                .iter()
                .map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2)
                .sum();
            if line_edges > limits.max_line_edges {
                return Err(Error::TooLarge(format!(
                    "line graph would have {line_edges} edges, limit is {}",
                    limits.max_line_edges
                )));
            }
            let edges: Vec<_> = g.edges().collect();
            let mut incident = vec![Vec::new(); g.n()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                incident[u].push(i);
                incident[v].push(i);
            }
            let mut out = Graph::empty(edges.len());
            for list in &incident {
                for (k, &a) in list.iter().enumerate() {
                    for &b in &list[k + 1..] {
                        out.set(a, b);
                        out.set(b, a);
                    }
                }
            }
            out.rebuild_neighbors();
            Ok(out)
        }
    }
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("no loops")
}

/// The cycle `C_n`, `n ≥ 3`.
pub fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("no loops")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::realize_ring;
    use crate::ring::{canonicalize, enumerate_specs, from_modulus, parse_ring_expr};

    fn cayley(text: &str) -> Graph {
        cayley_graph(&realize_ring(&parse_ring_expr(text).unwrap()).unwrap())
    }

    #[test]
    fn cayley_examples() {
        assert_eq!(cayley("GF(5)"), complete_graph(5));
        let z4 = cayley("Z/4");
        let expected = Graph::from_edges(4, [(0, 1), (0, 3), (2, 1), (2, 3)]).unwrap();
        assert_eq!(z4, expected);
        // Z/6 is stored as Z/2 × Z/3, so compare up to relabeling
        let z6 = cayley("Z/6");
        assert_eq!(
            (z6.regular_degree(), z6.component_count(), z6.edge_count()),
            (Some(2), 1, 6)
        );
    }

    #[test]
    fn cayley_graphs_are_regular_of_unit_degree() {
        for spec in enumerate_specs(64, true) {
            let g = cayley_graph(&realize_ring(&spec).unwrap());
            let r = usize::try_from(spec.unit_count()).unwrap();
            assert_eq!(g.regular_degree(), Some(r), "{spec}");
        }
    }

    #[test]
    fn local_cayley_graphs_are_complete_multipartite() {
        for spec in enumerate_specs(128, true)
            .into_iter()
            .filter(|s| s.is_local())
        {
            let ring = realize_ring(&spec).unwrap();
            let g = cayley_graph(&ring);
            // parts are the cosets of the maximal ideal: a ~ b iff a - b is a unit
            let m = spec.factors()[0].ideal_order() as usize;
            for a in 0..g.n() {
                let same_part = (0..g.n())
                    .filter(|&b| !ring.is_unit(ring.sub(a as u64, b as u64)))
                    .count();
                assert_eq!(same_part, m, "{spec}");
                for b in 0..g.n() {
                    let in_part = !ring.is_unit(ring.sub(a as u64, b as u64));
                    assert_eq!(g.has_edge(a, b), !in_part, "{spec}");
                }
            }
            assert_eq!(g.edge_count(), g.n() * (g.n() - m) / 2);
        }
    }

    #[test]
    fn products_are_tensor_products_of_factors() {
        for spec in enumerate_specs(64, true).into_iter().filter(|s| s.s() >= 2) {
            let whole = cayley_graph(&realize_ring(&spec).unwrap());
            let tensor = spec
                .factors()
                .iter()
                .map(|f| cayley_graph(&realize_ring(&canonicalize(vec![*f]).unwrap()).unwrap()))
                .reduce(|acc, g| tensor_product(&acc, &g))
                .unwrap();
            assert_eq!(whole, tensor, "{spec}");
        }
    }

    #[test]
    fn component_count_matches_top_multiplicity() {
        // G_R is connected iff at most one residue-2 factor; otherwise 2^{k-1} components
        for spec in enumerate_specs(64, true) {
            let g = cayley_graph(&realize_ring(&spec).unwrap());
            let k = spec.residue_two_count();
            let expected = if k >= 1 { 1 << (k - 1) } else { 1 };
            assert_eq!(g.component_count(), expected, "{spec}");
        }
    }

    #[test]
    fn transform_examples() {
        let k5c = transform(&complete_graph(5), Transform::Complement).unwrap();
        assert_eq!(k5c.edge_count(), 0);
        assert_eq!(k5c.n(), 5);

        let l6 = transform(&cycle_graph(6), Transform::Line).unwrap();
        assert_eq!((l6.n(), l6.regular_degree()), (6, Some(2)));
        assert_eq!(l6.component_count(), 1);

        let oct = transform(&complete_graph(4), Transform::Line).unwrap();
        assert_eq!(
            (oct.n(), oct.edge_count(), oct.regular_degree()),
            (6, 12, Some(4))
        );

        let nothing = transform(&Graph::empty(3), Transform::Line).unwrap();
        assert_eq!(nothing.n(), 0);
    }

    #[test]
    fn line_guard() {
        let tiny = Limits {
            max_line_edges: 11,
            ..Limits::default()
        };
        assert!(matches!(
            transform_with(&complete_graph(4), Transform::Line, &tiny),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn edge_list_export() {
        let g = cayley_graph(&realize_ring(&from_modulus(4).unwrap()).unwrap());
        assert_eq!(g.to_edge_list(), "4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn loops_are_rejected() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
    }
}
