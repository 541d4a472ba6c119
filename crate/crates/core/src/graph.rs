//! Simple undirected labeled graphs and the power graph of a gyrogroup.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gyro::GyroGroup;

pub type Vertex = usize;

/// Fixed-width bit row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow(Vec<u64>);

impl BitRow {
    pub fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection_count(&self, other: &BitRow) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }
}

/// Simple undirected graph on vertices `0..order`.
///
/// Adjacency is held twice: as bit rows for constant-time queries and as
/// sorted neighbor lists for traversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<BitRow>,
    neighbors: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self {
            labels: (0..order).map(|i| i.to_string()).collect(),
            rows: vec![BitRow::new(order); order],
            neighbors: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut rows = vec![BitRow::new(order); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(
            rows,
            (0..order).map(|i| i.to_string()).collect(),
        ))
    }

    fn from_rows(rows: Vec<BitRow>, labels: Vec<String>) -> Self {
        let neighbors: Vec<Vec<Vertex>> = rows.iter().map(|r| r.iter().collect()).collect();
        let degree_sum: usize = neighbors.iter().map(Vec::len).sum();
        for (u, list) in neighbors.iter().enumerate() {
            assert_eq!(list.len(), rows[u].count());
            assert!(list.iter().all(|&v| rows[v].contains(u) && v != u));
        }
        Self {
            labels,
            rows,
            neighbors,
            edge_count: degree_sum / 2,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::SizeMismatch {
                left: self.order(),
                right: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|u| (u - 1, u))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.neighbors[u]
    }

    pub fn row(&self, u: Vertex) -> &BitRow {
        &self.rows[u]
    }

    #[inline]
    pub fn degree(&self, u: Vertex) -> usize {
        self.neighbors[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.neighbors[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// `G[S]`; vertices of the result follow the order of `subset`.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<Graph> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        let distinct: BTreeSet<_> = subset.iter().collect();
        if distinct.len() != subset.len() {
            return Err(Error::Parse("induced_subgraph: repeated vertex".into()));
        }
        let k = subset.len();
        let mut rows = vec![BitRow::new(k); k];
        for i in 0..k {
            for j in 0..k {
                if i != j && self.has_edge(subset[i], subset[j]) {
                    rows[i].insert(j);
                }
            }
        }
        let labels = subset.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Self::from_rows(rows, labels))
    }

    /// The graph with `v` removed; remaining vertices keep their relative order.
    pub fn without_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut rows = self.rows.clone();
        rows[u].insert(v);
        rows[v].insert(u);
        Ok(Self::from_rows(rows, self.labels.clone()))
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut rows = self.rows.clone();
        rows[u].remove(v);
        rows[v].remove(u);
        Ok(Self::from_rows(rows, self.labels.clone()))
    }

    /// Relabels vertices so that old vertex `v` becomes `map[v]`.
    pub fn permuted(&self, map: &[Vertex]) -> Result<Graph> {
        if map.len() != self.order() {
            return Err(Error::SizeMismatch {
                left: self.order(),
                right: map.len(),
            });
        }
        let g = Graph::from_edges(self.order(), self.edges().map(|(u, v)| (map[u], map[v])))?;
        let mut labels = vec![String::new(); self.order()];
        for (v, &image) in map.iter().enumerate() {
            labels[image] = self.labels[v].clone();
        }
        g.with_labels(labels)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", escape(name));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(label));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            n: self.order(),
            labels: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph JSON serialization")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let file: GraphJson = serde_json::from_str(text)?;
        Graph::try_from(file)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `{"n": N, "labels": [...], "edges": [[u, v], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(file: GraphJson) -> Result<Graph> {
        let g = Graph::from_edges(file.n, file.edges.iter().map(|e| (e[0], e[1])))?;
        if file.labels.is_empty() {
            Ok(g)
        } else {
            g.with_labels(file.labels)
        }
    }
}

/// Power graph: distinct `u`, `v` are adjacent iff one is a positive power
/// of the other.
pub fn power_graph(g: &GyroGroup) -> Graph {
    let n = g.order();
    let mut rows = vec![BitRow::new(n); n];
    for u in 0..n {
        for v in g.power_closure(u) {
            if v != u {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    Graph::from_rows(rows, g.labels().to_vec())
}

/// Result of [`classify_gn_shape`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub clique_part: Vec<Vertex>,
    pub pendant_part: Vec<Vertex>,
    pub hub: Option<Vertex>,
    pub matches_gn_shape: bool,
}

/// Tests for a complete graph on half the vertices with every other vertex
/// pendant on one clique vertex.
pub fn classify_gn_shape(g: &Graph) -> StructureSummary {
    let n = g.order();
    let no_match = |clique: Vec<Vertex>, pendants: Vec<Vertex>, hub| StructureSummary {
        clique_part: clique,
        pendant_part: pendants,
        hub,
        matches_gn_shape: false,
    };
    let (pendants, rest): (Vec<Vertex>, Vec<Vertex>) = (0..n).partition(|&v| g.degree(v) == 1);
    if n < 2 || !n.is_multiple_of(2) || pendants.len() != n / 2 {
        return no_match(rest, pendants, None);
    }
    let hub = g.neighbors(pendants[0])[0];
    let hub_ok = pendants.iter().all(|&p| g.neighbors(p) == [hub]);
    let clique_ok = rest.contains(&hub)
        && rest
            .iter()
            .all(|&u| rest.iter().all(|&v| u == v || g.has_edge(u, v)));
    // Non-hub clique vertices must have no edges outside the clique.
    let closed = rest
        .iter()
        .filter(|&&u| u != hub)
        .all(|&u| g.degree(u) == rest.len() - 1);
    StructureSummary {
        clique_part: rest,
        pendant_part: pendants,
        hub: Some(hub),
        matches_gn_shape: hub_ok && clique_ok && closed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_power_adjacent(g: &GyroGroup, u: usize, v: usize) -> bool {
        let n = g.order() as u64;
        (1..=n).any(|m| g.power(u, m).unwrap() == v || g.power(v, m).unwrap() == u)
    }

    #[test]
    fn gn3_power_graph() {
        let g = power_graph(&GyroGroup::gn(3).unwrap());
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 10);
        let expected: Vec<(usize, usize)> = vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 7),
            (1, 2),
            (1, 3),
            (2, 3),
        ];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn power_graph_matches_pairwise_scan() {
        for gy in [GyroGroup::gn(3).unwrap(), GyroGroup::gn(4).unwrap()] {
            let g = power_graph(&gy);
            for u in 0..gy.order() {
                for v in 0..gy.order() {
                    if u != v {
                        assert_eq!(g.has_edge(u, v), brute_power_adjacent(&gy, u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_prime_power_is_complete() {
        for n in [2usize, 4, 8, 9, 16] {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| ((i + j) % n) as i64).collect())
                .collect();
            let g = power_graph(&GyroGroup::from_rows(&rows, None).unwrap());
            assert_eq!(g.edge_count(), n * (n - 1) / 2, "Z_{n}");
        }
        // Z_6 is cyclic but not of prime-power order.
        let rows: Vec<Vec<i64>> = (0..6)
            .map(|i| (0..6).map(|j| ((i + j) % 6) as i64).collect())
            .collect();
        assert!(power_graph(&GyroGroup::from_rows(&rows, None).unwrap()).edge_count() < 15);
    }

    #[test]
    fn trivial_power_graph() {
        let g = power_graph(&GyroGroup::from_rows(&[vec![0]], None).unwrap());
        assert_eq!((g.order(), g.edge_count()), (1, 0));
    }

    #[test]
    fn gn_shape() {
        for n in 3..=5u32 {
            let s = classify_gn_shape(&power_graph(&GyroGroup::gn(n).unwrap()));
            let m = 1usize << (n - 1);
            assert!(s.matches_gn_shape);
            assert_eq!(s.hub, Some(0));
            assert_eq!(s.clique_part, (0..m).collect::<Vec<_>>());
            assert_eq!(s.pendant_part, (m..2 * m).collect::<Vec<_>>());
        }
        assert!(!classify_gn_shape(&Graph::complete(8)).matches_gn_shape);
        assert!(!classify_gn_shape(&Graph::empty(1)).matches_gn_shape);
    }

    #[test]
    fn induced_subgraphs() {
        let g = power_graph(&GyroGroup::gn(3).unwrap());
        assert_eq!(
            g.induced_subgraph(&[0, 1, 2, 3]).unwrap(),
            Graph::complete(4)
        );
        let k1 = g.induced_subgraph(&[5]).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let star = g.induced_subgraph(&[0, 4, 5, 6, 7]).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);
        assert!(star.is_connected());
        assert!(g.induced_subgraph(&[0, 8]).is_err());
    }

    #[test]
    fn exports() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.to_dot("K1"), "graph \"K1\" {\n  0 [label=\"0\"];\n}\n");
        assert_eq!(k1.to_json(), r#"{"n":1,"labels":["0"],"edges":[]}"#);
        let g = power_graph(&GyroGroup::gn(3).unwrap());
        let dot = g.to_dot("P(G(3))");
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 10);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn bitrow_iter() {
        let mut r = BitRow::new(130);
        for i in [0, 63, 64, 129] {
            r.insert(i);
        }
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        r.remove(64);
        assert_eq!(r.count(), 3);
    }
}
