//! Shortest and detour (longest simple path) distances, eccentricities and
//! distance degree sequences.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitRow, Graph, Vertex};

/// Default largest order accepted by [`detour_matrix`].
pub const DEFAULT_DETOUR_BOUND: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceKind {
    Shortest,
    Detour,
}

/// Pairwise distances; `None` stands for an infinite distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    pub kind: DistanceKind,
    pub n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Entry `(u, v)`, failing on infinite distances.
    pub fn finite(&self, u: Vertex, v: Vertex) -> Result<u32> {
        self.get(u, v).ok_or(Error::Disconnected)
    }

    pub fn rows(&self) -> Vec<Vec<Option<u32>>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }
}

/// BFS distances from `source`.
pub fn bfs(g: &Graph, source: Vertex) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let entries = (0..n).flat_map(|s| bfs(g, s)).collect();
    DistanceMatrix {
        kind: DistanceKind::Shortest,
        n,
        entries,
    }
}

/// Exact longest-simple-path lengths for all pairs, refusing graphs with
/// more than [`DEFAULT_DETOUR_BOUND`] vertices.
pub fn detour_matrix(g: &Graph) -> Result<DistanceMatrix> {
    detour_matrix_bounded(g, DEFAULT_DETOUR_BOUND)
}

pub fn detour_matrix_bounded(g: &Graph, bound: usize) -> Result<DistanceMatrix> {
    let n = g.order();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "detour distance (exponential search)",
            order: n,
            bound,
        });
    }
    let shortest = distance_matrix(g);
    let mut entries = vec![None; n * n];
    for s in 0..n {
        // Rows already finished give exact values by symmetry; BFS distances
        // are valid lower bounds for the rest.
        let best: Vec<Option<u32>> = (0..n)
            .map(|t| {
                if t < s {
                    entries[t * n + s]
                } else {
                    shortest.get(s, t)
                }
            })
            .collect();
        let mut search = DetourSearch {
            g,
            best,
            visited: BitRow::new(n),
            mark: vec![0; n],
            stamp: 0,
            scratch: Vec::with_capacity(n),
            leaf: Vec::with_capacity(n),
        };
        search.visited.insert(s);
        search.extend(s, 0);
        entries[s * n..(s + 1) * n].copy_from_slice(&search.best);
    }
    Ok(DistanceMatrix {
        kind: DistanceKind::Detour,
        n,
        entries,
    })
}

struct DetourSearch<'a> {
    g: &'a Graph,
    best: Vec<Option<u32>>,
    visited: BitRow,
    mark: Vec<u32>,
    stamp: u32,
    scratch: Vec<Vertex>,
    leaf: Vec<bool>,
}

impl DetourSearch<'_> {
    fn extend(&mut self, end: Vertex, len: u32) {
        if self.best[end].is_none_or(|b| b < len) {
            self.best[end] = Some(len);
        }
        let Some(inner) = self.extension_bound(end) else {
            return;
        };
        // A leaf of the reachable set can only be the last vertex of an extension.
        let improvable = self.scratch.iter().zip(&self.leaf).any(|(&t, &leaf)| {
            let ceiling = len + inner + u32::from(leaf);
            self.best[t].is_none_or(|b| b < ceiling)
        });
        if !improvable {
            return;
        }
        let g = self.g;
        for &w in g.neighbors(end) {
            if !self.visited.contains(w) {
                self.visited.insert(w);
                self.extend(w, len + 1);
                self.visited.remove(w);
            }
        }
    }

    /// Number of vertices reachable from `end` through unvisited vertices
    /// that have two neighbors among them (or `end`).
    ///
    /// Collects the reachable vertices into `scratch` and flags the others
    /// in `leaf`. Interior vertices of any extension are of the first kind,
    /// so a path to `t` gains at most this many edges, plus one when `t` is
    /// itself a leaf.
    fn extension_bound(&mut self, end: Vertex) -> Option<u32> {
        self.stamp += 1;
        let stamp = self.stamp;
        self.scratch.clear();
        self.mark[end] = stamp;
        let mut head = 0;
        let g = self.g;
        for &w in g.neighbors(end) {
            if !self.visited.contains(w) && self.mark[w] != stamp {
                self.mark[w] = stamp;
                self.scratch.push(w);
            }
        }
        while head < self.scratch.len() {
            let u = self.scratch[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !self.visited.contains(w) && self.mark[w] != stamp {
                    self.mark[w] = stamp;
                    self.scratch.push(w);
                }
            }
        }
        if self.scratch.is_empty() {
            return None;
        }
        let mut inner = 0u32;
        self.leaf.clear();
        for &u in &self.scratch {
            let deg = g
                .neighbors(u)
                .iter()
                .filter(|&&w| self.mark[w] == stamp)
                .count();
            self.leaf.push(deg < 2);
            if deg >= 2 {
                inner += 1;
            }
        }
        Some(inner)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccentricityProfile {
    pub kind: DistanceKind,
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
}

impl EccentricityProfile {
    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<Vertex> {
        (0..self.eccentricity.len())
            .filter(|&v| self.eccentricity[v] == self.radius)
            .collect()
    }
}

pub fn eccentricity_profile(dm: &DistanceMatrix) -> Result<EccentricityProfile> {
    if !dm.is_finite() {
        return Err(Error::Disconnected);
    }
    let eccentricity: Vec<u32> = (0..dm.n)
        .map(|u| dm.row(u).iter().map(|d| d.unwrap()).max().unwrap_or(0))
        .collect();
    Ok(EccentricityProfile {
        kind: dm.kind,
        radius: eccentricity.iter().copied().min().unwrap_or(0),
        diameter: eccentricity.iter().copied().max().unwrap_or(0),
        eccentricity,
    })
}

/// Per-vertex counts `|{v : d(u, v) = k}|` for `k = 0..=ec(u)`, plus the
/// multiset of distinct tuples in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDegreeSequence {
    pub kind: DistanceKind,
    pub per_vertex: Vec<Vec<usize>>,
    pub summary: Vec<(Vec<usize>, usize)>,
}

pub fn distance_degree_sequence(dm: &DistanceMatrix) -> Result<DistanceDegreeSequence> {
    if !dm.is_finite() {
        return Err(Error::Disconnected);
    }
    let per_vertex: Vec<Vec<usize>> = (0..dm.n)
        .map(|u| {
            let row: Vec<u32> = dm.row(u).iter().map(|d| d.unwrap()).collect();
            let ecc = row.iter().copied().max().unwrap_or(0) as usize;
            let mut counts = vec![0; ecc + 1];
            for d in row {
                counts[d as usize] += 1;
            }
            counts
        })
        .collect();
    let mut summary: Vec<(Vec<usize>, usize)> = Vec::new();
    for seq in &per_vertex {
        match summary.iter_mut().find(|(s, _)| s == seq) {
            Some((_, count)) => *count += 1,
            None => summary.push((seq.clone(), 1)),
        }
    }
    Ok(DistanceDegreeSequence {
        kind: dm.kind,
        per_vertex,
        summary,
    })
}

pub fn dds_for(
    g: &Graph,
    kind: DistanceKind,
    detour_bound: usize,
) -> Result<DistanceDegreeSequence> {
    let dm = match kind {
        DistanceKind::Shortest => distance_matrix(g),
        DistanceKind::Detour => detour_matrix_bounded(g, detour_bound)?,
    };
    distance_degree_sequence(&dm)
}
