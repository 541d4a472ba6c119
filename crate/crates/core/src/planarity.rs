//! Planarity testing with certificates in both outcomes.
//!
//! Each biconnected block is embedded by path addition: start from a cycle,
//! then repeatedly route a path of some fragment through a face that holds
//! all of its attachment vertices, preferring fragments with a single such
//! face. A fragment with no admissible face proves the block non-planar.
//! Block embeddings are glued at cut vertices into one rotation system.
//! Non-planar graphs are shrunk to an edge-minimal non-planar subgraph,
//! which is a subdivision of K5 or K3,3.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`is_planar`].
pub const MAX_PLANARITY_ORDER: usize = 128;

/// Cyclic order of the neighbours around every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<Vertex>>,
}

impl RotationSystem {
    /// Traces the faces: after arriving at `v` from `u`, leave along the
    /// successor of `u` in the rotation at `v`. `None` if a rotation
    /// mentions a vertex that does not list the reverse edge.
    pub fn faces(&self) -> Option<Vec<Vec<Vertex>>> {
        let n = self.rotations.len();
        let mut position: Vec<HashMap<Vertex, usize>> = Vec::with_capacity(n);
        for rot in &self.rotations {
            position.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
        }
        let mut seen: Vec<Vec<bool>> = self
            .rotations
            .iter()
            .map(|r| vec![false; r.len()])
            .collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rotations[u].len() {
                if seen[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ia) = (u, i);
                while !seen[a][ia] {
                    seen[a][ia] = true;
                    face.push(a);
                    let b = self.rotations[a][ia];
                    let back = *position.get(b)?.get(&a)?;
                    let rot = &self.rotations[b];
                    let next = (back + 1) % rot.len();
                    a = b;
                    ia = next;
                }
                if (a, ia) != (u, i) {
                    return None;
                }
                faces.push(face);
            }
        }
        Some(faces)
    }

    /// The rotations list exactly the neighbourhoods of `g`, and every
    /// connected component satisfies `V - E + F = 2`.
    pub fn is_embedding_of(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.rotations.len() != n {
            return false;
        }
        for v in 0..n {
            let listed: BTreeSet<Vertex> = self.rotations[v].iter().copied().collect();
            let actual: BTreeSet<Vertex> = g.neighbors(v).iter().copied().collect();
            if listed.len() != self.rotations[v].len() || listed != actual {
                return false;
            }
        }
        let Some(faces) = self.faces() else {
            return false;
        };
        let mut component = vec![0; n];
        let comps = g.components();
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                component[v] = c;
            }
        }
        let mut face_count = vec![0i64; comps.len()];
        for f in &faces {
            face_count[component[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(c, vs)| {
            let v = vs.len() as i64;
            let e = vs.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
            // An isolated vertex has no darts but bounds one face.
            let f = if e == 0 { 1 } else { face_count[c] };
            v - e + f == 2
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3: branch vertices joined by internally
/// disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<Vertex>,
    pub paths: Vec<Vec<Vertex>>,
}

impl KuratowskiWitness {
    /// Checks that the paths live in `g`, are internally disjoint, and
    /// contract to K5 or K3,3 on the branch vertices.
    pub fn is_subdivision_in(&self, g: &Graph) -> bool {
        let branch: BTreeSet<Vertex> = self.branch_vertices.iter().copied().collect();
        let (want_branch, want_paths) = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if branch.len() != want_branch
            || self.branch_vertices.len() != want_branch
            || self.paths.len() != want_paths
            || self.branch_vertices.iter().any(|&v| v >= g.order())
        {
            return false;
        }
        let mut used_internal = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for p in &self.paths {
            if p.len() < 2 || p.iter().any(|&v| v >= g.order()) {
                return false;
            }
            let (a, b) = (p[0], p[p.len() - 1]);
            if a == b || !branch.contains(&a) || !branch.contains(&b) {
                return false;
            }
            if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if branch.contains(&x) || !used_internal.insert(x) {
                    return false;
                }
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
        match self.kind {
            KuratowskiKind::K5 => true,
            KuratowskiKind::K33 => {
                // 3-regular and bipartite on six vertices is K3,3.
                let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
                let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
                for &(a, b) in &pairs {
                    *degree.entry(a).or_default() += 1;
                    *degree.entry(b).or_default() += 1;
                }
                if degree.values().any(|&d| d != 3) {
                    return false;
                }
                let start = self.branch_vertices[0];
                side.insert(start, false);
                let mut queue = VecDeque::from([start]);
                while let Some(v) = queue.pop_front() {
                    let s = side[&v];
                    for &(a, b) in &pairs {
                        let other = if a == v {
                            b
                        } else if b == v {
                            a
                        } else {
                            continue;
                        };
                        match side.get(&other) {
                            Some(&t) if t == s => return false,
                            Some(_) => {}
                            None => {
                                side.insert(other, !s);
                                queue.push_back(other);
                            }
                        }
                    }
                }
                side.len() == 6
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum PlanarityCertificate {
    Embedding(RotationSystem),
    Kuratowski(KuratowskiWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Planarity {
    pub planar: bool,
    pub certificate: PlanarityCertificate,
}

impl Planarity {
    pub fn verify(&self, g: &Graph) -> bool {
        match (&self.certificate, self.planar) {
            (PlanarityCertificate::Embedding(r), true) => r.is_embedding_of(g),
            (PlanarityCertificate::Kuratowski(w), false) => w.is_subdivision_in(g),
            _ => false,
        }
    }
}

pub fn is_planar(g: &Graph) -> Result<Planarity> {
    let n = g.order();
    if n > MAX_PLANARITY_ORDER {
        return Err(Error::BoundExceeded {
            what: "planarity test",
            order: n,
            bound: MAX_PLANARITY_ORDER,
        });
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    if let Some(rotations) = embed(n, &edges) {
        return Ok(Planarity {
            planar: true,
            certificate: PlanarityCertificate::Embedding(RotationSystem { rotations }),
        });
    }
    let witness = kuratowski_subgraph(n, edges);
    Ok(Planarity {
        planar: false,
        certificate: PlanarityCertificate::Kuratowski(witness),
    })
}

fn adjacency(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

/// Edge sets of the biconnected blocks.
fn blocks(adj: &[Vec<Vertex>]) -> Vec<Vec<(Vertex, Vertex)>> {
    struct State<'a> {
        adj: &'a [Vec<Vertex>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(Vertex, Vertex)>,
        out: Vec<Vec<(Vertex, Vertex)>>,
    }
    fn dfs(s: &mut State, u: Vertex, parent: Option<Vertex>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let w = s.adj[u][i];
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, Some(u));
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// A planar rotation system for the graph, or `None` if it is not planar.
fn embed(n: usize, edges: &[(Vertex, Vertex)]) -> Option<Vec<Vec<Vertex>>> {
    let adj = adjacency(n, edges);
    let mut rotations = vec![Vec::new(); n];
    for block in blocks(&adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotations[u].push(v);
            rotations[v].push(u);
            continue;
        }
        let vertices: BTreeSet<Vertex> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        let vertices: Vec<Vertex> = vertices.into_iter().collect();
        if block.len() > 3 * vertices.len() - 6 {
            return None;
        }
        let local: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let local_edges: Vec<(usize, usize)> =
            block.iter().map(|&(u, v)| (local[&u], local[&v])).collect();
        let faces = embed_biconnected(vertices.len(), &adjacency(vertices.len(), &local_edges))?;
        for (i, rot) in rotation_from_faces(vertices.len(), &faces)
            .into_iter()
            .enumerate()
        {
            rotations[vertices[i]].extend(rot.into_iter().map(|w| vertices[w]));
        }
    }
    Some(rotations)
}

fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            succ[v].insert(u, w);
        }
    }
    succ.iter()
        .map(|s| {
            let Some(&start) = s.keys().min() else {
                return Vec::new();
            };
            let mut rot = vec![start];
            let mut cur = s[&start];
            while cur != start && rot.len() <= s.len() {
                rot.push(cur);
                cur = s[&cur];
            }
            rot
        })
        .collect()
}

struct Fragment {
    attachments: Vec<usize>,
    /// Vertices not yet embedded; empty for a single chord.
    inner: Vec<usize>,
}

/// Faces of a planar embedding of a biconnected graph with at least one
/// cycle, as oriented vertex cycles.
fn embed_biconnected(n: usize, adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let first = initial_cycle(adj);
    let mut in_h = vec![false; n];
    let mut edge_in_h: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &v) in first.iter().enumerate() {
        in_h[v] = true;
        let w = first[(i + 1) % first.len()];
        edge_in_h.insert((v.min(w), v.max(w)));
    }
    let total_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut faces = vec![first.clone(), first.iter().rev().copied().collect()];

    while edge_in_h.len() < total_edges {
        let fragments = fragments(adj, &in_h, &edge_in_h);
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; n];
                f.iter().for_each(|&v| s[v] = true);
                s
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|&a| face_sets[k][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    choice.get_or_insert((fi, admissible[0]));
                }
            }
        }
        let (fi, face_idx) = choice.expect("an unembedded edge forms a fragment");
        let path = fragment_path(adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            edge_in_h.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }
    Some(faces)
}

fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let start = (0..adj.len())
        .find(|&v| !adj[v].is_empty())
        .expect("block has edges");
    let next = adj[start][0];
    // Shortest path from `next` back to `start` avoiding the edge between them.
    let mut prev = vec![usize::MAX; adj.len()];
    prev[next] = next;
    let mut queue = VecDeque::from([next]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if prev[w] == usize::MAX && !(v == next && w == start) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![start];
    let mut cur = prev[start];
    while cur != next {
        cycle.push(cur);
        cur = prev[cur];
    }
    cycle.push(next);
    cycle
}

fn fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    edge_in_h: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !edge_in_h.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut attachments = BTreeSet::new();
        seen[s] = true;
        let mut i = 0;
        while i < inner.len() {
            let v = inner[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            inner,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.attachments.clone();
    }
    let mut inside = vec![false; adj.len()];
    frag.inner.iter().for_each(|&v| inside[v] = true);
    let a = frag.attachments[0];
    let entry = adj[a]
        .iter()
        .copied()
        .find(|&w| inside[w])
        .expect("attachment touches fragment");
    let mut prev = vec![usize::MAX; adj.len()];
    prev[entry] = entry;
    let mut queue = VecDeque::from([entry]);
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[v].iter().find(|&&w| in_h[w] && w != a) {
            let mut path = vec![b];
            let mut cur = v;
            while prev[cur] != cur {
                path.push(cur);
                cur = prev[cur];
            }
            path.push(cur);
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a biconnected block has two attachments")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = path[path.len() - 1];
    let ia = face
        .iter()
        .position(|&v| v == a)
        .expect("attachment on face");
    let ib = face
        .iter()
        .position(|&v| v == b)
        .expect("attachment on face");
    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % k;
            out.push(face[i]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut first = walk(ia, ib);
    first.extend(interior.iter().rev());
    let mut second = walk(ib, ia);
    second.extend(interior.iter());
    (first, second)
}

fn kuratowski_subgraph(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> KuratowskiWitness {
    // Vertex deletions first: they shrink the search fastest.
    for v in 0..n {
        let trial: Vec<_> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        if trial.len() < edges.len() && embed(n, &trial).is_none() {
            edges = trial;
        }
    }
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if embed(n, &trial).is_none() {
            edges = trial;
        } else {
            i += 1;
        }
    }
    subdivision_from_minimal(n, &edges)
}

fn subdivision_from_minimal(n: usize, edges: &[(Vertex, Vertex)]) -> KuratowskiWitness {
    let adj = adjacency(n, edges);
    let branch_vertices: Vec<Vertex> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let mut paths = Vec::new();
    for &b in &branch_vertices {
        for &first in &adj[b] {
            let mut path = vec![b, first];
            let mut prev = b;
            let mut cur = first;
            while adj[cur].len() == 2 {
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    KuratowskiWitness {
        kind,
        branch_vertices,
        paths,
    }
}
