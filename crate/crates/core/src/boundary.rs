//! Boundary, interior and center vertices, and the Bondy–Chvátal closure.

use serde::{Deserialize, Serialize};

use crate::distance::{distance_matrix, eccentricity_profile, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClasses {
    pub boundary: Vec<Vertex>,
    pub interior: Vec<Vertex>,
    pub center: Vec<Vertex>,
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dm = distance_matrix(g);
    if dm.is_finite() {
        Ok(dm)
    } else {
        Err(Error::Disconnected)
    }
}

/// `v` is a boundary vertex of `u` when no neighbor of `v` is farther from
/// `u` than `v` is.
pub fn is_boundary_vertex_of(g: &Graph, dm: &DistanceMatrix, v: Vertex, u: Vertex) -> bool {
    let duv = dm.get(u, v);
    u != v && g.neighbors(v).iter().all(|&w| dm.get(u, w) <= duv)
}

pub fn boundary_interior_center(g: &Graph) -> Result<VertexClasses> {
    let dm = connected_distances(g)?;
    let n = g.order();
    let (boundary, interior): (Vec<Vertex>, Vec<Vertex>) =
        (0..n).partition(|&v| (0..n).any(|u| is_boundary_vertex_of(g, &dm, v, u)));
    let center = eccentricity_profile(&dm)?.center();
    Ok(VertexClasses {
        boundary,
        interior,
        center,
    })
}

/// Interior vertices straight from the betweenness definition: for every
/// `u ≠ v` there is a `w` with `v` on a shortest `u`–`w` path
/// (`d(u, w) = d(u, v) + d(v, w)`, `w ≠ v`).
pub fn interior_by_betweenness(g: &Graph) -> Result<Vec<Vertex>> {
    let dm = connected_distances(g)?;
    let n = g.order();
    let d = |a: Vertex, b: Vertex| dm.get(a, b).unwrap();
    Ok((0..n)
        .filter(|&v| {
            (0..n)
                .filter(|&u| u != v)
                .all(|u| (0..n).any(|w| w != v && w != u && d(u, w) == d(u, v) + d(v, w)))
        })
        .collect())
}

/// Vertices whose neighborhood induces a complete graph.
pub fn complete_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.order())
        .filter(|&v| {
            let ns = g.neighbors(v);
            ns.iter()
                .enumerate()
                .all(|(i, &a)| ns[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// Repeatedly joins non-adjacent `u`, `v` with `deg(u) + deg(v) >= N`.
pub fn bondy_chvatal_closure(g: &Graph) -> Graph {
    closure_with_order(g, false)
}

/// Same closure, scanning candidate pairs in reverse order. The closure is
/// unique, so both scans must agree.
pub fn bondy_chvatal_closure_reversed(g: &Graph) -> Graph {
    closure_with_order(g, true)
}

fn closure_with_order(g: &Graph, reversed: bool) -> Graph {
    let n = g.order();
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut deg = g.degrees();
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if reversed {
        pairs.reverse();
    }
    loop {
        let mut changed = false;
        for &(u, v) in &pairs {
            if !adj[u][v] && deg[u] + deg[v] >= n {
                adj[u][v] = true;
                adj[v][u] = true;
                deg[u] += 1;
                deg[v] += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let closed: Vec<_> = edges.filter(|&(u, v)| adj[u][v]).collect();
    Graph::from_edges(n, closed)
        .and_then(|c| c.with_labels(g.labels().to_vec()))
        .expect("closure keeps vertex set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::power_graph;
    use crate::gyro::GyroGroup;

    fn pg(n: u32) -> Graph {
        power_graph(&GyroGroup::gn(n).unwrap())
    }

    #[test]
    fn gn3_classes() {
        let c = boundary_interior_center(&pg(3)).unwrap();
        assert_eq!(c.interior, vec![0]);
        assert_eq!(c.center, vec![0]);
        assert_eq!(c.boundary, (1..8).collect::<Vec<_>>());
    }

    #[test]
    fn complete_graph_has_no_interior() {
        for n in 2..6 {
            let c = boundary_interior_center(&Graph::complete(n)).unwrap();
            assert!(c.interior.is_empty());
            assert_eq!(c.boundary.len(), n);
        }
    }

    #[test]
    fn interior_is_complement_of_boundary() {
        let graphs = [
            pg(3),
            pg(4),
            Graph::path(5),
            Graph::cycle(6),
            Graph::complete_bipartite(2, 3),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap(),
        ];
        for g in &graphs {
            let c = boundary_interior_center(g).unwrap();
            assert_eq!(c.interior, interior_by_betweenness(g).unwrap());
        }
    }

    #[test]
    fn complete_vertices_are_boundary() {
        for g in [pg(3), pg(4), Graph::path(4)] {
            let c = boundary_interior_center(&g).unwrap();
            for v in complete_vertices(&g) {
                assert!(c.boundary.contains(&v));
            }
        }
    }

    #[test]
    fn closures() {
        for n in 3..=5 {
            let g = pg(n);
            assert_eq!(bondy_chvatal_closure(&g), g);
        }
        assert_eq!(bondy_chvatal_closure(&Graph::cycle(5)), Graph::cycle(5));
        let k4_minus = Graph::complete(4).without_edge(0, 1).unwrap();
        assert_eq!(bondy_chvatal_closure(&k4_minus), Graph::complete(4));
    }

    #[test]
    fn closure_is_order_independent() {
        let graphs = [
            Graph::from_edges(
                6,
                [
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (1, 5),
                ],
            )
            .unwrap(),
            Graph::complete(5).without_edge(1, 3).unwrap(),
            Graph::complete_bipartite(3, 4),
        ];
        for g in &graphs {
            assert_eq!(bondy_chvatal_closure(g), bondy_chvatal_closure_reversed(g));
        }
    }

    #[test]
    fn disconnected_refused() {
        assert!(matches!(
            boundary_interior_center(&Graph::empty(2)),
            Err(Error::Disconnected)
        ));
    }
}
