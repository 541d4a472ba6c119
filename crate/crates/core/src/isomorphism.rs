//! Graph and gyrogroup isomorphisms by backtracking.

use serde::{Deserialize, Serialize};

use crate::distance::distance_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::gyro::GyroGroup;
use crate::permutation::Permutation;

/// Largest order for [`find_isomorphism`].
pub const MAX_GRAPH_ISO_ORDER: usize = 16;

/// Largest order for [`gyro_isomorphic`].
pub const MAX_GYRO_ISO_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismWitness {
    pub map: Permutation,
    pub valid: bool,
}

/// Checks `u ~ v ⇔ map(u) ~ map(v)` over all pairs.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, map: &Permutation) -> Result<IsomorphismWitness> {
    let n = g1.order();
    if g2.order() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: g2.order(),
        });
    }
    if map.len() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: map.len(),
        });
    }
    let valid = (0..n)
        .all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map.apply(u), map.apply(v))));
    Ok(IsomorphismWitness {
        map: map.clone(),
        valid,
    })
}

/// Degree followed by the histogram of shortest distances (unreachable last).
fn signatures(g: &Graph) -> Vec<Vec<usize>> {
    let dm = distance_matrix(g);
    let n = g.order();
    (0..n)
        .map(|u| {
            let mut hist = vec![0usize; n + 1];
            for v in 0..n {
                hist[dm.get(u, v).map_or(n, |d| d as usize)] += 1;
            }
            let mut sig = vec![g.degree(u)];
            sig.extend(hist);
            sig
        })
        .collect()
}

/// The isomorphism whose image vector is lexicographically least, or
/// `None` when the graphs are not isomorphic.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<IsomorphismWitness>> {
    let n = g1.order();
    for g in [g1, g2] {
        if g.order() > MAX_GRAPH_ISO_ORDER {
            return Err(Error::BoundExceeded {
                what: "graph isomorphism search",
                order: g.order(),
                bound: MAX_GRAPH_ISO_ORDER,
            });
        }
    }
    if g2.order() != n || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let s1 = signatures(g1);
    let s2 = signatures(g2);
    let mut sorted1 = s1.clone();
    let mut sorted2 = s2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Ok(None);
    }
    let d1 = distance_matrix(g1);
    let d2 = distance_matrix(g2);

    fn assign(
        u: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        fits: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) -> bool {
        let n = used.len();
        if u == n {
            return true;
        }
        for w in 0..n {
            if !used[w] && fits(u, w, map) {
                used[w] = true;
                map.push(w);
                if assign(u + 1, map, used, fits) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    let fits = |u: usize, w: usize, map: &[usize]| {
        s1[u] == s2[w]
            && map
                .iter()
                .enumerate()
                .all(|(x, &y)| d1.get(x, u) == d2.get(y, w))
    };
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if !assign(0, &mut map, &mut used, &fits) {
        return Ok(None);
    }
    let map = Permutation::new(map)?;
    verify_isomorphism(g1, g2, &map).map(Some)
}

/// Whether `map` satisfies `map(a ⊕ b) = map(a) ⊕ map(b)` for all `a`, `b`.
pub fn is_gyro_homomorphism(g1: &GyroGroup, g2: &GyroGroup, map: &[usize]) -> bool {
    let n = g1.order();
    map.len() == n
        && map.iter().all(|&x| x < g2.order())
        && (0..n).all(|a| (0..n).all(|b| map[g1.op(a, b)] == g2.op(map[a], map[b])))
}

/// The lexicographically least operation-preserving bijection, or `None`.
/// The identity is sent to the identity; left inverses to left inverses.
pub fn gyro_isomorphic(g1: &GyroGroup, g2: &GyroGroup) -> Result<Option<IsomorphismWitness>> {
    let n = g1.order();
    for g in [g1, g2] {
        if g.order() > MAX_GYRO_ISO_ORDER {
            return Err(Error::BoundExceeded {
                what: "gyrogroup isomorphism search",
                order: g.order(),
                bound: MAX_GYRO_ISO_ORDER,
            });
        }
    }
    if g2.order() != n {
        return Ok(None);
    }
    const NONE: usize = usize::MAX;
    struct Search<'a> {
        g1: &'a GyroGroup,
        g2: &'a GyroGroup,
        map: Vec<usize>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn consistent(&self, a: usize) -> bool {
            let n = self.map.len();
            let fa = self.map[a];
            if let (Some(ia), Some(ifa)) = (self.g1.left_inverse(a), self.g2.left_inverse(fa)) {
                if self.map[ia] != NONE && self.map[ia] != ifa {
                    return false;
                }
            }
            (0..n).filter(|&b| self.map[b] != NONE).all(|b| {
                let fb = self.map[b];
                [(a, b, fa, fb), (b, a, fb, fa)]
                    .iter()
                    .all(|&(x, y, fx, fy)| {
                        let p = self.map[self.g1.op(x, y)];
                        p == NONE || p == self.g2.op(fx, fy)
                    })
            })
        }

        fn go(&mut self, a: usize) -> bool {
            let n = self.map.len();
            if a == n {
                return true;
            }
            if self.map[a] != NONE {
                return self.go(a + 1);
            }
            for w in 0..n {
                if self.used[w] {
                    continue;
                }
                self.map[a] = w;
                self.used[w] = true;
                if self.consistent(a) && self.go(a + 1) {
                    return true;
                }
                self.used[w] = false;
                self.map[a] = NONE;
            }
            false
        }
    }
    let mut s = Search {
        g1,
        g2,
        map: vec![NONE; n],
        used: vec![false; n],
    };
    s.map[g1.identity()] = g2.identity();
    s.used[g2.identity()] = true;
    if !s.go(0) {
        return Ok(None);
    }
    debug_assert!(is_gyro_homomorphism(g1, g2, &s.map));
    Ok(Some(IsomorphismWitness {
        map: Permutation::new(s.map)?,
        valid: true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::power_graph;
    use crate::table_io::Bundled;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_relabel() {
        let g = power_graph(&GyroGroup::gn(3).unwrap());
        assert!(
            verify_isomorphism(&g, &g, &Permutation::identity(8))
                .unwrap()
                .valid
        );
        let p = [3, 7, 0, 5, 1, 6, 2, 4];
        let h = g.permuted(&p).unwrap();
        let w = find_isomorphism(&g, &h).unwrap().unwrap();
        assert!(w.valid);
        assert!(verify_isomorphism(&g, &h, &w.map).unwrap().valid);
        assert!(verify_isomorphism(&g, &h, &perm(&p)).unwrap().valid);
    }

    #[test]
    fn non_isomorphic_graphs() {
        assert_eq!(
            find_isomorphism(&Graph::cycle(6), &Graph::complete_bipartite(3, 3)).unwrap(),
            None
        );
        // Same degree sequence, different structure.
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            find_isomorphism(&Graph::cycle(6), &two_triangles).unwrap(),
            None
        );
        assert_eq!(
            find_isomorphism(&Graph::path(3), &Graph::path(4)).unwrap(),
            None
        );
    }

    #[test]
    fn size_errors() {
        assert!(
            verify_isomorphism(&Graph::path(3), &Graph::path(4), &Permutation::identity(3))
                .is_err()
        );
        assert!(
            verify_isomorphism(&Graph::path(3), &Graph::path(3), &Permutation::identity(2))
                .is_err()
        );
        assert!(find_isomorphism(&Graph::empty(17), &Graph::empty(17)).is_err());
    }

    #[test]
    fn paper_maps() {
        let k = power_graph(&Bundled::K1.load().unwrap());
        let n = power_graph(&Bundled::N1.load().unwrap());
        assert!(
            verify_isomorphism(&k, &n, &perm(&[0, 1, 7, 6, 2, 3, 5, 4]))
                .unwrap()
                .valid
        );
        let g8 = power_graph(&Bundled::G8.load().unwrap());
        let m1 = power_graph(&Bundled::M1.load().unwrap());
        let f = perm(&[0, 3, 7, 5, 4, 6, 1, 2]);
        assert!(!verify_isomorphism(&g8, &m1, &f).unwrap().valid);
        assert!(verify_isomorphism(&m1, &g8, &f).unwrap().valid);
        assert!(find_isomorphism(&g8, &m1).unwrap().is_some());
    }

    #[test]
    fn gyrogroup_isomorphisms() {
        let g3 = GyroGroup::gn(3).unwrap();
        let w = gyro_isomorphic(&g3, &g3).unwrap().unwrap();
        assert!(w.map.is_identity());
        let k = Bundled::K1.load().unwrap();
        let n = Bundled::N1.load().unwrap();
        assert_eq!(gyro_isomorphic(&k, &n).unwrap(), None);
        let g8 = Bundled::G8.load().unwrap();
        let m1 = Bundled::M1.load().unwrap();
        let w = gyro_isomorphic(&g8, &m1).unwrap().unwrap();
        assert_eq!(w.map.as_slice(), &[0, 6, 7, 1, 4, 3, 5, 2]);
        assert!(is_gyro_homomorphism(&g8, &m1, w.map.as_slice()));
    }

    /// Every bijection, no pruning.
    fn count_isomorphisms_bruteforce(g1: &GyroGroup, g2: &GyroGroup) -> usize {
        let n = g1.order();
        let mut p: Vec<usize> = (0..n).collect();
        let mut count = 0;
        let mut c = vec![0; n];
        if is_gyro_homomorphism(g1, g2, &p) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                if is_gyro_homomorphism(g1, g2, &p) {
                    count += 1;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    #[test]
    fn bruteforce_agrees() {
        let k = Bundled::K1.load().unwrap();
        let n = Bundled::N1.load().unwrap();
        let g8 = Bundled::G8.load().unwrap();
        let m1 = Bundled::M1.load().unwrap();
        assert_eq!(count_isomorphisms_bruteforce(&k, &n), 0);
        assert_eq!(count_isomorphisms_bruteforce(&g8, &m1), 4);
    }
}
