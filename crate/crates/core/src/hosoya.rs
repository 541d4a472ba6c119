//! Hosoya and reciprocal status Hosoya polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::distance::{distance_matrix, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::poly::IntPolynomial;

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dm = distance_matrix(g);
    if dm.is_finite() {
        Ok(dm)
    } else {
        Err(Error::Disconnected)
    }
}

/// `Σ dis(G, i) x^i` where `dis(G, 0) = N` counts the diagonal and
/// `dis(G, i)` for `i >= 1` counts unordered pairs at distance `i`.
pub fn hosoya_polynomial(g: &Graph) -> Result<IntPolynomial> {
    let dm = connected_distances(g)?;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    let n = g.order();
    if n > 0 {
        counts.insert(0, n as u64);
    }
    for u in 0..n {
        for v in u + 1..n {
            *counts.entry(dm.get(u, v).unwrap()).or_default() += 1;
        }
    }
    let mut p = IntPolynomial::zero();
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    Ok(p)
}

/// `rs(v) = Σ_{u ≠ v} 1 / d(u, v)`, exactly.
pub fn reciprocal_status(g: &Graph, v: Vertex) -> Result<BigRational> {
    g.check_vertex(v)?;
    let dm = connected_distances(g)?;
    Ok(status_from(&dm, v))
}

fn status_from(dm: &DistanceMatrix, v: Vertex) -> BigRational {
    let mut sum = BigRational::zero();
    for u in 0..dm.n {
        if u != v {
            let d = dm.get(u, v).unwrap();
            sum += BigRational::new(BigInt::from(1), BigInt::from(d));
        }
    }
    sum
}

/// `Σ_{uv ∈ E} x^(rs(u) + rs(v))`. Edges whose exponent is not an integer
/// are tallied separately in `fractional_terms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReciprocalStatusHosoya {
    pub polynomial: IntPolynomial,
    /// Non-integral exponent (as `"p/q"`) to edge count.
    pub fractional_terms: BTreeMap<String, u64>,
}

pub fn reciprocal_status_hosoya(g: &Graph) -> Result<ReciprocalStatusHosoya> {
    let dm = connected_distances(g)?;
    let status: Vec<BigRational> = (0..g.order()).map(|v| status_from(&dm, v)).collect();
    let mut polynomial = IntPolynomial::zero();
    let mut fractional = BTreeMap::new();
    for (u, v) in g.edges() {
        let exponent = &status[u] + &status[v];
        match exponent
            .is_integer()
            .then(|| exponent.to_integer().to_u32())
            .flatten()
        {
            Some(e) => polynomial.add_term(e, BigInt::from(1)),
            None => *fractional.entry(exponent.to_string()).or_insert(0) += 1,
        }
    }
    Ok(ReciprocalStatusHosoya {
        polynomial,
        fractional_terms: fractional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::power_graph;
    use crate::gyro::GyroGroup;

    fn pg(n: u32) -> Graph {
        power_graph(&GyroGroup::gn(n).unwrap())
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn hosoya_values() {
        assert_eq!(
            hosoya_polynomial(&pg(3)).unwrap(),
            IntPolynomial::from_ascending([8, 10, 18])
        );
        assert_eq!(
            hosoya_polynomial(&pg(4)).unwrap(),
            IntPolynomial::from_ascending([16, 36, 84])
        );
        assert_eq!(
            hosoya_polynomial(&Graph::empty(1)).unwrap(),
            IntPolynomial::one()
        );
        assert!(matches!(
            hosoya_polynomial(&Graph::empty(2)),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn hosoya_totals() {
        for g in [pg(3), pg(4), Graph::cycle(7), Graph::path(5)] {
            let n = g.order() as i64;
            let h = hosoya_polynomial(&g).unwrap();
            assert_eq!(h.coefficient_sum(), BigInt::from(n + n * (n - 1) / 2));
            assert_eq!(h.coefficient(1), BigInt::from(g.edge_count()));
        }
    }

    #[test]
    fn reciprocal_status_values() {
        let g = pg(3);
        assert_eq!(reciprocal_status(&g, 0).unwrap(), rat(7, 1));
        assert_eq!(reciprocal_status(&g, 1).unwrap(), rat(5, 1));
        assert_eq!(reciprocal_status(&g, 4).unwrap(), rat(4, 1));
        let k2 = Graph::complete(2);
        assert_eq!(reciprocal_status(&k2, 0).unwrap(), rat(1, 1));
        assert_eq!(reciprocal_status(&Graph::path(4), 0).unwrap(), rat(11, 6));
    }

    #[test]
    fn rs_hosoya_values() {
        let r = reciprocal_status_hosoya(&pg(3)).unwrap();
        assert_eq!(r.polynomial.to_string(), "3x^12 + 4x^11 + 3x^10");
        assert!(r.fractional_terms.is_empty());
        let r = reciprocal_status_hosoya(&pg(4)).unwrap();
        assert_eq!(r.polynomial.to_string(), "7x^26 + 8x^23 + 21x^22");
        let r = reciprocal_status_hosoya(&Graph::complete(2)).unwrap();
        assert_eq!(r.polynomial.to_string(), "x^2");
    }

    #[test]
    fn rs_hosoya_fractional_exponents() {
        // P4: rs = 11/6, 5/2, 5/2, 11/6.
        let r = reciprocal_status_hosoya(&Graph::path(4)).unwrap();
        // The middle edge has rs sum 5 and is integral.
        assert_eq!(r.polynomial.to_string(), "x^5");
        assert_eq!(r.fractional_terms.get("13/3"), Some(&2));
        assert_eq!(r.fractional_terms.len(), 1);
    }
}
