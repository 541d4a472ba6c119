//! Exact characteristic polynomials and spectral radii of adjacency
//! matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{power_graph, Graph};
use crate::gyro::GyroGroup;
use crate::poly::IntPolynomial;

/// Largest dimension accepted by the exact characteristic polynomial.
pub const MAX_CHARPOLY_DIMENSION: usize = 64;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: dim,
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on `keep`.
    pub fn submatrix(&self, keep: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(IntMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence over exact integers.
///
/// With `N_0 = I` and `c_N = 1`, each step forms `N_k = M N_(k-1) + c_(N-k+1) I`
/// and `c_(N-k) = -tr(M N_k) / k`; the division is always exact.
pub fn char_poly_exact(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.dim();
    if n > MAX_CHARPOLY_DIMENSION {
        return Err(Error::BoundExceeded {
            what: "exact characteristic polynomial",
            order: n,
            bound: MAX_CHARPOLY_DIMENSION,
        });
    }
    // Row-wise sparse copy of M: most adjacency entries are zero.
    let sparse: Vec<Vec<(usize, BigInt)>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| m.get(i, j) != 0)
                .map(|j| (j, BigInt::from(m.get(i, j))))
                .collect()
        })
        .collect();
    let times_m = |a: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for (k, mik) in &sparse[i] {
                let row = &a[k * n..(k + 1) * n];
                for j in 0..n {
                    if !row[j].is_zero() {
                        out[i * n + j] += mik * &row[j];
                    }
                }
            }
        }
        out
    };

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = vec![BigInt::zero(); n * n];
    for i in 0..n {
        acc[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let product = times_m(&acc);
        let trace: BigInt = (0..n).map(|i| &product[i * n + i]).sum();
        let c = -trace / BigInt::from(k as u64);
        coeffs[n - k] = c.clone();
        acc = product;
        for i in 0..n {
            acc[i * n + i] += &c;
        }
    }
    Ok(IntPolynomial::from_ascending(coeffs))
}

/// `det(M)` by Bareiss fraction-free elimination.
pub fn determinant_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// `det(x0 I - M)` evaluated directly.
pub fn char_poly_at(m: &IntMatrix, x0: i64) -> BigInt {
    let n = m.dim();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { x0 } else { 0 };
                    BigInt::from(diag - m.get(i, j))
                })
                .collect()
        })
        .collect();
    determinant_bareiss(&rows)
}

/// `x^(m-1) (1+x)^(m-2) (x^3 + (2-m) x^2 - (2m-1) x + m^2 - 2m)` with
/// `m = 2^(n-1)`, the characteristic polynomial of the power graph of `G(n)`.
pub fn closed_form_charpoly_gn(n: u32) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::OrderParameterTooSmall(n));
    }
    let m = 1i64 << (n - 1);
    let x = IntPolynomial::x();
    let one_plus_x = IntPolynomial::from_ascending([1, 1]);
    let product = &x.pow((m - 1) as u32) * &one_plus_x.pow((m - 2) as u32);
    Ok(&product * &gn_cubic(n))
}

/// The cubic factor `x^3 + (2-m) x^2 - (2m-1) x + m^2 - 2m`.
pub fn gn_cubic(n: u32) -> IntPolynomial {
    let m = 1i64 << (n - 1);
    IntPolynomial::from_ascending([m * m - 2 * m, -(2 * m - 1), 2 - m, 1])
}

/// Quotient matrix of the equitable partition `{e}`, `P(n) \ {e}`, `H(n)`
/// of the power graph of `G(n)`. Its characteristic polynomial is the cubic
/// factor of the full one.
pub fn gn_quotient_matrix(n: u32) -> IntMatrix {
    let m = 1i64 << (n - 1);
    IntMatrix::from_rows(&[vec![0, m - 1, m], vec![1, m - 2, 0], vec![1, 0, 0]]).unwrap()
}

/// Spectral radius with its convergence certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralRadius {
    pub value: f64,
    /// `‖Mv - λv‖` for the final unit vector `v`; some eigenvalue lies
    /// within this distance of `value`.
    pub residual: f64,
    pub iterations: usize,
}

pub fn spectral_radius(m: &IntMatrix, tol: f64) -> Result<SpectralRadius> {
    spectral_radius_with_limit(m, tol, MAX_POWER_ITERATIONS)
}

/// Power iteration on `M + I` with a Rayleigh-quotient estimate.
///
/// For a symmetric non-negative `M` the spectrum lies in `[-λ₁, λ₁]`, so the
/// shift makes `λ₁ + 1` strictly dominant in absolute value.
pub fn spectral_radius_with_limit(
    m: &IntMatrix,
    tol: f64,
    max_iterations: usize,
) -> Result<SpectralRadius> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.entries.iter().any(|&x| x < 0) {
        return Err(Error::NegativeEntry);
    }
    let n = m.dim();
    if n == 0 {
        return Ok(SpectralRadius {
            value: 0.0,
            residual: 0.0,
            iterations: 0,
        });
    }
    let apply = |v: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) as f64 * v[j]).sum())
            .collect()
    };
    let normalize = |v: &mut Vec<f64>| {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
    };
    let starts = [
        vec![1.0; n],
        (0..n)
            .map(|i| 1.0 + (i as f64 + 1.0) / (n as f64 + 1.0))
            .collect::<Vec<_>>(),
    ];
    for start in starts {
        let mut v = start;
        normalize(&mut v);
        for it in 1..=max_iterations {
            let mv = apply(&v);
            let rq: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
            let residual = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - rq * b).powi(2))
                .sum::<f64>()
                .sqrt();
            if residual <= tol {
                return Ok(SpectralRadius {
                    value: rq,
                    residual,
                    iterations: it,
                });
            }
            let mut next: Vec<f64> = mv.iter().zip(&v).map(|(a, b)| a + b).collect();
            let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                break;
            }
            next.iter_mut().for_each(|x| *x /= norm);
            v = next;
        }
    }
    Err(Error::NoConvergence(max_iterations))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lower: f64,
    pub upper: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub n: u32,
    pub charpoly: IntPolynomial,
    pub spectral_radius: f64,
    pub error_bound: f64,
    pub bound_check: BoundCheck,
}

/// Checks `2^(n-1) - 1 < λ₁(P(G(n))) <= 2^(n-1) - 1 + √(2^(n-1))`.
pub fn verify_spectral_bounds(n: u32, tol: f64) -> Result<SpectralSummary> {
    let g = GyroGroup::gn(n)?;
    if g.order() > MAX_CHARPOLY_DIMENSION {
        return Err(Error::BoundExceeded {
            what: "spectral bounds",
            order: g.order(),
            bound: MAX_CHARPOLY_DIMENSION,
        });
    }
    let a = adjacency_matrix(&power_graph(&g));
    let radius = spectral_radius(&a, tol)?;
    let m = (1u64 << (n - 1)) as f64;
    let lower = m - 1.0;
    let upper = lower + m.sqrt();
    let satisfied = radius.value > lower + tol && radius.value <= upper + tol;
    Ok(SpectralSummary {
        n,
        charpoly: char_poly_exact(&a)?,
        spectral_radius: radius.value,
        error_bound: radius.residual,
        bound_check: BoundCheck {
            lower,
            upper,
            satisfied,
        },
    })
}

/// The split `A = D + E` of the power graph of `G(n)`: `D` keeps the clique
/// on `P(n)`, `E` keeps the identity–pendant star.
pub fn gn_clique_star_split(n: u32) -> Result<(IntMatrix, IntMatrix)> {
    let g = GyroGroup::gn(n)?;
    let a = adjacency_matrix(&power_graph(&g));
    let half = g.order() / 2;
    let mut d = IntMatrix::zeros(g.order());
    let mut e = IntMatrix::zeros(g.order());
    for i in 0..g.order() {
        for j in 0..g.order() {
            let target = if i < half && j < half { &mut d } else { &mut e };
            target.set(i, j, a.get(i, j));
        }
    }
    Ok((d, e))
}
