//! Twin classes, resolving sets, metric dimension and the resolving
//! polynomial.
//!
//! Every resolving set contains all but at most one vertex of each twin
//! class, and swapping twins preserves resolvability. Enumeration therefore
//! walks only subsets that omit at most one vertex per class.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::distance::{distance_matrix, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::poly::IntPolynomial;

/// Largest order handled by the bitmask-based searches.
pub const MAX_RESOLVING_ORDER: usize = 64;

/// Default cap on the number of candidate subsets examined.
pub const DEFAULT_SUBSET_BUDGET: u128 = 50_000_000;

/// Largest order accepted by [`resolving_sequence_exhaustive`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    /// Equal closed neighborhoods.
    Adjacent,
    /// Equal open neighborhoods.
    NonAdjacent,
    /// A class of one vertex.
    Single,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinClass {
    pub vertices: Vec<Vertex>,
    pub kind: TwinKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    pub fn nontrivial(&self) -> impl Iterator<Item = &TwinClass> {
        self.classes.iter().filter(|c| c.vertices.len() > 1)
    }

    /// `Σ (|class| - 1)`, a lower bound on the metric dimension.
    pub fn lower_bound(&self) -> usize {
        self.classes.iter().map(|c| c.vertices.len() - 1).sum()
    }

    /// Class index of every vertex.
    pub fn class_of(&self, order: usize) -> Vec<usize> {
        let mut out = vec![0; order];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in &c.vertices {
                out[v] = i;
            }
        }
        out
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut closed: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    let mut open: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for v in 0..n {
        let mut nb = g.neighbors(v).to_vec();
        open.entry(nb.clone()).or_default().push(v);
        nb.push(v);
        nb.sort_unstable();
        closed.entry(nb).or_default().push(v);
    }
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for (groups, kind) in [(closed, TwinKind::Adjacent), (open, TwinKind::NonAdjacent)] {
        for (_, vertices) in groups {
            if vertices.len() > 1 {
                debug_assert!(vertices.iter().all(|&v| !assigned[v]));
                for &v in &vertices {
                    assigned[v] = true;
                }
                classes.push(TwinClass { vertices, kind });
            }
        }
    }
    for v in 0..n {
        if !assigned[v] {
            classes.push(TwinClass {
                vertices: vec![v],
                kind: TwinKind::Single,
            });
        }
    }
    classes.sort_by_key(|c| c.vertices[0]);
    TwinPartition { classes }
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dm = distance_matrix(g);
    if dm.is_finite() {
        Ok(dm)
    } else {
        Err(Error::Disconnected)
    }
}

/// Whether the representations `r(v | S) = (d(v, s))_{s ∈ S}` are pairwise
/// distinct. `S` is used in ascending order.
pub fn is_resolving(g: &Graph, set: &[Vertex]) -> Result<bool> {
    for &s in set {
        g.check_vertex(s)?;
    }
    let dm = connected_distances(g)?;
    Ok(represents_injectively(&dm, set))
}

fn represents_injectively(dm: &DistanceMatrix, set: &[Vertex]) -> bool {
    let mut ordered = set.to_vec();
    ordered.sort_unstable();
    ordered.dedup();
    let mut seen = HashSet::with_capacity(dm.n);
    (0..dm.n).all(|v| {
        let rep: Vec<u32> = ordered.iter().map(|&s| dm.get(v, s).unwrap()).collect();
        seen.insert(rep)
    })
}

/// Per-pair masks of the vertices that tell the pair apart. A set resolves
/// iff it meets every mask.
struct PairMasks {
    masks: Vec<u64>,
}

impl PairMasks {
    fn new(dm: &DistanceMatrix) -> Self {
        let n = dm.n;
        let mut masks = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let mut m = 0u64;
                for s in 0..n {
                    if dm.get(u, s) != dm.get(v, s) {
                        m |= 1 << s;
                    }
                }
                masks.push(m);
            }
        }
        // Pairs with small masks fail fastest.
        masks.sort_by_key(|m| m.count_ones());
        Self { masks }
    }

    fn resolves(&self, set: u64) -> bool {
        self.masks.iter().all(|&m| m & set != 0)
    }
}

/// Walks size-`k` subsets that omit at most one vertex per twin class, in
/// lexicographic order of their sorted vertex lists. The callback returns
/// `false` to stop.
fn for_each_candidate(
    class_of: &[usize],
    classes: usize,
    k: usize,
    mut f: impl FnMut(u64) -> bool,
) {
    struct Walk<'a, F> {
        class_of: &'a [usize],
        omitted: Vec<bool>,
        f: F,
        stopped: bool,
    }
    impl<F: FnMut(u64) -> bool> Walk<'_, F> {
        fn go(&mut self, v: usize, need: usize, set: u64) {
            if self.stopped {
                return;
            }
            let n = self.class_of.len();
            if need == 0 {
                // Everything left is omitted; each must be alone in its class.
                let mut used = Vec::new();
                let ok = (v..n).all(|w| {
                    let c = self.class_of[w];
                    let fresh = !self.omitted[c] && !used.contains(&c);
                    used.push(c);
                    fresh
                });
                if ok && !(self.f)(set) {
                    self.stopped = true;
                }
                return;
            }
            if n - v < need {
                return;
            }
            self.go(v + 1, need - 1, set | 1 << v);
            let c = self.class_of[v];
            if !self.omitted[c] {
                self.omitted[c] = true;
                self.go(v + 1, need, set);
                self.omitted[c] = false;
            }
        }
    }
    let mut walk = Walk {
        class_of,
        omitted: vec![false; classes],
        f: &mut f,
        stopped: false,
    };
    walk.go(0, k, 0);
}

/// Number of size-`k` subsets omitting at most one vertex per class.
fn candidate_count(partition: &TwinPartition, n: usize, k: usize) -> u128 {
    // Coefficient of y^(n-k) in Π (1 + |c| y).
    let mut poly = vec![1u128];
    for c in &partition.classes {
        let size = c.vertices.len() as u128;
        let mut next = vec![0u128; poly.len() + 1];
        for (i, &a) in poly.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a * size;
        }
        poly = next;
    }
    poly.get(n - k).copied().unwrap_or(0)
}

fn mask_to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn check_order(g: &Graph, what: &'static str) -> Result<()> {
    if g.order() > MAX_RESOLVING_ORDER {
        return Err(Error::BoundExceeded {
            what,
            order: g.order(),
            bound: MAX_RESOLVING_ORDER,
        });
    }
    Ok(())
}

/// Metric dimension and the lexicographically least basis.
pub fn metric_basis(g: &Graph, budget: u128) -> Result<(usize, Vec<Vertex>)> {
    check_order(g, "metric dimension")?;
    let dm = connected_distances(g)?;
    let n = g.order();
    let partition = twin_partition(g);
    let class_of = partition.class_of(n);
    let masks = PairMasks::new(&dm);
    let mut spent = 0u128;
    for k in partition.lower_bound()..=n {
        spent += candidate_count(&partition, n, k);
        if spent > budget {
            return Err(Error::BudgetExceeded {
                needed: spent,
                budget,
            });
        }
        let mut found = None;
        for_each_candidate(&class_of, partition.classes.len(), k, |set| {
            if masks.resolves(set) {
                found = Some(set);
                false
            } else {
                true
            }
        });
        if let Some(set) = found {
            return Ok((k, mask_to_vec(set)));
        }
    }
    unreachable!("the full vertex set always resolves")
}

pub fn metric_dimension(g: &Graph) -> Result<usize> {
    metric_basis(g, DEFAULT_SUBSET_BUDGET).map(|(k, _)| k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingProfile {
    #[serde(rename = "psi")]
    pub metric_dimension: usize,
    /// `r_ψ, r_(ψ+1), ..., r_N`.
    pub sequence: Vec<u64>,
    pub polynomial: IntPolynomial,
    pub witness_basis: Vec<Vertex>,
}

impl ResolvingProfile {
    fn from_counts(counts: &[u64], witness_basis: Vec<Vertex>) -> Self {
        let psi = counts.iter().position(|&c| c > 0).unwrap_or(counts.len());
        let mut polynomial = IntPolynomial::zero();
        for (k, &c) in counts.iter().enumerate() {
            polynomial.add_term(k as u32, BigInt::from(c));
        }
        Self {
            metric_dimension: psi,
            sequence: counts[psi..].to_vec(),
            polynomial,
            witness_basis,
        }
    }

    /// `r_k` for any `k` (zero below ψ).
    pub fn count(&self, k: usize) -> u64 {
        k.checked_sub(self.metric_dimension)
            .and_then(|i| self.sequence.get(i).copied())
            .unwrap_or(0)
    }
}

pub fn resolving_polynomial(g: &Graph) -> Result<ResolvingProfile> {
    resolving_polynomial_with_budget(g, DEFAULT_SUBSET_BUDGET)
}

/// `r_k` for every `k` by twin-pruned enumeration.
pub fn resolving_polynomial_with_budget(g: &Graph, budget: u128) -> Result<ResolvingProfile> {
    check_order(g, "resolving polynomial")?;
    let dm = connected_distances(g)?;
    let n = g.order();
    let partition = twin_partition(g);
    let lower = partition.lower_bound();
    let needed: u128 = (lower..=n).map(|k| candidate_count(&partition, n, k)).sum();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let class_of = partition.class_of(n);
    let masks = PairMasks::new(&dm);
    let mut counts = vec![0u64; n + 1];
    let mut witness = None;
    for (k, slot) in counts.iter_mut().enumerate().skip(lower) {
        for_each_candidate(&class_of, partition.classes.len(), k, |set| {
            if masks.resolves(set) {
                *slot += 1;
                witness.get_or_insert(set);
            }
            true
        });
    }
    let basis = witness.map(mask_to_vec).unwrap_or_default();
    Ok(ResolvingProfile::from_counts(&counts, basis))
}

/// `r_k` by checking all `2^N` subsets with [`is_resolving`]'s
/// representation test; no twin pruning.
pub fn resolving_sequence_exhaustive(g: &Graph) -> Result<ResolvingProfile> {
    let n = g.order();
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::BoundExceeded {
            what: "exhaustive resolving-set enumeration",
            order: n,
            bound: MAX_EXHAUSTIVE_ORDER,
        });
    }
    let dm = connected_distances(g)?;
    let mut counts = vec![0u64; n + 1];
    let mut best: Option<Vec<Vertex>> = None;
    for mask in 0u64..1 << n {
        let set = mask_to_vec(mask);
        if represents_injectively(&dm, &set) {
            counts[set.len()] += 1;
            let better = match &best {
                None => true,
                Some(b) => (set.len(), &set) < (b.len(), b),
            };
            if better {
                best = Some(set);
            }
        }
    }
    Ok(ResolvingProfile::from_counts(
        &counts,
        best.unwrap_or_default(),
    ))
}
