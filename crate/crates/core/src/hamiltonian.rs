//! Hamiltonian cycles by backtracking.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order for the backtracking search.
pub const MAX_HAMILTONIAN_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HamiltonReason {
    /// Some vertex has degree at most one in a graph of order at least 3.
    PendantVertex {
        vertex: Vertex,
    },
    Disconnected,
    TooSmall,
    ExhaustiveSearch,
    CycleFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hamiltonicity {
    pub hamiltonian: bool,
    pub reason: HamiltonReason,
    /// Vertex order of the cycle, starting at vertex 0.
    pub cycle: Option<Vec<Vertex>>,
}

impl Hamiltonicity {
    /// For a positive answer, the cycle visits every vertex once along edges of `g`.
    pub fn cycle_is_valid(&self, g: &Graph) -> bool {
        let Some(c) = &self.cycle else {
            return !self.hamiltonian;
        };
        let n = g.order();
        let mut seen = vec![false; n];
        c.len() == n
            && n >= 3
            && c.iter()
                .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
            && (0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n]))
    }
}

pub fn is_hamiltonian(g: &Graph) -> Result<Hamiltonicity> {
    let n = g.order();
    let no = |reason| Hamiltonicity {
        hamiltonian: false,
        reason,
        cycle: None,
    };
    if n < 3 {
        return Ok(no(HamiltonReason::TooSmall));
    }
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) <= 1) {
        return Ok(no(HamiltonReason::PendantVertex { vertex }));
    }
    if !g.is_connected() {
        return Ok(no(HamiltonReason::Disconnected));
    }
    match hamiltonian_cycle_search(g)? {
        Some(cycle) => Ok(Hamiltonicity {
            hamiltonian: true,
            reason: HamiltonReason::CycleFound,
            cycle: Some(cycle),
        }),
        None => Ok(no(HamiltonReason::ExhaustiveSearch)),
    }
}

/// Plain backtracking with no shortcuts: the lexicographically least
/// Hamiltonian cycle through vertex 0, or `None`.
pub fn hamiltonian_cycle_search(g: &Graph) -> Result<Option<Vec<Vertex>>> {
    let n = g.order();
    if n > MAX_HAMILTONIAN_ORDER {
        return Err(Error::BoundExceeded {
            what: "Hamiltonian cycle search",
            order: n,
            bound: MAX_HAMILTONIAN_ORDER,
        });
    }
    if n < 3 {
        return Ok(None);
    }
    fn extend(g: &Graph, path: &mut Vec<Vertex>, used: &mut u64) -> bool {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, path[0]);
        }
        for &w in g.neighbors(last) {
            if *used >> w & 1 == 0 {
                *used |= 1 << w;
                path.push(w);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                *used &= !(1 << w);
            }
        }
        false
    }
    let mut path = vec![0];
    let mut used = 1u64;
    Ok(extend(g, &mut path, &mut used).then_some(path))
}
