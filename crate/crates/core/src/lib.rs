//! Finite gyrogroups, their power graphs, and exact graph invariants.
//!
//! The crate builds gyrogroups from Cayley tables (including the order-`2^n`
//! family `G(n)`), constructs power graphs, and computes distance-based
//! polynomials, resolving sets, characteristic polynomials, spectral radii,
//! planarity and Hamiltonicity certificates, and isomorphisms.

#![forbid(unsafe_code)]

pub mod boundary;
pub mod distance;
pub mod error;
pub mod graph;
pub mod gyro;
pub mod hamiltonian;
pub mod hosoya;
pub mod isomorphism;
pub mod permutation;
pub mod planarity;
pub mod poly;
pub mod resolving;
pub mod spectral;
pub mod table_io;

pub use error::{Error, Result};
pub use graph::{power_graph, Graph, Vertex};
pub use gyro::{Element, GyroGroup};
pub use permutation::Permutation;
pub use poly::IntPolynomial;
