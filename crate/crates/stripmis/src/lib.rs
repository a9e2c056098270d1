//! Exact Maximum Weight Independent Set (MWIS) solving for bounded-degree
//! graphs without long induced claws.
//!
//! The library is organized around extended strip decompositions: a pattern
//! multigraph `H` together with a map `eta` assigning host vertices to edges,
//! edge ends, vertices, and triangles of `H`. Given such a decomposition with
//! small atoms, MWIS reduces to maximum-weight matching on a small auxiliary
//! graph plus recursive calls on *particles* (bounded unions of atoms). When
//! the input instead has a small balanced separator, a standard divide and
//! conquer applies. [`solver::solve_mwis`] glues both cases together and
//! falls back to brute force so that it is total on every input.
//!
//! Module map:
//! - [`graph`]: weighted undirected graphs, vertex sets, separations, the
//!   text file format.
//! - [`pattern`]: induced subdivided-claw detection and induced trees through
//!   terminal sets.
//! - [`esd`]: extended strip decompositions, validation, atoms, particles.
//! - [`matching`]: exact maximum-weight matching (blossom) with a brute-force
//!   oracle.
//! - [`reduction`]: the decomposition-to-matching reduction.
//! - [`solver`]: the recursive solver and decomposition providers.
//! - [`testkit`]: oracles and instance generators used by tests and the CLI.

pub mod esd;
pub mod graph;
pub mod matching;
pub mod pattern;
pub mod reduction;
pub mod solver;
pub mod testkit;
