//! Independence polynomials of trees.
//!
//! Computes independence polynomials of trees exactly, decides symmetry,
//! unimodality and gamma-positivity, composes rooted trees by bridging,
//! enumerates all free trees of a given order and classifies them, and builds
//! witness trees with symmetric unimodal independence polynomials for every
//! order and degree where one exists.

pub mod classify;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod polynomial;
pub mod tree;
pub mod verify;

pub use polynomial::{GammaDecomposition, IntPolynomial, PolyError};
pub use tree::{Forest, RootedTree, Tree, TreeError};
