//! Exact-arithmetic toolkit for cut-based LP relaxations of k-edge-connected
//! spanning subgraph and multi-subgraph problems.
//!
//! Everything here computes over arbitrary-precision rationals: the cut LPs
//! and their cutting-plane solver, the Fibonacci-valued extreme points of the
//! degree-bounded cut relaxation together with their extremeness certificates,
//! small-graph extreme-point enumeration, Hamiltonian-cycle domination gaps,
//! the path-cover / set-cover reduction gadgets, metric 2-ECSM conversion, and
//! edge-partition (splitting) searches. No floating point is used in any
//! decision or output.

pub mod cutlp;
pub mod extreme;
pub mod gap;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod metric;
pub mod rational;
pub mod reductions;
pub mod simplex;
pub mod split;

pub use cutlp::{CutLp, CutLpSolution, FractionalSolution, LpVariant};
pub use graph::{CutSet, MultiEdge, MultiGraph, VertexId};
pub use matrix::{RationalMatrix, SolveOutcome};
pub use rational::Rational;
pub use simplex::{LinearConstraint, LpOutcome, LpStatus, Sense};
