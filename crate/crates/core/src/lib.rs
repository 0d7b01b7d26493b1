//! Greedoids at desk scale, in exact arithmetic.
//!
//! Every greedoid is materialized (at most 20 elements), so structural
//! properties, greedy optimality conditions, polyhedral certificates and game
//! values can all be checked exhaustively against brute force.

pub mod axioms;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod graph;
pub mod greedoid;
pub mod greedy;
pub mod ground;
pub mod instance;
pub mod paths;
pub mod polyhedra;
pub mod rational;
pub mod simplex;
pub mod subset;

pub use error::{Error, Result};
pub use graph::MixedGraph;
pub use greedoid::{Greedoid, Minor};
pub use ground::GroundSet;
pub use rational::Rational;
pub use subset::SubsetMask;
