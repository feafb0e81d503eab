//! Exact graph toughness: computation, minimal-toughness decisions with
//! edge witnesses, class recognition, family generators and exhaustive
//! verification sweeps over small graphs.

pub mod classes;
pub mod cli;
pub mod families;
pub mod minimal;
pub mod error;
pub mod graph;
pub mod harness;
pub mod rational;
pub mod subsets;
pub mod toughness;

pub use error::{Error, ParseError, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use rational::{parse_rational, Rational};
pub use toughness::{toughness, Toughness, ToughnessValue, WitnessSet};
