//! Approximation algorithms for min-diameter and bichromatic min-diameter of
//! directed acyclic graphs, with an exact oracle and instance generators.

pub mod bichromatic;
pub mod cover;
pub mod generators;
pub mod graph;
pub mod mindiam;
pub mod oracle;
mod util;

pub use graph::{
    Color, ColorAssignment, DiGraph, Direction, Distance, GraphError, Neighbor, TopoOrder,
};
