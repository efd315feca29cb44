//! Exact Legendrian and transverse invariants of iterated torus knots,
//! their cables and connected sums, with the Farey-graph arithmetic needed
//! to compute them.

pub mod atlas;
pub mod cable;
pub mod cli;
pub mod error;
pub mod framing;
pub mod parse;
pub mod presentation;
pub mod render;
pub mod slope;
pub mod trefoil_cable;

pub use atlas::{
    classify, mountain_range, transverse, Classification, KnotExpr, MountainRange, Shape, Utp,
    Width,
};
pub use error::{Error, Hypothesis, Result};
pub use framing::CableParams;
pub use parse::{parse, ParseError};
pub use presentation::{StabPresentation, TransverseClassification};
pub use slope::{
    det, farey_distance, farey_path, floor_gap, is_farey_neighbor, reduce, Slope, TorusMatrix,
};
