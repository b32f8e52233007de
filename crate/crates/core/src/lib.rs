pub mod audit;
pub mod cli;
pub mod error;
pub mod exact;
pub mod frac;
pub mod graph;
pub mod haemers;
pub mod theta;
pub mod value;

pub use error::{Error, Result};
pub use graph::Graph;
pub use value::{Rational, Value};
