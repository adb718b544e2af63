//! Edge relations with the unique square property on finite connected
//! graphs: the relation δ and its closure, square-property checks, the
//! induced equitable vertex partitions, their quotient graphs, and the
//! Cartesian-product structure of those quotients.

pub mod dsu;
pub mod error;
pub mod factor;
pub mod fixtures;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod io;
pub mod iso;
pub mod partition;
pub mod product;
pub mod quotient;
pub mod relation;
pub mod square;
pub mod square_property;
pub mod usp;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSubset, Graph, LoopGraph, Vertex};
pub use instance::{Instance, LabeledRelation};
pub use partition::VertexPartition;
pub use relation::{ClassId, EdgeRelation};
pub use square::Square;
