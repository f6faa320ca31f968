//! Definition-level enumeration of noncrossing partitions, Schröder trees,
//! planar forests, Grassmannian decorations and polygon dissections.
//!
//! Everything here is brute force by design: it is the independent ground
//! truth that the generating functions are checked against.

pub mod count;
pub mod dissection;
pub mod forest;
pub mod nc;
pub mod schroeder;

pub use count::{count_by_statistics, Histogram, OracleConfig, DEFAULT_BUDGET};
pub use dissection::{enumerate_dissections, Dissection};
pub use forest::{
    decorate_grassmannian, enumerate_forests, enumerate_trees, for_each_decoration, GrassForest,
    PlanarForest, VertexColor,
};
pub use nc::{enumerate_nc_partitions, NcPartition};
pub use schroeder::{enumerate_schroeder, SchroederTree};
