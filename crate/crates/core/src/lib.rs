//! Exact enumeration of contracted Grassmannian and plabic trees and forests
//! by boundary size, helicity and momentum-amplituhedron dimension.
//!
//! The crate has three layers. [`ring`] and [`series`] give truncated power
//! series over `Q[y, q]` with composition and reversion; [`transforms`] and
//! [`genfun`] build the generating functions on top of them; [`oracle`] and
//! [`permutations`] enumerate the underlying objects directly so that every
//! coefficient can be checked by brute force.

pub mod checks;
pub mod cli;
pub mod error;
pub mod genfun;
pub mod oracle;
pub mod permutations;
pub mod relations;
pub mod ring;
pub mod series;
pub mod table;
pub mod transforms;

pub use error::{Error, Result};
pub use genfun::{Family, GFKind, GfTables};
pub use ring::{BivarPoly, Rational};
pub use series::TruncSeries;
