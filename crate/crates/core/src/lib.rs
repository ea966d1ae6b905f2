//! Exact computations with the Moebius band tree of one-sided surface slopes
//! in a solid torus or torus x I, and a decision procedure for embedded
//! quadrilateral discs in once-punctured torus bundles.
//!
//! - [`slope`]: reduced slopes, tree vertices, determinants, Farey parents,
//!   unimodular coordinate changes.
//! - [`tree`]: parent descent, genus, geodesics, neighbours, branch classes.
//! - [`oracle`]: brute-force finite boxes of the tree and invariant checks.
//! - [`collar`]: compression, band addition, band and region decompositions.
//! - [`bundle`]: monodromy forms and the quadrilateral disc verdict.
//! - [`cli`]: text formats, exports and the command-line front end.

pub mod bundle;
pub mod cli;
pub mod collar;
pub mod error;
mod forms;
pub mod oracle;
pub mod slope;
pub mod tree;

pub use error::{Error, Result};
