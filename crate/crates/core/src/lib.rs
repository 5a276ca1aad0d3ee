//! Symmetric-group quotients of knot groups computed from diagrams.
//!
//! The crate builds oriented knot diagrams (from braids, PD codes, or level-by-level
//! plat descriptions), extracts Wirtinger presentations, searches for colorings of arcs
//! by transpositions or 3-cycles, computes permutation numbers and Fox coloring spaces,
//! rewrites clasp sections while keeping a coloring, and computes homology and linking
//! numbers of irregular 3-fold dihedral branched covers.

pub mod braid;
pub mod coloring;
pub mod covers;
pub mod diagram;
pub mod error;
pub mod knots;
pub mod linalg;
pub mod morse;
pub mod paths;
pub mod perm;
pub mod presentation;
pub mod snf;

pub use braid::BraidWord;
pub use diagram::{braid_closure, PlanarDiagram};
pub use error::{Error, Result};
