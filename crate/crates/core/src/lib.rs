#![no_std]
//! Exact classical link invariants computed from combinatorial diagrams.
//!
//! ```
//! use knotinv_core::diagram::torus2;
//! use knotinv_core::goeritz::{link_determinant, signature_and_nullity};
//! use knotinv_core::poly::potential_bundle;
//! use knotinv_core::seifert::seifert_matrix;
//!
//! let trefoil = torus2(3);
//! assert_eq!(signature_and_nullity(&trefoil).sigma, -2);
//! assert_eq!(link_determinant(&trefoil).to_string(), "-3");
//! let v = seifert_matrix(&trefoil).unwrap().v;
//! assert_eq!(potential_bundle(&v).unwrap().conway.poly.render("z"), "1 + z^2");
//! ```

extern crate alloc;

pub mod catalog;
pub mod diagram;
pub mod formats;
pub mod gauss;
pub mod goeritz;
pub mod graph;
pub mod laurent;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod qa;
pub mod realroots;
pub mod seifert;
pub mod signature;
pub mod ring;
mod util;
