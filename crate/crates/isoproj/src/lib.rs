//! Isoparametric foliations on complex projective spaces.
//!
//! Root systems, the catalog of inner compact symmetric pairs, admissible
//! complex structures and their congruence classes, FKM Clifford families,
//! and the per-dimension census.

pub mod census;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod fkmproj;
pub mod golden;
pub mod group;
pub mod rootsys;
pub mod search;
pub mod symcat;
pub mod voganproj;

pub use error::{Error, Result};
