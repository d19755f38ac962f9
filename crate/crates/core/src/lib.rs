//! Closed-set hyperspaces of finite topological spaces and their limit-set subspaces.
//!
//! The crate builds the hyperspaces `F(X)`, `F'(X)`, `L(X)`, `L'(X)` and
//! `ML(X)` of a finite space, equips them with the lower semifinite and Fell
//! topologies, and checks the known structural theorems about them by
//! exhaustive enumeration.

pub mod cli;
pub mod error;
pub mod finspace;
pub mod hyperspace;
pub mod io;
pub mod limitsets;
pub mod theorems;

pub use error::{Error, Result};
pub use finspace::{FinTopSpace, PointSet};
