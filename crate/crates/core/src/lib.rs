//! Quivers with automorphisms, folding to symmetrisable Cartan data, and
//! isomorphism classes of representations over finite fields.

pub mod cartan;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod skew;

pub use error::{Error, Result};
