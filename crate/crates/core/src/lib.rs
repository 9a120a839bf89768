//! Construction and verification of sesqui-arrays and triple arrays.
//!
//! An r×c array over v letters is checked against the five classical
//! conditions: binary rows and columns (A0), equal replication (A1),
//! balanced rows (A2), balanced columns (A3) and adjusted orthogonality (A4).
//! Three constructions are provided:
//!
//! * [`latin`]: (n+1)×n² sesqui-arrays on n(n+1) letters from Latin squares;
//! * [`sylvester`]: a 7×36 sesqui-array on 42 letters whose column design is
//!   built from the Sylvester graph inside the Hoffman–Singleton graph;
//! * [`biplane`]: K×(V−K) arrays on K(K−1)/2 letters from a block of a biplane,
//!   via Hussain chains.
//!
//! [`optimality`] computes canonical efficiency factors and the A/D/E criteria
//! for the component designs of an array.

pub mod arrays;
pub mod biplane;
pub mod designs;
mod error;
pub mod format;
pub mod graph;
pub mod latin;
pub mod matrix;
pub mod optimality;
pub mod sylvester;

pub use arrays::{ArrayKind, Classification, Conditions, IncidenceSummary, LetterArray};
pub use designs::{AbelianGroup, BlockDesign};
pub use error::{Error, Result};
pub use matrix::IntegerMatrix;
