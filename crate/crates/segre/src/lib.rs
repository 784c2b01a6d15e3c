//! Exact symbolic computation of beta-deformed (connective) motivic Segre
//! and Chern classes of Schubert cells via fixed-point localization, their
//! structure constants by operator recursion and by Knutson-Tao puzzle
//! enumeration, and the full identity suite of the underlying lattice model
//! (Yang-Baxter, bootstrap, unitarity, quantum-group intertwiners, GKM
//! divisibility) over an exact rational-function field.

pub mod classes;
pub mod gkm;
pub mod lattice;
pub mod puzzles;
pub mod qgroup;
pub mod report;
pub mod rmatrices;
pub mod sym;
pub mod weyl;

#[doc(hidden)]
pub mod testutil;

pub use sym::{Polynomial, RationalFunction, SymError, SymbolicMatrix, VariableTable};
