//! Simulator and synthesis toolkit for quantum gates built from Majorana
//! rotations.
//!
//! The crate models `m` Majorana operators on the `2^{m/2}`-dimensional
//! fermionic Fock space, encodes `N` logical qubits into `N+1` fermion modes
//! through an even-parity code, and provides:
//!
//! * [`fock`]: Majorana operators, braids, many-body rotations, programs.
//! * [`encoding`]: the logical code space and restriction/embedding checks.
//! * [`catalog`]: a verified table of braid-word realizations of named
//!   gates, with per-entry replay and phase diagnostics.
//! * [`synthesis`]: Walsh-transform synthesis of diagonal gates, CnZ/CnNOT/
//!   CnSWAP constructions, and controlled-unitary decomposition.
//! * [`exact`]: integer arithmetic over the 8th cyclotomic ring for braid
//!   matrices, enabling exhaustive exact group enumeration.
//! * [`search`]: breadth-first reachability (group orders, shortest words,
//!   state orbits, and diagonal-impossibility certificates).
//!
//! Conventions: Majorana and qubit indices are 1-based; Fock basis index bit
//! `b-1` is the occupation of mode `b`; programs apply their first step
//! first. See the module docs for details.

pub mod catalog;
pub mod encoding;
pub mod error;
pub mod exact;
pub mod fock;
pub mod matrix;
pub mod program;
pub mod search;
pub mod synthesis;

pub use encoding::Encoding;
pub use error::{Error, Result};
pub use fock::FockSpace;
pub use matrix::{CMat, CVec};
pub use program::{Angle, MajoranaProgram, MajoranaStep, ProgramDocument};
