//! Root combinatorics for adjoint orbits of non-compact real simple Lie groups.
//!
//! Everything here is exact: root systems are generated from Cartan data,
//! inner products are rational, and every quantity attached to an orbit
//! (Chern-Ricci vector, Hermitian scalar curvature, Nijenhuis norm, real form,
//! stabilizer) is computed from the painted Dynkin diagram and a dominant
//! weight alone.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use vogan_core::{DynkinType, RootSystem, VoganDiagram, RootData, enumerate_special, classify};
//!
//! let rs = RootSystem::new("F4".parse::<DynkinType>().unwrap());
//! let vd = VoganDiagram::new(rs.dtype(), &[2]).unwrap();
//! let rd = RootData::new(&rs, &vd).unwrap();
//! let sols = enumerate_special(&rd);
//! assert_eq!(sols.len(), 3);
//! let report = classify(&rd, &sols[0]).unwrap();
//! assert_eq!(report.herm_scal.to_string(), "120");
//! ```
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod error;
pub mod linalg;
mod nodeset;
pub mod orbit;
pub mod rational;
pub mod realform;
pub mod rootsys;
pub mod solver;
pub mod vogan;

pub use error::{Error, Result};
pub use nodeset::NodeSet;
pub use orbit::{OrbitReport, SymplecticClass};
pub use rational::Rational;
pub use realform::{Stabilizer, Summand};
pub use rootsys::{Basis, CartanMatrix, DynkinType, Letter, RootSystem, RootVec, WeightVec};
pub use solver::{classify, enumerate_special, solve_subset, verify_solution, SolutionKind, SpecialSolution};
pub use vogan::{OrbitSpec, RootData, VoganDiagram};
