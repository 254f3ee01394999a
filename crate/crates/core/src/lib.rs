//! Fully coprime spectra of finite modules and their dual Zariski topology.
//!
//! Everything is computed by exhaustive enumeration over finite structures:
//! rings and modules are given by cyclic additive presentations, submodule
//! lattices and endomorphism rings are enumerated, and the spectrum, its
//! topology and the associated theorems are checked directly.

pub mod analysis;
pub mod catalog;
pub mod endo;
pub mod error;
pub mod group;
pub mod fuzz;
pub mod hom;
pub mod lattice;
pub mod module;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod ring;
pub mod snf;
pub mod spectrum;
pub mod topology;
pub mod verifier;

pub use error::{Bounds, Error, Result};
pub use module::{FiniteModule, ModuleElement};
pub use ring::FiniteRing;
pub use lattice::{enumerate_submodules, Submodule, SubmoduleLattice};
pub use endo::{EndoIdeal, EndoRing, Endomorphism, Side, Sidedness};
pub use hom::{hom_set, HomSet};
pub use analysis::Analysis;
pub use spectrum::{ClassPredicates, MinProperty, Spectrum, SpectrumPoint};
pub use topology::{FiniteSpace, Outcome, SpectrumSpace, TopologyKind};
pub use fuzz::{fuzz, FuzzConfig};
pub use verifier::{run_all, verify_module, TheoremCheck, Verdict, VerificationReport, VerifyConfig};
