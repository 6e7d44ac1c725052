//! Exact multiplicities of irreducible representations of compact simply
//! connected Lie groups in `L²(Γ\G)` for finite subgroups `Γ`.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: root systems, Weyl groups and weight-lattice arithmetic.
//! - [`cyclo`]: exact arithmetic in `ℚ(ζ_q)` and over `ℚ[x]`.
//! - [`repthy`]: Weyl dimension, Freudenthal weight multiplicities and the
//!   weight-sum character oracle.
//! - [`subgroup`]: torus elements, finite subgroups given by torus
//!   representatives, centralizer data and the singular-element character
//!   formula; invariant dimensions `n_Γ(π)`.
//! - [`genfun`]: strings `Λ₀ + kω` and their generating functions
//!   `p(z) / (1 − z^q)^{N+1}`, both by truncation and in closed form.
//! - [`reconstruct`]: recovering a whole string of multiplicities from a
//!   finite window of samples, and comparing two subgroups.
//! - [`spherical`]: finite unions of strings and the family-wide
//!   equivalence driver.
//! - [`descriptor`]: JSON wire formats shared with the command-line tool.

pub mod cyclo;
pub mod descriptor;
mod error;
pub mod genfun;
pub mod linalg;
pub mod reconstruct;
pub mod repthy;
pub mod rootsys;
pub mod spherical;
pub mod subgroup;

pub use error::{Error, ErrorClass, Result};

pub use cyclo::{CycloNumber, RationalFunction, RationalPoly};
pub use genfun::{RationalGF, StringSpec};
pub use reconstruct::{ReconstructionReport, SampleWindow, Verdict};
pub use repthy::WeightMultiplicityTable;
pub use rootsys::{RootSystemData, Series, Weight};
pub use spherical::StringFamily;
pub use subgroup::{Backend, CentralizerData, FiniteSubgroupData, TorusElement};
