//! Exact root systems, Dynkin indices and principal `sl2` computations for
//! simple Lie algebras.
//!
//! Everything is computed with integers and arbitrary-precision rationals;
//! no floating point is used anywhere.

pub mod cartan;
pub mod error;
pub mod linalg;
pub mod principal;
pub mod rational;
pub mod reps;
pub mod rootsys;
pub mod verify;

pub use cartan::{CartanMatrix, Family, SimpleType};
pub use error::{Error, Result};
pub use principal::{IndexReport, Sl2Decomposition};
pub use rational::Rational;
pub use reps::{HighestWeight, SizeGuard, WeightEntry, WeightSumMode, WeightSystem};
pub use rootsys::{BilinearForm, Normalization, Root, RootSystem, Weight};
pub use verify::{CheckOptions, CheckResult, IdentityId, Outcome};
