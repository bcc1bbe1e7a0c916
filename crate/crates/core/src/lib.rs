//! Cyclic constructions of (k+1, k)-Turán families over `Z_n`.
//!
//! * [`count`]: exact weighted counts of bounded compositions, closed form
//!   and enumeration oracle.
//! * [`cyclic`]: the shifted families `L_j`, gap profiles, cover witnesses
//!   and the block-partition construction.
//! * [`verify`]: exhaustive and witness-guided coverage checks, occurrence
//!   counts and the averaging bound.
//! * [`numerics`]: quadrature for the bound constants and the competing
//!   bound formulas.
//! * [`report`]: table generation behind the `turan` CLI.

pub mod caps;
pub mod count;
pub mod cyclic;
pub mod error;
pub mod numerics;
pub mod report;
pub mod verify;

pub use caps::SizeCaps;
pub use count::{CompositionSpace, CountValue};
pub use cyclic::{CyclicSubset, GapProfile, Provenance, TuranFamily};
pub use error::{Error, Result};
pub use numerics::{BoundRow, QuadratureConfig};
pub use verify::{VerificationReport, VerifyMode};
