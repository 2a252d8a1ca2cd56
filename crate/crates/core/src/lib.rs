//! Exact computations with Artinian local algebras `k[x_1..x_n]/b`:
//! canonical modules, self-dual ideals, Gorenstein covers and bounds on the
//! Gorenstein colength.

pub mod artin;
pub mod cli;
pub mod construct;
pub mod duality;
pub mod error;
pub mod exactalg;
pub mod oracle;
pub mod polyring;

pub use error::{Error, Result};
