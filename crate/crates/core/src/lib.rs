//! Exact computation of spin fake degrees for Weyl groups.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation on immutable values: root systems, Weyl group enumeration,
//! the Clifford-algebra double cover, spin character tables and the spin
//! Molien formula. File formats and the command line live in the `sfd` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cover;
pub mod error;
pub mod exact;
pub mod molien;
pub mod rootsystem;
pub mod spinchar;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsystem::{CartanType, Family, RootSystem};
