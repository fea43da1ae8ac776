//! Exact Kazhdan-Lusztig combinatorics for the Hecke algebra of the
//! symmetric group: KL and dual-KL bases, the mu-function, gamma structure
//! constants, Robinson-Schensted cells, and a scanner that verifies the
//! stabilization of dual-KL expansions of `^H_x _H_y` across ranks.

pub mod error;
pub mod hecke;
pub mod kl;
pub mod laurent;
pub mod rsk;
pub mod stab;
pub mod symgroup;

pub use error::{Error, Result};
