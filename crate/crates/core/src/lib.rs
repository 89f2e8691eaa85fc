//! Exact enumerative combinatorics around the Aztec diamond.
//!
//! The crate is organised bottom-up:
//!
//! * [`schroeder`]: Schröder steps and paths, the large and small Schröder
//!   numbers, and exhaustive path generation.
//! * [`hankel`]: Hankel matrices over arbitrary-precision integers, exact
//!   fraction-free determinants, and sequence reconstruction from a pair of
//!   Hankel determinant profiles.
//! * [`lgv`]: non-intersecting path families, the framing bijections between
//!   them, and the tail-swapping sign-reversing involution behind the
//!   Lindström–Gessel–Viennot determinant evaluation.
//! * [`aztec`]: the Aztec diamond region, brute-force domino tiling
//!   enumeration, and the bijection between tilings and non-intersecting
//!   families of large Schröder paths.
//!
//! All counts are [`BigCount`]s; nothing in the crate rounds or overflows.

pub mod aztec;
mod error;
pub mod hankel;
pub mod lgv;
pub mod schroeder;

pub use error::{Error, Result};
pub use schroeder::BigCount;

/// `2^e` as an exact integer.
pub fn pow2(e: u64) -> BigCount {
    BigCount::from(1u8) << e
}

/// Serialize a big integer as a JSON decimal string so that no consumer ever
/// sees a lossy float.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}
