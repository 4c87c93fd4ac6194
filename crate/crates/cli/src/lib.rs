//! File formats and report assembly for the `qhg` command line tool.
//!
//! Scalars serialize as exact fraction strings (`"a/b"`, `b` omitted when 1)
//! or `{"re": "a/b", "im": "c/d"}` for Gaussian rationals; plain JSON
//! integers are accepted as input shorthand. Decimals are rejected:
//! round-trips are lossless by construction.

pub mod report;
pub mod schema;

use sha2::{Digest, Sha256};

/// Hex SHA-256 of the raw input bytes, recorded in every report.
pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in out {
        hex.push_str(&format!("{b:02x}"));
    }
    hex
}
