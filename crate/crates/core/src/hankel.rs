//! Hankel matrices of integer sequences and their exact determinants.
//!
//! `build_hankel(seq, offset, n)` has `(i, j)` entry `seq[i + j + offset - 2]`
//! (1-based `i`, `j`). With the Schröder sequences this yields the four
//! matrices tracked here: `H1`/`G1` (offset 1, large/small) and `H0`/`G0`
//! (offset 0, large/small).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::schroeder::{large_schroeder_sequence, small_schroeder_sequence, BigCount};
use crate::{pow2, Error, Result};

/// The four Schröder Hankel matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HankelKind {
    H1,
    G1,
    H0,
    G0,
}

impl HankelKind {
    pub const ALL: [HankelKind; 4] = [HankelKind::H1, HankelKind::G1, HankelKind::H0, HankelKind::G0];

    pub fn offset(self) -> usize {
        match self {
            HankelKind::H1 | HankelKind::G1 => 1,
            HankelKind::H0 | HankelKind::G0 => 0,
        }
    }

    pub fn uses_large(self) -> bool {
        matches!(self, HankelKind::H1 | HankelKind::H0)
    }

    /// The Schröder sequence the matrix is built from, long enough for order `n`.
    pub fn sequence(self, n: usize) -> Vec<BigCount> {
        let len = 2 * n - 1 + self.offset();
        if self.uses_large() {
            large_schroeder_sequence(len)
        } else {
            small_schroeder_sequence(len)
        }
    }
}

impl fmt::Display for HankelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HankelKind::H1 => "h1",
            HankelKind::G1 => "g1",
            HankelKind::H0 => "h0",
            HankelKind::G0 => "g0",
        })
    }
}

impl FromStr for HankelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "h1" => Ok(HankelKind::H1),
            "g1" => Ok(HankelKind::G1),
            "h0" => Ok(HankelKind::H0),
            "g0" => Ok(HankelKind::G0),
            other => Err(Error::Domain(format!("unknown Hankel kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceTag {
    Kind(HankelKind),
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelMatrix {
    rows: Vec<Vec<BigCount>>,
    offset: usize,
    source: SourceTag,
}

/// Hankel matrix of order `n` over `seq` with the given offset (0 or 1).
pub fn build_hankel(seq: &[BigCount], offset: usize, n: usize) -> Result<HankelMatrix> {
    if offset > 1 {
        return Err(Error::Domain(format!("Hankel offset must be 0 or 1, got {offset}")));
    }
    if n == 0 {
        return Err(Error::Domain("Hankel order must be positive".into()));
    }
    let required = 2 * n - 1 + offset;
    if seq.len() < required {
        return Err(Error::InsufficientTerms {
            required,
            available: seq.len(),
        });
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| seq[i + j + offset].clone()).collect())
        .collect();
    Ok(HankelMatrix {
        rows,
        offset,
        source: SourceTag::Custom,
    })
}

impl HankelMatrix {
    pub fn of_kind(kind: HankelKind, n: usize) -> Result<Self> {
        let mut m = build_hankel(&kind.sequence(n.max(1)), kind.offset(), n)?;
        m.source = SourceTag::Kind(kind);
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn source(&self) -> SourceTag {
        self.source
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &BigCount {
        &self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }

    pub fn determinant(&self) -> BigCount {
        determinant(&self.rows)
    }

    /// Row-major decimal strings.
    pub fn to_decimal_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|v| v.to_str_radix(10)).collect())
            .collect()
    }
}

impl Serialize for HankelMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_rows().serialize(s)
    }
}

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every division is exact; a column without a nonzero pivot
/// makes the determinant zero.
pub fn determinant(rows: &[Vec<BigCount>]) -> BigCount {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigCount::one();
    }
    let mut m = rows.to_vec();
    let mut negate = false;
    let mut prev = BigCount::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigCount::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `2^{n(n+1)/2}` for `H1`, `2^{n(n-1)/2}` for the other three.
pub fn closed_form(kind: HankelKind, n: usize) -> BigCount {
    let n = n as u64;
    match kind {
        HankelKind::H1 => pow2(n * (n + 1) / 2),
        _ => pow2(n * n.saturating_sub(1) / 2),
    }
}

/// Recover `c_0, …, c_{len-1}` from its Hankel determinant profiles
/// `d0[k-1] = det H⁽⁰⁾_k` and `d1[k-1] = det H⁽¹⁾_k`.
///
/// Terms are solved in the order `c_0, c_1, c_2, …`, consuming
/// `d0[0], d1[0], d0[1], d1[1], …`. The determinant of order `k` is affine in
/// its bottom-right entry, which is the newest term, with slope equal to the
/// determinant of order `k - 1` of the same profile (1 when `k = 1`).
pub fn reconstruct_sequence(d0: &[BigCount], d1: &[BigCount], len: usize) -> Result<Vec<BigCount>> {
    let need0 = len.div_ceil(2);
    let need1 = len / 2;
    if d0.len() < need0 {
        return Err(Error::InsufficientTerms {
            required: need0,
            available: d0.len(),
        });
    }
    if d1.len() < need1 {
        return Err(Error::InsufficientTerms {
            required: need1,
            available: d1.len(),
        });
    }
    let mut seq: Vec<BigCount> = Vec::with_capacity(len);
    for index in 0..len {
        let offset = index % 2;
        let k = index / 2 + 1;
        let profile = if offset == 0 { d0 } else { d1 };
        let slope = if k == 1 {
            BigCount::one()
        } else {
            profile[k - 2].clone()
        };
        if slope.is_zero() {
            return Err(Error::IllPosedProfile { index });
        }
        seq.push(BigCount::zero());
        let base = build_hankel(&seq, offset, k)?.determinant();
        let (term, rem) = (&profile[k - 1] - base).div_rem(&slope);
        if !rem.is_zero() {
            return Err(Error::InconsistentProfile { index });
        }
        seq[index] = term;
    }
    Ok(seq)
}
