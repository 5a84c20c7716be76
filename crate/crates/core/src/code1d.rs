//! One-dimensional cyclic constant-weight codes.
//!
//! A code of length `n` and weight `w` is described either by the sorted set
//! of its one-positions or by its DoP tuple `(a_1, ..., a_w)`, the circular
//! gaps between consecutive one-positions. Gaps are positive and sum to `n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Converts a DoP tuple into the sorted one-positions of a word of length `n`.
///
/// The first one sits at position 0 and each following position is the
/// previous one plus the corresponding gap, modulo `n`.
pub fn dop_to_positions(dop: &[u32], n: u32) -> Result<Vec<u32>> {
    if dop.is_empty() {
        return Err(Error::Malformed("empty DoP tuple".into()));
    }
    if let Some(i) = dop.iter().position(|&a| a == 0) {
        return Err(Error::Malformed(format!("gap {} is zero", i + 1)));
    }
    let sum: u64 = dop.iter().map(|&a| u64::from(a)).sum();
    if sum != u64::from(n) {
        return Err(Error::Malformed(format!(
            "gap sum {sum} does not equal the code length {n}"
        )));
    }
    let mut positions = Vec::with_capacity(dop.len());
    let mut p = 0u32;
    for &a in dop {
        positions.push(p);
        p = (p + a) % n;
    }
    positions.sort_unstable();
    Ok(positions)
}

/// Circular differences between consecutive sorted positions, starting from
/// the smallest position.
pub fn positions_to_dop(positions: &[u32], n: u32) -> Result<Vec<u32>> {
    let sorted = checked_positions(positions, n)?;
    let w = sorted.len();
    let mut dop = Vec::with_capacity(w);
    for i in 0..w {
        let next = if i + 1 < w { sorted[i + 1] } else { sorted[0] + n };
        dop.push(next - sorted[i]);
    }
    Ok(dop)
}

fn checked_positions(positions: &[u32], n: u32) -> Result<Vec<u32>> {
    if positions.is_empty() {
        return Err(Error::Malformed("empty position set".into()));
    }
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    if let Some(&p) = sorted.iter().find(|&&p| p >= n) {
        return Err(Error::Malformed(format!(
            "position {p} outside [0, {}]",
            n.saturating_sub(1)
        )));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Malformed("repeated position".into()));
    }
    Ok(sorted)
}

/// Canonical rotation of a DoP tuple: among the rotations whose last gap is
/// maximal, the lexicographically smallest one.
pub fn canonical_rotation(dop: &[u32]) -> Vec<u32> {
    let w = dop.len();
    let Some(&max) = dop.iter().max() else {
        return Vec::new();
    };
    (0..w)
        .filter(|&i| dop[i] == max)
        // rotation ending at index i starts at i + 1
        .map(|i| rotated(dop, (i + 1) % w))
        .min()
        .expect("at least one gap attains the maximum")
}

/// True when `dop` already is its own canonical rotation.
pub fn is_canonical(dop: &[u32]) -> bool {
    let w = dop.len();
    if w == 0 {
        return false;
    }
    let max = *dop.iter().max().unwrap();
    if dop[w - 1] != max {
        return false;
    }
    (0..w - 1)
        .filter(|&i| dop[i] == max)
        .all(|i| rotation_cmp(dop, (i + 1) % w).is_ge())
}

fn rotated(dop: &[u32], start: usize) -> Vec<u32> {
    dop[start..].iter().chain(&dop[..start]).copied().collect()
}

/// Compares the rotation of `dop` starting at `start` against `dop` itself.
fn rotation_cmp(dop: &[u32], start: usize) -> std::cmp::Ordering {
    let w = dop.len();
    (0..w)
        .map(|k| dop[(start + k) % w])
        .cmp(dop.iter().copied())
}

/// A cyclic constant-weight binary word of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneDimCode {
    length: u32,
    positions: Vec<u32>,
}

impl OneDimCode {
    /// Builds the code whose first one sits at position 0 and whose gaps are
    /// `dop`. The code length is the gap sum.
    pub fn from_dop(dop: &[u32]) -> Result<Self> {
        let n: u64 = dop.iter().map(|&a| u64::from(a)).sum();
        let n = u32::try_from(n).map_err(|_| Error::Params("code length overflows u32".into()))?;
        let positions = dop_to_positions(dop, n)?;
        Ok(OneDimCode {
            length: n,
            positions,
        })
    }

    pub fn from_positions(positions: &[u32], n: u32) -> Result<Self> {
        let positions = checked_positions(positions, n)?;
        Ok(OneDimCode {
            length: n,
            positions,
        })
    }

    #[inline]
    pub fn length(&self) -> u32 {
        self.length
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.positions.len() as u32
    }

    /// Sorted 0-indexed one-positions.
    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    /// Gap tuple read from the smallest position onwards.
    pub fn dop(&self) -> Vec<u32> {
        positions_to_dop(&self.positions, self.length).expect("validated on construction")
    }

    pub fn canonical_dop(&self) -> Vec<u32> {
        canonical_rotation(&self.dop())
    }

    pub fn bits(&self) -> Vec<bool> {
        let mut bits = vec![false; self.length as usize];
        for &p in &self.positions {
            bits[p as usize] = true;
        }
        bits
    }

    /// Bit vector as a `0`/`1` string.
    pub fn bit_string(&self) -> String {
        self.bits().iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}
