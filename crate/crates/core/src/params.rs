use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions and weight of an `L x N` matrix code.
///
/// `rows` is the number of wavelengths (L), `columns` the number of time
/// slots (N). The flattened one-dimensional word length is `L * N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeParams {
    #[serde(rename = "L")]
    rows: u32,
    #[serde(rename = "N")]
    columns: u32,
    #[serde(rename = "w")]
    weight: u32,
}

impl CodeParams {
    pub fn new(rows: u32, columns: u32, weight: u32) -> Result<Self> {
        if rows == 0 || columns == 0 {
            return Err(Error::Params(format!(
                "L and N must be at least 1 (got L={rows}, N={columns})"
            )));
        }
        let cells = u64::from(rows) * u64::from(columns);
        if cells > u64::from(u32::MAX) {
            return Err(Error::Params(format!("L*N = {cells} is too large")));
        }
        if weight == 0 || u64::from(weight) > cells {
            return Err(Error::Params(format!(
                "weight must satisfy 1 <= w <= L*N = {cells} (got w={weight})"
            )));
        }
        Ok(CodeParams {
            rows,
            columns,
            weight,
        })
    }

    #[inline]
    pub fn rows(&self) -> u32 {
        self.rows
    }

    #[inline]
    pub fn columns(&self) -> u32 {
        self.columns
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Length of the equivalent one-dimensional word, `n = L * N`.
    #[inline]
    pub fn length(&self) -> u32 {
        self.rows * self.columns
    }

    /// True when both codes live in the same `L x N` grid.
    pub fn same_grid(&self, other: &CodeParams) -> bool {
        self.rows == other.rows && self.columns == other.columns
    }
}
