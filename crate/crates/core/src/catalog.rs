//! JSON-lines catalogs of generated codes.
//!
//! Rows are written 1-indexed and columns 0-indexed, as in the `r'c` text
//! form. One-dimensional positions are written 1-indexed.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::code1d::OneDimCode;
use crate::error::{Error, Result};
use crate::generator::Candidate;
use crate::matrix::{Cell, MatrixCode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneDimRecord {
    pub id: usize,
    pub n: u32,
    pub w: u32,
    pub dop: Vec<u32>,
    pub wpr: Vec<u32>,
    pub bits: String,
}

impl OneDimRecord {
    pub fn new(id: usize, code: &OneDimCode) -> Self {
        OneDimRecord {
            id,
            n: code.length(),
            w: code.weight(),
            dop: code.dop(),
            wpr: code.positions().iter().map(|p| p + 1).collect(),
            bits: code.bit_string(),
        }
    }

    pub fn to_code(&self) -> Result<OneDimCode> {
        let code = OneDimCode::from_dop(&self.dop)?;
        if code.length() != self.n || code.weight() != self.w {
            return Err(Error::Malformed(format!("record {} is inconsistent", self.id)));
        }
        Ok(code)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub id: usize,
    #[serde(rename = "L")]
    pub rows: u32,
    #[serde(rename = "N")]
    pub columns: u32,
    pub w: u32,
    pub wpr: Vec<[u32; 2]>,
    pub dopr: Vec<[u32; 2]>,
    pub lambda_a: u32,
}

impl MatrixRecord {
    pub fn new(id: usize, candidate: &Candidate) -> Self {
        let code = &candidate.code;
        MatrixRecord {
            id,
            rows: code.rows(),
            columns: code.columns(),
            w: code.weight(),
            wpr: code.wpr().iter().map(|c| [c.row + 1, c.column]).collect(),
            dopr: code.dopr().iter().map(|e| [e.row + 1, e.gap]).collect(),
            lambda_a: candidate.lambda_a,
        }
    }

    /// Rebuilds the code from the `wpr` field.
    pub fn to_code(&self) -> Result<MatrixCode> {
        let cells = self
            .wpr
            .iter()
            .map(|&[r, c]| {
                r.checked_sub(1)
                    .map(|r| Cell::new(r, c))
                    .ok_or_else(|| Error::Malformed("rows are numbered from 1".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let code = MatrixCode::from_cells(self.rows, self.columns, cells)?;
        if code.weight() != self.w {
            return Err(Error::Malformed(format!("record {} is inconsistent", self.id)));
        }
        Ok(code)
    }
}

pub fn write_jsonl<W, T, I>(mut out: W, records: I) -> io::Result<usize>
where
    W: Write,
    T: Serialize,
    I: IntoIterator<Item = T>,
{
    let mut count = 0;
    for record in records {
        serde_json::to_writer(&mut out, &record)?;
        out.write_all(b"\n")?;
        count += 1;
    }
    out.flush()?;
    Ok(count)
}

pub fn read_jsonl<R, T>(input: R) -> io::Result<Vec<T>>
where
    R: BufRead,
    T: for<'de> Deserialize<'de>,
{
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| {
            let l = l?;
            serde_json::from_str(&l).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
        })
        .collect()
}
