//! Text form of matrix codes.
//!
//! A code is written as space-separated `r'c` tokens (WPR) or `r'd` tokens
//! (DoPR) with 1-indexed rows, e.g. `1'0 3'0 2'1 4'1 1'4 3'4 4'4`. A leading
//! `wpr:` or `dopr:` selects the representation; without a prefix the text
//! is read as WPR. Commas, parentheses and brackets are ignored.

use crate::error::{Error, Result};
use crate::matrix::{Cell, DoprEntry, MatrixCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Wpr,
    Dopr,
}

/// Grid size used when parsing; missing dimensions are inferred.
///
/// For WPR the inferred `L` is the largest row and `N` one past the largest
/// column. For DoPR `N` is the gap sum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dims {
    pub rows: Option<u32>,
    pub columns: Option<u32>,
}

impl Dims {
    pub fn new(rows: u32, columns: u32) -> Self {
        Dims {
            rows: Some(rows),
            columns: Some(columns),
        }
    }
}

pub fn parse_code(text: &str, dims: Dims) -> Result<MatrixCode> {
    let (repr, body) = split_prefix(text.trim());
    let pairs = parse_pairs(body)?;
    if pairs.is_empty() {
        return Err(Error::Parse {
            token: text.trim().to_string(),
            reason: "no `r'c` tokens found".into(),
        });
    }
    let max_row = pairs.iter().map(|&(r, _)| r).max().unwrap_or(0) + 1;
    let rows = dims.rows.unwrap_or(max_row);
    match repr {
        Representation::Wpr => {
            let max_col = pairs.iter().map(|&(_, c)| c).max().unwrap_or(0);
            let columns = dims.columns.unwrap_or(max_col + 1);
            MatrixCode::from_cells(
                rows,
                columns,
                pairs.iter().map(|&(r, c)| Cell::new(r, c)).collect::<Vec<_>>(),
            )
        }
        Representation::Dopr => {
            let sum: u64 = pairs.iter().map(|&(_, d)| u64::from(d)).sum();
            let columns = match dims.columns {
                Some(n) => n,
                None => u32::try_from(sum).map_err(|_| Error::Params("gap sum too large".into()))?,
            };
            let entries: Vec<DoprEntry> = pairs.iter().map(|&(r, d)| DoprEntry::new(r, d)).collect();
            MatrixCode::from_dopr(rows, columns, &entries)
        }
    }
}

fn split_prefix(text: &str) -> (Representation, &str) {
    let lower = text.get(..5).map(str::to_ascii_lowercase);
    if lower.as_deref() == Some("dopr:") {
        return (Representation::Dopr, &text[5..]);
    }
    let lower = text.get(..4).map(str::to_ascii_lowercase);
    if lower.as_deref() == Some("wpr:") {
        return (Representation::Wpr, &text[4..]);
    }
    (Representation::Wpr, text)
}

/// Returns 0-indexed rows paired with the second number verbatim.
fn parse_pairs(body: &str) -> Result<Vec<(u32, u32)>> {
    body.split(|c: char| c.is_whitespace() || matches!(c, ',' | '(' | ')' | '[' | ']'))
        .filter(|t| !t.is_empty())
        .map(parse_token)
        .collect()
}

fn parse_token(token: &str) -> Result<(u32, u32)> {
    let bad = |reason: &str| Error::Parse {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let (row, second) = token
        .split_once(['\'', '\u{2019}'])
        .ok_or_else(|| bad("expected `row'column`"))?;
    let row: u32 = row.parse().map_err(|_| bad("row is not a number"))?;
    let second: u32 = second.parse().map_err(|_| bad("column is not a number"))?;
    if row == 0 {
        return Err(bad("rows are numbered from 1"));
    }
    Ok((row - 1, second))
}

/// Prefixed WPR text that [`parse_code`] reads back to the same placement.
pub fn wpr_text(code: &MatrixCode) -> String {
    format!("wpr: {code}")
}

/// Prefixed DoPR text that [`parse_code`] reads back to the same code.
pub fn dopr_text(code: &MatrixCode) -> String {
    format!("dopr: {}", code.dopr_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::example_x;

    #[test]
    fn parses_wpr_with_and_without_prefix() {
        let x = example_x();
        let a = parse_code("1'0 3'0 2'1 4'1 1'4 3'4 4'4", Dims::default()).unwrap();
        let b = parse_code("wpr: (1'0, 3'0, 2'1, 4'1, 1'4, 3'4, 4'4)", Dims::default()).unwrap();
        assert_eq!(a.wpr(), x.wpr());
        assert_eq!(b.wpr(), x.wpr());
        assert_eq!((a.rows(), a.columns()), (4, 5));
    }

    #[test]
    fn parses_dopr() {
        let x = example_x();
        let c = parse_code("dopr: 1'0 3'1 2'0 4'3 1'0 3'0 4'1", Dims::default()).unwrap();
        assert_eq!(c.wpr(), x.wpr());
    }

    #[test]
    fn explicit_dims_win() {
        let c = parse_code("1'0 2'1", Dims::new(4, 3)).unwrap();
        assert_eq!((c.rows(), c.columns()), (4, 3));
    }

    #[test]
    fn reports_offending_token() {
        let err = parse_code("1'0 x'1", Dims::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "x'1"));
        let err = parse_code("1'0 0'1", Dims::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "0'1"));
        assert!(parse_code("   ", Dims::default()).is_err());
        assert!(parse_code("12", Dims::default()).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x = example_x();
        let back = parse_code(&wpr_text(&x), Dims::new(4, 5)).unwrap();
        assert_eq!(back.wpr(), x.wpr());
        let back = parse_code(&dopr_text(&x), Dims::new(4, 5)).unwrap();
        assert_eq!(back, x);
    }
}
