//! Candidate generation: one-dimensional enumeration, lifting to matrix codes
//! with row-shift expansion, and auto-correlation filtering.

use std::collections::HashSet;

use crate::code1d::{is_canonical, OneDimCode};
use crate::correlation::auto_constraint;
use crate::error::{Error, Result};
use crate::matrix::MatrixCode;

/// Streams one representative of every cyclic class of weight-`w` words of
/// length `n`, in lexicographic order of the DoP tuple.
///
/// Each representative has its largest gap last and, when the largest gap
/// repeats, is the smallest such rotation. Periodic classes such as
/// `(4, 4, 4)` are included.
pub fn enumerate_1d(n: u32, w: u32) -> Result<Enumerate1d> {
    if w == 0 || w > n {
        return Err(Error::Params(format!(
            "weight must satisfy 1 <= w <= n (got n={n}, w={w})"
        )));
    }
    Ok(Enumerate1d {
        n,
        prefix: vec![1; (w - 1) as usize],
        done: false,
    })
}

/// Iterator returned by [`enumerate_1d`].
///
/// Walks the free gaps `(a_1, ..., a_{w-1})` like an odometer; the last gap
/// is `n` minus their sum and must be at least as large as each of them.
#[derive(Debug, Clone)]
pub struct Enumerate1d {
    n: u32,
    prefix: Vec<u32>,
    done: bool,
}

impl Enumerate1d {
    fn last_gap(&self) -> u32 {
        self.n - self.prefix.iter().sum::<u32>()
    }

    /// Moves to the next prefix whose tail of ones still leaves a last gap
    /// no smaller than the prefix maximum.
    fn advance(&mut self) {
        let mut i = self.prefix.len();
        while i > 0 {
            i -= 1;
            self.prefix[i] += 1;
            for p in &mut self.prefix[i + 1..] {
                *p = 1;
            }
            let head_sum: u32 = self.prefix[..=i].iter().sum();
            let tail = (self.prefix.len() - i - 1) as u32;
            let head_max = *self.prefix[..=i].iter().max().unwrap();
            if head_sum + tail < self.n && self.n - head_sum - tail >= head_max {
                return;
            }
            self.prefix[i] = 1;
        }
        self.done = true;
    }
}

impl Iterator for Enumerate1d {
    type Item = OneDimCode;

    fn next(&mut self) -> Option<OneDimCode> {
        while !self.done {
            let mut dop = self.prefix.clone();
            dop.push(self.last_gap());
            self.advance();
            if is_canonical(&dop) {
                return Some(OneDimCode::from_dop(&dop).expect("gaps are positive and sum to n"));
            }
        }
        None
    }
}

/// Lifts each one-dimensional code to an `rows x columns` matrix code and
/// adds its `rows` row-shifted variants.
///
/// Codes that coincide up to a column shift are kept once, at their first
/// appearance; the order is otherwise input order, then shift amount.
pub fn lift_and_expand<'a, I>(codes: I, rows: u32, columns: u32) -> Result<Vec<MatrixCode>>
where
    I: IntoIterator<Item = &'a OneDimCode>,
{
    let n = u64::from(rows) * u64::from(columns);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for code in codes {
        if u64::from(code.length()) != n {
            return Err(Error::Params(format!(
                "code length {} does not match L*N = {n}",
                code.length()
            )));
        }
        let lifted = MatrixCode::lift(code, rows)?;
        for k in 0..rows {
            let variant = lifted.row_shift(k);
            if seen.insert(variant.canonical_form().clone()) {
                out.push(variant);
            }
        }
    }
    Ok(out)
}

/// A candidate code with its auto-correlation constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub code: MatrixCode,
    pub lambda_a: u32,
}

impl Candidate {
    pub fn new(code: MatrixCode) -> Self {
        let lambda_a = auto_constraint(&code);
        Candidate { code, lambda_a }
    }
}

/// Keeps the codes whose auto-correlation constraint is at most `max_lambda_a`.
pub fn filter_by_auto<I>(codes: I, max_lambda_a: u32) -> Vec<Candidate>
where
    I: IntoIterator<Item = MatrixCode>,
{
    codes
        .into_iter()
        .filter_map(|code| {
            let lambda_a = auto_constraint(&code);
            (lambda_a <= max_lambda_a).then_some(Candidate { code, lambda_a })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dops(n: u32, w: u32) -> Vec<Vec<u32>> {
        enumerate_1d(n, w).unwrap().map(|c| c.dop()).collect()
    }

    #[test]
    fn twelve_three_listing() {
        let all = dops(12, 3);
        assert_eq!(all.len(), 19);
        assert_eq!(
            &all[..6],
            &[
                vec![1, 1, 10],
                vec![1, 2, 9],
                vec![1, 3, 8],
                vec![1, 4, 7],
                vec![1, 5, 6],
                vec![2, 1, 9]
            ]
        );
        assert_eq!(all[17], vec![4, 4, 4]);
        assert_eq!(all[18], vec![5, 1, 6]);
        assert!(all.contains(&vec![2, 5, 5]));
        assert!(!all.contains(&vec![5, 2, 5]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn weight_one_and_full_weight() {
        assert_eq!(dops(7, 1), vec![vec![7]]);
        assert_eq!(dops(1, 1), vec![vec![1]]);
        assert_eq!(dops(5, 5), vec![vec![1; 5]]);
    }

    #[test]
    fn rejects_overweight() {
        assert!(matches!(enumerate_1d(12, 13), Err(Error::Params(_))));
        assert!(enumerate_1d(12, 0).is_err());
    }

    #[test]
    fn lift_and_expand_appendix() {
        let codes: Vec<_> = enumerate_1d(12, 3).unwrap().collect();
        let first = lift_and_expand(&codes[..1], 4, 3).unwrap();
        assert_eq!(first.len(), 4);
        assert_eq!(first[0].to_string(), "1'0 2'0 3'0");
        let all = lift_and_expand(&codes, 4, 3).unwrap();
        assert!(all.len() <= 76);
        let distinct: HashSet<_> = all.iter().map(|c| c.canonical_form().clone()).collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|c| c.weight() == 3));
    }

    #[test]
    fn lift_and_expand_rejects_wrong_length() {
        let c = OneDimCode::from_dop(&[1, 1, 8]).unwrap();
        assert!(lift_and_expand([&c], 4, 3).is_err());
    }

    #[test]
    fn periodic_row_code_is_filtered() {
        let c = OneDimCode::from_dop(&[4, 4, 4]).unwrap();
        let m = MatrixCode::lift(&c, 4).unwrap();
        assert!(filter_by_auto([m.clone()], 2).is_empty());
        let kept = filter_by_auto([m], 3);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].lambda_a, 3);
    }
}
