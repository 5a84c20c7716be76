//! Auto- and cross-correlation of matrix codes.
//!
//! Correlation is taken along the time axis only. The overlap of `X` with a
//! column-shifted `Y` is the number of weighted cells the two WPR sets share,
//! so every profile entry is a sorted-list intersection. [`grid_overlap`]
//! evaluates the same quantity cell by cell on the dense grids and serves as
//! the independent check.

use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{Cell, MatrixCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    /// Shifts `1..N`.
    Auto,
    /// Shifts `0..N`.
    Cross,
}

/// Overlap counts indexed by column shift.
///
/// `values[i]` is the overlap at `tau = first_shift() + i`. Serializes as a
/// plain JSON array in shift order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    kind: ProfileKind,
    values: Vec<u32>,
}

impl CorrelationProfile {
    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn first_shift(&self) -> u32 {
        match self.kind {
            ProfileKind::Auto => 1,
            ProfileKind::Cross => 0,
        }
    }

    /// Largest overlap; 0 for an empty profile.
    pub fn constraint(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

impl Serialize for CorrelationProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

/// Number of cells common to two sorted WPR lists.
fn sorted_intersection(a: &[Cell], b: &[Cell]) -> u32 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn check_dims(x: &MatrixCode, y: &MatrixCode) -> Result<()> {
    if x.params().same_grid(&y.params()) {
        Ok(())
    } else {
        Err(Error::Params(format!(
            "grid mismatch: {}x{} vs {}x{}",
            x.rows(),
            x.columns(),
            y.rows(),
            y.columns()
        )))
    }
}

/// Number of weighted cells shared by the WPRs of `x` and `y`, as placed.
pub fn intersection_count(x: &MatrixCode, y: &MatrixCode) -> Result<u32> {
    check_dims(x, y)?;
    Ok(sorted_intersection(x.wpr(), y.wpr()))
}

/// Overlap of `x` with each nonzero column shift of itself.
pub fn auto_profile(x: &MatrixCode) -> CorrelationProfile {
    let values = (1..x.columns())
        .map(|tau| sorted_intersection(x.wpr(), x.column_shift(tau).wpr()))
        .collect();
    CorrelationProfile {
        kind: ProfileKind::Auto,
        values,
    }
}

pub fn auto_constraint(x: &MatrixCode) -> u32 {
    auto_profile(x).constraint()
}

/// Overlap of `x` with every column shift of `y`, including the zero shift.
///
/// Fails with [`Error::DegeneratePair`] when `x` and `y` are the same code.
pub fn cross_profile(x: &MatrixCode, y: &MatrixCode) -> Result<CorrelationProfile> {
    check_dims(x, y)?;
    if x == y {
        return Err(Error::DegeneratePair);
    }
    let values = (0..y.columns())
        .map(|tau| sorted_intersection(x.wpr(), y.column_shift(tau).wpr()))
        .collect();
    Ok(CorrelationProfile {
        kind: ProfileKind::Cross,
        values,
    })
}

pub fn cross_constraint(x: &MatrixCode, y: &MatrixCode) -> Result<u32> {
    cross_profile(x, y).map(|p| p.constraint())
}

/// Direct double sum `sum_{i,j} x[i][j] * y[i][(j + tau) mod N]` over the
/// dense grids.
///
/// The sum pairs `x` with `y` shifted *left* by `tau`, so it equals entry
/// `(N - tau) mod N` of [`cross_profile`], whose shifts move `y` to the right.
/// Shares no code with the WPR intersection path; used by
/// [`verify_set`](crate::setsearch::verify_set) and by tests as a reference.
pub fn grid_overlap(x: &MatrixCode, y: &MatrixCode, tau: u32) -> Result<u32> {
    check_dims(x, y)?;
    let gx = x.grid();
    let gy = y.grid();
    let n = x.columns() as usize;
    let tau = tau as usize % n;
    let mut sum = 0;
    for (rx, ry) in gx.iter().zip(&gy) {
        for j in 0..n {
            if rx[j] && ry[(j + tau) % n] {
                sum += 1;
            }
        }
    }
    Ok(sum)
}

/// Set-wide constraints `(lambda_a, lambda_c)`: the largest auto constraint
/// over all codes and the largest cross constraint over all unordered pairs.
/// A single code has `lambda_c = 0`.
pub fn set_constraints(codes: &[MatrixCode]) -> Result<(u32, u32)> {
    if codes.is_empty() {
        return Err(Error::Params("a code set needs at least one code".into()));
    }
    let lambda_a = codes.iter().map(auto_constraint).max().unwrap_or(0);
    let mut lambda_c = 0;
    for (i, x) in codes.iter().enumerate() {
        for y in &codes[i + 1..] {
            lambda_c = lambda_c.max(cross_constraint(x, y)?);
        }
    }
    Ok((lambda_a, lambda_c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::fixtures::{example_x, example_y, wpr};

    #[test]
    fn intersection_fixtures() {
        let x = example_x();
        let y = example_y();
        assert_eq!(intersection_count(&x, &x.column_shift(1)).unwrap(), 2);
        assert_eq!(intersection_count(&x, &x).unwrap(), 7);
        assert_eq!(intersection_count(&x, &y).unwrap(), 4);
    }

    #[test]
    fn intersection_rejects_mismatched_grids() {
        let a = wpr(4, 5, &[(1, 0)]);
        let b = wpr(4, 3, &[(1, 0)]);
        assert!(matches!(intersection_count(&a, &b), Err(Error::Params(_))));
        assert!(grid_overlap(&a, &b, 0).is_err());
    }

    #[test]
    fn auto_profile_fixtures() {
        let x = example_x();
        let p = auto_profile(&x);
        assert_eq!(p.values(), &[2, 1, 1, 2]);
        assert_eq!(p.constraint(), 2);
        assert_eq!(auto_constraint(&example_y()), 2);

        let periodic = wpr(4, 3, &[(1, 0), (1, 1), (1, 2)]);
        assert_eq!(auto_profile(&periodic).values(), &[3, 3]);
        assert_eq!(auto_constraint(&periodic), 3);
    }

    #[test]
    fn auto_profile_single_column() {
        let c = wpr(3, 1, &[(1, 0), (3, 0)]);
        let p = auto_profile(&c);
        assert!(p.values().is_empty());
        assert_eq!(p.constraint(), 0);
    }

    #[test]
    fn cross_profile_fixtures() {
        let x = example_x();
        let y = example_y();
        let p = cross_profile(&x, &y).unwrap();
        assert_eq!(p.values(), &[4, 2, 2, 2, 2]);
        assert_eq!(p.constraint(), 4);

        let a = wpr(4, 5, &[(1, 0), (1, 2)]);
        let b = wpr(4, 5, &[(3, 1), (4, 4)]);
        let p = cross_profile(&a, &b).unwrap();
        assert_eq!(p.values(), &[0; 5]);
        assert_eq!(p.constraint(), 0);

        assert_eq!(cross_constraint(&x, &y.column_shift(1)).unwrap(), 4);
        assert_eq!(cross_constraint(&y, &x).unwrap(), 4);
    }

    #[test]
    fn cross_profile_degenerate_pair() {
        let x = example_x();
        assert_eq!(cross_profile(&x, &x.column_shift(3)), Err(Error::DegeneratePair));
    }

    #[test]
    fn grid_overlap_fixtures() {
        let x = example_x();
        let y = example_y();
        assert_eq!(grid_overlap(&x, &x, 1).unwrap(), 2);
        assert_eq!(grid_overlap(&x, &y, 0).unwrap(), 4);
        // the double sum pairs x[j] with y[j + tau], which is y shifted left
        // by tau, i.e. right by N - tau
        let p = cross_profile(&x, &y).unwrap();
        for tau in 0..5u32 {
            assert_eq!(
                p.values()[tau as usize],
                grid_overlap(&x, &y, (5 - tau) % 5).unwrap()
            );
        }
    }

    #[test]
    fn set_constraint_fixtures() {
        let x = example_x();
        let y = example_y();
        assert_eq!(set_constraints(std::slice::from_ref(&x)).unwrap(), (2, 0));
        assert_eq!(set_constraints(&[x.clone(), y]).unwrap(), (2, 4));
        let singles = [wpr(4, 3, &[(1, 0)]), wpr(4, 3, &[(2, 0)]), wpr(4, 3, &[(3, 0)])];
        assert_eq!(set_constraints(&singles).unwrap(), (0, 0));
        assert_eq!(
            set_constraints(&[x.clone(), x.column_shift(2)]),
            Err(Error::DegeneratePair)
        );
        assert!(set_constraints(&[]).is_err());
    }

    #[test]
    fn profile_serializes_as_array() {
        let p = auto_profile(&example_x());
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,1,2]");
    }
}
