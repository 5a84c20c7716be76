//! Two-dimensional (matrix) codes and their representations.
//!
//! A matrix code is an `L x N` binary array of weight `w`. Rows are
//! wavelengths and columns are time slots. Three views are kept consistent:
//!
//! * WPR: the `(row, column)` cells holding a one, listed column-major
//!   (columns left to right, top to bottom within a column);
//! * DoPR: the same cells as `(row, gap)` pairs, where `gap` is the circular
//!   column distance to the next listed cell. Gaps always add up to `N`;
//! * grid: the dense `L x N` bit array.
//!
//! Internally rows and columns are 0-indexed. Text output follows the
//! customary notation with 1-indexed rows and 0-indexed columns, so the cell
//! at internal `(0, 4)` prints as `1'4`.
//!
//! Column-wise circular shifts do not change the identity of a code, so
//! `PartialEq`, `Hash` and `Ord` on [`MatrixCode`] all go through the
//! [`CanonicalForm`]. Use [`MatrixCode::wpr`] to compare exact placements.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::code1d::OneDimCode;
use crate::error::{Error, Result};
use crate::params::CodeParams;

/// A weighted cell of a matrix code, 0-indexed.
///
/// Ordering is column-major: by column first, then by row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: u32,
    pub column: u32,
}

impl Cell {
    pub const fn new(row: u32, column: u32) -> Self {
        Cell { row, column }
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.column, self.row).cmp(&(other.column, other.row))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}'{}", self.row + 1, self.column)
    }
}

/// One DoPR entry: the row of a weighted bit and the column distance to the
/// next weighted bit in column-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoprEntry {
    pub row: u32,
    pub gap: u32,
}

impl DoprEntry {
    pub const fn new(row: u32, gap: u32) -> Self {
        DoprEntry { row, gap }
    }
}

impl fmt::Display for DoprEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}'{}", self.row + 1, self.gap)
    }
}

/// Shift-invariant identity of a matrix code: the lexicographically smallest
/// column-major cell list over all `N` column shifts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: u32,
    columns: u32,
    cells: Vec<Cell>,
}

impl CanonicalForm {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tokens(f, &self.cells)
    }
}

#[derive(Debug, Clone)]
pub struct MatrixCode {
    params: CodeParams,
    cells: Vec<Cell>,
    canonical: CanonicalForm,
}

impl MatrixCode {
    /// Builds a code from its weighted cells (0-indexed) in an
    /// `rows x columns` grid. The cells may come in any order.
    pub fn from_cells<I>(rows: u32, columns: u32, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::Malformed("a code needs at least one weighted bit".into()));
        }
        let weight = u32::try_from(cells.len())
            .map_err(|_| Error::Params("weight overflows u32".into()))?;
        let params = CodeParams::new(rows, columns, weight)?;
        if let Some(c) = cells.iter().find(|c| c.row >= rows || c.column >= columns) {
            return Err(Error::Malformed(format!(
                "cell {c} lies outside the {rows}x{columns} grid"
            )));
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Malformed(format!("cell {} listed twice", w[0])));
        }
        Ok(Self::from_sorted(params, cells))
    }

    fn from_sorted(params: CodeParams, cells: Vec<Cell>) -> Self {
        let canonical = canonicalize(&params, &cells);
        MatrixCode {
            params,
            cells,
            canonical,
        }
    }

    /// Builds a code from a dense grid given row by row; any nonzero entry is
    /// a weighted bit.
    pub fn from_grid<R: AsRef<[u8]>>(grid: &[R]) -> Result<Self> {
        let rows = grid.len();
        let columns = grid.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if grid.iter().any(|r| r.as_ref().len() != columns) {
            return Err(Error::Malformed("grid rows differ in length".into()));
        }
        let cells = grid.iter().enumerate().flat_map(|(r, bits)| {
            bits.as_ref()
                .iter()
                .enumerate()
                .filter(|(_, &b)| b != 0)
                .map(move |(c, _)| Cell::new(r as u32, c as u32))
        });
        Self::from_cells(rows as u32, columns as u32, cells.collect::<Vec<_>>())
    }

    /// Rebuilds a code from its DoPR. The first listed bit is placed in
    /// column 0 and every later column is the previous one plus the
    /// preceding gap, modulo `N`.
    pub fn from_dopr(rows: u32, columns: u32, dopr: &[DoprEntry]) -> Result<Self> {
        if dopr.is_empty() {
            return Err(Error::Malformed("empty DoPR".into()));
        }
        let sum: u64 = dopr.iter().map(|e| u64::from(e.gap)).sum();
        if sum != u64::from(columns) {
            return Err(Error::GapSum { sum, columns });
        }
        let mut column = 0u32;
        let mut cells = Vec::with_capacity(dopr.len());
        for e in dopr {
            cells.push(Cell::new(e.row, column));
            column = ((u64::from(column) + u64::from(e.gap)) % u64::from(columns)) as u32;
        }
        Self::from_cells(rows, columns, cells)
    }

    /// Folds a one-dimensional code of length `L * N` into an `L x N` grid:
    /// position `q` lands in row `q mod L`, column `q div L`.
    pub fn lift(code: &OneDimCode, rows: u32) -> Result<Self> {
        if rows == 0 || !code.length().is_multiple_of(rows) {
            return Err(Error::Params(format!(
                "code length {} is not divisible by L={rows}",
                code.length()
            )));
        }
        let columns = code.length() / rows;
        let cells = code
            .positions()
            .iter()
            .map(|&q| Cell::new(q % rows, q / rows));
        Self::from_cells(rows, columns, cells.collect::<Vec<_>>())
    }

    #[inline]
    pub fn params(&self) -> CodeParams {
        self.params
    }

    #[inline]
    pub fn rows(&self) -> u32 {
        self.params.rows()
    }

    #[inline]
    pub fn columns(&self) -> u32 {
        self.params.columns()
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.params.weight()
    }

    /// Weighted cells in column-major order.
    pub fn wpr(&self) -> &[Cell] {
        &self.cells
    }

    pub fn dopr(&self) -> Vec<DoprEntry> {
        let n = self.columns();
        let w = self.cells.len();
        (0..w)
            .map(|i| {
                let here = self.cells[i].column;
                let gap = if i + 1 < w {
                    self.cells[i + 1].column - here
                } else {
                    // closes the cycle, so a single occupied column yields N, not 0
                    n - here + self.cells[0].column
                };
                DoprEntry::new(self.cells[i].row, gap)
            })
            .collect()
    }

    pub fn grid(&self) -> Vec<Vec<bool>> {
        let mut grid = vec![vec![false; self.columns() as usize]; self.rows() as usize];
        for c in &self.cells {
            grid[c.row as usize][c.column as usize] = true;
        }
        grid
    }

    /// True if the cell `(row, column)` holds a one.
    pub fn contains(&self, row: u32, column: u32) -> bool {
        self.cells.binary_search(&Cell::new(row, column)).is_ok()
    }

    /// The grid flattened column by column, which is the one-dimensional
    /// word this code would have been lifted from.
    pub fn flatten(&self) -> OneDimCode {
        let rows = self.rows();
        let positions: Vec<u32> = self.cells.iter().map(|c| c.column * rows + c.row).collect();
        OneDimCode::from_positions(&positions, self.params.length())
            .expect("cells are distinct and in range")
    }

    /// Right circular shift by `p` columns: `(r, c)` moves to `(r, (c + p) mod N)`.
    pub fn column_shift(&self, p: u32) -> MatrixCode {
        let n = self.columns();
        let p = p % n;
        let mut cells: Vec<Cell> = self
            .cells
            .iter()
            .map(|c| Cell::new(c.row, (c.column + p) % n))
            .collect();
        cells.sort_unstable();
        MatrixCode {
            params: self.params,
            cells,
            canonical: self.canonical.clone(),
        }
    }

    /// Circular shift by `k` rows: `(r, c)` moves to `((r + k) mod L, c)`.
    /// Unlike column shifts this generally produces a different code.
    pub fn row_shift(&self, k: u32) -> MatrixCode {
        let l = self.rows();
        let k = k % l;
        let mut cells: Vec<Cell> = self
            .cells
            .iter()
            .map(|c| Cell::new((c.row + k) % l, c.column))
            .collect();
        cells.sort_unstable();
        Self::from_sorted(self.params, cells)
    }

    pub fn canonical_form(&self) -> &CanonicalForm {
        &self.canonical
    }

    /// True when some nontrivial column shift maps the code onto itself.
    pub fn is_column_periodic(&self) -> bool {
        (1..self.columns()).any(|p| self.column_shift(p).cells == self.cells)
    }

    /// The code's DoPR as `r'd` tokens.
    pub fn dopr_string(&self) -> String {
        self.dopr()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn canonicalize(params: &CodeParams, cells: &[Cell]) -> CanonicalForm {
    let n = params.columns();
    let mut best: Option<Vec<Cell>> = None;
    let mut occupied: Vec<u32> = cells.iter().map(|c| c.column).collect();
    occupied.dedup();
    // the minimum always starts in column 0, so only shifts that move an
    // occupied column there need to be considered
    for c in occupied {
        let p = (n - c) % n;
        let mut shifted: Vec<Cell> = cells
            .iter()
            .map(|x| Cell::new(x.row, (x.column + p) % n))
            .collect();
        shifted.sort_unstable();
        if best.as_ref().is_none_or(|b| shifted < *b) {
            best = Some(shifted);
        }
    }
    CanonicalForm {
        rows: params.rows(),
        columns: n,
        cells: best.unwrap_or_default(),
    }
}

fn write_tokens<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl PartialEq for MatrixCode {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for MatrixCode {}

impl Hash for MatrixCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl Ord for MatrixCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl PartialOrd for MatrixCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints the WPR as `r'c` tokens.
impl fmt::Display for MatrixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tokens(f, &self.cells)
    }
}
