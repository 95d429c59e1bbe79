//! Quadratic LCS dynamic programming.
//!
//! Both the prefix (forward) and suffix (backward) tables are kept in memory.
//! Together they identify every match cell that lies on at least one optimal
//! alignment, which is all the extremal construction needs.

use std::cmp::Reverse;

use num_traits::{AsPrimitive, PrimInt, Unsigned};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default limit on `n * m` for a single comparison.
pub const DEFAULT_CELL_BUDGET: u64 = 400_000_000;

/// Upper bound on the number of DP cells a comparison may allocate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellBudget(pub u64);

impl Default for CellBudget {
    fn default() -> Self {
        CellBudget(DEFAULT_CELL_BUDGET)
    }
}

impl CellBudget {
    pub fn unlimited() -> Self {
        CellBudget(u64::MAX)
    }

    pub fn check(self, n: usize, m: usize) -> Result<()> {
        let cells = (n as u64).saturating_mul(m as u64);
        if cells > self.0 {
            return Err(Error::SizeLimitExceeded {
                rows: n,
                cols: m,
                budget: self.0,
            });
        }
        Ok(())
    }
}

/// Unsigned integer type usable as a DP cell.
pub trait DpCell: PrimInt + Unsigned + AsPrimitive<usize> + Send + Sync + 'static {}

impl DpCell for u8 {}
impl DpCell for u16 {}
impl DpCell for u32 {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `cell[i][j] = LCS(X[..i], Y[..j])`
    Forward,
    /// `cell[i][j] = LCS(X[i..], Y[j..])`
    Backward,
}

#[derive(Clone)]
enum Cells {
    U8(Vec<u8>),
    U16(Vec<u16>),
    U32(Vec<u32>),
}

/// `(n+1) x (m+1)` LCS table, stored in the narrowest integer width that
/// holds `max(n, m)`.
#[derive(Clone)]
pub struct DpTable {
    rows: usize,
    cols: usize,
    orientation: Orientation,
    cells: Cells,
}

impl std::fmt::Debug for DpTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DpTable")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("orientation", &self.orientation)
            .field("cell_bytes", &self.cell_bytes())
            .finish()
    }
}

impl DpTable {
    fn build(x: &[u8], y: &[u8], orientation: Orientation, budget: CellBudget) -> Result<Self> {
        budget.check(x.len(), y.len())?;
        let widest = x.len().max(y.len());
        let cells = if widest <= u8::MAX as usize {
            Cells::U8(fill(x, y, orientation))
        } else if widest <= u16::MAX as usize {
            Cells::U16(fill(x, y, orientation))
        } else {
            // the default budget keeps us far from u32::MAX
            Cells::U32(fill(x, y, orientation))
        };
        Ok(DpTable {
            rows: x.len() + 1,
            cols: y.len() + 1,
            orientation,
            cells,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Bytes per stored cell (1, 2 or 4).
    pub fn cell_bytes(&self) -> usize {
        match self.cells {
            Cells::U8(_) => 1,
            Cells::U16(_) => 2,
            Cells::U32(_) => 4,
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.rows && j < self.cols);
        let at = i * self.cols + j;
        match &self.cells {
            Cells::U8(v) => v[at] as usize,
            Cells::U16(v) => v[at] as usize,
            Cells::U32(v) => v[at] as usize,
        }
    }

    /// The LCS length of the full sequences: `[n][m]` forward, `[0][0]` backward.
    pub fn lcs(&self) -> usize {
        match self.orientation {
            Orientation::Forward => self.get(self.rows - 1, self.cols - 1),
            Orientation::Backward => self.get(0, 0),
        }
    }
}

fn fill<C: DpCell>(x: &[u8], y: &[u8], orientation: Orientation) -> Vec<C> {
    let (n, m) = (x.len(), y.len());
    let cols = m + 1;
    let mut t = vec![C::zero(); (n + 1) * cols];
    match orientation {
        Orientation::Forward => {
            for i in 1..=n {
                let xi = x[i - 1];
                let (done, rest) = t.split_at_mut(i * cols);
                let prev = &done[(i - 1) * cols..];
                let cur = &mut rest[..cols];
                for j in 1..=m {
                    // a match never loses to the two neighbours (they differ by at most 1)
                    cur[j] = if xi == y[j - 1] {
                        prev[j - 1] + C::one()
                    } else {
                        prev[j].max(cur[j - 1])
                    };
                }
            }
        }
        Orientation::Backward => {
            for i in (0..n).rev() {
                let xi = x[i];
                let (head, below) = t.split_at_mut((i + 1) * cols);
                let cur = &mut head[i * cols..];
                let next = &below[..cols];
                for j in (0..m).rev() {
                    cur[j] = if xi == y[j] {
                        next[j + 1] + C::one()
                    } else {
                        next[j].max(cur[j + 1])
                    };
                }
            }
        }
    }
    t
}

/// Prefix LCS table of `x` against `y`.
pub fn forward_table(x: &[u8], y: &[u8], budget: CellBudget) -> Result<DpTable> {
    DpTable::build(x, y, Orientation::Forward, budget)
}

/// Suffix LCS table of `x` against `y`.
pub fn backward_table(x: &[u8], y: &[u8], budget: CellBudget) -> Result<DpTable> {
    DpTable::build(x, y, Orientation::Backward, budget)
}

/// LCS length under the default cell budget.
pub fn lcs_length(x: &[u8], y: &[u8]) -> Result<usize> {
    Ok(forward_table(x, y, CellBudget::default())?.lcs())
}

/// A match cell lying on at least one optimal alignment.
///
/// `i` and `j` are 1-based; `rank` is the position of the match within any
/// optimal alignment through it, `1..=L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoOptimalCell {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
}

impl CoOptimalCell {
    /// Canonical order: by rank, then `i` ascending, then `j` descending.
    /// Within a rank `j` never increases with `i`, so this walks each rank
    /// group from the top-left to the bottom-right.
    pub fn order_key(&self) -> (usize, usize, Reverse<usize>) {
        (self.rank, self.i, Reverse(self.j))
    }

    pub fn transposed(self) -> Self {
        CoOptimalCell {
            i: self.j,
            j: self.i,
            rank: self.rank,
        }
    }
}

/// Forward and backward tables of one comparison.
#[derive(Debug, Clone)]
pub struct LcsTables {
    pub forward: DpTable,
    pub backward: DpTable,
}

impl LcsTables {
    pub fn compute(x: &[u8], y: &[u8], budget: CellBudget) -> Result<Self> {
        Ok(LcsTables {
            forward: forward_table(x, y, budget)?,
            backward: backward_table(x, y, budget)?,
        })
    }

    pub fn lcs(&self) -> usize {
        self.forward.lcs()
    }

    /// Co-optimal cells in [`CoOptimalCell::order_key`] order.
    pub fn co_optimal_cells(&self, x: &[u8], y: &[u8]) -> Vec<CoOptimalCell> {
        let cols = self.forward.cols;
        let total = self.lcs();
        let mut out = match (&self.forward.cells, &self.backward.cells) {
            (Cells::U8(f), Cells::U8(b)) => collect_co_optimal(x, y, f, b, cols, total),
            (Cells::U16(f), Cells::U16(b)) => collect_co_optimal(x, y, f, b, cols, total),
            (Cells::U32(f), Cells::U32(b)) => collect_co_optimal(x, y, f, b, cols, total),
            _ => unreachable!("both tables are built for the same lengths"),
        };
        out.sort_unstable_by_key(CoOptimalCell::order_key);
        out
    }
}

fn collect_co_optimal<C: DpCell>(
    x: &[u8],
    y: &[u8],
    forward: &[C],
    backward: &[C],
    cols: usize,
    total: usize,
) -> Vec<CoOptimalCell> {
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    for (i0, &xi) in x.iter().enumerate() {
        let f_row = &forward[i0 * cols..(i0 + 1) * cols];
        let b_row = &backward[(i0 + 1) * cols..(i0 + 2) * cols];
        for (j0, &yj) in y.iter().enumerate() {
            if xi != yj {
                continue;
            }
            let before: usize = f_row[j0].as_();
            let after: usize = b_row[j0 + 1].as_();
            if before + 1 + after == total {
                out.push(CoOptimalCell {
                    i: i0 + 1,
                    j: j0 + 1,
                    rank: before + 1,
                });
            }
        }
    }
    out
}

/// Union of all optimal alignments, in [`CoOptimalCell::order_key`] order.
pub fn co_optimal_cells(x: &[u8], y: &[u8]) -> Result<Vec<CoOptimalCell>> {
    let tables = LcsTables::compute(x, y, CellBudget::default())?;
    Ok(tables.co_optimal_cells(x, y))
}
