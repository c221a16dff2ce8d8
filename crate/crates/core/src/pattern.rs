//! Lower-triangular sparsity patterns.
//!
//! A [`SparsityPattern`] fixes, once, which entries of a lower-triangular
//! factor are allowed to be nonzero. Row `i` holds the conditioning set of
//! variable `i` plus the diagonal. Every sparse factor in this crate stores
//! its values aligned one-to-one with a shared pattern, so patterns are
//! built once per problem and shared behind an [`Arc`].

use std::sync::{Arc, OnceLock};

use crate::{Error, Result};

/// Lower-triangular boolean pattern with the diagonal always present.
///
/// Stores both row-major (CSR) and column-major (CSC) index structure; the
/// column structure is what a transposed factor or a reverse-ordered
/// factorization traverses.
#[derive(Debug)]
pub struct SparsityPattern {
    n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    col_ptr: Vec<usize>,
    rows_of_col: Vec<usize>,
    /// Whether every row is closed under elimination: for all `k` and all
    /// `j < i` in `row(k)`, `(i, j)` is also in the pattern. Reverse-ordered
    /// factorization of a matrix supported on this pattern produces no fill
    /// exactly when this holds.
    elimination_closed: bool,
    reversed: OnceLock<Arc<ReversedPattern>>,
}

/// The order-reversed image of a pattern, with a position map back into the
/// original layout.
#[derive(Debug)]
pub struct ReversedPattern {
    pub pattern: Arc<SparsityPattern>,
    /// For each entry position `p` of the reversed pattern at `(a, b)`, the
    /// position of `(n-1-b, n-1-a)` in the original pattern.
    pub to_original: Vec<usize>,
}

impl PartialEq for SparsityPattern {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.row_ptr == other.row_ptr && self.cols == other.cols
    }
}
impl Eq for SparsityPattern {}

impl SparsityPattern {
    /// Builds a pattern from per-row column sets.
    ///
    /// Rows are sorted and deduplicated; every entry must satisfy `j <= i`
    /// and each row must contain its diagonal.
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        if rows.len() != n {
            return Err(Error::InvalidPattern(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let mut cols = Vec::new();
        for (i, mut row) in rows.into_iter().enumerate() {
            row.sort_unstable();
            row.dedup();
            if row.last() != Some(&i) {
                return Err(Error::InvalidPattern(format!(
                    "row {i} must end at its diagonal"
                )));
            }
            cols.extend_from_slice(&row);
            row_ptr.push(cols.len());
        }
        Ok(Arc::new(Self::assemble(n, row_ptr, cols)))
    }

    /// Full lower-triangular pattern (the dense / `M = 0` configuration).
    pub fn full(n: usize) -> Arc<Self> {
        let mut row_ptr = Vec::with_capacity(n + 1);
        row_ptr.push(0);
        let mut cols = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            cols.extend(0..=i);
            row_ptr.push(cols.len());
        }
        Arc::new(Self::assemble(n, row_ptr, cols))
    }

    /// Diagonal-only pattern.
    pub fn diagonal(n: usize) -> Arc<Self> {
        let row_ptr = (0..=n).collect();
        let cols = (0..n).collect();
        Arc::new(Self::assemble(n, row_ptr, cols))
    }

    fn assemble(n: usize, row_ptr: Vec<usize>, cols: Vec<usize>) -> Self {
        let (col_ptr, rows_of_col) = transpose_index(n, &row_ptr, &cols);
        let elimination_closed = check_elimination_closed(n, &row_ptr, &cols);
        Self {
            n,
            row_ptr,
            cols,
            col_ptr,
            rows_of_col,
            elimination_closed,
            reversed: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Sorted column indices of row `i` (ends with the diagonal `i`).
    pub fn row(&self, i: usize) -> &[usize] {
        &self.cols[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    /// Range of value positions belonging to row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.row_ptr[i]..self.row_ptr[i + 1]
    }

    /// Sorted row indices of column `j` (starts with the diagonal `j`).
    pub fn col(&self, j: usize) -> &[usize] {
        &self.rows_of_col[self.col_ptr[j]..self.col_ptr[j + 1]]
    }

    /// Value position of entry `(i, j)` if present.
    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let range = self.row_range(i);
        self.cols[range.clone()]
            .binary_search(&j)
            .ok()
            .map(|k| range.start + k)
    }

    /// Value position of the diagonal entry of row `i`.
    ///
    /// The diagonal is always the last entry of its row.
    pub fn diag_position(&self, i: usize) -> usize {
        self.row_ptr[i + 1] - 1
    }

    pub fn max_row_nnz(&self) -> usize {
        (0..self.n)
            .map(|i| self.row_ptr[i + 1] - self.row_ptr[i])
            .max()
            .unwrap_or(0)
    }

    /// Whether the pattern is closed under (forward) elimination; see the
    /// field documentation. Hierarchical conditioning patterns, the low-rank
    /// and the dense configurations all satisfy this.
    pub fn is_elimination_closed(&self) -> bool {
        self.elimination_closed
    }

    /// The order-reversed pattern together with the entry position map, used
    /// by reverse-ordered factorization. Computed once and cached.
    pub fn reversed(&self) -> &Arc<ReversedPattern> {
        self.reversed.get_or_init(|| {
            let n = self.n;
            let mut row_ptr = Vec::with_capacity(n + 1);
            row_ptr.push(0);
            let mut cols = Vec::with_capacity(self.nnz());
            for a in 0..n {
                // Row a of the reversed pattern is the reflected column
                // n-1-a of this pattern.
                let c = n - 1 - a;
                for &x in self.col(c).iter().rev() {
                    cols.push(n - 1 - x);
                }
                row_ptr.push(cols.len());
            }
            let rev = Self::assemble(n, row_ptr, cols);
            let mut to_original = Vec::with_capacity(self.nnz());
            for a in 0..n {
                for &b in rev.row(a) {
                    let pos = self
                        .position(n - 1 - b, n - 1 - a)
                        .expect("reversed entry maps into the original pattern");
                    to_original.push(pos);
                }
            }
            Arc::new(ReversedPattern {
                pattern: Arc::new(rev),
                to_original,
            })
        })
    }
}

fn transpose_index(n: usize, row_ptr: &[usize], cols: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut counts = vec![0usize; n + 1];
    for &j in cols {
        counts[j + 1] += 1;
    }
    for j in 0..n {
        counts[j + 1] += counts[j];
    }
    let col_ptr = counts.clone();
    let mut fill = col_ptr.clone();
    let mut rows_of_col = vec![0usize; cols.len()];
    for i in 0..n {
        for &j in &cols[row_ptr[i]..row_ptr[i + 1]] {
            rows_of_col[fill[j]] = i;
            fill[j] += 1;
        }
    }
    // Rows were visited in ascending order, so each column is sorted.
    (col_ptr, rows_of_col)
}

fn check_elimination_closed(n: usize, row_ptr: &[usize], cols: &[usize]) -> bool {
    // Fast path: full prefix rows are trivially closed.
    if (0..n).all(|i| row_ptr[i + 1] - row_ptr[i] == i + 1) {
        return true;
    }
    let row = |i: usize| &cols[row_ptr[i]..row_ptr[i + 1]];
    let closed_row = |k: usize| -> bool {
        let rk = row(k);
        // For each i in row(k), the earlier members of row(k) must all
        // appear in row(i).
        for (pos, &i) in rk.iter().enumerate() {
            let ri = row(i);
            let mut it = ri.iter();
            for &j in &rk[..pos] {
                if !it.by_ref().any(|&c| c == j) {
                    return false;
                }
            }
        }
        true
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().all(closed_row)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).all(closed_row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_pattern_counts() {
        let p = SparsityPattern::full(10);
        assert_eq!(p.nnz(), 55);
        assert_eq!(p.row(3), &[0, 1, 2, 3]);
        assert_eq!(p.col(8), &[8, 9]);
        assert!(p.is_elimination_closed());
    }

    #[test]
    fn diagonal_pattern() {
        let p = SparsityPattern::diagonal(4);
        assert_eq!(p.nnz(), 4);
        assert_eq!(p.row(2), &[2]);
        assert!(p.is_elimination_closed());
    }

    #[test]
    fn rejects_missing_diagonal() {
        let err = SparsityPattern::from_rows(2, vec![vec![0], vec![0]]);
        assert!(err.is_err());
    }

    #[test]
    fn position_lookup() {
        let p = SparsityPattern::from_rows(3, vec![vec![0], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(p.position(2, 1), Some(3));
        assert_eq!(p.position(2, 0), None);
        assert_eq!(p.diag_position(2), 4);
    }

    #[test]
    fn closure_detects_tridiagonal_gap() {
        // Rows {0}, {0,1}, {1,2}: row 1 contains the pair (0, 1) but row 1
        // itself provides it... the violating case needs a row with two
        // earlier entries whose mutual entry is absent.
        let p = SparsityPattern::from_rows(3, vec![vec![0], vec![0, 1], vec![0, 2]]).unwrap();
        assert!(p.is_elimination_closed());
        // Row 2 = {0, 1, 2} requires (1, 0), which is absent when row 1 = {1}.
        let q = SparsityPattern::from_rows(3, vec![vec![0], vec![1], vec![0, 1, 2]]).unwrap();
        assert!(!q.is_elimination_closed());
    }

    #[test]
    fn reversed_roundtrip() {
        let p = SparsityPattern::from_rows(
            4,
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 2, 3]],
        )
        .unwrap();
        let rev = p.reversed();
        assert_eq!(rev.pattern.nnz(), p.nnz());
        // Entry (a, b) of the reversed pattern corresponds to
        // (n-1-b, n-1-a) of the original.
        for a in 0..4 {
            for &b in rev.pattern.row(a) {
                assert!(p.position(3 - b, 3 - a).is_some());
            }
        }
        // The map points each reversed position at the matching original.
        let mut seen = vec![false; p.nnz()];
        for &orig in &rev.to_original {
            assert!(!seen[orig]);
            seen[orig] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}
