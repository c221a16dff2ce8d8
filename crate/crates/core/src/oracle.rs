//! On-demand entry access to symmetric matrices.
//!
//! Factorizations in this crate never materialize the full covariance: they
//! read only the entries their sparsity pattern selects, through an
//! [`EntryOracle`].

/// A symmetric positive-definite matrix viewed one entry at a time.
///
/// Implementations must be symmetric (`entry(i, j) == entry(j, i)`) and
/// return finite values. `Sync` so concurrent factorizations can share one
/// oracle.
pub trait EntryOracle: Sync {
    fn dim(&self) -> usize;
    fn entry(&self, i: usize, j: usize) -> f64;
}

/// Dense column-major storage exposed as an oracle; the usual bridge for
/// small problems and test references.
#[derive(Debug, Clone)]
pub struct DenseOracle {
    n: usize,
    data: Vec<f64>,
}

impl DenseOracle {
    /// Wraps an `n x n` column-major buffer.
    pub fn from_column_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    pub fn from_nalgebra(m: &nalgebra::DMatrix<f64>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        Self {
            n: m.nrows(),
            data: m.as_slice().to_vec(),
        }
    }
}

impl EntryOracle for DenseOracle {
    fn dim(&self) -> usize {
        self.n
    }
    fn entry(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.n + i]
    }
}

/// `scale * inner(i, j)`; used for parameterized innovation covariances.
pub struct ScaledOracle<O> {
    pub scale: f64,
    pub inner: O,
}

impl<O: EntryOracle> EntryOracle for ScaledOracle<O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn entry(&self, i: usize, j: usize) -> f64 {
        self.scale * self.inner.entry(i, j)
    }
}

impl<O: EntryOracle + ?Sized> EntryOracle for &O {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn entry(&self, i: usize, j: usize) -> f64 {
        (**self).entry(i, j)
    }
}

impl<O: EntryOracle + ?Sized> EntryOracle for Box<O> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn entry(&self, i: usize, j: usize) -> f64 {
        (**self).entry(i, j)
    }
}

impl<O: EntryOracle + ?Sized> EntryOracle for std::sync::Arc<O> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn entry(&self, i: usize, j: usize) -> f64 {
        (**self).entry(i, j)
    }
}
