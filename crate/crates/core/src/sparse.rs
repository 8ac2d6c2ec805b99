//! Sparse symmetric matrices stored as canonical upper-triangle triplets.
//!
//! One entry per unordered pair `(i, j)` with `i <= j`, sorted ascending by
//! `(i, j)`. The canonical order makes every reduction over the entries
//! bitwise reproducible regardless of how the matrix was assembled.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symmetric sparse matrix over `n` nodes.
///
/// Holds adjacency matrices (non-negative weights, validated in
/// [`SparseSymMatrix::from_edges`]) as well as the signed Laplacian operators
/// derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseSymMatrix<T> {
    n: usize,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Scalar> SparseSymMatrix<T> {
    /// Matrix with no stored entries.
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: Vec::new(),
        }
    }

    /// Build an adjacency matrix from a weighted edge list.
    ///
    /// Edges may arrive in any order and with either endpoint first; they are
    /// canonicalized to `i <= j` and sorted. Rejects out-of-range indices,
    /// duplicate pairs, non-finite or negative weights, and explicit zeros.
    pub fn from_edges(n: usize, edges: &[(usize, usize, T)]) -> Result<Self> {
        let mut entries: Vec<(usize, usize, T)> = Vec::with_capacity(edges.len());
        for &(a, b, w) in edges {
            if a >= n || b >= n {
                return Err(Error::shape(
                    format!("indices < {n}"),
                    format!("edge ({a}, {b})"),
                ));
            }
            if !w.is_finite() || w < T::zero() {
                return Err(Error::InvalidParam(format!(
                    "edge ({a}, {b}) has invalid weight {w}"
                )));
            }
            if w == T::zero() {
                return Err(Error::InvalidParam(format!(
                    "edge ({a}, {b}) stores an explicit zero"
                )));
            }
            let (i, j) = if a <= b { (a, b) } else { (b, a) };
            entries.push((i, j, w));
        }
        entries.sort_by_key(|&(i, j, _)| (i, j));
        if let Some(w) = entries.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidParam(format!(
                "duplicate entry for pair ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self { n, entries })
    }

    /// Assemble from entries already canonical (`i <= j`, sorted, no
    /// duplicates, no explicit zeros). Signed values allowed; used for the
    /// Laplacian operators.
    pub(crate) fn from_canonical(n: usize, entries: Vec<(usize, usize, T)>) -> Self {
        debug_assert!(entries
            .windows(2)
            .all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        debug_assert!(entries.iter().all(|&(i, j, w)| i <= j && j < n && w != T::zero()));
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Stored entries, one per unordered pair, canonical order.
    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    /// Number of stored entries (diagonal included).
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Number of off-diagonal unordered pairs, i.e. graph edges.
    pub fn edge_count(&self) -> usize {
        self.entries.iter().filter(|&&(i, j, _)| i != j).count()
    }

    /// Fraction of the n(n-1)/2 possible edges that are present.
    pub fn density(&self) -> f64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if pairs == 0 {
            0.0
        } else {
            self.edge_count() as f64 / pairs as f64
        }
    }

    /// Value at `(i, j)` by binary search over the canonical entries.
    pub fn get(&self, i: usize, j: usize) -> T {
        let key = if i <= j { (i, j) } else { (j, i) };
        match self
            .entries
            .binary_search_by_key(&key, |&(i, j, _)| (i, j))
        {
            Ok(pos) => self.entries[pos].2,
            Err(_) => T::zero(),
        }
    }

    /// Row sums d(v) = sum_w W(v, w).
    pub fn degree_vector(&self) -> Array1<T> {
        let mut d = Array1::zeros(self.n);
        for &(i, j, w) in &self.entries {
            d[i] += w;
            if i != j {
                d[j] += w;
            }
        }
        d
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: ArrayView1<'_, T>) -> Result<Array1<T>> {
        if x.len() != self.n {
            return Err(Error::shape(format!("vector of len {}", self.n), format!("len {}", x.len())));
        }
        let mut y = Array1::zeros(self.n);
        for &(i, j, w) in &self.entries {
            y[i] += w * x[j];
            if i != j {
                y[j] += w * x[i];
            }
        }
        Ok(y)
    }

    /// Product with a dense node signal (rows = nodes).
    ///
    /// This is the inner loop of Chebyshev filtering; the contiguous fast
    /// path keeps it allocation-free.
    pub fn mul_signal(&self, x: ArrayView2<'_, T>) -> Result<Array2<T>> {
        if x.nrows() != self.n {
            return Err(Error::shape(
                format!("signal with {} rows", self.n),
                format!("{} rows", x.nrows()),
            ));
        }
        let c = x.ncols();
        let mut y = Array2::zeros(x.raw_dim());
        match x.as_slice() {
            Some(xs) => {
                let ys = y.as_slice_mut().expect("freshly allocated is contiguous");
                for &(i, j, w) in &self.entries {
                    let (ri, rj) = (i * c, j * c);
                    for col in 0..c {
                        ys[ri + col] += w * xs[rj + col];
                    }
                    if i != j {
                        for col in 0..c {
                            ys[rj + col] += w * xs[ri + col];
                        }
                    }
                }
            }
            None => {
                for &(i, j, w) in &self.entries {
                    for col in 0..c {
                        y[[i, col]] += w * x[[j, col]];
                    }
                    if i != j {
                        for col in 0..c {
                            y[[j, col]] += w * x[[i, col]];
                        }
                    }
                }
            }
        }
        Ok(y)
    }

    /// Dense rendering, mainly for oracles and small-scale checks.
    pub fn to_dense(&self) -> Array2<T> {
        let mut m = Array2::zeros((self.n, self.n));
        for &(i, j, w) in &self.entries {
            m[[i, j]] = w;
            m[[j, i]] = w;
        }
        m
    }
}
