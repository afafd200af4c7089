//! Dense row-stochastic matrices, characteristic polynomials and spectra.

use crate::error::{Error, Result};
use crate::poly::{roots, Poly, RootSet};

/// Largest order accepted by [`char_poly`].
pub const MAX_CHAR_POLY_ORDER: usize = 64;

const ROW_SUM_TOL: f64 = 1e-12;

/// Square nonnegative matrix whose rows sum to exactly `1.0` when summed
/// left to right in `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    order: usize,
    data: Vec<f64>,
}

/// Replaces the last nonzero entry by one minus the left-to-right sum of the
/// entries before it. For a partial sum in `[0, 1]` the full left-to-right sum
/// is then exactly `1.0`.
fn make_row_exact(row: &mut [f64]) {
    let Some(k) = row.iter().rposition(|&x| x != 0.0) else {
        return;
    };
    let partial: f64 = row[..k].iter().sum();
    row[k] = (1.0 - partial).max(0.0);
}

impl StochasticMatrix {
    /// Validates (square, nonnegative, rows summing to 1 within 1e-12) and then
    /// makes every row sum exact.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        let mut data = Vec::with_capacity(order * order);
        for (i, mut row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            if let Some(x) = row.iter().find(|x| !x.is_finite() || **x < 0.0) {
                return Err(Error::InvalidMatrix(format!("row {i} has entry {x}")));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > ROW_SUM_TOL {
                return Err(Error::InvalidMatrix(format!("row {i} sums to {sum}")));
            }
            make_row_exact(&mut row);
            data.extend(row);
        }
        Ok(Self { order, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self { order: n, data }
    }

    /// Permutation matrix of the cycle `i -> i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + (i + 1) % n] = 1.0;
        }
        Self { order: n, data }
    }

    /// Builds from rows that are stochastic up to rounding, fixing the sums.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<f64>>) -> Self {
        let order = rows.len();
        let mut data = Vec::with_capacity(order * order);
        for mut row in rows {
            debug_assert_eq!(row.len(), order);
            make_row_exact(&mut row);
            data.extend(row);
        }
        Self { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &StochasticMatrix) -> StochasticMatrix {
        let n = self.order;
        assert_eq!(n, other.order);
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
                    .collect()
            })
            .collect();
        StochasticMatrix::from_rows_unchecked(rows)
    }
}

/// Monic characteristic polynomial `det(tI - M)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(m: &StochasticMatrix) -> Poly {
    let n = m.order();
    assert!(n <= MAX_CHAR_POLY_ORDER, "order {n} exceeds {MAX_CHAR_POLY_ORDER}");
    let a = |i: usize, j: usize| m.get(i, j);
    // coeffs[k] multiplies t^k; coeffs[n] = 1.
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut mk = vec![0.0; n * n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| a(i, l) * mk[l * n + j]).sum();
            }
            next[i * n + i] += coeffs[n - k + 1];
        }
        mk = next;
        // c_{n-k} = -tr(A·M_k)/k
        let trace: f64 = (0..n)
            .map(|i| (0..n).map(|l| a(i, l) * mk[l * n + i]).sum::<f64>())
            .sum();
        coeffs[n - k] = -trace / k as f64;
    }
    Poly::from_real(&coeffs)
}

/// All eigenvalues, as roots of the characteristic polynomial.
pub fn eigenvalues(m: &StochasticMatrix) -> Result<RootSet> {
    roots(&char_poly(m))
}
