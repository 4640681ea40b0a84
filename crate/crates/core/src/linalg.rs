//! Exact rank and nullity of sparse homogeneous linear systems.
//!
//! Rows are reduced fraction-free against an echelon set keyed by leading
//! column: `r ← p_lead·r − r_lead·p`, then normalized. The constraint systems
//! fed in here have two non-zeros per row, so reduced rows stay short.

use std::collections::HashMap;

use crate::scalar::ExactScalar;

/// A sparse row: `(column, coefficient)` pairs with strictly increasing
/// columns and non-zero coefficients.
pub type SparseRow<T> = Vec<(usize, T)>;

/// Incremental echelon form of a homogeneous system in `columns` unknowns.
#[derive(Clone, Debug)]
pub struct SparseKernel<T> {
    columns: usize,
    pivots: HashMap<usize, SparseRow<T>>,
}

impl<T: ExactScalar> SparseKernel<T> {
    pub fn new(columns: usize) -> Self {
        Self {
            columns,
            pivots: HashMap::new(),
        }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Dimension of the solution space.
    pub fn nullity(&self) -> usize {
        self.columns - self.rank()
    }

    /// Adds the equation `Σ coeff · x_col = 0`. Terms may be unsorted and
    /// may repeat a column. Returns whether the rank grew.
    ///
    /// Panics if a column is out of range.
    pub fn add_equation(&mut self, terms: impl IntoIterator<Item = (usize, T)>) -> bool {
        let mut row: SparseRow<T> = Vec::new();
        let mut raw: Vec<(usize, T)> = terms.into_iter().collect();
        raw.sort_by_key(|(c, _)| *c);
        for (col, coeff) in raw {
            assert!(col < self.columns, "column {col} out of range");
            match row.last_mut() {
                Some((last, acc)) if *last == col => *acc = acc.clone() + coeff,
                _ => row.push((col, coeff)),
            }
        }
        row.retain(|(_, c)| !c.is_zero());
        self.insert(row)
    }

    fn insert(&mut self, mut row: SparseRow<T>) -> bool {
        loop {
            let Some((lead, lead_coeff)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    normalize(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let pivot_lead = pivot[0].1.clone();
                    row = combine(&row, &pivot_lead, pivot, &lead_coeff);
                    normalize(&mut row);
                }
            }
        }
    }
}

/// `a·x − b·y` for sparse rows `x`, `y`, dropping cancelled entries.
fn combine<T: ExactScalar>(x: &[(usize, T)], a: &T, y: &[(usize, T)], b: &T) -> SparseRow<T> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        let take_x = k == y.len() || (i < x.len() && x[i].0 < y[k].0);
        let take_y = i == x.len() || (k < y.len() && y[k].0 < x[i].0);
        let (col, value) = if take_x {
            i += 1;
            (x[i - 1].0, a.clone() * x[i - 1].1.clone())
        } else if take_y {
            k += 1;
            (y[k - 1].0, -(b.clone() * y[k - 1].1.clone()))
        } else {
            i += 1;
            k += 1;
            (
                x[i - 1].0,
                a.clone() * x[i - 1].1.clone() - b.clone() * y[k - 1].1.clone(),
            )
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

fn normalize<T: ExactScalar>(row: &mut SparseRow<T>) {
    let mut coeffs: Vec<T> = row.iter().map(|(_, c)| c.clone()).collect();
    T::normalize(&mut coeffs);
    for ((_, c), v) in row.iter_mut().zip(coeffs) {
        *c = v;
    }
}
