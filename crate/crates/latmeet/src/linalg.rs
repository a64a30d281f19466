//! Exact linear algebra: ranks of matrices over the coefficient field.
//!
//! Syzygy and Koszul computations reduce to ranks of large, very sparse
//! matrices with small integer entries. Two independent engines are provided:
//! a dense fraction-free elimination (simple, used as an oracle and for small
//! blocks) and a sparse elimination with Markowitz pivoting (used for the big
//! blocks, where fill-in is the enemy). Both are exact and deterministic.

use std::collections::BTreeSet;

use crate::Scalar;

/// A sparse matrix in row-major form; rows hold `(column, value)` pairs sorted
/// by column with no zeros and no duplicates.
#[derive(Debug, Clone)]
pub struct SparseMatrix<C: Scalar> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, C)>>,
}

impl<C: Scalar> SparseMatrix<C> {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Adds `v` to the `(r, c)` entry.
    pub fn add_entry(&mut self, r: usize, c: usize, v: C) {
        assert!(r < self.nrows && c < self.ncols, "entry out of bounds");
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |&(col, _)| col) {
            Ok(k) => {
                let sum = row[k].1.clone() + v;
                if sum.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = sum;
                }
            }
            Err(k) => row.insert(k, (c, v)),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<C>> {
        let mut out = vec![vec![C::zero(); self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    /// Rank by sparse Gaussian elimination.
    ///
    /// Pivots are chosen by Markowitz cost `(row_nnz - 1) * (col_nnz - 1)`,
    /// ties broken by lowest column then lowest row, so the elimination path
    /// is deterministic.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Option<Vec<(usize, C)>>> = self
            .rows
            .iter()
            .map(|r| if r.is_empty() { None } else { Some(r.clone()) })
            .collect();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.ncols];
        for (i, r) in rows.iter().enumerate() {
            if let Some(r) = r {
                for (c, _) in r {
                    col_rows[*c].insert(i);
                }
            }
        }

        let mut rank = 0;
        loop {
            // Pivot scan: lexicographically first (cost, col, row).
            let mut best: Option<(usize, usize, usize)> = None;
            'scan: for (c, in_col) in col_rows.iter().enumerate() {
                let cl = in_col.len();
                if cl == 0 {
                    continue;
                }
                for &i in in_col {
                    let rl = rows[i].as_ref().expect("indexed row is active").len();
                    let cost = (rl - 1) * (cl - 1);
                    let cand = (cost, c, i);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                        if cost == 0 {
                            // Scanning columns then rows in ascending order, the
                            // first zero-cost hit is already the tie-rule winner.
                            break 'scan;
                        }
                    }
                }
            }
            let Some((_, pc, pr)) = best else { break };

            let prow = rows[pr].take().expect("pivot row is active");
            for (c, _) in &prow {
                col_rows[*c].remove(&pr);
            }
            let pval = prow
                .iter()
                .find(|&&(c, _)| c == pc)
                .map(|(_, v)| v.clone())
                .expect("pivot entry present");

            let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
            for i in targets {
                let row = rows[i].take().expect("target row is active");
                for (c, _) in &row {
                    col_rows[*c].remove(&i);
                }
                let rval = row
                    .iter()
                    .find(|&&(c, _)| c == pc)
                    .map(|(_, v)| v.clone())
                    .expect("target row meets pivot column");
                let factor = rval / pval.clone();
                let new_row = row_axpy(&row, &factor, &prow);
                if !new_row.is_empty() {
                    for (c, _) in &new_row {
                        col_rows[*c].insert(i);
                    }
                    rows[i] = Some(new_row);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// `row - factor * pivot`, both sorted by column; zero results dropped.
fn row_axpy<C: Scalar>(
    row: &[(usize, C)],
    factor: &C,
    pivot: &[(usize, C)],
) -> Vec<(usize, C)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() && j < pivot.len() {
        let (ca, va) = &row[i];
        let (cb, vb) = &pivot[j];
        if ca < cb {
            out.push((*ca, va.clone()));
            i += 1;
        } else if cb < ca {
            out.push((*cb, -(factor.clone() * vb.clone())));
            j += 1;
        } else {
            let v = va.clone() - factor.clone() * vb.clone();
            if !v.is_zero() {
                out.push((*ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(row[i..].iter().cloned());
    out.extend(pivot[j..].iter().map(|(c, v)| (*c, -(factor.clone() * v.clone()))));
    out
}

/// Rank by dense fraction-free (Bareiss) elimination.
///
/// Pivot search is row-major first-nonzero: columns left to right, and within
/// a column the first remaining row with a nonzero entry.
pub fn dense_rank<C: Scalar>(mut a: Vec<Vec<C>>) -> usize {
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    debug_assert!(a.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut rank = 0;
    let mut prev = C::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let v = (a[i][j].clone() * a[r][c].clone()
                    - a[i][c].clone() * a[r][j].clone())
                    / prev.clone();
                a[i][j] = v;
            }
            a[i][c] = C::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        rank += 1;
    }
    rank
}
