//! Boundary and coboundary matrices.
//!
//! The boundary map is defined on basis elements by
//! `∂[v_0,...,v_k] = sum_i (-1)^i [v_0,...,v_{i-1},v_{i+1},...,v_k]`
//! with every simplex carried in its reference (ascending-vertex)
//! orientation. The coboundary map is the transpose. Over Z2 the signs
//! disappear and the matrix is the mod-2 incidence matrix.
//!
//! `reduced` only affects k = 0, where it appends the augmentation row
//! sending every vertex to the (-1)-simplex with coefficient +1.

use crate::complex::SimplicialComplex;
use crate::z2::Z2Matrix;
use crate::{Error, Result};

/// Integer matrix of `∂_k` under the reference orientation; entries in
/// {-1, 0, +1}. Rows are indexed by (k-1)-simplex ordinals, columns by
/// k-simplex ordinals. Its transpose is the matrix of `δ^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBoundaryMatrix {
    pub k: usize,
    pub reduced: bool,
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl SignedBoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// Dense rows as integer vectors (for exact elimination).
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    /// `Aᵀ·A`, an integer Gram matrix on the column index set.
    pub fn gram_tt(&self) -> Vec<i64> {
        let n = self.cols;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = 0;
                for r in 0..self.rows {
                    acc += self.get(r, i) * self.get(r, j);
                }
                out[i * n + j] = acc;
                out[j * n + i] = acc;
            }
        }
        out
    }

    /// `A·Aᵀ`, an integer Gram matrix on the row index set.
    pub fn gram_bb(&self) -> Vec<i64> {
        let n = self.rows;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = 0;
                for c in 0..self.cols {
                    acc += self.get(i, c) * self.get(j, c);
                }
                out[i * n + j] = acc;
                out[j * n + i] = acc;
            }
        }
        out
    }
}

fn check_dim(x: &SimplicialComplex, k: usize) -> Result<()> {
    if k > x.top_dim() {
        return Err(Error::DimensionOutOfRange { k, m: x.top_dim() });
    }
    Ok(())
}

/// The signed matrix of `∂_k` (rows: (k-1)-simplexes, cols: k-simplexes).
///
/// For k = 0 the unreduced matrix has zero rows; with `reduced` it is the
/// 1 x |S_0| augmentation row of ones.
pub fn signed_boundary(
    x: &SimplicialComplex,
    k: usize,
    reduced: bool,
) -> Result<SignedBoundaryMatrix> {
    check_dim(x, k)?;
    let cols = x.count(k);
    if k == 0 {
        let rows = usize::from(reduced);
        return Ok(SignedBoundaryMatrix {
            k,
            reduced,
            rows,
            cols,
            data: vec![1; rows * cols],
        });
    }
    let rows = x.count(k - 1);
    let mut m = SignedBoundaryMatrix {
        k,
        reduced,
        rows,
        cols,
        data: vec![0; rows * cols],
    };
    for (j, s) in x.simplices(k).iter().enumerate() {
        for (i, face) in s.faces().into_iter().enumerate() {
            let r = x.ordinal(&face).unwrap();
            m.set(r, j, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(m)
}

/// The mod-2 matrix of `∂_k` with the same indexing conventions.
pub fn z2_boundary(x: &SimplicialComplex, k: usize, reduced: bool) -> Result<Z2Matrix> {
    check_dim(x, k)?;
    let cols = x.count(k);
    if k == 0 {
        let rows = usize::from(reduced);
        let mut m = Z2Matrix::zeros(rows, cols);
        if reduced {
            for c in 0..cols {
                m.set(0, c, true);
            }
        }
        return Ok(m);
    }
    let rows = x.count(k - 1);
    let mut m = Z2Matrix::zeros(rows, cols);
    for (j, s) in x.simplices(k).iter().enumerate() {
        for face in s.faces() {
            m.set(x.ordinal(&face).unwrap(), j, true);
        }
    }
    Ok(m)
}
