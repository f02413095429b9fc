//! Exact rank, Betti number, and Smith normal form computations.
//!
//! Rational ranks use fraction-free (Bareiss) integer elimination over
//! arbitrary-precision integers; no floating point enters any rank or
//! Betti computation. Smith normal form diagnoses integral torsion, the
//! mechanism that decouples Z2 Cheeger numbers from real spectra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::boundary::{signed_boundary, z2_boundary, SignedBoundaryMatrix};
use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// Coefficient field for Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Z2,
    Rational,
}

/// Rank over the rationals of an integer matrix, by Bareiss elimination.
pub fn rational_rank(m: &SignedBoundaryMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    bareiss_rank(rows)
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = num / &prev; // exact division (Bareiss)
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// The k-th Betti number `dim ker ∂_k - rank ∂_{k+1}` in the given field.
///
/// `reduced` applies at k = 0 only, where it accounts for the augmentation
/// (so the reduced 0-th Betti number is the component count minus one).
pub fn betti(x: &SimplicialComplex, k: usize, field: Field, reduced: bool) -> Result<usize> {
    let m = x.top_dim();
    if k > m {
        return Err(Error::DimensionOutOfRange { k, m });
    }
    let rank = |kk: usize| -> Result<usize> {
        let red = reduced && kk == 0;
        Ok(match field {
            Field::Z2 => z2_boundary(x, kk, red)?.rank(),
            Field::Rational => rational_rank(&signed_boundary(x, kk, red)?),
        })
    };
    let rank_k = rank(k)?;
    let rank_k1 = if k < m { rank(k + 1)? } else { 0 };
    Ok(x.count(k) - rank_k - rank_k1)
}

/// Invariant factors of an integer matrix: nonzero diagonal of the Smith
/// normal form, satisfying `d_1 | d_2 | ...`. Their count is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one: the torsion coefficients of the integral
    /// homology one dimension below the matrix's chain dimension.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect()
    }
}

/// Smith normal form of a signed boundary matrix.
pub fn smith_normal_form(m: &SignedBoundaryMatrix) -> SmithForm {
    let a: Vec<Vec<BigInt>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    SmithForm {
        invariant_factors: smith(a),
    }
}

fn smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest-magnitude nonzero pivot keeps coefficient growth down
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        'improve: loop {
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..cols {
                        let sub = &q * &a[t][j];
                        a[i][j] -= sub;
                    }
                    if !a[i][t].is_zero() {
                        // remainder is strictly smaller: promote it to pivot
                        a.swap(t, i);
                        continue 'improve;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut().take(rows).skip(t) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, t, j);
                        continue 'improve;
                    }
                }
            }
            // pivot must divide the rest of the submatrix for d_t | d_{t+1}
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..cols {
                            let add = a[i][jj].clone();
                            a[t][jj] += add;
                        }
                        continue 'improve;
                    }
                }
            }
            break;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a {
            row.swap(i, j);
        }
    }
}
