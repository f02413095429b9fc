//! Bit-packed linear algebra over Z2.
//!
//! Chains and cochains over Z2 are identified with subsets of the simplex
//! set of their dimension, stored as dense bit vectors. Matrices are
//! row-packed into 64-bit words; elimination is word-XOR.

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use crate::{Error, Result};

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64).max(1)
}

/// A Z2 k-chain (equivalently k-cochain): a subset of the k-simplexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Chain {
    dim: usize,
    len: usize,
    words: Vec<u64>,
}

impl Z2Chain {
    pub fn zero(dim: usize, len: usize) -> Self {
        Z2Chain {
            dim,
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_ordinals(dim: usize, len: usize, ordinals: &[usize]) -> Self {
        let mut c = Z2Chain::zero(dim, len);
        for &i in ordinals {
            c.set(i, true);
        }
        c
    }

    /// Low 64 bits given directly; only valid for `len <= 64`.
    pub fn from_mask_u64(dim: usize, len: usize, mask: u64) -> Self {
        assert!(len <= 64);
        debug_assert!(len == 64 || mask >> len == 0, "mask has bits beyond len");
        let mut c = Z2Chain::zero(dim, len);
        c.words[0] = mask;
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Hamming norm.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Z2Chain) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn ordinals(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// The simplexes this chain selects, in ordinal order.
    pub fn simplices<'a>(&self, x: &'a SimplicialComplex) -> Vec<&'a Simplex> {
        let all = x.simplices(self.dim);
        self.ordinals().into_iter().map(|i| &all[i]).collect()
    }
}

/// A dense matrix over Z2 with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Matrix {
    rows: usize,
    cols: usize,
    row_words: usize,
    data: Vec<u64>,
}

impl Z2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let row_words = words_for(cols);
        Z2Matrix {
            rows,
            cols,
            row_words,
            data: vec![0; rows * row_words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.row_words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = r * self.row_words + c / 64;
        if v {
            self.data[w] |= 1 << (c % 64);
        } else {
            self.data[w] &= !(1 << (c % 64));
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.row_words..(r + 1) * self.row_words]
    }

    pub fn transpose(&self) -> Z2Matrix {
        let mut t = Z2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Matrix-vector product; `v` must have length `cols`.
    pub fn apply(&self, v: &Z2Chain, out_dim: usize) -> Result<Z2Chain> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = Z2Chain::zero(out_dim, self.rows);
        for r in 0..self.rows {
            let dot = self
                .row(r)
                .iter()
                .zip(v.words())
                .fold(0u64, |acc, (a, b)| acc ^ (a & b));
            if dot.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Rank over Z2 by word-packed Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    /// Reduced row-echelon basis of the row space.
    pub fn row_space(&self) -> Z2Subspace {
        let rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        Z2Subspace::from_generators(self.cols, rows)
    }

    /// Reduced row-echelon basis of the column space.
    pub fn column_space(&self) -> Z2Subspace {
        self.transpose().row_space()
    }

    /// Rank, pivot basis of the column space, and (optionally) whether a
    /// probe vector lies in the column space. The probe must have length
    /// equal to the row count.
    pub fn rank_and_membership(
        &self,
        probe: Option<&Z2Chain>,
    ) -> Result<(usize, Z2Subspace, Option<bool>)> {
        let space = self.column_space();
        let member = match probe {
            None => None,
            Some(p) => {
                if p.len() != self.rows {
                    return Err(Error::ShapeMismatch {
                        expected: self.rows,
                        got: p.len(),
                    });
                }
                Some(space.contains(p.words()))
            }
        };
        Ok((space.rank(), space, member))
    }
}

/// A subspace of Z2^n in reduced row-echelon form: each basis vector owns a
/// pivot position that is zero in every other basis vector. Canonical coset
/// representatives are obtained by eliminating all pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<u64>>,
}

impl Z2Subspace {
    pub fn from_generators(ambient: usize, gens: Vec<Vec<u64>>) -> Self {
        let words = words_for(ambient);
        let mut sub = Z2Subspace {
            ambient,
            pivots: Vec::new(),
            basis: Vec::new(),
        };
        for g in gens {
            debug_assert_eq!(g.len(), words);
            sub.insert(g);
        }
        sub
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (a, c) in v.iter_mut().zip(b) {
                    *a ^= c;
                }
            }
        }
        let Some(p) = lowest_bit(&v) else { return };
        for b in &mut self.basis {
            if b[p / 64] >> (p % 64) & 1 == 1 {
                for (a, c) in b.iter_mut().zip(&v) {
                    *a ^= c;
                }
            }
        }
        // keep pivots sorted for deterministic reduction order
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    /// Positions that are not pivots, ascending. A canonical coset
    /// representative is supported only here.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.pivots.len());
        let mut it = self.pivots.iter().peekable();
        for i in 0..self.ambient {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        out
    }

    /// Reduces `v` to the canonical representative of its coset.
    pub fn canonicalize(&self, v: &[u64]) -> Vec<u64> {
        let mut out = v.to_vec();
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            if out[p / 64] >> (p % 64) & 1 == 1 {
                for (a, c) in out.iter_mut().zip(b) {
                    *a ^= c;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.canonicalize(v).iter().all(|&w| w == 0)
    }
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    for (i, &w) in v.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}
