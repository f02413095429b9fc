//! Combinatorial Laplacians and their spectra.
//!
//! `L_k = L_k^up + L_k^down` with `L_k^up = ∂_{k+1} δ^k` and
//! `L_k^down = δ^{k-1} ∂_k`, built from the signed boundary matrices under
//! the reference orientation. Entries are integers; the float copy exists
//! only to be diagonalized.
//!
//! Zero/nonzero separation of eigenvalues is never decided by float
//! thresholds: the zero multiplicity of each operator is its exact kernel
//! dimension over the rationals, and the spectral gaps `λ^k`, `λ_k` return
//! exact zero whenever the corresponding (co)homology is nonzero.

use crate::boundary::signed_boundary;
use crate::complex::SimplicialComplex;
use crate::exact::{betti, rational_rank, Field};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaplacianKind {
    Up,
    Down,
    Full,
}

/// Which of the two Rayleigh quotients a gap refers to: `λ^k` minimizes
/// `‖δf‖²/‖f‖²` over cochains orthogonal to `im δ` (up), `λ_k` minimizes
/// `‖∂f‖²/‖f‖²` over chains orthogonal to `im ∂` (down).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapDirection {
    Up,
    Down,
}

/// A dense symmetric Laplacian with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laplacian {
    pub k: usize,
    pub kind: LaplacianKind,
    pub reduced: bool,
    n: usize,
    entries: Vec<i64>,
}

impl Laplacian {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn int_entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.int_entry(i, j) as f64
    }

    pub fn to_dense(&self) -> Vec<f64> {
        self.entries.iter().map(|&v| v as f64).collect()
    }

    pub fn int_entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.int_entry(i, i)).sum()
    }
}

/// Builds `L_k` of the requested kind. The unreduced `L_0^down` is
/// identically zero; `reduced` switches in the augmentation at k = 0.
pub fn laplacian(
    x: &SimplicialComplex,
    k: usize,
    kind: LaplacianKind,
    reduced: bool,
) -> Result<Laplacian> {
    let m = x.top_dim();
    if k > m {
        return Err(Error::DimensionOutOfRange { k, m });
    }
    let n = x.count(k);
    let mut entries = vec![0i64; n * n];
    if matches!(kind, LaplacianKind::Up | LaplacianKind::Full) && k < m {
        let b = signed_boundary(x, k + 1, false)?;
        for (i, v) in b.gram_bb().into_iter().enumerate() {
            entries[i] += v;
        }
    }
    if matches!(kind, LaplacianKind::Down | LaplacianKind::Full) {
        let a = signed_boundary(x, k, reduced && k == 0)?;
        for (i, v) in a.gram_tt().into_iter().enumerate() {
            entries[i] += v;
        }
    }
    Ok(Laplacian {
        k,
        kind,
        reduced,
        n,
        entries,
    })
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Row-major input of size n*n.
///
/// Convergence: every off-diagonal magnitude below `tol * ‖M‖_F`, with a
/// hard cap of 100 sweeps. The sweep order is fixed, so results are
/// deterministic.
pub fn jacobi_eigenvalues(matrix: &[f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    assert_eq!(matrix.len(), n * n);
    let fro = matrix.iter().map(|v| v * v).sum::<f64>().sqrt();
    for i in 0..n {
        for j in 0..n {
            if (matrix[i * n + j] - matrix[j * n + i]).abs() > 1e-12 * fro.max(1.0) {
                return Err(Error::NonSymmetric);
            }
        }
    }
    let mut a = matrix.to_vec();
    if fro == 0.0 || n < 2 {
        let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        d.sort_by(|x, y| x.partial_cmp(y).unwrap());
        return Ok(d);
    }
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off: f64 = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(a[p * n + q].abs());
            }
        }
        if off < tol * fro {
            let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            d.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(d);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    // avoid overflow in theta^2
                    1.0 / (2.0 * theta)
                } else {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                a[p * n + p] -= h;
                a[q * n + q] += h;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let g = a[j * n + p];
                    let hh = a[j * n + q];
                    a[j * n + p] = g - s * (hh + g * tau);
                    a[j * n + q] = hh + s * (g - hh * tau);
                    a[p * n + j] = a[j * n + p];
                    a[q * n + j] = a[j * n + q];
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

/// Eigenvalues of a Laplacian, sorted ascending.
pub fn symmetric_spectrum(l: &Laplacian, tol: f64) -> Result<Vec<f64>> {
    jacobi_eigenvalues(&l.to_dense(), l.n(), tol)
}

/// Sorted eigenvalue list with the zero block counted exactly.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    /// Exact kernel dimension of the operator (rational rank computation),
    /// not a float threshold count.
    pub zero_multiplicity: usize,
    /// Smallest eigenvalue beyond the zero block, if any.
    pub gap: Option<f64>,
}

/// Spectrum plus the exact zero multiplicity for the given kind:
/// `dim ker δ^k` (up), `dim ker ∂_k` (down), or the rational Betti number
/// (full).
pub fn spectral_report(
    x: &SimplicialComplex,
    k: usize,
    kind: LaplacianKind,
    reduced: bool,
    tol: f64,
) -> Result<SpectralReport> {
    let l = laplacian(x, k, kind, reduced)?;
    let eigenvalues = symmetric_spectrum(&l, tol)?;
    let zero_multiplicity = match kind {
        LaplacianKind::Up => kernel_dim_up(x, k)?,
        LaplacianKind::Down => kernel_dim_down(x, k, reduced)?,
        LaplacianKind::Full => betti(x, k, Field::Rational, reduced)?,
    };
    let gap = eigenvalues.get(zero_multiplicity).copied();
    Ok(SpectralReport {
        eigenvalues,
        zero_multiplicity,
        gap,
    })
}

fn kernel_dim_up(x: &SimplicialComplex, k: usize) -> Result<usize> {
    // ker δ^k has the same dimension as ker of its transpose's row space:
    // |S_k| - rank ∂_{k+1}
    let rank = if k < x.top_dim() {
        rational_rank(&signed_boundary(x, k + 1, false)?)
    } else {
        0
    };
    Ok(x.count(k) - rank)
}

fn kernel_dim_down(x: &SimplicialComplex, k: usize, reduced: bool) -> Result<usize> {
    let rank = rational_rank(&signed_boundary(x, k, reduced && k == 0)?);
    Ok(x.count(k) - rank)
}

/// The spectral gap `λ^k` (up) or `λ_k` (down).
///
/// Exact gate: when the rational (co)homology at k is nonzero the gap is
/// exactly 0. Otherwise the result is the (z+1)-th smallest eigenvalue of
/// the corresponding Laplacian, where z is the exact kernel dimension.
/// Returns `None` when the minimization runs over an empty set (the kernel
/// is the whole space), e.g. `λ^{m-1}` of the boundary of a simplex.
pub fn spectral_gap(
    x: &SimplicialComplex,
    k: usize,
    direction: GapDirection,
    reduced: bool,
    tol: f64,
) -> Result<Option<f64>> {
    let m = x.top_dim();
    if k > m {
        return Err(Error::DimensionOutOfRange { k, m });
    }
    if betti(x, k, Field::Rational, reduced)? > 0 {
        return Ok(Some(0.0));
    }
    let (kind, z) = match direction {
        GapDirection::Up => (LaplacianKind::Up, kernel_dim_up(x, k)?),
        GapDirection::Down => (LaplacianKind::Down, kernel_dim_down(x, k, reduced)?),
    };
    if z == x.count(k) {
        return Ok(None);
    }
    let l = laplacian(x, k, kind, reduced)?;
    let eigenvalues = symmetric_spectrum(&l, tol)?;
    Ok(Some(eigenvalues[z]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::DEFAULT_EIG_TOL;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-8
    }

    #[test]
    fn graph_laplacian_of_an_edge() {
        let x = SimplicialComplex::build(&[vec![0, 1]]).unwrap();
        let l = laplacian(&x, 0, LaplacianKind::Up, false).unwrap();
        assert_eq!(l.int_entries(), &[1, -1, -1, 1]);
        let eig = symmetric_spectrum(&l, DEFAULT_EIG_TOL).unwrap();
        assert!(close(eig[0], 0.0) && close(eig[1], 2.0));
    }

    #[test]
    fn identity_spectrum() {
        let eye: Vec<f64> = (0..16)
            .map(|i| if i % 5 == 0 { 1.0 } else { 0.0 })
            .collect();
        let eig = jacobi_eigenvalues(&eye, 4, DEFAULT_EIG_TOL).unwrap();
        assert!(eig.iter().all(|&v| close(v, 1.0)));
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let m = vec![1.0, 2.0, 0.0, 1.0];
        assert!(matches!(
            jacobi_eigenvalues(&m, 2, DEFAULT_EIG_TOL),
            Err(Error::NonSymmetric)
        ));
    }

    #[test]
    fn top_laplacian_has_no_up_part() {
        let x = generators::xk(2, 2);
        let full = laplacian(&x, 2, LaplacianKind::Full, false).unwrap();
        let down = laplacian(&x, 2, LaplacianKind::Down, false).unwrap();
        assert_eq!(full.int_entries(), down.int_entries());
    }

    #[test]
    fn unreduced_l0_down_is_zero_and_reduced_is_all_ones() {
        let x = SimplicialComplex::build(&[vec![0, 1], vec![1, 2]]).unwrap();
        let l = laplacian(&x, 0, LaplacianKind::Down, false).unwrap();
        assert!(l.int_entries().iter().all(|&v| v == 0));
        let l = laplacian(&x, 0, LaplacianKind::Down, true).unwrap();
        assert!(l.int_entries().iter().all(|&v| v == 1));
    }

    #[test]
    fn reduced_gap_of_an_edge_is_two() {
        let x = SimplicialComplex::build(&[vec![0, 1]]).unwrap();
        let gap = spectral_gap(&x, 0, GapDirection::Up, true, DEFAULT_EIG_TOL)
            .unwrap()
            .unwrap();
        assert!(close(gap, 2.0));
        // unreduced, constants are harmonic: exact zero by the gate
        let gap = spectral_gap(&x, 0, GapDirection::Up, false, DEFAULT_EIG_TOL)
            .unwrap()
            .unwrap();
        assert_eq!(gap, 0.0);
    }

    #[test]
    fn sigma_gap_direction_none_when_kernel_is_everything() {
        // boundary of a simplex: top cochains are all coboundaries
        let x = generators::sigma(2);
        let gap = spectral_gap(&x, 2, GapDirection::Up, false, DEFAULT_EIG_TOL).unwrap();
        assert!(gap.is_none());
    }

    #[test]
    fn trace_of_up_laplacian_counts_incidences() {
        let x = generators::xk(2, 3);
        for k in 0..2 {
            let l = laplacian(&x, k, LaplacianKind::Up, false).unwrap();
            assert_eq!(l.trace(), ((k + 2) * x.count(k + 1)) as i64);
        }
    }
}
