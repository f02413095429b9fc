//! Exact coboundary and boundary Cheeger numbers.
//!
//! `h^k` minimizes `‖δφ‖ / min_{ψ ∈ im δ} ‖φ+ψ‖` over Z2 k-cochains
//! `φ ∉ im δ`; `h_k` is the same with the boundary map. The numerator is
//! constant on each coset of the image subspace (δδ = ∂∂ = 0), so the
//! sweep walks all `2^{|S_k|}` bit vectors in Gray-code order, reduces each
//! to a canonical coset key against the image pivot basis, and tracks the
//! per-coset minimal weight and argmin chain. The result is an exact
//! rational with a re-verifiable witness.
//!
//! The value is exactly 0 precisely when some nonzero coset has numerator
//! 0, i.e. when the corresponding Z2 (co)homology is nonzero.
//!
//! ```
//! use scx_core::*;
//!
//! // two gluing rounds: the top Cheeger number drops from 3 to 3/2,
//! // attained by the chain of all four facets
//! let x = generators::xk(2, 2);
//! let result = cheeger(&x, 2, Direction::Boundary, false, &Caps::default()).unwrap();
//! let cert = result.certificate().unwrap();
//! assert_eq!(cert.value, Rational64::new(3, 2));
//! assert_eq!((cert.numerator, cert.denominator), (6, 4));
//! assert!(verify_certificate(&x, 2, Direction::Boundary, false, cert, &Caps::default()).unwrap());
//! ```

use num_rational::Ratio;

use crate::boundary::z2_boundary;
use crate::complex::SimplicialComplex;
use crate::exact::{betti, Field};
use crate::z2::{Z2Chain, Z2Matrix, Z2Subspace};
use crate::{Caps, Error, Result};

pub type Rational64 = Ratio<i64>;

/// Which map the ratio is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `h^k`: numerator `‖δ^k φ‖`, image subspace `im δ^{k-1}`.
    Coboundary,
    /// `h_k`: numerator `‖∂_k φ‖`, image subspace `im ∂_{k+1}`.
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheegerMethod {
    Brute,
    Structural,
}

/// An exact Cheeger value together with its attaining chain.
///
/// Invariants: `value = numerator / denominator`, the witness is outside
/// the image subspace, and the denominator is the minimal Hamming weight
/// in the witness's coset (see [`verify_certificate`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheegerCertificate {
    pub value: Rational64,
    pub witness: Z2Chain,
    pub numerator: u64,
    pub denominator: u64,
    pub method: CheegerMethod,
}

/// Outcome of a Cheeger computation. `NoAdmissibleChain` occurs when the
/// image subspace is all of `C_k`, so the minimization has an empty
/// domain (e.g. `h^{m-1}` of the full simplex boundary `Σ^{m-1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheegerResult {
    Finite(CheegerCertificate),
    NoAdmissibleChain,
}

impl CheegerResult {
    pub fn certificate(&self) -> Option<&CheegerCertificate> {
        match self {
            CheegerResult::Finite(c) => Some(c),
            CheegerResult::NoAdmissibleChain => None,
        }
    }

    pub fn value(&self) -> Option<Rational64> {
        self.certificate().map(|c| c.value)
    }

    /// True when `value >= bound`, treating the empty minimization as +∞.
    pub fn at_least(&self, bound: Rational64) -> bool {
        match self.value() {
            Some(v) => v >= bound,
            None => true,
        }
    }
}

/// Chains of equal weight tie-break lexicographically on their sorted
/// ordinal lists; for equal weights that is exactly "contains the smallest
/// ordinal of the symmetric difference".
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b).trailing_zeros();
    a >> low & 1 == 1
}

struct SweepEntry {
    weight: u32,
    argmin: u64,
    numerator: u32,
}

pub(crate) struct SweepBest {
    pub numerator: u64,
    pub weight: u64,
    pub argmin_mask: u64,
}

/// Shared exact sweep: minimize `‖N φ‖ / min-coset-weight` over nonzero
/// cosets of `span(gens)` in Z2^n. `num_masks[i]` is the image of the i-th
/// unit vector under the numerator map, bit-packed. Returns `None` when
/// the span is all of Z2^n.
pub(crate) fn coset_min_sweep(
    n: usize,
    num_words: usize,
    num_masks: &[Vec<u64>],
    gens: Vec<u64>,
    caps: &Caps,
    context: &'static str,
) -> Result<Option<SweepBest>> {
    assert_eq!(num_masks.len(), n);
    if n > caps.brute_cap_bits as usize || n >= 64 {
        return Err(Error::BeyondBruteForceCap {
            context,
            bits: n,
            cap: caps.brute_cap_bits,
        });
    }
    let image = Z2Subspace::from_generators(n, gens.into_iter().map(|g| vec![g]).collect());
    let free = image.free_positions();
    if free.len() > caps.coset_cap_bits as usize {
        return Err(Error::BeyondBruteForceCap {
            context: "coset table",
            bits: free.len(),
            cap: caps.coset_cap_bits,
        });
    }
    if free.is_empty() {
        return Ok(None);
    }
    // compressed canonical key of each unit vector: canonical forms are
    // supported on the free positions, which we pack densely
    let compress = |v: u64| -> u64 {
        let mut out = 0u64;
        for (slot, &pos) in free.iter().enumerate() {
            out |= (v >> pos & 1) << slot;
        }
        out
    };
    let unit_keys: Vec<u64> = (0..n)
        .map(|i| compress(image.canonicalize(&[1u64 << i])[0]))
        .collect();

    let mut table: Vec<SweepEntry> = (0..1usize << free.len())
        .map(|_| SweepEntry {
            weight: u32::MAX,
            argmin: 0,
            numerator: 0,
        })
        .collect();
    let mut phi = 0u64;
    let mut key = 0u64;
    let mut numbuf = vec![0u64; num_words];
    let mut weight = 0u32;
    for step in 1u64..1u64 << n {
        let bit = step.trailing_zeros() as usize;
        phi ^= 1 << bit;
        key ^= unit_keys[bit];
        for (acc, w) in numbuf.iter_mut().zip(&num_masks[bit]) {
            *acc ^= w;
        }
        weight = if phi >> bit & 1 == 1 {
            weight + 1
        } else {
            weight - 1
        };
        let entry = &mut table[key as usize];
        if entry.weight == u32::MAX {
            entry.weight = weight;
            entry.argmin = phi;
            entry.numerator = numbuf.iter().map(|w| w.count_ones()).sum();
        } else if weight < entry.weight || (weight == entry.weight && lex_less(phi, entry.argmin)) {
            entry.weight = weight;
            entry.argmin = phi;
        }
    }
    let mut best: Option<(Rational64, &SweepEntry)> = None;
    for entry in table.iter().skip(1) {
        if entry.weight == u32::MAX {
            continue;
        }
        let ratio = Ratio::new(entry.numerator as i64, entry.weight as i64);
        let better = match &best {
            None => true,
            Some((r, e)) => ratio < *r || (ratio == *r && lex_less(entry.argmin, e.argmin)),
        };
        if better {
            best = Some((ratio, entry));
        }
    }
    let (_, entry) = best.expect("nonzero coset exists when free positions do");
    Ok(Some(SweepBest {
        numerator: entry.numerator as u64,
        weight: entry.weight as u64,
        argmin_mask: entry.argmin,
    }))
}

/// Rows of a Z2 matrix as u64 masks over its columns (needs cols <= 64).
fn rows_as_masks(m: &Z2Matrix) -> Vec<u64> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .filter(|&c| m.get(r, c))
                .fold(0u64, |acc, c| acc | 1 << c)
        })
        .collect()
}

/// Numerator map and image generators for one direction at dimension k.
fn maps_for(
    x: &SimplicialComplex,
    k: usize,
    direction: Direction,
    reduced: bool,
) -> Result<(usize, Vec<Vec<u64>>, Vec<u64>)> {
    let m = x.top_dim();
    let n = x.count(k);
    match direction {
        Direction::Coboundary => {
            // numerator δ^k: bit i maps to row i of ∂_{k+1}
            let (num_words, num_masks) = if k < m {
                let b = z2_boundary(x, k + 1, false)?;
                let words = b.cols().div_ceil(64).max(1);
                let masks = (0..n).map(|i| b.row(i).to_vec()).collect();
                (words, masks)
            } else {
                (1, vec![vec![0u64]; n])
            };
            let gens = if k == 0 {
                if reduced {
                    vec![(0..n).fold(0u64, |acc, i| acc | 1 << i)]
                } else {
                    Vec::new()
                }
            } else {
                rows_as_masks(&z2_boundary(x, k, false)?)
            };
            Ok((num_words, num_masks, gens))
        }
        Direction::Boundary => {
            let d = z2_boundary(x, k, reduced && k == 0)?;
            let num_words = d.rows().div_ceil(64).max(1);
            let dt = d.transpose();
            let num_masks = (0..n)
                .map(|i| {
                    if d.rows() == 0 {
                        vec![0u64]
                    } else {
                        dt.row(i).to_vec()
                    }
                })
                .collect();
            let gens = if k < m {
                rows_as_masks(&z2_boundary(x, k + 1, false)?.transpose())
            } else {
                Vec::new()
            };
            Ok((num_words, num_masks, gens))
        }
    }
}

/// The k-th Cheeger number of the requested direction, computed exactly by
/// the coset sweep. `reduced` modifies dimension 0 only: the coboundary
/// image becomes `span{1}` (graph Cheeger constant) and the boundary
/// numerator becomes the augmentation.
pub fn cheeger(
    x: &SimplicialComplex,
    k: usize,
    direction: Direction,
    reduced: bool,
    caps: &Caps,
) -> Result<CheegerResult> {
    let m = x.top_dim();
    if k > m {
        return Err(Error::DimensionOutOfRange { k, m });
    }
    let n = x.count(k);
    let context = match direction {
        Direction::Coboundary => "coboundary Cheeger sweep",
        Direction::Boundary => "boundary Cheeger sweep",
    };
    if n > caps.brute_cap_bits as usize || n >= 64 {
        return Err(Error::BeyondBruteForceCap {
            context,
            bits: n,
            cap: caps.brute_cap_bits,
        });
    }
    let (num_words, num_masks, gens) = maps_for(x, k, direction, reduced)?;
    match coset_min_sweep(n, num_words, &num_masks, gens, caps, context)? {
        None => Ok(CheegerResult::NoAdmissibleChain),
        Some(best) => Ok(CheegerResult::Finite(CheegerCertificate {
            value: Ratio::new(best.numerator as i64, best.weight as i64),
            witness: Z2Chain::from_mask_u64(k, n, best.argmin_mask),
            numerator: best.numerator,
            denominator: best.weight,
            method: CheegerMethod::Brute,
        })),
    }
}

/// Structural fast paths that bypass the exponential sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructuralTarget {
    /// `h_1 = 2 / diam(X)` for connected complexes with `H_1(Z2) = 0`,
    /// witnessed by a diametral geodesic.
    H1ViaDiameter,
    /// `h^{m-1} = 1 / rad(X)` when `H^{m-1}(Z2) = H_m(Z2) = 0`, witnessed
    /// by a depth-attaining cochain of a deepest facet.
    TopCochainViaRadius,
}

/// Computes `h_1` or `h^{m-1}` from the metric structure. Each hypothesis
/// is checked and the failing one is named in the error.
pub fn structural_cheeger(
    x: &SimplicialComplex,
    target: StructuralTarget,
    caps: &Caps,
) -> Result<CheegerCertificate> {
    let m = x.top_dim();
    match target {
        StructuralTarget::H1ViaDiameter => {
            if m < 1 {
                return Err(Error::HypothesisViolated("top dimension at least 1"));
            }
            if betti(x, 1, Field::Z2, false)? != 0 {
                return Err(Error::HypothesisViolated("H_1(Z2) = 0"));
            }
            if !x.is_connected() {
                return Err(Error::HypothesisViolated("connected 1-skeleton"));
            }
            let rep = x.distance_and_diameter();
            let diam = rep.diam as i64;
            let witness = rep.witnesses[0].chain.clone();
            Ok(CheegerCertificate {
                value: Ratio::new(2, diam),
                witness,
                numerator: 2,
                denominator: diam as u64,
                method: CheegerMethod::Structural,
            })
        }
        StructuralTarget::TopCochainViaRadius => {
            if m < 1 {
                return Err(Error::HypothesisViolated("top dimension at least 1"));
            }
            // at m = 1 the cochain Cheeger number below top dimension only
            // makes sense reduced
            if betti(x, m - 1, Field::Z2, m == 1)? != 0 {
                return Err(Error::HypothesisViolated("H^{m-1}(Z2) = 0"));
            }
            if betti(x, m, Field::Z2, false)? != 0 {
                return Err(Error::HypothesisViolated("H_m(Z2) = 0"));
            }
            let rep = x.depth_and_radius(caps)?;
            let deepest = (0..rep.depth.len())
                .max_by_key(|&f| rep.depth[f])
                .expect("top dimension is nonempty");
            Ok(CheegerCertificate {
                value: Ratio::new(1, rep.radius as i64),
                witness: rep.witnesses[deepest].clone(),
                numerator: 1,
                denominator: rep.radius as u64,
                method: CheegerMethod::Structural,
            })
        }
    }
}

/// Exact ratio `‖∂φ‖ / ‖φ‖` of a nonzero top-dimensional chain. Since the
/// top image subspace is trivial, every chain is coset-minimal and this is
/// a certified upper bound for `h_m`.
pub fn top_chain_upper_bound(x: &SimplicialComplex, chain: &Z2Chain) -> Result<Rational64> {
    let m = x.top_dim();
    if chain.dim() != m || chain.len() != x.count(m) {
        return Err(Error::ShapeMismatch {
            expected: x.count(m),
            got: chain.len(),
        });
    }
    if chain.is_zero() {
        return Err(Error::EmptyInput);
    }
    let d = z2_boundary(x, m, false)?;
    let boundary = d.apply(chain, m - 1)?;
    Ok(Ratio::new(boundary.weight() as i64, chain.weight() as i64))
}

/// Re-derives a certificate from scratch: recomputes the numerator from
/// the witness, checks the witness lies outside the image subspace, and
/// exhaustively re-minimizes the witness's coset to reproduce the
/// denominator.
pub fn verify_certificate(
    x: &SimplicialComplex,
    k: usize,
    direction: Direction,
    reduced: bool,
    cert: &CheegerCertificate,
    caps: &Caps,
) -> Result<bool> {
    let m = x.top_dim();
    let n = x.count(k);
    if cert.witness.len() != n || cert.witness.dim() != k {
        return Err(Error::ShapeMismatch {
            expected: n,
            got: cert.witness.len(),
        });
    }
    // numerator from the witness
    let num = match direction {
        Direction::Coboundary => {
            if k < m {
                let b = z2_boundary(x, k + 1, false)?;
                b.transpose().apply(&cert.witness, k + 1)?.weight()
            } else {
                0
            }
        }
        Direction::Boundary => {
            let d = z2_boundary(x, k, reduced && k == 0)?;
            if d.rows() == 0 {
                0
            } else {
                d.apply(&cert.witness, k.saturating_sub(1))?.weight()
            }
        }
    };
    if num != cert.numerator {
        return Ok(false);
    }
    // image subspace basis, as full-width chains
    let image_basis: Vec<Z2Chain> = match direction {
        Direction::Coboundary => {
            if k == 0 {
                if reduced {
                    vec![Z2Chain::from_ordinals(k, n, &(0..n).collect::<Vec<_>>())]
                } else {
                    Vec::new()
                }
            } else {
                let d = z2_boundary(x, k, false)?;
                (0..d.rows())
                    .map(|r| {
                        let mut c = Z2Chain::zero(k, n);
                        for j in 0..n {
                            if d.get(r, j) {
                                c.set(j, true);
                            }
                        }
                        c
                    })
                    .collect()
            }
        }
        Direction::Boundary => {
            if k < m {
                let d = z2_boundary(x, k + 1, false)?;
                (0..d.cols())
                    .map(|j| {
                        let mut c = Z2Chain::zero(k, n);
                        for r in 0..n {
                            if d.get(r, j) {
                                c.set(r, true);
                            }
                        }
                        c
                    })
                    .collect()
            } else {
                Vec::new()
            }
        }
    };
    let words: Vec<Vec<u64>> = image_basis.iter().map(|c| c.words().to_vec()).collect();
    let sub = Z2Subspace::from_generators(n, words);
    if sub.contains(cert.witness.words()) {
        return Ok(false);
    }
    let rank = sub.rank();
    if rank > caps.brute_cap_bits as usize {
        return Err(Error::BeyondBruteForceCap {
            context: "certificate coset re-minimization",
            bits: rank,
            cap: caps.brute_cap_bits,
        });
    }
    let basis: Vec<Z2Chain> = sub
        .basis()
        .iter()
        .map(|w| {
            let mut c = Z2Chain::zero(k, n);
            for (i, &word) in w.iter().enumerate() {
                for b in 0..64 {
                    if i * 64 + b < n && word >> b & 1 == 1 {
                        c.set(i * 64 + b, true);
                    }
                }
            }
            c
        })
        .collect();
    let mut current = cert.witness.clone();
    let mut min_weight = current.weight();
    for step in 1u64..1u64 << rank {
        let bit = step.trailing_zeros() as usize;
        current.xor_assign(&basis[bit]);
        min_weight = min_weight.min(current.weight());
    }
    Ok(min_weight == cert.denominator
        && cert.value == Ratio::new(cert.numerator as i64, cert.denominator as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn rat(n: i64, d: i64) -> Rational64 {
        Ratio::new(n, d)
    }

    #[test]
    fn single_edge_top_cheeger_is_two() {
        let x = SimplicialComplex::build(&[vec![0, 1]]).unwrap();
        let h = cheeger(&x, 1, Direction::Boundary, false, &Caps::default()).unwrap();
        let cert = h.certificate().unwrap();
        assert_eq!(cert.value, rat(2, 1));
        assert_eq!(cert.witness.weight(), 1);
        assert!(
            verify_certificate(&x, 1, Direction::Boundary, false, cert, &Caps::default()).unwrap()
        );
    }

    #[test]
    fn sigma_two_has_h2_three() {
        let x = generators::sigma(2);
        let h = cheeger(&x, 2, Direction::Boundary, false, &Caps::default()).unwrap();
        assert_eq!(h.value(), Some(rat(3, 1)));
    }

    #[test]
    fn xk_top_cheeger_values() {
        for (k, expected) in [(1, rat(3, 1)), (2, rat(3, 2)), (3, rat(6, 5))] {
            let x = generators::xk(2, k);
            let h = cheeger(&x, 2, Direction::Boundary, false, &Caps::default()).unwrap();
            assert_eq!(h.value(), Some(expected), "h_2(X_{k})");
        }
    }

    #[test]
    fn reduced_h0_of_gk() {
        let x = generators::gk(2);
        let h = cheeger(&x, 0, Direction::Coboundary, true, &Caps::default()).unwrap();
        assert_eq!(h.value(), Some(rat(1, 3)));
    }

    #[test]
    fn rp2_top_cheeger_vanishes_with_full_witness() {
        let x = generators::rp2();
        let h = cheeger(&x, 2, Direction::Boundary, false, &Caps::default()).unwrap();
        let cert = h.certificate().unwrap();
        assert_eq!(cert.value, rat(0, 1));
        assert_eq!(cert.witness.weight(), 10);
        assert!(
            verify_certificate(&x, 2, Direction::Boundary, false, cert, &Caps::default()).unwrap()
        );
    }

    #[test]
    fn no_admissible_cochain_at_the_top_of_a_simplex_boundary() {
        // Σ^{m-1}: top cochains are exactly the coboundaries
        let x = generators::sigma(2);
        let h = cheeger(&x, 2, Direction::Coboundary, false, &Caps::default()).unwrap();
        assert_eq!(h, CheegerResult::NoAdmissibleChain);
        assert!(h.at_least(rat(100, 1)));
    }

    #[test]
    fn structural_h1_matches_brute_on_xk() {
        let caps = Caps::default();
        for k in 1..=2 {
            let x = generators::xk(2, k);
            let s = structural_cheeger(&x, StructuralTarget::H1ViaDiameter, &caps).unwrap();
            let b = cheeger(&x, 1, Direction::Boundary, false, &caps).unwrap();
            assert_eq!(Some(s.value), b.value());
            assert!(verify_certificate(&x, 1, Direction::Boundary, false, &s, &caps).unwrap());
        }
    }

    #[test]
    fn structural_radius_path_on_xk() {
        let caps = Caps::default();
        for k in 1..=3 {
            let x = generators::xk(2, k);
            let s = structural_cheeger(&x, StructuralTarget::TopCochainViaRadius, &caps).unwrap();
            assert_eq!(s.value, rat(1, k as i64));
            let b = cheeger(&x, 1, Direction::Coboundary, false, &caps).unwrap();
            assert_eq!(b.value(), Some(s.value));
            assert!(verify_certificate(&x, 1, Direction::Coboundary, false, &s, &caps).unwrap());
        }
    }

    #[test]
    fn structural_h1_of_the_double_star_is_two_thirds() {
        for k in [1, 3, 5] {
            let g = generators::gk(k);
            let cert =
                structural_cheeger(&g, StructuralTarget::H1ViaDiameter, &Caps::default()).unwrap();
            assert_eq!(cert.value, rat(2, 3));
        }
    }

    #[test]
    fn structural_top_cochain_of_the_full_simplex_is_one() {
        for m in 2..=4 {
            let x = generators::sigma(m);
            let cert =
                structural_cheeger(&x, StructuralTarget::TopCochainViaRadius, &Caps::default())
                    .unwrap();
            assert_eq!(cert.value, rat(1, 1));
        }
    }

    #[test]
    fn structural_hypothesis_failures_are_named() {
        let circle = SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(
            structural_cheeger(&circle, StructuralTarget::H1ViaDiameter, &Caps::default()),
            Err(Error::HypothesisViolated("H_1(Z2) = 0"))
        );
        let two = SimplicialComplex::build(&[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            structural_cheeger(&two, StructuralTarget::H1ViaDiameter, &Caps::default()),
            Err(Error::HypothesisViolated("connected 1-skeleton"))
        );
        let rp2 = generators::rp2();
        assert_eq!(
            structural_cheeger(
                &rp2,
                StructuralTarget::TopCochainViaRadius,
                &Caps::default()
            ),
            Err(Error::HypothesisViolated("H^{m-1}(Z2) = 0"))
        );
    }

    #[test]
    fn cap_is_an_error_not_an_approximation() {
        let x = generators::xk(2, 3);
        let caps = Caps {
            brute_cap_bits: 4,
            coset_cap_bits: 20,
        };
        assert!(matches!(
            cheeger(&x, 2, Direction::Boundary, false, &caps),
            Err(Error::BeyondBruteForceCap { .. })
        ));
    }

    #[test]
    fn upper_bound_via_the_full_chain() {
        let x = generators::xk(2, 2);
        let n = x.count(2);
        let all = Z2Chain::from_ordinals(2, n, &(0..n).collect::<Vec<_>>());
        assert_eq!(top_chain_upper_bound(&x, &all).unwrap(), rat(3, 2));
    }
}
