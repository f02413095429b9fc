//! Dual-graph translation of the top-dimensional problem.
//!
//! For a non-branching complex X, extend it by gluing one fresh facet
//! (*border facet*) onto every boundary face. The dual graph G has one
//! vertex per facet of the extension and one edge per lower-adjacent pair;
//! S marks the border facets. Deleting the S rows and columns of the graph
//! Laplacian L_0(G) gives a Dirichlet operator L_0^S whose smallest
//! eigenvalue is `λ_S`; the matching Dirichlet Cheeger constant `h_S`
//! minimizes (edges leaving U)/|U| over nonempty vertex sets U avoiding S.
//!
//! On the interior index set, L_0^S coincides with L_m(X) exactly when X
//! is orientable (under a coherent orientation), while `h_S = h_m(X)`
//! holds regardless of orientability.

use num_rational::Ratio;

use crate::cheeger::{self, CheegerResult, Direction, Rational64};
use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use crate::spectra::jacobi_eigenvalues;
use crate::{Caps, Error, Result};

/// A non-branching complex plus one border facet per boundary face.
#[derive(Clone, Debug)]
pub struct BorderExtension {
    pub complex: SimplicialComplex,
    /// Facet ordinals (in the extension) of the border facets.
    pub border_facets: Vec<usize>,
}

/// The facet-adjacency graph of a border extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    /// One label per graph vertex: the underlying facet.
    pub labels: Vec<Simplex>,
    /// Undirected edges (i < j), sorted.
    pub edges: Vec<(usize, usize)>,
    /// `border[i]` is true when vertex i is a border facet.
    pub border: Vec<bool>,
}

impl DualGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn border_count(&self) -> usize {
        self.border.iter().filter(|&&b| b).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Graph Laplacian restricted to the non-border rows and columns,
    /// as an exact integer matrix over the interior vertex list.
    pub fn dirichlet_laplacian(&self) -> (Vec<usize>, Vec<i64>) {
        let interior: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| !self.border[v])
            .collect();
        let pos: std::collections::HashMap<usize, usize> =
            interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = interior.len();
        let mut l = vec![0i64; n * n];
        for &(a, b) in &self.edges {
            if let Some(&i) = pos.get(&a) {
                l[i * n + i] += 1;
            }
            if let Some(&j) = pos.get(&b) {
                l[j * n + j] += 1;
            }
            if let (Some(&i), Some(&j)) = (pos.get(&a), pos.get(&b)) {
                l[i * n + j] -= 1;
                l[j * n + i] -= 1;
            }
        }
        (interior, l)
    }
}

/// Glues one fresh facet onto every boundary face of a non-branching
/// complex. Fresh vertex ids continue past the largest id in use, with
/// boundary faces processed in ordinal order.
pub fn border_extension(x: &SimplicialComplex) -> Result<BorderExtension> {
    if !x.is_non_branching() {
        return Err(Error::Branching);
    }
    let mut facets: Vec<Vec<u32>> = x
        .maximal_simplices()
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    let mut next = x
        .simplices(0)
        .iter()
        .map(|v| v.vertices()[0])
        .max()
        .unwrap()
        + 1;
    let mut border_keys: Vec<Vec<u32>> = Vec::new();
    for face in x.boundary_faces() {
        let mut f = face.vertices().to_vec();
        f.push(next);
        next += 1;
        border_keys.push(f.clone());
        facets.push(f);
    }
    let complex = SimplicialComplex::build(&facets)?;
    let m = complex.top_dim();
    let border_facets = border_keys
        .into_iter()
        .map(|f| {
            let s = Simplex::new(f).unwrap();
            complex.ordinal(&s).unwrap()
        })
        .collect::<std::collections::BTreeSet<usize>>()
        .into_iter()
        .collect();
    debug_assert_eq!(complex.top_dim(), m);
    Ok(BorderExtension {
        complex,
        border_facets,
    })
}

/// The dual graph of the border extension of `x`.
pub fn dual_graph(x: &SimplicialComplex) -> Result<DualGraph> {
    let ext = border_extension(x)?;
    let xp = &ext.complex;
    let m = xp.top_dim();
    let labels = xp.simplices(m).to_vec();
    let mut edges = Vec::new();
    for (u, nbrs) in xp.facet_adjacency().into_iter().enumerate() {
        for (v, _) in nbrs {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut border = vec![false; labels.len()];
    for &b in &ext.border_facets {
        border[b] = true;
    }
    Ok(DualGraph {
        labels,
        edges,
        border,
    })
}

/// Witness for the Dirichlet Cheeger constant: the minimizing interior
/// vertex set, with its cut size and cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCertificate {
    pub value: Rational64,
    /// Dual-graph vertex indices of the minimizing set.
    pub witness: Vec<usize>,
    pub numerator: u64,
    pub denominator: u64,
}

/// `(λ_S, h_S)` of a dual graph: the smallest eigenvalue of the Dirichlet
/// Laplacian, and the exact minimum of (edges leaving U)/|U| over nonempty
/// interior sets U.
pub fn dirichlet_pair(g: &DualGraph, caps: &Caps, tol: f64) -> Result<(f64, DirichletCertificate)> {
    let (interior, l) = g.dirichlet_laplacian();
    let n = interior.len();
    if n == 0 {
        return Err(Error::EmptyInterior);
    }
    let dense: Vec<f64> = l.iter().map(|&v| v as f64).collect();
    let lambda_s = jacobi_eigenvalues(&dense, n, tol)?[0];

    // h_S through the shared sweep: numerator masks are incidence columns
    // of the interior vertices over the full edge list, image is trivial
    let num_words = g.edges.len().div_ceil(64).max(1);
    let mut num_masks = vec![vec![0u64; num_words]; n];
    let pos: std::collections::HashMap<usize, usize> =
        interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        for v in [a, b] {
            if let Some(&i) = pos.get(&v) {
                num_masks[i][e / 64] ^= 1 << (e % 64);
            }
        }
    }
    let best = cheeger::coset_min_sweep(n, num_words, &num_masks, Vec::new(), caps, "h_S sweep")?
        .expect("trivial image leaves every nonzero set admissible");
    let witness = (0..n)
        .filter(|i| best.argmin_mask >> i & 1 == 1)
        .map(|i| interior[i])
        .collect();
    Ok((
        lambda_s,
        DirichletCertificate {
            value: Ratio::new(best.numerator as i64, best.weight as i64),
            witness,
            numerator: best.numerator,
            denominator: best.weight,
        },
    ))
}

/// Comparison of the top Laplacian of X against the Dirichlet Laplacian of
/// its dual graph, and of `h_m(X)` against `h_S`.
#[derive(Clone, Debug, PartialEq)]
pub struct AgreementReport {
    pub orientable: bool,
    pub matrices_equal: bool,
    pub h_equal: bool,
    /// A differing entry `(i, j, L_m value, L_0^S value)` when unequal.
    pub mismatch: Option<(usize, usize, i64, i64)>,
    pub h_m: Option<Rational64>,
    pub h_s: Rational64,
    pub lambda_m: f64,
    pub lambda_s: f64,
}

/// Builds both operators and compares them entrywise (exactly, as
/// integers), plus the two Cheeger constants as exact rationals.
///
/// When X is orientable the top boundary matrix is recolumned by a
/// coherent orientation first; otherwise the reference orientation is used
/// and the report records the witness entry where the operators differ.
pub fn agreement_check(x: &SimplicialComplex, caps: &Caps, tol: f64) -> Result<AgreementReport> {
    if !x.is_non_branching() {
        return Err(Error::Branching);
    }
    let m = x.top_dim();
    let nf = x.count(m);
    let orientation = x.coherent_orientation();
    let orientable = orientation.is_some();
    let signs: Vec<i64> = match &orientation {
        Some(o) => o.signs().iter().map(|&s| s as i64).collect(),
        None => vec![1; nf],
    };
    // L_m under the chosen orientation: D^T D with column j scaled by sign_j
    let d = crate::boundary::signed_boundary(x, m, false)?;
    let mut lm = vec![0i64; nf * nf];
    for i in 0..nf {
        for j in 0..nf {
            let mut acc = 0;
            for r in 0..d.rows() {
                acc += d.get(r, i) * d.get(r, j);
            }
            lm[i * nf + j] = signs[i] * acc * signs[j];
        }
    }
    let g = dual_graph(x)?;
    let (interior, ls) = g.dirichlet_laplacian();
    // interior vertices of the dual graph are the facets of X, in ordinal
    // order, since border facets are a suffix only in id space, not lex
    let facet_of: Vec<usize> = interior
        .iter()
        .map(|&v| {
            x.ordinal(&g.labels[v])
                .expect("interior facets come from X")
        })
        .collect();
    let n = interior.len();
    debug_assert_eq!(n, nf);
    let mut matrices_equal = true;
    let mut mismatch = None;
    for i in 0..n {
        for j in 0..n {
            let a = lm[facet_of[i] * nf + facet_of[j]];
            let b = ls[i * n + j];
            if a != b {
                matrices_equal = false;
                if mismatch.is_none() {
                    mismatch = Some((facet_of[i], facet_of[j], a, b));
                }
            }
        }
    }
    let (lambda_s, h_s_cert) = dirichlet_pair(&g, caps, tol)?;
    let h_m = match cheeger::cheeger(x, m, Direction::Boundary, false, caps)? {
        CheegerResult::Finite(c) => Some(c.value),
        CheegerResult::NoAdmissibleChain => None,
    };
    let dense: Vec<f64> = lm.iter().map(|&v| v as f64).collect();
    let lambda_m = jacobi_eigenvalues(&dense, nf, tol)?[0];
    Ok(AgreementReport {
        orientable,
        matrices_equal,
        h_equal: h_m == Some(h_s_cert.value),
        mismatch,
        h_m,
        h_s: h_s_cert.value,
        lambda_m,
        lambda_s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::DEFAULT_EIG_TOL;

    #[test]
    fn sigma2_extension_and_dual_star() {
        let x = generators::sigma(2);
        let ext = border_extension(&x).unwrap();
        assert_eq!(ext.complex.count(2), 4);
        assert_eq!(ext.border_facets.len(), 3);

        let g = dual_graph(&x).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.border_count(), 3);
        // K_{1,3}: the original facet is adjacent to all three borders
        assert_eq!(g.edges.len(), 3);
        let interior: Vec<usize> = (0..4).filter(|&v| !g.border[v]).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(g.degree(interior[0]), 3);
    }

    #[test]
    fn sigma2_dirichlet_pair_is_three_three() {
        let g = dual_graph(&generators::sigma(2)).unwrap();
        let (lambda_s, h_s) = dirichlet_pair(&g, &Caps::default(), DEFAULT_EIG_TOL).unwrap();
        assert!((lambda_s - 3.0).abs() < 1e-9);
        assert_eq!(h_s.value, Ratio::new(3, 1));
        assert_eq!(h_s.witness.len(), 1);
    }

    #[test]
    fn rp2_has_no_border_and_zero_dirichlet_gap() {
        let x = generators::rp2();
        let ext = border_extension(&x).unwrap();
        assert_eq!(ext.complex.counts(), x.counts());
        assert!(ext.border_facets.is_empty());
        let g = dual_graph(&x).unwrap();
        assert_eq!((g.vertex_count(), g.edges.len()), (10, 15));
        assert_eq!(g.border_count(), 0);
        assert!((0..10).all(|v| g.degree(v) <= 3));
        let (lambda_s, h_s) = dirichlet_pair(&g, &Caps::default(), DEFAULT_EIG_TOL).unwrap();
        assert!(lambda_s.abs() < 1e-8);
        assert_eq!(h_s.value, Ratio::new(0, 1));
    }

    #[test]
    fn xk22_extension_count() {
        let x = generators::xk(2, 2);
        let ext = border_extension(&x).unwrap();
        assert_eq!(ext.complex.count(2), 4 + 6);
    }

    #[test]
    fn an_all_border_graph_has_no_interior() {
        let g = DualGraph {
            labels: vec![
                Simplex::new(vec![0, 1, 2]).unwrap(),
                Simplex::new(vec![1, 2, 3]).unwrap(),
            ],
            edges: vec![(0, 1)],
            border: vec![true, true],
        };
        assert!(matches!(
            dirichlet_pair(&g, &Caps::default(), DEFAULT_EIG_TOL),
            Err(Error::EmptyInterior)
        ));
    }

    #[test]
    fn branching_input_is_rejected() {
        let x = SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        assert!(matches!(border_extension(&x), Err(Error::Branching)));
        assert!(matches!(
            agreement_check(&x, &Caps::default(), DEFAULT_EIG_TOL),
            Err(Error::Branching)
        ));
    }

    #[test]
    fn agreement_on_the_deterministic_families() {
        for x in [
            generators::xk(2, 2),
            generators::xk(2, 3),
            generators::yk(2, 2),
            generators::sigma(3),
        ] {
            let rep = agreement_check(&x, &Caps::default(), DEFAULT_EIG_TOL).unwrap();
            assert!(rep.orientable && rep.matrices_equal && rep.h_equal);
            assert!((rep.lambda_m - rep.lambda_s).abs() < 1e-8);
        }
    }

    #[test]
    fn agreement_on_sigma2_and_rp2() {
        let rep =
            agreement_check(&generators::sigma(2), &Caps::default(), DEFAULT_EIG_TOL).unwrap();
        assert!(rep.orientable && rep.matrices_equal && rep.h_equal);

        let rep = agreement_check(&generators::rp2(), &Caps::default(), DEFAULT_EIG_TOL).unwrap();
        assert!(!rep.orientable);
        assert!(!rep.matrices_equal);
        assert!(rep.h_equal);
        let (i, j, a, b) = rep.mismatch.unwrap();
        assert_ne!(i, j);
        assert_eq!(a, -b); // off-diagonal signs disagree
        assert!(rep.lambda_m > 0.05 && rep.lambda_s.abs() < 1e-8);
    }
}
