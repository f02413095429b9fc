//! Reference oracles written independently of the library's linear
//! algebra: the Cheeger definition evaluated by plain subset enumeration
//! with incidence computed straight from vertex sets, and eigensolver
//! cross-checks against exact trace, Frobenius, and determinant values.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use scx_core::*;

/// Mask-based reference for `h^k` / `h_k`: enumerates every chain and the
/// whole image subspace, no echelon forms, no Gray code, no bit packing.
/// Returns `None` when no chain lies outside the image.
fn reference_cheeger(
    x: &SimplicialComplex,
    k: usize,
    dir: Direction,
    reduced: bool,
) -> Option<Ratio<i64>> {
    let n = x.count(k);
    assert!(n <= 16, "oracle is exponential");
    let contains = |big: &Simplex, small: &Simplex| small.is_face_of(big);

    // numerator weight of a subset of S_k
    let num_weight: Box<dyn Fn(u32) -> u64> = match dir {
        Direction::Coboundary => {
            let uppers: Vec<u32> = x
                .simplices(k + 1)
                .iter()
                .map(|t| {
                    let mut mask = 0u32;
                    for (i, s) in x.simplices(k).iter().enumerate() {
                        if contains(t, s) {
                            mask |= 1 << i;
                        }
                    }
                    mask
                })
                .collect();
            Box::new(move |phi: u32| {
                uppers
                    .iter()
                    .filter(|&&t| (t & phi).count_ones() % 2 == 1)
                    .count() as u64
            })
        }
        Direction::Boundary => {
            if k == 0 {
                if reduced {
                    Box::new(move |phi: u32| (phi.count_ones() % 2) as u64)
                } else {
                    Box::new(|_| 0)
                }
            } else {
                let lowers: Vec<u32> = x
                    .simplices(k - 1)
                    .iter()
                    .map(|f| {
                        let mut mask = 0u32;
                        for (i, s) in x.simplices(k).iter().enumerate() {
                            if contains(s, f) {
                                mask |= 1 << i;
                            }
                        }
                        mask
                    })
                    .collect();
                Box::new(move |phi: u32| {
                    lowers
                        .iter()
                        .filter(|&&f| (f & phi).count_ones() % 2 == 1)
                        .count() as u64
                })
            }
        }
    };

    // image subspace, as the closure of the generator set under xor
    let generators: Vec<u32> = match dir {
        Direction::Coboundary => {
            if k == 0 {
                if reduced {
                    vec![(1u32 << n) - 1]
                } else {
                    Vec::new()
                }
            } else {
                x.simplices(k - 1)
                    .iter()
                    .map(|f| {
                        let mut mask = 0u32;
                        for (i, s) in x.simplices(k).iter().enumerate() {
                            if contains(s, f) {
                                mask |= 1 << i;
                            }
                        }
                        mask
                    })
                    .collect()
            }
        }
        Direction::Boundary => x
            .simplices(k + 1)
            .iter()
            .map(|t| {
                let mut mask = 0u32;
                for (i, s) in x.simplices(k).iter().enumerate() {
                    if contains(t, s) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect(),
    };
    let mut image = std::collections::BTreeSet::from([0u32]);
    for g in generators {
        let existing: Vec<u32> = image.iter().copied().collect();
        for e in existing {
            image.insert(e ^ g);
        }
    }

    let mut best: Option<Ratio<i64>> = None;
    for phi in 1u32..1 << n {
        if image.contains(&phi) {
            continue;
        }
        let denom = image
            .iter()
            .map(|&g| (phi ^ g).count_ones() as u64)
            .min()
            .unwrap();
        let ratio = Ratio::new(num_weight(phi) as i64, denom as i64);
        if best.is_none_or(|b| ratio < b) {
            best = Some(ratio);
        }
    }
    best
}

#[test]
fn sweep_matches_the_reference_on_every_small_instance() {
    let caps = Caps::default();
    let mut instances = vec![
        generators::sigma(2),
        generators::sigma(3),
        generators::sigma(4),
        generators::xk(2, 2),
        generators::yk(2, 2),
        generators::gk(2),
        generators::gk(4),
        generators::rp2(),
        SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
        SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap(),
        SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap(),
    ];
    for seed in 0..6 {
        instances.push(generators::random_disk(5, seed));
    }
    let mut compared = 0;
    for x in &instances {
        for k in 0..=x.top_dim() {
            if x.count(k) > 16 {
                continue;
            }
            for dir in [Direction::Coboundary, Direction::Boundary] {
                for reduced in [false, true] {
                    let expected = reference_cheeger(x, k, dir, reduced);
                    let got = cheeger(x, k, dir, reduced, &caps).unwrap();
                    assert_eq!(
                        got.value(),
                        expected,
                        "complex {:?}, k={k}, {dir:?}, reduced={reduced}",
                        x.counts()
                    );
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 100);
}

fn det_cofactor(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0];
    }
    let mut det = 0;
    for (j, &top) in a[0].iter().enumerate() {
        if top == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * top * det_cofactor(&minor);
    }
    det
}

#[test]
fn jacobi_matches_trace_frobenius_and_determinant() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6usize);
        let mut a = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-4i128..=4);
                a[i][j] = v;
                a[j][i] = v;
            }
        }
        let dense: Vec<f64> = a
            .iter()
            .flat_map(|row| row.iter().map(|&v| v as f64))
            .collect();
        let eig = jacobi_eigenvalues(&dense, n, DEFAULT_EIG_TOL).unwrap();
        let trace: i128 = (0..n).map(|i| a[i][i]).sum();
        let fro2: i128 = a.iter().flatten().map(|&v| v * v).sum();
        let det = det_cofactor(&a);
        let sum: f64 = eig.iter().sum();
        let sum2: f64 = eig.iter().map(|v| v * v).sum();
        let prod: f64 = eig.iter().product();
        let scale = (fro2 as f64).max(1.0);
        assert!((sum - trace as f64).abs() < 1e-8 * scale);
        assert!((sum2 - fro2 as f64).abs() < 1e-8 * scale);
        assert!(
            (prod - det as f64).abs() < 1e-7 * (det.unsigned_abs() as f64).max(scale),
            "prod {prod} vs det {det}"
        );
    }
}
