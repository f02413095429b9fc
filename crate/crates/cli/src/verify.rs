//! The verification harness: every quantitative claim about the built-in
//! families, run as a deterministic check matrix with exact rationals
//! wherever the quantity is rational and floats only for eigenvalues.

use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use scx_core::*;

use crate::analyze::format_ratio;
use crate::config::Config;
use crate::format::{parse_complex, serialize_complex};

type Rat = Ratio<i64>;

/// Reference value of the top spectral gap of the 6-vertex projective
/// plane (3 - sqrt 5), from an independent dense eigensolver.
pub const RP2_LAMBDA_TOP: f64 = 0.7639320225002102;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paper,
    Quick,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub m: usize,
    pub kmax: usize,
    pub seeds: u32,
    /// Test hook: deliberately mis-generate the gluing family (off by one
    /// iteration) so the radius check must fail.
    pub corrupt_generator: bool,
}

impl SuiteParams {
    pub fn defaults(suite: Suite) -> SuiteParams {
        match suite {
            Suite::Paper => SuiteParams {
                m: 2,
                kmax: 5,
                seeds: 50,
                corrupt_generator: false,
            },
            Suite::Quick => SuiteParams {
                m: 2,
                kmax: 3,
                seeds: 10,
                corrupt_generator: false,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub values: Vec<String>,
    pub bound: String,
    pub pass: bool,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub m: usize,
    pub kmax: usize,
    pub seeds: u32,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Human-readable listing, one pass/fail line per check.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {:<28} {}  ({} ms)\n        values: {}   bound: {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.claim,
                c.runtime_ms,
                c.values.join(", "),
                c.bound,
            ));
        }
        out.push_str(&format!(
            "suite {}: {}/{} checks passed\n",
            self.suite,
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }

    /// Deterministic rendering: everything except runtimes.
    pub fn canonical_text(&self) -> String {
        let mut out = format!(
            "suite={} m={} kmax={} seeds={}\n",
            self.suite, self.m, self.kmax, self.seeds
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{}|{}|{}|{}|{}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.claim,
                c.values.join(", "),
                c.bound,
            ));
        }
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

struct Harness {
    checks: Vec<Check>,
    caps: Caps,
    eig_tol: f64,
    zero_band: f64,
    seed: u64,
}

impl Harness {
    fn run(
        &mut self,
        id: &str,
        claim: &str,
        bound: &str,
        body: impl FnOnce(&Harness, &mut Vec<String>) -> bool,
    ) {
        let start = Instant::now();
        let mut values = Vec::new();
        let pass = body(self, &mut values);
        self.checks.push(Check {
            id: id.into(),
            claim: claim.into(),
            values,
            bound: bound.into(),
            pass,
            runtime_ms: start.elapsed().as_millis(),
        });
    }
}

fn make_xk(m: usize, k: usize, corrupt: bool) -> SimplicialComplex {
    if corrupt && k >= 2 {
        generators::xk(m, k - 1)
    } else {
        generators::xk(m, k)
    }
}

/// `h_m(X_k) = (m+1)(m-1) m^{k-1} / ((m+1) m^{k-1} - 2)` as a rational.
fn xk_top_cheeger_formula(m: usize, k: usize) -> Rat {
    let pow = (m as i64).pow(k as u32 - 1);
    Ratio::new(
        (m as i64 + 1) * (m as i64 - 1) * pow,
        (m as i64 + 1) * pow - 2,
    )
}

fn brute_fits(x: &SimplicialComplex, k: usize, caps: &Caps) -> bool {
    x.count(k) <= caps.brute_cap_bits as usize && x.count(k) < 64
}

fn xk_suite(h: &mut Harness, m: usize, kmax: usize, corrupt: bool) {
    let family: Vec<SimplicialComplex> = (1..=kmax).map(|k| make_xk(m, k, corrupt)).collect();
    let caps = h.caps;
    let tol = h.eig_tol;

    h.run(
        &format!("xk.m{m}.h-top-cochain"),
        &format!(
            "h^{}(X_k) = 1/k for k <= {kmax}, brute sweep agreeing where it fits",
            m - 1
        ),
        "exact",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                let want = Ratio::new(1, k as i64);
                match structural_cheeger(x, StructuralTarget::TopCochainViaRadius, &caps) {
                    Ok(cert) => {
                        values.push(format!("k={k}: {}", format_ratio(cert.value)));
                        ok &= cert.value == want;
                    }
                    Err(e) => {
                        values.push(format!("k={k}: error {e}"));
                        ok = false;
                        continue;
                    }
                }
                if k <= 3 && brute_fits(x, m - 1, &caps) {
                    let b = cheeger(x, m - 1, Direction::Coboundary, m == 1, &caps).unwrap();
                    ok &= b.value() == Some(want);
                    if b.value() != Some(want) {
                        values.push(format!("k={k}: brute {:?}", b.value().map(format_ratio)));
                    }
                }
            }
            ok
        },
    );

    h.run(
        &format!("xk.m{m}.h-top-chain"),
        &format!(
            "h_{m}(X_k) >= {} and equals (m+1)(m-1)/((m+1) - 2 m^(1-k)) for k <= 3",
            m - 1
        ),
        "exact, by brute certificate",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate().take(3) {
                let k = i + 1;
                if m < 2 {
                    // the closed form degenerates at m = 1 (h_1 = 2/diam)
                    values.push(format!("k={k}: skipped at m = 1"));
                    continue;
                }
                if !brute_fits(x, m, &caps) {
                    values.push(format!("k={k}: beyond cap, skipped"));
                    continue;
                }
                let res = cheeger(x, m, Direction::Boundary, false, &caps).unwrap();
                let cert = res.certificate().expect("top cosets are nontrivial");
                let want = xk_top_cheeger_formula(m, k);
                values.push(format!("k={k}: {}", format_ratio(cert.value)));
                ok &= cert.value == want && cert.value >= Ratio::new(m as i64 - 1, 1);
                ok &= verify_certificate(x, m, Direction::Boundary, false, cert, &caps).unwrap();
            }
            ok
        },
    );

    let lower = (m as f64 - 1.0).powi(2) / (2.0 * (m as f64 + 1.0));
    h.run(
        &format!("xk.m{m}.lambda-lower"),
        &format!(
            "lambda^{}(X_k) = lambda_{m}(X_k) >= (m-1)^2/(2(m+1)) for k <= {kmax}",
            m - 1
        ),
        &format!(">= {lower:.6} - 1e-9, equality within 1e-8"),
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                let up = spectral_gap(x, m - 1, GapDirection::Up, m == 1, tol)
                    .unwrap()
                    .unwrap();
                let down = spectral_gap(x, m, GapDirection::Down, false, tol)
                    .unwrap()
                    .unwrap();
                values.push(format!("k={k}: {up:.9}"));
                ok &= (up - down).abs() < 1e-8 && up >= lower - 1e-9;
            }
            ok
        },
    );
}

fn yk_suite(h: &mut Harness, m: usize, kmax: usize) {
    let kmax = kmax.min(4);
    let family: Vec<SimplicialComplex> = (1..=kmax).map(|k| generators::yk(m, k)).collect();
    let caps = h.caps;
    let tol = h.eig_tol;

    h.run(
        &format!("yk.m{m}.count"),
        &format!("|S_{m}(Y_k)| = (m+1) m^(k-1) for k <= {kmax}"),
        "exact",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                let want = (m + 1) * m.pow(k as u32 - 1);
                values.push(format!("k={k}: {} (expected {want})", x.count(m)));
                ok &= x.count(m) == want;
            }
            ok
        },
    );

    h.run(
        &format!("yk.m{m}.h-top-cochain"),
        &format!("h^{}(Y_k) >= 1/k for k <= {kmax}", m - 1),
        "exact",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                let cert =
                    structural_cheeger(x, StructuralTarget::TopCochainViaRadius, &caps).unwrap();
                values.push(format!("k={k}: {}", format_ratio(cert.value)));
                ok &= cert.value >= Ratio::new(1, k as i64);
                if brute_fits(x, m - 1, &caps) {
                    let b = cheeger(x, m - 1, Direction::Coboundary, m == 1, &caps).unwrap();
                    ok &= b.value() == Some(cert.value);
                }
            }
            ok
        },
    );

    h.run(
        &format!("yk.m{m}.h-top-chain"),
        &format!("h_{m}(Y_k) <= 1/m^(k-1) via the all-facets chain certificate"),
        "exact upper bound",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                let n = x.count(m);
                let all = Z2Chain::from_ordinals(m, n, &(0..n).collect::<Vec<_>>());
                let bound = top_chain_upper_bound(x, &all).unwrap();
                values.push(format!("k={k}: {}", format_ratio(bound)));
                ok &= bound <= Ratio::new(1, (m as i64).pow(k as u32 - 1));
            }
            ok
        },
    );

    h.run(
        &format!("yk.m{m}.lambda-upper"),
        &format!(
            "lambda^{}(Y_k) = lambda_{m}(Y_k) <= 1/m^(k-1) for 1 < k <= {kmax}",
            m - 1
        ),
        "<= bound + 1e-9, equality within 1e-8",
        |_, values| {
            let mut ok = true;
            for (i, x) in family.iter().enumerate() {
                let k = i + 1;
                if k == 1 {
                    continue;
                }
                let up = spectral_gap(x, m - 1, GapDirection::Up, m == 1, tol)
                    .unwrap()
                    .unwrap();
                let down = spectral_gap(x, m, GapDirection::Down, false, tol)
                    .unwrap()
                    .unwrap();
                let bound = 1.0 / (m as f64).powi(k as i32 - 1);
                values.push(format!("k={k}: {up:.9} (bound {bound:.9})"));
                ok &= (up - down).abs() < 1e-8 && up <= bound + 1e-9;
            }
            ok
        },
    );
}

fn sigma_suite(h: &mut Harness) {
    let caps = h.caps;
    let tol = h.eig_tol;
    let band = h.zero_band;

    h.run(
        "sigma.spectra",
        "every nonzero eigenvalue of every L_k of the full (m-1)-simplex equals m, m in {3,4,5}",
        "within 1e-8",
        |_, values| {
            let mut ok = true;
            for m in 3..=5usize {
                let x = generators::sigma(m - 1);
                let mut worst: f64 = 0.0;
                for k in 0..m {
                    for kind in [LaplacianKind::Up, LaplacianKind::Down, LaplacianKind::Full] {
                        let l = laplacian(&x, k, kind, false).unwrap();
                        for v in symmetric_spectrum(&l, tol).unwrap() {
                            if v.abs() > band {
                                worst = worst.max((v - m as f64).abs());
                            }
                        }
                    }
                }
                values.push(format!("m={m}: max deviation {worst:.2e}"));
                ok &= worst < 1e-8;
            }
            ok
        },
    );

    h.run(
        "sigma.cheeger-bounds",
        "h^k >= m/(k+2) and h_k >= m/(m-k) on the full (m-1)-simplex, m in {3,4,5}, all k",
        "exact (reduced at k = 0)",
        |_, values| {
            let mut ok = true;
            for m in 3..=5usize {
                let x = generators::sigma(m - 1);
                for k in 0..m {
                    let reduced = k == 0;
                    let co = cheeger(&x, k, Direction::Coboundary, reduced, &caps).unwrap();
                    let bd = cheeger(&x, k, Direction::Boundary, reduced, &caps).unwrap();
                    let co_ok = co.at_least(Ratio::new(m as i64, k as i64 + 2));
                    let bd_ok = bd.at_least(Ratio::new(m as i64, (m - k) as i64));
                    if !(co_ok && bd_ok) {
                        values.push(format!("m={m} k={k}: violated"));
                    }
                    ok &= co_ok && bd_ok;
                }
            }
            if ok {
                values.push("all bounds hold".into());
            }
            ok
        },
    );
}

fn rp2_suite(h: &mut Harness) {
    let caps = h.caps;
    let tol = h.eig_tol;

    h.run(
        "rp2.homology",
        "Z2 Betti numbers (1,1,1), rational Betti numbers (1,0,0)",
        "exact",
        |_, values| {
            let x = generators::rp2();
            let z2: Vec<usize> = (0..3)
                .map(|k| betti(&x, k, Field::Z2, false).unwrap())
                .collect();
            let q: Vec<usize> = (0..3)
                .map(|k| betti(&x, k, Field::Rational, false).unwrap())
                .collect();
            values.push(format!("Z2 {z2:?}, Q {q:?}"));
            z2 == vec![1, 1, 1] && q == vec![1, 0, 0]
        },
    );

    h.run(
        "rp2.torsion",
        "exactly one invariant factor 2 in the top boundary matrix",
        "exact Smith normal form",
        |_, values| {
            let x = generators::rp2();
            let form = smith_normal_form(&signed_boundary(&x, 2, false).unwrap());
            let torsion = form.torsion();
            values.push(format!(
                "factors > 1: {:?}",
                torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>()
            ));
            torsion.len() == 1 && torsion[0] == 2.into()
        },
    );

    h.run(
        "rp2.cheeger",
        "h_2 = 0 with the all-facets witness",
        "exact",
        |_, values| {
            let x = generators::rp2();
            let res = cheeger(&x, 2, Direction::Boundary, false, &caps).unwrap();
            let cert = res.certificate().unwrap();
            values.push(format!(
                "value {}, witness weight {}",
                format_ratio(cert.value),
                cert.witness.weight()
            ));
            cert.value == Ratio::new(0, 1)
                && cert.witness.weight() == 10
                && verify_certificate(&x, 2, Direction::Boundary, false, cert, &caps).unwrap()
        },
    );

    h.run(
        "rp2.spectrum",
        "lambda_2 matches the pinned reference value and exceeds 0.05",
        "within 1e-8 of 3 - sqrt(5); > 0.05",
        |_, values| {
            let x = generators::rp2();
            let gap = spectral_gap(&x, 2, GapDirection::Down, false, tol)
                .unwrap()
                .unwrap();
            values.push(format!("lambda_2 = {gap:.12}"));
            (gap - RP2_LAMBDA_TOP).abs() < 1e-8 && gap > 0.05
        },
    );

    h.run(
        "rp2.orientation",
        "no coherent orientation exists",
        "exact",
        |_, values| {
            let absent = generators::rp2().coherent_orientation().is_none();
            values.push(format!("coherent orientation present: {}", !absent));
            absent
        },
    );
}

fn theorem_suite(h: &mut Harness, seeds: u32) {
    let caps = h.caps;
    let tol = h.eig_tol;
    let band = h.zero_band;
    let base = h.seed;

    h.run(
        "theorem.two-sided",
        &format!(
            "h_2 >= lambda_2 and lambda_2 >= h_2^2/6 on {seeds} seeded disks (<= 12 triangles)"
        ),
        "slack 1e-9",
        |_, values| {
            let mut ok = true;
            let mut min_margin = f64::INFINITY;
            for i in 0..seeds {
                let x = generators::random_disk(3 + (i as usize % 10), base + i as u64);
                let res = cheeger(&x, 2, Direction::Boundary, false, &caps).unwrap();
                let hv = res.certificate().unwrap().value;
                let h2 = *hv.numer() as f64 / *hv.denom() as f64;
                let lam = spectral_gap(&x, 2, GapDirection::Down, false, tol)
                    .unwrap()
                    .unwrap();
                ok &= h2 >= lam - 1e-9 && lam >= h2 * h2 / 6.0 - 1e-9;
                min_margin = min_margin.min(h2 - lam).min(lam - h2 * h2 / 6.0);
            }
            values.push(format!("instances: {seeds}, min margin {min_margin:.3e}"));
            ok
        },
    );

    h.run(
        "theorem.global-invariants",
        "boundary-of-boundary vanishes, zero multiplicities equal rational Betti numbers, nonzero up/down spectra match",
        "exact; spectra within 1e-8",
        |_, values| {
            let mut ok = true;
            for i in 0..seeds {
                let x = generators::random_disk(3 + (i as usize % 10), base + i as u64);
                let m = x.top_dim();
                for k in 1..=m {
                    let a = signed_boundary(&x, k - 1, true).unwrap();
                    let b = signed_boundary(&x, k, false).unwrap();
                    for r in 0..a.rows() {
                        for c in 0..b.cols() {
                            let acc: i64 =
                                (0..b.rows()).map(|t| a.get(r, t) * b.get(t, c)).sum();
                            ok &= acc == 0;
                        }
                    }
                }
                for k in 0..=m {
                    let rep = spectral_report(&x, k, LaplacianKind::Full, false, tol).unwrap();
                    let zeros = rep.eigenvalues.iter().filter(|v| v.abs() < band).count();
                    ok &= zeros == betti(&x, k, Field::Rational, false).unwrap();
                    ok &= zeros == rep.zero_multiplicity;
                }
                for k in 0..m {
                    let up = spectral_report(&x, k, LaplacianKind::Up, false, tol).unwrap();
                    let down =
                        spectral_report(&x, k + 1, LaplacianKind::Down, false, tol).unwrap();
                    let nzu = &up.eigenvalues[up.zero_multiplicity..];
                    let nzd = &down.eigenvalues[down.zero_multiplicity..];
                    ok &= nzu.len() == nzd.len()
                        && nzu.iter().zip(nzd).all(|(a, b)| (a - b).abs() < 1e-8);
                }
            }
            values.push(format!("instances: {seeds}"));
            ok
        },
    );
}

fn random_tree(n_vertices: usize, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n_vertices as u32 {
        let p = rng.gen_range(0..v);
        edges.push(vec![p, v]);
    }
    SimplicialComplex::build(&edges).unwrap()
}

fn lemma_suite(h: &mut Harness, seeds: u32) {
    let caps = h.caps;
    let base = h.seed;
    let n_each = (seeds / 2).max(5);

    h.run(
        "lemma.h1-diam",
        &format!("h_1 * diam = 2 exactly on {n_each} random trees and {n_each} random disks"),
        "exact (H_1(Z2) = 0 verified first)",
        |_, values| {
            let mut ok = true;
            let mut count = 0;
            for i in 0..n_each {
                for x in [
                    random_tree(4 + (i as usize % 9), base + 1000 + i as u64),
                    generators::random_disk(2 + (i as usize % 8), base + 2000 + i as u64),
                ] {
                    if betti(&x, 1, Field::Z2, false).unwrap() != 0 {
                        ok = false;
                        continue;
                    }
                    let brute = cheeger(&x, 1, Direction::Boundary, false, &caps).unwrap();
                    let hv = brute.certificate().unwrap().value;
                    let diam = x.distance_and_diameter().diam as i64;
                    ok &= hv * Ratio::new(diam, 1) == Ratio::new(2, 1);
                    count += 1;
                }
            }
            values.push(format!("instances: {count}"));
            ok
        },
    );

    h.run(
        "lemma.htop-rad",
        &format!("h^(m-1) * rad = 1 exactly on {n_each} non-branching disks"),
        "exact (Z2 cohomology hypotheses verified first)",
        |_, values| {
            let mut ok = true;
            let mut count = 0;
            for i in 0..n_each {
                let x = generators::random_disk(2 + (i as usize % 8), base + 3000 + i as u64);
                let m = x.top_dim();
                if betti(&x, m - 1, Field::Z2, m == 1).unwrap() != 0
                    || betti(&x, m, Field::Z2, false).unwrap() != 0
                    || !x.is_non_branching()
                {
                    ok = false;
                    continue;
                }
                let brute = cheeger(&x, m - 1, Direction::Coboundary, m == 1, &caps).unwrap();
                let hv = brute.certificate().unwrap().value;
                let rad = x.depth_and_radius(&caps).unwrap().radius as i64;
                ok &= hv * Ratio::new(rad, 1) == Ratio::new(1, 1);
                count += 1;
            }
            values.push(format!("instances: {count}"));
            ok
        },
    );

    h.run(
        "lemma.depth-bfs",
        "facet-BFS depths equal exhaustive sweep depths on all instances with <= 20 edges",
        "exact",
        |_, values| {
            let mut ok = true;
            let mut count = 0;
            for i in 0..n_each {
                let x = generators::random_disk(2 + (i as usize % 8), base + 4000 + i as u64);
                if x.count(x.top_dim() - 1) > 20 {
                    continue;
                }
                let fast = x.depth_and_radius(&caps).unwrap();
                let slow = x.depth_and_radius_by_sweep(&caps).unwrap();
                ok &= fast.method == DepthMethod::FacetBfs
                    && slow.method == DepthMethod::Brute
                    && fast.depth == slow.depth;
                count += 1;
            }
            values.push(format!("instances: {count}"));
            ok && count > 0
        },
    );
}

fn gk_suite(h: &mut Harness) {
    let caps = h.caps;
    let tol = h.eig_tol;

    h.run(
        "gk.family",
        "reduced h^0 = 1/(k+1), h_1 = 2/3, lambda_1 = reduced lambda^0 <= 2/(k+1), k <= 6",
        "exact Cheeger values; spectral bound + 1e-9",
        |_, values| {
            let mut ok = true;
            for k in 1..=6usize {
                let x = generators::gk(k);
                let h0 = cheeger(&x, 0, Direction::Coboundary, true, &caps).unwrap();
                ok &= h0.value() == Some(Ratio::new(1, k as i64 + 1));
                let h1 = cheeger(&x, 1, Direction::Boundary, false, &caps).unwrap();
                ok &= h1.value() == Some(Ratio::new(2, 3));
                let lam0 = spectral_gap(&x, 0, GapDirection::Up, true, tol)
                    .unwrap()
                    .unwrap();
                let lam1 = spectral_gap(&x, 1, GapDirection::Down, false, tol)
                    .unwrap()
                    .unwrap();
                ok &= (lam0 - lam1).abs() < 1e-8;
                ok &= lam0 <= 2.0 / (k as f64 + 1.0) + 1e-9;
                values.push(format!("k={k}: lambda {lam0:.6}"));
            }
            ok
        },
    );
}

fn dirichlet_suite(h: &mut Harness, seeds: u32) {
    let caps = h.caps;
    let tol = h.eig_tol;
    let base = h.seed;
    let n = seeds.clamp(5, 20);

    h.run(
        "dirichlet.disks",
        &format!(
            "on {n} orientable non-branching disks: L_2 equals the dual Dirichlet Laplacian entrywise, h_2 = h_S exactly, and h_S >= lambda_S >= h_S^2/6"
        ),
        "matrices exact; inequality slack 1e-9",
        |_, values| {
            let mut ok = true;
            for i in 0..n {
                let x = generators::random_disk(3 + (i as usize % 10), base + 5000 + i as u64);
                let rep = agreement_check(&x, &caps, tol).unwrap();
                ok &= rep.orientable && rep.matrices_equal && rep.h_equal;
                let hs = *rep.h_s.numer() as f64 / *rep.h_s.denom() as f64;
                ok &= hs >= rep.lambda_s - 1e-9 && rep.lambda_s >= hs * hs / 6.0 - 1e-9;
                ok &= (rep.lambda_m - rep.lambda_s).abs() < 1e-8;
            }
            values.push(format!("instances: {n}"));
            ok
        },
    );

    h.run(
        "dirichlet.rp2",
        "projective plane: lambda_S = 0 while lambda_2 > 0, operators differ, h_2 = h_S = 0",
        "lambda_S within 1e-8 of 0",
        |_, values| {
            let x = generators::rp2();
            let rep = agreement_check(&x, &caps, tol).unwrap();
            values.push(format!(
                "lambda_S = {:.2e}, lambda_2 = {:.6}, matrices_equal = {}",
                rep.lambda_s, rep.lambda_m, rep.matrices_equal
            ));
            rep.lambda_s.abs() < 1e-8
                && rep.lambda_m > 0.05
                && !rep.matrices_equal
                && rep.h_equal
                && rep.h_s == Ratio::new(0, 1)
        },
    );
}

fn roundtrip_suite(h: &mut Harness) {
    h.run(
        "plumbing.roundtrip",
        "canonical serialization round-trips byte-identically on the built-in families",
        "byte equality",
        |_, values| {
            let mut ok = true;
            let cases: Vec<(String, SimplicialComplex)> = vec![
                ("sigma-3".into(), generators::sigma(3)),
                ("xk-m2-k3".into(), generators::xk(2, 3)),
                ("yk-m2-k2".into(), generators::yk(2, 2)),
                ("gk-4".into(), generators::gk(4)),
                ("rp2".into(), generators::rp2()),
                ("disk-t9".into(), generators::random_disk(9, 11)),
            ];
            for (name, x) in &cases {
                let bytes = serialize_complex(x, Some(name), None);
                let (_, parsed) = parse_complex(&bytes).unwrap();
                ok &= &parsed == x;
                ok &= serialize_complex(&parsed, Some(name), None) == bytes;
            }
            // non-canonical input settles after one canonicalization
            let scrambled = br#"{"maximal_simplices":[[2,1,0],[3,1,2]]}"#;
            let (_, x) = parse_complex(scrambled).unwrap();
            let once = serialize_complex(&x, None, None);
            let (_, y) = parse_complex(&once).unwrap();
            ok &= serialize_complex(&y, None, None) == once;
            values.push("families round-trip".into());
            ok
        },
    );
}

pub fn run_suite(suite: Suite, params: &SuiteParams, cfg: &Config) -> VerificationReport {
    let mut h = Harness {
        checks: Vec::new(),
        caps: cfg.caps(),
        eig_tol: cfg.eig_tol,
        zero_band: cfg.zero_band,
        seed: cfg.seed,
    };
    match suite {
        Suite::Paper => {
            xk_suite(&mut h, params.m, params.kmax, params.corrupt_generator);
            if params.m != 3 {
                // dimension-3 spot check of the same family
                xk_suite(&mut h, 3, params.kmax.min(3), params.corrupt_generator);
            }
            yk_suite(&mut h, params.m, params.kmax);
            sigma_suite(&mut h);
            rp2_suite(&mut h);
            theorem_suite(&mut h, params.seeds);
            lemma_suite(&mut h, params.seeds);
            gk_suite(&mut h);
            dirichlet_suite(&mut h, params.seeds.min(20));
            roundtrip_suite(&mut h);
        }
        Suite::Quick => {
            xk_suite(
                &mut h,
                params.m,
                params.kmax.min(3),
                params.corrupt_generator,
            );
            rp2_suite(&mut h);
            theorem_suite(&mut h, params.seeds.min(10));
            gk_suite(&mut h);
            dirichlet_suite(&mut h, 5);
            roundtrip_suite(&mut h);
        }
    }
    VerificationReport {
        suite: match suite {
            Suite::Paper => "paper".into(),
            Suite::Quick => "quick".into(),
        },
        m: params.m,
        kmax: params.kmax,
        seeds: params.seeds,
        checks: h.checks,
    }
}
