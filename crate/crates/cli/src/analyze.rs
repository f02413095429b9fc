//! The analyze report: one machine-readable document per complex plus a
//! text-table rendering and a mirroring CSV export.

use num_rational::Ratio;
use serde::Serialize;

use scx_core::*;

use crate::config::Config;
use crate::CliError;

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, Serialize)]
pub struct CheegerEntry {
    /// Exact rational as `p/q` (or `inf` when no chain is admissible).
    pub value: String,
    pub numerator: u64,
    pub denominator: u64,
    pub witness_weight: u64,
    pub method: String,
}

impl CheegerEntry {
    fn from_result(r: &CheegerResult) -> CheegerEntry {
        match r.certificate() {
            Some(c) => CheegerEntry {
                value: format_ratio(c.value),
                numerator: c.numerator,
                denominator: c.denominator,
                witness_weight: c.witness.weight(),
                method: match c.method {
                    CheegerMethod::Brute => "brute".into(),
                    CheegerMethod::Structural => "structural".into(),
                },
            },
            None => CheegerEntry {
                value: "inf".into(),
                numerator: 0,
                denominator: 0,
                witness_weight: 0,
                method: "brute".into(),
            },
        }
    }
}

pub fn format_ratio(r: Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub k: usize,
    pub simplex_count: usize,
    /// True at k = 0, where Betti, gaps, and Cheeger numbers are reported
    /// for the reduced (augmented) complex.
    pub reduced: bool,
    pub betti_z2: usize,
    pub betti_rational: usize,
    /// Torsion coefficients of the integral homology at this dimension.
    pub torsion: Vec<String>,
    pub lambda_up: Option<f64>,
    pub lambda_down: Option<f64>,
    pub cheeger_up: Option<CheegerEntry>,
    pub cheeger_down: Option<CheegerEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub name: String,
    pub counts: Vec<usize>,
    pub top_dimension: usize,
    pub euler_characteristic: i64,
    pub connected: bool,
    /// Cross-component vertex pairs have distance 0 by convention, so the
    /// diameter ignores them; this flag marks reports where that applies.
    pub disconnected_distance_convention: bool,
    pub non_branching: bool,
    pub orientable: bool,
    pub boundary_faces: usize,
    pub diameter: u32,
    pub radius: Option<u32>,
    pub radius_method: Option<String>,
    pub dimensions: Vec<DimensionReport>,
}

/// Selected dimensions (`None` = all), exact caps, and whether brute
/// Cheeger sweeps are skipped in favor of the structural paths.
pub fn analyze(
    x: &SimplicialComplex,
    name: &str,
    dims: Option<&[usize]>,
    structural_only: bool,
    cfg: &Config,
) -> CliResult<AnalyzeReport> {
    let m = x.top_dim();
    let caps = cfg.caps();
    let selected: Vec<usize> = match dims {
        Some(d) => d.iter().copied().filter(|&k| k <= m).collect(),
        None => (0..=m).collect(),
    };
    let metric = x.distance_and_diameter();
    let (radius, radius_method) = match x.depth_and_radius(&caps) {
        Ok(rep) => (
            Some(rep.radius),
            Some(
                match rep.method {
                    DepthMethod::FacetBfs => "facet-bfs",
                    DepthMethod::Brute => "brute",
                }
                .to_string(),
            ),
        ),
        Err(Error::NoBoundary) | Err(Error::DimensionOutOfRange { .. }) => (None, None),
        Err(Error::BeyondBruteForceCap { .. }) if structural_only => {
            (None, Some("beyond-cap".to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut dimensions = Vec::new();
    for &k in &selected {
        let reduced = k == 0;
        let torsion = if k < m {
            smith_normal_form(&signed_boundary(x, k + 1, false)?)
                .torsion()
                .iter()
                .map(|d| d.to_string())
                .collect()
        } else {
            Vec::new()
        };
        let cheeger_at = |dir: Direction| -> CliResult<Option<CheegerEntry>> {
            if structural_only {
                let target = match dir {
                    Direction::Boundary if k == 1 => Some(StructuralTarget::H1ViaDiameter),
                    Direction::Coboundary if k + 1 == m || (m == 1 && k == 0) => {
                        Some(StructuralTarget::TopCochainViaRadius)
                    }
                    _ => None,
                };
                return Ok(match target {
                    Some(t) => match structural_cheeger(x, t, &caps) {
                        Ok(cert) => Some(CheegerEntry::from_result(&CheegerResult::Finite(cert))),
                        Err(Error::HypothesisViolated(_))
                        | Err(Error::NoBoundary)
                        | Err(Error::BeyondBruteForceCap { .. }) => None,
                        Err(e) => return Err(e.into()),
                    },
                    None => None,
                });
            }
            match cheeger(x, k, dir, reduced, &caps) {
                Ok(r) => Ok(Some(CheegerEntry::from_result(&r))),
                Err(Error::BeyondBruteForceCap { context, bits, cap }) => {
                    Err(CliError::CapExceeded {
                        dimension: k,
                        detail: format!("{context} needs {bits} bits (cap {cap})"),
                    })
                }
                Err(e) => Err(e.into()),
            }
        };
        dimensions.push(DimensionReport {
            k,
            simplex_count: x.count(k),
            reduced,
            betti_z2: betti(x, k, Field::Z2, reduced)?,
            betti_rational: betti(x, k, Field::Rational, reduced)?,
            torsion,
            lambda_up: spectral_gap(x, k, GapDirection::Up, reduced, cfg.eig_tol)?,
            lambda_down: spectral_gap(x, k, GapDirection::Down, reduced, cfg.eig_tol)?,
            cheeger_up: cheeger_at(Direction::Coboundary)?,
            cheeger_down: cheeger_at(Direction::Boundary)?,
        });
    }
    Ok(AnalyzeReport {
        name: name.to_string(),
        counts: x.counts(),
        top_dimension: m,
        euler_characteristic: x.euler_characteristic(),
        connected: metric.connected,
        disconnected_distance_convention: !metric.connected,
        non_branching: x.is_non_branching(),
        orientable: x.coherent_orientation().is_some(),
        boundary_faces: x.boundary_faces().len(),
        diameter: metric.diam,
        radius,
        radius_method,
        dimensions,
    })
}

fn opt_f64(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.9}"),
        None => "-".into(),
    }
}

fn opt_cheeger(v: &Option<CheegerEntry>) -> String {
    match v {
        Some(e) => format!("{} ({})", e.value, e.method),
        None => "-".into(),
    }
}

impl AnalyzeReport {
    /// Aligned text table; one row per analyzed dimension.
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "complex {}: counts {:?}, chi {}, m = {}\n",
            self.name, self.counts, self.euler_characteristic, self.top_dimension
        ));
        out.push_str(&format!(
            "connected: {}   non-branching: {}   orientable: {}   boundary faces: {}\n",
            self.connected, self.non_branching, self.orientable, self.boundary_faces
        ));
        if self.disconnected_distance_convention {
            out.push_str("note: disconnected; cross-component distances are 0 by convention\n");
        }
        out.push_str(&format!(
            "diameter: {}   radius: {}{}\n",
            self.diameter,
            self.radius.map_or("-".into(), |r| r.to_string()),
            self.radius_method
                .as_deref()
                .map_or(String::new(), |m| format!(" ({m})")),
        ));
        out.push_str(&format!(
            "{:>2} {:>6} {:>8} {:>7} {:>10} {:>14} {:>14} {:>18} {:>18}\n",
            "k", "|S_k|", "bettiZ2", "bettiQ", "torsion", "lambda^k", "lambda_k", "h^k", "h_k"
        ));
        for d in &self.dimensions {
            out.push_str(&format!(
                "{:>2} {:>6} {:>8} {:>7} {:>10} {:>14} {:>14} {:>18} {:>18}\n",
                d.k,
                d.simplex_count,
                d.betti_z2,
                d.betti_rational,
                if d.torsion.is_empty() {
                    "-".into()
                } else {
                    d.torsion.join(",")
                },
                opt_f64(d.lambda_up),
                opt_f64(d.lambda_down),
                opt_cheeger(&d.cheeger_up),
                opt_cheeger(&d.cheeger_down),
            ));
        }
        out
    }

    /// CSV mirroring the text table rows.
    pub fn csv(&self) -> String {
        let mut out = String::from(
            "name,k,simplex_count,betti_z2,betti_rational,torsion,lambda_up,lambda_down,cheeger_up,cheeger_down\n",
        );
        for d in &self.dimensions {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                self.name,
                d.k,
                d.simplex_count,
                d.betti_z2,
                d.betti_rational,
                d.torsion.join(";"),
                opt_f64(d.lambda_up),
                opt_f64(d.lambda_down),
                d.cheeger_up
                    .as_ref()
                    .map_or("-".into(), |e| e.value.clone()),
                d.cheeger_down
                    .as_ref()
                    .map_or("-".into(), |e| e.value.clone()),
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
