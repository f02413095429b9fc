//! Metric queries: vertex distance and diameter, facet depth and radius.
//!
//! The distance between two vertices is the minimal Hamming norm of a
//! 1-chain whose boundary is their sum, i.e. the 1-skeleton graph distance;
//! by convention it is 0 for vertices in different components, so the
//! diameter ignores cross-component pairs (reports flag disconnection).
//!
//! The depth of an m-simplex `σ` is the minimal norm of an (m-1)-cochain
//! `φ` with `δφ = σ`; the radius is the maximal depth. On non-branching
//! complexes with trivial top Z2 homology, a depth-attaining cochain is a
//! non-self-intersecting corridor of (m-1)-faces from `σ` to a boundary
//! face, so depths are computed by multi-source BFS on the facet-adjacency
//! graph seeded at the facets that contain a boundary face. Otherwise a
//! capped exhaustive sweep over (m-1)-cochains is used.

use std::collections::VecDeque;

use crate::boundary::z2_boundary;
use crate::complex::SimplicialComplex;
use crate::z2::Z2Chain;
use crate::{Caps, Error, Result};

/// Pairwise distances, diameter, and geodesic witnesses.
#[derive(Clone, Debug)]
pub struct DistanceReport {
    /// `dist[i][j]` over vertex ordinals; 0 for cross-component pairs.
    pub dist: Vec<Vec<u32>>,
    pub diam: u32,
    /// One geodesic per diametral pair (i < j).
    pub witnesses: Vec<Geodesic>,
    pub connected: bool,
}

/// A shortest 1-chain between two vertices (given by their ids).
#[derive(Clone, Debug)]
pub struct Geodesic {
    pub endpoints: (u32, u32),
    pub chain: Z2Chain,
}

/// How facet depths were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthMethod {
    FacetBfs,
    Brute,
}

/// Per-facet depths, the radius, and depth-attaining witness cochains.
#[derive(Clone, Debug)]
pub struct DepthReport {
    pub depth: Vec<u32>,
    pub radius: u32,
    /// `witnesses[f]` is an (m-1)-cochain with coboundary = facet f.
    pub witnesses: Vec<Z2Chain>,
    pub method: DepthMethod,
}

impl SimplicialComplex {
    /// All-pairs distances on the 1-skeleton, the diameter, and one
    /// geodesic witness per diametral pair.
    pub fn distance_and_diameter(&self) -> DistanceReport {
        let n = self.count(0);
        let adj = self.vertex_adjacency();
        let mut dist = vec![vec![0u32; n]; n];
        let mut diam = 0u32;
        for s in 0..n {
            let d = bfs_from(&adj, s);
            for (v, dv) in d.iter().enumerate() {
                if let Some(x) = dv {
                    dist[s][v] = *x;
                    diam = diam.max(*x);
                }
            }
        }
        let mut witnesses = Vec::new();
        if diam > 0 {
            for s in 0..n {
                if (0..n).all(|v| !(v > s && dist[s][v] == diam)) {
                    continue;
                }
                let parents = bfs_parents(&adj, s);
                for v in s + 1..n {
                    if dist[s][v] == diam {
                        let mut chain = Z2Chain::zero(1, self.count(1));
                        let mut cur = v;
                        while cur != s {
                            let (p, e) = parents[cur].unwrap();
                            chain.set(e, true);
                            cur = p;
                        }
                        witnesses.push(Geodesic {
                            endpoints: (
                                self.simplices(0)[s].vertices()[0],
                                self.simplices(0)[v].vertices()[0],
                            ),
                            chain,
                        });
                    }
                }
            }
        }
        DistanceReport {
            dist,
            diam,
            witnesses,
            connected: self.is_connected(),
        }
    }

    /// Facet depths and the radius. Fails with [`Error::NoBoundary`] when
    /// the top Z2 homology is nonzero (some facet has no finite depth).
    pub fn depth_and_radius(&self, caps: &Caps) -> Result<DepthReport> {
        let m = self.top_dim();
        if m == 0 {
            return Err(Error::DimensionOutOfRange { k: 0, m });
        }
        let dm = z2_boundary(self, m, false)?;
        if dm.rank() != self.count(m) {
            return Err(Error::NoBoundary);
        }
        if self.is_non_branching() {
            self.depth_by_facet_bfs()
        } else {
            self.depth_by_brute_sweep(caps)
        }
    }

    /// Facet depths by the exhaustive cochain sweep, regardless of
    /// branching. Exists so the BFS fast path can be cross-checked.
    pub fn depth_and_radius_by_sweep(&self, caps: &Caps) -> Result<DepthReport> {
        let m = self.top_dim();
        if m == 0 {
            return Err(Error::DimensionOutOfRange { k: 0, m });
        }
        let dm = z2_boundary(self, m, false)?;
        if dm.rank() != self.count(m) {
            return Err(Error::NoBoundary);
        }
        self.depth_by_brute_sweep(caps)
    }

    fn depth_by_facet_bfs(&self) -> Result<DepthReport> {
        let m = self.top_dim();
        let nf = self.count(m);
        let nfaces = self.count(m - 1);
        let cof = self.coface_ordinals(m - 1);
        let mut depth = vec![0u32; nf];
        let mut witnesses = vec![Z2Chain::zero(m - 1, nfaces); nf];
        let mut queue = VecDeque::new();
        // seeds: facets containing a boundary face, witness = that face;
        // faces scanned in ordinal order so ties break deterministically
        for (face, c) in cof.iter().enumerate() {
            if c.len() == 1 && depth[c[0]] == 0 {
                depth[c[0]] = 1;
                witnesses[c[0]].set(face, true);
                queue.push_back(c[0]);
            }
        }
        let adj = self.facet_adjacency();
        while let Some(u) = queue.pop_front() {
            for &(v, shared) in &adj[u] {
                if depth[v] == 0 {
                    depth[v] = depth[u] + 1;
                    witnesses[v] = witnesses[u].clone();
                    witnesses[v].set(shared, true);
                    queue.push_back(v);
                }
            }
        }
        // every facet is reached once top Z2 homology vanishes
        debug_assert!(depth.iter().all(|&d| d > 0));
        let radius = depth.iter().copied().max().unwrap_or(0);
        Ok(DepthReport {
            depth,
            radius,
            witnesses,
            method: DepthMethod::FacetBfs,
        })
    }

    fn depth_by_brute_sweep(&self, caps: &Caps) -> Result<DepthReport> {
        let m = self.top_dim();
        let nf = self.count(m);
        let n = self.count(m - 1);
        if n > caps.brute_cap_bits as usize || n >= 64 {
            return Err(Error::BeyondBruteForceCap {
                context: "depth sweep over (m-1)-cochains",
                bits: n,
                cap: caps.brute_cap_bits,
            });
        }
        // delta of each (m-1)-face as a facet mask
        let cof = self.coface_ordinals(m - 1);
        let mut delta_col = vec![0u128; n];
        assert!(nf <= 128, "facet count out of desk scale");
        for (face, c) in cof.iter().enumerate() {
            for &f in c {
                delta_col[face] |= 1u128 << f;
            }
        }
        let mut best: Vec<Option<(u32, u64)>> = vec![None; nf];
        let mut phi = 0u64;
        let mut dphi = 0u128;
        let mut w = 0u32;
        for step in 1u64..1u64 << n {
            let bit = step.trailing_zeros() as usize;
            phi ^= 1 << bit;
            dphi ^= delta_col[bit];
            w = if phi >> bit & 1 == 1 { w + 1 } else { w - 1 };
            if dphi.count_ones() == 1 {
                let f = dphi.trailing_zeros() as usize;
                if best[f].is_none_or(|(bw, _)| w < bw) {
                    best[f] = Some((w, phi));
                }
            }
        }
        let mut depth = vec![0u32; nf];
        let mut witnesses = vec![Z2Chain::zero(m - 1, n); nf];
        for (f, b) in best.iter().enumerate() {
            let (d, mask) = b.ok_or(Error::NoBoundary)?;
            depth[f] = d;
            witnesses[f] = Z2Chain::from_mask_u64(m - 1, n, mask);
        }
        let radius = depth.iter().copied().max().unwrap_or(0);
        Ok(DepthReport {
            depth,
            radius,
            witnesses,
            method: DepthMethod::Brute,
        })
    }
}

fn bfs_from(adj: &[Vec<(usize, usize)>], s: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &(v, _) in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn bfs_parents(adj: &[Vec<(usize, usize)>], s: usize) -> Vec<Option<(usize, usize)>> {
    let mut seen = vec![false; adj.len()];
    let mut parents = vec![None; adj.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &(v, e) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parents[v] = Some((u, e));
                queue.push_back(v);
            }
        }
    }
    parents
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::z2_boundary;
    use crate::generators;

    #[test]
    fn single_edge_has_diameter_one() {
        let x = SimplicialComplex::build(&[vec![0, 1]]).unwrap();
        let rep = x.distance_and_diameter();
        assert_eq!(rep.diam, 1);
        assert!(rep.connected);
        assert_eq!(rep.witnesses.len(), 1);
        assert_eq!(rep.witnesses[0].chain.weight(), 1);
    }

    #[test]
    fn disconnected_pairs_get_distance_zero() {
        let x = SimplicialComplex::build(&[vec![0, 1], vec![2, 3]]).unwrap();
        let rep = x.distance_and_diameter();
        assert!(!rep.connected);
        assert_eq!(rep.dist[0][2], 0);
        assert_eq!(rep.diam, 1);
    }

    #[test]
    fn gk_diameter_is_three() {
        let rep = generators::gk(2).distance_and_diameter();
        assert_eq!(rep.diam, 3);
        for g in &rep.witnesses {
            assert_eq!(g.chain.weight(), 3);
        }
    }

    #[test]
    fn sigma_depths_are_all_one() {
        for m in 1..=4 {
            let rep = generators::sigma(m)
                .depth_and_radius(&Caps::default())
                .unwrap();
            assert_eq!(rep.radius, 1);
            assert!(rep.depth.iter().all(|&d| d == 1));
            assert_eq!(rep.method, DepthMethod::FacetBfs);
        }
    }

    #[test]
    fn depth_witnesses_have_the_right_coboundary() {
        let x = generators::xk(2, 3);
        let rep = x.depth_and_radius(&Caps::default()).unwrap();
        assert_eq!(rep.radius, 3);
        let dm = z2_boundary(&x, 2, false).unwrap();
        // delta on (m-1)-cochains is the transpose of the boundary map
        let dt = dm.transpose();
        for (f, wit) in rep.witnesses.iter().enumerate() {
            assert_eq!(wit.weight() as u32, rep.depth[f]);
            let image = dt.apply(wit, 2).unwrap();
            assert_eq!(image.ordinals(), vec![f]);
        }
    }

    #[test]
    fn branching_complex_uses_the_brute_sweep() {
        let x = SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let rep = x.depth_and_radius(&Caps::default()).unwrap();
        assert_eq!(rep.method, DepthMethod::Brute);
        assert_eq!(rep.radius, 1);
        assert!(rep.depth.iter().all(|&d| d == 1));
    }

    #[test]
    fn closed_top_homology_means_no_finite_depth() {
        let sphere =
            SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
                .unwrap();
        assert!(matches!(
            sphere.depth_and_radius(&Caps::default()),
            Err(Error::NoBoundary)
        ));
    }
}
