//! Deterministic constructors for the complex families used throughout,
//! plus a seeded generator of random triangulated disks for property
//! testing. Identical inputs always yield identical complexes (and hence
//! identical ordinals).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;
use crate::{Error, Result};

/// The full simplex `Σ^m`: closure of a single m-simplex on vertices 0..=m.
pub fn sigma(m: usize) -> SimplicialComplex {
    let facet: Vec<u32> = (0..=m as u32).collect();
    SimplicialComplex::build(&[facet]).expect("nonempty facet")
}

/// The iterated gluing family: `X_1 = Σ^m`, and `X_{j+1}` glues one fresh
/// m-simplex onto every boundary face of `X_j` (new vertex per face,
/// boundary faces processed in ordinal order, ids allocated sequentially).
pub fn xk(m: usize, k: usize) -> SimplicialComplex {
    assert!(m >= 1 && k >= 1);
    let mut facets: Vec<Vec<u32>> = vec![(0..=m as u32).collect()];
    let mut next: u32 = m as u32 + 1;
    for _ in 1..k {
        let x = SimplicialComplex::build(&facets).unwrap();
        for face in x.boundary_faces() {
            let mut f = face.vertices().to_vec();
            f.push(next);
            next += 1;
            facets.push(f);
        }
    }
    SimplicialComplex::build(&facets).unwrap()
}

/// Stellar subdivision of a facet: `σ` is replaced by the m+1 facets
/// through a fresh vertex (one per vertex of `σ`); everything else is kept.
/// The fresh vertex id is one past the largest id in use.
pub fn stellar_subdivide(x: &SimplicialComplex, facet: &Simplex) -> Result<SimplicialComplex> {
    let m = x.top_dim();
    if facet.dim() != m || !x.contains(facet) {
        return Err(Error::SimplexNotFound(facet.vertices().to_vec()));
    }
    let fresh = x
        .simplices(0)
        .iter()
        .map(|v| v.vertices()[0])
        .max()
        .unwrap()
        + 1;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for s in x.maximal_simplices() {
        if &s == facet {
            for i in 0..=m {
                let mut t = s.vertices().to_vec();
                t[i] = fresh;
                facets.push(t);
            }
        } else {
            facets.push(s.vertices().to_vec());
        }
    }
    SimplicialComplex::build(&facets)
}

/// The iterated stellar family: `Y_1` subdivides `Σ^m` once; the vertex
/// created there is the central vertex, and each later iteration
/// subdivides exactly the facets containing it (in ordinal order).
pub fn yk(m: usize, k: usize) -> SimplicialComplex {
    assert!(m >= 1 && k >= 1);
    let sigma_m = sigma(m);
    let top = sigma_m.simplices(m)[0].clone();
    let mut x = stellar_subdivide(&sigma_m, &top).unwrap();
    let central = m as u32 + 1;
    for _ in 1..k {
        let inner: Vec<Simplex> = x
            .simplices(m)
            .iter()
            .filter(|s| s.contains_vertex(central))
            .cloned()
            .collect();
        for s in inner {
            x = stellar_subdivide(&x, &s).unwrap();
        }
    }
    x
}

/// The double-star graph: a central edge {0,1} with k leaves on each end.
/// 2k+2 vertices and 2k+1 edges.
pub fn gk(k: usize) -> SimplicialComplex {
    assert!(k >= 1);
    let k = k as u32;
    let mut edges: Vec<Vec<u32>> = vec![vec![0, 1]];
    for i in 0..k {
        edges.push(vec![0, 2 + i]);
    }
    for i in 0..k {
        edges.push(vec![1, 2 + k + i]);
    }
    SimplicialComplex::build(&edges).unwrap()
}

/// The minimal 6-vertex triangulation of the real projective plane
/// (antipodal quotient of the icosahedron): 15 edges, 10 triangles, every
/// edge with exactly two cofaces, non-orientable.
pub fn rp2() -> SimplicialComplex {
    let facets: Vec<Vec<u32>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 1, 5],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![1, 3, 4],
        vec![2, 4, 5],
        vec![1, 3, 5],
    ];
    SimplicialComplex::build(&facets).unwrap()
}

const GLUE_PERCENT: u32 = 85; // glue/fill split of the disk growth process

/// Seeded growth of a triangulated disk with `t` triangles: start from one
/// triangle and repeatedly either glue a fresh-apex triangle onto a random
/// boundary edge, or fill a boundary wedge (two boundary edges sharing a
/// vertex whose far endpoints are not yet joined). Both moves keep the
/// complex a disk, so the output is always orientable, non-branching, and
/// contractible. Deterministic per seed.
pub fn random_disk(t: usize, seed: u64) -> SimplicialComplex {
    assert!(t >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<[u32; 3]> = vec![[0, 1, 2]];
    let mut next: u32 = 3;
    while facets.len() < t {
        let mut edge_cofaces: std::collections::BTreeMap<(u32, u32), u32> = Default::default();
        for f in &facets {
            for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                *edge_cofaces.entry((a, b)).or_insert(0) += 1;
            }
        }
        let boundary: Vec<(u32, u32)> = edge_cofaces
            .iter()
            .filter(|(_, &c)| c == 1)
            .map(|(&e, _)| e)
            .collect();
        let want_fill = rng.gen_range(0..100) < 100 - GLUE_PERCENT;
        let mut filled = false;
        if want_fill {
            // wedge candidates: boundary vertex v with boundary edges
            // {v,a},{v,b} where {a,b} is not an edge yet
            let mut per_vertex: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
            for &(a, b) in &boundary {
                per_vertex.entry(a).or_default().push(b);
                per_vertex.entry(b).or_default().push(a);
            }
            let candidates: Vec<[u32; 3]> = per_vertex
                .iter()
                .filter(|(_, nb)| nb.len() == 2)
                .filter_map(|(&v, nb)| {
                    let (a, b) = (nb[0].min(nb[1]), nb[0].max(nb[1]));
                    if a != b && !edge_cofaces.contains_key(&(a, b)) {
                        let mut tri = [v, a, b];
                        tri.sort_unstable();
                        Some(tri)
                    } else {
                        None
                    }
                })
                .collect();
            if !candidates.is_empty() {
                let pick = rng.gen_range(0..candidates.len());
                facets.push(candidates[pick]);
                filled = true;
            }
        }
        if !filled {
            let (a, b) = boundary[rng.gen_range(0..boundary.len())];
            facets.push([a, b, next]);
            next += 1;
        }
    }
    let lists: Vec<Vec<u32>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::build(&lists).unwrap()
}
