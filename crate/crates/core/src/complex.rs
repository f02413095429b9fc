use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::simplex::Simplex;
use crate::{Error, Result};

/// A finite abstract simplicial complex, closed under inclusion.
///
/// Simplexes are kept in per-dimension lists sorted lexicographically by
/// vertex list; the position of a simplex in its list is its *ordinal*, the
/// stable index used by every matrix and chain in this crate. Vertex ids do
/// not need to be contiguous — the dimension-0 list is the id map.
///
/// Complexes are immutable after construction, so all queries are read-only
/// and safe to share across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    dims: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

/// A sign per top-dimensional simplex, relative to the reference
/// (ascending-vertex) orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationAssignment {
    signs: Vec<i8>,
}

impl OrientationAssignment {
    /// Sign of the facet with the given ordinal, `+1` or `-1`.
    pub fn sign(&self, facet_ordinal: usize) -> i8 {
        self.signs[facet_ordinal]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

impl SimplicialComplex {
    /// Builds the inclusion-closure of the given simplexes.
    ///
    /// Input lists may be unsorted and may repeat across entries (the union
    /// is taken); a repeated vertex *within* a list is an error.
    pub fn build(maximal: &[Vec<u32>]) -> Result<Self> {
        if maximal.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for vs in maximal {
            let s = Simplex::new(vs.clone())?;
            let verts = s.vertices();
            let n = verts.len();
            // the closure of one simplex has 2^n - 1 faces
            if n > 24 {
                return Err(Error::BeyondBruteForceCap {
                    context: "inclusion-closure of a simplex",
                    bits: n,
                    cap: 24,
                });
            }
            for mask in 1u32..(1u32 << n) {
                let sub: Vec<u32> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| verts[i])
                    .collect();
                all.insert(Simplex::from_sorted(sub));
            }
        }
        let m = all.iter().map(|s| s.dim()).max().unwrap();
        let mut dims = vec![Vec::new(); m + 1];
        for s in all {
            let k = s.dim();
            dims[k].push(s);
        }
        let index = dims
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(SimplicialComplex { dims, index })
    }

    /// Top dimension m (the complex has at least one m-simplex).
    pub fn top_dim(&self) -> usize {
        self.dims.len() - 1
    }

    /// Number of k-simplexes; 0 when k exceeds the top dimension.
    pub fn count(&self, k: usize) -> usize {
        self.dims.get(k).map_or(0, Vec::len)
    }

    /// Per-dimension simplex counts `(|S_0|, ..., |S_m|)`.
    pub fn counts(&self) -> Vec<usize> {
        self.dims.iter().map(Vec::len).collect()
    }

    /// The k-simplexes in ordinal (lexicographic) order.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.dims.get(k).map_or(&[], Vec::as_slice)
    }

    /// Ordinal of a simplex within its dimension, if present.
    pub fn ordinal(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.ordinal(s).is_some()
    }

    /// Euler characteristic `sum_k (-1)^k |S_k|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if k % 2 == 0 {
                    v.len() as i64
                } else {
                    -(v.len() as i64)
                }
            })
            .sum()
    }

    /// The star of `s`: every coface of dimension `dim(s) + 1`.
    pub fn star(&self, s: &Simplex) -> Result<Vec<Simplex>> {
        if !self.contains(s) {
            return Err(Error::SimplexNotFound(s.vertices().to_vec()));
        }
        Ok(self
            .simplices(s.dim() + 1)
            .iter()
            .filter(|t| s.is_face_of(t))
            .cloned()
            .collect())
    }

    /// For each k-simplex ordinal, the ordinals of its (k+1)-cofaces.
    pub fn coface_ordinals(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count(k)];
        for (j, t) in self.simplices(k + 1).iter().enumerate() {
            for face in t.faces() {
                out[self.ordinal(&face).unwrap()].push(j);
            }
        }
        for v in &mut out {
            v.sort_unstable();
        }
        out
    }

    /// All (m-1)-simplexes with exactly one coface.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        self.boundary_face_ordinals()
            .into_iter()
            .map(|i| self.simplices(self.top_dim() - 1)[i].clone())
            .collect()
    }

    /// Ordinals (within dimension m-1) of the boundary faces.
    pub fn boundary_face_ordinals(&self) -> Vec<usize> {
        let m = self.top_dim();
        if m == 0 {
            return Vec::new();
        }
        self.coface_ordinals(m - 1)
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() == 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff every (m-1)-simplex has at most two cofaces.
    pub fn is_non_branching(&self) -> bool {
        let m = self.top_dim();
        if m == 0 {
            return true;
        }
        self.coface_ordinals(m - 1).iter().all(|c| c.len() <= 2)
    }

    /// Facet-adjacency structure: for each m-simplex, the list of
    /// `(neighbor facet ordinal, shared (m-1)-face ordinal)` pairs, sorted.
    /// A face with c cofaces contributes all c-choose-2 pairs.
    pub fn facet_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let m = self.top_dim();
        let nf = self.count(m);
        let mut adj = vec![Vec::new(); nf];
        if m == 0 {
            return adj;
        }
        for (face_ord, cof) in self.coface_ordinals(m - 1).iter().enumerate() {
            for a in 0..cof.len() {
                for b in a + 1..cof.len() {
                    adj[cof[a]].push((cof[b], face_ord));
                    adj[cof[b]].push((cof[a], face_ord));
                }
            }
        }
        for v in &mut adj {
            v.sort_unstable();
        }
        adj
    }

    /// Tries to orient all m-simplexes pairwise similarly across shared
    /// (m-1)-faces, i.e. so that lower-adjacent facets induce opposite
    /// orientations on the common face. Returns `None` when impossible.
    ///
    /// Signs are propagated by breadth-first search from the lowest-ordinal
    /// facet of each component of the facet-adjacency graph, which gets +1.
    pub fn coherent_orientation(&self) -> Option<OrientationAssignment> {
        let m = self.top_dim();
        let facets = self.simplices(m);
        let nf = facets.len();
        if m == 0 {
            return Some(OrientationAssignment { signs: vec![1; nf] });
        }
        // adjacency with the relative sign forced by similarity:
        // eps_b = -eps_a * sa * sb where sa, sb are the boundary-formula
        // coefficients of the shared face in a and b.
        let mut incidences: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.count(m - 1)];
        for (j, f) in facets.iter().enumerate() {
            for (i, face) in f.faces().into_iter().enumerate() {
                let r = self.ordinal(&face).unwrap();
                incidences[r].push((j, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); nf];
        for lst in &incidences {
            for a in 0..lst.len() {
                for b in a + 1..lst.len() {
                    let (fa, sa) = lst[a];
                    let (fb, sb) = lst[b];
                    let rel = -(sa * sb);
                    adj[fa].push((fb, rel));
                    adj[fb].push((fa, rel));
                }
            }
        }
        let mut signs = vec![0i8; nf];
        let mut queue = VecDeque::new();
        for root in 0..nf {
            if signs[root] != 0 {
                continue;
            }
            signs[root] = 1;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(v, rel) in &adj[u] {
                    let want = signs[u] * rel;
                    if signs[v] == 0 {
                        signs[v] = want;
                        queue.push_back(v);
                    } else if signs[v] != want {
                        return None;
                    }
                }
            }
        }
        Some(OrientationAssignment { signs })
    }

    /// Maximal simplexes: those with no coface of any dimension. For a pure
    /// complex these are exactly the m-simplexes.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in 0..=self.top_dim() {
            let cof = self.coface_ordinals(k);
            for (i, s) in self.simplices(k).iter().enumerate() {
                if cof[i].is_empty() {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// Connected component id per vertex ordinal (1-skeleton components).
    pub fn vertex_components(&self) -> Vec<usize> {
        let n = self.count(0);
        let mut comp = vec![usize::MAX; n];
        let adj = self.vertex_adjacency();
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_components().iter().all(|&c| c == 0)
    }

    /// 1-skeleton adjacency: per vertex ordinal, `(neighbor vertex ordinal,
    /// edge ordinal)` pairs in ascending neighbor order.
    pub(crate) fn vertex_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.count(0)];
        for (e, edge) in self.simplices(1).iter().enumerate() {
            let a = self
                .ordinal(&Simplex::from_sorted(vec![edge.vertices()[0]]))
                .unwrap();
            let b = self
                .ordinal(&Simplex::from_sorted(vec![edge.vertices()[1]]))
                .unwrap();
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        for v in &mut adj {
            v.sort_unstable();
        }
        adj
    }

    /// Rebuilds the complex with every vertex id mapped through `f`.
    /// The map must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Result<SimplicialComplex> {
        let mut seen = std::collections::HashSet::new();
        for v in self.simplices(0) {
            let image = f(v.vertices()[0]);
            if !seen.insert(image) {
                return Err(Error::DuplicateVertexInSimplex(image));
            }
        }
        let facets: Vec<Vec<u32>> = self
            .maximal_simplices()
            .iter()
            .map(|s| s.vertices().iter().map(|&v| f(v)).collect())
            .collect();
        let out = SimplicialComplex::build(&facets)?;
        debug_assert_eq!(out.counts(), self.counts());
        Ok(out)
    }
}
