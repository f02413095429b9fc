use crate::{Error, Result};

/// A simplex, stored as a strictly increasing list of vertex ids.
///
/// A set `{v_0, ..., v_k}` of k+1 vertices is a k-simplex. Equality and
/// ordering are plain lexicographic comparison of the vertex lists, which
/// makes the sorted-vertex form canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// Builds a simplex from a vertex list in any order.
    ///
    /// Fails with [`Error::EmptyInput`] on an empty list and
    /// [`Error::DuplicateVertexInSimplex`] on a repeated vertex.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertexInSimplex(w[0]));
            }
        }
        Ok(Simplex { vertices })
    }

    /// Vertex list already known to be strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!vertices.is_empty());
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Dimension = number of vertices minus one.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The face obtained by deleting the `i`-th vertex (ascending order).
    ///
    /// Under the reference (ascending) orientation this face carries the
    /// coefficient `(-1)^i` in the boundary of `self`.
    pub fn face_omitting(&self, i: usize) -> Simplex {
        debug_assert!(self.dim() >= 1);
        let mut v = self.vertices.clone();
        v.remove(i);
        Simplex { vertices: v }
    }

    /// All codimension-1 faces, in boundary-formula order: the `i`-th entry
    /// omits the `i`-th vertex. Empty for a vertex.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|i| self.face_omitting(i))
            .collect()
    }

    /// Subset test: is `self` a face (of any codimension) of `other`?
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The coface `self ∪ {v}`; `None` if `v` is already a vertex.
    pub fn with_vertex(&self, v: u32) -> Option<Simplex> {
        match self.vertices.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = self.vertices.clone();
                out.insert(pos, v);
                Some(Simplex { vertices: out })
            }
        }
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
