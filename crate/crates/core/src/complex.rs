//! Abstract simplicial complexes in facet representation.
//!
//! A complex is stored as its set of inclusion-maximal simplices (facets);
//! a simplex belongs to the complex iff it is contained in some facet, so
//! face closure never has to be materialized. All edges are implicitly of
//! unit length (the regular metric convention).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Identifier of a vertex. Stable: no operation ever renumbers vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.0)
    }
}

/// A simplex identified with its vertex set, kept sorted strictly ascending.
///
/// The empty simplex is representable and accepted only by the operations
/// that explicitly allow it (e.g. [`SimplicialComplex::link`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from vertex ids, sorting them; duplicate ids are rejected.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::malformed(format!(
                "duplicate vertex in simplex {:?}",
                vertices.iter().map(|v| v.0).collect::<Vec<_>>()
            )));
        }
        Ok(Simplex { vertices })
    }

    pub fn from_ids(ids: impl IntoIterator<Item = u32>) -> Result<Self> {
        Simplex::new(ids.into_iter().map(VertexId).collect())
    }

    pub fn empty() -> Self {
        Simplex { vertices: vec![] }
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex { vertices: vec![v] }
    }

    /// Internal constructor for vertex lists already known to be sorted and distinct.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn ids(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.0).collect()
    }

    /// Number of vertices minus one; -1 for the empty simplex.
    pub fn dimension(&self) -> isize {
        self.vertices.len() as isize - 1
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Subset test on the sorted vertex lists.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn union(&self, other: &Simplex) -> Result<Simplex> {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        Simplex::new(vertices)
    }

    /// Vertices of `self` not in `other`.
    pub fn difference(&self, other: &Simplex) -> Simplex {
        let vertices = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !other.contains_vertex(*v))
            .collect();
        Simplex { vertices }
    }

    /// All faces of the given dimension (subsets of size `k + 1`).
    pub fn faces_of_dimension(&self, k: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.vertices
            .iter()
            .copied()
            .combinations(k + 1)
            .map(Simplex::from_sorted_unchecked)
    }

    /// All nonempty faces, the simplex itself included.
    pub fn all_nonempty_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.vertices.len()).flat_map(move |k| self.faces_of_dimension(k))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices.iter())
    }
}

/// Adjacency view of the 1-skeleton, built once per complex on demand.
#[derive(Debug)]
pub(crate) struct Skeleton {
    pub verts: Vec<VertexId>,
    pub index: HashMap<VertexId, usize>,
    /// Sorted neighbor index lists.
    pub adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Skeleton {
    fn build(complex: &SimplicialComplex) -> Self {
        let verts: Vec<VertexId> = complex.vertex_set().to_vec();
        let index: HashMap<VertexId, usize> =
            verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let n = verts.len();
        let mut adj = vec![BTreeSet::new(); n];
        for edge in complex.all_faces(1).iter() {
            let a = index[&edge.vertices()[0]];
            let b = index[&edge.vertices()[1]];
            adj[a].insert(b);
            adj[b].insert(a);
        }
        let mut matrix = vec![false; n * n];
        for (i, nbrs) in adj.iter().enumerate() {
            for &j in nbrs {
                matrix[i * n + j] = true;
            }
        }
        Skeleton {
            verts,
            index,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
            matrix,
        }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.matrix[i * self.verts.len() + j]
    }
}

#[derive(Default)]
struct Caches {
    faces: RwLock<HashMap<usize, Arc<Vec<Simplex>>>>,
    skeleton: OnceLock<Arc<Skeleton>>,
}

impl fmt::Debug for Caches {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Caches{..}")
    }
}

/// Abstract simplicial complex given by its facets.
#[derive(Debug)]
pub struct SimplicialComplex {
    /// Inclusion-maximal simplices, sorted lexicographically.
    facets: Vec<Simplex>,
    /// Sorted union of the facet vertex sets.
    vertices: Vec<VertexId>,
    caches: Caches,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            facets: self.facets.clone(),
            vertices: self.vertices.clone(),
            caches: Caches::default(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists. Non-maximal input faces are
    /// absorbed; duplicate vertices within a facet are rejected; empty facet
    /// lists are rejected.
    pub fn from_facets(facet_lists: &[Vec<u32>]) -> Result<Self> {
        let mut simplices = Vec::with_capacity(facet_lists.len());
        for list in facet_lists {
            if list.is_empty() {
                return Err(Error::malformed("empty facet list"));
            }
            simplices.push(Simplex::from_ids(list.iter().copied())?);
        }
        Ok(Self::from_simplices(simplices))
    }

    /// Normalizing constructor: drops empty simplices, absorbs non-maximal faces.
    pub fn from_simplices(simplices: Vec<Simplex>) -> Self {
        let mut kept: Vec<Simplex> = Vec::new();
        // longest first so that a simplex only needs checking against kept ones
        let mut sorted = simplices;
        sorted.retain(|s| !s.is_empty());
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for s in sorted {
            if !kept.iter().any(|m| s.is_face_of(m)) {
                kept.push(s);
            }
        }
        kept.sort();
        let mut vertices: Vec<VertexId> = kept
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplex {
            facets: kept,
            vertices,
            caches: Caches::default(),
        }
    }

    /// The complex with no simplices at all.
    pub fn void() -> Self {
        SimplicialComplex {
            facets: vec![],
            vertices: vec![],
            caches: Caches::default(),
        }
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertex_set(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Max facet dimension; -1 for the void complex.
    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.dimension())
            .max()
            .unwrap_or(-1)
    }

    /// Every facet has the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .map(|f| f.dimension())
            .all(|d| d == self.dimension())
    }

    /// True iff `s` is a subset of some facet. The empty simplex is a face of
    /// every nonvoid complex by convention (and of the void complex too).
    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        if s.is_empty() {
            return true;
        }
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// All `k`-dimensional faces, each listed once, sorted. Memoized per dimension.
    pub fn all_faces(&self, k: usize) -> Arc<Vec<Simplex>> {
        if let Some(found) = self.caches.faces.read().unwrap().get(&k) {
            return Arc::clone(found);
        }
        let mut set = BTreeSet::new();
        for facet in &self.facets {
            if facet.len() > k {
                set.extend(facet.faces_of_dimension(k));
            }
        }
        let faces = Arc::new(set.into_iter().collect::<Vec<_>>());
        self.caches
            .faces
            .write()
            .unwrap()
            .insert(k, Arc::clone(&faces));
        faces
    }

    /// All nonempty simplices of the complex, sorted by dimension then lexicographically.
    pub fn all_simplices(&self) -> Vec<Simplex> {
        let mut set = BTreeSet::new();
        for facet in &self.facets {
            set.extend(facet.all_nonempty_faces());
        }
        let mut out: Vec<Simplex> = set.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub(crate) fn skeleton(&self) -> Arc<Skeleton> {
        Arc::clone(
            self.caches
                .skeleton
                .get_or_init(|| Arc::new(Skeleton::build(self))),
        )
    }

    /// Combinatorial link: all simplices `t` disjoint from `s` with `s ∪ t`
    /// in the complex. `s = ∅` is allowed and yields the complex itself.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        if s.is_empty() {
            return Ok(self.clone());
        }
        if !self.contains_simplex(s) {
            return Err(Error::domain(format!("simplex {s} not in complex")));
        }
        let link_facets: Vec<Simplex> = self
            .facets
            .iter()
            .filter(|f| s.is_face_of(f))
            .map(|f| f.difference(s))
            .collect();
        Ok(SimplicialComplex::from_simplices(link_facets))
    }

    /// The full subcomplex on `verts`: all simplices with vertex set inside `verts`.
    pub fn induced_subcomplex(&self, verts: &[VertexId]) -> Result<SimplicialComplex> {
        let vset: BTreeSet<VertexId> = verts.iter().copied().collect();
        for v in &vset {
            if !self.contains_vertex(*v) {
                return Err(Error::domain(format!("vertex {v} not in complex")));
            }
        }
        let restricted: Vec<Simplex> = self
            .facets
            .iter()
            .map(|f| {
                Simplex::from_sorted_unchecked(
                    f.vertices()
                        .iter()
                        .copied()
                        .filter(|v| vset.contains(v))
                        .collect(),
                )
            })
            .collect();
        Ok(SimplicialComplex::from_simplices(restricted))
    }

    /// Checks that every facet of `self` is a simplex of `ambient`.
    pub fn is_subcomplex_of(&self, ambient: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| ambient.contains_simplex(f))
    }

    /// Fullness test: `self` is full in `ambient` iff every simplex of
    /// `ambient` with vertices in `self` already lies in `self`. Returns a
    /// violating simplex of minimal dimension, or `None` when full.
    pub fn fullness_violation(&self, ambient: &SimplicialComplex) -> Result<Option<Simplex>> {
        if !self.is_subcomplex_of(ambient) {
            return Err(Error::domain(
                "fullness test requires a subcomplex of the ambient complex",
            ));
        }
        let induced = ambient.induced_subcomplex(self.vertex_set())?;
        let max_dim = induced.dimension();
        for k in 0..=max_dim.max(0) as usize {
            for face in induced.all_faces(k).iter() {
                if !self.contains_simplex(face) {
                    return Ok(Some(face.clone()));
                }
            }
        }
        Ok(None)
    }

    pub fn is_full_in(&self, ambient: &SimplicialComplex) -> Result<bool> {
        Ok(self.fullness_violation(ambient)?.is_none())
    }

    /// Flag test: every clique of the 1-skeleton spans a simplex. On failure
    /// returns a minimal non-spanning clique (all of whose proper subsets span),
    /// the lexicographically least one of smallest size.
    pub fn flag_violation(&self) -> Option<Vec<VertexId>> {
        // a single facet carries every clique of its own 1-skeleton
        if self.facets.len() <= 1 {
            return None;
        }
        let skel = self.skeleton();
        let n = skel.len();
        if n == 0 {
            return None;
        }
        // cliques as sorted index vectors, grown one vertex at a time
        let mut current: Vec<Vec<usize>> = (0..n)
            .flat_map(|i| {
                skel.adj[i]
                    .iter()
                    .filter(move |&&j| j > i)
                    .map(move |&j| vec![i, j])
            })
            .collect();
        while !current.is_empty() {
            let mut next = Vec::new();
            let mut failures: Vec<Vec<VertexId>> = Vec::new();
            for clique in &current {
                let last = *clique.last().unwrap();
                for &cand in skel.adj[last].iter().filter(|&&c| c > last) {
                    if clique.iter().all(|&m| skel.has_edge(m, cand)) {
                        let mut bigger = clique.clone();
                        bigger.push(cand);
                        let verts: Vec<VertexId> = bigger.iter().map(|&i| skel.verts[i]).collect();
                        let simplex = Simplex::from_sorted_unchecked(verts.clone());
                        if self.contains_simplex(&simplex) {
                            next.push(bigger);
                        } else {
                            failures.push(verts);
                        }
                    }
                }
            }
            if !failures.is_empty() {
                failures.sort();
                return Some(failures.swap_remove(0));
            }
            current = next;
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Simplicial join: facets are unions of a facet of `self` and one of
    /// `other`. Vertex sets must be disjoint. Joining with the void complex
    /// returns the other factor.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.vertices.iter().any(|v| other.contains_vertex(*v)) {
            return Err(Error::domain("join factors share vertex ids"));
        }
        if self.facets.is_empty() {
            return Ok(other.clone());
        }
        if other.facets.is_empty() {
            return Ok(self.clone());
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(b)?);
            }
        }
        Ok(SimplicialComplex::from_simplices(facets))
    }
}
