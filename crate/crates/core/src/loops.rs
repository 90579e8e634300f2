//! Combinatorial loops, graph distance and simple-cycle enumeration on the
//! 1-skeleton.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// A cyclic vertex sequence `v_0, …, v_{n-1}` whose consecutive pairs
/// (wrapping around) are meant to span edges of a host complex. Vertices may
/// repeat; edges may not repeat when the loop is *tight*.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CombinatorialLoop {
    vertices: Vec<VertexId>,
}

impl CombinatorialLoop {
    /// Loops must have length at least 3 and no immediate vertex repetition
    /// (a pair `v, v` cannot span an edge).
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::domain(
                "a combinatorial loop needs at least 3 vertices",
            ));
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::domain(format!(
                    "consecutive repeated vertex {} in loop",
                    vertices[i]
                )));
            }
        }
        Ok(CombinatorialLoop { vertices })
    }

    pub fn from_ids(ids: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(ids.into_iter().map(VertexId).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn ids(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.0).collect()
    }

    /// Number of edges crossed, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges as normalized (min, max) pairs, in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            (a.min(b), a.max(b))
        })
    }

    /// No edge is crossed twice.
    pub fn is_tight(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges().all(|e| seen.insert(e))
    }

    /// All vertices distinct.
    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }

    /// Lexicographically least presentation over all rotations and both
    /// traversal directions; the dedup key for loop equivalence classes.
    pub fn canonical(&self) -> CombinatorialLoop {
        let n = self.vertices.len();
        let mut best: Option<Vec<VertexId>> = None;
        let mut reversed = self.vertices.clone();
        reversed.reverse();
        for seq in [&self.vertices, &reversed] {
            for r in 0..n {
                let rotated: Vec<VertexId> = (0..n).map(|i| seq[(i + r) % n]).collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        CombinatorialLoop {
            vertices: best.unwrap(),
        }
    }

    /// Same loop up to rotation/reflection.
    pub fn equivalent_to(&self, other: &CombinatorialLoop) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Checks every consecutive pair spans an edge of `k`.
    pub fn check_in(&self, k: &SimplicialComplex) -> Result<()> {
        for (a, b) in self.edges() {
            let edge = crate::complex::Simplex::new(vec![a, b])?;
            if !k.contains_simplex(&edge) {
                return Err(Error::domain(format!(
                    "loop edge {{{a},{b}}} is not an edge of the complex"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CombinatorialLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vertices.iter().join(","))
    }
}

impl Serialize for CombinatorialLoop {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices.iter())
    }
}

impl SimplicialComplex {
    /// Graph distance in the 1-skeleton; `None` when unreachable.
    pub fn combinatorial_distance(&self, v: VertexId, w: VertexId) -> Result<Option<usize>> {
        let skel = self.skeleton();
        let (si, ti) = match (skel.index.get(&v), skel.index.get(&w)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                return Err(Error::domain(format!(
                    "unknown vertex in distance query {v}→{w}"
                )))
            }
        };
        if si == ti {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; skel.len()];
        dist[si] = 0;
        let mut queue = VecDeque::from([si]);
        while let Some(u) = queue.pop_front() {
            for &x in &skel.adj[u] {
                if dist[x] == usize::MAX {
                    dist[x] = dist[u] + 1;
                    if x == ti {
                        return Ok(Some(dist[x]));
                    }
                    queue.push_back(x);
                }
            }
        }
        Ok(None)
    }

    /// All simple cycles of the 1-skeleton of length 3..=`max_len`, one
    /// canonical representative per rotation/reflection class, sorted by
    /// (length, vertex sequence).
    ///
    /// Tight loops of length ≤ 5 are necessarily simple; for longer loops the
    /// restriction to simple cycles is a deliberate limitation.
    pub fn enumerate_tight_cycles(&self, max_len: usize) -> Result<Vec<CombinatorialLoop>> {
        if max_len < 3 {
            return Err(Error::domain("cycle enumeration needs max_len ≥ 3"));
        }
        let skel = self.skeleton();
        let n = skel.len();
        let mut out = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut in_path = vec![false; n];
        for start in 0..n {
            path.push(start);
            in_path[start] = true;
            dfs_cycles(&skel, start, max_len, &mut path, &mut in_path, &mut out);
            in_path[start] = false;
            path.pop();
        }
        let mut loops: Vec<CombinatorialLoop> = out
            .into_iter()
            .map(|idxs| CombinatorialLoop {
                vertices: idxs.into_iter().map(|i| skel.verts[i]).collect(),
            })
            .collect();
        loops.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.vertices.cmp(&b.vertices))
        });
        Ok(loops)
    }
}

/// Extends `path` (which starts at its minimum vertex) by vertices greater
/// than the start; records each cycle once by requiring the second vertex to
/// be smaller than the last.
fn dfs_cycles(
    skel: &crate::complex::Skeleton,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &next in &skel.adj[last] {
        if next <= start || in_path[next] {
            continue;
        }
        path.push(next);
        if path.len() >= 3 && skel.has_edge(next, start) && path[1] < next {
            out.push(path.clone());
        }
        if path.len() < max_len {
            in_path[next] = true;
            dfs_cycles(skel, start, max_len, path, in_path, out);
            in_path[next] = false;
        }
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle5() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![0, 4],
        ])
        .unwrap()
    }

    #[test]
    fn loop_construction_rules() {
        assert!(CombinatorialLoop::from_ids([0, 1]).is_err());
        assert!(CombinatorialLoop::from_ids([0, 0, 1]).is_err());
        assert!(CombinatorialLoop::from_ids([0, 1, 2]).is_ok());
    }

    #[test]
    fn tightness_and_simplicity() {
        // figure-eight through vertex 0: tight but not simple
        let fig8 = CombinatorialLoop::from_ids([0, 1, 2, 0, 3, 4]).unwrap();
        assert!(fig8.is_tight());
        assert!(!fig8.is_simple());
        // out-and-back is not tight
        let back = CombinatorialLoop::from_ids([0, 1, 2, 1]).unwrap();
        assert!(!back.is_tight());
    }

    #[test]
    fn canonical_form_is_rotation_reflection_invariant() {
        let a = CombinatorialLoop::from_ids([0, 2, 1, 3]).unwrap();
        let b = CombinatorialLoop::from_ids([1, 2, 0, 3]).unwrap(); // rotated
        let c = CombinatorialLoop::from_ids([3, 1, 2, 0]).unwrap(); // reflected
        assert!(a.equivalent_to(&b));
        assert!(a.equivalent_to(&c));
        assert_eq!(a.canonical().ids(), vec![0, 2, 1, 3]);
    }

    #[test]
    fn distance_on_cycle_and_tetrahedron() {
        let c5 = cycle5();
        assert_eq!(
            c5.combinatorial_distance(VertexId(0), VertexId(2)).unwrap(),
            Some(2)
        );
        let tetra = SimplicialComplex::from_facets(&[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(
            tetra
                .combinatorial_distance(VertexId(0), VertexId(3))
                .unwrap(),
            Some(1)
        );
    }

    #[test]
    fn distance_unreachable_across_components() {
        let two = SimplicialComplex::from_facets(&[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(
            two.combinatorial_distance(VertexId(0), VertexId(4))
                .unwrap(),
            None
        );
        assert!(two
            .combinatorial_distance(VertexId(0), VertexId(9))
            .is_err());
    }

    #[test]
    fn cycle_enumeration_on_small_fixtures() {
        let triangle = SimplicialComplex::from_facets(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(triangle.enumerate_tight_cycles(5).unwrap().len(), 1);

        let c5 = cycle5();
        let cycles = c5.enumerate_tight_cycles(5).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].ids(), vec![0, 1, 2, 3, 4]);
        assert!(c5.enumerate_tight_cycles(4).unwrap().is_empty());
        assert!(c5.enumerate_tight_cycles(2).is_err());
    }
}
