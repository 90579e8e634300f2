//! Triangulated disk diagrams: validation against the disk axioms, vertex
//! degrees, the combinatorial Gauß–Bonnet sum, the CAT(0)-disk predicate,
//! exhaustive enumeration of disk types, and minimal spanning-disk search.

mod enumerate;
mod search;

pub use enumerate::{disk_types_with_interior, enumerate_disk_types, random_disk};
pub use search::{
    find_minimal_spanning_disks, spanning_disks_at_area, DiskSearchOutcome, SimplicialMap,
    SpanningDisk,
};

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Simplex, VertexId};
use crate::error::{DiskAxiom, Error, Result};
use crate::loops::CombinatorialLoop;

type Edge = (VertexId, VertexId);

/// A validated triangulated disk: connected, every edge on one (boundary) or
/// two (interior) faces, Euler characteristic 1, nonsingular, interior vertex
/// links single cycles, boundary vertex links single paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskDiagram {
    faces: Vec<Simplex>,
    boundary: CombinatorialLoop,
    interior: Vec<VertexId>,
    /// Edge count per vertex.
    degrees: BTreeMap<VertexId, usize>,
    edges: BTreeSet<Edge>,
}

impl DiskDiagram {
    /// Combinatorial area: the number of faces.
    pub fn area(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn boundary(&self) -> &CombinatorialLoop {
        &self.boundary
    }

    pub fn interior_vertices(&self) -> &[VertexId] {
        &self.interior
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.degrees.keys().copied()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.interior.binary_search(&v).is_ok()
    }

    /// Number of edges at `v`: for interior vertices this equals the number
    /// of incident faces, for boundary vertices that number plus one.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.degrees
            .get(&v)
            .copied()
            .ok_or_else(|| Error::domain(format!("vertex {v} not in disk")))
    }

    /// `Σ_{v∈∂D}(4 − deg v) + Σ_{v∈int D}(6 − deg v)`; equals 6 for every
    /// valid triangulated disk. Computed honestly, never assumed.
    pub fn gauss_bonnet_total(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(v, &d)| {
                if self.is_interior(*v) {
                    6 - d as i64
                } else {
                    4 - d as i64
                }
            })
            .sum()
    }

    /// `Σ_{v∈∂D}(4 − deg v)`: at least 6 on every CAT(0) disk.
    pub fn boundary_curvature(&self) -> i64 {
        self.degrees
            .iter()
            .filter(|(v, _)| !self.is_interior(**v))
            .map(|(_, &d)| 4 - d as i64)
            .sum()
    }

    /// First interior vertex (in id order) lying on fewer than six
    /// triangles, with its degree. `None` means the disk is CAT(0).
    pub fn cat0_violation(&self) -> Option<(VertexId, usize)> {
        self.interior
            .iter()
            .map(|v| (*v, self.degrees[v]))
            .find(|(_, d)| *d < 6)
    }

    pub fn is_cat0(&self) -> bool {
        self.cat0_violation().is_none()
    }
}

fn edge(a: VertexId, b: VertexId) -> Edge {
    (a.min(b), a.max(b))
}

/// Validates a face list (plus optional expected boundary loop) against the
/// disk axioms. Singular candidates (cut vertices) are classified and
/// rejected. The stored boundary is the supplied loop when given, otherwise
/// the derived cycle starting at its least vertex in the lexicographically
/// smaller direction.
pub fn validate_disk(
    faces: &[Simplex],
    boundary: Option<&CombinatorialLoop>,
) -> Result<DiskDiagram> {
    if faces.is_empty() {
        return Err(Error::invalid_disk(DiskAxiom::NoFaces, "no faces"));
    }
    let mut sorted_faces: Vec<Simplex> = Vec::with_capacity(faces.len());
    for f in faces {
        if f.len() != 3 {
            return Err(Error::invalid_disk(
                DiskAxiom::FaceNotTriangle,
                format!("face {f} is not a 2-simplex"),
            ));
        }
        sorted_faces.push(f.clone());
    }
    sorted_faces.sort();
    if sorted_faces.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid_disk(
            DiskAxiom::DuplicateFace,
            "duplicate face",
        ));
    }

    // edge-face incidence counts
    let mut edge_count: BTreeMap<Edge, usize> = BTreeMap::new();
    for f in &sorted_faces {
        let v = f.vertices();
        for (a, b) in [(v[0], v[1]), (v[1], v[2]), (v[0], v[2])] {
            *edge_count.entry(edge(a, b)).or_insert(0) += 1;
        }
    }
    if let Some((e, _)) = edge_count.iter().find(|(_, &c)| c > 2) {
        return Err(Error::invalid_disk(
            DiskAxiom::EdgeInTooManyFaces,
            format!("edge {{{},{}}} lies in more than two faces", e.0, e.1),
        ));
    }

    let vertices: Vec<VertexId> = {
        let set: BTreeSet<VertexId> = sorted_faces
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        set.into_iter().collect()
    };
    let index: BTreeMap<VertexId, usize> =
        vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertices.len()];
    for e in edge_count.keys() {
        let a = index[&e.0];
        let b = index[&e.1];
        adj[a].insert(b);
        adj[b].insert(a);
    }

    if !connected(&adj, None) {
        return Err(Error::invalid_disk(
            DiskAxiom::NotConnected,
            "1-skeleton disconnected",
        ));
    }

    let euler = vertices.len() as i64 - edge_count.len() as i64 + sorted_faces.len() as i64;
    if euler != 1 {
        return Err(Error::invalid_disk(
            DiskAxiom::EulerCharacteristic,
            format!("V - E + F = {euler}, expected 1"),
        ));
    }

    // cut vertices make the diagram singular; classified, then rejected
    for skip in 0..vertices.len() {
        if vertices.len() > 1 && !connected(&adj, Some(skip)) {
            return Err(Error::invalid_disk(
                DiskAxiom::CutVertex,
                format!("singular disk: cut vertex {}", vertices[skip]),
            ));
        }
    }

    // boundary edges (one incident face) must close into a single simple cycle
    let boundary_edges: Vec<Edge> = edge_count
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(e, _)| *e)
        .collect();
    let derived = walk_boundary_cycle(&boundary_edges).ok_or_else(|| {
        Error::invalid_disk(
            DiskAxiom::BoundaryNotCycle,
            "edges on a single face do not form one simple cycle",
        )
    })?;
    let boundary_vertices: BTreeSet<VertexId> = derived.vertices().iter().copied().collect();

    // vertex link conditions
    let mut degrees: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        degrees.insert(*v, adj[i].len());
    }
    for v in &vertices {
        let link_ok = vertex_link_shape(*v, &sorted_faces, &adj, &index);
        let on_boundary = boundary_vertices.contains(v);
        match (on_boundary, link_ok) {
            (false, LinkShape::Cycle) | (true, LinkShape::Path) => {}
            (false, _) => {
                return Err(Error::invalid_disk(
                    DiskAxiom::InteriorLinkNotCycle,
                    format!("link of interior vertex {v} is not a single cycle"),
                ))
            }
            (true, _) => {
                return Err(Error::invalid_disk(
                    DiskAxiom::BoundaryLinkNotPath,
                    format!("link of boundary vertex {v} is not a single path"),
                ))
            }
        }
    }

    let stored_boundary = match boundary {
        Some(given) => {
            if !given.equivalent_to(&derived) {
                return Err(Error::invalid_disk(
                    DiskAxiom::BoundaryMismatch,
                    format!("given boundary {given} differs from derived {derived}"),
                ));
            }
            given.clone()
        }
        None => derived,
    };

    let interior: Vec<VertexId> = vertices
        .iter()
        .copied()
        .filter(|v| !boundary_vertices.contains(v))
        .collect();

    let disk = DiskDiagram {
        edges: edge_count.keys().copied().collect(),
        faces: sorted_faces,
        boundary: stored_boundary,
        interior,
        degrees,
    };
    // theorem-level cross-checks; both follow from the axioms verified above
    debug_assert_eq!(disk.gauss_bonnet_total(), 6);
    debug_assert_eq!(
        disk.area(),
        2 * disk.interior.len() + disk.boundary.len() - 2
    );
    Ok(disk)
}

enum LinkShape {
    Cycle,
    Path,
    Other,
}

/// Shape of the link of `v`: its vertices are the neighbors of `v`, its edges
/// the pairs closing a face with `v`.
fn vertex_link_shape(
    v: VertexId,
    faces: &[Simplex],
    adj: &[BTreeSet<usize>],
    index: &BTreeMap<VertexId, usize>,
) -> LinkShape {
    let vi = index[&v];
    let nbrs: Vec<usize> = adj[vi].iter().copied().collect();
    let mut link_deg: BTreeMap<usize, usize> = nbrs.iter().map(|&n| (n, 0)).collect();
    let mut link_adj: BTreeMap<usize, Vec<usize>> = nbrs.iter().map(|&n| (n, vec![])).collect();
    for f in faces {
        if !f.contains_vertex(v) {
            continue;
        }
        let others: Vec<usize> = f
            .vertices()
            .iter()
            .filter(|w| **w != v)
            .map(|w| index[w])
            .collect();
        *link_deg.get_mut(&others[0]).unwrap() += 1;
        *link_deg.get_mut(&others[1]).unwrap() += 1;
        link_adj.get_mut(&others[0]).unwrap().push(others[1]);
        link_adj.get_mut(&others[1]).unwrap().push(others[0]);
    }
    // connectivity of the link graph
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![nbrs[0]];
    while let Some(x) = stack.pop() {
        if seen.insert(x) {
            stack.extend(link_adj[&x].iter().copied());
        }
    }
    if seen.len() != nbrs.len() {
        return LinkShape::Other;
    }
    let ones = link_deg.values().filter(|&&d| d == 1).count();
    let twos = link_deg.values().filter(|&&d| d == 2).count();
    if ones == 0 && twos == nbrs.len() && nbrs.len() >= 3 {
        LinkShape::Cycle
    } else if ones == 2 && ones + twos == nbrs.len() {
        LinkShape::Path
    } else {
        LinkShape::Other
    }
}

/// DFS connectivity, optionally skipping one vertex index.
fn connected(adj: &[BTreeSet<usize>], skip: Option<usize>) -> bool {
    let n = adj.len();
    let live = |i: usize| skip != Some(i);
    let Some(start) = (0..n).find(|&i| live(i)) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if live(y) && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..n).filter(|&i| live(i)).all(|i| seen[i])
}

/// Assembles boundary edges into the unique simple cycle through all of
/// them, if one exists; starts at the least vertex, toward its lesser
/// neighbor.
fn walk_boundary_cycle(boundary_edges: &[Edge]) -> Option<CombinatorialLoop> {
    if boundary_edges.len() < 3 {
        return None;
    }
    let mut nbrs: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (a, b) in boundary_edges {
        nbrs.entry(*a).or_default().push(*b);
        nbrs.entry(*b).or_default().push(*a);
    }
    if nbrs.values().any(|l| l.len() != 2) {
        return None;
    }
    let start = *nbrs.keys().next().unwrap();
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *nbrs[&start].iter().min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = nbrs[&cur]
            .iter()
            .copied()
            .find(|&x| x != prev)
            .expect("degree 2");
        prev = cur;
        cur = next;
    }
    if cycle.len() != nbrs.len() {
        return None; // several disjoint cycles
    }
    CombinatorialLoop::new(cycle).ok()
}
