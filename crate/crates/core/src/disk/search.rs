//! Minimal spanning-disk search: smallest-area triangulated disks mapping
//! simplicially into a complex with boundary a given tight loop.
//!
//! Areas are scanned in increasing order; boundary length `b` and interior
//! count `i` force area `2i + b - 2`, so half the levels are skipped by
//! parity. Disk types are labeled triangulations of the standard boundary
//! polygon (closed under boundary rotation/reflection), so mapping boundary
//! vertex `i` to loop vertex `i` and backtracking over interior assignments
//! covers every spanning disk exactly once: a tight loop admits no nontrivial
//! symmetry of its own presentation, and a disk automorphism fixing the
//! boundary pointwise is the identity.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::loops::CombinatorialLoop;

use super::enumerate::disk_types_with_interior;
use super::DiskDiagram;

/// Vertex assignment of a disk into a target complex. Injective on every
/// face (no collapsed triangles), not necessarily injective globally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialMap {
    assignments: BTreeMap<VertexId, VertexId>,
}

impl SimplicialMap {
    pub fn target_of(&self, v: VertexId) -> Option<VertexId> {
        self.assignments.get(&v).copied()
    }

    pub fn assignments(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.assignments
    }

    /// Full audit: every disk face maps to a face of `k` without collapsing,
    /// and the disk boundary maps onto `target_loop` in traversal order.
    pub fn verify(
        &self,
        disk: &DiskDiagram,
        k: &SimplicialComplex,
        target_loop: &CombinatorialLoop,
    ) -> Result<()> {
        for (i, v) in disk.boundary().vertices().iter().enumerate() {
            if self.target_of(*v) != Some(target_loop.vertices()[i]) {
                return Err(Error::domain(format!(
                    "boundary vertex {v} does not map onto the loop in order"
                )));
            }
        }
        for face in disk.faces() {
            let images: Vec<VertexId> = face
                .vertices()
                .iter()
                .map(|v| {
                    self.target_of(*v)
                        .ok_or_else(|| Error::domain(format!("vertex {v} unassigned")))
                })
                .collect::<Result<_>>()?;
            let image = Simplex::new(images)
                .map_err(|_| Error::domain(format!("face {face} collapses under the map")))?;
            if !k.contains_simplex(&image) {
                return Err(Error::domain(format!(
                    "image {image} of face {face} is not a face of the complex"
                )));
            }
        }
        Ok(())
    }
}

/// A disk together with a simplicial map spanning the searched loop.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningDisk {
    pub disk: DiskDiagram,
    pub map: SimplicialMap,
}

/// Search outcome. `NotFound.truncated` distinguishes "the interior-vertex
/// cap cut the area scan short" from "every area within bounds was searched
/// exhaustively and no spanning disk exists there".
#[derive(Debug, Clone, PartialEq)]
pub enum DiskSearchOutcome {
    Found {
        area: usize,
        solutions: Vec<SpanningDisk>,
    },
    NotFound {
        searched_areas: Vec<usize>,
        truncated: bool,
    },
}

fn check_loop(k: &SimplicialComplex, target: &CombinatorialLoop) -> Result<()> {
    if !target.is_tight() {
        return Err(Error::domain("spanning-disk search needs a tight loop"));
    }
    target.check_in(k)
}

/// All spanning disks of exactly the given area, if that area is admissible
/// for the loop length (area ≥ len − 2 and of matching parity).
pub fn spanning_disks_at_area(
    k: &SimplicialComplex,
    target: &CombinatorialLoop,
    area: usize,
) -> Result<Vec<SpanningDisk>> {
    check_loop(k, target)?;
    let b = target.len();
    if area < b - 2 || !(area - (b - 2)).is_multiple_of(2) {
        return Ok(vec![]);
    }
    let interior = (area - (b - 2)) / 2;
    let mut solutions = Vec::new();
    for disk in disk_types_with_interior(b, interior)? {
        for map in extend_maps(k, target, &disk) {
            solutions.push(SpanningDisk {
                disk: disk.clone(),
                map,
            });
        }
    }
    solutions.sort_by(|a, b| {
        a.disk
            .faces()
            .cmp(b.disk.faces())
            .then_with(|| a.map.assignments.cmp(&b.map.assignments))
    });
    Ok(solutions)
}

/// Finds all spanning disks of minimal combinatorial area for `target`,
/// scanning areas upward within the given bounds.
pub fn find_minimal_spanning_disks(
    k: &SimplicialComplex,
    target: &CombinatorialLoop,
    max_interior: usize,
    max_area: usize,
) -> Result<DiskSearchOutcome> {
    check_loop(k, target)?;
    let b = target.len();
    // a 3-loop bounding a face is its own minimal disk
    if b == 3 {
        let face = Simplex::new(target.vertices().to_vec())?;
        if k.contains_simplex(&face) && max_area >= 1 {
            let solutions = spanning_disks_at_area(k, target, 1)?;
            debug_assert!(!solutions.is_empty());
            return Ok(DiskSearchOutcome::Found { area: 1, solutions });
        }
    }
    let mut searched_areas = Vec::new();
    let mut truncated = false;
    let mut area = b - 2;
    while area <= max_area {
        let interior = (area - (b - 2)) / 2;
        if interior > max_interior {
            truncated = true;
            break;
        }
        let solutions = spanning_disks_at_area(k, target, area)?;
        searched_areas.push(area);
        if !solutions.is_empty() {
            return Ok(DiskSearchOutcome::Found { area, solutions });
        }
        area += 2;
    }
    Ok(DiskSearchOutcome::NotFound {
        searched_areas,
        truncated,
    })
}

/// All vertex assignments extending the identification of the disk boundary
/// with the loop, face-injectively mapping faces to faces.
fn extend_maps(
    k: &SimplicialComplex,
    target: &CombinatorialLoop,
    disk: &DiskDiagram,
) -> Vec<SimplicialMap> {
    let mut assignment: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (i, v) in disk.boundary().vertices().iter().enumerate() {
        assignment.insert(*v, target.vertices()[i]);
    }
    // boundary-to-boundary constraints must hold before any interior choice
    for (a, b) in disk.edges() {
        if let (Some(&ia), Some(&ib)) = (assignment.get(a), assignment.get(b)) {
            if ia == ib || !edge_in(k, ia, ib) {
                return vec![];
            }
        }
    }
    for face in disk.faces() {
        let images: Vec<Option<&VertexId>> =
            face.vertices().iter().map(|v| assignment.get(v)).collect();
        if images.iter().all(|i| i.is_some()) {
            let simplex = Simplex::new(images.into_iter().map(|i| *i.unwrap()).collect());
            match simplex {
                Ok(s) if k.contains_simplex(&s) => {}
                _ => return vec![],
            }
        }
    }
    let interior: Vec<VertexId> = disk.interior_vertices().to_vec();
    let mut out = Vec::new();
    backtrack(k, disk, &interior, 0, &mut assignment, &mut out);
    out
}

fn edge_in(k: &SimplicialComplex, a: VertexId, b: VertexId) -> bool {
    k.contains_simplex(&Simplex::from_sorted_unchecked(vec![a.min(b), a.max(b)]))
}

fn backtrack(
    k: &SimplicialComplex,
    disk: &DiskDiagram,
    interior: &[VertexId],
    next: usize,
    assignment: &mut BTreeMap<VertexId, VertexId>,
    out: &mut Vec<SimplicialMap>,
) {
    if next == interior.len() {
        out.push(SimplicialMap {
            assignments: assignment.clone(),
        });
        return;
    }
    let v = interior[next];
    'candidates: for &cand in k.vertex_set() {
        // disk edges at v with an assigned other endpoint must map to edges
        for (a, b) in disk.edges() {
            let other = if *a == v {
                *b
            } else if *b == v {
                *a
            } else {
                continue;
            };
            if let Some(&img) = assignment.get(&other) {
                if img == cand || !edge_in(k, img, cand) {
                    continue 'candidates;
                }
            }
        }
        // fully-assigned faces at v must map to faces
        for face in disk.faces() {
            if !face.contains_vertex(v) {
                continue;
            }
            let images: Vec<VertexId> = face
                .vertices()
                .iter()
                .map(|w| {
                    if *w == v {
                        Some(cand)
                    } else {
                        assignment.get(w).copied()
                    }
                })
                .collect::<Option<_>>()
                .unwrap_or_default();
            if images.len() == 3 {
                match Simplex::new(images) {
                    Ok(s) if k.contains_simplex(&s) => {}
                    _ => continue 'candidates,
                }
            }
        }
        assignment.insert(v, cand);
        backtrack(k, disk, interior, next + 1, assignment, out);
        assignment.remove(&v);
    }
}
