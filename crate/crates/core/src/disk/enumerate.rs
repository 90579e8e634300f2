//! Exhaustive enumeration of triangulated-disk types with a given boundary
//! length and interior vertex count, plus a seeded random-disk generator.
//!
//! Generation peels the unique triangle on the first boundary edge: its apex
//! is either another boundary vertex (splitting the disk in two) or a fresh
//! interior vertex (lengthening the boundary and spending one unit of interior
//! budget). The recursion covers every plane triangulation; candidates that
//! degenerate as simplicial complexes (a chord coinciding with an existing
//! edge) are filtered by full disk validation afterwards.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::complex::{Simplex, VertexId};
use crate::error::{Error, Result};
use crate::loops::CombinatorialLoop;

use super::{validate_disk, DiskDiagram};

fn tri(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// All peel traces for a disk with the given boundary cycle, exactly `k`
/// interior vertices, fresh interior ids allocated from `next_fresh`.
fn peel(boundary: &[usize], k: usize, next_fresh: usize) -> Vec<Vec<[usize; 3]>> {
    let b = boundary.len();
    if b == 2 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    debug_assert!(b >= 3);
    let mut out = Vec::new();
    let (u0, u1) = (boundary[0], boundary[1]);
    for j in 2..b {
        let w = boundary[j];
        let face = tri(u0, u1, w);
        let left_boundary = &boundary[1..=j];
        let right_boundary: Vec<usize> = boundary[j..]
            .iter()
            .chain(std::iter::once(&boundary[0]))
            .copied()
            .collect();
        for k_left in 0..=k {
            let k_right = k - k_left;
            let lefts = peel(left_boundary, k_left, next_fresh);
            if lefts.is_empty() {
                continue;
            }
            let rights = peel(&right_boundary, k_right, next_fresh + k_left);
            for l in &lefts {
                for r in &rights {
                    let mut faces = Vec::with_capacity(1 + l.len() + r.len());
                    faces.push(face);
                    faces.extend_from_slice(l);
                    faces.extend_from_slice(r);
                    out.push(faces);
                }
            }
        }
    }
    if k >= 1 {
        let w = next_fresh;
        let face = tri(u0, u1, w);
        let mut new_boundary = Vec::with_capacity(b + 1);
        new_boundary.push(u0);
        new_boundary.push(w);
        new_boundary.extend_from_slice(&boundary[1..]);
        for rest in peel(&new_boundary, k - 1, next_fresh + 1) {
            let mut faces = Vec::with_capacity(1 + rest.len());
            faces.push(face);
            faces.extend_from_slice(&rest);
            out.push(faces);
        }
    }
    out
}

/// Relabels interior vertices to `b..b+i-1` canonically: repeatedly give the
/// next label to the interior vertex whose set of already-labeled neighbor
/// labels is lexicographically least, branching on ties and keeping the
/// least resulting face list.
fn canonical_interior_labeling(faces: &[[usize; 3]], boundary_len: usize) -> Vec<[usize; 3]> {
    let interior: BTreeSet<usize> = faces
        .iter()
        .flatten()
        .copied()
        .filter(|&v| v >= boundary_len)
        .collect();
    if interior.is_empty() {
        let mut out: Vec<[usize; 3]> = faces.to_vec();
        out.sort_unstable();
        return out;
    }
    let mut adjacency: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for f in faces {
        for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
            adjacency.entry(a).or_default().insert(b);
            adjacency.entry(b).or_default().insert(a);
        }
    }
    let mut best: Option<Vec<[usize; 3]>> = None;
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    assign_labels(
        faces,
        boundary_len,
        &adjacency,
        &interior,
        &mut relabel,
        &mut best,
    );
    best.expect("at least one labeling")
}

fn assign_labels(
    faces: &[[usize; 3]],
    boundary_len: usize,
    adjacency: &BTreeMap<usize, BTreeSet<usize>>,
    interior: &BTreeSet<usize>,
    relabel: &mut BTreeMap<usize, usize>,
    best: &mut Option<Vec<[usize; 3]>>,
) {
    let unassigned: Vec<usize> = interior
        .iter()
        .copied()
        .filter(|v| !relabel.contains_key(v))
        .collect();
    if unassigned.is_empty() {
        let mut out: Vec<[usize; 3]> = faces
            .iter()
            .map(|f| {
                let map = |v: usize| if v < boundary_len { v } else { relabel[&v] };
                tri(map(f[0]), map(f[1]), map(f[2]))
            })
            .collect();
        out.sort_unstable();
        if best.as_ref().is_none_or(|b| out < *b) {
            *best = Some(out);
        }
        return;
    }
    let keys: Vec<(Vec<usize>, usize)> = unassigned
        .iter()
        .map(|&v| {
            let mut labels: Vec<usize> = adjacency[&v]
                .iter()
                .filter_map(|&n| {
                    if n < boundary_len {
                        Some(n)
                    } else {
                        relabel.get(&n).copied()
                    }
                })
                .collect();
            labels.sort_unstable();
            (labels, v)
        })
        .collect();
    let min_key = keys.iter().map(|(k, _)| k.clone()).min().unwrap();
    let next_label = boundary_len + relabel.len();
    for (key, v) in keys {
        if key == min_key {
            relabel.insert(v, next_label);
            assign_labels(faces, boundary_len, adjacency, interior, relabel, best);
            relabel.remove(&v);
        }
    }
}

fn standard_boundary(boundary_len: usize) -> CombinatorialLoop {
    CombinatorialLoop::from_ids(0..boundary_len as u32).expect("boundary_len ≥ 3")
}

fn to_simplices(faces: &[[usize; 3]]) -> Vec<Simplex> {
    faces
        .iter()
        .map(|f| {
            Simplex::from_sorted_unchecked(vec![
                VertexId(f[0] as u32),
                VertexId(f[1] as u32),
                VertexId(f[2] as u32),
            ])
        })
        .collect()
}

/// All triangulated-disk types with boundary the standard cycle
/// `0, 1, …, boundary_len−1` and exactly `interior` interior vertices,
/// labeled `boundary_len…` in canonical order. Types are labeled
/// triangulations of the fixed boundary polygon; rotating or reflecting the
/// boundary permutes the returned list (see `enumerate_disk_types` for the
/// union over interior counts).
pub fn disk_types_with_interior(boundary_len: usize, interior: usize) -> Result<Vec<DiskDiagram>> {
    if boundary_len < 3 {
        return Err(Error::domain("disk boundary length must be at least 3"));
    }
    let boundary: Vec<usize> = (0..boundary_len).collect();
    let expected = standard_boundary(boundary_len);
    let mut seen: BTreeSet<Vec<[usize; 3]>> = BTreeSet::new();
    let mut out = Vec::new();
    for candidate in peel(&boundary, interior, boundary_len) {
        // cheap pre-filter: duplicate faces can only fail validation
        let mut sorted = candidate.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let simplices = to_simplices(&sorted);
        if validate_disk(&simplices, Some(&expected)).is_err() {
            continue;
        }
        let canonical = canonical_interior_labeling(&sorted, boundary_len);
        if seen.insert(canonical.clone()) {
            let disk = validate_disk(&to_simplices(&canonical), Some(&expected))
                .expect("relabeling preserves validity");
            out.push(disk);
        }
    }
    out.sort_by(|a, b| a.faces().cmp(b.faces()));
    Ok(out)
}

/// All disk types with the given boundary length and at most `max_interior`
/// interior vertices, canonically labeled, smaller interior counts first.
pub fn enumerate_disk_types(boundary_len: usize, max_interior: usize) -> Result<Vec<DiskDiagram>> {
    let mut out = Vec::new();
    for i in 0..=max_interior {
        out.extend(disk_types_with_interior(boundary_len, i)?);
    }
    Ok(out)
}

/// Samples a uniform-ish random valid disk with the given boundary length
/// and exactly `interior` interior vertices; retries on traces that
/// degenerate. Intended as a test-fixture generator.
pub fn random_disk<R: Rng>(rng: &mut R, boundary_len: usize, interior: usize) -> DiskDiagram {
    assert!(boundary_len >= 3, "boundary length must be at least 3");
    let boundary: Vec<usize> = (0..boundary_len).collect();
    let expected = standard_boundary(boundary_len);
    for _ in 0..10_000 {
        let Some(faces) = sample_peel(rng, &boundary, interior, boundary_len) else {
            continue;
        };
        let simplices = to_simplices(&faces);
        if let Ok(disk) = validate_disk(&simplices, Some(&expected)) {
            return disk;
        }
    }
    panic!("no valid disk sampled for boundary {boundary_len}, interior {interior}");
}

fn sample_peel<R: Rng>(
    rng: &mut R,
    boundary: &[usize],
    k: usize,
    next_fresh: usize,
) -> Option<Vec<[usize; 3]>> {
    let b = boundary.len();
    if b == 2 {
        return if k == 0 { Some(vec![]) } else { None };
    }
    // options: (apex position, interior split) plus the fresh-vertex move
    let split_options = (b - 2) * (k + 1);
    let fresh_options = if k >= 1 { 1 } else { 0 };
    let pick = rng.gen_range(0..split_options + fresh_options);
    let (u0, u1) = (boundary[0], boundary[1]);
    if pick < split_options {
        let j = 2 + pick / (k + 1);
        let k_left = pick % (k + 1);
        let k_right = k - k_left;
        let w = boundary[j];
        let right_boundary: Vec<usize> = boundary[j..]
            .iter()
            .chain(std::iter::once(&boundary[0]))
            .copied()
            .collect();
        let left = sample_peel(rng, &boundary[1..=j], k_left, next_fresh)?;
        let right = sample_peel(rng, &right_boundary, k_right, next_fresh + k_left)?;
        let mut faces = vec![tri(u0, u1, w)];
        faces.extend(left);
        faces.extend(right);
        Some(faces)
    } else {
        let w = next_fresh;
        let mut new_boundary = Vec::with_capacity(b + 1);
        new_boundary.push(u0);
        new_boundary.push(w);
        new_boundary.extend_from_slice(&boundary[1..]);
        let rest = sample_peel(rng, &new_boundary, k - 1, next_fresh + 1)?;
        let mut faces = vec![tri(u0, u1, w)];
        faces.extend(rest);
        Some(faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn triangle_types() {
        let types = disk_types_with_interior(3, 0).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].area(), 1);
        // the unique type with one interior vertex is the 3-wheel
        let wheel3 = disk_types_with_interior(3, 1).unwrap();
        assert_eq!(wheel3.len(), 1);
        assert_eq!(wheel3[0].area(), 3);
        assert_eq!(wheel3[0].interior_vertices(), &[VertexId(3)]);
    }

    #[test]
    fn interior_free_counts_are_catalan() {
        // Catalan numbers C_{n-2}: triangulations of the labeled n-gon
        assert_eq!(disk_types_with_interior(4, 0).unwrap().len(), 2);
        assert_eq!(disk_types_with_interior(5, 0).unwrap().len(), 5);
        assert_eq!(disk_types_with_interior(6, 0).unwrap().len(), 14);
        assert_eq!(disk_types_with_interior(7, 0).unwrap().len(), 42);
    }

    #[test]
    fn one_interior_vertex_counts_match_case_analysis() {
        // hand-derived by interior-degree case analysis: the interior vertex
        // of a (b,1) type has degree d ∈ 3..=b, its link is a cycle of d
        // boundary vertices, and the gaps between chosen link vertices carry
        // independent fan triangulations. For b = 5: 1 wheel (d=5), 5 types
        // with d=4, and 15 with d=3 (ten 3-subsets of the pentagon, doubled
        // on the five with a two-vertex gap).
        assert_eq!(disk_types_with_interior(3, 1).unwrap().len(), 1);
        assert_eq!(disk_types_with_interior(4, 1).unwrap().len(), 5);
        assert_eq!(disk_types_with_interior(5, 1).unwrap().len(), 21);
        // two interior vertices over a triangle boundary must be adjacent
        // (else a boundary edge would lie in two faces), leaving exactly the
        // three split wheels
        assert_eq!(disk_types_with_interior(3, 2).unwrap().len(), 3);
    }

    #[test]
    fn square_with_one_interior_vertex() {
        // 4-wheel plus the four one-chord fans
        let types = disk_types_with_interior(4, 1).unwrap();
        assert_eq!(types.len(), 5);
        assert!(types.iter().all(|d| d.area() == 4));
        let wheels = types
            .iter()
            .filter(|d| d.degree(VertexId(4)).unwrap() == 4)
            .count();
        assert_eq!(wheels, 1);
    }

    #[test]
    fn pentagon_with_one_interior_vertex_includes_the_wheel() {
        let types = disk_types_with_interior(5, 1).unwrap();
        assert!(types.iter().all(|d| d.area() == 5));
        let wheel: Vec<_> = types
            .iter()
            .filter(|d| d.degree(VertexId(5)).map(|d| d == 5).unwrap_or(false))
            .collect();
        assert_eq!(wheel.len(), 1);
        let mut expected: Vec<Simplex> = (0..5u32)
            .map(|i| Simplex::from_ids([i, (i + 1) % 5, 5]).unwrap())
            .collect();
        expected.sort();
        assert_eq!(wheel[0].faces(), expected.as_slice());
    }

    #[test]
    fn enumerate_merges_interior_counts() {
        let all = enumerate_disk_types(5, 1).unwrap();
        assert_eq!(
            all.len(),
            disk_types_with_interior(5, 0).unwrap().len()
                + disk_types_with_interior(5, 1).unwrap().len()
        );
        assert!(enumerate_disk_types(2, 0).is_err());
    }

    #[test]
    fn every_enumerated_disk_satisfies_gauss_bonnet() {
        for b in 3..=6 {
            for i in 0..=2 {
                for disk in disk_types_with_interior(b, i).unwrap() {
                    assert_eq!(disk.gauss_bonnet_total(), 6);
                    assert_eq!(disk.area(), 2 * i + b - 2);
                }
            }
        }
    }

    #[test]
    fn random_disks_are_valid_and_deterministic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let b = rng.gen_range(3..=8);
            let i = rng.gen_range(0..=3);
            let disk = random_disk(&mut rng, b, i);
            assert_eq!(disk.boundary().len(), b);
            assert_eq!(disk.interior_vertices().len(), i);
            assert_eq!(disk.gauss_bonnet_total(), 6);
        }
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        assert_eq!(random_disk(&mut r1, 6, 2), random_disk(&mut r2, 6, 2));
    }
}
