//! Empty triangle/square/pentagon detection, k-largeness and the simplicial
//! nonpositive-curvature (SNPC) check.
//!
//! An n-gon (n ≤ 5) is *empty* when no interior-vertex-free filling of it is
//! present in the complex: every triangulated disk with boundary length ≤ 5
//! and no interior vertex is a diagonal triangulation of the polygon, so the
//! test reduces to a finite check over Catalan-many candidate fillings.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::loops::CombinatorialLoop;

/// A triangulation of the abstract n-gon by noncrossing diagonals,
/// instantiated on the vertices of a concrete loop.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagonalTriangulation {
    pub ngon: CombinatorialLoop,
    /// Normalized (min, max) vertex pairs; `n - 3` of them.
    pub diagonals: Vec<(VertexId, VertexId)>,
    /// The `n - 2` triangles of the filling.
    pub triangles: Vec<Simplex>,
}

/// What is absent from one candidate filling of an empty n-gon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FillingDefect {
    pub absent_diagonals: Vec<(VertexId, VertexId)>,
    pub absent_faces: Vec<Simplex>,
}

/// Witness that a loop is an empty n-gon: for every candidate filling, the
/// concrete diagonals/faces missing from the host complex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmptyGonWitness {
    pub ngon: CombinatorialLoop,
    pub missing: Vec<FillingDefect>,
}

impl EmptyGonWitness {
    pub fn n(&self) -> usize {
        self.ngon.len()
    }
}

/// Triangulations of the polygon on positions `lo..=hi` where `(lo, hi)` is
/// already an edge; triangles as position triples.
fn triangulate_positions(lo: usize, hi: usize) -> Vec<Vec<[usize; 3]>> {
    if hi - lo < 2 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mid in (lo + 1)..hi {
        for left in triangulate_positions(lo, mid) {
            for right in triangulate_positions(mid, hi) {
                let mut tris = vec![[lo, mid, hi]];
                tris.extend(left.iter().copied());
                tris.extend(right.iter().copied());
                out.push(tris);
            }
        }
    }
    out
}

/// All interior-vertex-free fillings of a tight n-gon, n ∈ {3, 4, 5}:
/// 1, 2 and 5 candidates respectively (the Catalan numbers).
pub fn candidate_fillings(
    n: usize,
    ngon: &CombinatorialLoop,
) -> Result<Vec<DiagonalTriangulation>> {
    if !(3..=5).contains(&n) {
        return Err(Error::domain(
            "candidate fillings are defined for n ∈ {3,4,5}",
        ));
    }
    if ngon.len() != n {
        return Err(Error::domain(format!(
            "loop has length {}, expected {n}",
            ngon.len()
        )));
    }
    if !ngon.is_tight() {
        return Err(Error::domain("loop must be tight"));
    }
    let verts = ngon.vertices();
    let mut fillings = Vec::new();
    for tris in triangulate_positions(0, n - 1) {
        let mut triangles = Vec::with_capacity(n - 2);
        let mut diagonals = Vec::new();
        for [a, b, c] in &tris {
            triangles.push(Simplex::new(vec![verts[*a], verts[*b], verts[*c]])?);
            for (x, y) in [(*a, *b), (*b, *c), (*a, *c)] {
                let consecutive = y - x == 1 || (x == 0 && y == n - 1);
                if !consecutive {
                    let (u, v) = (verts[x].min(verts[y]), verts[x].max(verts[y]));
                    if !diagonals.contains(&(u, v)) {
                        diagonals.push((u, v));
                    }
                }
            }
        }
        diagonals.sort();
        triangles.sort();
        fillings.push(DiagonalTriangulation {
            ngon: ngon.clone(),
            diagonals,
            triangles,
        });
    }
    fillings.sort_by(|a, b| a.diagonals.cmp(&b.diagonals));
    Ok(fillings)
}

/// Tests whether the loop is an empty n-gon in `k`: empty iff every candidate
/// filling misses a diagonal edge or a triangle face. Returns the witness on
/// emptiness, `None` when some filling is fully present.
pub fn empty_ngon_witness(
    k: &SimplicialComplex,
    ngon: &CombinatorialLoop,
) -> Result<Option<EmptyGonWitness>> {
    let n = ngon.len();
    if !(3..=5).contains(&n) {
        return Err(Error::domain("empty n-gon test is defined for n ∈ {3,4,5}"));
    }
    ngon.check_in(k)?;
    let mut missing = Vec::new();
    for filling in candidate_fillings(n, ngon)? {
        let absent_diagonals: Vec<(VertexId, VertexId)> = filling
            .diagonals
            .iter()
            .copied()
            .filter(|(a, b)| !k.contains_simplex(&Simplex::from_sorted_unchecked(vec![*a, *b])))
            .collect();
        let absent_faces: Vec<Simplex> = filling
            .triangles
            .iter()
            .filter(|t| !k.contains_simplex(t))
            .cloned()
            .collect();
        if absent_diagonals.is_empty() && absent_faces.is_empty() {
            return Ok(None);
        }
        missing.push(FillingDefect {
            absent_diagonals,
            absent_faces,
        });
    }
    Ok(Some(EmptyGonWitness {
        ngon: ngon.clone(),
        missing,
    }))
}

pub fn is_empty_ngon(k: &SimplicialComplex, ngon: &CombinatorialLoop) -> Result<bool> {
    Ok(empty_ngon_witness(k, ngon)?.is_some())
}

/// Scans all tight n-gons with `3 ≤ n < bound` (bound ∈ {4, 5, 6}) and
/// returns every empty one, one witness per loop equivalence class, sorted by
/// (length, canonical vertex sequence).
pub fn find_empty_ngons(k: &SimplicialComplex, bound: usize) -> Result<Vec<EmptyGonWitness>> {
    if !(4..=6).contains(&bound) {
        return Err(Error::domain(
            "empty n-gon scan is defined for bound ∈ {4,5,6}",
        ));
    }
    let cycles = k.enumerate_tight_cycles(bound - 1)?;
    let witnesses: Vec<Option<EmptyGonWitness>> = cycles
        .par_iter()
        .map(|c| empty_ngon_witness(k, c).expect("enumerated cycles lie in the complex"))
        .collect();
    Ok(witnesses.into_iter().flatten().collect())
}

/// Why a complex fails to be k-large.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "reason")]
pub enum LargenessFailure {
    /// A minimal pairwise-connected vertex set spanning no simplex.
    NotFlag { clique: Vec<VertexId> },
    /// An empty n-gon with n < k.
    EmptyNgon(EmptyGonWitness),
}

/// k-largeness (k ∈ {4, 5, 6}): flag plus no empty n-gons for n < k.
/// Returns the first failure: a non-spanning clique, else the least empty n-gon.
pub fn largeness_violation(
    k: &SimplicialComplex,
    bound: usize,
) -> Result<Option<LargenessFailure>> {
    if bound < 4 {
        return Err(Error::domain("k-largeness needs k ≥ 4"));
    }
    if bound > 6 {
        return Err(Error::unsupported(
            "empty n-gon detection beyond pentagons is not supported (k ≤ 6)",
        ));
    }
    if let Some(clique) = k.flag_violation() {
        return Ok(Some(LargenessFailure::NotFlag { clique }));
    }
    Ok(find_empty_ngons(k, bound)?
        .into_iter()
        .next()
        .map(LargenessFailure::EmptyNgon))
}

pub fn is_k_large(k: &SimplicialComplex, bound: usize) -> Result<bool> {
    Ok(largeness_violation(k, bound)?.is_none())
}

/// A simplex whose combinatorial link fails to be 6-large.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnpcWitness {
    pub simplex: Simplex,
    pub failure: LargenessFailure,
}

/// Outcome of the SNPC check. The link convention for the empty simplex is
/// ambiguous, so the complex itself (σ = ∅) is evaluated separately from the
/// links of nonempty simplices and both verdicts are reported; the headline
/// [`SnpcReport::passes`] includes the complex itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnpcReport {
    /// 6-largeness failure of the complex itself, if any.
    pub whole_complex: Option<LargenessFailure>,
    /// First nonempty simplex (scanning by descending dimension, then
    /// lexicographically) whose combinatorial link is not 6-large.
    pub proper: Option<SnpcWitness>,
}

impl SnpcReport {
    pub fn passes(&self) -> bool {
        self.whole_complex.is_none() && self.proper.is_none()
    }

    pub fn passes_proper_links(&self) -> bool {
        self.proper.is_none()
    }
}

/// Checks 6-largeness of the combinatorial link of every simplex, including
/// the complex itself as the link of the empty simplex.
pub fn snpc_report(k: &SimplicialComplex) -> Result<SnpcReport> {
    let whole_complex = largeness_violation(k, 6)?;
    let mut simplices = k.all_simplices();
    simplices.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let failures: Vec<Option<SnpcWitness>> = simplices
        .par_iter()
        .map(|s| {
            let link = k.link(s).expect("enumerated simplices are in the complex");
            largeness_violation(&link, 6)
                .expect("links of supported complexes stay supported")
                .map(|failure| SnpcWitness {
                    simplex: s.clone(),
                    failure,
                })
        })
        .collect();
    Ok(SnpcReport {
        whole_complex,
        proper: failures.into_iter().flatten().next(),
    })
}

pub fn is_snpc(k: &SimplicialComplex) -> Result<bool> {
    Ok(snpc_report(k)?.passes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn filling_counts_are_catalan() {
        let tri = CombinatorialLoop::from_ids([0, 1, 2]).unwrap();
        assert_eq!(candidate_fillings(3, &tri).unwrap().len(), 1);
        let sq = CombinatorialLoop::from_ids([0, 1, 2, 3]).unwrap();
        let two = candidate_fillings(4, &sq).unwrap();
        assert_eq!(two.len(), 2);
        let diagonal_sets: Vec<_> = two.iter().map(|f| f.diagonals.clone()).collect();
        assert!(diagonal_sets.contains(&vec![(VertexId(0), VertexId(2))]));
        assert!(diagonal_sets.contains(&vec![(VertexId(1), VertexId(3))]));
        let pent = CombinatorialLoop::from_ids([0, 1, 2, 3, 4]).unwrap();
        let five = candidate_fillings(5, &pent).unwrap();
        assert_eq!(five.len(), 5);
        for f in &five {
            assert_eq!(f.diagonals.len(), 2);
            assert_eq!(f.triangles.len(), 3);
        }
        assert!(candidate_fillings(4, &tri).is_err());
        assert!(candidate_fillings(6, &pent).is_err());
    }

    #[test]
    fn hollow_triangle_is_empty() {
        let hollow = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let tri = CombinatorialLoop::from_ids([0, 1, 2]).unwrap();
        let witness = empty_ngon_witness(&hollow, &tri).unwrap().unwrap();
        assert_eq!(witness.missing.len(), 1);
        assert_eq!(witness.missing[0].absent_faces.len(), 1);
    }

    #[test]
    fn octahedron_antipodal_square_is_empty() {
        let oct = generators::octahedron();
        let sq = CombinatorialLoop::from_ids([0, 2, 1, 3]).unwrap();
        let witness = empty_ngon_witness(&oct, &sq).unwrap().unwrap();
        // both fillings fail on their diagonal
        assert_eq!(witness.missing.len(), 2);
        for defect in &witness.missing {
            assert_eq!(defect.absent_diagonals.len(), 1);
        }
        // a square with one diagonal present is not empty
        let filled = CombinatorialLoop::from_ids([0, 2, 1, 4]).unwrap();
        assert!(!is_empty_ngon(&oct, &filled).unwrap());
    }

    #[test]
    fn wheel_boundary_pentagon_is_empty() {
        let wheel = generators::wheel(5).unwrap();
        let pent = CombinatorialLoop::from_ids([1, 2, 3, 4, 5]).unwrap();
        assert!(is_empty_ngon(&wheel, &pent).unwrap());
    }

    #[test]
    fn loop_not_in_complex_errors() {
        let oct = generators::octahedron();
        let bad = CombinatorialLoop::from_ids([0, 1, 2]).unwrap(); // (0,1) not an edge
        assert!(empty_ngon_witness(&oct, &bad).is_err());
    }

    #[test]
    fn empty_gon_scan_on_cycles() {
        let c6 = generators::cycle(6).unwrap();
        assert!(find_empty_ngons(&c6, 6).unwrap().is_empty());
        let c5 = generators::cycle(5).unwrap();
        let found = find_empty_ngons(&c5, 6).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].ngon.ids(), vec![0, 1, 2, 3, 4]);
        assert!(find_empty_ngons(&c5, 3).is_err());
        assert!(find_empty_ngons(&c5, 7).is_err());
    }

    #[test]
    fn counterexample_scan_reports_core_pentagon() {
        let k = generators::counterexample(4).unwrap();
        let found = find_empty_ngons(&k, 6).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].ngon.ids(), vec![3, 4, 5, 6, 7]);
    }

    #[test]
    fn largeness_fixtures() {
        assert!(is_k_large(&generators::cycle(6).unwrap(), 6).unwrap());
        assert!(!is_k_large(&generators::cycle(5).unwrap(), 6).unwrap());
        let oct = generators::octahedron();
        assert!(is_k_large(&oct, 4).unwrap());
        assert!(!is_k_large(&oct, 6).unwrap());
        match largeness_violation(&oct, 6).unwrap().unwrap() {
            LargenessFailure::EmptyNgon(w) => assert_eq!(w.ngon.ids(), vec![0, 2, 1, 3]),
            other => panic!("expected empty square, got {other:?}"),
        }
        let hollow = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        match largeness_violation(&hollow, 6).unwrap().unwrap() {
            LargenessFailure::NotFlag { clique } => {
                assert_eq!(clique, vec![VertexId(0), VertexId(1), VertexId(2)])
            }
            other => panic!("expected flag failure, got {other:?}"),
        }
        assert!(largeness_violation(&oct, 3).is_err());
    }

    #[test]
    fn snpc_fixtures() {
        assert!(is_snpc(&generators::simplex_complex(3)).unwrap());
        assert!(is_snpc(&generators::cycle(6).unwrap()).unwrap());
        let c5 = generators::cycle(5).unwrap();
        let report = snpc_report(&c5).unwrap();
        assert!(!report.passes());
        // the only failure is the complex itself
        assert!(report.whole_complex.is_some());
        assert!(report.passes_proper_links());
    }

    #[test]
    fn snpc_counterexample_witness_is_sigma() {
        let k = generators::counterexample(4).unwrap();
        let report = snpc_report(&k).unwrap();
        assert!(!report.passes());
        let witness = report.proper.unwrap();
        assert_eq!(
            witness.simplex,
            generators::counterexample_sigma(4).unwrap()
        );
        match witness.failure {
            LargenessFailure::EmptyNgon(w) => {
                assert_eq!(w.ngon.ids(), vec![3, 4, 5, 6, 7])
            }
            other => panic!("expected pentagon witness, got {other:?}"),
        }
    }
}
