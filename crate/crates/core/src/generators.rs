//! Constructors for the named complexes used throughout the tool: cycles,
//! simplices, joins, wheels, the cyclic counterexample family, tetrahedron
//! fans and seeded random flag complexes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::loops::CombinatorialLoop;

/// The cycle complex `C_n`: vertices `0..n-1`, edges between consecutive ids.
pub fn cycle(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::domain("cycle needs n ≥ 3"));
    }
    let facets: Vec<Vec<u32>> = (0..n as u32).map(|i| vec![i, (i + 1) % n as u32]).collect();
    SimplicialComplex::from_facets(&facets)
}

/// A single `d`-simplex on vertices `0..=d`.
pub fn simplex_complex(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(&[(0..=d as u32).collect()]).expect("distinct ids")
}

/// Boundary of the octahedron: the standard flag 2-sphere with three
/// antipodal vertex pairs (0,1), (2,3), (4,5).
pub fn octahedron() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[
        vec![0, 2, 4],
        vec![0, 2, 5],
        vec![0, 3, 4],
        vec![0, 3, 5],
        vec![1, 2, 4],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 3, 5],
    ])
    .expect("fixed facets")
}

/// Cone over `C_n`: apex 0, cycle on `1..=n`.
pub fn wheel(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::domain("wheel needs n ≥ 3"));
    }
    let facets: Vec<Vec<u32>> = (0..n as u32)
        .map(|i| vec![0, 1 + i, 1 + (i + 1) % n as u32])
        .collect();
    SimplicialComplex::from_facets(&facets)
}

/// Join of a `d`-simplex (vertices `0..=d`) with `C_n` (vertices
/// `d+1..=d+n`); the simplex factor always takes the low ids.
pub fn join_simplex_cycle(d: usize, n: usize) -> Result<SimplicialComplex> {
    let offset = d as u32 + 1;
    let shifted_cycle = {
        if n < 3 {
            return Err(Error::domain("cycle factor needs n ≥ 3"));
        }
        let facets: Vec<Vec<u32>> = (0..n as u32)
            .map(|i| vec![offset + i, offset + (i + 1) % n as u32])
            .collect();
        SimplicialComplex::from_facets(&facets)?
    };
    simplex_complex(d).join(&shifted_cycle)
}

/// The cyclic join family: an `(n-2)`-simplex σ on vertices `0..=n-2`
/// joined with a 5-cycle on vertices `n-1..=n+3`, giving five `n`-simplices
/// arranged cyclically around σ. The family of interest starts at `n = 4`;
/// `n = 3` is the control case that fails the metric link test.
pub fn counterexample(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::domain("counterexample needs n ≥ 3"));
    }
    join_simplex_cycle(n - 2, 5)
}

/// The σ factor of [`counterexample`]: the simplex on vertices `0..=n-2`.
pub fn counterexample_sigma(n: usize) -> Result<Simplex> {
    if n < 3 {
        return Err(Error::domain("counterexample needs n ≥ 3"));
    }
    Simplex::from_ids(0..=(n as u32 - 2))
}

/// The 5-cycle loop of [`counterexample`] on vertices `n-1..=n+3`.
pub fn counterexample_loop(n: usize) -> Result<CombinatorialLoop> {
    if n < 3 {
        return Err(Error::domain("counterexample needs n ≥ 3"));
    }
    CombinatorialLoop::from_ids((n as u32 - 1)..=(n as u32 + 3))
}

/// The wheel spanned inside [`counterexample`] through one vertex of σ: the
/// induced full subcomplex on `{apex} ∪ cycle vertices`.
pub fn counterexample_disk(n: usize, apex: VertexId) -> Result<SimplicialComplex> {
    let k = counterexample(n)?;
    if apex.0 > n as u32 - 2 {
        return Err(Error::domain(format!(
            "apex {apex} is not a vertex of the simplex factor"
        )));
    }
    let mut verts = vec![apex];
    verts.extend(((n as u32 - 1)..=(n as u32 + 3)).map(VertexId));
    k.induced_subcomplex(&verts)
}

/// `k` tetrahedra glued cyclically around the edge {0,1}: facets
/// `{0, 1, 2+i, 2+(i+1 mod k)}`. The link of {0,1} is the `k`-cycle on
/// `2..2+k`. `k = 2` would produce a duplicated facet pair and is rejected.
pub fn tetra_fan(k: usize) -> Result<SimplicialComplex> {
    if k < 2 {
        return Err(Error::domain("tetrahedron fan needs k ≥ 2"));
    }
    if k == 2 {
        return Err(Error::domain(
            "tetrahedron fan with k = 2 duplicates a facet pair; k ≥ 3 required",
        ));
    }
    let facets: Vec<Vec<u32>> = (0..k as u32)
        .map(|i| vec![0, 1, 2 + i, 2 + (i + 1) % k as u32])
        .collect();
    SimplicialComplex::from_facets(&facets)
}

/// Clique complex of a seeded Erdős–Rényi graph: sample each edge with
/// probability `p`, take all maximal cliques as facets. Always flag by
/// construction; byte-identical output per (vertices, p, seed).
pub fn random_flag_complex(vertices: usize, p: f64, seed: u64) -> Result<SimplicialComplex> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("edge probability must lie in [0, 1]"));
    }
    if vertices == 0 {
        return Ok(SimplicialComplex::void());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = vertices;
    let mut adj = vec![vec![false; n]; n];
    let sampled: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .filter(|_| rng.gen::<f64>() < p)
        .collect();
    for (i, j) in sampled {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    bron_kerbosch(&adj, &mut vec![], (0..n).collect(), vec![], &mut cliques);
    let facets: Vec<Vec<u32>> = cliques
        .into_iter()
        .map(|c| c.into_iter().map(|v| v as u32).collect())
        .collect();
    SimplicialComplex::from_facets(&facets)
}

/// Classic Bron–Kerbosch without pivoting; candidate lists are kept sorted so
/// the output is deterministic.
fn bron_kerbosch(
    adj: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        out.push(current.clone());
        return;
    }
    let mut cands = candidates.clone();
    let mut excl = excluded;
    while let Some(&v) = cands.first() {
        let next_c: Vec<usize> = cands.iter().copied().filter(|&u| adj[v][u]).collect();
        let next_e: Vec<usize> = excl.iter().copied().filter(|&u| adj[v][u]).collect();
        current.push(v);
        bron_kerbosch(adj, current, next_c, next_e, out);
        current.pop();
        cands.remove(0);
        excl.push(v);
    }
}

/// Declarative description of a generated complex; same spec (including
/// seed) always builds byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Simplex { d: usize },
    Octahedron,
    Wheel { n: usize },
    Join { d: usize, n: usize },
    Counterexample { n: usize },
    TetraFan { k: usize },
    RandomFlag { vertices: usize, p: f64, seed: u64 },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<SimplicialComplex> {
        match *self {
            GeneratorSpec::Cycle { n } => cycle(n),
            GeneratorSpec::Simplex { d } => Ok(simplex_complex(d)),
            GeneratorSpec::Octahedron => Ok(octahedron()),
            GeneratorSpec::Wheel { n } => wheel(n),
            GeneratorSpec::Join { d, n } => join_simplex_cycle(d, n),
            GeneratorSpec::Counterexample { n } => counterexample(n),
            GeneratorSpec::TetraFan { k } => tetra_fan(k),
            GeneratorSpec::RandomFlag { vertices, p, seed } => {
                random_flag_complex(vertices, p, seed)
            }
        }
    }

    /// Canonical name used in file headers and reports.
    pub fn name(&self) -> String {
        match *self {
            GeneratorSpec::Cycle { n } => format!("cycle-{n}"),
            GeneratorSpec::Simplex { d } => format!("simplex-{d}"),
            GeneratorSpec::Octahedron => "octahedron".to_string(),
            GeneratorSpec::Wheel { n } => format!("wheel-{n}"),
            GeneratorSpec::Join { d, n } => format!("join-{d}-cycle-{n}"),
            GeneratorSpec::Counterexample { n } => format!("counterexample-{n}"),
            GeneratorSpec::TetraFan { k } => format!("tetra-fan-{k}"),
            GeneratorSpec::RandomFlag { vertices, p, seed } => {
                format!("random-flag-{vertices}-p{p}-s{seed}")
            }
        }
    }
}
