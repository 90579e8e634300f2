//! Independent oracles and shared corpora for the integration suites.
//!
//! The oracles deliberately take different algorithmic routes from the
//! library: empty-gon detection by brute force over noncrossing diagonal
//! subsets (the library recursively splits the polygon), and girth by
//! exhaustive simple-cycle enumeration (the library runs per-edge shortest
//! paths).

#![allow(dead_code)]

use itertools::Itertools;

use npc_core::generators;
use npc_core::metric::MetricGraph;
use npc_core::polygon;
use npc_core::{CombinatorialLoop, Simplex, SimplicialComplex, VertexId};

/// Brute-force empty-n-gon oracle: the loop is empty iff no set of `n - 3`
/// pairwise noncrossing diagonals yields a filling whose diagonals are all
/// edges of `k` and whose triangles are all faces of `k`.
pub fn oracle_empty_ngon(k: &SimplicialComplex, ngon: &CombinatorialLoop) -> bool {
    let n = ngon.len();
    assert!((3..=5).contains(&n));
    let verts = ngon.vertices();
    let strictly_inside = |x: usize, i: usize, j: usize| i < x && x < j;
    let crossing = |a: (usize, usize), b: (usize, usize)| {
        strictly_inside(b.0, a.0, a.1) != strictly_inside(b.1, a.0, a.1)
            && b.0 != a.0
            && b.0 != a.1
            && b.1 != a.0
            && b.1 != a.1
    };
    let mut all_diagonals = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let side = j - i == 1 || (i == 0 && j == n - 1);
            if !side {
                all_diagonals.push((i, j));
            }
        }
    }
    for subset in all_diagonals.iter().copied().combinations(n - 3) {
        let noncrossing = subset
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !crossing(*a, *b));
        if !noncrossing {
            continue;
        }
        // edges of the triangulated polygon: sides plus the chosen diagonals
        let mut position_edges: Vec<(usize, usize)> = (0..n)
            .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
            .collect();
        position_edges.extend(subset.iter().copied());
        let has = |a: usize, b: usize| position_edges.contains(&(a.min(b), a.max(b)));
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    if has(a, b) && has(b, c) && has(a, c) {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(triangles.len(), n - 2, "oracle triangulation is broken");
        let diagonals_present = subset
            .iter()
            .all(|(i, j)| k.contains_simplex(&Simplex::new(vec![verts[*i], verts[*j]]).unwrap()));
        let faces_present = triangles.iter().all(|[a, b, c]| {
            k.contains_simplex(&Simplex::new(vec![verts[*a], verts[*b], verts[*c]]).unwrap())
        });
        if diagonals_present && faces_present {
            return false;
        }
    }
    true
}

/// Exhaustive-girth oracle: enumerate every simple cycle by DFS, weigh each
/// in canonical traversal order, take the minimum.
pub fn oracle_girth(graph: &MetricGraph<f64>) -> Option<f64> {
    let verts: Vec<VertexId> = graph.vertices().to_vec();
    let n = verts.len();
    let index = |v: VertexId| verts.binary_search(&v).unwrap();
    let mut adj = vec![vec![]; n];
    for e in graph.edges() {
        let a = index(e.endpoints.0);
        let b = index(e.endpoints.1);
        adj[a].push(b);
        adj[b].push(a);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let mut best: Option<f64> = None;
    let mut path: Vec<usize> = Vec::new();
    let mut in_path = vec![false; n];
    fn dfs(
        adj: &[Vec<usize>],
        verts: &[VertexId],
        graph: &MetricGraph<f64>,
        start: usize,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        best: &mut Option<f64>,
    ) {
        let last = *path.last().unwrap();
        for &next in &adj[last] {
            if next <= start || in_path[next] {
                continue;
            }
            path.push(next);
            if path.len() >= 3 && adj[next].contains(&start) && path[1] < next {
                let cycle = CombinatorialLoop::new(path.iter().map(|&i| verts[i]).collect())
                    .unwrap()
                    .canonical();
                let weight = graph.cycle_weight(&cycle).unwrap();
                if best.is_none_or(|b| weight < b) {
                    *best = Some(weight);
                }
            }
            in_path[next] = true;
            dfs(adj, verts, graph, start, path, in_path, best);
            in_path[next] = false;
            path.pop();
        }
    }
    for start in 0..n {
        path.push(start);
        in_path[start] = true;
        dfs(
            &adj,
            &verts,
            graph,
            start,
            &mut path,
            &mut in_path,
            &mut best,
        );
        in_path[start] = false;
        path.pop();
    }
    best
}

/// All nonempty vertex subsets of `k`, as sorted id vectors.
pub fn vertex_subsets(k: &SimplicialComplex) -> Vec<Vec<VertexId>> {
    let verts = k.vertex_set();
    let n = verts.len();
    assert!(n <= 16, "subset enumeration is meant for small complexes");
    (1..(1u32 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| verts[i])
                .collect()
        })
        .collect()
}

/// Deterministic small complexes exercising every classification the tool
/// knows about.
pub fn fixture_corpus() -> Vec<SimplicialComplex> {
    let mut out = vec![
        generators::cycle(5).unwrap(),
        generators::cycle(6).unwrap(),
        generators::octahedron(),
        generators::wheel(5).unwrap(),
        generators::wheel(6).unwrap(),
        generators::simplex_complex(3),
        generators::tetra_fan(3).unwrap(),
        generators::tetra_fan(6).unwrap(),
    ];
    for n in [3, 4, 5, 6] {
        out.push(generators::counterexample(n).unwrap());
    }
    out
}

/// Seeded generation parameters spreading over size and density.
fn sample_params(seed: u64) -> (usize, f64) {
    let vertices = 4 + (seed % 6) as usize; // 4..=9
    let densities = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.75, 0.9];
    (vertices, densities[(seed / 6) as usize % densities.len()])
}

pub struct HeredityCorpus {
    /// Complexes passing is_k_large(·, 6), with their seeds.
    pub six_large: Vec<(u64, SimplicialComplex)>,
    /// Complexes passing is_snpc, with their seeds.
    pub snpc: Vec<(u64, SimplicialComplex)>,
}

/// Samples random flag complexes until at least `quota` pass each of the
/// 6-large and SNPC screens.
pub fn build_heredity_corpus(quota: usize) -> HeredityCorpus {
    let mut six_large = Vec::new();
    let mut snpc = Vec::new();
    let mut seed = 0u64;
    while (six_large.len() < quota || snpc.len() < quota) && seed < 50_000 {
        let (vertices, p) = sample_params(seed);
        let k = generators::random_flag_complex(vertices, p, seed).unwrap();
        if six_large.len() < quota && polygon::is_k_large(&k, 6).unwrap() {
            six_large.push((seed, k.clone()));
        }
        if snpc.len() < quota && polygon::is_snpc(&k).unwrap() {
            snpc.push((seed, k));
        }
        seed += 1;
    }
    assert!(
        six_large.len() >= quota && snpc.len() >= quota,
        "corpus generation exhausted seeds: {} six-large, {} snpc",
        six_large.len(),
        snpc.len()
    );
    HeredityCorpus { six_large, snpc }
}
