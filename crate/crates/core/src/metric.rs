//! Metric data for links of regular complexes: dihedral angles, codimension-2
//! link graphs, metric girth and the 2π short-loop test.
//!
//! Everything here is generic over the floating-point scalar; the crate root
//! exports `f32`/`f64` aliases. All the combinatorics stays exact — floats
//! only enter through the edge weights `arccos(1/m)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_traits::Float;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::loops::CombinatorialLoop;

/// Dihedral angle of a regular unit `m`-simplex along a codimension-2 face:
/// `arccos(1/m)`. Defined for `m ≥ 2`; strictly increasing in `m`, bounded by π/2.
pub fn dihedral_angle<T: Float>(facet_dim: usize) -> Result<T> {
    if facet_dim < 2 {
        return Err(Error::domain(
            "dihedral angle along a codimension-2 face needs facet dimension ≥ 2",
        ));
    }
    let m = T::from(facet_dim).expect("small integer fits any float");
    Ok((T::one() / m).acos())
}

/// Least `k` with `k · arccos(1/m) ≥ 2π`: the minimum combinatorial girth a
/// codimension-2 link of `m`-simplices may have without creating a loop
/// shorter than 2π. The boundary case (`m = 2`, where 6 · π/3 = 2π exactly)
/// counts as passing.
pub fn girth_threshold<T: Float>(facet_dim: usize) -> Result<usize> {
    let angle: T = dihedral_angle(facet_dim)?;
    let two_pi = T::from(std::f64::consts::TAU).unwrap();
    // slack absorbs rounding in acos and the multiplication at the exact boundary
    let slack = two_pi * T::epsilon() * T::from(8).unwrap();
    let mut k = 1usize;
    loop {
        if T::from(k).unwrap() * angle >= two_pi - slack {
            return Ok(k);
        }
        k += 1;
    }
}

/// Weighted edge of a metric graph, endpoints normalized to `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricEdge<T> {
    pub endpoints: (VertexId, VertexId),
    pub weight: T,
}

/// Simple weighted graph with positive edge weights (radians).
#[derive(Debug, Clone, PartialEq)]
pub struct MetricGraph<T> {
    vertices: Vec<VertexId>,
    edges: Vec<MetricEdge<T>>,
}

/// Outcome of a girth computation. `length = None` means the graph is a
/// forest (girth infinite). A finite result carries a witness cycle whose
/// edge weights sum to the reported length.
#[derive(Debug, Clone, PartialEq)]
pub struct GirthResult<T> {
    pub length: Option<T>,
    pub cycle: Option<CombinatorialLoop>,
}

impl<T: Float> GirthResult<T> {
    /// True iff no loop shorter than `2π − tol` exists.
    pub fn passes_two_pi(&self, tol: T) -> bool {
        match self.length {
            None => true,
            Some(len) => len >= T::from(std::f64::consts::TAU).unwrap() - tol,
        }
    }
}

impl<T: Float> MetricGraph<T> {
    /// Builds a graph from weighted edges. Loops, parallel edges and
    /// non-positive weights are rejected. Vertices not on any edge may be
    /// supplied through `isolated`.
    pub fn from_edges(
        edges: Vec<(VertexId, VertexId, T)>,
        isolated: Vec<VertexId>,
    ) -> Result<Self> {
        let mut normalized: Vec<MetricEdge<T>> = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::domain(format!("loop edge at vertex {a}")));
            }
            if w <= T::zero() || !w.is_finite() {
                return Err(Error::domain("edge weights must be positive and finite"));
            }
            normalized.push(MetricEdge {
                endpoints: (a.min(b), a.max(b)),
                weight: w,
            });
        }
        normalized.sort_by_key(|x| x.endpoints);
        if normalized
            .windows(2)
            .any(|w| w[0].endpoints == w[1].endpoints)
        {
            return Err(Error::domain("parallel edges are not allowed"));
        }
        let mut vertices: Vec<VertexId> = normalized
            .iter()
            .flat_map(|e| [e.endpoints.0, e.endpoints.1])
            .chain(isolated)
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        Ok(MetricGraph {
            vertices,
            edges: normalized,
        })
    }

    /// Codimension-2 link of `s` in `k`: a vertex per vertex `w` with
    /// `s ∪ {w}` a simplex, an edge per facet `f ⊇ s` joining the two
    /// vertices of `f \ s`, weighted by the dihedral angle of `dim f`.
    ///
    /// Every facet containing `s` must have dimension `dim s + 2`; mixed
    /// codimension is rejected rather than approximated.
    pub fn codim2_link(k: &SimplicialComplex, s: &Simplex) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::domain("codimension-2 link needs a nonempty simplex"));
        }
        if !k.contains_simplex(s) {
            return Err(Error::domain(format!("simplex {s} not in complex")));
        }
        let expected_dim = s.dimension() + 2;
        let mut edges = Vec::new();
        let mut link_vertices: Vec<VertexId> = Vec::new();
        for facet in k.facets() {
            if !s.is_face_of(facet) {
                continue;
            }
            if facet.dimension() != expected_dim {
                return Err(Error::unsupported(format!(
                    "facet {facet} containing {s} has dimension {}, expected {expected_dim} \
                     (mixed codimension)",
                    facet.dimension()
                )));
            }
            let rest = facet.difference(s);
            debug_assert_eq!(rest.len(), 2);
            let w: T = dihedral_angle(facet.dimension() as usize)?;
            edges.push((rest.vertices()[0], rest.vertices()[1], w));
            link_vertices.extend_from_slice(rest.vertices());
        }
        // vertices of the link not incident to any facet of codimension 2
        // over s cannot exist once the purity check above passed, but the
        // definition is "w with s ∪ {w} a simplex", so collect them anyway
        let link = k.link(s)?;
        let isolated: Vec<VertexId> = link
            .vertex_set()
            .iter()
            .copied()
            .filter(|v| !link_vertices.contains(v))
            .collect();
        MetricGraph::from_edges(edges, isolated)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[MetricEdge<T>] {
        &self.edges
    }

    fn index_of(&self, v: VertexId) -> usize {
        self.vertices.binary_search(&v).expect("vertex in graph")
    }

    fn adjacency(&self) -> Vec<Vec<(usize, T)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            let a = self.index_of(e.endpoints.0);
            let b = self.index_of(e.endpoints.1);
            adj[a].push((b, e.weight));
            adj[b].push((a, e.weight));
        }
        adj
    }

    /// Total weight of a closed walk along `cycle`, summed in traversal
    /// order; `None` when some consecutive pair is not an edge.
    pub fn cycle_weight(&self, cycle: &CombinatorialLoop) -> Option<T> {
        let mut total = T::zero();
        for pair in cycle.edges() {
            let weight = self
                .edges
                .iter()
                .find(|e| e.endpoints == pair)
                .map(|e| e.weight)?;
            total = total + weight;
        }
        Some(total)
    }

    /// Metric girth: the minimal total weight of a simple cycle, with a
    /// witness. For every edge `e = (u,v)` the shortest `u→v` path avoiding
    /// `e` closes into a simple cycle through `e`; the minimum over edges is
    /// exact. Ties between equal-length cycles resolve to the canonically
    /// least witness; the reported length is the re-summation of the witness
    /// cycle's weights in canonical traversal order.
    pub fn girth(&self) -> GirthResult<T> {
        let adj = self.adjacency();
        let mut best: Option<(T, CombinatorialLoop)> = None;
        for (ei, e) in self.edges.iter().enumerate() {
            let u = self.index_of(e.endpoints.0);
            let v = self.index_of(e.endpoints.1);
            if let Some((dist, path)) = self.shortest_path_avoiding(&adj, u, v, ei) {
                let total = dist + e.weight;
                let cycle =
                    CombinatorialLoop::new(path.into_iter().map(|i| self.vertices[i]).collect())
                        .expect("simple cycle has ≥ 3 vertices")
                        .canonical();
                let better = match &best {
                    None => true,
                    Some((len, wit)) => {
                        total < *len || (total == *len && cycle.vertices() < wit.vertices())
                    }
                };
                if better {
                    best = Some((total, cycle));
                }
            }
        }
        match best {
            Some((_, cycle)) => GirthResult {
                length: Some(
                    self.cycle_weight(&cycle)
                        .expect("witness lies in the graph"),
                ),
                cycle: Some(cycle),
            },
            None => GirthResult {
                length: None,
                cycle: None,
            },
        }
    }

    /// Dijkstra from `u` to `v` skipping edge index `skip`; returns the path
    /// as vertex indices `u..=v`.
    fn shortest_path_avoiding(
        &self,
        adj: &[Vec<(usize, T)>],
        u: usize,
        v: usize,
        skip: usize,
    ) -> Option<(T, Vec<usize>)> {
        let skip_pair = {
            let e = &self.edges[skip];
            (self.index_of(e.endpoints.0), self.index_of(e.endpoints.1))
        };
        let n = self.vertices.len();
        let mut dist: Vec<Option<T>> = vec![None; n];
        let mut prev: Vec<usize> = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[u] = Some(T::zero());
        heap.push(HeapEntry {
            cost: T::zero(),
            node: u,
        });
        while let Some(HeapEntry { cost, node }) = heap.pop() {
            if dist[node].is_none_or(|d| cost > d) {
                continue;
            }
            if node == v {
                break;
            }
            for &(next, w) in &adj[node] {
                let pair = (node.min(next), node.max(next));
                if pair == skip_pair {
                    continue;
                }
                let cand = cost + w;
                if dist[next].is_none_or(|d| cand < d) {
                    dist[next] = Some(cand);
                    prev[next] = node;
                    heap.push(HeapEntry {
                        cost: cand,
                        node: next,
                    });
                }
            }
        }
        let total = dist[v]?;
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Some((total, path))
    }
}

/// Min-heap entry ordered by cost. Weights are validated finite, so the
/// partial comparison cannot observe NaN.
struct HeapEntry<T> {
    cost: T,
    node: usize,
}

impl<T: Float> PartialEq for HeapEntry<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cost == other.cost && self.node == other.node
    }
}
impl<T: Float> Eq for HeapEntry<T> {}
impl<T: Float> Ord for HeapEntry<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed for a min-heap; node index breaks ties deterministically
        other
            .cost
            .partial_cmp(&self.cost)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}
impl<T: Float> PartialOrd for HeapEntry<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of the 2π test on one codimension-2 link.
#[derive(Debug, Clone)]
pub struct LinkGirthCheck<T> {
    pub simplex: Simplex,
    pub girth: GirthResult<T>,
    pub pass: bool,
}

/// Runs the 2π short-loop test on the codimension-2 link of `s`:
/// passes iff the metric girth is at least `2π − tol`.
pub fn edge_link_passes<T: Float>(
    k: &SimplicialComplex,
    s: &Simplex,
    tol: T,
) -> Result<LinkGirthCheck<T>> {
    let graph = MetricGraph::codim2_link(k, s)?;
    let girth = graph.girth();
    let pass = girth.passes_two_pi(tol);
    Ok(LinkGirthCheck {
        simplex: s.clone(),
        girth,
        pass,
    })
}

/// All simplices of `k` whose star is purely codimension-2: some facet
/// containing `s` has dimension `dim s + 2`, and then all of them must.
/// A simplex contained in facets of differing dimensions, one of which is
/// `dim s + 2`, makes the scan fail with an unsupported-structure error.
pub fn codim2_simplices(k: &SimplicialComplex) -> Result<Vec<Simplex>> {
    let mut out = Vec::new();
    for s in k.all_simplices() {
        let mut seen_codim2 = false;
        let mut seen_other = false;
        for facet in k.facets() {
            if s.is_face_of(facet) {
                if facet.dimension() == s.dimension() + 2 {
                    seen_codim2 = true;
                } else {
                    seen_other = true;
                }
            }
        }
        if seen_codim2 {
            if seen_other {
                return Err(Error::unsupported(format!(
                    "simplex {s} sits in facets of mixed codimension"
                )));
            }
            out.push(s);
        }
    }
    Ok(out)
}
