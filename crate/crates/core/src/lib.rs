//! Audits of regular simplicial complexes for combinatorial and metric
//! nonpositive-curvature certificates.
//!
//! The crate provides:
//!
//! - facet-based abstract simplicial complexes with links, induced (full)
//!   subcomplexes, fullness and flag tests ([`complex`]);
//! - combinatorial loops, graph distance and tight-cycle enumeration
//!   ([`loops`]);
//! - empty triangle/square/pentagon detection, k-largeness and the
//!   simplicial nonpositive curvature check ([`polygon`]);
//! - metric data of codimension-2 links: dihedral angles `arccos(1/m)`,
//!   weighted link graphs, metric girth and the 2π short-loop test
//!   ([`metric`]);
//! - triangulated disk diagrams with combinatorial Gauß–Bonnet, CAT(0)-disk
//!   classification, exhaustive disk-type enumeration and minimal
//!   spanning-disk search ([`disk`]);
//! - generators for the standard fixtures and the cyclic counterexample
//!   family ([`generators`]), and a canonical JSON file format ([`io`]).
//!
//! The combinatorics is exact throughout; floating point only enters through
//! metric link weights, and those routines are generic over the scalar via
//! `num-traits` with `f32`/`f64` aliases exported below.

pub mod complex;
mod error;
pub mod generators;
pub mod io;
pub mod loops;
pub mod metric;
pub mod polygon;

pub mod disk;

pub use complex::{Simplex, SimplicialComplex, VertexId};
pub use error::{DiskAxiom, Error, Result};
pub use loops::CombinatorialLoop;

/// Metric link graph over `f64`, the default precision of the CLI.
pub type MetricGraph64 = metric::MetricGraph<f64>;
/// Metric link graph over `f32`.
pub type MetricGraph32 = metric::MetricGraph<f32>;
/// Girth result over `f64`.
pub type GirthResult64 = metric::GirthResult<f64>;
/// Girth result over `f32`.
pub type GirthResult32 = metric::GirthResult<f32>;
