//! Error types shared across the crate.

use thiserror::Error;

/// The disk axiom a candidate diagram violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskAxiom {
    /// The candidate has no faces at all.
    NoFaces,
    /// A face is not a 2-simplex (three distinct vertices).
    FaceNotTriangle,
    /// The same 2-simplex appears twice.
    DuplicateFace,
    /// Some edge lies in more than two faces.
    EdgeInTooManyFaces,
    /// The 1-skeleton is disconnected.
    NotConnected,
    /// V - E + F differs from 1.
    EulerCharacteristic,
    /// Removing a vertex disconnects the diagram (singular disk).
    CutVertex,
    /// The edges lying in exactly one face do not form a single simple cycle.
    BoundaryNotCycle,
    /// An interior vertex whose link is not a single cycle.
    InteriorLinkNotCycle,
    /// A boundary vertex whose link is not a single path.
    BoundaryLinkNotPath,
    /// The supplied boundary loop does not match the derived one.
    BoundaryMismatch,
}

impl std::fmt::Display for DiskAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DiskAxiom::NoFaces => "no-faces",
            DiskAxiom::FaceNotTriangle => "face-not-triangle",
            DiskAxiom::DuplicateFace => "duplicate-face",
            DiskAxiom::EdgeInTooManyFaces => "edge-in-too-many-faces",
            DiskAxiom::NotConnected => "not-connected",
            DiskAxiom::EulerCharacteristic => "euler-characteristic",
            DiskAxiom::CutVertex => "cut-vertex",
            DiskAxiom::BoundaryNotCycle => "boundary-not-cycle",
            DiskAxiom::InteriorLinkNotCycle => "interior-link-not-cycle",
            DiskAxiom::BoundaryLinkNotPath => "boundary-link-not-path",
            DiskAxiom::BoundaryMismatch => "boundary-mismatch",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input data that cannot represent a complex/loop at all.
    #[error("malformed input: {0}")]
    MalformedInput(String),
    /// A precondition of an operation was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// Structurally valid input the operation deliberately does not support.
    #[error("unsupported structure: {0}")]
    Unsupported(String),
    /// A disk candidate violating one of the disk axioms.
    #[error("invalid disk ({axiom}): {detail}")]
    InvalidDisk { axiom: DiskAxiom, detail: String },
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn invalid_disk(axiom: DiskAxiom, detail: impl Into<String>) -> Self {
        Error::InvalidDisk {
            axiom,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
