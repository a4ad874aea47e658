use thiserror::Error;

/// Errors raised by graph construction, analysis and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("loop edge at vertex {0} is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("{what}: {size} exceeds the cap of {cap}")]
    OverCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has no vertices")]
    ZeroVertices,

    #[error("graph is not bipartite: {0}")]
    NotBipartite(&'static str),

    #[error("vector is not a unit vector (norm {0})")]
    NonUnitVector(f64),

    #[error("out of theorem scope: {0}")]
    OutOfScope(String),

    #[error("spectral gap {0:e} is below the vacuity threshold; bound undefined")]
    VacuousGap(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::OverCap { what, size, cap })
    } else {
        Ok(())
    }
}
