use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex set lives on {found} vertices, expected {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0} is not a prime below 65536")]
    NotPrime(u32),
    #[error("void complex has no Stanley–Reisner presentation in this tool")]
    VoidComplex,
    #[error("n = {n} exceeds the guard max_n = {max_n}; the sweep would visit {subsets} subsets")]
    GuardExceeded {
        n: usize,
        max_n: usize,
        subsets: u64,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
