use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty table")]
    Empty,

    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("entry {value} at ({row}, {col}) is outside 0..{n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NonAssociative { x: usize, y: usize, z: usize },

    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeBound {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("{0} has no identity element")]
    NotMonoid(String),

    #[error("arrow {arrow} has endpoint outside the {objects} objects")]
    BadArrow { arrow: usize, objects: usize },

    #[error("identity at object {0} is malformed")]
    BadIdentity(usize),

    #[error("composite of arrows {0} and {1} is malformed")]
    BadComposite(usize, usize),

    #[error("composition not associative on arrows ({0}, {1}, {2})")]
    NonAssociativeComposite(usize, usize, usize),

    #[error("wire {0} -> {1} is not an arrow between those objects")]
    WireEndpoints(usize, usize),

    #[error("wire {0} -> {0} is not the identity")]
    WireDiagonal(usize),

    #[error("not a wired functor: {0}")]
    NotFunctor(String),

    #[error("map does not preserve the product of {0} and {1}")]
    NotHomomorphism(usize, usize),

    #[error("{y} is not a pseudoinverse of {x}")]
    NotPseudoinverse { x: usize, y: usize },

    #[error("({e}, {x}, {f}) is not a Karoubi triple")]
    NotTriple { e: usize, x: usize, f: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
}
