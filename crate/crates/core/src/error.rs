use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a simplex must have at least one vertex")]
    EmptySimplex,

    #[error("vertex labels must be positive, got {0}")]
    NonPositiveLabel(i64),

    #[error("duplicate vertex label {0} in simplex")]
    DuplicateLabel(u32),

    #[error("simplex {0} is not an element of the complex")]
    NotAnElement(String),

    #[error("set is not subset-closed: {0} is present but its face {1} is missing")]
    NotSubsetClosed(String, String),

    #[error("operation requires a nonempty complex")]
    EmptyComplex,

    #[error("complex too large: {elements} elements exceeds the limit of {limit}")]
    TooLarge { elements: usize, limit: usize },

    #[error("matrix order {matrix} does not match the complex element count {complex}")]
    OrderMismatch { matrix: usize, complex: usize },

    #[error("matrix operation requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("graph edge ({0},{1}) references a missing vertex or is a loop")]
    InvalidEdge(u32, u32),

    #[error("edge count {m} out of range for {n} vertices (max {max})")]
    EdgeCountOutOfRange { n: u32, m: u64, max: u64 },

    #[error("unknown generator name: {0}")]
    UnknownGenerator(String),

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex function is not locally injective on edge ({0},{1})")]
    NotLocallyInjective(u32, u32),

    #[error("vertex function must assign a value to vertex {0}")]
    MissingVertexValue(u32),

    #[error("level {0} equals the value at vertex {1}; pick a level off the vertex values")]
    LevelOnVertexValue(String, u32),

    #[error("Poincaré-Hopf index forms disagree at vertex {vertex}: link form {link_form}, max-attribution form {max_form}")]
    IndexFormsDisagree {
        vertex: u32,
        link_form: i64,
        max_form: i64,
    },

    #[error("complex is not a {0}-sphere, precondition violated")]
    NotASphere(i64),

    #[error("complex is not a {0}-manifold, precondition violated")]
    NotAManifold(i64),
}
