use thiserror::Error;

/// Errors raised while building or querying a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a loop")]
    Loop { v: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("common neighbours of a vertex with itself ({v}) are undefined")]
    SameVertex { v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("the two edges of the pair are identical")]
    SameEdge,
    #[error("edges ({a}, {b}) and ({c}, {d}) share a vertex")]
    NotDisjoint { a: usize, b: usize, c: usize, d: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// Errors raised by the text formats in [`io`](crate::io).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {n} vertices exceed the largest supported order {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at position {pos} is outside 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("graph6: header is truncated")]
    TruncatedHeader,
    #[error("graph6: expected {expected} payload bytes, found {found}")]
    PayloadLength { expected: usize, found: usize },
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}
