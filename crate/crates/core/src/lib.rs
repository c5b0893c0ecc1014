//! Regularity of graphs under graph operations.
//!
//! `regtool` builds graphs (named families, products, joins, line,
//! subdivision and semi-total point graphs), classifies them as regular,
//! edge-regular, pseudo strongly regular, strongly regular or Deza, and checks
//! claimed parameter formulas against brute force.
//!
//! ```
//! use regtool::{classify, families::{generate, FamilySpec}, PairParam};
//!
//! let octahedron = generate(&FamilySpec::Octahedron).unwrap();
//! let report = classify(&octahedron);
//! assert_eq!(report.regular_k, Some(4));
//! assert_eq!(report.edge_regular, PairParam::Yes(2));
//! ```

pub mod canon;
pub mod census;
pub mod classify;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod ops;
pub mod theorems;

pub use canon::{are_isomorphic, canonical_form};
pub use classify::{classify, ClassificationReport, PairParam, SrgParams};
pub use error::{FormatError, GraphError};
pub use graph::{EdgePair, Graph, PairPattern};
pub use ops::OperationKind;

// The guide's snippets run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
