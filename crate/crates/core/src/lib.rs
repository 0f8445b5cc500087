//! Exact-arithmetic toolkit for generating polynomials of graph properties.
//!
//! Everything here is computed over exact integers and rationals; there is no
//! floating point on any decision path. The crate is organised around a small
//! bitset graph type and a dense rational polynomial type:
//!
//! - [`graph`]: labelled simple graphs on up to 64 vertices, graph6 I/O,
//!   small-graph isomorphism machinery, and seeded G(n,p) sampling.
//! - [`poly`]: dense arbitrary-precision rational polynomials.
//! - [`properties`]: hereditary, co-hereditary and augmented graph properties.
//! - [`counting`]: coefficient sequences of property generating polynomials,
//!   matching and chromatic polynomials, and structural invariants.
//! - [`seq_analysis`]: unimodality, log-concavity and ratio inequalities.
//! - [`real_roots`]: Sturm sequences and exact real-rootedness decisions.
//! - [`random_model`]: subgraph-count expectations and tail bounds in G(n,p).
//! - [`experiments`]: batch drivers that sweep graph classes or Monte Carlo
//!   samples and emit machine-readable reports.
//!
//! ```
//! use propoly::counting::coeffs_hereditary;
//! use propoly::real_roots::is_real_rooted;
//! use propoly::{Graph, PropertySpec};
//!
//! let g = Graph::cycle(5);
//! let forest = PropertySpec::parse("forest").unwrap();
//! let seq = coeffs_hereditary(&g, &forest).unwrap();
//! assert_eq!(seq.values[2], 10u32.into());
//! assert!(!is_real_rooted(&seq.polynomial()).unwrap());
//! ```

pub mod counting;
pub mod experiments;
pub mod graph;
pub mod poly;
pub mod properties;
pub mod random_model;
pub mod real_roots;
pub mod seq_analysis;

pub use graph::{Graph, GraphError, VertexSet};
pub use poly::{binomial, ExactPolynomial, PolyError};
pub use properties::{AugmentedProperty, BuiltinProperty, PropertyError, PropertySpec};
