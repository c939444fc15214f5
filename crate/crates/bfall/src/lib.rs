//! b-colorings, fall-colorings and special homomorphisms on graph products.
//!
//! The library materializes a small theory end to end:
//!
//! - [`graph`]: simple graphs, named families (complete, cycle, path, crown),
//!   chordality with certificates, exact clique number, and the 61-vertex
//!   chordal graph with `χ = δ + 1` but no fall-coloring;
//! - [`products`]: the adjacency-product engine (cartesian, direct,
//!   lexicographic, strong, co-normal, and custom relation masks);
//! - [`coloring`]: proper / b- / fall-coloring predicates and the color-class
//!   elimination procedure;
//! - [`spectra`]: exact χ, b-spectrum and fall-spectrum by pruned
//!   backtracking, with a brute-force oracle for cross-checks;
//! - [`hom`]: homomorphism, b-homomorphism, domatic and Type II checkers,
//!   product lifting, and the coloring ↔ map-to-`K_k` bridge;
//! - [`constructions`]: the explicit colorings behind the existence proofs;
//! - [`claims`]: the reproduction suite behind `check-paper`.

pub mod bitset;
pub mod claims;
pub mod coloring;
pub mod constructions;
pub mod corpus;
pub mod dimacs;
pub mod graph;
pub mod hom;
pub mod products;
pub mod spectra;

pub use coloring::Coloring;
pub use graph::Graph;
pub use hom::VertexMap;
pub use products::ProductSpec;
pub use spectra::{SpectrumReport, OracleSpectra};
