//! Constructors for the standard families of examples.

pub mod category;
pub mod complex;
pub mod ofc;
pub mod partial;

pub use category::{nerve, twisted_arrow, twisted_arrow_comparison, CategorySpec, FiniteCategory, Morphism};
pub use complex::{ordered_complex, simplex_boundary, standard_simplex};
pub use ofc::{bounded_words, free_decomposition, graph_paths, length_map, DirectedGraph, Edge, OuterFaceComplex};
pub use partial::{
    from_partial_category, from_partial_monoid, PartialCategory, PartialMonoid, PartialMonoidSpec,
    DEFAULT_CARRIER_CAP,
};
