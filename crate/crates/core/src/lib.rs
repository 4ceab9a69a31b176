//! Exact toolkit for lattice polytopes containing the origin, aimed at
//! simplicial reflexive polytopes: duals, normal forms, special facets, and
//! mechanical verification of the classification of simplicial reflexive
//! polytopes with `3d - 1` vertices.

pub mod analysis;
pub mod canonical;
pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod verifier;

pub use canonical::{is_isomorphic, normal_form, NormalForm};
pub use constructions::{construct, free_sum, NamedPolytope};
pub use error::{Error, Result};
pub use lattice::{is_lattice_basis, IntMatrix, IntVector, RatVector};
pub use polytope::{Containment, Facet, LatticePolytope, RationalPolytope};
