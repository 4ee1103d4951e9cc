//! Signed graph homomorphisms: data model, switching, exact search,
//! constructions and reductions.

pub mod claims;
pub mod constructions;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod hom;
pub mod io;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{Colour, Edge, Graph, GraphBuilder, StructuralStats, SwitchSet, NEGATIVE, POSITIVE};
