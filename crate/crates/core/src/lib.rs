//! Machinery for Ramsey numbers of generalized books `B_q^(r) = K_r + qK_1`
//! against cliques.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-row adjacency graphs, vertex sets and graph6 I/O.
//! * [`cliques`]: exact clique counting, book sizes and the counting
//!   identities behind the degree-square inequality.
//! * [`stability`]: the constant `c(p)`, the single-pass low-degree deletion
//!   and exact `p`-colouring.
//! * [`regularity`]: ε-regular pair checks, cluster-graph classification of
//!   a given partition and the counting lemmas built on top of them.
//! * [`ramsey`]: exhaustive arrowing search, extremal witnesses and the
//!   pigeonhole book extraction.
//! * [`lower_bound`]: constants, tail bounds and seeded Monte-Carlo search
//!   for the random lower-bound construction.
//!
//! Vertices are 0-indexed everywhere in the API.

pub mod cliques;
mod error;
pub mod graph;
pub mod lower_bound;
pub mod ramsey;
pub mod rational;
pub mod regularity;
pub mod rng;
pub mod stability;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
