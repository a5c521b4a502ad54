//! Deciding, certifying and refuting embeddings between right-angled Artin
//! groups through finite approximations of extension graphs.
//!
//! The layers, bottom up:
//!
//! * [`graph`] — finite simple graphs, constructors, transforms, and the
//!   exact recognizers the decision theorems condition on;
//! * [`words`] — canonical normal forms in `A(Γ)` under partial commutation,
//!   supports, cosets and pure factor decompositions;
//! * [`ext`] — finite induced subgraphs of the extension graph `Γ^e`, grown
//!   by star-doubling or by word radius;
//! * [`embed`] — the decision engine: sound obstructions, verified
//!   embedding certificates, and honest `Unknown`;
//! * [`io`] — edge-list/DOT/JSON formats shared with the CLI.

pub mod embed;
pub mod error;
pub mod ext;
pub mod graph;
pub mod io;
pub mod words;

pub use error::{Error, Result};
pub use graph::Graph;
