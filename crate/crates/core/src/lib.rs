//! Exact Ringel–Hall algebra computations for representations of quivers
//! over small finite fields, their generic (quantum) versions, and the
//! explicit twisted algebras built from an Euler form.

pub mod coeffring;
pub mod element;
pub mod error;
pub mod hallalg;
pub mod hallnum;
pub mod poset;
pub mod quantumhall;
pub mod quiver;
pub mod repfield;
pub mod report;
pub mod twistedalg;
pub mod verify;

pub use error::{Error, Result};
