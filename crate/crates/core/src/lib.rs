//! On-line transitive reorientation of pseudo-transitive oriented graphs.
//!
//! An oriented graph (*ograph*) has at most one arc between any two
//! vertices; it is *pseudo-transitive* when every two-arc path has
//! comparable endpoints. Every such graph can be reoriented into a strict
//! partial order, and this crate maintains one **incrementally**: vertices
//! arrive one at a time with their arcs to the past, and the engine places
//! each newcomer into the existing order without ever revisiting a
//! decision ([`engine::SmartStream`]).
//!
//! Around the engine sits the verification apparatus that certifies it on
//! small instances:
//!
//! - [`predicates`]: witness-chain deciders (phi/psi/theta/sigma), the
//!   global properties built from them, laziness, and the per-extension
//!   lambda condition;
//! - [`adversary`]: the obstruction gadgets and the staged closures that
//!   extend a defective triple into a certified dead end;
//! - [`oracle`]: exhaustive reorientation enumeration, extendibility
//!   decisions, and whole-graph enumeration with hard size guards;
//! - [`generators`]: fixtures, seeded random instances, relabeling;
//! - [`format`](mod@format): the `ograph v1` and `odelta v1` text formats;
//! - [`bench`](mod@bench): wall-clock measurement of the streaming engine.

pub mod adversary;
pub mod bench;
mod bits;
pub mod engine;
mod error;
pub mod format;
pub mod generators;
mod graph;
pub mod oracle;
mod order;
pub mod predicates;

pub use error::{Check, Error, Violation, ViolationKind};
pub use graph::{
    apply_delta, delta_is_pseudo_transitive, DeltaRel, ExtensionDelta, OGraph, Orientation, Vertex,
};
pub use order::{check_ght, Ght, Order};
