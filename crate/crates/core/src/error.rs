//! Error and violation types shared by the whole crate.
//!
//! Checks come in two flavours. Pure verdicts (`is_pseudo_transitive`,
//! `check_ght`, `check_phi`, ...) return [`Check`], i.e. `Ok(())` or the
//! least [`Violation`] in lexicographic witness order. Operations that can
//! also fail on malformed arguments or resource guards return
//! `Result<_, Error>`, with violations folded in as [`Error::Violation`].

use std::fmt;

use crate::graph::Vertex;

/// Which clause a [`Violation`] refutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    PseudoTransitivity,
    Transitivity,
    Reorientation,
    Phi,
    Psi,
    Theta,
    Sigma,
    Lazy,
    Lambda,
    SOverlap,
    Internal,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::PseudoTransitivity => "pseudo_transitivity",
            ViolationKind::Transitivity => "transitivity",
            ViolationKind::Reorientation => "reorientation",
            ViolationKind::Phi => "phi",
            ViolationKind::Psi => "psi",
            ViolationKind::Theta => "theta",
            ViolationKind::Sigma => "sigma",
            ViolationKind::Lazy => "lazy",
            ViolationKind::Lambda => "lambda",
            ViolationKind::SOverlap => "s_overlap",
            ViolationKind::Internal => "internal",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A refuted clause together with the vertices that witness the refutation.
///
/// The witnesses always suffice to re-verify the violated clause directly
/// against the inputs, and deciders report the lexicographically least
/// witness tuple so results are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witnesses: Vec<Vertex>,
}

impl Violation {
    pub fn new(kind: ViolationKind, witnesses: impl Into<Vec<Vertex>>) -> Self {
        Violation { kind, witnesses: witnesses.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for w in &self.witnesses {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Verdict of a decider: ok, or the least violation found.
pub type Check = Result<(), Violation>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments does not hold (out-of-range vertex,
    /// mismatched sizes, missing pattern, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An exhaustive operation refused to run because its size guard was
    /// exceeded. Oracles fail loudly instead of sampling.
    #[error("resource guard: {0}")]
    ResourceLimit(String),
    /// A malformed input file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A violated clause surfaced by an operation.
    #[error("violation: {0}")]
    Violation(Violation),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// The violation carried by this error, if any.
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Error::Violation(v) => Some(v),
            _ => None,
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}
