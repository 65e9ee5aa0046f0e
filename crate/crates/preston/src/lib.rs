//! Finite inverse semigroups and the languages of their idempotent words.
//!
//! The concrete model is the symmetric inverse monoid: elements are injective
//! partial maps on `{0..n-1}`, composed left to right, so a word over a
//! generating set evaluates by a plain fold. From a generating set the crate
//! builds the full multiplication table together with shortest witness words,
//! and from there:
//!
//! * congruences (smallest containing a pair set, quotients, the greatest
//!   idempotent-pure congruence via context signatures),
//! * λ-semidirect products of one inverse semigroup acting on another by
//!   endomorphisms, with the generation-size bound checks that come with them,
//! * the idempotent problem as a regular language: DFA construction,
//!   minimization, syntactic monoid, and the E-unitary/group-language
//!   correspondence.
//!
//! Every runnable capability has a worked example under `examples/`; the
//! `preston` binary exposes the same operations over a JSON wire format.
//!
//! ```
//! use preston::semigroup::{brandt_b2, FiniteInverseSemigroup};
//!
//! let b2 = brandt_b2();
//! assert_eq!(b2.size(), 5);
//! assert_eq!(b2.idempotents().len(), 3);
//! ```

pub mod checks;
pub mod cli;
pub mod congruence;
pub mod corpus;
pub mod dfa;
pub mod io;
pub mod lambda;
pub mod oracle;
pub mod pbij;
pub mod semigroup;
pub mod suite;
pub mod syntactic;

pub use congruence::Congruence;
pub use dfa::Dfa;
pub use lambda::{EndomorphismAction, LambdaProduct};
pub use pbij::PartialBijection;
pub use semigroup::{FiniteInverseSemigroup, MultiplicationReport};
pub use syntactic::SyntacticAlgebra;

/// Error classes mirror the process exit codes of the command-line tool:
/// rejected input (1), violated mathematical invariant (2), exhausted
/// resource cap (3).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("rejected input: {0}")]
    Rejected(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Rejected(_) => 1,
            Error::Invariant(_) => 2,
            Error::Resource(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
