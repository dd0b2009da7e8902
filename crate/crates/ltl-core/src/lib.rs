//! Shared substrate for the bounded LTL model-counting toolkit: abstract
//! syntax over a partitioned atom set, a text grammar with parser and
//! canonical printer, negation normal form, and subformula closure.

mod atom;
mod closure;
mod formula;
pub mod gen;
mod nnf;
mod parse;

pub use atom::{Atom, AtomKind, AtomSet, Letter, MAX_ATOMS};
pub use closure::{closure, indexed_closure};
pub use formula::{FNode, Formula};
pub use nnf::{desugar, negation_normal_form};
pub use parse::parse;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LtlError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: u32, col: u32, msg: String },
    #[error("unknown atom '{name}' at {line}:{col}")]
    UnknownAtomAt { line: u32, col: u32, name: String },
    #[error("unknown atom '{0}'")]
    UnknownAtom(String),
    #[error("invalid atom name '{0}'")]
    InvalidAtomName(String),
    #[error("duplicate atom '{0}'")]
    DuplicateAtom(String),
    #[error("atom set exceeds {} atoms", MAX_ATOMS)]
    TooManyAtoms,
}
