//! Gröbner-basis completion and word-reversing completion for finitely
//! presented monoids, with the word-problem solvers and cancellativity
//! tests built on them.

pub mod budget;
pub mod cancellativity;
pub mod error;
pub mod groebner;
pub mod presentation;
pub mod reversing;
pub mod words;

pub use budget::{BudgetLimit, CompletionStatus, Outcome, SearchBudget};
pub use presentation::{
    direct_product, Presentation, PresentationFile, PseudolengthSpec, Relation,
};
pub use words::{Alphabet, DeglexOrder, Letter, SignedLetter, SignedWord, Word};
