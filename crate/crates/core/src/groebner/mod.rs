//! Noncommutative Gröbner bases for monoid presentations: reduction,
//! compositions, interreduction, completion and normal forms.

mod completion;
mod system;

pub use completion::{
    compose, enumerate_compositions, g_complete, is_reduced_groebner, CompletionEvent,
    CompositionSite, GCompletion,
};
pub use system::{
    g_equivalent, g_reduce_word, interreduce, reduce_relation_once, Change, Reduction,
    ReductionChain, RewriteSystem, Rule,
};

#[cfg(test)]
mod tests;
