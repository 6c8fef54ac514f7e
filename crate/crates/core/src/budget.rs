//! Search caps and three-valued results.
//!
//! Both completion procedures may run forever and reversing may diverge, so
//! every search takes a [`SearchBudget`] and answers with an [`Outcome`]
//! that distinguishes a definite "no" from running out of budget.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Rewriting or expansion steps per search.
    pub max_steps: usize,
    /// Longest positive word: relation sides, oracle words.
    pub max_word_len: usize,
    /// Largest relation set a completion may build.
    pub max_relations: usize,
    /// Largest visited set of a breadth-first search.
    pub max_frontier: usize,
    /// Longest signed word explored while reversing.
    pub max_signed_len: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_steps: 1_000_000,
            max_word_len: 32,
            max_relations: 64,
            max_frontier: 200_000,
            max_signed_len: 64,
        }
    }
}

impl SearchBudget {
    /// Rejects zero caps.
    pub fn validated(self) -> Result<Self, BudgetLimit> {
        let checks = [
            (self.max_steps, BudgetLimit::Steps),
            (self.max_word_len, BudgetLimit::WordLength),
            (self.max_relations, BudgetLimit::Relations),
            (self.max_frontier, BudgetLimit::Frontier),
            (self.max_signed_len, BudgetLimit::SignedLength),
        ];
        match checks.iter().find(|(v, _)| *v == 0) {
            Some((_, dim)) => Err(*dim),
            None => Ok(self),
        }
    }

    pub fn with_max_word_len(mut self, n: usize) -> Self {
        self.max_word_len = n;
        self
    }

    pub fn with_max_relations(mut self, n: usize) -> Self {
        self.max_relations = n;
        self
    }

    pub fn with_max_steps(mut self, n: usize) -> Self {
        self.max_steps = n;
        self
    }

    pub fn with_max_frontier(mut self, n: usize) -> Self {
        self.max_frontier = n;
        self
    }

    pub fn with_max_signed_len(mut self, n: usize) -> Self {
        self.max_signed_len = n;
        self
    }
}

/// The budget dimension that stopped a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BudgetLimit {
    Steps,
    WordLength,
    Relations,
    Frontier,
    SignedLength,
}

impl BudgetLimit {
    pub fn name(self) -> &'static str {
        match self {
            BudgetLimit::Steps => "max-steps",
            BudgetLimit::WordLength => "max-len",
            BudgetLimit::Relations => "max-relations",
            BudgetLimit::Frontier => "max-frontier",
            BudgetLimit::SignedLength => "max-signed-len",
        }
    }
}

impl fmt::Display for BudgetLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Three-valued search result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T, N = ()> {
    Definite(T),
    DefiniteNo(N),
    BudgetExhausted(BudgetLimit),
}

impl<T, N> Outcome<T, N> {
    pub fn is_definite(&self) -> bool {
        matches!(self, Outcome::Definite(_))
    }

    pub fn is_definite_no(&self) -> bool {
        matches!(self, Outcome::DefiniteNo(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::BudgetExhausted(_))
    }

    pub fn definite(self) -> Option<T> {
        match self {
            Outcome::Definite(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U, N> {
        match self {
            Outcome::Definite(t) => Outcome::Definite(f(t)),
            Outcome::DefiniteNo(n) => Outcome::DefiniteNo(n),
            Outcome::BudgetExhausted(l) => Outcome::BudgetExhausted(l),
        }
    }
}

/// Counts work against `max_steps`.
#[derive(Clone, Debug)]
pub(crate) struct Meter {
    used: usize,
    max: usize,
}

impl Meter {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Meter {
            used: 0,
            max: budget.max_steps,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<(), BudgetLimit> {
        self.used += 1;
        if self.used > self.max {
            Err(BudgetLimit::Steps)
        } else {
            Ok(())
        }
    }
}

/// How a completion run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    Exhausted(BudgetLimit),
}

impl CompletionStatus {
    pub fn is_complete(self) -> bool {
        self == CompletionStatus::Complete
    }
}
