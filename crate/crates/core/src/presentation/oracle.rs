use std::collections::{HashMap, VecDeque};

use super::Presentation;
use crate::budget::{BudgetLimit, Outcome, SearchBudget};
use crate::words::{find_occurrences, Word};

/// One elementary move: at `position`, the side of relation `relation`
/// (`forward`: lhs replaced by rhs) is swapped for the other side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub position: usize,
    pub relation: usize,
    pub forward: bool,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub start: Word,
    pub steps: Vec<DerivationStep>,
}

impl Derivation {
    pub fn end(&self) -> &Word {
        self.steps.last().map_or(&self.start, |s| &s.word)
    }
}

/// All words obtained from `w` by one relation application, in order of
/// relation, direction (lhs to rhs first), position.
pub(crate) fn neighbours(p: &Presentation, w: &Word) -> Vec<(DerivationStep, Word)> {
    let mut out = Vec::new();
    for (i, r) in p.relations().iter().enumerate() {
        for (forward, from, to) in [(true, r.lhs(), r.rhs()), (false, r.rhs(), r.lhs())] {
            for pos in find_occurrences(w, from).expect("relation sides are non-empty") {
                let next = w.splice(pos, from.len(), to);
                out.push((
                    DerivationStep {
                        position: pos,
                        relation: i,
                        forward,
                        word: next.clone(),
                    },
                    next,
                ));
            }
        }
    }
    out
}

/// Breadth-first closure of `u` under two-way relation application.
/// `DefiniteNo` carries the size of the exhausted class and is only
/// returned when no word was discarded by a cap.
pub fn oracle_equivalent(
    p: &Presentation,
    u: &Word,
    v: &Word,
    budget: &SearchBudget,
) -> Outcome<Derivation, usize> {
    if u == v {
        return Outcome::Definite(Derivation {
            start: u.clone(),
            steps: Vec::new(),
        });
    }
    let mut parent: HashMap<Word, Option<(Word, DerivationStep)>> = HashMap::new();
    parent.insert(u.clone(), None);
    let mut queue = VecDeque::from([u.clone()]);
    let mut truncated: Option<BudgetLimit> = None;
    let mut steps = 0usize;

    while let Some(w) = queue.pop_front() {
        steps += 1;
        if steps > budget.max_steps {
            return Outcome::BudgetExhausted(BudgetLimit::Steps);
        }
        for (step, next) in neighbours(p, &w) {
            if next.len() > budget.max_word_len {
                truncated.get_or_insert(BudgetLimit::WordLength);
                continue;
            }
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= budget.max_frontier {
                return Outcome::BudgetExhausted(BudgetLimit::Frontier);
            }
            parent.insert(next.clone(), Some((w.clone(), step)));
            if &next == v {
                return Outcome::Definite(rebuild(&parent, u, v));
            }
            queue.push_back(next);
        }
    }
    match truncated {
        Some(limit) => Outcome::BudgetExhausted(limit),
        None => Outcome::DefiniteNo(parent.len()),
    }
}

fn rebuild(
    parent: &HashMap<Word, Option<(Word, DerivationStep)>>,
    u: &Word,
    v: &Word,
) -> Derivation {
    let mut steps = Vec::new();
    let mut cur = v.clone();
    while let Some(Some((prev, step))) = parent.get(&cur) {
        steps.push(step.clone());
        cur = prev.clone();
    }
    steps.reverse();
    Derivation {
        start: u.clone(),
        steps,
    }
}

/// Replays a derivation against `p`; `true` iff every step is a single
/// relation application producing the recorded word.
pub fn verify_derivation(p: &Presentation, d: &Derivation) -> bool {
    let mut cur = d.start.clone();
    for s in &d.steps {
        let Some(r) = p.relations().get(s.relation) else {
            return false;
        };
        let (from, to) = if s.forward {
            (r.lhs(), r.rhs())
        } else {
            (r.rhs(), r.lhs())
        };
        if s.position + from.len() > cur.len()
            || cur.slice(s.position, s.position + from.len()) != *from
        {
            return false;
        }
        let next = cur.splice(s.position, from.len(), to);
        if next != s.word {
            return false;
        }
        cur = next;
    }
    true
}
