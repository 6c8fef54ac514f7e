//! Right word reversing on signed words: successors, bounded searches,
//! terminal forms, the completeness criterion and reversing completion.

mod completion;
mod diagram;

pub use completion::{
    r_complete, r_completeness_check, Certification, Completeness, RCompletion, RCompletionEvent,
};
pub use diagram::export_diagram;

use std::collections::{HashMap, HashSet, VecDeque};

use crate::budget::{BudgetLimit, Meter, Outcome, SearchBudget};
use crate::presentation::{Presentation, Relation};
use crate::words::{SignedLetter, SignedWord, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// `u⁻¹u` removed.
    Delete { u: Word },
    /// `u⁻¹v` replaced by `v'·u'⁻¹`, where `u·v' = v·u'` is `relation` read
    /// in one of its two orientations.
    Replace {
        u: Word,
        v: Word,
        v_prime: Word,
        u_prime: Word,
        relation: Relation,
    },
}

/// A rewrite of the factor starting at `position`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversingStep {
    pub position: usize,
    pub kind: StepKind,
}

impl ReversingStep {
    /// Letters of the rewritten factor: `(|u|, |v|)`.
    pub fn factor_shape(&self) -> (usize, usize) {
        match &self.kind {
            StepKind::Delete { u } => (u.len(), u.len()),
            StepKind::Replace { u, v, .. } => (u.len(), v.len()),
        }
    }

    /// The factor's replacement as a signed word.
    pub fn replacement(&self) -> SignedWord {
        match &self.kind {
            StepKind::Delete { .. } => SignedWord::empty(),
            StepKind::Replace {
                v_prime, u_prime, ..
            } => v_prime.to_signed().concat(&u_prime.inverse()),
        }
    }

    /// Applies the step, checking that the factor really is `u⁻¹v`.
    pub fn apply(&self, w: &SignedWord) -> Option<SignedWord> {
        let (u, v) = match &self.kind {
            StepKind::Delete { u } => (u, u),
            StepKind::Replace { u, v, .. } => (u, v),
        };
        let end = self.position + u.len() + v.len();
        if end > w.len() {
            return None;
        }
        let factor = u.inverse().concat(&v.to_signed());
        if w.letters()[self.position..end] != *factor.letters() {
            return None;
        }
        let mut out = w.letters()[..self.position].to_vec();
        out.extend_from_slice(self.replacement().letters());
        out.extend_from_slice(&w.letters()[end..]);
        Some(out.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversingTrace {
    pub start: SignedWord,
    pub steps: Vec<(ReversingStep, SignedWord)>,
}

impl ReversingTrace {
    pub fn new(start: SignedWord) -> Self {
        ReversingTrace {
            start,
            steps: Vec::new(),
        }
    }

    pub fn end(&self) -> &SignedWord {
        self.steps.last().map_or(&self.start, |s| &s.1)
    }

    /// Every step replays to its recorded result.
    pub fn verify(&self) -> bool {
        let mut cur = self.start.clone();
        for (step, next) in &self.steps {
            match step.apply(&cur) {
                Some(w) if &w == next => cur = w,
                _ => return false,
            }
        }
        true
    }
}

/// A terminal word `u·v⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalForm {
    pub u: Word,
    pub v: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalSet {
    /// Conforming forms sorted by `(u, v)` in deglex.
    pub forms: Vec<TerminalForm>,
    /// Words with a negative-positive boundary that no step applies to.
    pub stuck: Vec<SignedWord>,
}

/// Positive word spelled by `letters` read right to left, for a block of
/// negative letters `x⁻¹…`: `w[i-k..i]` is `u⁻¹` for the returned `u`.
fn negative_suffix(letters: &[SignedLetter], end: usize, k: usize) -> Option<Word> {
    if k > end {
        return None;
    }
    let block = &letters[end - k..end];
    if block.iter().any(|s| !s.inverse) {
        return None;
    }
    Some(block.iter().rev().map(|s| s.letter).collect())
}

fn positive_prefix(letters: &[SignedLetter], start: usize, l: usize) -> Option<Word> {
    if start + l > letters.len() {
        return None;
    }
    let block = &letters[start..start + l];
    if block.iter().any(|s| s.inverse) {
        return None;
    }
    Some(block.iter().map(|s| s.letter).collect())
}

fn matches_negative(letters: &[SignedLetter], end: usize, u: &[crate::words::Letter]) -> bool {
    u.len() <= end
        && u.iter()
            .enumerate()
            .all(|(i, &x)| letters[end - 1 - i] == SignedLetter::neg(x))
}

fn matches_positive(letters: &[SignedLetter], start: usize, v: &[crate::words::Letter]) -> bool {
    start + v.len() <= letters.len()
        && v.iter()
            .enumerate()
            .all(|(i, &x)| letters[start + i] == SignedLetter::pos(x))
}

/// All one-step reversings of `w`, in deterministic order: boundary
/// ascending; at each boundary deletions by length, then replacements by
/// relation index, orientation (lhs as `u·v'` first), `|u|`, `|v|`.
pub fn reversing_successors(w: &SignedWord, p: &Presentation) -> Vec<(ReversingStep, SignedWord)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for b in w.boundaries() {
        let mid = b + 1;
        let mut k = 1;
        while let (Some(u), Some(v)) = (
            negative_suffix(letters, mid, k),
            positive_prefix(letters, mid, k),
        ) {
            if u == v {
                let step = ReversingStep {
                    position: mid - k,
                    kind: StepKind::Delete { u },
                };
                let next = step.apply(w).expect("factor matches");
                out.push((step, next));
            }
            k += 1;
        }
        for r in p.relations() {
            for (left, right) in [(r.lhs(), r.rhs()), (r.rhs(), r.lhs())] {
                for k in 1..=left.len() {
                    if !matches_negative(letters, mid, &left[..k]) {
                        break;
                    }
                    for l in 1..=right.len() {
                        if !matches_positive(letters, mid, &right[..l]) {
                            break;
                        }
                        let step = ReversingStep {
                            position: mid - k,
                            kind: StepKind::Replace {
                                u: left.slice(0, k),
                                v: right.slice(0, l),
                                v_prime: left.slice(k, left.len()),
                                u_prime: right.slice(l, right.len()),
                                relation: r.clone(),
                            },
                        };
                        let next = step.apply(w).expect("factor matches");
                        out.push((step, next));
                    }
                }
            }
        }
    }
    out
}

/// A leading positive letter or a trailing negative one is never touched by
/// reversing, so such words cannot reach ε.
fn cannot_vanish(w: &SignedWord) -> bool {
    let l = w.letters();
    matches!(l.first(), Some(s) if !s.inverse) || matches!(l.last(), Some(s) if s.inverse)
}

type Parents = HashMap<SignedWord, Option<(SignedWord, ReversingStep)>>;

fn rebuild(parents: &Parents, start: &SignedWord, end: &SignedWord) -> ReversingTrace {
    let mut steps = Vec::new();
    let mut cur = end.clone();
    while let Some(Some((prev, step))) = parents.get(&cur) {
        steps.push((step.clone(), cur.clone()));
        cur = prev.clone();
    }
    steps.reverse();
    ReversingTrace {
        start: start.clone(),
        steps,
    }
}

/// Breadth-first search for a reversing of `u⁻¹v` to ε.
pub fn reverse_to_empty(
    u: &Word,
    v: &Word,
    p: &Presentation,
    budget: &SearchBudget,
) -> Outcome<ReversingTrace> {
    let mut meter = Meter::new(budget);
    reverse_to_empty_metered(u, v, p, budget, &mut meter)
}

pub(crate) fn reverse_to_empty_metered(
    u: &Word,
    v: &Word,
    p: &Presentation,
    budget: &SearchBudget,
    meter: &mut Meter,
) -> Outcome<ReversingTrace> {
    let start = u.inverse().concat(&v.to_signed());
    if start.is_empty() {
        return Outcome::Definite(ReversingTrace::new(start));
    }
    let mut parents: Parents = HashMap::new();
    parents.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    let mut truncated: Option<BudgetLimit> = None;
    while let Some(w) = queue.pop_front() {
        if let Err(l) = meter.tick() {
            return Outcome::BudgetExhausted(l);
        }
        for (step, next) in reversing_successors(&w, p) {
            if next.len() > budget.max_signed_len {
                truncated.get_or_insert(BudgetLimit::SignedLength);
                continue;
            }
            if parents.contains_key(&next) {
                continue;
            }
            if parents.len() >= budget.max_frontier {
                return Outcome::BudgetExhausted(BudgetLimit::Frontier);
            }
            parents.insert(next.clone(), Some((w.clone(), step)));
            if next.is_empty() {
                return Outcome::Definite(rebuild(&parents, &start, &next));
            }
            if !cannot_vanish(&next) {
                queue.push_back(next);
            }
        }
    }
    match truncated {
        Some(l) => Outcome::BudgetExhausted(l),
        None => Outcome::DefiniteNo(()),
    }
}

/// Every terminal word reachable from `w`.
pub fn terminal_forms(
    w: &SignedWord,
    p: &Presentation,
    budget: &SearchBudget,
) -> Outcome<TerminalSet> {
    let mut meter = Meter::new(budget);
    terminal_forms_metered(w, p, budget, &mut meter)
}

pub(crate) fn terminal_forms_metered(
    w: &SignedWord,
    p: &Presentation,
    budget: &SearchBudget,
    meter: &mut Meter,
) -> Outcome<TerminalSet> {
    let mut seen: HashSet<SignedWord> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    let mut forms = Vec::new();
    let mut stuck = Vec::new();
    while let Some(cur) = queue.pop_front() {
        if let Err(l) = meter.tick() {
            return Outcome::BudgetExhausted(l);
        }
        let succ = reversing_successors(&cur, p);
        if succ.is_empty() {
            match cur.as_positive_negative() {
                Some((u, v)) => forms.push(TerminalForm { u, v }),
                None => stuck.push(cur),
            }
            continue;
        }
        for (_, next) in succ {
            if next.len() > budget.max_signed_len {
                return Outcome::BudgetExhausted(BudgetLimit::SignedLength);
            }
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget.max_frontier {
                return Outcome::BudgetExhausted(BudgetLimit::Frontier);
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    forms.sort();
    stuck.sort();
    Outcome::Definite(TerminalSet { forms, stuck })
}

/// Follows the first successor at every step until a terminal word is
/// reached or a cap stops it.
pub fn reverse_first(
    w: &SignedWord,
    p: &Presentation,
    budget: &SearchBudget,
) -> (ReversingTrace, Option<BudgetLimit>) {
    let mut trace = ReversingTrace::new(w.clone());
    let mut meter = Meter::new(budget);
    loop {
        let cur = trace.end().clone();
        let Some((step, next)) = reversing_successors(&cur, p).into_iter().next() else {
            return (trace, None);
        };
        if let Err(l) = meter.tick() {
            return (trace, Some(l));
        }
        if next.len() > budget.max_signed_len {
            return (trace, Some(BudgetLimit::SignedLength));
        }
        trace.steps.push((step, next));
    }
}

/// Left reversing of `u v⁻¹`, computed as right reversing of the mirrored
/// words over the mirrored presentation; the trace is in mirrored
/// coordinates.
pub fn left_reverse_to_empty(
    u: &Word,
    v: &Word,
    p: &Presentation,
    budget: &SearchBudget,
) -> Outcome<ReversingTrace> {
    reverse_to_empty(&u.mirror(), &v.mirror(), &p.mirror(), budget)
}

#[cfg(test)]
mod tests;
