//! Cancellativity tests: the reversing criterion on R-complete
//! presentations, the shared-prefix obstruction on reduced Gröbner bases,
//! and a brute-force search over normal forms.

use std::collections::HashMap;

use crate::budget::{CompletionStatus, Outcome, SearchBudget};
use crate::error::{CancelError, CertificateError};
use crate::groebner::{is_reduced_groebner, RewriteSystem};
use crate::presentation::{Presentation, Relation};
use crate::reversing::{
    r_complete, r_completeness_check, reverse_to_empty, Certification, Completeness,
};
use crate::words::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A relation `s·u = s·v` (left) or `u·s = v·s` (right), split at `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedLetter {
    pub relation: Relation,
    pub s: Letter,
    pub u: Word,
    pub v: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cancellation {
    Cancellative,
    /// `u⁻¹v` does not reverse to ε.
    NotCancellative(SharedLetter),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    NotLeftCancellative(SharedLetter),
    /// Says nothing about cancellativity.
    NoObstruction,
}

fn shared_first_letter(r: &Relation) -> Option<SharedLetter> {
    let (l, r_) = r.sides();
    if l[0] != r_[0] {
        return None;
    }
    Some(SharedLetter {
        relation: r.clone(),
        s: l[0],
        u: l.slice(1, l.len()),
        v: r_.slice(1, r_.len()),
    })
}

fn mirror_shared(w: SharedLetter) -> SharedLetter {
    SharedLetter {
        relation: w.relation.mirror(),
        s: w.s,
        u: w.u.mirror(),
        v: w.v.mirror(),
    }
}

/// Reverses `u⁻¹v` for every relation `s·u = s·v`, in relation order.
fn shared_prefix_verdict(p: &Presentation, budget: &SearchBudget) -> Outcome<Cancellation> {
    let mut limit = None;
    for r in p.relations() {
        let Some(w) = shared_first_letter(r) else {
            continue;
        };
        match reverse_to_empty(&w.u, &w.v, p, budget) {
            Outcome::Definite(_) => {}
            Outcome::DefiniteNo(()) => return Outcome::Definite(Cancellation::NotCancellative(w)),
            Outcome::BudgetExhausted(l) => {
                limit.get_or_insert(l);
            }
        }
    }
    match limit {
        Some(l) => Outcome::BudgetExhausted(l),
        None => Outcome::Definite(Cancellation::Cancellative),
    }
}

/// Left cancellativity of an R-complete presentation. The completeness
/// criterion is run first; an incomplete presentation is refused.
pub fn left_cancellative_by_reversing(
    p: &Presentation,
    cert: &Certification,
    budget: &SearchBudget,
) -> Result<Outcome<Cancellation>, CancelError> {
    match r_completeness_check(p, cert, budget)? {
        Outcome::Definite(Completeness::Complete) => {}
        Outcome::Definite(Completeness::Incomplete { su, tv, .. }) => {
            let a = p.alphabet();
            return Err(CancelError::NotRComplete {
                su: a.format_word(&su),
                tv: a.format_word(&tv),
            });
        }
        Outcome::DefiniteNo(()) => unreachable!("the criterion has no negative result"),
        Outcome::BudgetExhausted(l) => return Ok(Outcome::BudgetExhausted(l)),
    }
    Ok(shared_prefix_verdict(p, budget))
}

pub fn right_cancellative_by_left_reversing(
    p: &Presentation,
    cert: &Certification,
    budget: &SearchBudget,
) -> Result<Outcome<Cancellation>, CancelError> {
    let out = left_cancellative_by_reversing(&p.mirror(), &cert.mirror(), budget)?;
    Ok(out.map(|c| match c {
        Cancellation::NotCancellative(w) => Cancellation::NotCancellative(mirror_shared(w)),
        c => c,
    }))
}

/// Verdict on a budgeted R-completion. Only as strong as `status`: when the
/// completion did not finish, the verdict is about the partial presentation.
#[derive(Clone, Debug)]
pub struct CompletedVerdict {
    pub side: Side,
    pub status: CompletionStatus,
    pub presentation: Presentation,
    pub added: usize,
    pub verdict: Outcome<Cancellation>,
}

/// Runs reversing completion on `p` (or on its mirror for the right side)
/// and evaluates the criterion on whatever it produced.
pub fn cancellative_after_completion(
    p: &Presentation,
    side: Side,
    cert: &Certification,
    budget: &SearchBudget,
) -> Result<CompletedVerdict, CertificateError> {
    let (q, c) = match side {
        Side::Left => (p.clone(), cert.clone()),
        Side::Right => (p.mirror(), cert.mirror()),
    };
    let run = r_complete(&q, &c, budget)?;
    let mut verdict = shared_prefix_verdict(&run.presentation, budget);
    let mut presentation = run.presentation;
    if side == Side::Right {
        verdict = verdict.map(|c| match c {
            Cancellation::NotCancellative(w) => Cancellation::NotCancellative(mirror_shared(w)),
            c => c,
        });
        presentation = presentation.mirror();
    }
    Ok(CompletedVerdict {
        side,
        status: run.status,
        presentation,
        added: run.log.len(),
        verdict,
    })
}

fn require_reduced_groebner(p: &Presentation, budget: &SearchBudget) -> Result<(), CancelError> {
    match is_reduced_groebner(p, budget) {
        Outcome::Definite(true) => Ok(()),
        Outcome::Definite(false) | Outcome::DefiniteNo(()) => Err(CancelError::NotReducedGroebner),
        Outcome::BudgetExhausted(_) => Err(CancelError::GroebnerCheckExhausted),
    }
}

/// A relation `s·u = s·v` with `u`, `v` non-empty in a reduced Gröbner
/// basis rules out left cancellation.
pub fn gcomplete_obstruction(
    p: &Presentation,
    budget: &SearchBudget,
) -> Result<Obstruction, CancelError> {
    require_reduced_groebner(p, budget)?;
    Ok(p.relations()
        .iter()
        .filter_map(shared_first_letter)
        .find(|w| !w.u.is_empty() && !w.v.is_empty())
        .map_or(Obstruction::NoObstruction, Obstruction::NotLeftCancellative))
}

/// All words of length at most `max_len`, in deglex order.
fn words_up_to(letters: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in letters {
                next.push(w.concat(&Word::from(vec![l])));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Smallest `(s, u, v)` with `u < v`, `|u|, |v| ≤ max_len`, `s·u` and `s·v`
/// sharing a normal form but `u`, `v` not. Normal forms come from `basis`,
/// which must be a reduced Gröbner basis of `p`.
pub fn witness_search(
    p: &Presentation,
    basis: &RewriteSystem,
    max_len: usize,
) -> Result<Option<(Letter, Word, Word)>, CancelError> {
    require_reduced_groebner(&basis.to_presentation(), &SearchBudget::default())?;
    let letters: Vec<Letter> = p.alphabet().letters().collect();
    let words = words_up_to(&letters, max_len);
    let nfs: Vec<Word> = words.iter().map(|w| basis.reduce_word(w)).collect();
    let mut best: Option<(Letter, Word, Word)> = None;
    for &s in &letters {
        let prefix = Word::from(vec![s]);
        // per class of s·w: the first word seen and the first word with a
        // different normal form
        let mut classes: HashMap<Word, (usize, Option<usize>)> = HashMap::new();
        for (i, w) in words.iter().enumerate() {
            let key = basis.reduce_word(&prefix.concat(w));
            let e = classes.entry(key).or_insert((i, None));
            if e.1.is_none() && nfs[e.0] != nfs[i] {
                e.1 = Some(i);
            }
        }
        let found = classes
            .values()
            .filter_map(|&(u, v)| v.map(|v| (u, v)))
            .min();
        if let Some((u, v)) = found {
            best = Some((s, words[u].clone(), words[v].clone()));
            break;
        }
    }
    Ok(best)
}
