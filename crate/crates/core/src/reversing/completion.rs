use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use super::{reverse_to_empty_metered, terminal_forms_metered};
use crate::budget::{BudgetLimit, CompletionStatus, Meter, Outcome, SearchBudget};
use crate::error::CertificateError;
use crate::presentation::{Presentation, PseudolengthSpec, PseudolengthVerdict, Relation};
use crate::words::{Alphabet, Letter, SignedLetter, SignedWord, Word};

/// Homogeneity hypothesis under which the criterion is run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified(PseudolengthSpec),
    /// Run without a certificate; verdicts are not backed by the criterion's
    /// hypothesis and reports say so.
    Uncertified,
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }

    pub fn mirror(&self) -> Certification {
        match self {
            Certification::Certified(spec) => Certification::Certified(spec.mirror()),
            Certification::Uncertified => Certification::Uncertified,
        }
    }

    fn require(&self, p: &Presentation) -> Result<(), CertificateError> {
        if let Certification::Certified(spec) = self {
            if let PseudolengthVerdict::Invalid(r) = spec.check(p) {
                let a = p.alphabet();
                return Err(CertificateError::Invalid {
                    lhs: a.show_word(r.lhs()),
                    rhs: a.show_word(r.rhs()),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    /// `s·u ≡ t·v` but `(su)⁻¹tv` does not reverse to ε; `s⁻¹ r r⁻¹ t`
    /// reverses to `u·v⁻¹`.
    Incomplete {
        su: Word,
        tv: Word,
        triple: (Letter, Letter, Letter),
    },
}

struct Scan {
    witness: Option<(Word, Word, (Letter, Letter, Letter))>,
    inconclusive: Option<BudgetLimit>,
}

fn scan(p: &Presentation, budget: &SearchBudget, skip: &HashSet<(Word, Word)>) -> Scan {
    let mut memo: HashMap<(Word, Word), bool> = HashMap::new();
    let mut inconclusive = None;
    let gens: Vec<Letter> = p.alphabet().letters().collect();
    for &s in &gens {
        for &t in &gens {
            for &r in &gens {
                let w: SignedWord = vec![
                    SignedLetter::neg(s),
                    SignedLetter::pos(r),
                    SignedLetter::neg(r),
                    SignedLetter::pos(t),
                ]
                .into();
                let mut meter = Meter::new(budget);
                let set = match terminal_forms_metered(&w, p, budget, &mut meter) {
                    Outcome::Definite(set) => set,
                    Outcome::BudgetExhausted(l) => {
                        inconclusive.get_or_insert(l);
                        continue;
                    }
                    Outcome::DefiniteNo(()) => {
                        unreachable!("terminal_forms has no negative result")
                    }
                };
                for f in set.forms {
                    let su = Word::from(vec![s]).concat(&f.u);
                    let tv = Word::from(vec![t]).concat(&f.v);
                    if su == tv || skip.contains(&(su.clone(), tv.clone())) {
                        continue;
                    }
                    let key = (su.clone(), tv.clone());
                    let ok = match memo.get(&key) {
                        Some(&ok) => ok,
                        None => {
                            let mut meter = Meter::new(budget);
                            match reverse_to_empty_metered(&su, &tv, p, budget, &mut meter) {
                                Outcome::Definite(_) => {
                                    memo.insert(key, true);
                                    true
                                }
                                Outcome::DefiniteNo(()) => {
                                    memo.insert(key, false);
                                    false
                                }
                                Outcome::BudgetExhausted(l) => {
                                    inconclusive.get_or_insert(l);
                                    continue;
                                }
                            }
                        }
                    };
                    if !ok {
                        return Scan {
                            witness: Some((su, tv, (s, t, r))),
                            inconclusive,
                        };
                    }
                }
            }
        }
    }
    Scan {
        witness: None,
        inconclusive,
    }
}

/// The completeness criterion over all generator triples `(s, t, r)`,
/// `s = t` included. Returns the first definite witness in triple order;
/// `BudgetExhausted` when there is none but some sub-search was cut short.
pub fn r_completeness_check(
    p: &Presentation,
    cert: &Certification,
    budget: &SearchBudget,
) -> Result<Outcome<Completeness>, CertificateError> {
    cert.require(p)?;
    let sc = scan(p, budget, &HashSet::new());
    Ok(match (sc.witness, sc.inconclusive) {
        (Some((su, tv, triple)), _) => {
            Outcome::Definite(Completeness::Incomplete { su, tv, triple })
        }
        (None, Some(l)) => Outcome::BudgetExhausted(l),
        (None, None) => Outcome::Definite(Completeness::Complete),
    })
}

/// A relation added by reversing completion, remembered as the pair
/// `su = tv` found by the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCompletionEvent {
    pub relation: Relation,
    pub su: Word,
    pub tv: Word,
    pub triple: (Letter, Letter, Letter),
}

impl RCompletionEvent {
    pub fn display(&self, a: &Alphabet) -> String {
        let (s, t, r) = self.triple;
        format!(
            "+ {}  (from triple {},{},{}: {} = {})",
            self.relation.display(a),
            a.name(s),
            a.name(t),
            a.name(r),
            a.format_word(&self.su),
            a.format_word(&self.tv)
        )
    }
}

#[derive(Clone, Debug)]
pub struct RCompletion {
    pub status: CompletionStatus,
    pub presentation: Presentation,
    pub log: Vec<RCompletionEvent>,
    pub certified: bool,
    /// Witnesses left out because they exceed `max_word_len`.
    pub skipped: Vec<(Word, Word)>,
    /// A sub-search ran out of budget during the last check.
    pub inconclusive: Option<BudgetLimit>,
}

impl RCompletion {
    pub fn added(&self) -> Vec<&Relation> {
        self.log.iter().map(|e| &e.relation).collect()
    }

    pub fn log_text(&self) -> String {
        let a = self.presentation.alphabet();
        let mut s = String::new();
        for e in &self.log {
            let _ = writeln!(s, "{}", e.display(a));
        }
        s
    }
}

/// Reversing completion: add the criterion's witness and repeat until the
/// criterion passes or a cap is hit. Witnesses longer than `max_word_len`
/// are skipped, and an inconclusive sub-search does not stop the run.
pub fn r_complete(
    p: &Presentation,
    cert: &Certification,
    budget: &SearchBudget,
) -> Result<RCompletion, CertificateError> {
    cert.require(p)?;
    let mut pres = p.clone();
    let mut log = Vec::new();
    let mut skip: HashSet<(Word, Word)> = HashSet::new();
    let mut skipped = Vec::new();
    loop {
        let sc = scan(&pres, budget, &skip);
        let done = |status| RCompletion {
            status,
            presentation: pres.clone(),
            log: log.clone(),
            certified: cert.is_certified(),
            skipped: skipped.clone(),
            inconclusive: sc.inconclusive,
        };
        let Some((su, tv, triple)) = sc.witness else {
            let status = if !skipped.is_empty() {
                CompletionStatus::Exhausted(BudgetLimit::WordLength)
            } else if let Some(l) = sc.inconclusive {
                CompletionStatus::Exhausted(l)
            } else {
                CompletionStatus::Complete
            };
            return Ok(done(status));
        };
        if su.len().max(tv.len()) > budget.max_word_len {
            skip.insert((su.clone(), tv.clone()));
            skipped.push((su, tv));
            continue;
        }
        if pres.len() >= budget.max_relations {
            return Ok(done(CompletionStatus::Exhausted(BudgetLimit::Relations)));
        }
        let relation = Relation::orient(su.clone(), tv.clone())
            .expect("non-empty")
            .expect("distinct");
        pres.add(relation.clone());
        log.push(RCompletionEvent {
            relation,
            su,
            tv,
            triple,
        });
    }
}
