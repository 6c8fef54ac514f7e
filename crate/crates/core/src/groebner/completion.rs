use std::collections::HashSet;
use std::fmt::Write as _;

use super::system::{Change, RewriteSystem, Rule};
use crate::budget::{BudgetLimit, CompletionStatus, Meter, Outcome, SearchBudget};
use crate::presentation::{Presentation, Relation};
use crate::words::{Alphabet, Word};

/// Overlap of `left.lhs = x·y` with `right.lhs = y·z`, `y` non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSite {
    pub left: Relation,
    pub right: Relation,
    pub overlap: Word,
}

/// All non-empty `y` that are a suffix of `r1.lhs` and a prefix of
/// `r2.lhs`, shortest first.
pub fn enumerate_compositions(r1: &Relation, r2: &Relation) -> Vec<CompositionSite> {
    let (a, b) = (r1.lhs(), r2.lhs());
    (1..=a.len().min(b.len()))
        .filter(|&k| a[a.len() - k..] == b[..k])
        .map(|k| CompositionSite {
            left: r1.clone(),
            right: r2.clone(),
            overlap: b.slice(0, k),
        })
        .collect()
}

/// `(x·right.rhs, left.rhs·z)`, not oriented.
pub fn compose(site: &CompositionSite) -> (Word, Word) {
    let k = site.overlap.len();
    let (l, r) = (site.left.lhs(), site.right.lhs());
    let x = l.slice(0, l.len() - k);
    let z = r.slice(k, r.len());
    (x.concat(site.right.rhs()), site.left.rhs().concat(&z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionEvent {
    Added {
        rule: Rule,
        left: usize,
        right: usize,
        overlap: Word,
    },
    Simplified {
        old: usize,
        new: Rule,
    },
    Removed {
        id: usize,
    },
}

impl CompletionEvent {
    pub fn display(&self, a: &Alphabet) -> String {
        match self {
            CompletionEvent::Added {
                rule,
                left,
                right,
                overlap,
            } => format!(
                "+ {}  (from {left}∘{right} overlap {})",
                rule.relation.display(a),
                a.format_word(overlap)
            ),
            CompletionEvent::Simplified { old, new } => {
                format!("~ {old} -> {}: {}", new.id, new.relation.display(a))
            }
            CompletionEvent::Removed { id } => format!("- {id}"),
        }
    }
}

impl From<Change> for CompletionEvent {
    fn from(c: Change) -> Self {
        match c {
            Change::Simplified { old, new } => CompletionEvent::Simplified { old, new },
            Change::Removed { id } => CompletionEvent::Removed { id },
        }
    }
}

#[derive(Clone, Debug)]
pub struct GCompletion {
    pub status: CompletionStatus,
    pub system: RewriteSystem,
    pub log: Vec<CompletionEvent>,
    /// Compositions left out in the final pass because their reduced lhs
    /// exceeded `max_word_len`.
    pub skipped: usize,
}

impl GCompletion {
    pub fn outcome(&self) -> Outcome<&RewriteSystem> {
        match self.status {
            CompletionStatus::Complete => Outcome::Definite(&self.system),
            CompletionStatus::Exhausted(l) => Outcome::BudgetExhausted(l),
        }
    }

    /// Relations introduced by compositions, in the order they were added.
    pub fn added(&self) -> Vec<&Relation> {
        self.log
            .iter()
            .filter_map(|e| match e {
                CompletionEvent::Added { rule, .. } => Some(&rule.relation),
                _ => None,
            })
            .collect()
    }

    pub fn log_text(&self) -> String {
        let a = self.system.alphabet();
        let mut s = String::new();
        for e in &self.log {
            let _ = writeln!(s, "{}", e.display(a));
        }
        s
    }
}

struct Site {
    left: usize,
    right: usize,
    overlap_len: usize,
    key: Word,
}

fn sites(system: &RewriteSystem) -> Vec<Site> {
    let rules = system.rules();
    let mut out = Vec::new();
    for l in rules {
        for r in rules {
            for site in enumerate_compositions(&l.relation, &r.relation) {
                out.push(Site {
                    left: l.id,
                    right: r.id,
                    overlap_len: site.overlap.len(),
                    key: l.relation.lhs().concat(r.relation.lhs()),
                });
            }
        }
    }
    // pair order on lhs·lhs, then shorter overlap, then rule ids
    out.sort_by(|a, b| {
        a.key
            .cmp(&b.key)
            .then(a.overlap_len.cmp(&b.overlap_len))
            .then(a.left.cmp(&b.left))
            .then(a.right.cmp(&b.right))
    });
    out
}

fn site_of(system: &RewriteSystem, s: &Site) -> CompositionSite {
    let l = &system.rule(s.left).expect("live rule").relation;
    let r = &system.rule(s.right).expect("live rule").relation;
    CompositionSite {
        left: l.clone(),
        right: r.clone(),
        overlap: r.lhs().slice(0, s.overlap_len),
    }
}

enum Scan {
    New(Site, Relation),
    Clean,
}

/// First site, in pair order, whose composition does not reduce to zero and
/// whose reduced lhs fits the length cap. Sites are marked processed.
fn scan(
    system: &RewriteSystem,
    processed: &mut HashSet<(usize, usize, usize)>,
    budget: &SearchBudget,
    meter: &mut Meter,
    skipped: &mut usize,
) -> Result<Scan, BudgetLimit> {
    for s in sites(system) {
        if !processed.insert((s.left, s.right, s.overlap_len)) {
            continue;
        }
        meter.tick()?;
        let (p, q) = compose(&site_of(system, &s));
        if let Err(stuck) = system.reduce_pair(&p, &q, meter)? {
            if stuck.lhs().len() > budget.max_word_len {
                *skipped += 1;
                continue;
            }
            return Ok(Scan::New(s, stuck));
        }
    }
    Ok(Scan::Clean)
}

/// Gröbner completion: interreduce, add the reduced composition of the
/// smallest pending pair, repeat. Ends `Complete` only after a full pass in
/// which every composition reduces to zero and nothing was skipped.
pub fn g_complete(p: &Presentation, budget: &SearchBudget) -> GCompletion {
    let mut system = RewriteSystem::from_presentation(p);
    let mut log: Vec<CompletionEvent> = Vec::new();
    let mut meter = Meter::new(budget);
    let mut skipped = 0usize;
    let finish = |status, system, log, skipped| GCompletion {
        status,
        system,
        log,
        skipped,
    };

    match system.interreduce_metered(&mut meter) {
        Ok(ch) => log.extend(ch.into_iter().map(Into::into)),
        Err(l) => return finish(CompletionStatus::Exhausted(l), system, log, skipped),
    }
    let mut processed = HashSet::new();
    let mut verifying = false;
    loop {
        let found = match scan(&system, &mut processed, budget, &mut meter, &mut skipped) {
            Ok(f) => f,
            Err(l) => return finish(CompletionStatus::Exhausted(l), system, log, skipped),
        };
        let (site, rel) = match found {
            Scan::New(site, rel) => (site, rel),
            Scan::Clean if verifying => {
                let status = if skipped > 0 {
                    CompletionStatus::Exhausted(BudgetLimit::WordLength)
                } else {
                    CompletionStatus::Complete
                };
                return finish(status, system, log, skipped);
            }
            Scan::Clean => {
                // recheck every site against the final system
                verifying = true;
                processed.clear();
                skipped = 0;
                continue;
            }
        };
        verifying = false;
        if system.len() >= budget.max_relations {
            return finish(
                CompletionStatus::Exhausted(BudgetLimit::Relations),
                system,
                log,
                skipped,
            );
        }
        let id = system
            .push(rel.clone())
            .expect("a stuck composition is not a rule");
        log.push(CompletionEvent::Added {
            rule: Rule { id, relation: rel },
            left: site.left,
            right: site.right,
            overlap: system
                .rule(site.right)
                .expect("live")
                .relation
                .lhs()
                .slice(0, site.overlap_len),
        });
        match system.interreduce_metered(&mut meter) {
            Ok(ch) => log.extend(ch.into_iter().map(Into::into)),
            Err(l) => return finish(CompletionStatus::Exhausted(l), system, log, skipped),
        }
    }
}

/// Interreduced and every composition reduces to zero.
pub fn is_reduced_groebner(p: &Presentation, budget: &SearchBudget) -> Outcome<bool> {
    let system = RewriteSystem::from_presentation(p);
    let mut reduced = system.clone();
    let mut meter = Meter::new(budget);
    if let Err(l) = reduced.interreduce_metered(&mut meter) {
        return Outcome::BudgetExhausted(l);
    }
    let as_set = |s: &RewriteSystem| s.relations().cloned().collect::<HashSet<_>>();
    if as_set(&reduced) != as_set(&system) {
        return Outcome::Definite(false);
    }
    for s in sites(&system) {
        let (p, q) = compose(&site_of(&system, &s));
        match system.reduce_pair(&p, &q, &mut meter) {
            Err(l) => return Outcome::BudgetExhausted(l),
            Ok(Err(_)) => return Outcome::Definite(false),
            Ok(Ok(_)) => {}
        }
    }
    Outcome::Definite(true)
}
