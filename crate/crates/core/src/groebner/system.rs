use std::sync::Arc;

use crate::budget::{BudgetLimit, Meter, Outcome, SearchBudget};
use crate::presentation::{Presentation, Relation};
use crate::words::{Alphabet, Word};

/// A rule with a persistent 1-based id. Ids are never reused, so a rule that
/// gets simplified is retired and its replacement gets a fresh id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: usize,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    next_id: usize,
    interreduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Reduced(Relation),
    Trivial,
    NoChange,
}

/// Replaces the leftmost occurrence of `by.lhs` in `target`, looking in the
/// lhs first, and re-orients.
pub fn reduce_relation_once(target: &Relation, by: &Relation) -> Reduction {
    let (l, r) = target.sides();
    let rewritten = if let Some(i) = l.first_occurrence(by.lhs()) {
        (l.splice(i, by.lhs().len(), by.rhs()), r.clone())
    } else if let Some(i) = r.first_occurrence(by.lhs()) {
        (l.clone(), r.splice(i, by.lhs().len(), by.rhs()))
    } else {
        return Reduction::NoChange;
    };
    match Relation::orient(rewritten.0, rewritten.1).expect("rules have non-empty sides") {
        Some(rel) => Reduction::Reduced(rel),
        None => Reduction::Trivial,
    }
}

/// A successful reduction to zero: rule ids applied in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionChain {
    pub rules: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Change {
    Simplified { old: usize, new: Rule },
    Removed { id: usize },
}

impl RewriteSystem {
    /// Rules numbered `1..` in presentation order; not yet interreduced.
    pub fn from_presentation(p: &Presentation) -> Self {
        let rules: Vec<Rule> = p
            .relations()
            .iter()
            .enumerate()
            .map(|(i, r)| Rule {
                id: i + 1,
                relation: r.clone(),
            })
            .collect();
        RewriteSystem {
            alphabet: p.alphabet().clone(),
            next_id: rules.len() + 1,
            rules,
            interreduced: false,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn relations(&self) -> impl Iterator<Item = &Relation> {
        self.rules.iter().map(|r| &r.relation)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_interreduced(&self) -> bool {
        self.interreduced
    }

    pub fn rule(&self, id: usize) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn to_presentation(&self) -> Presentation {
        let mut p = Presentation::new(self.alphabet.clone());
        for r in &self.rules {
            p.add(r.relation.clone());
        }
        p
    }

    /// Appends a relation under a fresh id unless an identical rule exists.
    pub fn push(&mut self, relation: Relation) -> Option<usize> {
        if self.rules.iter().any(|r| r.relation == relation) {
            return None;
        }
        let id = self.next_id;
        self.next_id += 1;
        self.rules.push(Rule { id, relation });
        self.interreduced = false;
        Some(id)
    }

    /// Reduces `(u, v)` with the lowest-indexed applicable rule until it
    /// becomes trivial (`Definite`) or no rule applies (`DefiniteNo` with the
    /// stuck relation).
    pub fn reduces_to_zero(
        &self,
        u: &Word,
        v: &Word,
        budget: &SearchBudget,
    ) -> Outcome<ReductionChain, Relation> {
        let mut meter = Meter::new(budget);
        match self.reduce_pair(u, v, &mut meter) {
            Ok(Ok(chain)) => Outcome::Definite(chain),
            Ok(Err(stuck)) => Outcome::DefiniteNo(stuck),
            Err(limit) => Outcome::BudgetExhausted(limit),
        }
    }

    pub(crate) fn reduce_pair(
        &self,
        u: &Word,
        v: &Word,
        meter: &mut Meter,
    ) -> Result<Result<ReductionChain, Relation>, BudgetLimit> {
        let mut chain = ReductionChain { rules: Vec::new() };
        let Some(mut cur) = Relation::orient(u.clone(), v.clone()).expect("non-empty sides") else {
            return Ok(Ok(chain));
        };
        'outer: loop {
            for rule in &self.rules {
                match reduce_relation_once(&cur, &rule.relation) {
                    Reduction::NoChange => continue,
                    Reduction::Trivial => {
                        chain.rules.push(rule.id);
                        return Ok(Ok(chain));
                    }
                    Reduction::Reduced(next) => {
                        meter.tick()?;
                        chain.rules.push(rule.id);
                        cur = next;
                        continue 'outer;
                    }
                }
            }
            return Ok(Err(cur));
        }
    }

    /// Reduces rules against each other until no side of any rule contains
    /// another rule's lhs. Returns the changes in the order they happened.
    pub fn interreduce(&mut self, budget: &SearchBudget) -> Result<Vec<Change>, BudgetLimit> {
        let mut meter = Meter::new(budget);
        self.interreduce_metered(&mut meter)
    }

    pub(crate) fn interreduce_metered(
        &mut self,
        meter: &mut Meter,
    ) -> Result<Vec<Change>, BudgetLimit> {
        let mut changes = Vec::new();
        'restart: loop {
            for i in 0..self.rules.len() {
                for j in 0..self.rules.len() {
                    if i == j {
                        continue;
                    }
                    let red =
                        reduce_relation_once(&self.rules[i].relation, &self.rules[j].relation);
                    if red == Reduction::NoChange {
                        continue;
                    }
                    meter.tick()?;
                    let old = self.rules.remove(i);
                    match red {
                        Reduction::Reduced(rel)
                            if !self.rules.iter().any(|r| r.relation == rel) =>
                        {
                            let new = Rule {
                                id: self.next_id,
                                relation: rel,
                            };
                            self.next_id += 1;
                            self.rules.insert(i, new.clone());
                            changes.push(Change::Simplified { old: old.id, new });
                        }
                        _ => changes.push(Change::Removed { id: old.id }),
                    }
                    continue 'restart;
                }
            }
            break;
        }
        self.interreduced = true;
        Ok(changes)
    }

    /// Leftmost occurrence of the lowest-indexed applicable rule, repeated.
    pub fn reduce_word(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        'outer: loop {
            for rule in &self.rules {
                let (l, r) = rule.relation.sides();
                if let Some(i) = cur.first_occurrence(l) {
                    cur = cur.splice(i, l.len(), r);
                    continue 'outer;
                }
            }
            return cur;
        }
    }
}

/// G-reduction of `w`.
pub fn g_reduce_word(w: &Word, system: &RewriteSystem) -> Word {
    system.reduce_word(w)
}

/// Equal G-reductions. Decides the word problem only when `system` is a
/// Gröbner basis.
pub fn g_equivalent(u: &Word, v: &Word, system: &RewriteSystem) -> bool {
    system.reduce_word(u) == system.reduce_word(v)
}

/// Standalone interreduction of a copy of `system`.
pub fn interreduce(system: &RewriteSystem, budget: &SearchBudget) -> Outcome<RewriteSystem> {
    let mut s = system.clone();
    match s.interreduce(budget) {
        Ok(_) => Outcome::Definite(s),
        Err(limit) => Outcome::BudgetExhausted(limit),
    }
}
