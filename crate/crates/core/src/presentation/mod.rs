//! Monoid presentations: an alphabet plus relations stored with the
//! deglex-greater side first.

mod file;
mod oracle;
mod pseudolength;

pub use file::{parse_pseudolength, PresentationFile};
pub use oracle::{oracle_equivalent, verify_derivation, Derivation, DerivationStep};
pub use pseudolength::{ordered_pairs, PseudolengthSpec, PseudolengthVerdict};

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::WordError;
use crate::words::{Alphabet, DeglexOrder, Letter, Word};

/// A relation `lhs = rhs` with `lhs > rhs` in deglex and both sides non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    lhs: Word,
    rhs: Word,
}

impl Relation {
    /// Orients `{u, v}`; `None` when the sides coincide.
    pub fn orient(u: Word, v: Word) -> Result<Option<Relation>, WordError> {
        if u.is_empty() || v.is_empty() {
            return Err(WordError::EmptySide);
        }
        Ok(match u.cmp(&v) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(Relation { lhs: u, rhs: v }),
            std::cmp::Ordering::Less => Some(Relation { lhs: v, rhs: u }),
        })
    }

    /// The leading (greater) word.
    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn sides(&self) -> (&Word, &Word) {
        (&self.lhs, &self.rhs)
    }

    pub fn mirror(&self) -> Relation {
        Relation::orient(self.lhs.mirror(), self.rhs.mirror())
            .expect("mirror keeps sides non-empty")
            .expect("mirror keeps sides distinct")
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        format!(
            "{} = {}",
            alphabet.format_word(&self.lhs),
            alphabet.format_word(&self.rhs)
        )
    }
}

/// [`Relation::orient`] after checking both words against `ord`'s alphabet.
pub fn orient(u: &Word, v: &Word, ord: &DeglexOrder) -> Result<Option<Relation>, WordError> {
    ord.alphabet().check_word(u)?;
    ord.alphabet().check_word(v)?;
    Relation::orient(u.clone(), v.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Arc<Alphabet>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        Presentation {
            alphabet,
            relations: Vec::new(),
        }
    }

    /// Builds a presentation from unordered word pairs. Trivial pairs and
    /// duplicates are dropped.
    pub fn from_pairs<I>(alphabet: Arc<Alphabet>, pairs: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        let mut p = Presentation::new(alphabet);
        for (u, v) in pairs {
            p.add_pair(u, v)?;
        }
        Ok(p)
    }

    /// Parses each `"<word> = <word>"` string; handy in tests and fixtures.
    pub fn parse(generators: &[&str], relations: &[&str]) -> Result<Self, WordError> {
        let alphabet = Arc::new(Alphabet::new(generators.iter().copied())?);
        let mut p = Presentation::new(alphabet.clone());
        for r in relations {
            let (l, rt) = r.split_once('=').ok_or(WordError::EmptySide)?;
            p.add_pair(alphabet.parse_word(l)?, alphabet.parse_word(rt)?)?;
        }
        Ok(p)
    }

    /// Adds `u = v`; returns whether the relation set changed.
    pub fn add_pair(&mut self, u: Word, v: Word) -> Result<bool, WordError> {
        self.alphabet.check_word(&u)?;
        self.alphabet.check_word(&v)?;
        match Relation::orient(u, v)? {
            Some(r) => Ok(self.add(r)),
            None => Ok(false),
        }
    }

    /// Adds an already-oriented relation unless present.
    pub fn add(&mut self, r: Relation) -> bool {
        if self.relations.contains(&r) {
            false
        } else {
            self.relations.push(r);
            true
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn order(&self) -> DeglexOrder {
        DeglexOrder::new(self.alphabet.clone())
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Same alphabet, every relation side reversed.
    pub fn mirror(&self) -> Presentation {
        let mut p = Presentation::new(self.alphabet.clone());
        for r in &self.relations {
            p.add(r.mirror());
        }
        p
    }

    /// Relation set as a set, for order-insensitive comparisons.
    pub fn relation_set(&self) -> HashSet<Relation> {
        self.relations.iter().cloned().collect()
    }

    pub fn display_relation(&self, r: &Relation) -> String {
        r.display(&self.alphabet)
    }

    /// `true` when every relation has equal-length sides.
    pub fn is_length_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| r.lhs.len() == r.rhs.len())
    }
}

/// Direct product: generators of `p1` then those of `p2` (renamed on
/// collision by appending `_2`, `_3`, ...), both relation sets, and
/// `s2 s1 = s1 s2` for every pair of generators from different factors.
pub fn direct_product(p1: &Presentation, p2: &Presentation) -> Presentation {
    let mut names: Vec<String> = p1.alphabet.names().to_vec();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    for name in p2.alphabet.names() {
        let mut candidate = name.clone();
        let mut k = 2;
        while taken.contains(&candidate) {
            candidate = format!("{name}_{k}");
            k += 1;
        }
        taken.insert(candidate.clone());
        names.push(candidate);
    }
    let alphabet = Arc::new(Alphabet::new(names).expect("renamed generators are distinct"));
    let offset = p1.alphabet.len() as u32;
    let shift = |w: &Word| -> Word { w.iter().map(|l| Letter(l.0 + offset)).collect() };

    let mut p = Presentation::new(alphabet);
    for r in &p1.relations {
        p.add(r.clone());
    }
    for r in &p2.relations {
        // shifting every letter by the same offset preserves deglex
        p.add(Relation {
            lhs: shift(&r.lhs),
            rhs: shift(&r.rhs),
        });
    }
    for s1 in p1.alphabet.letters() {
        for s2 in p2.alphabet.letters() {
            let s2 = Letter(s2.0 + offset);
            p.add(Relation {
                lhs: Word::from(vec![s2, s1]),
                rhs: Word::from(vec![s1, s2]),
            });
        }
    }
    p
}
