use std::collections::BTreeMap;

use super::{Presentation, Relation};
use crate::words::{Alphabet, Letter, Word};

/// A functional `λ(u) = |u| + Σ c(x,y)·#(x before y in u)` used as a
/// homogeneity certificate. `#(x before y in u)` counts index pairs `i < j`
/// with `u[i] = x` and `u[j] = y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PseudolengthSpec {
    #[default]
    PlainLength,
    Weighted(BTreeMap<(Letter, Letter), u64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudolengthVerdict {
    Valid,
    /// First relation on which the functional is not invariant.
    Invalid(Relation),
}

impl PseudolengthVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, PseudolengthVerdict::Valid)
    }
}

/// Number of index pairs `i < j` with `w[i] = x`, `w[j] = y`.
pub fn ordered_pairs(w: &Word, x: Letter, y: Letter) -> u64 {
    let mut seen_x = 0u64;
    let mut total = 0u64;
    for &l in w.iter() {
        if l == y {
            total += seen_x;
        }
        if l == x {
            seen_x += 1;
        }
    }
    total
}

impl PseudolengthSpec {
    /// Weighted functional from `(x, y, coefficient)` triples; zero
    /// coefficients are dropped.
    pub fn weighted<I: IntoIterator<Item = (Letter, Letter, u64)>>(terms: I) -> Self {
        let map: BTreeMap<_, _> = terms
            .into_iter()
            .filter(|t| t.2 > 0)
            .map(|(x, y, c)| ((x, y), c))
            .collect();
        if map.is_empty() {
            PseudolengthSpec::PlainLength
        } else {
            PseudolengthSpec::Weighted(map)
        }
    }

    pub fn value(&self, w: &Word) -> u64 {
        let base = w.len() as u64;
        match self {
            PseudolengthSpec::PlainLength => base,
            PseudolengthSpec::Weighted(c) => {
                base + c
                    .iter()
                    .map(|(&(x, y), &k)| k * ordered_pairs(w, x, y))
                    .sum::<u64>()
            }
        }
    }

    /// Generators that appear in some pair with a non-zero coefficient.
    fn weighted_letters(&self) -> Vec<Letter> {
        match self {
            PseudolengthSpec::PlainLength => Vec::new(),
            PseudolengthSpec::Weighted(c) => {
                let mut v: Vec<Letter> = c.keys().flat_map(|&(x, y)| [x, y]).collect();
                v.sort();
                v.dedup();
                v
            }
        }
    }

    /// Invariance under every relation: equal values on both sides, and equal
    /// multiplicities of every weighted generator (pairs straddling the
    /// rewritten factor only see those multiplicities).
    pub fn check(&self, p: &Presentation) -> PseudolengthVerdict {
        let letters = self.weighted_letters();
        for r in p.relations() {
            let (u, v) = r.sides();
            let same_value = self.value(u) == self.value(v);
            let same_counts = letters.iter().all(|&g| u.count(g) == v.count(g));
            if !(same_value && same_counts) {
                return PseudolengthVerdict::Invalid(r.clone());
            }
        }
        PseudolengthVerdict::Valid
    }

    /// The functional that evaluates mirrored words like `self` evaluates
    /// the originals.
    pub fn mirror(&self) -> PseudolengthSpec {
        match self {
            PseudolengthSpec::PlainLength => PseudolengthSpec::PlainLength,
            PseudolengthSpec::Weighted(c) => {
                PseudolengthSpec::Weighted(c.iter().map(|(&(x, y), &k)| ((y, x), k)).collect())
            }
        }
    }

    /// Text form used by presentation files, e.g. `length + 2*pairs(a,b)`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self {
            PseudolengthSpec::PlainLength => "length".to_string(),
            PseudolengthSpec::Weighted(c) => {
                let mut s = "length".to_string();
                for (&(x, y), &k) in c {
                    let (x, y) = (alphabet.name(x), alphabet.name(y));
                    if k == 1 {
                        s.push_str(&format!(" + pairs({x},{y})"));
                    } else {
                        s.push_str(&format!(" + {k}*pairs({x},{y})"));
                    }
                }
                s
            }
        }
    }
}
