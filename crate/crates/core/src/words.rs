//! Alphabets, positive and signed words, and the deglex ordering.
//!
//! Generators are identified by their position in the alphabet declaration,
//! which is also their rank in the letter order: the first declared generator
//! is the smallest. Words store ranks directly, so comparing two words under
//! deglex never needs the alphabet.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::WordError;

/// A generator, given by its 0-based rank in the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    rank: HashMap<String, Letter>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| !c.is_whitespace() && !"^'=<>#*(),+:".contains(c))
}

impl Alphabet {
    /// Builds an alphabet from names listed smallest first.
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            names: Vec::new(),
            rank: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if !valid_name(&name) {
                return Err(WordError::InvalidGeneratorName(name));
            }
            if out.rank.contains_key(&name) {
                return Err(WordError::DuplicateGenerator(name));
            }
            out.rank
                .insert(name.clone(), Letter(out.names.len() as u32));
            out.names.push(name);
        }
        if out.names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.rank()]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.rank.get(name).copied()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.rank() < self.names.len()
    }

    pub fn check_word(&self, w: &Word) -> Result<(), WordError> {
        match w.iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(WordError::ForeignLetter(l.0)),
            None => Ok(()),
        }
    }

    /// Word for a sequence of generator names.
    pub fn word(&self, names: &[&str]) -> Result<Word, WordError> {
        names
            .iter()
            .map(|n| {
                self.letter(n)
                    .ok_or_else(|| WordError::UnknownToken(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, count) = split_exponent(token)?;
            if name.ends_with('\'') {
                return Err(WordError::UnexpectedInverse(token.to_string()));
            }
            let l = self
                .letter(name)
                .ok_or_else(|| WordError::UnknownToken(token.to_string()))?;
            letters.extend(std::iter::repeat_n(l, count));
        }
        Ok(Word(letters))
    }

    pub fn parse_signed_word(&self, text: &str) -> Result<SignedWord, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, count) = split_exponent(token)?;
            let (name, inverse) = match name.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (name, false),
            };
            let l = self
                .letter(name)
                .ok_or_else(|| WordError::UnknownToken(token.to_string()))?;
            let sl = SignedLetter { letter: l, inverse };
            letters.extend(std::iter::repeat_n(sl, count));
        }
        Ok(SignedWord(letters))
    }

    /// Run-length text form, e.g. `b a^3 b`. The empty word formats as `""`.
    pub fn format_word(&self, w: &Word) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i + 1;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = self.name(w[i]);
            if j - i == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join(" ")
    }

    /// Like [`Alphabet::format_word`] but renders the empty word as `ε`.
    pub fn show_word(&self, w: &Word) -> String {
        if w.is_empty() {
            "ε".to_string()
        } else {
            self.format_word(w)
        }
    }

    pub fn format_signed(&self, w: &SignedWord) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        let s = w.letters();
        while i < s.len() {
            let mut j = i + 1;
            while j < s.len() && s[j] == s[i] {
                j += 1;
            }
            let mut tok = self.name(s[i].letter).to_string();
            if s[i].inverse {
                tok.push('\'');
            }
            if j - i > 1 {
                tok.push_str(&format!("^{}", j - i));
            }
            parts.push(tok);
            i = j;
        }
        parts.join(" ")
    }

    pub fn show_signed(&self, w: &SignedWord) -> String {
        if w.is_empty() {
            "ε".to_string()
        } else {
            self.format_signed(w)
        }
    }
}

fn split_exponent(token: &str) -> Result<(&str, usize), WordError> {
    match token.split_once('^') {
        None => Ok((token, 1)),
        Some((name, exp)) => {
            if name.is_empty() || exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WordError::MalformedExponent(token.to_string()));
            }
            let k = exp
                .parse::<usize>()
                .map_err(|_| WordError::MalformedExponent(token.to_string()))?;
            Ok((name, k))
        }
    }
}

/// A positive word. Its `Ord` is the deglex order induced by letter ranks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letter sequence reversed.
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn contains(&self, needle: &Word) -> bool {
        self.first_occurrence(needle).is_some()
    }

    /// Leftmost start index of `needle`, which must be non-empty.
    pub fn first_occurrence(&self, needle: &Word) -> Option<usize> {
        if needle.is_empty() || needle.len() > self.len() {
            return None;
        }
        self.0
            .windows(needle.len())
            .position(|w| w == needle.letters())
    }

    /// Returns `self` with `len` letters at `at` replaced by `by`.
    pub fn splice(&self, at: usize, len: usize, by: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + by.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&by.0);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }

    /// Embeds as the all-positive signed word.
    pub fn to_signed(&self) -> SignedWord {
        SignedWord(
            self.0
                .iter()
                .map(|&letter| SignedLetter {
                    letter,
                    inverse: false,
                })
                .collect(),
        )
    }

    /// The formal inverse `w⁻¹`.
    pub fn inverse(&self) -> SignedWord {
        self.to_signed().inverse()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl std::ops::Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn pos(letter: Letter) -> Self {
        SignedLetter {
            letter,
            inverse: false,
        }
    }

    pub fn neg(letter: Letter) -> Self {
        SignedLetter {
            letter,
            inverse: true,
        }
    }
}

/// A word over generators and their inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWord(Vec<SignedLetter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reverses the order and flips every sign.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(
            self.0
                .iter()
                .rev()
                .map(|s| SignedLetter {
                    letter: s.letter,
                    inverse: !s.inverse,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|s| !s.inverse)
    }

    /// Splits a word of the shape `u·v⁻¹` into `(u, v)`.
    pub fn as_positive_negative(&self) -> Option<(Word, Word)> {
        let split = self.0.iter().position(|s| s.inverse).unwrap_or(self.len());
        if self.0[split..].iter().any(|s| !s.inverse) {
            return None;
        }
        let u = self.0[..split].iter().map(|s| s.letter).collect();
        let v = self.0[split..].iter().rev().map(|s| s.letter).collect();
        Some((u, v))
    }

    /// Positions `i` with a negative letter at `i` and a positive one at `i + 1`.
    pub fn boundaries(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0].inverse && !w[1].inverse)
            .map(|(i, _)| i)
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<(), WordError> {
        match self.0.iter().find(|s| !alphabet.contains(s.letter)) {
            Some(s) => Err(WordError::ForeignLetter(s.letter.0)),
            None => Ok(()),
        }
    }
}

impl From<Vec<SignedLetter>> for SignedWord {
    fn from(v: Vec<SignedLetter>) -> Self {
        SignedWord(v)
    }
}

impl FromIterator<SignedLetter> for SignedWord {
    fn from_iter<T: IntoIterator<Item = SignedLetter>>(iter: T) -> Self {
        SignedWord(iter.into_iter().collect())
    }
}

/// Degree-then-lexicographic order over an alphabet's words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeglexOrder {
    alphabet: Arc<Alphabet>,
}

impl DeglexOrder {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        DeglexOrder { alphabet }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering, WordError> {
        self.alphabet.check_word(u)?;
        self.alphabet.check_word(v)?;
        Ok(u.cmp(v))
    }
}

/// All start indices of `needle` in `haystack`, ascending, overlaps included.
pub fn find_occurrences(haystack: &Word, needle: &Word) -> Result<Vec<usize>, WordError> {
    if needle.is_empty() {
        return Err(WordError::EmptyNeedle);
    }
    if needle.len() > haystack.len() {
        return Ok(Vec::new());
    }
    Ok(haystack
        .windows(needle.len())
        .enumerate()
        .filter(|(_, w)| *w == needle.letters())
        .map(|(i, _)| i)
        .collect())
}

/// Formats a word with its alphabet, for `{}` interpolation.
pub struct Shown<'a, T>(pub &'a Alphabet, pub &'a T);

impl fmt::Display for Shown<'_, Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.show_word(self.1))
    }
}

impl fmt::Display for Shown<'_, SignedWord> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.show_signed(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    /// All words of length <= n, generated independently of `Ord`.
    fn all_words(k: u32, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..k {
                    let mut v = w.letters().to_vec();
                    v.push(Letter(l));
                    next.push(Word::from(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn deglex_examples() {
        let a = Arc::new(ab());
        let ord = DeglexOrder::new(a.clone());
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(
            ord.compare(&w("b a^3 b"), &w("b a^4")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(ord.compare(&w("a b"), &w("a b")).unwrap(), Ordering::Equal);
        assert_eq!(ord.compare(&w("a b"), &w("b a")).unwrap(), Ordering::Less);
        let foreign = Word::from(vec![Letter(7)]);
        assert!(matches!(
            ord.compare(&foreign, &w("a")),
            Err(WordError::ForeignLetter(7))
        ));
    }

    #[test]
    fn deglex_agrees_with_enumeration() {
        // words of length <= 3 listed by length, each length in odometer order
        // with the last letter varying fastest: that is deglex by construction
        let words = all_words(2, 3);
        let mut by_len: Vec<Vec<Word>> = vec![Vec::new(); 4];
        for w in &words {
            by_len[w.len()].push(w.clone());
        }
        let mut expected = Vec::new();
        for layer in by_len {
            let mut layer = layer;
            layer.sort_by_key(|w| w.iter().fold(0usize, |acc, l| acc * 2 + l.rank()));
            expected.extend(layer);
        }
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, expected);
        let a = ab();
        let pos = |s: &str| sorted.iter().position(|w| *w == a.parse_word(s).unwrap());
        assert!(pos("a b") < pos("b a"));
    }

    #[test]
    fn parse_examples() {
        let a = ab();
        assert_eq!(
            a.parse_word("b a^3 b").unwrap(),
            a.word(&["b", "a", "a", "a", "b"]).unwrap()
        );
        assert_eq!(a.parse_word("").unwrap(), Word::empty());
        assert_eq!(a.parse_word("a^0 b").unwrap(), a.word(&["b"]).unwrap());
        assert!(matches!(a.parse_word("c"), Err(WordError::UnknownToken(_))));
        assert!(matches!(
            a.parse_word("a^x"),
            Err(WordError::MalformedExponent(_))
        ));
        assert!(matches!(
            a.parse_word("a^"),
            Err(WordError::MalformedExponent(_))
        ));
        assert!(a.parse_word("a'").is_err());
    }

    #[test]
    fn parse_signed_examples() {
        let a = ab();
        let la = Letter(0);
        let lb = Letter(1);
        assert_eq!(
            a.parse_signed_word("b' a b").unwrap().letters(),
            &[
                SignedLetter::neg(lb),
                SignedLetter::pos(la),
                SignedLetter::pos(lb)
            ]
        );
        assert_eq!(
            a.parse_signed_word("a' b^2").unwrap().letters(),
            &[
                SignedLetter::neg(la),
                SignedLetter::pos(lb),
                SignedLetter::pos(lb)
            ]
        );
        assert_eq!(
            a.parse_signed_word("b'^2").unwrap().letters(),
            &[SignedLetter::neg(lb), SignedLetter::neg(lb)]
        );
    }

    #[test]
    fn mirror_examples() {
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(w("b a c").mirror(), w("c a b"));
        assert_eq!(Word::empty().mirror(), Word::empty());
        assert_eq!(w("a a").mirror(), w("a a"));
    }

    #[test]
    fn occurrences() {
        let a = ab();
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(
            find_occurrences(&w("a a a"), &w("a a")).unwrap(),
            vec![0, 1]
        );
        assert_eq!(find_occurrences(&w("b a b"), &w("b a")).unwrap(), vec![0]);
        assert!(find_occurrences(&w("b a^3 b"), &w("b a b"))
            .unwrap()
            .is_empty());
        assert_eq!(
            find_occurrences(&w("a"), &Word::empty()),
            Err(WordError::EmptyNeedle)
        );
    }

    #[test]
    fn inverse_and_shape() {
        let a = ab();
        let w = a.parse_word("a b b").unwrap();
        let inv = w.inverse();
        assert_eq!(a.format_signed(&inv), "b'^2 a'");
        assert_eq!(inv.inverse(), w.to_signed());
        let uv = a.parse_signed_word("a^4 b' a'^3").unwrap();
        let (u, v) = uv.as_positive_negative().unwrap();
        assert_eq!(u, a.parse_word("a^4").unwrap());
        assert_eq!(v, a.parse_word("a^3 b").unwrap());
        assert!(a
            .parse_signed_word("a' b")
            .unwrap()
            .as_positive_negative()
            .is_none());
    }

    #[test]
    fn alphabet_validation() {
        assert_eq!(
            Alphabet::new(["a", "a"]),
            Err(WordError::DuplicateGenerator("a".into()))
        );
        assert_eq!(
            Alphabet::new(Vec::<String>::new()),
            Err(WordError::EmptyAlphabet)
        );
        assert!(Alphabet::new(["x^2"]).is_err());
        let braid = Alphabet::new(["s1", "s2", "s3"]).unwrap();
        assert_eq!(
            braid.format_word(&braid.parse_word("s2 s1 s1").unwrap()),
            "s2 s1^2"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn word(k: u32, max: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(0..k, 0..=max).prop_map(|v| v.into_iter().map(Letter).collect())
        }

        proptest! {
            #[test]
            fn totality(u in word(3, 6), v in word(3, 6)) {
                let c = u.cmp(&v);
                prop_assert_eq!(c == Ordering::Equal, u == v);
                prop_assert_eq!(v.cmp(&u), c.reverse());
            }

        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn admissible(a in word(3, 5), b in word(3, 5), l in word(3, 3), r in word(3, 3)) {
                prop_assume!(a != b);
                let (u, v) = if a < b { (a, b) } else { (b, a) };
                prop_assert!(l.concat(&u).concat(&r) < l.concat(&v).concat(&r));
            }
        }

        proptest! {

            #[test]
            fn format_parse_roundtrip(u in word(3, 8), signs in prop::collection::vec(any::<bool>(), 8)) {
                let a = Alphabet::new(["a", "b", "c"]).unwrap();
                prop_assert_eq!(a.parse_word(&a.format_word(&u)).unwrap(), u.clone());
                let s: SignedWord = u.iter().zip(signs.iter().cycle())
                    .map(|(&letter, &inverse)| SignedLetter { letter, inverse })
                    .collect();
                prop_assert_eq!(a.parse_signed_word(&a.format_signed(&s)).unwrap(), s);
            }

            #[test]
            fn mirror_involution(u in word(4, 10)) {
                prop_assert_eq!(u.mirror().mirror(), u);
            }
        }
    }
}
