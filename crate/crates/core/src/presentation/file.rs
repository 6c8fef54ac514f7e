use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::{Presentation, PseudolengthSpec};
use crate::error::{ParseError, ParseErrorKind};
use crate::words::Alphabet;

/// A parsed presentation file: the presentation plus its declared
/// pseudolength, if any.
///
/// ```text
/// # braid monoid B3
/// generators: a < b
/// pseudolength: length
/// b a b = a b a
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub pseudolength: Option<PseudolengthSpec>,
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut presentation: Option<Presentation> = None;
        let mut pseudo_text: Option<(usize, String)> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("generators:") {
                if presentation.is_some() {
                    return Err(err(line_no, ParseErrorKind::DuplicateGenerators));
                }
                let names = rest.split('<').map(str::trim);
                let alphabet = Alphabet::new(names).map_err(|e| err(line_no, e))?;
                presentation = Some(Presentation::new(Arc::new(alphabet)));
            } else if let Some(rest) = line.strip_prefix("pseudolength:") {
                if pseudo_text.is_some() {
                    return Err(err(line_no, ParseErrorKind::DuplicatePseudolength));
                }
                pseudo_text = Some((line_no, rest.trim().to_string()));
            } else {
                let p = presentation
                    .as_mut()
                    .ok_or_else(|| err(line_no, ParseErrorKind::MissingGenerators))?;
                let (l, r) = line
                    .split_once('=')
                    .ok_or_else(|| err(line_no, ParseErrorKind::MissingEquals))?;
                let a = p.alphabet().clone();
                let u = a.parse_word(l).map_err(|e| err(line_no, e))?;
                let v = a.parse_word(r).map_err(|e| err(line_no, e))?;
                p.add_pair(u, v).map_err(|e| err(line_no, e))?;
            }
        }

        let presentation = presentation.ok_or_else(|| {
            err(
                text.lines().count().max(1),
                ParseErrorKind::MissingGenerators,
            )
        })?;
        let pseudolength = match pseudo_text {
            None => None,
            Some((line_no, t)) => Some(
                parse_pseudolength(&t, presentation.alphabet())
                    .map_err(|kind| err(line_no, kind))?,
            ),
        };
        Ok(PresentationFile {
            presentation,
            pseudolength,
        })
    }

    /// Canonical text; parses back to an equal value.
    pub fn to_text(&self) -> String {
        let p = &self.presentation;
        let mut s = format!("generators: {}\n", p.alphabet().names().join(" < "));
        if let Some(spec) = &self.pseudolength {
            let _ = writeln!(s, "pseudolength: {}", spec.display(p.alphabet()));
        }
        for r in p.relations() {
            let _ = writeln!(s, "{}", p.display_relation(r));
        }
        s
    }
}

/// `length` optionally followed by `+ k*pairs(x,y)` terms; `k*` may be
/// omitted for a coefficient of one.
pub fn parse_pseudolength(
    text: &str,
    alphabet: &Alphabet,
) -> Result<PseudolengthSpec, ParseErrorKind> {
    let bad = |t: &str| ParseErrorKind::BadPseudolength(t.trim().to_string());
    let mut terms = text.split('+');
    let head = terms.next().unwrap_or("");
    if head.trim() != "length" {
        return Err(bad(head));
    }
    let mut coeffs: BTreeMap<_, u64> = BTreeMap::new();
    for term in terms {
        let t = term.trim();
        let (k, body) = match t.split_once('*') {
            Some((k, body)) => (k.trim().parse::<u64>().map_err(|_| bad(t))?, body.trim()),
            None => (1, t),
        };
        let inner = body
            .strip_prefix("pairs(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| bad(t))?;
        let (x, y) = inner.split_once(',').ok_or_else(|| bad(t))?;
        let x = alphabet.letter(x.trim()).ok_or_else(|| bad(t))?;
        let y = alphabet.letter(y.trim()).ok_or_else(|| bad(t))?;
        *coeffs.entry((x, y)).or_default() += k;
    }
    Ok(PseudolengthSpec::weighted(
        coeffs.into_iter().map(|((x, y), k)| (x, y, k)),
    ))
}
