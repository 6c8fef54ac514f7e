use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet has no generators")]
    EmptyAlphabet,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("`{0}` is not a valid generator name")]
    InvalidGeneratorName(String),
    #[error("unknown generator in token `{0}`")]
    UnknownToken(String),
    #[error("malformed exponent in token `{0}`")]
    MalformedExponent(String),
    #[error("inverse letter `{0}` not allowed in a positive word")]
    UnexpectedInverse(String),
    #[error("letter with rank {0} is not in the alphabet")]
    ForeignLetter(u32),
    #[error("cannot search for the empty word")]
    EmptyNeedle,
    #[error("relation sides must be non-empty")]
    EmptySide,
}

/// A presentation file failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `generators:` line before first relation")]
    MissingGenerators,
    #[error("`generators:` declared twice")]
    DuplicateGenerators,
    #[error("`pseudolength:` declared twice")]
    DuplicatePseudolength,
    #[error("malformed pseudolength term `{0}`")]
    BadPseudolength(String),
    #[error("expected `<word> = <word>`")]
    MissingEquals,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Reversing-completeness operations need a homogeneity certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("pseudolength certificate fails on relation {lhs} = {rhs}")]
    Invalid { lhs: String, rhs: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CancelError {
    #[error("presentation is not R-complete (witness {su} = {tv})")]
    NotRComplete { su: String, tv: String },
    #[error("presentation is not a reduced Gröbner basis")]
    NotReducedGroebner,
    #[error("Gröbner-basis check ran out of budget")]
    GroebnerCheckExhausted,
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}
