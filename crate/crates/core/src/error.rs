use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet has {0} characters, at most 9 are supported")]
    AlphabetTooLarge(usize),
    #[error("alphabet must contain at least one character")]
    EmptyAlphabet,
    #[error("duplicate character {0:?} in alphabet")]
    DuplicateCharacter(char),
    #[error("character {0:?} cannot be used in an alphabet")]
    InvalidCharacter(char),
    #[error("character {0:?} is not in the alphabet")]
    UnknownCharacter(char),
    #[error("a letter must contain at least one character")]
    EmptySet,
    #[error("value {0} is not a squarefree product of the alphabet's primes")]
    NotInAlphabet(u64),
    #[error("alphabet product {max_product} does not fit a {bits}-bit word")]
    WordTooNarrow { max_product: u32, bits: u32 },
    #[error("text and pattern use different alphabets")]
    AlphabetMismatch,
    #[error("indeterminate letter at position {position}")]
    IndeterminateLetterPresent { position: usize },
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("pattern length {m} exceeds text length {n}")]
    PatternLongerThanText { m: usize, n: usize },
    #[error("unbalanced bracket at byte {offset}")]
    UnbalancedBracket { offset: usize },
    #[error("empty bracket at byte {offset}")]
    EmptyBracket { offset: usize },
    #[error("character {0:?} repeated inside a bracket")]
    DuplicateInBracket(char),
    #[error("unknown IUPAC code {0:?}")]
    UnknownIupacCode(char),
    #[error("invalid generation spec: {0}")]
    InvalidSpec(String),
    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),
    #[error("algorithms disagree on instance (seed {seed}): {detail}")]
    MatchCountMismatch { seed: u64, detail: String },
    #[error("csv output failed: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
