use thiserror::Error;

use crate::syntax::Tense;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("lexicon line {line}: {message}")]
    Load { line: usize, message: String },
    #[error("unknown word `{0}`; define it in the lexicon")]
    UnknownWord(String),
    #[error("`{0}` is not a known past participle")]
    UnknownParticiple(String),
    #[error("tense {0} is not a simple (group 1) tense")]
    NotSimpleTense(Tense),
    #[error("unknown tense `{0}`")]
    UnknownTense(String),
    #[error("unknown agreement `{0}`")]
    UnknownAgreement(String),
}
