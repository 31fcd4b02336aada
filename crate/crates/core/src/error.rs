use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown layout `{name}` (valid choices: {valid})")]
    UnknownLayout { name: String, valid: String },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("insignificant literal {0:?}: not in the layout alphabet")]
    InsignificantLiteral(char),

    #[error("unmapped key {0:?}")]
    UnmappedKey(char),

    #[error("letter {0:?} is not on the keypad")]
    UnmappedLetter(char),

    #[error("invalid match options: {0}")]
    InvalidOptions(&'static str),

    #[error("session needs at least one entry")]
    EmptyEntryList,

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("target index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("entry {0:?} has no significant letters")]
    NoSignificantLetters(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: malformed csv: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("{}: no column named {column:?}", path.display())]
    MissingColumn { path: PathBuf, column: String },

    #[error("{}: no entries", path.display())]
    NoEntries { path: PathBuf },

    #[error("malformed report: {0}")]
    Report(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
