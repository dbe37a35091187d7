use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid {family} forest: {rule}")]
    Validation { family: String, rule: String },
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("unknown {kind} `{name}`; expected one of: {expected}")]
    UnknownName {
        kind: &'static str,
        name: String,
        expected: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn validation(family: impl Into<String>, rule: impl Into<String>) -> Self {
        Error::Validation {
            family: family.into(),
            rule: rule.into(),
        }
    }

    pub(crate) fn unknown(kind: &'static str, name: &str, expected: &[&str]) -> Self {
        Error::UnknownName {
            kind,
            name: name.to_string(),
            expected: expected.join(", "),
        }
    }
}
