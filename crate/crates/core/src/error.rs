use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} supports at most {max} vertices, got {n}")]
    UnsupportedSize {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::UnsupportedSize { what, n, max })
    } else {
        Ok(())
    }
}
