use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ambiguous identification: {0} inequivalent candidates survive")]
    Ambiguous(usize),
    #[error("no consistent completion of the condensed data")]
    NoCompletion,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Error {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns `CapExceeded` when `size > cap`.
pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
