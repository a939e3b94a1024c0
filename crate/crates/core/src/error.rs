use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force routine was asked for more work than its configured cap allows.
    #[error("capacity exceeded: {what} needs {requested}, cap is {cap}")]
    Capacity {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    /// A coefficient was requested beyond the stored truncation of a series.
    #[error("coefficient x^{i} s^{j} is outside the truncation x^{x_trunc} s^{s_trunc}")]
    Truncation {
        i: usize,
        j: usize,
        x_trunc: usize,
        s_trunc: usize,
    },

    /// An identity that must hold by construction did not.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
