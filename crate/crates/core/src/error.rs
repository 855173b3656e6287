// SPDX-License-Identifier: MIT OR Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("numerical failure at gamma = {gamma}: {detail}")]
    NumericalFailure { gamma: f64, detail: String },
    #[error("{solver} did not converge within {iterations} iterations")]
    IterationLimit {
        solver: &'static str,
        iterations: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInstance(msg.into())
    }

    pub(crate) fn parse(text: &str) -> Self {
        Error::Parse(text.to_string())
    }

    pub(crate) fn numerical(gamma: f64, detail: impl Into<String>) -> Self {
        Error::NumericalFailure {
            gamma,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
