//! File formats, verification reports and the command-line front end for
//! [`brieskorn_core`].

pub mod claims;
pub mod cli;
pub mod formats;
pub mod info;
pub mod report;

pub use brieskorn_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] brieskorn_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}
