//! JSON interchange and request handling for the exact Bergman
//! projection engines; the `bergman` binary is a thin wrapper around
//! [`run`].

pub mod api;
pub mod error;
pub mod json;

pub use api::{run, Command, DimsJson, Mode, Request, Response};
pub use error::{CliError, ErrorCode};
