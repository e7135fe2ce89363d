use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use bergman_cli::api::{run, Command, Mode, Request, Response};
use bergman_cli::error::{CliError, ErrorCode};
use bergman_cli::json::{DomainJson, PolyJson};

/// Exact Bergman projections of polynomials with orthogonality
/// certificates.
#[derive(Parser)]
#[command(name = "bergman", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    /// Write the response JSON to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Project a polynomial onto the holomorphic (or polyharmonic)
    /// subspace, emitting a certificate and a verification report.
    Project {
        /// Domain JSON file.
        #[arg(long)]
        domain: PathBuf,
        /// Polynomial JSON file.
        #[arg(long)]
        poly: PathBuf,
        /// auto | complex | reinhardt | polyharmonic.
        #[arg(long, default_value = "auto")]
        mode: String,
        /// Polyharmonic order m.
        #[arg(long)]
        order: Option<u32>,
        /// Skip the orthogonality report.
        #[arg(long)]
        no_verify: bool,
    },
    /// Project on a transported domain V = f(Ω).
    Transport {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Exact point membership test.
    Member {
        #[arg(long)]
        domain: PathBuf,
        /// Comma-separated coordinates, e.g. "91/100,1/10" or "1/2+1/3i,0".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Dimensions of the degree-bounded polynomial spaces.
    Dims {
        /// Complex dimension.
        #[arg(long)]
        n: usize,
        /// Degree bound.
        #[arg(long = "N")]
        max_degree: u32,
    },
    /// Check a claimed projection by exact orthogonality pairings.
    Verify {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        poly: PathBuf,
        /// Claimed projection JSON file.
        #[arg(long)]
        projection: PathBuf,
        /// Polyharmonic order m (real-coordinate verification).
        #[arg(long)]
        order: Option<u32>,
    },
}

fn load_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::new(ErrorCode::IoError, format!("cannot read {what} {}: {e}", path.display()))
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("bad {what} {}: {e}", path.display())))
}

fn build_request(command: &CliCommand) -> Result<Request, CliError> {
    Ok(match command {
        CliCommand::Project { domain, poly, mode, order, no_verify } => {
            let mut req = Request::project(
                load_json::<DomainJson>(domain, "domain")?,
                load_json::<PolyJson>(poly, "polynomial")?,
            );
            req.mode = Mode::parse(mode)?;
            req.order = *order;
            req.verify = !no_verify;
            req
        }
        CliCommand::Transport { domain, poly } => Request::transport(
            load_json::<DomainJson>(domain, "domain")?,
            load_json::<PolyJson>(poly, "polynomial")?,
        ),
        CliCommand::Member { domain, point } => {
            Request::member(load_json::<DomainJson>(domain, "domain")?, point.clone())
        }
        CliCommand::Dims { n, max_degree } => Request::dims(*n, *max_degree),
        CliCommand::Verify { domain, poly, projection, order } => {
            let mut req = Request::project(
                load_json::<DomainJson>(domain, "domain")?,
                load_json::<PolyJson>(poly, "polynomial")?,
            );
            req.command = Command::Verify;
            req.projection = Some(load_json::<PolyJson>(projection, "projection")?);
            req.order = *order;
            req
        }
    })
}

fn emit(response: &Response, out: Option<&Path>) -> ExitCode {
    let mut text = response.to_canonical_json();
    text.push('\n');
    let write_ok = match out {
        Some(path) => fs::write(path, &text).is_ok(),
        None => {
            print!("{text}");
            true
        }
    };
    if response.is_ok() && write_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let response = match build_request(&cli.command) {
        Ok(req) => run(&req),
        Err(e) => Response::from_cli_error(e),
    };
    emit(&response, cli.out.as_deref())
}
