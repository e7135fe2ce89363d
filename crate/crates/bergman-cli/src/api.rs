//! Request dispatch: one parsed request in, one canonical response out.
//!
//! Responses are byte-deterministic for identical requests: every payload
//! is emitted in the engine's canonical term order with canonical
//! rational strings, and struct fields serialize in a fixed order.

use serde::{Deserialize, Serialize};

use bergman_core::domains::{Domain, Ellipsoid};
use bergman_core::fischer::{self, space_dims};
use bergman_core::moments;
use bergman_core::polyharmonic;
use bergman_core::scalar::{is_real, GaussianRational};
use bergman_core::transport;

use crate::error::CliError;
use crate::json::{
    parse_gaussian, AnyPoly, CertificateJson, DomainJson, PolyJson, ReportJson,
};

/// Projection mode; `Auto` picks per domain kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Auto,
    Complex,
    Reinhardt,
    Polyharmonic,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode, CliError> {
        match s {
            "auto" => Ok(Mode::Auto),
            "complex" => Ok(Mode::Complex),
            "reinhardt" => Ok(Mode::Reinhardt),
            "polyharmonic" => Ok(Mode::Polyharmonic),
            other => Err(CliError::parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// What to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Project,
    Transport,
    Member,
    Dims,
    Verify,
}

/// A fully parsed request.
#[derive(Debug, Clone)]
pub struct Request {
    pub command: Command,
    pub domain: Option<DomainJson>,
    pub polynomial: Option<PolyJson>,
    /// Claimed projection, for `verify`.
    pub projection: Option<PolyJson>,
    pub mode: Mode,
    pub order: Option<u32>,
    /// Comma-separated point coordinates, for `member`.
    pub point: Option<String>,
    /// Attach an orthogonality report to `project` when moments exist.
    pub verify: bool,
    /// Complex dimension, for `dims`.
    pub n: Option<usize>,
    /// Degree bound, for `dims`.
    pub max_degree: Option<u32>,
}

impl Request {
    pub fn dims(n: usize, max_degree: u32) -> Self {
        Request {
            command: Command::Dims,
            domain: None,
            polynomial: None,
            projection: None,
            mode: Mode::Auto,
            order: None,
            point: None,
            verify: true,
            n: Some(n),
            max_degree: Some(max_degree),
        }
    }

    pub fn project(domain: DomainJson, polynomial: PolyJson) -> Self {
        Request {
            command: Command::Project,
            domain: Some(domain),
            polynomial: Some(polynomial),
            projection: None,
            mode: Mode::Auto,
            order: None,
            point: None,
            verify: true,
            n: None,
            max_degree: None,
        }
    }

    pub fn transport(domain: DomainJson, polynomial: PolyJson) -> Self {
        Request { command: Command::Transport, ..Request::project(domain, polynomial) }
    }

    pub fn member(domain: DomainJson, point: impl Into<String>) -> Self {
        Request {
            command: Command::Member,
            domain: Some(domain),
            polynomial: None,
            projection: None,
            mode: Mode::Auto,
            order: None,
            point: Some(point.into()),
            verify: true,
            n: None,
            max_degree: None,
        }
    }
}

/// Space dimensions payload.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DimsJson {
    #[serde(rename = "dimP")]
    pub dim_p: u64,
    #[serde(rename = "dimHP")]
    pub dim_hp: u64,
    pub quotient: u64,
}

/// Error payload.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ErrorJson {
    pub code: String,
    pub message: String,
}

/// Response envelope; absent payloads are omitted from the JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct Response {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub projection: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<ReportJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dims: Option<DimsJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorJson>,
}

impl Response {
    fn ok() -> Self {
        Response { status: "ok".into(), ..Response::default() }
    }

    /// Error envelope with the request's code and message.
    pub fn from_cli_error(e: CliError) -> Self {
        Response {
            status: "error".into(),
            error: Some(ErrorJson { code: e.code.as_str().into(), message: e.message }),
            ..Response::default()
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    /// Canonical one-line JSON.
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string(self).expect("response serialization cannot fail")
    }
}

/// Handle one request; never panics on user input, never loses the error
/// code.
pub fn run(request: &Request) -> Response {
    match dispatch(request) {
        Ok(resp) => resp,
        Err(e) => Response::from_cli_error(e),
    }
}

fn dispatch(request: &Request) -> Result<Response, CliError> {
    match request.command {
        Command::Dims => run_dims(request),
        Command::Member => run_member(request),
        Command::Project => run_project(request),
        Command::Transport => run_transport(request),
        Command::Verify => run_verify(request),
    }
}

fn need_domain(request: &Request) -> Result<Domain, CliError> {
    request
        .domain
        .as_ref()
        .ok_or_else(|| CliError::parse("request is missing the domain"))?
        .to_domain()
}

fn need_poly(request: &Request) -> Result<AnyPoly, CliError> {
    request
        .polynomial
        .as_ref()
        .ok_or_else(|| CliError::parse("request is missing the polynomial"))?
        .to_poly()
}

fn run_dims(request: &Request) -> Result<Response, CliError> {
    let n = request.n.ok_or_else(|| CliError::parse("dims needs n"))?;
    let max_degree =
        request.max_degree.ok_or_else(|| CliError::parse("dims needs the degree bound"))?;
    if n == 0 {
        return Err(CliError::parse("n must be at least 1"));
    }
    let d = space_dims(n, max_degree);
    Ok(Response {
        dims: Some(DimsJson { dim_p: d.full, dim_hp: d.holomorphic, quotient: d.quotient }),
        ..Response::ok()
    })
}

fn parse_point(text: &str) -> Result<Vec<GaussianRational>, CliError> {
    text.split(',').map(parse_gaussian).collect()
}

fn run_member(request: &Request) -> Result<Response, CliError> {
    let domain = need_domain(request)?;
    let text =
        request.point.as_ref().ok_or_else(|| CliError::parse("member needs a point"))?;
    let point = parse_point(text)?;
    let inside = match &domain {
        Domain::Ellipsoid(e) => {
            // an ellipsoid lives in R^d: coordinates must be real
            if point.iter().any(|z| !is_real(z)) {
                return Err(CliError::parse(
                    "ellipsoid points take real coordinates (d rationals)",
                ));
            }
            let coords: Vec<_> = point.iter().map(|z| z.re.clone()).collect();
            e.contains(&coords)?
        }
        Domain::Reinhardt(r) => r.contains(&point)?,
        Domain::Transported(t) => t.contains(&point)?,
    };
    Ok(Response { member: Some(inside), ..Response::ok() })
}

/// Resolve the effective projection mode for a parsed domain.
fn resolve_mode(request: &Request, domain: &Domain) -> Result<Mode, CliError> {
    match request.mode {
        Mode::Auto => {
            if request.order.is_some() {
                return Ok(Mode::Polyharmonic);
            }
            match domain {
                Domain::Reinhardt(_) => Ok(Mode::Reinhardt),
                Domain::Ellipsoid(e) if e.dim() % 2 == 0 => Ok(Mode::Complex),
                Domain::Ellipsoid(_) => Err(CliError::unsupported(
                    "odd-dimensional ellipsoid: use --mode polyharmonic --order m",
                )),
                Domain::Transported(_) => {
                    Err(CliError::unsupported("use the transport command for transported domains"))
                }
            }
        }
        m => Ok(m),
    }
}

fn run_project(request: &Request) -> Result<Response, CliError> {
    let domain = need_domain(request)?;
    let mode = resolve_mode(request, &domain)?;
    match mode {
        Mode::Complex => project_complex(request, &domain),
        Mode::Reinhardt => project_reinhardt(request, &domain),
        Mode::Polyharmonic => project_polyharmonic(request, &domain),
        Mode::Auto => unreachable!("resolve_mode never returns Auto"),
    }
}

/// The Fischer engine needs an ellipsoid; complex ellipsoids given in
/// Reinhardt form are rewritten as raw quadrics, keeping the Reinhardt
/// moments for verification.
fn fischer_domain(domain: &Domain) -> Result<Ellipsoid, CliError> {
    match domain {
        Domain::Ellipsoid(e) => {
            if e.dim() % 2 != 0 {
                return Err(bergman_core::Error::OddDimension(e.dim()).into());
            }
            Ok(e.clone())
        }
        Domain::Reinhardt(r) => r.to_ellipsoid().ok_or_else(|| {
            CliError::unsupported("a polydisc is not an ellipsoid; use --mode reinhardt")
        }),
        Domain::Transported(_) => {
            Err(CliError::unsupported("use the transport command for transported domains"))
        }
    }
}

fn project_complex(request: &Request, domain: &Domain) -> Result<Response, CliError> {
    let poly = match need_poly(request)? {
        AnyPoly::Complex(p) => p,
        AnyPoly::Real(_) => {
            return Err(CliError::parse("complex projection takes a zzbar polynomial"))
        }
    };
    let ellipsoid = fischer_domain(domain)?;
    let cert = fischer::bergman_project(&ellipsoid, &poly)?;
    let report = if request.verify {
        let basis = moments::default_test_basis(poly.nvars(), poly.degree());
        match moments::verify_orthogonality(domain, &poly, &cert.projection, &basis) {
            Ok(r) => Some(ReportJson::from_report(&r)),
            Err(bergman_core::Error::MomentUnavailable) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    Ok(Response {
        projection: Some(PolyJson::from_complex(&cert.projection)),
        certificate: Some(CertificateJson::from_fischer(&cert)),
        report,
        ..Response::ok()
    })
}

fn project_reinhardt(request: &Request, domain: &Domain) -> Result<Response, CliError> {
    let Domain::Reinhardt(r) = domain else {
        return Err(CliError::unsupported("reinhardt mode needs a polydisc or complexEllipsoid"));
    };
    let poly = match need_poly(request)? {
        AnyPoly::Complex(p) => p,
        AnyPoly::Real(_) => {
            return Err(CliError::parse("reinhardt projection takes a zzbar polynomial"))
        }
    };
    let projection = moments::reinhardt_project(r, &poly)?;
    let report = if request.verify {
        let basis = moments::default_test_basis(poly.nvars(), poly.degree());
        let rep = moments::verify_orthogonality(domain, &poly, &projection, &basis)?;
        Some(ReportJson::from_report(&rep))
    } else {
        None
    };
    Ok(Response {
        projection: Some(PolyJson::from_complex(&projection)),
        report,
        ..Response::ok()
    })
}

fn project_polyharmonic(request: &Request, domain: &Domain) -> Result<Response, CliError> {
    let Domain::Ellipsoid(e) = domain else {
        return Err(CliError::unsupported("polyharmonic projection needs an ellipsoid"));
    };
    let order = request.order.unwrap_or(1);
    let poly = match need_poly(request)? {
        AnyPoly::Real(p) => p,
        AnyPoly::Complex(_) => {
            return Err(CliError::parse("polyharmonic projection takes a real polynomial"))
        }
    };
    let cert = polyharmonic::polyharmonic_project(e, order, &poly)?;
    let report = if request.verify && e.is_affine_backed() {
        let basis =
            polyharmonic::polyharmonic_basis(e.dim(), order, poly.degree().max(0) as u32);
        let rep = moments::verify_orthogonality_real(e, &poly, &cert.projection, &basis)?;
        Some(ReportJson::from_report(&rep))
    } else {
        None
    };
    Ok(Response {
        projection: Some(PolyJson::from_real(&cert.projection)),
        certificate: Some(CertificateJson::from_polyharmonic(&cert)),
        report,
        ..Response::ok()
    })
}

fn run_transport(request: &Request) -> Result<Response, CliError> {
    let domain = need_domain(request)?;
    let Domain::Transported(t) = &domain else {
        return Err(CliError::unsupported("transport needs a transported domain"));
    };
    let poly = match need_poly(request)? {
        AnyPoly::Complex(p) => p,
        AnyPoly::Real(_) => return Err(CliError::parse("transport takes a zzbar polynomial")),
    };
    let projection = transport::transport_project(t, &poly)?;
    Ok(Response { projection: Some(PolyJson::from_complex(&projection)), ..Response::ok() })
}

fn run_verify(request: &Request) -> Result<Response, CliError> {
    let domain = need_domain(request)?;
    let claimed = request
        .projection
        .as_ref()
        .ok_or_else(|| CliError::parse("verify needs the claimed projection"))?
        .to_poly()?;
    let report = match (need_poly(request)?, claimed) {
        (AnyPoly::Complex(p), AnyPoly::Complex(h)) => {
            let basis = moments::default_test_basis(p.nvars(), p.degree());
            moments::verify_orthogonality(&domain, &p, &h, &basis)?
        }
        (AnyPoly::Real(p), AnyPoly::Real(h)) => {
            let Domain::Ellipsoid(e) = &domain else {
                return Err(CliError::unsupported(
                    "real verification needs an ellipsoid domain",
                ));
            };
            let order = request.order.unwrap_or(1);
            let basis =
                polyharmonic::polyharmonic_basis(e.dim(), order, p.degree().max(0) as u32);
            moments::verify_orthogonality_real(e, &p, &h, &basis)?
        }
        _ => {
            return Err(CliError::parse(
                "polynomial and projection must use the same coordinates",
            ))
        }
    };
    Ok(Response { report: Some(ReportJson::from_report(&report)), ..Response::ok() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disc_json() -> DomainJson {
        serde_json::from_str(
            r#"{"type":"ellipsoid","affine":{"S":[["1","0"],["0","1"]],"c":["0","0"]}}"#,
        )
        .unwrap()
    }

    fn zzbar_json() -> PolyJson {
        serde_json::from_str(
            r#"{"vars":"zzbar","n":1,"terms":[{"alpha":[1],"beta":[1],"re":"1","im":"0"}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn project_on_disc() {
        let resp = run(&Request::project(disc_json(), zzbar_json()));
        assert!(resp.is_ok());
        let proj = resp.projection.unwrap();
        assert_eq!(proj.terms.len(), 1);
        assert_eq!(proj.terms[0].re, "1/2");
        assert!(resp.report.unwrap().verified);
    }

    #[test]
    fn dims_formulas() {
        let resp = run(&Request::dims(2, 3));
        assert_eq!(
            resp.dims.unwrap(),
            DimsJson { dim_p: 35, dim_hp: 10, quotient: 25 }
        );
        let resp = run(&Request::dims(1, 2));
        assert_eq!(resp.dims.unwrap(), DimsJson { dim_p: 6, dim_hp: 3, quotient: 3 });
    }

    #[test]
    fn member_requires_real_coords_on_ellipsoids() {
        let resp = run(&Request::member(disc_json(), "1/2,1/2i"));
        assert_eq!(resp.status, "error");
        assert_eq!(resp.error.unwrap().code, "ParseError");
        let resp = run(&Request::member(disc_json(), "1/2,1/2"));
        assert_eq!(resp.member, Some(true));
    }

    #[test]
    fn errors_have_codes() {
        let mut req = Request::project(disc_json(), zzbar_json());
        req.mode = Mode::Reinhardt;
        let resp = run(&req);
        assert_eq!(resp.status, "error");
        assert_eq!(resp.error.unwrap().code, "UnsupportedMode");
    }

    #[test]
    fn responses_are_byte_identical() {
        let req = Request::project(disc_json(), zzbar_json());
        let a = run(&req).to_canonical_json();
        let b = run(&req).to_canonical_json();
        assert_eq!(a, b);
    }
}
