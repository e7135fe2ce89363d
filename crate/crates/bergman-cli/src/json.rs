//! JSON interchange formats: polynomials, domains, certificates, and
//! verification reports. Rationals travel as strings (`"p"` or `"p/q"`,
//! sign on the numerator) so nothing is ever rounded; emission order is
//! the engine's graded-lex term order, making output byte-deterministic.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use bergman_core::domains::{Domain, Ellipsoid, ReinhardtDomain};
use bergman_core::fischer::FischerCertificate;
use bergman_core::moments::{PiRational, VerificationReport};
use bergman_core::multiindex::MultiIndex;
use bergman_core::poly::{ComplexKey, ComplexPoly, RealKey, RealPoly};
use bergman_core::polyharmonic::PolyharmonicCertificate;
use bergman_core::scalar::{GaussianRational, Rational};
use bergman_core::transport::{validate_pair, SourceDomain, TransportedDomain};

use crate::error::{CliError, ErrorCode};

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim())
        .map_err(|e| CliError::parse(format!("bad rational {s:?}: {e}")))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parse one Gaussian-rational coordinate: `"a/b"`, `"c/di"`, or
/// `"a/b±c/di"`.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(CliError::parse("empty coordinate"));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussianRational::new(parse_rational(&t)?, Rational::from_integer(0.into())));
    };
    // split off the real part at the last sign that starts the imaginary
    // summand (never position 0 and never right after '/')
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/');
    let (re_str, im_str) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im_str {
        "" | "+" => Rational::from_integer(1.into()),
        "-" => Rational::from_integer((-1).into()),
        other => parse_rational(other)?,
    };
    Ok(GaussianRational::new(parse_rational(re_str)?, im))
}

pub fn format_gaussian_parts(z: &GaussianRational) -> (String, String) {
    (z.re.to_string(), z.im.to_string())
}

/// One polynomial term: exponents plus an exact complex coefficient.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub alpha: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<Vec<u32>>,
    pub re: String,
    pub im: String,
}

/// Polynomial in interchange form; `vars` is `"zzbar"` or `"real"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: String,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

/// A parsed polynomial of either coordinate kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPoly {
    Complex(ComplexPoly),
    Real(RealPoly),
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<AnyPoly, CliError> {
        if self.n == 0 {
            return Err(CliError::parse("polynomial needs at least one variable"));
        }
        match self.vars.as_str() {
            "zzbar" => {
                let mut p = ComplexPoly::zero(self.n);
                for t in &self.terms {
                    let beta = t
                        .beta
                        .as_ref()
                        .ok_or_else(|| CliError::parse("zzbar term is missing \"beta\""))?;
                    if t.alpha.len() != self.n || beta.len() != self.n {
                        return Err(CliError::parse("term exponent length differs from n"));
                    }
                    p.add_term(
                        ComplexKey::new(
                            MultiIndex::new(t.alpha.clone()),
                            MultiIndex::new(beta.clone()),
                        ),
                        GaussianRational::new(parse_rational(&t.re)?, parse_rational(&t.im)?),
                    );
                }
                Ok(AnyPoly::Complex(p))
            }
            "real" => {
                let mut p = RealPoly::zero(self.n);
                for t in &self.terms {
                    if t.beta.is_some() {
                        return Err(CliError::parse("real term must omit \"beta\""));
                    }
                    if t.alpha.len() != self.n {
                        return Err(CliError::parse("term exponent length differs from n"));
                    }
                    p.add_term(
                        RealKey(MultiIndex::new(t.alpha.clone())),
                        GaussianRational::new(parse_rational(&t.re)?, parse_rational(&t.im)?),
                    );
                }
                Ok(AnyPoly::Real(p))
            }
            other => Err(CliError::parse(format!("unknown vars kind {other:?}"))),
        }
    }

    pub fn to_complex(&self) -> Result<ComplexPoly, CliError> {
        match self.to_poly()? {
            AnyPoly::Complex(p) => Ok(p),
            AnyPoly::Real(_) => {
                Err(CliError::parse("expected a zzbar polynomial, found a real one"))
            }
        }
    }

    pub fn to_real(&self) -> Result<RealPoly, CliError> {
        match self.to_poly()? {
            AnyPoly::Real(p) => Ok(p),
            AnyPoly::Complex(_) => {
                Err(CliError::parse("expected a real polynomial, found a zzbar one"))
            }
        }
    }

    pub fn from_complex(p: &ComplexPoly) -> Self {
        PolyJson {
            vars: "zzbar".into(),
            n: p.nvars(),
            terms: p
                .terms()
                .map(|(k, c)| {
                    let (re, im) = format_gaussian_parts(c);
                    TermJson {
                        alpha: k.alpha.entries().to_vec(),
                        beta: Some(k.beta.entries().to_vec()),
                        re,
                        im,
                    }
                })
                .collect(),
        }
    }

    pub fn from_real(p: &RealPoly) -> Self {
        PolyJson {
            vars: "real".into(),
            n: p.nvars(),
            terms: p
                .terms()
                .map(|(k, c)| {
                    let (re, im) = format_gaussian_parts(c);
                    TermJson { alpha: k.0.entries().to_vec(), beta: None, re, im }
                })
                .collect(),
        }
    }

    pub fn from_any(p: &AnyPoly) -> Self {
        match p {
            AnyPoly::Complex(c) => PolyJson::from_complex(c),
            AnyPoly::Real(r) => PolyJson::from_real(r),
        }
    }
}

/// Affine backing of an ellipsoid: `w = S·u + c`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AffineJson {
    #[serde(rename = "S")]
    pub s: Vec<Vec<String>>,
    pub c: Vec<String>,
}

/// Domain in interchange form, tagged by `"type"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type")]
pub enum DomainJson {
    #[serde(rename = "ellipsoid")]
    Ellipsoid {
        #[serde(skip_serializing_if = "Option::is_none", default)]
        affine: Option<AffineJson>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        r: Option<PolyJson>,
    },
    #[serde(rename = "polydisc")]
    Polydisc { radii: Vec<String> },
    #[serde(rename = "complexEllipsoid")]
    ComplexEllipsoid { a: Vec<String> },
    #[serde(rename = "transported")]
    Transported {
        source: Box<DomainJson>,
        f: Vec<PolyJson>,
        #[serde(rename = "F")]
        inverse: Vec<PolyJson>,
    },
}

fn parse_rationals(values: &[String]) -> Result<Vec<Rational>, CliError> {
    values.iter().map(|v| parse_rational(v)).collect()
}

impl DomainJson {
    pub fn to_domain(&self) -> Result<Domain, CliError> {
        match self {
            DomainJson::Ellipsoid { affine: Some(aff), r: None } => {
                let s = aff
                    .s
                    .iter()
                    .map(|row| parse_rationals(row))
                    .collect::<Result<Vec<_>, _>>()?;
                let c = parse_rationals(&aff.c)?;
                Ok(Domain::Ellipsoid(Ellipsoid::from_affine(s, c)?))
            }
            DomainJson::Ellipsoid { affine: None, r: Some(poly) } => {
                let defining = match poly.to_poly()? {
                    AnyPoly::Real(p) => p,
                    // a self-conjugate zzbar quadric is accepted and
                    // rewritten in real coordinates
                    AnyPoly::Complex(p) => {
                        if p.conj() != p {
                            return Err(CliError::new(
                                ErrorCode::NotRealValued,
                                "defining polynomial is not real-valued",
                            ));
                        }
                        p.to_real()
                    }
                };
                Ok(Domain::Ellipsoid(Ellipsoid::from_defining(defining)?))
            }
            DomainJson::Ellipsoid { .. } => Err(CliError::parse(
                "ellipsoid needs exactly one of \"affine\" or \"r\"",
            )),
            DomainJson::Polydisc { radii } => Ok(Domain::Reinhardt(ReinhardtDomain::polydisc(
                parse_rationals(radii)?,
            )?)),
            DomainJson::ComplexEllipsoid { a } => Ok(Domain::Reinhardt(
                ReinhardtDomain::complex_ellipsoid(parse_rationals(a)?)?,
            )),
            DomainJson::Transported { source, f, inverse } => {
                let src = match source.to_domain()? {
                    Domain::Ellipsoid(e) => SourceDomain::Ellipsoid(e),
                    Domain::Reinhardt(r) => SourceDomain::Reinhardt(r),
                    Domain::Transported(_) => {
                        return Err(CliError::parse("transported source must not be transported"))
                    }
                };
                let fwd =
                    f.iter().map(PolyJson::to_complex).collect::<Result<Vec<_>, _>>()?;
                let inv =
                    inverse.iter().map(PolyJson::to_complex).collect::<Result<Vec<_>, _>>()?;
                let pair = validate_pair(fwd, inv)?;
                Ok(Domain::Transported(TransportedDomain::new(src, pair)?))
            }
        }
    }
}

/// Serialized orthogonal-decomposition certificate.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub projection: PolyJson,
    pub solvent: PolyJson,
    pub witness: Vec<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u32>,
}

impl CertificateJson {
    pub fn from_fischer(cert: &FischerCertificate) -> Self {
        CertificateJson {
            projection: PolyJson::from_complex(&cert.projection),
            solvent: PolyJson::from_complex(&cert.solvent),
            witness: cert.witness.components().iter().map(PolyJson::from_complex).collect(),
            order: None,
        }
    }

    pub fn from_polyharmonic(cert: &PolyharmonicCertificate) -> Self {
        CertificateJson {
            projection: PolyJson::from_real(&cert.projection),
            solvent: PolyJson::from_real(&cert.reduced_solvent),
            witness: vec![PolyJson::from_real(&cert.witness)],
            order: Some(cert.order),
        }
    }
}

/// One exact pairing `⟨P − H, e_i⟩ = (q + im·i)·π^piExp`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairingJson {
    #[serde(rename = "basisIndex")]
    pub basis_index: usize,
    pub q: String,
    pub im: String,
    #[serde(rename = "piExp")]
    pub pi_exp: u32,
}

/// Serialized orthogonality-verification report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportJson {
    pub verified: bool,
    pub pairings: Vec<PairingJson>,
}

impl ReportJson {
    pub fn from_report(report: &VerificationReport) -> Self {
        ReportJson {
            verified: report.verified,
            pairings: report
                .pairings
                .iter()
                .enumerate()
                .map(|(i, p): (usize, &PiRational)| {
                    let (q, im) = format_gaussian_parts(p.coef());
                    PairingJson { basis_index: i, q, im, pi_exp: p.pi_exp() }
                })
                .collect(),
        }
    }
}
