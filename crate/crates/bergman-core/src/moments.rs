//! Exact monomial moments over balls, affine ellipsoids, and Reinhardt
//! domains; the Gram-matrix projection oracle; and exact orthogonality
//! verification of projection certificates.
//!
//! Every integral here is a rational multiple of an integer power of π,
//! carried exactly by [`PiRational`]. Half-integer Gamma values are never
//! materialized: the closed forms are arranged as factorial quotients
//! over powers of two.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::domains::{Domain, Ellipsoid, ReinhardtDomain};
use crate::linalg::{self, Matrix};
use crate::multiindex::{indices_up_to, MultiIndex};
use crate::poly::{ComplexKey, ComplexPoly, Poly, RealKey, RealPoly};
use crate::scalar::{real, GaussianRational, Rational};
use crate::Error;

/// Exact scalar `q · π^k` with Gaussian-rational `q`.
///
/// All moments over a fixed domain share one exponent `k` (`d/2` for even
/// real dimension `d`, `(d−1)/2` for odd), so sums stay within a single
/// `k`; mixing exponents is rejected rather than coerced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRational {
    coef: GaussianRational,
    pi_exp: u32,
}

impl PiRational {
    pub fn new(coef: GaussianRational, pi_exp: u32) -> Self {
        PiRational { coef, pi_exp }
    }

    pub fn zero(pi_exp: u32) -> Self {
        PiRational { coef: GaussianRational::zero(), pi_exp }
    }

    pub fn coef(&self) -> &GaussianRational {
        &self.coef
    }

    pub fn pi_exp(&self) -> u32 {
        self.pi_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// Exact sum; fails on mismatched π exponents.
    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        if self.pi_exp != other.pi_exp {
            return Err(Error::PiExponentMismatch { left: self.pi_exp, right: other.pi_exp });
        }
        Ok(PiRational::new(self.coef.clone() + other.coef.clone(), self.pi_exp))
    }

    /// Product; exponents add.
    pub fn mul(&self, other: &Self) -> Self {
        PiRational::new(self.coef.clone() * other.coef.clone(), self.pi_exp + other.pi_exp)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        PiRational::new(self.coef.clone() * c.clone(), self.pi_exp)
    }

    pub fn conj(&self) -> Self {
        PiRational::new(self.coef.conj(), self.pi_exp)
    }
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `Γ(t/2)` for integer `t ≥ 1` as `rational · √π^(t odd)`; the boolean
/// flags the √π factor.
fn gamma_half(t: u64) -> (Rational, bool) {
    assert!(t >= 1);
    if t.is_multiple_of(2) {
        (Rational::from_integer(factorial(t / 2 - 1)), false)
    } else {
        // Γ(a + 1/2) = (2a)! / (4^a a!) · √π
        let a = (t - 1) / 2;
        let mut four_pow = BigInt::one();
        for _ in 0..a {
            four_pow *= 4;
        }
        (Rational::new(factorial(2 * a), four_pow * factorial(a)), true)
    }
}

/// π exponent shared by all moments in real dimension `d`.
pub fn pi_exponent(d: usize) -> u32 {
    (d / 2) as u32
}

/// Exact moment `∫_{B^d} u^k dV` over the unit ball; zero when any
/// exponent is odd, else `Π_i Γ((k_i+1)/2) / Γ(1 + (d+|k|)/2)`.
pub fn ball_moment(d: usize, k: &MultiIndex) -> PiRational {
    assert!(d >= 1);
    assert_eq!(k.len(), d);
    let pi_exp = pi_exponent(d);
    if k.entries().iter().any(|e| e % 2 == 1) {
        return PiRational::zero(pi_exp);
    }
    let mut num = Rational::one();
    for &e in k.entries() {
        let (g, sqrt_pi) = gamma_half(e as u64 + 1);
        debug_assert!(sqrt_pi);
        num *= g;
    }
    let (den, den_sqrt_pi) = gamma_half(d as u64 + k.total() as u64 + 2);
    debug_assert_eq!(d - usize::from(den_sqrt_pi), 2 * pi_exp as usize);
    PiRational::new(real(num / den), pi_exp)
}

/// Exact integral of a real-coordinate polynomial over an affine-backed
/// ellipsoid, by pulling back to the unit ball.
pub fn ellipsoid_integral(e: &Ellipsoid, p: &RealPoly) -> Result<PiRational, Error> {
    let aff = e.affine().ok_or(Error::MomentUnavailable)?;
    if p.nvars() != e.dim() {
        return Err(Error::DimensionMismatch { expected: e.dim(), found: p.nvars() });
    }
    let pulled = p.compose(&aff.rows_as_polys())?;
    let d = e.dim();
    let mut acc = PiRational::zero(pi_exponent(d));
    for (key, c) in pulled.terms() {
        acc = acc.try_add(&ball_moment(d, &key.0).scale(c))?;
    }
    Ok(acc.scale(&real(aff.det_abs())))
}

/// Exact monomial moment `∫_E w^key dV`.
pub fn ellipsoid_moment(e: &Ellipsoid, key: &MultiIndex) -> Result<PiRational, Error> {
    let p = RealPoly::monomial(e.dim(), RealKey(key.clone()), GaussianRational::one());
    ellipsoid_integral(e, &p)
}

/// Exact moment `∫_R z^α z̄^β dV`; zero unless `α = β` by per-coordinate
/// rotation invariance.
pub fn reinhardt_moment(r: &ReinhardtDomain, alpha: &MultiIndex, beta: &MultiIndex) -> PiRational {
    let n = r.n();
    assert_eq!(alpha.len(), n);
    assert_eq!(beta.len(), n);
    let pi_exp = n as u32;
    if alpha != beta {
        return PiRational::zero(pi_exp);
    }
    match r {
        ReinhardtDomain::Polydisc { radii } => {
            // Π_j π radius_j^{2a_j+2} / (a_j + 1)
            let mut c = Rational::one();
            for (j, radius) in radii.iter().enumerate() {
                let a = alpha.get(j) as u64;
                let mut pw = Rational::one();
                for _ in 0..(2 * a + 2) {
                    pw *= radius.clone();
                }
                c = c * pw / Rational::from_integer((a + 1).into());
            }
            PiRational::new(real(c), pi_exp)
        }
        ReinhardtDomain::ComplexEllipsoid { coeffs } => {
            // π^n α! / ((n+|α|)! Π_j a_j^{α_j+1})
            let mut num = Rational::one();
            for &e in alpha.entries() {
                num *= Rational::from_integer(factorial(e as u64));
            }
            let mut den = Rational::from_integer(factorial(n as u64 + alpha.total() as u64));
            for (j, a) in coeffs.iter().enumerate() {
                for _ in 0..=alpha.get(j) {
                    den *= a.clone();
                }
            }
            PiRational::new(real(num / den), pi_exp)
        }
    }
}

/// Exact integral of a complex-coordinate polynomial over a Reinhardt
/// domain, termwise.
pub fn reinhardt_integral(r: &ReinhardtDomain, p: &ComplexPoly) -> Result<PiRational, Error> {
    if p.nvars() != r.n() {
        return Err(Error::DimensionMismatch { expected: r.n(), found: p.nvars() });
    }
    let mut acc = PiRational::zero(r.n() as u32);
    for (key, c) in p.terms() {
        acc = acc.try_add(&reinhardt_moment(r, &key.alpha, &key.beta).scale(c))?;
    }
    Ok(acc)
}

/// Hermitian pairing `⟨f, g⟩ = ∫ f·conj(g) dV` on a moment-capable
/// domain.
pub fn inner_product(
    domain: &Domain,
    f: &ComplexPoly,
    g: &ComplexPoly,
) -> Result<PiRational, Error> {
    match domain {
        Domain::Ellipsoid(e) => {
            if e.dim() % 2 != 0 {
                return Err(Error::OddDimension(e.dim()));
            }
            let n = e.dim() / 2;
            if f.nvars() != n || g.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: f.nvars() });
            }
            ellipsoid_integral(e, &(f * &g.conj()).to_real())
        }
        Domain::Reinhardt(r) => reinhardt_integral(r, &(f * &g.conj())),
        Domain::Transported(_) => Err(Error::MomentUnavailable),
    }
}

/// Pairing `⟨f, g⟩ = ∫ f·conj(g) dV` of real-coordinate polynomials over
/// an affine-backed ellipsoid (conjugation acts on coefficients only).
pub fn real_inner_product(e: &Ellipsoid, f: &RealPoly, g: &RealPoly) -> Result<PiRational, Error> {
    ellipsoid_integral(e, &(f * &g.conj()))
}

fn gram_coefficients<P, F>(pair: F, p: &P, basis: &[P]) -> Result<Vec<GaussianRational>, Error>
where
    F: Fn(&P, &P) -> Result<PiRational, Error>,
{
    let m = basis.len();
    let mut g = Matrix::zeros(m, m);
    let mut b = Vec::with_capacity(m);
    let mut pi_exp = None;
    for i in 0..m {
        for j in 0..m {
            let v = pair(&basis[j], &basis[i])?;
            match pi_exp {
                None => pi_exp = Some(v.pi_exp()),
                Some(k) => debug_assert_eq!(k, v.pi_exp()),
            }
            g.set(i, j, v.coef().clone());
        }
        b.push(pair(p, &basis[i])?.coef().clone());
    }
    linalg::solve(&g, &b).map_err(|_| Error::SingularGram)
}

/// Independent oracle: the exact `L²` projection of `p` onto the span of
/// `basis`, via the normal equations `G c = b`.
pub fn gram_project(
    domain: &Domain,
    p: &ComplexPoly,
    basis: &[ComplexPoly],
) -> Result<ComplexPoly, Error> {
    let coeffs = gram_coefficients(|f, g| inner_product(domain, f, g), p, basis)?;
    let mut out = ComplexPoly::zero(p.nvars());
    for (c, e) in coeffs.iter().zip(basis) {
        out = &out + &e.scale(c);
    }
    Ok(out)
}

/// Gram-oracle projection for real-coordinate polynomials on an
/// affine-backed ellipsoid.
pub fn gram_project_real(
    e: &Ellipsoid,
    p: &RealPoly,
    basis: &[RealPoly],
) -> Result<RealPoly, Error> {
    let coeffs = gram_coefficients(|f, g| real_inner_product(e, f, g), p, basis)?;
    let mut out = RealPoly::zero(p.nvars());
    for (c, b) in coeffs.iter().zip(basis) {
        out = &out + &b.scale(c);
    }
    Ok(out)
}

/// Direct termwise Bergman projection on a Reinhardt domain: the
/// monomial `z^α z̄^β` projects to `(‖z^α‖²/‖z^{α−β}‖²)·z^{α−β}` when
/// `β ≤ α` componentwise and to zero otherwise.
pub fn reinhardt_project(r: &ReinhardtDomain, p: &ComplexPoly) -> Result<ComplexPoly, Error> {
    let n = r.n();
    if p.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.nvars() });
    }
    let mut out = ComplexPoly::zero(n);
    for (key, c) in p.terms() {
        let Some(gamma) = key.alpha.try_sub(&key.beta) else {
            continue;
        };
        let num = reinhardt_moment(r, &key.alpha, &key.alpha);
        let den = reinhardt_moment(r, &gamma, &gamma);
        out.add_term(
            ComplexKey::new(gamma, MultiIndex::zero(n)),
            c.clone() * num.coef().clone() / den.coef().clone(),
        );
    }
    Ok(out)
}

/// All holomorphic monomials `z^γ` with `|γ| ≤ max_degree`, ascending.
pub fn holomorphic_monomials(n: usize, max_degree: u32) -> Vec<ComplexPoly> {
    indices_up_to(n, max_degree)
        .into_iter()
        .map(|gamma| {
            Poly::monomial(
                n,
                ComplexKey::new(gamma, MultiIndex::zero(n)),
                GaussianRational::one(),
            )
        })
        .collect()
}

/// Default certificate test basis: holomorphic monomials up to
/// `deg p + 2` (the margin catches off-by-degree errors).
pub fn default_test_basis(n: usize, degree: i64) -> Vec<ComplexPoly> {
    holomorphic_monomials(n, (degree.max(0) + 2) as u32)
}

/// Outcome of pairing `p − h` against a test basis: one exact value per
/// basis element; verified iff all vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pairings: Vec<PiRational>,
    pub verified: bool,
}

fn report_from_pairings(pairings: Vec<PiRational>) -> VerificationReport {
    let verified = pairings.iter().all(PiRational::is_zero);
    VerificationReport { pairings, verified }
}

/// Exact orthogonality check of a claimed projection: `⟨p − h, e⟩` for
/// every `e` in the test basis.
pub fn verify_orthogonality(
    domain: &Domain,
    p: &ComplexPoly,
    h: &ComplexPoly,
    basis: &[ComplexPoly],
) -> Result<VerificationReport, Error> {
    let diff = p - h;
    let pairings = basis
        .iter()
        .map(|e| inner_product(domain, &diff, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(report_from_pairings(pairings))
}

/// Exact orthogonality check for real-coordinate projections.
pub fn verify_orthogonality_real(
    e: &Ellipsoid,
    p: &RealPoly,
    h: &RealPoly,
    basis: &[RealPoly],
) -> Result<VerificationReport, Error> {
    let diff = p - h;
    let pairings = basis
        .iter()
        .map(|b| real_inner_product(e, &diff, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(report_from_pairings(pairings))
}
