//! Bergman projection of polynomials on ellipsoids via the Fischer map.
//!
//! The map `φ(p) = −Σ_j ∂/∂z_j (r · ∂p/∂z̄_j)` does not increase degree,
//! kills holomorphic polynomials, and is invertible on the quotient of
//! all polynomials of degree ≤ N by the holomorphic ones. Solving
//! `φ(Q) ≡ P` modulo holomorphic polynomials yields the exact orthogonal
//! decomposition `P = φ(Q) + H` whose holomorphic part `H` is the
//! Bergman projection of `P`; the certificate carries `Q` and the
//! boundary-vanishing form `ω = r·∂̄Q` witnessing orthogonality.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::domains::Ellipsoid;
use crate::linalg::{LuDecomposition, Matrix};
use crate::multiindex::{binomial, indices_up_to, MultiIndex};
use crate::poly::{ComplexKey, ComplexPoly, Form01, MonomialKey, Poly};
use crate::scalar::GaussianRational;
use crate::Error;

/// Dimensions of the degree-≤ N polynomial spaces in `C^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceDims {
    /// dim of all complex-valued polynomials of degree ≤ N.
    pub full: u64,
    /// dim of the holomorphic ones.
    pub holomorphic: u64,
    /// dim of the quotient.
    pub quotient: u64,
}

/// `C(2n+N, 2n)`, `C(n+N, n)`, and their difference.
pub fn space_dims(n: usize, max_degree: u32) -> SpaceDims {
    let full = binomial(2 * n as u64 + max_degree as u64, 2 * n as u64);
    let holomorphic = binomial(n as u64 + max_degree as u64, n as u64);
    SpaceDims { full, holomorphic, quotient: full - holomorphic }
}

/// Ordered basis of the quotient of degree-≤ N polynomials by the
/// holomorphic ones: the mixed monomials `z^α z̄^β` with `|β| ≥ 1`, in
/// graded-lex order. Reduction modulo holomorphic polynomials is then
/// simply "drop the `β = 0` terms".
#[derive(Debug, Clone)]
pub struct QuotientBasis {
    n: usize,
    max_degree: u32,
    keys: Vec<ComplexKey>,
    index: BTreeMap<ComplexKey, usize>,
}

impl QuotientBasis {
    pub fn new(n: usize, max_degree: u32) -> Self {
        let mut keys: Vec<ComplexKey> = indices_up_to(2 * n, max_degree)
            .into_iter()
            .filter_map(|cat| {
                let alpha = MultiIndex::new(cat.entries()[..n].to_vec());
                let beta = MultiIndex::new(cat.entries()[n..].to_vec());
                (!beta.is_zero()).then(|| ComplexKey::new(alpha, beta))
            })
            .collect();
        keys.sort();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        debug_assert_eq!(keys.len() as u64, space_dims(n, max_degree).quotient);
        QuotientBasis { n, max_degree, keys, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[ComplexKey] {
        &self.keys
    }

    pub fn index_of(&self, key: &ComplexKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Quotient coordinates of `p`: the coefficients of its mixed terms.
    pub fn coords(&self, p: &ComplexPoly) -> Result<Vec<GaussianRational>, Error> {
        let mut v = vec![GaussianRational::zero(); self.len()];
        for (key, c) in p.terms() {
            if key.is_holomorphic() {
                continue;
            }
            let i = self.index_of(key).ok_or(Error::DegreeOutOfRange {
                degree: key.degree() as i64,
                max: self.max_degree,
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// The mixed polynomial with the given coordinates.
    pub fn linear_combination(&self, coeffs: &[GaussianRational]) -> ComplexPoly {
        assert_eq!(coeffs.len(), self.len());
        Poly::from_terms(
            self.n,
            self.keys.iter().cloned().zip(coeffs.iter().cloned()),
        )
    }
}

/// The Fischer map `φ(p) = −Σ_j ∂/∂z_j (r · ∂p/∂z̄_j)`.
pub fn phi_map(r: &ComplexPoly, p: &ComplexPoly) -> ComplexPoly {
    assert_eq!(r.nvars(), p.nvars(), "variable count mismatch");
    let n = p.nvars();
    let mut acc = ComplexPoly::zero(n);
    for j in 0..n {
        acc = &acc + &(r * &p.wirtinger_zbar(j)).wirtinger_z(j);
    }
    -&acc
}

/// Matrix of the quotient map induced by `φ` in the mixed-monomial
/// basis: column `j` holds the quotient coordinates of `φ(m_j)`.
pub fn build_phi_matrix(r: &ComplexPoly, basis: &QuotientBasis) -> Matrix {
    let m = basis.len();
    let mut a = Matrix::zeros(m, m);
    for (j, key) in basis.keys().iter().enumerate() {
        let monomial = ComplexPoly::monomial(basis.n(), key.clone(), GaussianRational::one());
        let image = phi_map(r, &monomial);
        for (k, c) in image.terms() {
            if !k.is_holomorphic() {
                let i = basis.index_of(k).expect("phi does not increase degree");
                a.set(i, j, c.clone());
            }
        }
    }
    a
}

/// The exact orthogonal decomposition `input = φ(solvent) + projection`.
///
/// `projection` is holomorphic of degree ≤ deg input and equals the
/// Bergman projection of `input`; every component of `witness = r·∂̄Q`
/// is divisible by `r`, so the form vanishes where `r` does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FischerCertificate {
    pub input: ComplexPoly,
    pub projection: ComplexPoly,
    pub solvent: ComplexPoly,
    pub witness: Form01,
}

impl FischerCertificate {
    /// Recheck all certificate invariants against a defining polynomial
    /// by direct computation.
    pub fn check(&self, defining: &ComplexPoly) -> bool {
        let identity =
            &(&phi_map(defining, &self.solvent) + &self.projection) - &self.input;
        self.projection.is_holomorphic()
            && self.projection.degree() <= self.input.degree().max(0)
            && identity.is_zero()
            && self.witness == Form01::dbar(&self.solvent).scale_poly(defining)
            && self
                .witness
                .components()
                .iter()
                .all(|w| w.divide_exact(defining).is_some())
    }
}

/// Reusable projection solver for one defining polynomial and one degree
/// bound: the quotient matrix is built and factored once.
#[derive(Debug, Clone)]
pub struct FischerProjector {
    n: usize,
    max_degree: u32,
    defining: ComplexPoly,
    basis: QuotientBasis,
    lu: Option<LuDecomposition>,
}

impl FischerProjector {
    /// Solver for an even-dimensional ellipsoid.
    pub fn new(domain: &Ellipsoid, max_degree: u32) -> Result<Self, Error> {
        Self::with_defining(domain.complex_defining()?, max_degree)
    }

    /// Solver for a raw degree-2 real-valued defining polynomial in
    /// complex coordinates.
    pub fn with_defining(defining: ComplexPoly, max_degree: u32) -> Result<Self, Error> {
        if defining.degree() != 2 {
            return Err(Error::DegreeOutOfRange { degree: defining.degree(), max: 2 });
        }
        if defining.conj() != defining {
            return Err(Error::NotRealValued);
        }
        let n = defining.nvars();
        let basis = QuotientBasis::new(n, max_degree);
        let lu = if basis.is_empty() {
            None
        } else {
            Some(LuDecomposition::new(build_phi_matrix(&defining, &basis))?)
        };
        Ok(FischerProjector { n, max_degree, defining, basis, lu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn defining(&self) -> &ComplexPoly {
        &self.defining
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    /// Project a polynomial of degree ≤ the solver's bound.
    pub fn project(&self, p: &ComplexPoly) -> Result<FischerCertificate, Error> {
        if p.nvars() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.nvars() });
        }
        if p.degree() > self.max_degree as i64 {
            return Err(Error::DegreeOutOfRange { degree: p.degree(), max: self.max_degree });
        }
        let solvent = if p.is_holomorphic() {
            ComplexPoly::zero(self.n)
        } else {
            let rhs = self.basis.coords(p)?;
            let lu = self.lu.as_ref().expect("mixed terms imply a nonempty basis");
            self.basis.linear_combination(&lu.solve(&rhs))
        };
        let projection = p - &phi_map(&self.defining, &solvent);
        debug_assert!(projection.is_holomorphic());
        let witness = Form01::dbar(&solvent).scale_poly(&self.defining);
        Ok(FischerCertificate { input: p.clone(), projection, solvent, witness })
    }
}

/// One-shot Bergman projection of `p` on an ellipsoid, with certificate.
pub fn bergman_project(domain: &Ellipsoid, p: &ComplexPoly) -> Result<FischerCertificate, Error> {
    FischerProjector::new(domain, p.degree().max(0) as u32)?.project(p)
}
