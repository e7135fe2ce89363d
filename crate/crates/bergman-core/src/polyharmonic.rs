//! Bergman projection onto polyharmonic functions of order `m` on real
//! ellipsoids, via the map `p ↦ Δ^m(r^{2m} Δ^m p)`.
//!
//! Since the polyharmonic polynomials of degree ≤ N are exactly the
//! kernel of `Δ^m` there, every class modulo them is faithfully
//! represented by `q = Δ^m p`, which has degree ≤ N − 2m. Transported
//! through that chart the map becomes `ψ(q) = Δ^{2m}(r^{2m} q)` acting on
//! degree ≤ N − 2m, and one exact solve of `ψ(q) = Δ^m P` produces the
//! orthogonal decomposition `P = Δ^m(r^{2m} q) + h` with `Δ^m h = 0`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::domains::Ellipsoid;
use crate::linalg::{self, LuDecomposition, Matrix};
use crate::multiindex::{indices_up_to, MultiIndex};
use crate::poly::{Poly, RealKey, RealPoly};
use crate::scalar::GaussianRational;
use crate::Error;

/// `ψ(q) = Δ^{2m}(r^{2m} · q)`; does not increase degree when
/// `deg r = 2`.
pub fn psi_map(r: &RealPoly, m: u32, q: &RealPoly) -> RealPoly {
    assert!(m >= 1, "order must be positive");
    assert_eq!(r.nvars(), q.nvars(), "variable count mismatch");
    (&r.pow(2 * m) * q).laplacian_power(2 * m)
}

/// The exact decomposition `input = Δ^m(r^{2m}·q) + projection` with
/// `Δ^m projection = 0`.
///
/// `witness` is `Δ^m(r^{2m} q)`; the underlying `r^{2m} q` vanishes to
/// order `2m − 1` on the boundary by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyharmonicCertificate {
    pub input: RealPoly,
    pub order: u32,
    pub projection: RealPoly,
    pub reduced_solvent: RealPoly,
    pub witness: RealPoly,
}

impl PolyharmonicCertificate {
    /// Recheck all certificate invariants against a defining polynomial.
    pub fn check(&self, defining: &RealPoly) -> bool {
        let rebuilt =
            (&defining.pow(2 * self.order) * &self.reduced_solvent).laplacian_power(self.order);
        self.projection.laplacian_power(self.order).is_zero()
            && self.projection.degree() <= self.input.degree().max(0)
            && (&(&self.witness + &self.projection) - &self.input).is_zero()
            && rebuilt == self.witness
            && (self.reduced_solvent.is_zero()
                || self.reduced_solvent.degree() <= self.input.degree() - 2 * self.order as i64)
    }
}

/// Reusable solver for one ellipsoid, order, and degree bound.
#[derive(Debug, Clone)]
pub struct PolyharmonicProjector {
    dim: usize,
    order: u32,
    max_degree: u32,
    defining: RealPoly,
    monomials: Vec<MultiIndex>,
    index: BTreeMap<MultiIndex, usize>,
    lu: Option<LuDecomposition>,
}

impl PolyharmonicProjector {
    pub fn new(domain: &Ellipsoid, order: u32, max_degree: u32) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::NonPositiveParameter);
        }
        let dim = domain.dim();
        let defining = domain.defining_poly().clone();
        let monomials: Vec<MultiIndex> = if max_degree >= 2 * order {
            indices_up_to(dim, max_degree - 2 * order)
        } else {
            Vec::new()
        };
        let index: BTreeMap<MultiIndex, usize> =
            monomials.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let lu = if monomials.is_empty() {
            None
        } else {
            let m = monomials.len();
            let mut a = Matrix::zeros(m, m);
            for (j, kappa) in monomials.iter().enumerate() {
                let mono = RealPoly::monomial(dim, RealKey(kappa.clone()), GaussianRational::one());
                let image = psi_map(&defining, order, &mono);
                for (key, c) in image.terms() {
                    let i = *index.get(&key.0).expect("psi does not increase degree");
                    a.set(i, j, c.clone());
                }
            }
            Some(LuDecomposition::new(a)?)
        };
        Ok(PolyharmonicProjector { dim, order, max_degree, defining, monomials, index, lu })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn project(&self, p: &RealPoly) -> Result<PolyharmonicCertificate, Error> {
        if p.nvars() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.nvars() });
        }
        if p.degree() > self.max_degree as i64 {
            return Err(Error::DegreeOutOfRange { degree: p.degree(), max: self.max_degree });
        }
        let reduced = p.laplacian_power(self.order);
        if reduced.is_zero() {
            // already polyharmonic of this order
            return Ok(PolyharmonicCertificate {
                input: p.clone(),
                order: self.order,
                projection: p.clone(),
                reduced_solvent: RealPoly::zero(self.dim),
                witness: RealPoly::zero(self.dim),
            });
        }
        let mut rhs = vec![GaussianRational::zero(); self.monomials.len()];
        for (key, c) in reduced.terms() {
            let i = *self.index.get(&key.0).expect("degree bound already checked");
            rhs[i] = c.clone();
        }
        let x = self.lu.as_ref().expect("nonzero reduced input implies a solver").solve(&rhs);
        let solvent = Poly::from_terms(
            self.dim,
            self.monomials.iter().map(|k| RealKey(k.clone())).zip(x),
        );
        let witness = (&self.defining.pow(2 * self.order) * &solvent).laplacian_power(self.order);
        let projection = p - &witness;
        debug_assert!(projection.laplacian_power(self.order).is_zero());
        Ok(PolyharmonicCertificate {
            input: p.clone(),
            order: self.order,
            projection,
            reduced_solvent: solvent,
            witness,
        })
    }
}

/// One-shot polyharmonic projection with certificate.
pub fn polyharmonic_project(
    domain: &Ellipsoid,
    order: u32,
    p: &RealPoly,
) -> Result<PolyharmonicCertificate, Error> {
    PolyharmonicProjector::new(domain, order, p.degree().max(0) as u32)?.project(p)
}

/// Matrix of `Δ^m` from monomials of degree ≤ N to monomials of degree
/// ≤ N − 2m (no rows when N < 2m).
pub fn laplacian_power_matrix(d: usize, m: u32, max_degree: u32) -> Matrix {
    let cols = indices_up_to(d, max_degree);
    let rows: Vec<MultiIndex> = if max_degree >= 2 * m {
        indices_up_to(d, max_degree - 2 * m)
    } else {
        Vec::new()
    };
    let row_index: BTreeMap<&MultiIndex, usize> =
        rows.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut a = Matrix::zeros(rows.len(), cols.len());
    for (j, kappa) in cols.iter().enumerate() {
        let mono = RealPoly::monomial(d, RealKey(kappa.clone()), GaussianRational::one());
        for (key, c) in mono.laplacian_power(m).terms() {
            let i = *row_index.get(&key.0).expect("laplacian lowers degree by 2m");
            a.set(i, j, c.clone());
        }
    }
    a
}

/// Rank of `Δ^m` on polynomials of degree ≤ N (equals the full target
/// dimension: the map is onto).
pub fn laplacian_rank(d: usize, m: u32, max_degree: u32) -> usize {
    linalg::rank(&laplacian_power_matrix(d, m, max_degree))
}

/// Exact basis of the space of polynomials of degree ≤ N annihilated by
/// `Δ^m`: the null space of the monomial matrix of `Δ^m`.
pub fn polyharmonic_basis(d: usize, m: u32, max_degree: u32) -> Vec<RealPoly> {
    let cols = indices_up_to(d, max_degree);
    let a = laplacian_power_matrix(d, m, max_degree);
    linalg::null_space(&a)
        .into_iter()
        .map(|v| {
            Poly::from_terms(d, cols.iter().map(|k| RealKey(k.clone())).zip(v))
        })
        .collect()
}
