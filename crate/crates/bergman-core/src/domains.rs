//! Geometric domains the projections act on: ellipsoids given as
//! rational affine images of the unit ball, and Reinhardt circular
//! domains (polydiscs and complex ellipsoids).

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::poly::{ComplexPoly, RealPoly};
use crate::scalar::{is_real, real, GaussianRational, Rational};
use crate::transport::TransportedDomain;
use crate::Error;

/// Invertible rational affine map `u ↦ S·u + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    matrix: Vec<Vec<Rational>>,
    center: Vec<Rational>,
    inverse: Vec<Vec<Rational>>,
    det: Rational,
}

impl AffineMap {
    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn center(&self) -> &[Rational] {
        &self.center
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn det_abs(&self) -> Rational {
        self.det.abs()
    }

    /// Rows of the map as linear polynomials `c_i + Σ_j S_ij u_j`.
    pub fn rows_as_polys(&self) -> Vec<RealPoly> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                let mut row = RealPoly::constant(d, real(self.center[i].clone()));
                for j in 0..d {
                    row = &row + &RealPoly::var(d, j).scale(&real(self.matrix[i][j].clone()));
                }
                row
            })
            .collect()
    }

    /// Apply the inverse map to a point.
    pub fn apply_inverse(&self, w: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        assert_eq!(w.len(), d);
        (0..d)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..d {
                    acc += self.inverse[i][j].clone() * (w[j].clone() - self.center[j].clone());
                }
                acc
            })
            .collect()
    }

    /// Apply the forward map to a point.
    pub fn apply(&self, u: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        assert_eq!(u.len(), d);
        (0..d)
            .map(|i| {
                let mut acc = self.center[i].clone();
                for j in 0..d {
                    acc += self.matrix[i][j].clone() * u[j].clone();
                }
                acc
            })
            .collect()
    }
}

/// Ellipsoid in `R^d`, the image of the unit ball under an invertible
/// rational affine map, carrying its derived degree-2 defining
/// polynomial `r` (negative inside, zero on the boundary).
///
/// An ellipsoid may instead be built from a raw defining polynomial; it
/// then supports the projection engines but not the exact moment oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ellipsoid {
    dim: usize,
    affine: Option<AffineMap>,
    defining: RealPoly,
}

impl Ellipsoid {
    /// Build from an affine map; derives `r(w) = |S⁻¹(w−c)|² − 1`.
    pub fn from_affine(matrix: Vec<Vec<Rational>>, center: Vec<Rational>) -> Result<Self, Error> {
        let d = center.len();
        if d == 0 || matrix.len() != d || matrix.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: matrix.len() });
        }
        let lifted = Matrix::from_rows(
            matrix.iter().map(|row| row.iter().map(|v| real(v.clone())).collect()).collect(),
        );
        let det_c = linalg::determinant(&lifted);
        if det_c.is_zero() {
            return Err(Error::SingularAffine);
        }
        let inv_c = linalg::inverse(&lifted).expect("nonzero determinant");
        let inverse: Vec<Vec<Rational>> =
            (0..d).map(|i| (0..d).map(|j| inv_c.get(i, j).re.clone()).collect()).collect();
        let affine = AffineMap { matrix, center, inverse, det: det_c.re };

        // r(w) = Σ_i ( Σ_j T_ij (w_j - c_j) )² - 1
        let mut defining = -&RealPoly::one(d);
        for i in 0..d {
            let mut linear = RealPoly::zero(d);
            for j in 0..d {
                let coef = real(affine.inverse[i][j].clone());
                let shifted = &RealPoly::var(d, j)
                    - &RealPoly::constant(d, real(affine.center[j].clone()));
                linear = &linear + &shifted.scale(&coef);
            }
            defining = &defining + &(&linear * &linear);
        }
        Ok(Ellipsoid { dim: d, affine: Some(affine), defining })
    }

    /// Build from a raw degree-2 real-valued defining polynomial. The
    /// moment oracle is unavailable for such ellipsoids.
    pub fn from_defining(defining: RealPoly) -> Result<Self, Error> {
        if defining.degree() != 2 {
            return Err(Error::DegreeOutOfRange { degree: defining.degree(), max: 2 });
        }
        if defining.terms().any(|(_, c)| !is_real(c)) {
            return Err(Error::NotHolomorphic);
        }
        Ok(Ellipsoid { dim: defining.nvars(), affine: None, defining })
    }

    /// Unit ball of `R^d`.
    pub fn unit_ball(d: usize) -> Self {
        let matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Ellipsoid::from_affine(matrix, alloc::vec![Rational::zero(); d])
            .expect("identity map is invertible")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine(&self) -> Option<&AffineMap> {
        self.affine.as_ref()
    }

    pub fn is_affine_backed(&self) -> bool {
        self.affine.is_some()
    }

    pub fn defining_poly(&self) -> &RealPoly {
        &self.defining
    }

    /// The defining polynomial in complex coordinates; requires an even
    /// dimension. Real-valued and of degree 2.
    pub fn complex_defining(&self) -> Result<ComplexPoly, Error> {
        self.defining.to_complex()
    }

    /// Exact membership: `r(point) < 0`.
    pub fn contains(&self, point: &[Rational]) -> Result<bool, Error> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: point.len() });
        }
        let v = self.defining.eval(point);
        debug_assert!(is_real(&v));
        Ok(v.re.is_negative())
    }
}

/// Reinhardt circular domain with closed-form monomial moments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReinhardtDomain {
    /// `{ |z_j| < radius_j }`.
    Polydisc { radii: Vec<Rational> },
    /// `{ Σ a_j |z_j|² < 1 }` with positive rational `a_j`.
    ComplexEllipsoid { coeffs: Vec<Rational> },
}

impl ReinhardtDomain {
    pub fn polydisc(radii: Vec<Rational>) -> Result<Self, Error> {
        if radii.is_empty() || radii.iter().any(|r| !r.is_positive()) {
            return Err(Error::NonPositiveParameter);
        }
        Ok(ReinhardtDomain::Polydisc { radii })
    }

    pub fn complex_ellipsoid(coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.is_empty() || coeffs.iter().any(|a| !a.is_positive()) {
            return Err(Error::NonPositiveParameter);
        }
        Ok(ReinhardtDomain::ComplexEllipsoid { coeffs })
    }

    /// Unit polydisc of `C^n`.
    pub fn unit_polydisc(n: usize) -> Self {
        ReinhardtDomain::Polydisc { radii: alloc::vec![Rational::one(); n] }
    }

    /// Unit ball of `C^n` as the complex ellipsoid with all `a_j = 1`.
    pub fn unit_ball(n: usize) -> Self {
        ReinhardtDomain::ComplexEllipsoid { coeffs: alloc::vec![Rational::one(); n] }
    }

    pub fn n(&self) -> usize {
        match self {
            ReinhardtDomain::Polydisc { radii } => radii.len(),
            ReinhardtDomain::ComplexEllipsoid { coeffs } => coeffs.len(),
        }
    }

    /// Defining polynomial `−1 + Σ a_j z_j z̄_j` (complex ellipsoids
    /// only; a polydisc is not a quadric).
    pub fn complex_defining(&self) -> Option<ComplexPoly> {
        match self {
            ReinhardtDomain::Polydisc { .. } => None,
            ReinhardtDomain::ComplexEllipsoid { coeffs } => {
                let n = coeffs.len();
                let mut r = -&ComplexPoly::one(n);
                for (j, a) in coeffs.iter().enumerate() {
                    let zzb = &ComplexPoly::var(n, j) * &ComplexPoly::conj_var(n, j);
                    r = &r + &zzb.scale(&real(a.clone()));
                }
                Some(r)
            }
        }
    }

    /// Complex ellipsoids as raw-defining-polynomial ellipsoids in
    /// `R^{2n}` (the diagonal map has irrational entries, so there is no
    /// affine backing). `None` for polydiscs.
    pub fn to_ellipsoid(&self) -> Option<Ellipsoid> {
        let r = self.complex_defining()?;
        Some(Ellipsoid::from_defining(r.to_real()).expect("degree-2 real polynomial"))
    }

    /// Exact membership; polydiscs compare `|z_j|² < radius_j²`.
    pub fn contains(&self, point: &[GaussianRational]) -> Result<bool, Error> {
        if point.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: point.len() });
        }
        let norm2 = |z: &GaussianRational| z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone();
        match self {
            ReinhardtDomain::Polydisc { radii } => Ok(point
                .iter()
                .zip(radii)
                .all(|(z, r)| norm2(z) < r.clone() * r.clone())),
            ReinhardtDomain::ComplexEllipsoid { coeffs } => {
                let mut acc = Rational::zero();
                for (z, a) in point.iter().zip(coeffs) {
                    acc += a.clone() * norm2(z);
                }
                Ok(acc < Rational::one())
            }
        }
    }
}

/// Any supported domain, as read from the interchange format.
#[derive(Debug, Clone)]
pub enum Domain {
    Ellipsoid(Ellipsoid),
    Reinhardt(ReinhardtDomain),
    Transported(TransportedDomain),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn diag(entries: &[Rational]) -> Vec<Vec<Rational>> {
        let d = entries.len();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { entries[i].clone() } else { Rational::zero() })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn unit_disc_defining_poly() {
        let e = Ellipsoid::unit_ball(2);
        // x² + y² - 1
        let expected = &(&RealPoly::var(2, 0).pow(2) + &RealPoly::var(2, 1).pow(2))
            - &RealPoly::one(2);
        assert_eq!(e.defining_poly(), &expected);
        assert_eq!(
            e.complex_defining().unwrap(),
            &(&ComplexPoly::var(1, 0) * &ComplexPoly::conj_var(1, 0)) - &ComplexPoly::one(1)
        );
    }

    #[test]
    fn scaled_ellipse_defining_poly() {
        let e = Ellipsoid::from_affine(diag(&[int(2), int(1)]), alloc::vec![int(0), int(0)])
            .unwrap();
        // x²/4 + y² - 1
        let expected = &(&RealPoly::var(2, 0).pow(2).scale(&crate::scalar::grat(1, 4))
            + &RealPoly::var(2, 1).pow(2))
            - &RealPoly::one(2);
        assert_eq!(e.defining_poly(), &expected);
        // in complex coordinates: (z+z̄)²/16 - (z-z̄)²/4 - 1
        let z = ComplexPoly::var(1, 0);
        let zb = ComplexPoly::conj_var(1, 0);
        let expected_c = &(&(&z + &zb).pow(2).scale(&crate::scalar::grat(1, 16))
            - &(&z - &zb).pow(2).scale(&crate::scalar::grat(1, 4)))
            - &ComplexPoly::one(1);
        assert_eq!(e.complex_defining().unwrap(), expected_c);
    }

    #[test]
    fn four_dim_identity_is_complex_ball() {
        let e = Ellipsoid::unit_ball(4);
        let z1 = ComplexPoly::var(2, 0);
        let z2 = ComplexPoly::var(2, 1);
        let expected = &(&(&z1 * &z1.conj()) + &(&z2 * &z2.conj())) - &ComplexPoly::one(2);
        assert_eq!(e.complex_defining().unwrap(), expected);
    }

    #[test]
    fn defining_poly_vanishes_on_sphere_image() {
        // compose r with the affine map: recovers |u|² - 1
        let e = Ellipsoid::from_affine(
            alloc::vec![
                alloc::vec![int(2), rat(1, 2)],
                alloc::vec![int(0), int(1)],
            ],
            alloc::vec![rat(1, 3), int(-1)],
        )
        .unwrap();
        let pulled = e.defining_poly().compose(&e.affine().unwrap().rows_as_polys()).unwrap();
        let expected = &(&RealPoly::var(2, 0).pow(2) + &RealPoly::var(2, 1).pow(2))
            - &RealPoly::one(2);
        assert_eq!(pulled, expected);
    }

    #[test]
    fn singular_affine_rejected() {
        let r = Ellipsoid::from_affine(
            alloc::vec![alloc::vec![int(1), int(1)], alloc::vec![int(2), int(2)]],
            alloc::vec![int(0), int(0)],
        );
        assert_eq!(r.err(), Some(Error::SingularAffine));
    }

    #[test]
    fn membership_center_and_boundary() {
        let e = Ellipsoid::from_affine(diag(&[int(2), int(1)]), alloc::vec![int(1), int(0)])
            .unwrap();
        assert!(e.contains(&[int(1), int(0)]).unwrap());
        // boundary point (3, 0) is not inside
        assert!(!e.contains(&[int(3), int(0)]).unwrap());
        assert!(!e.contains(&[int(4), int(0)]).unwrap());
    }

    #[test]
    fn membership_real_valued_conversion() {
        let e = Ellipsoid::unit_ball(2);
        let rc = e.complex_defining().unwrap();
        assert_eq!(rc.conj(), rc);
    }

    #[test]
    fn polydisc_membership_is_rational() {
        let p = ReinhardtDomain::polydisc(alloc::vec![int(1), int(1)]).unwrap();
        let inside = [crate::scalar::grat(9, 10), crate::scalar::grat(1, 10)];
        let outside = [crate::scalar::grat(53, 50), crate::scalar::grat(1, 2)];
        assert!(p.contains(&inside).unwrap());
        assert!(!p.contains(&outside).unwrap());
    }

    #[test]
    fn complex_ellipsoid_membership() {
        let ce = ReinhardtDomain::complex_ellipsoid(alloc::vec![int(1), int(2)]).unwrap();
        assert!(ce.contains(&[crate::scalar::gint(0), crate::scalar::gint(0)]).unwrap());
        assert!(!ce.contains(&[crate::scalar::gint(1), crate::scalar::gint(0)]).unwrap());
        assert_eq!(ce.n(), 2);
    }

    #[test]
    fn nonpositive_parameters_rejected() {
        assert_eq!(
            ReinhardtDomain::polydisc(alloc::vec![int(1), int(0)]).err(),
            Some(Error::NonPositiveParameter)
        );
        assert_eq!(
            ReinhardtDomain::complex_ellipsoid(alloc::vec![int(-1)]).err(),
            Some(Error::NonPositiveParameter)
        );
    }

    #[test]
    fn raw_defining_polynomial_ellipsoid() {
        // 2x² + 2y² - 1: complex ellipsoid a = 2 in C¹, irrational radius
        let r = &(&RealPoly::var(2, 0).pow(2) + &RealPoly::var(2, 1).pow(2)).scale(&crate::scalar::gint(2))
            - &RealPoly::one(2);
        let e = Ellipsoid::from_defining(r).unwrap();
        assert!(!e.is_affine_backed());
        assert!(e.contains(&[rat(1, 2), int(0)]).unwrap());
        assert!(!e.contains(&[int(1), int(0)]).unwrap());
    }

    #[test]
    fn random_affine_images_stay_inside() {
        // u inside the ball maps inside, u outside maps outside
        let e = Ellipsoid::from_affine(
            alloc::vec![
                alloc::vec![int(2), int(1)],
                alloc::vec![int(0), rat(1, 3)],
            ],
            alloc::vec![int(5), rat(-1, 2)],
        )
        .unwrap();
        let aff = e.affine().unwrap().clone();
        // deterministic sweep of rational directions
        for (p, q) in [(1i64, 2i64), (2, 3), (-3, 5), (4, 7), (-5, 9)] {
            let u = alloc::vec![rat(p, q), rat(q - p, 2 * q)];
            let s: Rational =
                u.iter().map(|t| t.clone() * t.clone()).fold(Rational::zero(), |a, b| a + b);
            // shrink inside: u/(s+1); push outside: u·(s+2)/s
            let inside: Vec<Rational> =
                u.iter().map(|t| t.clone() / (s.clone() + Rational::one())).collect();
            let outside: Vec<Rational> = u
                .iter()
                .map(|t| t.clone() * (s.clone() + int(2)) / s.clone())
                .collect();
            assert!(e.contains(&aff.apply(&inside)).unwrap());
            assert!(!e.contains(&aff.apply(&outside)).unwrap());
        }
    }
}
