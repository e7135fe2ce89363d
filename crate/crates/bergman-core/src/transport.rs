//! Transport of the polynomials-to-polynomials property through
//! polynomial biholomorphisms with polynomial inverse.
//!
//! For `V = f(Ω)` with validated inverse `F` and Jacobian determinants
//! `u = det f'`, `U = det F'`, the projection on `V` is
//! `B_V p = U · B_Ω(u · p∘f) ∘ F`. The source projection comes from the
//! Fischer engine (ellipsoids) or the termwise Reinhardt formula.

use alloc::vec::Vec;

use crate::domains::{Ellipsoid, ReinhardtDomain};
use crate::fischer;
use crate::moments;
use crate::poly::ComplexPoly;
use crate::scalar::GaussianRational;
use crate::Error;

/// Complex Jacobian determinant `det [∂map_i/∂z_j]` of a holomorphic
/// polynomial map, expanded symbolically.
pub fn jacobian_det(map: &[ComplexPoly]) -> ComplexPoly {
    let n = map.len();
    assert!(n > 0);
    let entries: Vec<Vec<ComplexPoly>> =
        map.iter().map(|f| (0..n).map(|j| f.wirtinger_z(j)).collect()).collect();
    poly_det(&entries)
}

fn poly_det(m: &[Vec<ComplexPoly>]) -> ComplexPoly {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    // Laplace expansion along the first row; fine at these sizes
    let mut det = ComplexPoly::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<ComplexPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &poly_det(&minor);
        det = if j % 2 == 0 { &det + &cofactor } else { &det - &cofactor };
    }
    det
}

/// A validated polynomial biholomorphism with polynomial inverse,
/// together with both Jacobian determinants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiholoPair {
    forward: Vec<ComplexPoly>,
    inverse: Vec<ComplexPoly>,
    jac_forward: ComplexPoly,
    jac_inverse: ComplexPoly,
}

impl BiholoPair {
    pub fn n(&self) -> usize {
        self.forward.len()
    }

    pub fn forward(&self) -> &[ComplexPoly] {
        &self.forward
    }

    pub fn inverse(&self) -> &[ComplexPoly] {
        &self.inverse
    }

    /// `u = det(forward')`.
    pub fn jac_forward(&self) -> &ComplexPoly {
        &self.jac_forward
    }

    /// `U = det(inverse')`.
    pub fn jac_inverse(&self) -> &ComplexPoly {
        &self.jac_inverse
    }
}

/// Check both composition identities and the Jacobian chain-rule
/// identity `(u∘F)·U ≡ 1`, all as exact polynomial equalities.
pub fn validate_pair(
    forward: Vec<ComplexPoly>,
    inverse: Vec<ComplexPoly>,
) -> Result<BiholoPair, Error> {
    let n = forward.len();
    if n == 0 || inverse.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: inverse.len() });
    }
    for g in forward.iter().chain(&inverse) {
        if g.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.nvars() });
        }
        if !g.is_holomorphic() {
            return Err(Error::NotHolomorphic);
        }
    }
    for (j, f) in forward.iter().enumerate() {
        if f.compose(&inverse)? != ComplexPoly::var(n, j) {
            return Err(Error::InvalidPair("forward ∘ inverse is not the identity"));
        }
    }
    for (j, g) in inverse.iter().enumerate() {
        if g.compose(&forward)? != ComplexPoly::var(n, j) {
            return Err(Error::InvalidPair("inverse ∘ forward is not the identity"));
        }
    }
    let jac_forward = jacobian_det(&forward);
    let jac_inverse = jacobian_det(&inverse);
    let chain = &jac_forward.compose(&inverse)? * &jac_inverse;
    if chain != ComplexPoly::one(n) {
        return Err(Error::InvalidPair("Jacobian chain-rule identity fails"));
    }
    Ok(BiholoPair { forward, inverse, jac_forward, jac_inverse })
}

/// Source domain a biholomorphism is applied to.
#[derive(Debug, Clone)]
pub enum SourceDomain {
    Ellipsoid(Ellipsoid),
    Reinhardt(ReinhardtDomain),
}

impl SourceDomain {
    /// Complex dimension.
    pub fn n(&self) -> Result<usize, Error> {
        match self {
            SourceDomain::Ellipsoid(e) => {
                if e.dim() % 2 != 0 {
                    Err(Error::OddDimension(e.dim()))
                } else {
                    Ok(e.dim() / 2)
                }
            }
            SourceDomain::Reinhardt(r) => Ok(r.n()),
        }
    }
}

/// The image `V = f(source)` of a projection-capable domain under a
/// validated pair; membership and projection are computed by pulling
/// back through the inverse.
#[derive(Debug, Clone)]
pub struct TransportedDomain {
    source: SourceDomain,
    pair: BiholoPair,
}

impl TransportedDomain {
    pub fn new(source: SourceDomain, pair: BiholoPair) -> Result<Self, Error> {
        let n = source.n()?;
        if n != pair.n() {
            return Err(Error::DimensionMismatch { expected: n, found: pair.n() });
        }
        Ok(TransportedDomain { source, pair })
    }

    pub fn source(&self) -> &SourceDomain {
        &self.source
    }

    pub fn pair(&self) -> &BiholoPair {
        &self.pair
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    /// Membership: `point ∈ V` iff `F(point)` lies in the source.
    pub fn contains(&self, point: &[GaussianRational]) -> Result<bool, Error> {
        let n = self.n();
        if point.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: point.len() });
        }
        let pulled: Vec<GaussianRational> =
            self.pair.inverse.iter().map(|g| g.eval(point)).collect();
        match &self.source {
            SourceDomain::Reinhardt(r) => r.contains(&pulled),
            SourceDomain::Ellipsoid(e) => {
                let mut coords = Vec::with_capacity(2 * n);
                coords.extend(pulled.iter().map(|z| z.re.clone()));
                coords.extend(pulled.iter().map(|z| z.im.clone()));
                e.contains(&coords)
            }
        }
    }
}

/// Bergman projection on the transported domain:
/// `U · B_source(u · p∘f) ∘ F`. The result is always holomorphic,
/// though its degree may exceed `deg p`.
pub fn transport_project(
    domain: &TransportedDomain,
    p: &ComplexPoly,
) -> Result<ComplexPoly, Error> {
    let n = domain.n();
    if p.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.nvars() });
    }
    let pulled = &p.compose(domain.pair.forward())? * domain.pair.jac_forward();
    let projected = match &domain.source {
        SourceDomain::Ellipsoid(e) => fischer::bergman_project(e, &pulled)?.projection,
        SourceDomain::Reinhardt(r) => moments::reinhardt_project(r, &pulled)?,
    };
    Ok(&projected.compose(domain.pair.inverse())? * domain.pair.jac_inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gint, grat};

    fn z(n: usize, j: usize) -> ComplexPoly {
        ComplexPoly::var(n, j)
    }

    fn zb(n: usize, j: usize) -> ComplexPoly {
        ComplexPoly::conj_var(n, j)
    }

    /// The shear `(z₁ + z₂², z₂)` of the unit polydisc in C².
    fn sheared_polydisc() -> TransportedDomain {
        let f = vec![&z(2, 0) + &z(2, 1).pow(2), z(2, 1)];
        let inv = vec![&z(2, 0) - &z(2, 1).pow(2), z(2, 1)];
        let pair = validate_pair(f, inv).unwrap();
        TransportedDomain::new(
            SourceDomain::Reinhardt(ReinhardtDomain::unit_polydisc(2)),
            pair,
        )
        .unwrap()
    }

    #[test]
    fn shear_pair_has_unit_jacobians() {
        let v = sheared_polydisc();
        assert_eq!(v.pair().jac_forward(), &ComplexPoly::one(2));
        assert_eq!(v.pair().jac_inverse(), &ComplexPoly::one(2));
    }

    #[test]
    fn identity_pair_validates() {
        let id = vec![z(2, 0), z(2, 1)];
        let pair = validate_pair(id.clone(), id).unwrap();
        assert_eq!(pair.jac_forward(), &ComplexPoly::one(2));
    }

    #[test]
    fn non_inverse_pair_rejected() {
        let f = vec![z(2, 0).pow(2), z(2, 1)];
        let inv = vec![z(2, 0), z(2, 1)];
        assert!(matches!(validate_pair(f, inv), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn antiholomorphic_component_rejected() {
        let f = vec![zb(2, 0), z(2, 1)];
        let inv = vec![z(2, 0), z(2, 1)];
        assert_eq!(validate_pair(f, inv), Err(Error::NotHolomorphic));
    }

    #[test]
    fn jacobian_of_shear() {
        let f = vec![&z(2, 0) + &z(2, 1).pow(2), z(2, 1)];
        assert_eq!(jacobian_det(&f), ComplexPoly::one(2));
        let g = vec![z(2, 0).scale(&gint(3)), &z(2, 1) + &z(2, 0)];
        assert_eq!(jacobian_det(&g), ComplexPoly::constant(2, gint(3)));
    }

    #[test]
    fn projection_of_antiholomorphic_vanishes() {
        let v = sheared_polydisc();
        assert!(transport_project(&v, &zb(2, 0)).unwrap().is_zero());
    }

    #[test]
    fn holomorphic_fixed_and_idempotent() {
        let v = sheared_polydisc();
        let h = &z(2, 0).scale(&grat(7, 5)) + &z(2, 1).pow(3);
        assert_eq!(transport_project(&v, &h).unwrap(), h);
        let p = &z(2, 0) * &zb(2, 0);
        let bp = transport_project(&v, &p).unwrap();
        assert_eq!(transport_project(&v, &bp).unwrap(), bp);
    }

    #[test]
    fn mixed_monomial_projects_to_constant() {
        let v = sheared_polydisc();
        let p = &z(2, 0) * &zb(2, 0);
        assert_eq!(
            transport_project(&v, &p).unwrap(),
            ComplexPoly::constant(2, grat(5, 6))
        );
    }

    #[test]
    fn projection_is_linear() {
        let v = sheared_polydisc();
        let p = &z(2, 0) * &zb(2, 0);
        let q = &zb(2, 1).pow(2) + &z(2, 0);
        let a = grat(3, 4);
        let b = crate::scalar::imag_unit() * grat(2, 7);
        let combo = &p.scale(&a) + &q.scale(&b);
        let lhs = transport_project(&v, &combo).unwrap();
        let rhs = &transport_project(&v, &p).unwrap().scale(&a)
            + &transport_project(&v, &q).unwrap().scale(&b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_through_inverse() {
        let v = sheared_polydisc();
        assert!(v.contains(&[grat(91, 100), grat(1, 10)]).unwrap());
        assert!(v.contains(&[grat(171, 100), grat(9, 10)]).unwrap());
        assert!(!v.contains(&[grat(131, 100), grat(1, 2)]).unwrap());
        assert!(!v.contains(&[grat(-171, 100), grat(-9, 10)]).unwrap());
    }

    #[test]
    fn transport_over_ellipsoid_source() {
        // shear of the unit ball of C²; Fischer engine as the source
        let f = vec![&z(2, 0) + &z(2, 1).pow(2), z(2, 1)];
        let inv = vec![&z(2, 0) - &z(2, 1).pow(2), z(2, 1)];
        let pair = validate_pair(f, inv).unwrap();
        let v = TransportedDomain::new(
            SourceDomain::Ellipsoid(Ellipsoid::unit_ball(4)),
            pair,
        )
        .unwrap();
        let p = &z(2, 0) * &zb(2, 0);
        let got = transport_project(&v, &p).unwrap();
        assert!(got.is_holomorphic());
        // cross-check against the Reinhardt route on the same ball
        let pair2 = validate_pair(
            vec![&z(2, 0) + &z(2, 1).pow(2), z(2, 1)],
            vec![&z(2, 0) - &z(2, 1).pow(2), z(2, 1)],
        )
        .unwrap();
        let v2 = TransportedDomain::new(
            SourceDomain::Reinhardt(ReinhardtDomain::unit_ball(2)),
            pair2,
        )
        .unwrap();
        assert_eq!(got, transport_project(&v2, &p).unwrap());
    }
}
