//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Every coefficient in the crate is a [`GaussianRational`], a complex
//! number with rational real and imaginary parts. There is no floating
//! point anywhere; arithmetic never rounds.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Complex number with rational real and imaginary parts.
pub type GaussianRational = Complex<Rational>;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as an exact rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Real rational lifted to a Gaussian rational.
pub fn real(r: Rational) -> GaussianRational {
    Complex::new(r, Rational::zero())
}

/// `n/d` as a Gaussian rational with zero imaginary part.
pub fn grat(n: i64, d: i64) -> GaussianRational {
    real(rat(n, d))
}

/// Integer as a Gaussian rational.
pub fn gint(n: i64) -> GaussianRational {
    real(int(n))
}

/// The imaginary unit.
pub fn imag_unit() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// True iff the imaginary part vanishes.
pub fn is_real(z: &GaussianRational) -> bool {
    z.im.is_zero()
}
