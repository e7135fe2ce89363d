//! Sparse multivariate polynomials with exact Gaussian-rational
//! coefficients, in complex (`z`, `z̄`) or real coordinates.
//!
//! Terms live in a `BTreeMap` keyed by the graded-lex monomial order, so
//! iteration, degree queries, and serialization are deterministic. Two
//! coordinate kinds exist as distinct types: [`ComplexPoly`] is a
//! polynomial in `z_1..z_n, z̄_1..z̄_n` (a term key is an exponent pair
//! `(α, β)`), and [`RealPoly`] is a polynomial in `x_1..x_d`. Both carry
//! Gaussian-rational coefficients uniformly; operations that require real
//! values check that imaginary parts vanish.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::multiindex::MultiIndex;
use crate::scalar::{imag_unit, real, GaussianRational, Rational};
use crate::Error;

/// Monomial key for one coordinate kind: ordered, multiplicative, with
/// exact quotients where they exist.
pub trait MonomialKey: Clone + Ord + fmt::Debug {
    fn constant(nvars: usize) -> Self;
    /// Total degree of the monomial.
    fn degree(&self) -> u32;
    /// Key of the product monomial.
    fn product(&self, other: &Self) -> Self;
    /// Key of the exact quotient monomial, if `other` divides `self`.
    fn try_quotient(&self, other: &Self) -> Option<Self>;
    fn arity(&self) -> usize;
}

/// Exponent pair `(α, β)` of a complex-coordinate monomial `z^α z̄^β`.
///
/// Ordered graded-lexicographically on the concatenation of `α` and `β`
/// (z-block first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexKey {
    pub alpha: MultiIndex,
    pub beta: MultiIndex,
}

impl ComplexKey {
    pub fn new(alpha: MultiIndex, beta: MultiIndex) -> Self {
        assert_eq!(alpha.len(), beta.len());
        ComplexKey { alpha, beta }
    }

    /// True iff no conjugated variable occurs (`β = 0`).
    pub fn is_holomorphic(&self) -> bool {
        self.beta.is_zero()
    }
}

impl Ord for ComplexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            self.alpha
                .entries()
                .iter()
                .chain(self.beta.entries())
                .cmp(other.alpha.entries().iter().chain(other.beta.entries()))
        })
    }
}

impl PartialOrd for ComplexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl MonomialKey for ComplexKey {
    fn constant(nvars: usize) -> Self {
        ComplexKey::new(MultiIndex::zero(nvars), MultiIndex::zero(nvars))
    }

    fn degree(&self) -> u32 {
        self.alpha.total() + self.beta.total()
    }

    fn product(&self, other: &Self) -> Self {
        ComplexKey::new(self.alpha.add(&other.alpha), self.beta.add(&other.beta))
    }

    fn try_quotient(&self, other: &Self) -> Option<Self> {
        Some(ComplexKey::new(
            self.alpha.try_sub(&other.alpha)?,
            self.beta.try_sub(&other.beta)?,
        ))
    }

    fn arity(&self) -> usize {
        self.alpha.len()
    }
}

/// Exponent vector of a real-coordinate monomial `x^κ`, graded-lex
/// ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealKey(pub MultiIndex);

impl MonomialKey for RealKey {
    fn constant(nvars: usize) -> Self {
        RealKey(MultiIndex::zero(nvars))
    }

    fn degree(&self) -> u32 {
        self.0.total()
    }

    fn product(&self, other: &Self) -> Self {
        RealKey(self.0.add(&other.0))
    }

    fn try_quotient(&self, other: &Self) -> Option<Self> {
        self.0.try_sub(&other.0).map(RealKey)
    }

    fn arity(&self) -> usize {
        self.0.len()
    }
}

/// Sparse polynomial over the Gaussian rationals, generic in the
/// monomial key. No zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: MonomialKey> {
    nvars: usize,
    terms: BTreeMap<K, GaussianRational>,
}

/// Polynomial in `z_1..z_n` and their conjugates.
pub type ComplexPoly = Poly<ComplexKey>;

/// Polynomial in real coordinates `x_1..x_d`.
pub type RealPoly = Poly<RealKey>;

impl<K: MonomialKey> Poly<K> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(K::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, GaussianRational::one())
    }

    pub fn monomial(nvars: usize, key: K, c: GaussianRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(key, c);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (K, GaussianRational)>,
    {
        let mut p = Poly::zero(nvars);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .last_key_value()
            .map(|(k, _)| k.degree() as i64)
            .unwrap_or(-1)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&K, &GaussianRational)> {
        self.terms.iter()
    }

    /// Coefficient of `key` (zero if absent).
    pub fn coeff(&self, key: &K) -> GaussianRational {
        self.terms.get(key).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Highest term in the monomial order, cloned.
    pub fn leading_term(&self) -> Option<(K, GaussianRational)> {
        self.terms.last_key_value().map(|(k, c)| (k.clone(), c.clone()))
    }

    /// Accumulate one term, dropping it if the total vanishes.
    pub fn add_term(&mut self, key: K, c: GaussianRational) {
        debug_assert_eq!(key.arity(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Apply `f` to every coefficient (must not map nonzero to zero).
    fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division
    /// leaves a remainder. Single-divisor reduction in the graded-lex
    /// order; for one divisor the remainder vanishes iff it divides.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dk, dc) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((rk, rc)) = rem.leading_term() {
            let qk = rk.try_quotient(&dk)?;
            let qc = rc / dc.clone();
            let t = Poly::monomial(self.nvars, qk, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl<K: MonomialKey> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Self) -> Poly<K> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<K: MonomialKey> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Self) -> Poly<K> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl<K: MonomialKey> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Self) -> Poly<K> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka.product(kb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<K: MonomialKey> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        self.map_coeffs(|c| -c.clone())
    }
}

fn scalar_pow(b: &GaussianRational, e: u32) -> GaussianRational {
    let mut acc = GaussianRational::one();
    for _ in 0..e {
        acc *= b.clone();
    }
    acc
}

/// Shared power-table substitution: image of each variable `j` raised to
/// the exponents requested by `need[j]`.
fn power_table<K: MonomialKey>(images: &[Poly<K>], need: &[u32]) -> Vec<Vec<Poly<K>>> {
    images
        .iter()
        .zip(need)
        .map(|(img, &top)| {
            let mut pows = Vec::with_capacity(top as usize + 1);
            pows.push(Poly::one(img.nvars()));
            for e in 1..=top {
                let next = &pows[(e - 1) as usize] * img;
                pows.push(next);
            }
            pows
        })
        .collect()
}

impl ComplexPoly {
    /// The variable `z_j` (0-based).
    pub fn var(n: usize, j: usize) -> Self {
        assert!(j < n);
        Poly::monomial(
            n,
            ComplexKey::new(MultiIndex::unit(n, j), MultiIndex::zero(n)),
            GaussianRational::one(),
        )
    }

    /// The conjugated variable `z̄_j` (0-based).
    pub fn conj_var(n: usize, j: usize) -> Self {
        assert!(j < n);
        Poly::monomial(
            n,
            ComplexKey::new(MultiIndex::zero(n), MultiIndex::unit(n, j)),
            GaussianRational::one(),
        )
    }

    /// Single term `c · z^alpha z̄^beta` from exponent slices.
    pub fn term(n: usize, alpha: &[u32], beta: &[u32], c: GaussianRational) -> Self {
        assert_eq!(alpha.len(), n);
        assert_eq!(beta.len(), n);
        Poly::monomial(
            n,
            ComplexKey::new(MultiIndex::new(alpha.to_vec()), MultiIndex::new(beta.to_vec())),
            c,
        )
    }

    /// True iff every stored key has `β = 0`.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(ComplexKey::is_holomorphic)
    }

    /// The sub-sum of terms with `β = 0`.
    pub fn holomorphic_part(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.is_holomorphic())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// The sub-sum of terms with `|β| ≥ 1`.
    pub fn mixed_part(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| !k.is_holomorphic())
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Formal Wirtinger derivative `∂/∂z_j`.
    pub fn wirtinger_z(&self, j: usize) -> Self {
        assert!(j < self.nvars, "variable index out of range");
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            let e = k.alpha.get(j);
            if e > 0 {
                let key = ComplexKey::new(k.alpha.with_shift(j, -1), k.beta.clone());
                out.add_term(key, c.clone() * real(Rational::from_integer(e.into())));
            }
        }
        out
    }

    /// Formal Wirtinger derivative `∂/∂z̄_j`.
    pub fn wirtinger_zbar(&self, j: usize) -> Self {
        assert!(j < self.nvars, "variable index out of range");
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            let e = k.beta.get(j);
            if e > 0 {
                let key = ComplexKey::new(k.alpha.clone(), k.beta.with_shift(j, -1));
                out.add_term(key, c.clone() * real(Rational::from_integer(e.into())));
            }
        }
        out
    }

    /// Complex conjugate of the function: swaps `α` and `β` and
    /// conjugates coefficients. An involution.
    pub fn conj(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (ComplexKey::new(k.beta.clone(), k.alpha.clone()), c.conj()))
                .collect(),
        }
    }

    /// Substitute a holomorphic polynomial map: `z_j ← f_j` in the
    /// `α`-part and `z̄_j ← conj(f_j)` in the `β`-part.
    pub fn compose(&self, map: &[ComplexPoly]) -> Result<ComplexPoly, Error> {
        if map.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: map.len() });
        }
        let target = map.first().map(Poly::nvars).unwrap_or(0);
        for f in map {
            if f.nvars() != target {
                return Err(Error::DimensionMismatch { expected: target, found: f.nvars() });
            }
            if !f.is_holomorphic() {
                return Err(Error::NotHolomorphic);
            }
        }
        let mut amax = vec![0u32; self.nvars];
        let mut bmax = vec![0u32; self.nvars];
        for k in self.terms.keys() {
            for j in 0..self.nvars {
                amax[j] = amax[j].max(k.alpha.get(j));
                bmax[j] = bmax[j].max(k.beta.get(j));
            }
        }
        let conj_map: Vec<ComplexPoly> = map.iter().map(ComplexPoly::conj).collect();
        let pow_f = power_table(map, &amax);
        let pow_fc = power_table(&conj_map, &bmax);
        let mut out = Poly::zero(target);
        for (k, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for j in 0..self.nvars {
                let a = k.alpha.get(j);
                if a > 0 {
                    t = &t * &pow_f[j][a as usize];
                }
                let b = k.beta.get(j);
                if b > 0 {
                    t = &t * &pow_fc[j][b as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Rewrite in real coordinates `(x_1..x_n, y_1..y_n)` via
    /// `z_j = x_j + i·y_j`.
    pub fn to_real(&self) -> RealPoly {
        let n = self.nvars;
        let d = 2 * n;
        let i = imag_unit();
        // z_j and z̄_j as real-coordinate polynomials
        let mut z_img = Vec::with_capacity(n);
        let mut zb_img = Vec::with_capacity(n);
        for j in 0..n {
            let x = RealPoly::var(d, j);
            let y = RealPoly::var(d, n + j);
            z_img.push(&x + &y.scale(&i));
            zb_img.push(&x - &y.scale(&i));
        }
        let mut amax = vec![0u32; n];
        let mut bmax = vec![0u32; n];
        for k in self.terms.keys() {
            for j in 0..n {
                amax[j] = amax[j].max(k.alpha.get(j));
                bmax[j] = bmax[j].max(k.beta.get(j));
            }
        }
        let pow_z = power_table(&z_img, &amax);
        let pow_zb = power_table(&zb_img, &bmax);
        let mut out = RealPoly::zero(d);
        for (k, c) in &self.terms {
            let mut t = RealPoly::constant(d, c.clone());
            for j in 0..n {
                let a = k.alpha.get(j);
                if a > 0 {
                    t = &t * &pow_z[j][a as usize];
                }
                let b = k.beta.get(j);
                if b > 0 {
                    t = &t * &pow_zb[j][b as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Exact value at a point, with `z̄_j` read as the conjugate of the
    /// `j`-th coordinate.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = GaussianRational::zero();
        for (k, c) in &self.terms {
            let mut t = c.clone();
            for j in 0..self.nvars {
                t *= scalar_pow(&point[j], k.alpha.get(j));
                t *= scalar_pow(&point[j].conj(), k.beta.get(j));
            }
            acc += t;
        }
        acc
    }
}

impl RealPoly {
    /// The coordinate `x_j` (0-based).
    pub fn var(d: usize, j: usize) -> Self {
        assert!(j < d);
        Poly::monomial(d, RealKey(MultiIndex::unit(d, j)), GaussianRational::one())
    }

    /// Single term `c · x^kappa` from an exponent slice.
    pub fn term(d: usize, kappa: &[u32], c: GaussianRational) -> Self {
        assert_eq!(kappa.len(), d);
        Poly::monomial(d, RealKey(MultiIndex::new(kappa.to_vec())), c)
    }

    /// Formal partial derivative `∂/∂x_j`.
    pub fn partial(&self, j: usize) -> Self {
        assert!(j < self.nvars, "variable index out of range");
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            let e = k.0.get(j);
            if e > 0 {
                out.add_term(
                    RealKey(k.0.with_shift(j, -1)),
                    c.clone() * real(Rational::from_integer(e.into())),
                );
            }
        }
        out
    }

    /// Laplacian `Σ_j ∂²/∂x_j²`.
    pub fn laplacian(&self) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.terms {
            for j in 0..self.nvars {
                let e = k.0.get(j);
                if e >= 2 {
                    let factor = Rational::from_integer((e as u64 * (e as u64 - 1)).into());
                    out.add_term(RealKey(k.0.with_shift(j, -2)), c.clone() * real(factor));
                }
            }
        }
        out
    }

    /// `Δ^m`, the `m`-fold Laplacian.
    pub fn laplacian_power(&self, m: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..m {
            p = p.laplacian();
        }
        p
    }

    /// Componentwise substitution `x_j ← map_j`.
    pub fn compose(&self, map: &[RealPoly]) -> Result<RealPoly, Error> {
        if map.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: map.len() });
        }
        let target = map.first().map(Poly::nvars).unwrap_or(0);
        for g in map {
            if g.nvars() != target {
                return Err(Error::DimensionMismatch { expected: target, found: g.nvars() });
            }
        }
        let mut kmax = vec![0u32; self.nvars];
        for k in self.terms.keys() {
            for j in 0..self.nvars {
                kmax[j] = kmax[j].max(k.0.get(j));
            }
        }
        let pows = power_table(map, &kmax);
        let mut out = RealPoly::zero(target);
        for (k, c) in &self.terms {
            let mut t = RealPoly::constant(target, c.clone());
            for j in 0..self.nvars {
                let e = k.0.get(j);
                if e > 0 {
                    t = &t * &pows[j][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Rewrite in complex coordinates via `x_j = (z_j + z̄_j)/2`,
    /// `y_j = (z_j − z̄_j)/(2i)`; requires an even number of variables.
    pub fn to_complex(&self) -> Result<ComplexPoly, Error> {
        if !self.nvars.is_multiple_of(2) {
            return Err(Error::OddDimension(self.nvars));
        }
        let n = self.nvars / 2;
        let half = real(Rational::new(1.into(), 2.into()));
        let neg_half_i = -imag_unit() * half.clone();
        // x_j = (z_j + z̄_j)/2,  y_j = -i(z_j - z̄_j)/2
        let mut images = Vec::with_capacity(self.nvars);
        for j in 0..n {
            let z = ComplexPoly::var(n, j);
            let zb = ComplexPoly::conj_var(n, j);
            images.push((&z + &zb).scale(&half));
        }
        for j in 0..n {
            let z = ComplexPoly::var(n, j);
            let zb = ComplexPoly::conj_var(n, j);
            images.push((&z - &zb).scale(&neg_half_i));
        }
        let mut kmax = vec![0u32; self.nvars];
        for k in self.terms.keys() {
            for j in 0..self.nvars {
                kmax[j] = kmax[j].max(k.0.get(j));
            }
        }
        let pows = power_table(&images, &kmax);
        let mut out = ComplexPoly::zero(n);
        for (k, c) in &self.terms {
            let mut t = ComplexPoly::constant(n, c.clone());
            for j in 0..self.nvars {
                let e = k.0.get(j);
                if e > 0 {
                    t = &t * &pows[j][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Complex conjugate of the function: conjugates the coefficients
    /// (the variables are real).
    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = GaussianRational::zero();
        for (k, c) in &self.terms {
            let mut m = Rational::one();
            for j in 0..self.nvars {
                for _ in 0..k.0.get(j) {
                    m *= point[j].clone();
                }
            }
            acc += c.clone() * real(m);
        }
        acc
    }
}

/// A formal (0,1)-form `Σ_j g_j dz̄_j` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form01 {
    components: Vec<ComplexPoly>,
}

impl Form01 {
    pub fn new(components: Vec<ComplexPoly>) -> Self {
        let n = components.len();
        for c in &components {
            assert_eq!(c.nvars(), n);
        }
        Form01 { components }
    }

    /// `∂̄p`: the form with components `∂p/∂z̄_j`.
    pub fn dbar(p: &ComplexPoly) -> Self {
        Form01 { components: (0..p.nvars()).map(|j| p.wirtinger_zbar(j)).collect() }
    }

    /// Multiply every component by the polynomial `r`.
    pub fn scale_poly(&self, r: &ComplexPoly) -> Self {
        Form01 { components: self.components.iter().map(|c| c * r).collect() }
    }

    pub fn components(&self) -> &[ComplexPoly] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, c: &GaussianRational) -> fmt::Result {
    if c.im.is_zero() {
        write!(f, "{}", c.re)
    } else if c.re.is_zero() {
        write!(f, "{}i", c.im)
    } else {
        write!(f, "({}{}{}i)", c.re, if c.im.is_negative() { "" } else { "+" }, c.im)
    }
}

impl fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            fmt_coeff(f, c)?;
            for j in 0..self.nvars {
                match k.alpha.get(j) {
                    0 => {}
                    1 => write!(f, "*z{}", j + 1)?,
                    e => write!(f, "*z{}^{}", j + 1, e)?,
                }
            }
            for j in 0..self.nvars {
                match k.beta.get(j) {
                    0 => {}
                    1 => write!(f, "*zb{}", j + 1)?,
                    e => write!(f, "*zb{}^{}", j + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            fmt_coeff(f, c)?;
            for j in 0..self.nvars {
                match k.0.get(j) {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    e => write!(f, "*x{}^{}", j + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl<K: MonomialKey> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poly")
            .field("nvars", &self.nvars)
            .field("terms", &self.terms)
            .finish()
    }
}
