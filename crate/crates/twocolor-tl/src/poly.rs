//! Exact polynomial arithmetic over `Z[x_s, x_t]`.
//!
//! The two variables are the "colored" parameters: `x_s` and `x_t` stand for
//! the two quantum parameters `[2]_s` and `[2]_t`. Four types live here:
//!
//! * [`BiPoly`] — sparse bivariate polynomials with arbitrary-precision
//!   integer coefficients,
//! * [`UniPoly`] — dense univariate polynomials over `Z`, used for one-color
//!   specializations, cyclotomic minimal polynomials, and quotient-ring
//!   moduli,
//! * [`RatFunc`] — fractions of [`BiPoly`] kept in reduced canonical form;
//!   these are the generic coefficients of Jones–Wenzl projectors,
//! * [`RatPoly`] — dense univariate polynomials over `Q`, the element
//!   representation for quotient rings `Z[y]/(f)` and `Q[y]/(f)`.
//!
//! The canonical term order everywhere is pure lexicographic with `x_s`
//! ranked above `x_t`. Rendering follows one fixed format (descending term
//! order, `^` for exponents, explicit `*` between factors), so printed
//! polynomials are stable byte-for-byte.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::prs;

/// Errors from exact polynomial arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in `Z[x_s, x_t]`.
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    /// A fraction with zero denominator was requested.
    #[error("denominator is zero")]
    ZeroDenominator,
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

/// A sparse polynomial in `Z[x_s, x_t]`.
///
/// Terms are keyed by `(deg_s, deg_t)` and every stored coefficient is
/// nonzero, so equality of values is equality of representations. The
/// canonical term order is pure lexicographic with `x_s` above `x_t`, which
/// is exactly the ordering of the exponent pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The variable `x_s`.
    pub fn var_s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The variable `x_t`.
    pub fn var_t() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// `c * x_s^deg_s * x_t^deg_t`.
    pub fn monomial(deg_s: u32, deg_t: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_s, deg_t), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, BigInt::is_one)
    }

    /// The constant value, if the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<&BigInt> {
        if self.terms.is_empty() {
            return None;
        }
        if self.terms.len() == 1 {
            return self.terms.get(&(0, 0));
        }
        None
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Leading term under the canonical order, or `None` for zero.
    pub fn leading(&self) -> Option<(&(u32, u32), &BigInt)> {
        self.terms.last_key_value()
    }

    /// Whether the leading coefficient is negative (zero counts as not).
    pub fn is_negative(&self) -> bool {
        self.leading().map_or(false, |(_, c)| c.is_negative())
    }

    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    fn add_term(&mut self, key: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or [`PolyError::NotDivisible`].
    ///
    /// Reduction happens on leading terms only: when the quotient exists,
    /// each partial remainder is still a multiple of the divisor, so its
    /// leading term stays divisible and the loop terminates at zero.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly, PolyError> {
        let Some((&(di, dj), dc)) = divisor.leading() else {
            return Err(PolyError::NotDivisible);
        };
        let mut rem = self.clone();
        let mut quo = BiPoly::zero();
        while let Some((&(ri, rj), rc)) = rem.leading() {
            if ri < di || rj < dj {
                return Err(PolyError::NotDivisible);
            }
            let (qc, qr) = num_integer::Integer::div_rem(rc, dc);
            if !qr.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let qkey = (ri - di, rj - dj);
            quo.add_term(qkey, &qc);
            let piece = BiPoly::monomial(qkey.0, qkey.1, qc);
            rem = &rem - &(&piece * divisor);
        }
        Ok(quo)
    }

    /// Gcd in the unique factorization domain `Z[x_s, x_t]`, sign-normalized
    /// so the leading coefficient is positive. It divides both inputs and is
    /// divided by every common divisor (integer content included).
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        let a = self.to_unipoly_vec();
        let b = other.to_unipoly_vec();
        Self::from_unipoly_vec(&prs::gcd_dense(&a, &b))
    }

    /// Gcd of the integer coefficients (non-negative; 0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut c = BigInt::zero();
        for v in self.terms.values() {
            c = num_integer::Integer::gcd(&c, v);
        }
        c
    }

    /// Swap the two colors: exchange `x_s` and `x_t`.
    pub fn color_swap(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Substitute a single variable `x` for both `x_s` and `x_t`.
    pub fn to_one_color(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let k = (i + j) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        UniPoly::from_bigint_coeffs(coeffs)
    }

    /// View as a dense polynomial in `x_s` with coefficients in `Z[x_t]`.
    fn to_unipoly_vec(&self) -> Vec<UniPoly> {
        let Some(ds) = self.degree_s() else {
            return Vec::new();
        };
        let mut out = vec![Vec::new(); ds as usize + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut out[i as usize];
            let j = j as usize;
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] = c.clone();
        }
        out.into_iter().map(UniPoly::from_bigint_coeffs).collect()
    }

    fn from_unipoly_vec(v: &[UniPoly]) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, row) in v.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                out.add_term((i as u32, j as u32), c);
            }
        }
        out
    }

    fn render(&self) -> String {
        let terms: Vec<(String, bool, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mut mono = String::new();
                push_var(&mut mono, "x_s", i);
                push_var(&mut mono, "x_t", j);
                (c.abs().to_string(), c.is_negative(), mono)
            })
            .collect();
        render_terms(&terms)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl std::ops::Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::ops::Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl std::ops::Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            let neg = -c;
            out.add_term(k, &neg);
        }
        out
    }
}

impl std::ops::Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident, $ty:ty) => {
        impl std::ops::$trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add, BiPoly);
forward_owned_binop!(Sub, sub, BiPoly);
forward_owned_binop!(Mul, mul, BiPoly);

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

/// A dense univariate polynomial over `Z`, lowest degree first.
///
/// The coefficient vector never ends in zero, so the zero polynomial is the
/// empty vector and equality of values is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `x`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_bigint_coeffs(coeffs.into_iter().map(Into::into).collect())
    }

    pub(crate) fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        UniPoly {
            coeffs: prs::trim(coeffs),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, BigInt::is_one)
    }

    pub fn is_negative(&self) -> bool {
        self.leading().map_or(false, |c| c.is_negative())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or [`PolyError::NotDivisible`].
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly, PolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::NotDivisible);
        };
        let dc = divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quo = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return Err(PolyError::NotDivisible);
            }
            let (qc, qr) = num_integer::Integer::div_rem(rem.leading().expect("nonzero"), dc);
            if !qr.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let piece = UniPoly::monomial(rd - dd, qc.clone());
            rem = &rem - &(&piece * divisor);
            quo[rd - dd] = qc;
        }
        Ok(UniPoly::from_bigint_coeffs(quo))
    }

    /// Sign-normalized gcd in `Z[x]`, integer content included.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        UniPoly {
            coeffs: prs::gcd_dense(&self.coeffs, &other.coeffs),
        }
    }

    /// Gcd of the coefficients (non-negative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut c = BigInt::zero();
        for v in &self.coeffs {
            c = num_integer::Integer::gcd(&c, v);
        }
        c
    }

    /// Render with a caller-chosen variable name.
    pub fn to_text(&self, var: &str) -> String {
        let terms: Vec<(String, bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mut mono = String::new();
                push_var(&mut mono, var, k as u32);
                (c.abs().to_string(), c.is_negative(), mono)
            })
            .collect();
        render_terms(&terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::ops::Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        UniPoly::from_bigint_coeffs(coeffs)
    }
}

impl std::ops::Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_bigint_coeffs(coeffs)
    }
}

forward_owned_binop!(Add, add, UniPoly);
forward_owned_binop!(Sub, sub, UniPoly);
forward_owned_binop!(Mul, mul, UniPoly);

impl prs::Elem for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        UniPoly::exact_div(self, other).ok()
    }
    fn gcd(&self, other: &Self) -> Self {
        UniPoly::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        UniPoly::is_negative(self)
    }
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

/// A rational function `num/den` over `Z[x_s, x_t]` in reduced canonical
/// form: `gcd(num, den)` is a unit, `den` has positive leading coefficient
/// under the canonical term order, and zero is stored as `0/1`. Two equal
/// values therefore have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    /// Build `num/den`, reducing to canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    /// Reduce a fraction with a known-nonzero denominator.
    fn reduced(num: BiPoly, den: BiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: BiPoly::one(),
            };
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the value is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse, or [`PolyError::ZeroDenominator`] for zero.
    pub fn inv(&self) -> Result<RatFunc, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    /// Exact division, or [`PolyError::ZeroDenominator`] when `rhs` is zero.
    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, PolyError> {
        Ok(self * &rhs.inv()?)
    }

    /// Swap the two colors in numerator and denominator.
    pub fn color_swap(&self) -> RatFunc {
        // Swapping variables can flip the sign of the denominator's leading
        // coefficient under the term order, so renormalize.
        let mut num = self.num.color_swap();
        let mut den = self.den.color_swap();
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::ops::Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduced(&self.num + &rhs.num, self.den.clone());
        }
        // Reduce via the denominator gcd: with g = gcd(b, d), b = g*b',
        // d = g*d', the sum is (a*d' + c*b') / (b'*d'*g) and the only
        // possible common factor of numerator and denominator divides g.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // Coprime denominators leave nothing to cancel.
            return RatFunc { num, den };
        }
        let bp = self.den.exact_div(&g).expect("gcd divides");
        let dp = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &dp) + &(&rhs.num * &bp);
        let h = num.gcd(&g);
        if h.is_one() {
            return RatFunc {
                num,
                den: &(&bp * &dp) * &g,
            };
        }
        let num = num.exact_div(&h).expect("gcd divides");
        let den = &(&bp * &dp) * &g.exact_div(&h).expect("gcd divides");
        RatFunc { num, den }
    }
}

impl std::ops::Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl std::ops::Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: BiPoly::one(),
            };
        }
        // Cross-cancel before multiplying; the result is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        RatFunc {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

forward_owned_binop!(Add, add, RatFunc);
forward_owned_binop!(Sub, sub, RatFunc);
forward_owned_binop!(Mul, mul, RatFunc);

// ---------------------------------------------------------------------------
// RatPoly
// ---------------------------------------------------------------------------

/// A dense univariate polynomial with rational coefficients.
///
/// These are the elements of quotient rings `Z[y]/(f)` and `Q[y]/(f)`
/// (integrality is an extra, checkable property rather than part of the
/// type). Coefficients are stored lowest degree first with trailing zeros
/// trimmed, so equality of values is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn trimmed(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> RatPoly {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> RatPoly {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> RatPoly {
        RatPoly::trimmed(vec![c])
    }

    /// The variable `y`.
    pub fn var() -> RatPoly {
        RatPoly {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> RatPoly {
        RatPoly::trimmed(coeffs)
    }

    pub fn from_unipoly(p: &UniPoly) -> RatPoly {
        RatPoly::trimmed(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients, lowest degree first, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The coefficient of `y^k` (zero when out of range).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Conversion to an integer-coefficient polynomial, if integral.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(UniPoly::from_bigint_coeffs(
            self.coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::trimmed(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics when `d` is zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().expect("nonzero");
        let Some(n) = self.degree() else {
            return (RatPoly::zero(), RatPoly::zero());
        };
        if n < dd {
            return (RatPoly::zero(), self.clone());
        }
        let lead = d.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            for (i, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = &rem[idx] - &(&q * dc);
            }
            quo[k - dd] = q;
        }
        (RatPoly::trimmed(quo), RatPoly::trimmed(rem))
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// The monic scalar multiple (zero stays zero).
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(c) => {
                let inv = BigRational::one() / c;
                self.scale(&inv)
            }
        }
    }

    /// Extended Euclidean algorithm over `Q[y]`: returns `(g, u, v)` with
    /// `u*self + v*other = g` and `g` the monic gcd (zero if both are zero).
    pub fn xgcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (RatPoly::zero(), RatPoly::zero(), RatPoly::zero()),
            Some(c) => {
                let inv = BigRational::one() / c;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Monic gcd over `Q[y]`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        self.xgcd(other).0
    }

    /// Render with a caller-chosen variable name. Rational coefficients
    /// appear as `a/b`.
    pub fn to_text(&self, var: &str) -> String {
        let terms: Vec<(String, bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let mut mono = String::new();
                push_var(&mut mono, var, k as u32);
                let mag = c.abs();
                let text = if mag.is_integer() {
                    mag.to_integer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                };
                (text, c.is_negative(), mono)
            })
            .collect();
        render_terms(&terms)
    }
}

/// Renders in the variable `y`, the conventional quotient-ring variable.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("y"))
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        RatPoly::trimmed(out)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::trimmed(out)
    }
}

forward_owned_binop!(Add, add, RatPoly);
forward_owned_binop!(Sub, sub, RatPoly);
forward_owned_binop!(Mul, mul, RatPoly);

// ---------------------------------------------------------------------------
// Shared rendering helpers
// ---------------------------------------------------------------------------

fn push_var(out: &mut String, var: &str, exp: u32) {
    if exp == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push_str(var);
    if exp >= 2 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

/// Render nonzero terms (already in display order, as coefficient-magnitude
/// text, sign, and monomial text) in the canonical format:
/// `x_s^2*x_t^2 - 3*x_s*x_t + 1`.
fn render_terms(terms: &[(String, bool, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mag, neg, mono)) in terms.iter().enumerate() {
        if idx == 0 {
            if *neg {
                out.push('-');
            }
        } else if *neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag != "1" || mono.is_empty() {
            out.push_str(mag);
            if !mono.is_empty() {
                out.push('*');
            }
        }
        out.push_str(mono);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x_s*x_t`, the product that one-color identities specialize to `x^2`.
    fn st() -> BiPoly {
        BiPoly::monomial(1, 1, 1)
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(BiPoly::constant(-7).to_string(), "-7");
        assert_eq!(BiPoly::var_s().to_string(), "x_s");
        assert_eq!(BiPoly::monomial(2, 1, -1).to_string(), "-x_s^2*x_t");
        let p = &(&st() * &st()) - &(&BiPoly::constant(3) * &st());
        let p = &p + &BiPoly::one();
        assert_eq!(p.to_string(), "x_s^2*x_t^2 - 3*x_s*x_t + 1");
        assert_eq!(
            UniPoly::from_coeffs([1, 0, -3, 0, 1]).to_string(),
            "x^4 - 3*x^2 + 1"
        );
        assert_eq!(UniPoly::from_coeffs([-1, 1]).to_text("y"), "y - 1");
    }

    #[test]
    fn term_order_is_pure_lex() {
        // x_s^2 outranks x_s*x_t^5 even though its total degree is smaller.
        let p = &BiPoly::monomial(1, 5, 1) + &BiPoly::monomial(2, 0, 1);
        assert_eq!(p.to_string(), "x_s^2 + x_s*x_t^5");
        assert_eq!(p.leading().unwrap().0, &(2, 0));
    }

    #[test]
    fn addition_cancels_terms() {
        let p = &st() - &BiPoly::one();
        let q = &BiPoly::one() - &st();
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn exact_division_round_trips() {
        let a = &st() - &BiPoly::one(); // x_s*x_t - 1
        let b = &st() - &BiPoly::constant(2); // x_s*x_t - 2
        let prod = &a * &b;
        assert_eq!(prod.to_string(), "x_s^2*x_t^2 - 3*x_s*x_t + 2");
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(
            (&prod + &BiPoly::one()).exact_div(&a),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &st() - &BiPoly::one();
        let b = &st() - &BiPoly::constant(2);
        let c = &BiPoly::var_s() + &BiPoly::constant(1);
        let g = (&a * &c).gcd(&(&b * &c));
        assert_eq!(g, c);
        // Sign normalization: a negated input still yields a positive lead.
        let g = (-(&a * &c)).gcd(&(&b * &c));
        assert_eq!(g, c);
    }

    #[test]
    fn gcd_includes_integer_content() {
        let a = BiPoly::monomial(1, 0, 2); // 2 x_s
        let b = BiPoly::monomial(0, 1, 2); // 2 x_t
        assert_eq!(a.gcd(&b), BiPoly::constant(2));
    }

    #[test]
    fn color_swap_is_an_involution() {
        let p = &(&BiPoly::monomial(2, 0, 3) + &BiPoly::monomial(0, 1, -1)) + &BiPoly::one();
        assert_eq!(p.color_swap().color_swap(), p);
        assert_eq!(
            (&BiPoly::var_s() * &p).color_swap(),
            &BiPoly::var_t() * &p.color_swap()
        );
    }

    #[test]
    fn one_color_substitution() {
        let p = &(&st() * &st()) - &(&BiPoly::constant(3) * &st());
        let p = &p + &BiPoly::one(); // [5]_s
        assert_eq!(p.to_one_color(), UniPoly::from_coeffs([1, 0, -3, 0, 1]));
    }

    #[test]
    fn unipoly_division_and_gcd() {
        let a = UniPoly::from_coeffs([-1, 0, 1]); // x^2 - 1
        let b = UniPoly::from_coeffs([1, 1]); // x + 1
        assert_eq!(a.exact_div(&b).unwrap(), UniPoly::from_coeffs([-1, 1]));
        assert_eq!(a.gcd(&b), b);
        assert_eq!(
            UniPoly::from_coeffs([2, 2]).gcd(&UniPoly::from_coeffs([4])),
            UniPoly::constant(2)
        );
    }

    #[test]
    fn ratfunc_reduction_is_canonical() {
        // (x_s^2*x_t - x_s) / x_s reduces to (x_s*x_t - 1)/1.
        let num = &(&BiPoly::var_s() * &st()) - &BiPoly::var_s();
        let f = RatFunc::new(num, BiPoly::var_s()).unwrap();
        assert_eq!(f.num(), &(&st() - &BiPoly::one()));
        assert!(f.is_polynomial());
        // Denominator sign is normalized.
        let g = RatFunc::new(BiPoly::one(), -BiPoly::var_s()).unwrap();
        assert_eq!(g.num(), &BiPoly::constant(-1));
        assert_eq!(g.den(), &BiPoly::var_s());
        assert_eq!(
            RatFunc::new(BiPoly::one(), BiPoly::zero()),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn ratfunc_field_axioms_on_samples() {
        let a = RatFunc::new(st() - BiPoly::one(), BiPoly::var_s()).unwrap();
        let b = RatFunc::new(BiPoly::var_t(), st() - BiPoly::constant(2)).unwrap();
        let c = RatFunc::new(BiPoly::constant(3), BiPoly::var_t()).unwrap();
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&(&a - &a) + &b, b);
        assert_eq!((&a * &a.inv().unwrap()), RatFunc::one());
        assert_eq!(a.div(&RatFunc::zero()), Err(PolyError::ZeroDenominator));
        assert_eq!(
            (&a + &b).to_string(),
            "(x_s^2*x_t^2 - 2*x_s*x_t + 2)/(x_s^2*x_t - 2*x_s)"
        );
    }

    #[test]
    fn ratfunc_add_with_shared_denominator_factor() {
        // 1/(x_s*(x_s*x_t-1)) + 1/(x_s*(x_s*x_t-2)) keeps the shared x_s.
        let d1 = &BiPoly::var_s() * &(&st() - &BiPoly::one());
        let d2 = &BiPoly::var_s() * &(&st() - &BiPoly::constant(2));
        let f = &RatFunc::new(BiPoly::one(), d1.clone()).unwrap()
            + &RatFunc::new(BiPoly::one(), d2.clone()).unwrap();
        let expect = RatFunc::new(
            &(&st() * &BiPoly::constant(2)) - &BiPoly::constant(3),
            &(&BiPoly::var_s() * &(&st() - &BiPoly::one())) * &(&st() - &BiPoly::constant(2)),
        )
        .unwrap();
        assert_eq!(f, expect);
        // And a cancelling sum collapses to zero in canonical form.
        let g = RatFunc::new(BiPoly::one(), d1).unwrap();
        let z = &g - &g;
        assert!(z.is_zero());
        assert_eq!(z.den(), &BiPoly::one());
    }
}
