//! Coefficient rings for specializing the generic two-colored theory.
//!
//! The generic coefficients live in `A = Z[x_s, x_t]` and its fraction field.
//! Working "over a ring R" means choosing a [`RingDescriptor`] together with
//! images of `x_s` and `x_t` — a [`Specialization`] — and pushing polynomials
//! and fractions through the induced homomorphism. Five ring families are
//! supported:
//!
//! * `Z` — the integers,
//! * `Q` — the rationals,
//! * `Z/m` — integers modulo `m >= 2`,
//! * `Z[y]/(f)` and `Q[y]/(f)` — univariate quotients by a monic modulus,
//! * `FracA` — the generic fraction field of `A` itself (the identity
//!   specialization).
//!
//! Every operation is exact, every stored value is canonical for its ring
//! (residues in `[0, m)`, polynomial residues reduced mod the modulus,
//! fractions reduced), and invertibility tests always produce a certificate
//! `w` with `v * w = 1` that is checked before being believed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{BiPoly, RatFunc, RatPoly, UniPoly};

/// Errors from ring construction, arithmetic, and specialization.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A value was used with a ring it does not belong to.
    #[error("ring mismatch: {0}")]
    Mismatch(String),
    /// A fraction was specialized into a ring where its denominator has no
    /// inverse, i.e. the fraction does not exist over that ring.
    #[error("denominator not invertible: {0}")]
    DenominatorNotInvertible(String),
    /// A descriptor or value failed to parse, or violates an invariant.
    #[error("parse error: {0}")]
    Parse(String),
}

/// The base ring of a univariate quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientBase {
    Integers,
    Rationals,
}

/// One of the five supported coefficient rings.
///
/// Use [`RingDescriptor::integers_mod`] and [`RingDescriptor::quotient`] to
/// construct the parameterized variants with their invariants checked
/// (`m >= 2`; modulus monic and nonconstant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// `Z`.
    Integers,
    /// `Q`.
    Rationals,
    /// `Z/m` for `m >= 2`.
    IntegersMod(BigInt),
    /// `Z[y]/(f)` or `Q[y]/(f)` for a monic nonconstant `f`.
    UnivariateQuotient {
        base: QuotientBase,
        modulus: UniPoly,
    },
    /// `Frac Z[x_s, x_t]`, the generic coefficient field.
    GenericBivariateFractionField,
}

/// An element of one of the supported rings.
///
/// The payload variant is tied to the ring family: `Int` for `Z`, `Rat` for
/// `Q`, `Residue` for `Z/m` (stored in `[0, m)`), `PolyResidue` for
/// univariate quotients (reduced mod the modulus; integral coefficients when
/// the base is `Z`), and `Frac` for the generic fraction field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingValue {
    Int(BigInt),
    Rat(BigRational),
    Residue(BigInt),
    PolyResidue(RatPoly),
    Frac(RatFunc),
}

/// A choice of ring together with images of the parameters `x_s`, `x_t`:
/// the data of a ring homomorphism out of `Z[x_s, x_t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    ring: RingDescriptor,
    image_s: RingValue,
    image_t: RingValue,
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(v) => write!(f, "{v}"),
            RingValue::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.to_integer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            RingValue::Residue(v) => write!(f, "{v}"),
            RingValue::PolyResidue(p) => write!(f, "{}", p.to_text("y")),
            RingValue::Frac(r) => write!(f, "{r}"),
        }
    }
}

impl RingValue {
    /// Whether this is the zero element (canonical payloads make this a
    /// payload-only test).
    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(v) => v.is_zero(),
            RingValue::Rat(v) => v.is_zero(),
            RingValue::Residue(v) => v.is_zero(),
            RingValue::PolyResidue(p) => p.is_zero(),
            RingValue::Frac(r) => r.is_zero(),
        }
    }

    /// Whether this is the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match self {
            RingValue::Int(v) => v.is_one(),
            RingValue::Rat(v) => v.is_one(),
            RingValue::Residue(v) => v.is_one(),
            RingValue::PolyResidue(p) => p.is_one(),
            RingValue::Frac(r) => r.is_one(),
        }
    }
}

impl RingDescriptor {
    /// `Z/m`, requiring `m >= 2`.
    pub fn integers_mod(m: impl Into<BigInt>) -> Result<RingDescriptor, RingError> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(RingError::Parse(format!(
                "modulus must be at least 2 (got {m})"
            )));
        }
        Ok(RingDescriptor::IntegersMod(m))
    }

    /// `Z[y]/(f)` or `Q[y]/(f)`, requiring `f` monic and nonconstant.
    pub fn quotient(base: QuotientBase, modulus: UniPoly) -> Result<RingDescriptor, RingError> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(RingError::Parse(
                "quotient modulus must be nonconstant".to_string(),
            ));
        }
        if !modulus.is_monic() {
            return Err(RingError::Parse(format!(
                "quotient modulus must be monic (got {})",
                modulus.to_text("y")
            )));
        }
        Ok(RingDescriptor::UnivariateQuotient { base, modulus })
    }

    /// The additive identity.
    pub fn zero(&self) -> RingValue {
        match self {
            RingDescriptor::Integers => RingValue::Int(BigInt::zero()),
            RingDescriptor::Rationals => RingValue::Rat(BigRational::zero()),
            RingDescriptor::IntegersMod(_) => RingValue::Residue(BigInt::zero()),
            RingDescriptor::UnivariateQuotient { .. } => RingValue::PolyResidue(RatPoly::zero()),
            RingDescriptor::GenericBivariateFractionField => RingValue::Frac(RatFunc::zero()),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> RingValue {
        self.from_int(BigInt::one())
    }

    /// The image of an integer under the unique map `Z -> R`.
    pub fn from_int(&self, v: impl Into<BigInt>) -> RingValue {
        let v = v.into();
        match self {
            RingDescriptor::Integers => RingValue::Int(v),
            RingDescriptor::Rationals => RingValue::Rat(BigRational::from(v)),
            RingDescriptor::IntegersMod(m) => RingValue::Residue(v.mod_floor(m)),
            RingDescriptor::UnivariateQuotient { .. } => {
                RingValue::PolyResidue(RatPoly::constant(BigRational::from(v)))
            }
            RingDescriptor::GenericBivariateFractionField => {
                RingValue::Frac(RatFunc::from_poly(BiPoly::constant(v)))
            }
        }
    }

    /// Checks that a value's payload belongs to this ring (and, for
    /// quotients over `Z`, that it is integral).
    pub fn contains(&self, v: &RingValue) -> bool {
        match (self, v) {
            (RingDescriptor::Integers, RingValue::Int(_)) => true,
            (RingDescriptor::Rationals, RingValue::Rat(_)) => true,
            (RingDescriptor::IntegersMod(m), RingValue::Residue(r)) => {
                !r.is_negative() && r < m
            }
            (RingDescriptor::UnivariateQuotient { base, modulus }, RingValue::PolyResidue(p)) => {
                let reduced = p.degree().map_or(true, |d| {
                    d < modulus.degree().expect("modulus nonconstant")
                });
                reduced
                    && match base {
                        QuotientBase::Integers => p.is_integral(),
                        QuotientBase::Rationals => true,
                    }
            }
            (RingDescriptor::GenericBivariateFractionField, RingValue::Frac(_)) => true,
            _ => false,
        }
    }

    /// The value itself when it belongs to this ring, otherwise a mismatch
    /// error naming both.
    pub fn expect_member<'v>(&self, v: &'v RingValue) -> Result<&'v RingValue, RingError> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(RingError::Mismatch(format!(
                "value {v} does not belong to {self}"
            )))
        }
    }

    fn reduce_poly(&self, p: RatPoly) -> RingValue {
        let RingDescriptor::UnivariateQuotient { modulus, .. } = self else {
            unreachable!("reduce_poly is only called for quotient rings");
        };
        RingValue::PolyResidue(p.rem(&RatPoly::from_unipoly(modulus)))
    }

    /// Exact addition.
    pub fn add(&self, a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
        self.expect_member(a)?;
        self.expect_member(b)?;
        Ok(match (a, b) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a + b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a + b),
            (RingValue::Residue(a), RingValue::Residue(b)) => {
                let RingDescriptor::IntegersMod(m) = self else {
                    unreachable!()
                };
                RingValue::Residue((a + b).mod_floor(m))
            }
            (RingValue::PolyResidue(a), RingValue::PolyResidue(b)) => self.reduce_poly(a + b),
            (RingValue::Frac(a), RingValue::Frac(b)) => RingValue::Frac(a + b),
            _ => unreachable!("membership already checked"),
        })
    }

    /// Exact subtraction.
    pub fn sub(&self, a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
        self.add(a, &self.neg(b)?)
    }

    /// Exact negation.
    pub fn neg(&self, a: &RingValue) -> Result<RingValue, RingError> {
        self.expect_member(a)?;
        Ok(match a {
            RingValue::Int(a) => RingValue::Int(-a),
            RingValue::Rat(a) => RingValue::Rat(-a),
            RingValue::Residue(a) => {
                let RingDescriptor::IntegersMod(m) = self else {
                    unreachable!()
                };
                RingValue::Residue((-a).mod_floor(m))
            }
            RingValue::PolyResidue(a) => RingValue::PolyResidue(-a),
            RingValue::Frac(a) => RingValue::Frac(-a),
        })
    }

    /// Exact multiplication.
    pub fn mul(&self, a: &RingValue, b: &RingValue) -> Result<RingValue, RingError> {
        self.expect_member(a)?;
        self.expect_member(b)?;
        Ok(match (a, b) {
            (RingValue::Int(a), RingValue::Int(b)) => RingValue::Int(a * b),
            (RingValue::Rat(a), RingValue::Rat(b)) => RingValue::Rat(a * b),
            (RingValue::Residue(a), RingValue::Residue(b)) => {
                let RingDescriptor::IntegersMod(m) = self else {
                    unreachable!()
                };
                RingValue::Residue((a * b).mod_floor(m))
            }
            (RingValue::PolyResidue(a), RingValue::PolyResidue(b)) => self.reduce_poly(a * b),
            (RingValue::Frac(a), RingValue::Frac(b)) => RingValue::Frac(a * b),
            _ => unreachable!("membership already checked"),
        })
    }

    /// The inverse of `v`, when one exists. Every returned certificate `w`
    /// has been checked to satisfy `v * w = 1`.
    pub fn try_invert(&self, v: &RingValue) -> Result<Option<RingValue>, RingError> {
        self.expect_member(v)?;
        let inverse = match (self, v) {
            (RingDescriptor::Integers, RingValue::Int(a)) => {
                if a.is_one() || (-a).is_one() {
                    Some(RingValue::Int(a.clone()))
                } else {
                    None
                }
            }
            (RingDescriptor::Rationals, RingValue::Rat(a)) => {
                if a.is_zero() {
                    None
                } else {
                    Some(RingValue::Rat(a.recip()))
                }
            }
            (RingDescriptor::IntegersMod(m), RingValue::Residue(a)) => {
                let ext = a.extended_gcd(m);
                if ext.gcd.is_one() {
                    Some(RingValue::Residue(ext.x.mod_floor(m)))
                } else {
                    None
                }
            }
            (RingDescriptor::UnivariateQuotient { base, modulus }, RingValue::PolyResidue(a)) => {
                // Invert over Q[y]/(f) via the extended gcd; over Z the
                // unique rational inverse must in addition be integral.
                let f = RatPoly::from_unipoly(modulus);
                let (g, u, _) = a.xgcd(&f);
                if !g.is_one() {
                    None
                } else {
                    let w = u.rem(&f);
                    match base {
                        QuotientBase::Integers if !w.is_integral() => None,
                        _ => Some(RingValue::PolyResidue(w)),
                    }
                }
            }
            (RingDescriptor::GenericBivariateFractionField, RingValue::Frac(a)) => {
                a.inv().ok().map(RingValue::Frac)
            }
            _ => unreachable!("membership already checked"),
        };
        if let Some(w) = &inverse {
            let product = self.mul(v, w)?;
            assert!(
                product.is_one(),
                "inversion certificate failed: ({v}) * ({w}) = {product} in {self}"
            );
        }
        Ok(inverse)
    }

    /// Whether `v` is a unit.
    pub fn is_invertible(&self, v: &RingValue) -> Result<bool, RingError> {
        Ok(self.try_invert(v)?.is_some())
    }

    /// Evaluates an integer-coefficient univariate polynomial at a ring
    /// element (Horner's rule).
    pub fn eval_unipoly(&self, p: &UniPoly, at: &RingValue) -> Result<RingValue, RingError> {
        self.expect_member(at)?;
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, at)?;
            acc = self.add(&acc, &self.from_int(c.clone()))?;
        }
        Ok(acc)
    }

    /// Parses a ring descriptor: `Z`, `Q`, `Z/5`, `Z[y]/(y^2-y-1)`,
    /// `Q[y]/(y^2-2)`, or `FracA`.
    pub fn parse(text: &str) -> Result<RingDescriptor, RingError> {
        let text = text.trim();
        match text {
            "Z" => return Ok(RingDescriptor::Integers),
            "Q" => return Ok(RingDescriptor::Rationals),
            "FracA" => return Ok(RingDescriptor::GenericBivariateFractionField),
            _ => {}
        }
        if let Some(m) = text.strip_prefix("Z/") {
            let m: BigInt = m
                .trim()
                .parse()
                .map_err(|_| RingError::Parse(format!("invalid modulus {m:?}")))?;
            return RingDescriptor::integers_mod(m);
        }
        for (prefix, base) in [
            ("Z[y]/(", QuotientBase::Integers),
            ("Q[y]/(", QuotientBase::Rationals),
        ] {
            if let Some(rest) = text.strip_prefix(prefix) {
                let Some(body) = rest.strip_suffix(')') else {
                    return Err(RingError::Parse(format!(
                        "missing closing parenthesis in {text:?}"
                    )));
                };
                let poly = parse_rat_poly(body)?;
                let Some(modulus) = poly.to_unipoly() else {
                    return Err(RingError::Parse(format!(
                        "quotient modulus must have integer coefficients (got {})",
                        poly.to_text("y")
                    )));
                };
                return RingDescriptor::quotient(base, modulus);
            }
        }
        Err(RingError::Parse(format!(
            "unknown ring descriptor {text:?} (expected Z, Q, Z/m, Z[y]/(f), Q[y]/(f), or FracA)"
        )))
    }

    /// Parses a ring element in this ring's value grammar: an integer, a
    /// rational `a/b`, or a polynomial in `y` (quotient rings). Values are
    /// canonicalized (residues reduced mod `m`, polynomials mod the modulus).
    pub fn parse_value(&self, text: &str) -> Result<RingValue, RingError> {
        let text = text.trim();
        match self {
            RingDescriptor::Integers => {
                let v: BigInt = text
                    .parse()
                    .map_err(|_| RingError::Parse(format!("invalid integer {text:?}")))?;
                Ok(RingValue::Int(v))
            }
            RingDescriptor::Rationals => Ok(RingValue::Rat(parse_rational(text)?)),
            RingDescriptor::IntegersMod(m) => {
                let v: BigInt = text
                    .parse()
                    .map_err(|_| RingError::Parse(format!("invalid integer {text:?}")))?;
                Ok(RingValue::Residue(v.mod_floor(m)))
            }
            RingDescriptor::UnivariateQuotient { base, modulus } => {
                let p = parse_rat_poly(text)?.rem(&RatPoly::from_unipoly(modulus));
                if *base == QuotientBase::Integers && !p.is_integral() {
                    return Err(RingError::Parse(format!(
                        "value {} is not integral",
                        p.to_text("y")
                    )));
                }
                Ok(RingValue::PolyResidue(p))
            }
            RingDescriptor::GenericBivariateFractionField => {
                let v = parse_rational(text)?;
                let num = BiPoly::constant(v.numer().clone());
                let den = BiPoly::constant(v.denom().clone());
                Ok(RingValue::Frac(
                    RatFunc::new(num, den).expect("parsed denominator is nonzero"),
                ))
            }
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => f.write_str("Z"),
            RingDescriptor::Rationals => f.write_str("Q"),
            RingDescriptor::IntegersMod(m) => write!(f, "Z/{m}"),
            RingDescriptor::UnivariateQuotient { base, modulus } => {
                let b = match base {
                    QuotientBase::Integers => "Z",
                    QuotientBase::Rationals => "Q",
                };
                write!(f, "{b}[y]/({})", modulus.to_text("y"))
            }
            RingDescriptor::GenericBivariateFractionField => f.write_str("FracA"),
        }
    }
}

impl Specialization {
    /// A specialization into `ring` sending `x_s`, `x_t` to the given
    /// images, which must belong to the ring.
    pub fn new(
        ring: RingDescriptor,
        image_s: RingValue,
        image_t: RingValue,
    ) -> Result<Specialization, RingError> {
        ring.expect_member(&image_s)?;
        ring.expect_member(&image_t)?;
        Ok(Specialization {
            ring,
            image_s,
            image_t,
        })
    }

    /// The identity specialization `A -> Frac A`.
    pub fn generic() -> Specialization {
        Specialization {
            ring: RingDescriptor::GenericBivariateFractionField,
            image_s: RingValue::Frac(RatFunc::from_poly(BiPoly::var_s())),
            image_t: RingValue::Frac(RatFunc::from_poly(BiPoly::var_t())),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn image_s(&self) -> &RingValue {
        &self.image_s
    }

    pub fn image_t(&self) -> &RingValue {
        &self.image_t
    }

    /// The image of a polynomial under the homomorphism
    /// `Z[x_s, x_t] -> R`, `x_s -> image_s`, `x_t -> image_t`.
    pub fn poly(&self, p: &BiPoly) -> RingValue {
        // Powers of the images are shared across terms.
        let mut pow_s: Vec<RingValue> = vec![self.ring.one()];
        let mut pow_t: Vec<RingValue> = vec![self.ring.one()];
        let mut acc = self.ring.zero();
        for (&(i, j), c) in p.terms() {
            while pow_s.len() <= i as usize {
                let next = self
                    .ring
                    .mul(pow_s.last().expect("nonempty"), &self.image_s)
                    .expect("images belong to the ring");
                pow_s.push(next);
            }
            while pow_t.len() <= j as usize {
                let next = self
                    .ring
                    .mul(pow_t.last().expect("nonempty"), &self.image_t)
                    .expect("images belong to the ring");
                pow_t.push(next);
            }
            let term = self
                .ring
                .mul(&pow_s[i as usize], &pow_t[j as usize])
                .and_then(|st| self.ring.mul(&st, &self.ring.from_int(c.clone())))
                .expect("images belong to the ring");
            acc = self.ring.add(&acc, &term).expect("same ring");
        }
        acc
    }

    /// The image of a reduced fraction: the image of the numerator times
    /// the inverse of the image of the denominator. Fails with
    /// [`RingError::DenominatorNotInvertible`] exactly when the fraction
    /// does not exist over this ring.
    pub fn frac(&self, f: &RatFunc) -> Result<RingValue, RingError> {
        let den = self.poly(f.den());
        let Some(inv) = self.ring.try_invert(&den)? else {
            return Err(RingError::DenominatorNotInvertible(format!(
                "{} maps to {den}, which is not a unit in {}",
                f.den(),
                self.ring
            )));
        };
        let num = self.poly(f.num());
        self.ring.mul(&num, &inv)
    }
}

/// Parses an integer or `a/b` rational.
fn parse_rational(text: &str) -> Result<BigRational, RingError> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt, RingError> {
        s.trim()
            .parse()
            .map_err(|_| RingError::Parse(format!("invalid number {s:?}")))
    };
    match text.split_once('/') {
        None => Ok(BigRational::from(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(RingError::Parse("zero denominator".to_string()));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Parses a polynomial in `y` with integer or `a/b` rational coefficients,
/// e.g. `y^2 - y - 1`, `2*y + 3`, `-1/2*y^3`.
fn parse_rat_poly(text: &str) -> Result<RatPoly, RingError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(RingError::Parse("empty polynomial".to_string()));
    }
    // Split into signed terms at +/- boundaries (a leading sign belongs to
    // the first term; signs inside `a/b` cannot occur after canonical split
    // because we only split before a digit-or-y start).
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut cur_neg = false;
    let mut chars = compact.chars().peekable();
    match chars.peek() {
        Some('+') => {
            chars.next();
        }
        Some('-') => {
            cur_neg = true;
            chars.next();
        }
        _ => {}
    }
    for ch in chars {
        if ch == '+' || ch == '-' {
            terms.push((cur_neg, std::mem::take(&mut cur)));
            cur_neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((cur_neg, cur));

    let mut out = RatPoly::zero();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(RingError::Parse(format!(
                "dangling sign in polynomial {text:?}"
            )));
        }
        // term = [coefficient]['*']['y'['^'exp]]
        let (coeff_text, exp) = match term.find('y') {
            None => (term.as_str(), 0u32),
            Some(pos) => {
                let coeff = term[..pos].trim_end_matches('*');
                let tail = &term[pos + 1..];
                let exp = if tail.is_empty() {
                    1
                } else if let Some(e) = tail.strip_prefix('^') {
                    e.parse().map_err(|_| {
                        RingError::Parse(format!("invalid exponent in term {term:?}"))
                    })?
                } else {
                    return Err(RingError::Parse(format!("malformed term {term:?}")));
                };
                (coeff, exp)
            }
        };
        let mut coeff = if coeff_text.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coeff_text)?
        };
        if neg {
            coeff = -coeff;
        }
        let mut mono = vec![BigRational::zero(); exp as usize + 1];
        mono[exp as usize] = coeff;
        out = &out + &RatPoly::from_coeffs(mono);
    }
    Ok(out)
}
