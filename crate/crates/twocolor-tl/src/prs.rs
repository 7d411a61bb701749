//! Generic subresultant remainder sequences.
//!
//! Gcd computation for `Z[x]` and `Z[x_t][x_s]` shares one engine: dense
//! polynomials over a coefficient domain that itself supports exact division
//! and gcds. The bivariate case recurses — its coefficients are univariate
//! polynomials whose own gcd bottoms out in integer gcds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Coefficient domain for the remainder-sequence engine.
///
/// Implementors must be integral domains with computable gcds. `exact_div`
/// returns `None` when the quotient does not exist in the domain.
pub(crate) trait Elem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Sign-normalized gcd: the result is never negative (see `is_negative`).
    fn gcd(&self, other: &Self) -> Self;
    /// Whether the element counts as negative for sign normalization.
    fn is_negative(&self) -> bool;

    fn pow(&self, mut k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

impl Elem for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        1.into()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense polynomials over `T`, lowest degree first, no trailing zeros.
pub(crate) type Dense<T> = Vec<T>;

pub(crate) fn trim<T: Elem>(mut p: Dense<T>) -> Dense<T> {
    while p.last().map_or(false, T::is_zero) {
        p.pop();
    }
    p
}

fn deg<T: Elem>(p: &[T]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn lc<T: Elem>(p: &[T]) -> &T {
    p.last().expect("leading coefficient of zero polynomial")
}

fn scale<T: Elem>(p: &[T], c: &T) -> Dense<T> {
    trim(p.iter().map(|a| a.mul(c)).collect())
}

fn sub_poly<T: Elem>(a: &[T], b: &[T]) -> Dense<T> {
    let n = a.len().max(b.len());
    let zero = T::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x.sub(y));
    }
    trim(out)
}

/// `c * x^shift * p`.
fn shift_scale<T: Elem>(p: &[T], c: &T, shift: usize) -> Dense<T> {
    let mut out = vec![T::zero(); shift];
    out.extend(p.iter().map(|a| a.mul(c)));
    trim(out)
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a  mod  b`.
///
/// Requires `deg a >= deg b` and `b` nonzero.
fn pseudo_rem<T: Elem>(a: &[T], b: &[T]) -> Dense<T> {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r: Dense<T> = a.to_vec();
    let mut spare = deg(a) + 1 - db;
    while !r.is_empty() && deg(&r) >= db {
        let shift = deg(&r) - db;
        let lr = lc(&r).clone();
        r = sub_poly(&scale(&r, &lb), &shift_scale(b, &lr, shift));
        spare -= 1;
    }
    if spare > 0 {
        r = scale(&r, &lb.pow(spare));
    }
    r
}

fn content<T: Elem>(p: &[T]) -> T {
    let mut c = T::zero();
    for a in p {
        if !a.is_zero() {
            c = c.gcd(a);
        }
    }
    c
}

fn divide_out<T: Elem>(p: &[T], c: &T) -> Dense<T> {
    p.iter()
        .map(|a| {
            a.exact_div(c)
                .expect("remainder-sequence division is exact")
        })
        .collect()
}

fn primitive_part<T: Elem>(p: &[T]) -> Dense<T> {
    if p.is_empty() {
        return Vec::new();
    }
    let c = content(p);
    divide_out(p, &c)
}

/// Sign-normalize so the leading coefficient is not negative.
fn normalize_sign<T: Elem>(p: Dense<T>) -> Dense<T> {
    if p.last().map_or(false, T::is_negative) {
        p.iter().map(T::neg).collect()
    } else {
        p
    }
}

/// Gcd of the primitive polynomials `f`, `g` (`deg f >= deg g >= 0`) via the
/// subresultant pseudo-remainder sequence, which keeps intermediate
/// coefficient growth polynomial without recomputing contents at every step.
fn subresultant_gcd<T: Elem>(f: Dense<T>, g: Dense<T>) -> Dense<T> {
    let mut rprev = f;
    let mut rcur = g;
    // delta, beta, psi follow the classical recurrences: the first division
    // is by (-1)^(delta+1), afterwards beta = -gamma * psi^delta with
    // psi updated as psi' = (-gamma)^delta / psi^(delta-1).
    let mut delta = deg(&rprev) - deg(&rcur);
    let mut beta = if delta % 2 == 0 {
        T::one().neg()
    } else {
        T::one()
    };
    let mut psi = T::one().neg();
    loop {
        let rem = pseudo_rem(&rprev, &rcur);
        let rnext = trim(divide_out(&rem, &beta));
        if rnext.is_empty() {
            return primitive_part(&rcur);
        }
        if deg(&rnext) == 0 {
            // Constant nonzero remainder: the primitive parts are coprime.
            return vec![T::one()];
        }
        let neg_gamma = lc(&rcur).neg();
        psi = match delta {
            0 => psi,
            1 => neg_gamma.clone(),
            _ => neg_gamma
                .pow(delta)
                .exact_div(&psi.pow(delta - 1))
                .expect("psi update is exact"),
        };
        let next_delta = deg(&rcur) - deg(&rnext);
        beta = neg_gamma.mul(&psi.pow(next_delta));
        rprev = rcur;
        rcur = rnext;
        delta = next_delta;
    }
}

/// Gcd in `T[x]` via content extraction plus the subresultant remainder
/// sequence on primitive parts. The result is sign-normalized; it divides
/// both inputs and is divided by every common divisor.
pub(crate) fn gcd_dense<T: Elem>(a: &[T], b: &[T]) -> Dense<T> {
    if a.is_empty() {
        return normalize_sign(b.to_vec());
    }
    if b.is_empty() {
        return normalize_sign(a.to_vec());
    }
    let cont_gcd = content(a).gcd(&content(b));
    let mut f = primitive_part(a);
    let mut g = primitive_part(b);
    if deg(&f) < deg(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    let prim = if deg(&g) == 0 {
        vec![T::one()]
    } else {
        subresultant_gcd(f, g)
    };
    normalize_sign(scale(&prim, &cont_gcd))
}
