//! Two-colored quantum numbers and their cyclotomic structure.
//!
//! The quantum numbers `[n]_s`, `[n]_t` live in `A = Z[x_s, x_t]` and are
//! defined by `[1]_s = [1]_t = 1`, `[2]_s = x_s`, `[2]_t = x_t`, and the
//! color-alternating recurrences
//!
//! ```text
//! [n+1]_s = [2]_s [n]_t - [n-1]_s
//! [n+1]_t = [2]_t [n]_s - [n-1]_t
//! ```
//!
//! extended to all integers by rearranging the same recurrences (so
//! `[0]_c = 0`, `[-1]_c = -1`, and generally `[-n]_c = -[n]_c`).
//!
//! On top of the quantum numbers this module provides quantum factorials and
//! binomial coefficients, the cyclotomic factors `Θ_{n,c}` of `[n]_c`
//! (two-colored analogues of minimal polynomials of `4cos²(π/n)`), valuations
//! with respect to those factors, and Bézout-style certificates witnessing
//! `gcd([m]_c, [n]_c) = [gcd(m,n)]_c` and the comaximality of distinct
//! cyclotomic parts. Quantum numbers are memoized process-wide.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{BiPoly, RatFunc, UniPoly};

/// The two strand colors. By convention `s` is drawn red and `t` blue, and
/// `x_s`, `x_t` are the corresponding quantum parameters `[2]_s`, `[2]_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    S,
    T,
}

impl Color {
    /// The other color.
    pub fn swap(self) -> Color {
        match self {
            Color::S => Color::T,
            Color::T => Color::S,
        }
    }

    /// The variable `x_s` or `x_t`.
    pub fn var(self) -> BiPoly {
        match self {
            Color::S => BiPoly::var_s(),
            Color::T => BiPoly::var_t(),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::S => "s",
            Color::T => "t",
        })
    }
}

impl FromStr for Color {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s" => Ok(Color::S),
            "t" => Ok(Color::T),
            other => Err(format!("unknown color {other:?} (expected \"s\" or \"t\")")),
        }
    }
}

/// Errors from the quantum-number layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QnumError {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal cross-check that a theorem guarantees has failed;
    /// this always indicates a bug.
    #[error("verification failed: {0}")]
    Verification(String),
}

fn cache() -> &'static Mutex<HashMap<(i64, Color), BiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, Color), BiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The two-colored quantum number `[n]_c`, for any integer `n`.
pub fn quantum_number(n: i64, c: Color) -> BiPoly {
    if let Some(p) = cache().lock().expect("quantum number cache").get(&(n, c)) {
        return p.clone();
    }
    // Walk the recurrence from [0] toward n, keeping both colors; the
    // downward direction uses the same rearranged two-term recurrence, with
    // the trailing seed [-step] = -step.
    let mut levels: Vec<(i64, BiPoly, BiPoly)> = Vec::new();
    let step = if n >= 0 { 1 } else { -1 };
    let seed = BiPoly::constant(-step);
    let mut behind = (seed.clone(), seed); // [k - step]
    let mut cur = (BiPoly::zero(), BiPoly::zero()); // [k]
    let mut k = 0;
    loop {
        levels.push((k, cur.0.clone(), cur.1.clone()));
        if k == n {
            break;
        }
        let next_s = &(&BiPoly::var_s() * &cur.1) - &behind.0;
        let next_t = &(&BiPoly::var_t() * &cur.0) - &behind.1;
        behind = cur;
        cur = (next_s, next_t);
        k += step;
    }
    let mut table = cache().lock().expect("quantum number cache");
    for (k, ps, pt) in levels {
        table.entry((k, Color::S)).or_insert(ps);
        table.entry((k, Color::T)).or_insert(pt);
    }
    table.get(&(n, c)).expect("level just inserted").clone()
}

/// The quantum factorial `[n]_c! = [1]_c [2]_c ... [n]_c`.
pub fn qfactorial(n: u64, c: Color) -> BiPoly {
    let mut acc = BiPoly::one();
    for k in 1..=n {
        acc = &acc * &quantum_number(k as i64, c);
    }
    acc
}

/// The quantum binomial coefficient `[n choose k]_c`, which is a genuine
/// polynomial in `Z[x_s, x_t]`; zero outside `0 <= k <= n`.
pub fn qbinom(n: u64, k: i64, c: Color) -> BiPoly {
    if k < 0 || k as u64 > n {
        return BiPoly::zero();
    }
    let k = k as u64;
    let den = &qfactorial(k, c) * &qfactorial(n - k, c);
    qfactorial(n, c)
        .exact_div(&den)
        .expect("quantum binomial coefficients are polynomial")
}

/// The Möbius function μ(n) for n >= 1.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius requires n >= 1");
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One-color quantum number `[n](x)` (the `x_s = x_t = x` specialization).
fn one_color_qnum(n: u64) -> UniPoly {
    let mut prev = UniPoly::zero();
    let mut cur = UniPoly::one();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&UniPoly::var() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The one-color cyclotomic part `Θ_n = ∏_{k|n} [k]^{μ(n/k)}`, a monic
/// polynomial in `Z[x]` with `[n] = ∏_{k|n} Θ_k`.
pub fn theta_one_color(n: u64) -> UniPoly {
    assert!(n >= 1, "theta_one_color requires n >= 1");
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for k in 1..=n {
        if n % k != 0 {
            continue;
        }
        match mobius(n / k) {
            1 => num = &num * &one_color_qnum(k),
            -1 => den = &den * &one_color_qnum(k),
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("cyclotomic part is a polynomial")
}

/// The minimal polynomial `Ψ_n` of `4cos²(π/n)` over `Q`, scaled to `Z[y]`:
/// the unique polynomial with `Ψ_n(x²) = Θ_n(x)`. Defined for `n > 2`.
pub fn psi(n: u64) -> Result<UniPoly, QnumError> {
    if n <= 2 {
        return Err(QnumError::Domain(format!(
            "psi is defined for n > 2 (got {n})"
        )));
    }
    let theta = theta_one_color(n);
    let coeffs = theta.coeffs();
    let mut even = Vec::with_capacity(coeffs.len() / 2 + 1);
    for (k, c) in coeffs.iter().enumerate() {
        if k % 2 == 0 {
            even.push(c.clone());
        } else if !c.is_zero() {
            return Err(QnumError::Verification(format!(
                "theta_{n} has an odd-degree term"
            )));
        }
    }
    Ok(UniPoly::from_bigint_coeffs(even))
}

/// The two-colored cyclotomic part `Θ_{n,c}`: `1` for n = 1, `x_c` for
/// n = 2, and the color-independent `Ψ_n(x_s x_t)` for n > 2. Satisfies
/// `[n]_c = ∏_{k|n} Θ_{k,c}`.
pub fn theta_two_color(n: u64, c: Color) -> BiPoly {
    assert!(n >= 1, "theta_two_color requires n >= 1");
    match n {
        1 => BiPoly::one(),
        2 => c.var(),
        _ => {
            let psi = psi(n).expect("n > 2");
            let mut out = BiPoly::zero();
            for (k, coeff) in psi.coeffs().iter().enumerate() {
                out = &out + &BiPoly::monomial(k as u32, k as u32, coeff.clone());
            }
            out
        }
    }
}

/// The `Θ_{l,c}`-adic valuation of a nonzero rational function: how many
/// times the cyclotomic part divides the numerator, minus how many times it
/// divides the denominator.
pub fn cyclo_valuation(f: &RatFunc, l: u64, c: Color) -> i64 {
    assert!(l > 1, "cyclo_valuation requires l > 1");
    assert!(!f.is_zero(), "cyclo_valuation requires a nonzero argument");
    let theta = theta_two_color(l, c);
    let multiplicity = |p: &BiPoly| -> i64 {
        let mut count = 0;
        let mut cur = p.clone();
        while let Ok(next) = cur.exact_div(&theta) {
            count += 1;
            cur = next;
        }
        count
    };
    multiplicity(f.num()) - multiplicity(f.den())
}

/// Bézout certificate for quantum numbers: returns `(a, b)` with
/// `a [m]_c + b [n]_c = [gcd(m, n)]_c`. Ties resolve toward the first
/// argument: `qbezout(n, n, c) = (1, 0)`.
///
/// The descent uses the colored three-term identity
/// `[q-1]_u [p]_c - [p-1]_u [q]_c = [q-p]_c` for `p < q`, where `u = c` when
/// `p` and `q` are both odd and the opposite color otherwise.
pub fn qbezout(m: u64, n: u64, c: Color) -> (BiPoly, BiPoly) {
    assert!(m >= 1 && n >= 1, "qbezout requires positive indices");
    // Each triple (index, a, b) maintains [index]_c = a*[m]_c + b*[n]_c.
    let mut lo = (m, BiPoly::one(), BiPoly::zero());
    let mut hi = (n, BiPoly::zero(), BiPoly::one());
    loop {
        if lo.0 == hi.0 {
            return (lo.1, lo.2);
        }
        if lo.0 > hi.0 {
            std::mem::swap(&mut lo, &mut hi);
        }
        let (p, q) = (lo.0, hi.0);
        let u = if p % 2 == 1 && q % 2 == 1 {
            c
        } else {
            c.swap()
        };
        let x = quantum_number(q as i64 - 1, u);
        let y = quantum_number(p as i64 - 1, u);
        let a = &(&x * &lo.1) - &(&y * &hi.1);
        let b = &(&x * &lo.2) - &(&y * &hi.2);
        hi = (q - p, a, b);
    }
}

/// Bézout certificate for cyclotomic parts: `(a, b)` with
/// `a Θ_{m,s} + b Θ_{n,s} = 1`, defined when neither index divides the
/// other (otherwise the parts are not comaximal and a
/// [`QnumError::Domain`] is returned).
pub fn theta_bezout(m: u64, n: u64) -> Result<(BiPoly, BiPoly), QnumError> {
    assert!(m >= 1 && n >= 1, "theta_bezout requires positive indices");
    if m % n == 0 || n % m == 0 {
        return Err(QnumError::Domain(format!(
            "theta_bezout({m}, {n}) requires indices that do not divide each other"
        )));
    }
    let c = Color::S;
    let d = num_integer::Integer::gcd(&m, &n);
    let (qa, qb) = qbezout(m, n, c);
    let gcd_qnum = quantum_number(d as i64, c);
    // Divide a[m] + b[n] = [d] through by [d]: since d is a proper divisor
    // of both indices, [m]/[d] and [n]/[d] are polynomial multiples of the
    // respective cyclotomic parts.
    let cofactor = |idx: u64| -> BiPoly {
        quantum_number(idx as i64, c)
            .exact_div(&gcd_qnum)
            .expect("[d] divides [m]")
            .exact_div(&theta_two_color(idx, c))
            .expect("theta divides [m]/[d]")
    };
    let a = &qa * &cofactor(m);
    let b = &qb * &cofactor(n);
    let check = &(&a * &theta_two_color(m, c)) + &(&b * &theta_two_color(n, c));
    if !check.is_one() {
        return Err(QnumError::Verification(format!(
            "theta_bezout({m}, {n}) certificate does not multiply to 1"
        )));
    }
    Ok((a, b))
}

/// The monic generator of the ideal of proper quantum binomials
/// `([n 1]_c, ..., [n n-1]_c)`, which is the cyclotomic part `Θ_{n,c}`.
/// Verifies membership and the gcd identity before returning; a failure is
/// a bug, reported as [`QnumError::Verification`].
pub fn binom_ideal_generator(n: u64, c: Color) -> Result<BiPoly, QnumError> {
    assert!(n >= 2, "binom_ideal_generator requires n >= 2");
    let theta = theta_two_color(n, c);
    let mut gcd = BiPoly::zero();
    for k in 1..n {
        let b = qbinom(n, k as i64, c);
        if b.exact_div(&theta).is_err() {
            return Err(QnumError::Verification(format!(
                "theta_{{{n},{c}}} does not divide [{n} choose {k}]_{c}"
            )));
        }
        gcd = gcd.gcd(&b);
    }
    if gcd != theta {
        return Err(QnumError::Verification(format!(
            "gcd of proper binomials differs from theta_{{{n},{c}}}"
        )));
    }
    Ok(theta)
}

/// The monic generator `g_n` of the fractional ideal spanned by the inverse
/// binomials `1/[n choose k]_c`: the product of the `Θ_{k,c}` over
/// `1 <= k <= n` with `k` not dividing `n + 1`. Verifies that `g_n` is the
/// least common multiple of the binomials before returning.
pub fn inv_binom_ideal_generator(n: u64, c: Color) -> Result<BiPoly, QnumError> {
    assert!(n >= 1, "inv_binom_ideal_generator requires n >= 1");
    let mut g = BiPoly::one();
    for k in 1..=n {
        if (n + 1) % k != 0 {
            g = &g * &theta_two_color(k, c);
        }
    }
    let mut lcm = BiPoly::one();
    for k in 0..=n {
        let b = qbinom(n, k as i64, c);
        let common = lcm.gcd(&b);
        lcm = (&lcm * &b)
            .exact_div(&common)
            .expect("gcd divides product");
        if lcm.is_negative() {
            lcm = -lcm;
        }
    }
    if lcm != g {
        return Err(QnumError::Verification(format!(
            "lcm of binomials differs from the cyclotomic product g_{n} (color {c})"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x_s*x_t` — products of the two parameters show up everywhere below.
    fn st() -> BiPoly {
        BiPoly::monomial(1, 1, 1)
    }

    #[test]
    fn small_quantum_numbers() {
        assert!(quantum_number(0, Color::S).is_zero());
        assert!(quantum_number(1, Color::S).is_one());
        assert_eq!(quantum_number(2, Color::S), BiPoly::var_s());
        assert_eq!(quantum_number(2, Color::T), BiPoly::var_t());
        assert_eq!(quantum_number(3, Color::S), &st() - &BiPoly::one());
        assert_eq!(
            quantum_number(4, Color::S),
            &BiPoly::var_s() * &(&st() - &BiPoly::constant(2))
        );
        assert_eq!(
            quantum_number(5, Color::S).to_string(),
            "x_s^2*x_t^2 - 3*x_s*x_t + 1"
        );
    }

    #[test]
    fn negative_quantum_numbers_negate() {
        assert_eq!(quantum_number(-1, Color::S), BiPoly::constant(-1));
        assert_eq!(
            quantum_number(-3, Color::S),
            -(&st() - &BiPoly::one())
        );
        for n in -12..=12 {
            for c in [Color::S, Color::T] {
                assert_eq!(quantum_number(-n, c), -quantum_number(n, c));
            }
        }
    }

    #[test]
    fn recurrence_holds_in_both_directions() {
        for n in -12..=12i64 {
            let lhs_s = quantum_number(n + 1, Color::S);
            let rhs_s =
                &(&BiPoly::var_s() * &quantum_number(n, Color::T)) - &quantum_number(n - 1, Color::S);
            assert_eq!(lhs_s, rhs_s, "s-recurrence at n = {n}");
            let lhs_t = quantum_number(n + 1, Color::T);
            let rhs_t =
                &(&BiPoly::var_t() * &quantum_number(n, Color::S)) - &quantum_number(n - 1, Color::T);
            assert_eq!(lhs_t, rhs_t, "t-recurrence at n = {n}");
        }
    }

    #[test]
    fn color_dependence() {
        for n in 1..=13i64 {
            if n % 2 == 1 {
                assert_eq!(quantum_number(n, Color::S), quantum_number(n, Color::T));
            } else {
                assert_eq!(
                    &quantum_number(n, Color::S) * &BiPoly::var_t(),
                    &quantum_number(n, Color::T) * &BiPoly::var_s()
                );
            }
            assert_eq!(
                quantum_number(n, Color::S).color_swap(),
                quantum_number(n, Color::T)
            );
        }
    }

    #[test]
    fn one_color_specialization_matches() {
        for n in 0..=13 {
            assert_eq!(
                quantum_number(n as i64, Color::S).to_one_color(),
                one_color_qnum(n)
            );
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(qbinom(3, 1, Color::T), &st() - &BiPoly::one());
        assert_eq!(
            qbinom(4, 2, Color::S),
            &(&st() - &BiPoly::one()) * &(&st() - &BiPoly::constant(2))
        );
        assert!(qbinom(4, -1, Color::S).is_zero());
        assert!(qbinom(4, 5, Color::S).is_zero());
        for n in 0..=10u64 {
            assert!(qbinom(n, 0, Color::S).is_one());
            assert!(qbinom(n, n as i64, Color::S).is_one());
            for k in 0..=n as i64 {
                // Symmetry and color swap.
                assert_eq!(qbinom(n, k, Color::S), qbinom(n, n as i64 - k, Color::S));
                assert_eq!(
                    qbinom(n, k, Color::S).color_swap(),
                    qbinom(n, k, Color::T)
                );
            }
        }
    }

    #[test]
    fn pascal_style_recurrence() {
        // [n+1 choose k]_s = [n+1]_s/[k]_s * [n choose k-1]_s as polynomials:
        // cross-multiplied to stay in A.
        for n in 1..=9u64 {
            for k in 1..=n as i64 {
                let lhs = &qbinom(n + 1, k, Color::S) * &quantum_number(k, Color::S);
                let rhs = &quantum_number(n as i64 + 1, Color::S) * &qbinom(n, k - 1, Color::S);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), e, "mu({})", i + 1);
        }
    }

    #[test]
    fn one_color_cyclotomic_parts() {
        assert!(theta_one_color(1).is_one());
        assert_eq!(theta_one_color(2), UniPoly::var());
        assert_eq!(theta_one_color(5), UniPoly::from_coeffs([1, 0, -3, 0, 1]));
        assert_eq!(theta_one_color(6), UniPoly::from_coeffs([-3, 0, 1]));
        // [n] = ∏_{k|n} Θ_k.
        for n in 1..=16u64 {
            let mut prod = UniPoly::one();
            for k in 1..=n {
                if n % k == 0 {
                    prod = &prod * &theta_one_color(k);
                }
            }
            assert_eq!(prod, one_color_qnum(n), "cyclotomic product at n = {n}");
        }
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(3).unwrap().to_text("y"), "y - 1");
        assert_eq!(psi(4).unwrap().to_text("y"), "y - 2");
        assert_eq!(psi(5).unwrap().to_text("y"), "y^2 - 3*y + 1");
        assert_eq!(psi(6).unwrap().to_text("y"), "y - 3");
        assert!(matches!(psi(2), Err(QnumError::Domain(_))));
        // deg Ψ_n = φ(n)/2 for n > 2.
        let phi = |n: u64| (1..=n).filter(|k| num_integer::Integer::gcd(k, &n) == 1).count();
        for n in 3..=16u64 {
            assert_eq!(psi(n).unwrap().degree(), Some(phi(n) / 2), "deg psi_{n}");
        }
    }

    #[test]
    fn two_color_cyclotomic_parts() {
        assert!(theta_two_color(1, Color::S).is_one());
        assert_eq!(theta_two_color(2, Color::S), BiPoly::var_s());
        assert_eq!(theta_two_color(2, Color::T), BiPoly::var_t());
        assert_eq!(theta_two_color(6, Color::S), &st() - &BiPoly::constant(3));
        assert_eq!(
            theta_two_color(6, Color::S),
            theta_two_color(6, Color::T),
            "color-independent for n > 2"
        );
        for n in 1..=16u64 {
            for c in [Color::S, Color::T] {
                let mut prod = BiPoly::one();
                for k in 1..=n {
                    if n % k == 0 {
                        prod = &prod * &theta_two_color(k, c);
                    }
                }
                assert_eq!(prod, quantum_number(n as i64, c));
            }
        }
    }

    #[test]
    fn valuations() {
        let f = RatFunc::from_poly(quantum_number(6, Color::S));
        assert_eq!(cyclo_valuation(&f, 6, Color::S), 1);
        assert_eq!(cyclo_valuation(&f, 4, Color::S), 0);
        let g = RatFunc::from_poly(qbinom(4, 2, Color::S));
        assert_eq!(cyclo_valuation(&g, 2, Color::S), 0);
        let h = RatFunc::new(BiPoly::one(), quantum_number(3, Color::S)).unwrap();
        assert_eq!(cyclo_valuation(&h, 3, Color::S), -1);
        // The floor formula for binomial valuations: in {0, 1}.
        for n in 1..=10u64 {
            for k in 0..=n {
                let b = RatFunc::from_poly(qbinom(n, k as i64, Color::S));
                for l in 2..=n {
                    let expect = (n / l) as i64 - (k / l) as i64 - ((n - k) / l) as i64;
                    assert_eq!(
                        cyclo_valuation(&b, l, Color::S),
                        expect,
                        "valuation of [{n} choose {k}] at l = {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn quantum_bezout() {
        let (a, b) = qbezout(2, 3, Color::S);
        assert_eq!(a, BiPoly::var_t());
        assert_eq!(b, BiPoly::constant(-1));
        assert_eq!(qbezout(4, 4, Color::S), (BiPoly::one(), BiPoly::zero()));
        for m in 1..=10u64 {
            for n in 1..=10u64 {
                for c in [Color::S, Color::T] {
                    let (a, b) = qbezout(m, n, c);
                    let lhs = &(&a * &quantum_number(m as i64, c))
                        + &(&b * &quantum_number(n as i64, c));
                    let g = num_integer::Integer::gcd(&m, &n);
                    assert_eq!(lhs, quantum_number(g as i64, c), "bezout({m}, {n}, {c})");
                }
            }
        }
    }

    #[test]
    fn theta_bezout_certificates() {
        let (a, b) = theta_bezout(2, 3).unwrap();
        let lhs = &(&a * &theta_two_color(2, Color::S)) + &(&b * &theta_two_color(3, Color::S));
        assert!(lhs.is_one());
        assert!(matches!(theta_bezout(2, 4), Err(QnumError::Domain(_))));
        assert!(matches!(theta_bezout(6, 3), Err(QnumError::Domain(_))));
        for m in 2..=9u64 {
            for n in 2..=9u64 {
                if m % n == 0 || n % m == 0 {
                    continue;
                }
                let (a, b) = theta_bezout(m, n).unwrap();
                let lhs = &(&a * &theta_two_color(m, Color::S))
                    + &(&b * &theta_two_color(n, Color::S));
                assert!(lhs.is_one(), "theta_bezout({m}, {n})");
            }
        }
    }

    #[test]
    fn binomial_ideal_generators() {
        assert_eq!(
            binom_ideal_generator(3, Color::S).unwrap(),
            &st() - &BiPoly::one()
        );
        assert_eq!(
            binom_ideal_generator(6, Color::S).unwrap(),
            &st() - &BiPoly::constant(3)
        );
        for n in 2..=10u64 {
            for c in [Color::S, Color::T] {
                assert_eq!(binom_ideal_generator(n, c).unwrap(), theta_two_color(n, c));
            }
        }
    }

    #[test]
    fn inverse_binomial_ideal_generators() {
        assert!(inv_binom_ideal_generator(1, Color::S).unwrap().is_one());
        assert_eq!(
            inv_binom_ideal_generator(3, Color::S).unwrap(),
            theta_two_color(3, Color::S)
        );
        assert_eq!(
            inv_binom_ideal_generator(5, Color::S).unwrap(),
            &theta_two_color(4, Color::S) * &theta_two_color(5, Color::S)
        );
        for n in 1..=10u64 {
            for c in [Color::S, Color::T] {
                inv_binom_ideal_generator(n, c).unwrap();
            }
        }
    }
}
