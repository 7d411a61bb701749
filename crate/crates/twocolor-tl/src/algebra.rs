//! The two-colored Temperley–Lieb algebra on `n` strands.
//!
//! An [`AlgebraContext`] fixes the strand count, the leading (leftmost-region)
//! color, and a coefficient ring together with the images of `[2]_s` and
//! `[2]_t`. A [`TLElement`] is a finitely supported linear combination of
//! planar diagrams over that context. Multiplication stacks diagrams and
//! converts each closed loop into a factor of `-[2]_s` or `-[2]_t` according
//! to the color of the region the loop sits in; the leading color decides how
//! the combinatorial loop records translate into ring factors.
//!
//! [`annihilator_solve`] is the linear-algebra oracle: over a field it solves
//! `e_i · f = 0` for all generators together with the normalization that the
//! identity diagram has coefficient `1`, which pins down the Jones–Wenzl
//! projector exactly when it exists.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::diagram::{compose, DiagramError, LoopRecord, TLDiagram};
use crate::qnum::Color;
use crate::ring::{RingDescriptor, RingError, RingValue, Specialization};

/// Errors from algebra-level operations.
#[derive(Debug, Error)]
pub enum AlgebraError {
    /// Two elements (or an element and a scalar) live over different contexts.
    #[error("algebra contexts do not match")]
    ContextMismatch,
    /// The requested operation needs a field, or a ring the solver supports.
    #[error("unsupported coefficient ring: {0}")]
    UnsupportedRing(String),
    /// An underlying ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// An underlying diagram operation failed.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// The ambient data of a two-colored Temperley–Lieb algebra: strand count,
/// leading color, and the coefficient ring with its two circle values.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraContext {
    n: usize,
    leading: Color,
    spec: Specialization,
}

impl AlgebraContext {
    /// A context over an explicit specialization.
    pub fn new(n: usize, leading: Color, spec: Specialization) -> AlgebraContext {
        AlgebraContext { n, leading, spec }
    }

    /// The generic context: coefficients in the fraction field of the
    /// two-variable polynomial ring, with `[2]_s = x_s` and `[2]_t = x_t`.
    pub fn generic(n: usize, leading: Color) -> AlgebraContext {
        AlgebraContext::new(n, leading, Specialization::generic())
    }

    /// Strand count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The color of the leftmost region.
    pub fn leading_color(&self) -> Color {
        self.leading
    }

    /// The coefficient ring.
    pub fn ring(&self) -> &RingDescriptor {
        self.spec.ring()
    }

    /// The underlying specialization.
    pub fn specialization(&self) -> &Specialization {
        &self.spec
    }

    /// The image of `[2]_s` in the coefficient ring.
    pub fn two_s(&self) -> RingValue {
        self.spec.image_s().clone()
    }

    /// The image of `[2]_t` in the coefficient ring.
    pub fn two_t(&self) -> RingValue {
        self.spec.image_t().clone()
    }

    /// The same context on a different strand count.
    pub fn with_n(&self, n: usize) -> AlgebraContext {
        AlgebraContext::new(n, self.leading, self.spec.clone())
    }

    /// The ring factor contributed by one closed loop. Loop records carry the
    /// ambient-region color relative to an `s`-leading picture; when this
    /// context leads with `t` every region color is swapped.
    fn loop_factor(&self, record: &LoopRecord) -> Result<RingValue, RingError> {
        let ambient = match self.leading {
            Color::S => record.ambient_color,
            Color::T => record.ambient_color.swap(),
        };
        let two = match ambient {
            Color::S => self.two_s(),
            Color::T => self.two_t(),
        };
        self.ring().neg(&two)
    }
}

/// A linear combination of diagrams with coefficients in the context's ring.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct TLElement {
    context: AlgebraContext,
    coeffs: BTreeMap<TLDiagram, RingValue>,
}

impl TLElement {
    /// The zero element.
    pub fn zero(context: &AlgebraContext) -> TLElement {
        TLElement {
            context: context.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// A single diagram with coefficient one.
    pub fn from_diagram(context: &AlgebraContext, d: TLDiagram) -> Result<TLElement, AlgebraError> {
        if d.n() != context.n() {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(d, context.ring().one());
        Ok(TLElement {
            context: context.clone(),
            coeffs,
        })
    }

    /// The identity of the algebra.
    pub fn identity(context: &AlgebraContext) -> TLElement {
        TLElement::from_diagram(context, TLDiagram::identity(context.n()))
            .expect("identity diagram always matches its context")
    }

    /// The `i`-th cap/cup generator.
    pub fn generator(context: &AlgebraContext, i: usize) -> Result<TLElement, AlgebraError> {
        let d = TLDiagram::generator(i, context.n())?;
        TLElement::from_diagram(context, d)
    }

    /// Builds an element from explicit terms, summing repeats and pruning
    /// zeros. Every coefficient must lie in the context's ring.
    pub fn from_terms(
        context: &AlgebraContext,
        terms: impl IntoIterator<Item = (TLDiagram, RingValue)>,
    ) -> Result<TLElement, AlgebraError> {
        let ring = context.ring().clone();
        let mut coeffs: BTreeMap<TLDiagram, RingValue> = BTreeMap::new();
        for (d, c) in terms {
            if d.n() != context.n() {
                return Err(AlgebraError::ContextMismatch);
            }
            ring.expect_member(&c)?;
            let entry = match coeffs.remove(&d) {
                Some(prev) => ring.add(&prev, &c)?,
                None => c,
            };
            if !entry.is_zero() {
                coeffs.insert(d, entry);
            }
        }
        Ok(TLElement {
            context: context.clone(),
            coeffs,
        })
    }

    /// The ambient context.
    pub fn context(&self) -> &AlgebraContext {
        &self.context
    }

    /// The coefficient of a diagram (zero when absent).
    pub fn coeff_of(&self, d: &TLDiagram) -> RingValue {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.context.ring().zero())
    }

    /// The stored (nonzero) terms in diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &RingValue)> {
        self.coeffs.iter()
    }

    /// Number of stored terms.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of two elements over the same context.
    pub fn add(&self, other: &TLElement) -> Result<TLElement, AlgebraError> {
        if self.context != other.context {
            return Err(AlgebraError::ContextMismatch);
        }
        let ring = self.context.ring();
        let mut coeffs = self.coeffs.clone();
        for (d, c) in &other.coeffs {
            let entry = match coeffs.remove(d) {
                Some(prev) => ring.add(&prev, c)?,
                None => c.clone(),
            };
            if !entry.is_zero() {
                coeffs.insert(d.clone(), entry);
            }
        }
        Ok(TLElement {
            context: self.context.clone(),
            coeffs,
        })
    }

    /// Difference of two elements over the same context.
    pub fn sub(&self, other: &TLElement) -> Result<TLElement, AlgebraError> {
        let minus_one = self.context.ring().neg(&self.context.ring().one())?;
        self.add(&other.scale(&minus_one)?)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &RingValue) -> Result<TLElement, AlgebraError> {
        let ring = self.context.ring();
        ring.expect_member(c)?;
        let mut coeffs = BTreeMap::new();
        for (d, v) in &self.coeffs {
            let scaled = ring.mul(c, v)?;
            if !scaled.is_zero() {
                coeffs.insert(d.clone(), scaled);
            }
        }
        Ok(TLElement {
            context: self.context.clone(),
            coeffs,
        })
    }

    /// Product of two elements: the bilinear extension of stacking `self` on
    /// top of `other`, with each closed loop exchanged for its ring factor.
    pub fn mul(&self, other: &TLElement) -> Result<TLElement, AlgebraError> {
        if self.context != other.context {
            return Err(AlgebraError::ContextMismatch);
        }
        let ring = self.context.ring();
        let mut coeffs: BTreeMap<TLDiagram, RingValue> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let (d, loops) = compose(a, b)?;
                let mut factor = ring.mul(ca, cb)?;
                for record in &loops {
                    factor = ring.mul(&factor, &self.context.loop_factor(record)?)?;
                }
                let entry = match coeffs.remove(&d) {
                    Some(prev) => ring.add(&prev, &factor)?,
                    None => factor,
                };
                if !entry.is_zero() {
                    coeffs.insert(d, entry);
                }
            }
        }
        Ok(TLElement {
            context: self.context.clone(),
            coeffs,
        })
    }

    /// Closes off the rightmost strand of every diagram, landing on `n - 1`
    /// strands with the leading color unchanged (the leftmost region is
    /// untouched by the right-hand bend).
    pub fn partial_trace(&self) -> Result<TLElement, AlgebraError> {
        let ring = self.context.ring();
        let target = self.context.with_n(self.context.n() - 1);
        let mut coeffs: BTreeMap<TLDiagram, RingValue> = BTreeMap::new();
        for (d, c) in &self.coeffs {
            let (traced, record) = d.partial_trace();
            let mut factor = c.clone();
            if let Some(record) = record {
                factor = ring.mul(&factor, &self.context.loop_factor(&record)?)?;
            }
            let entry = match coeffs.remove(&traced) {
                Some(prev) => ring.add(&prev, &factor)?,
                None => factor,
            };
            if !entry.is_zero() {
                coeffs.insert(traced, entry);
            }
        }
        Ok(TLElement {
            context: target,
            coeffs,
        })
    }

    /// JSON form: a context header plus the list of terms. Fraction-field
    /// coefficients are emitted as `{"num": ..., "den": ...}` polynomial
    /// text; all other rings use their value grammar.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(d, c)| {
                json!({
                    "diagram": d.to_json(),
                    "coefficient": coefficient_json(c),
                })
            })
            .collect();
        json!({
            "context": {
                "n": self.context.n(),
                "leading": self.context.leading_color().to_string(),
                "ring": self.context.ring().to_string(),
                "two_s": self.context.two_s().to_string(),
                "two_t": self.context.two_t().to_string(),
            },
            "terms": terms,
        })
    }
}

fn coefficient_json(c: &RingValue) -> Value {
    match c {
        RingValue::Frac(f) => json!({
            "num": f.num().to_string(),
            "den": f.den().to_string(),
        }),
        other => Value::String(other.to_string()),
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{d}")?;
        }
        Ok(())
    }
}

/// Deterministic primality test for moduli that fit in a machine word.
fn modulus_is_prime(m: &BigInt) -> Option<bool> {
    let m: u64 = m.try_into().ok()?;
    if m < 2 {
        return Some(false);
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if m == p {
            return Some(true);
        }
        if m % p == 0 {
            return Some(false);
        }
    }
    // Deterministic Miller-Rabin: these twelve witnesses decide primality
    // for every 64-bit integer.
    let mut d = m - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % m as u128) as u64 };
    let pow = |mut base: u64, mut exp: u64| -> u64 {
        let mut acc = 1u64;
        base %= m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul(x, x);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return Some(false);
    }
    Some(true)
}

/// Solves for the element annihilated by every generator and normalized to
/// have identity coefficient one — the Jones–Wenzl projector when it exists.
///
/// The coefficient ring must be a field: the rationals, a prime field, or the
/// generic fraction field. Returns `None` when the linear system has no
/// solution (the projector does not exist over this ring).
pub fn annihilator_solve(ctx: &AlgebraContext) -> Result<Option<TLElement>, AlgebraError> {
    let ring = ctx.ring().clone();
    match &ring {
        RingDescriptor::Rationals | RingDescriptor::GenericBivariateFractionField => {}
        RingDescriptor::IntegersMod(m) => match modulus_is_prime(m) {
            Some(true) => {}
            Some(false) => {
                return Err(AlgebraError::UnsupportedRing(format!(
                    "Z/{m} is not a field"
                )))
            }
            None => {
                return Err(AlgebraError::UnsupportedRing(format!(
                    "modulus {m} is too large for the primality check"
                )))
            }
        },
        other => return Err(AlgebraError::UnsupportedRing(other.to_string())),
    }

    let n = ctx.n();
    let basis = TLDiagram::enumerate(n);
    let dim = basis.len();
    let index: BTreeMap<&TLDiagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();

    // Sparse rows over the field: one row per (generator, target diagram)
    // stating that the target's coefficient in e_i * f vanishes, plus the
    // normalization row; the last column is the right-hand side.
    let mut rows: Vec<BTreeMap<usize, RingValue>> = Vec::new();
    for i in 1..n {
        let gen = TLDiagram::generator(i, n)?;
        let mut block: Vec<BTreeMap<usize, RingValue>> = vec![BTreeMap::new(); dim];
        for (j, d) in basis.iter().enumerate() {
            let (image, loops) = compose(&gen, d)?;
            let mut factor = ring.one();
            for record in &loops {
                factor = ring.mul(&factor, &ctx.loop_factor(record)?)?;
            }
            let row = &mut block[index[&image]];
            let entry = match row.remove(&j) {
                Some(prev) => ring.add(&prev, &factor)?,
                None => factor,
            };
            if !entry.is_zero() {
                row.insert(j, entry);
            }
        }
        rows.extend(block.into_iter().filter(|row| !row.is_empty()));
    }
    let mut normalization = BTreeMap::new();
    normalization.insert(index[&TLDiagram::identity(n)], ring.one());
    normalization.insert(dim, ring.one());
    rows.push(normalization);

    // Exact Gauss-Jordan elimination, pivoting on the first row holding a
    // nonzero entry for each column in diagram order.
    let mut pivot_of: Vec<Option<usize>> = vec![None; dim];
    let mut used = vec![false; rows.len()];
    for col in 0..dim {
        let Some(pivot_row) = (0..rows.len()).find(|&r| !used[r] && rows[r].contains_key(&col))
        else {
            continue;
        };
        used[pivot_row] = true;
        pivot_of[col] = Some(pivot_row);
        let pivot = rows[pivot_row][&col].clone();
        let inv = ring
            .try_invert(&pivot)?
            .expect("nonzero field element is invertible");
        let scaled: BTreeMap<usize, RingValue> = rows[pivot_row]
            .iter()
            .map(|(k, v)| Ok((*k, ring.mul(&inv, v)?)))
            .collect::<Result<_, RingError>>()?;
        rows[pivot_row] = scaled;
        let pivot_entries = rows[pivot_row].clone();
        for r in 0..rows.len() {
            if r == pivot_row {
                continue;
            }
            let Some(lead) = rows[r].get(&col).cloned() else {
                continue;
            };
            for (k, v) in &pivot_entries {
                let delta = ring.mul(&lead, v)?;
                let entry = match rows[r].remove(k) {
                    Some(prev) => ring.sub(&prev, &delta)?,
                    None => ring.neg(&delta)?,
                };
                if !entry.is_zero() {
                    rows[r].insert(*k, entry);
                }
            }
        }
    }

    // Inconsistency: a leftover row reduced to 0 = nonzero.
    for (r, row) in rows.iter().enumerate() {
        if !used[r] && row.contains_key(&dim) && row.len() == 1 {
            return Ok(None);
        }
    }

    // Read the unique solution off the pivot rows.
    let mut terms = Vec::new();
    for (col, d) in basis.iter().enumerate() {
        let owner =
            pivot_of[col].unwrap_or_else(|| panic!("annihilator system is underdetermined at {d}"));
        let value = rows[owner].get(&dim).cloned().unwrap_or_else(|| ring.zero());
        if !value.is_zero() {
            terms.push((d.clone(), value));
        }
    }
    Ok(Some(TLElement::from_terms(ctx, terms)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{BiPoly, RatFunc};
    use crate::qnum::quantum_number;

    fn generic_frac(num: BiPoly, den: BiPoly) -> RingValue {
        RingValue::Frac(RatFunc::new(num, den).unwrap())
    }

    #[test]
    fn linear_operations() {
        let ctx = AlgebraContext::new(
            3,
            Color::S,
            Specialization::new(
                RingDescriptor::Integers,
                RingValue::Int(2.into()),
                RingValue::Int(3.into()),
            )
            .unwrap(),
        );
        let e1 = TLElement::generator(&ctx, 1).unwrap();
        let e2 = TLElement::generator(&ctx, 2).unwrap();
        let minus_one = RingValue::Int(BigInt::from(-1));
        assert!(e1.add(&e1.scale(&minus_one).unwrap()).unwrap().is_zero());
        assert_eq!(e1.scale(&RingValue::Int(1.into())).unwrap(), e1);
        let sum = e1.add(&e2).unwrap().add(&e1).unwrap();
        assert_eq!(
            sum.coeff_of(&TLDiagram::generator(1, 3).unwrap()),
            RingValue::Int(2.into())
        );
        assert_eq!(
            sum.coeff_of(&TLDiagram::generator(2, 3).unwrap()),
            RingValue::Int(1.into())
        );
        assert_eq!(sum.support_size(), 2);
    }

    #[test]
    fn quadratic_relation_in_both_leading_colors() {
        for (leading, expected) in [
            (Color::S, BiPoly::var_s()),
            (Color::T, BiPoly::var_t()),
        ] {
            let ctx = AlgebraContext::generic(2, leading);
            let e1 = TLElement::generator(&ctx, 1).unwrap();
            let square = e1.mul(&e1).unwrap();
            let expected = e1
                .scale(&generic_frac(-expected, BiPoly::one()))
                .unwrap();
            assert_eq!(square, expected, "leading color {leading}");
        }
    }

    #[test]
    fn braid_relation() {
        let ctx = AlgebraContext::generic(3, Color::S);
        let e1 = TLElement::generator(&ctx, 1).unwrap();
        let e2 = TLElement::generator(&ctx, 2).unwrap();
        assert_eq!(e1.mul(&e2).unwrap().mul(&e1).unwrap(), e1);
        assert_eq!(e2.mul(&e1).unwrap().mul(&e2).unwrap(), e2);
    }

    #[test]
    fn distant_generators_commute() {
        let ctx = AlgebraContext::generic(4, Color::S);
        let e1 = TLElement::generator(&ctx, 1).unwrap();
        let e3 = TLElement::generator(&ctx, 3).unwrap();
        assert_eq!(e1.mul(&e3).unwrap(), e3.mul(&e1).unwrap());
    }

    #[test]
    fn defining_relations_hold_everywhere() {
        // e_i^2 = -[2]*e_i with the color set by the region the loop encloses,
        // the braid relation, and distant commutation, for every i, j at
        // small strand counts and both leading colors.
        for n in 2..=6 {
            for leading in [Color::S, Color::T] {
                let ctx = AlgebraContext::generic(n, leading);
                let gens: Vec<TLElement> = (1..n)
                    .map(|i| TLElement::generator(&ctx, i).unwrap())
                    .collect();
                for (idx, e) in gens.iter().enumerate() {
                    let i = idx + 1;
                    // The squared generator's loop sits in a region whose
                    // color is the leading color for odd i and its swap for
                    // even i.
                    let ambient = if i % 2 == 1 { leading } else { leading.swap() };
                    let expected = e
                        .scale(&generic_frac(-ambient.var(), BiPoly::one()))
                        .unwrap();
                    assert_eq!(e.mul(e).unwrap(), expected, "n={n} i={i} leading {leading}");
                }
                for i in 0..gens.len() {
                    for j in 0..gens.len() {
                        let a = &gens[i];
                        let b = &gens[j];
                        if i.abs_diff(j) == 1 {
                            assert_eq!(a.mul(b).unwrap().mul(a).unwrap(), *a);
                        } else if i != j {
                            assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_is_associative_and_distributive() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let ring = RingDescriptor::integers_mod(7).unwrap();
        let spec =
            Specialization::new(ring.clone(), ring.from_int(3), ring.from_int(5)).unwrap();
        let ctx = AlgebraContext::new(4, Color::S, spec);
        let basis = TLDiagram::enumerate(4);
        let mut rng = StdRng::seed_from_u64(20260816);
        let random_element = |rng: &mut StdRng| {
            let mut terms: Vec<(TLDiagram, RingValue)> = Vec::new();
            for d in &basis {
                if rng.random_bool(0.4) {
                    terms.push((d.clone(), ring.from_int(rng.random_range(0..7))));
                }
            }
            TLElement::from_terms(&ctx, terms).unwrap()
        };
        for _ in 0..25 {
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let c = random_element(&mut rng);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn annihilator_on_two_strands() {
        let ctx = AlgebraContext::generic(2, Color::S);
        let f = annihilator_solve(&ctx).unwrap().unwrap();
        assert_eq!(
            f.coeff_of(&TLDiagram::identity(2)),
            RingValue::Frac(RatFunc::one())
        );
        assert_eq!(
            f.coeff_of(&TLDiagram::generator(1, 2).unwrap()),
            generic_frac(BiPoly::one(), BiPoly::var_s())
        );
        assert_eq!(f.support_size(), 2);

        let ctx_t = AlgebraContext::generic(2, Color::T);
        let g = annihilator_solve(&ctx_t).unwrap().unwrap();
        assert_eq!(
            g.coeff_of(&TLDiagram::generator(1, 2).unwrap()),
            generic_frac(BiPoly::one(), BiPoly::var_t())
        );
    }

    #[test]
    fn annihilator_on_three_strands() {
        let ctx = AlgebraContext::generic(3, Color::S);
        let f = annihilator_solve(&ctx).unwrap().unwrap();
        let e1 = TLDiagram::generator(1, 3).unwrap();
        let e2 = TLDiagram::generator(2, 3).unwrap();
        let e1e2 = compose(&e1, &e2).unwrap().0;
        let e2e1 = compose(&e2, &e1).unwrap().0;
        let three = quantum_number(3, Color::S);
        assert_eq!(f.coeff_of(&TLDiagram::identity(3)), RingValue::Frac(RatFunc::one()));
        assert_eq!(f.coeff_of(&e1), generic_frac(BiPoly::var_t(), three.clone()));
        assert_eq!(f.coeff_of(&e2), generic_frac(BiPoly::var_s(), three.clone()));
        assert_eq!(f.coeff_of(&e1e2), generic_frac(BiPoly::one(), three.clone()));
        assert_eq!(f.coeff_of(&e2e1), generic_frac(BiPoly::one(), three));
        assert_eq!(f.support_size(), 5);
        // And it really is annihilated by both generators.
        for i in 1..3 {
            let e = TLElement::generator(&ctx, i).unwrap();
            assert!(e.mul(&f).unwrap().is_zero());
        }
    }

    #[test]
    fn annihilator_absent_in_characteristic_five() {
        let ring = RingDescriptor::integers_mod(5).unwrap();
        let spec =
            Specialization::new(ring.clone(), ring.from_int(2), ring.from_int(2)).unwrap();
        let ctx = AlgebraContext::new(5, Color::S, spec);
        assert!(annihilator_solve(&ctx).unwrap().is_none());
    }

    #[test]
    fn annihilator_rejects_non_fields() {
        let ctx = AlgebraContext::new(
            2,
            Color::S,
            Specialization::new(
                RingDescriptor::Integers,
                RingValue::Int(2.into()),
                RingValue::Int(2.into()),
            )
            .unwrap(),
        );
        assert!(matches!(
            annihilator_solve(&ctx),
            Err(AlgebraError::UnsupportedRing(_))
        ));
        let z6 = RingDescriptor::integers_mod(6).unwrap();
        let ctx = AlgebraContext::new(
            2,
            Color::S,
            Specialization::new(z6.clone(), z6.from_int(1), z6.from_int(1)).unwrap(),
        );
        assert!(matches!(
            annihilator_solve(&ctx),
            Err(AlgebraError::UnsupportedRing(_))
        ));
    }

    #[test]
    fn annihilator_on_tiny_strand_counts() {
        for n in [0, 1] {
            let ctx = AlgebraContext::generic(n, Color::S);
            let f = annihilator_solve(&ctx).unwrap().unwrap();
            assert_eq!(f, TLElement::identity(&ctx));
        }
    }

    #[test]
    fn partial_trace_of_elements() {
        // A lone strand closes into a loop in an s-colored region.
        let ctx = AlgebraContext::generic(1, Color::S);
        let id = TLElement::identity(&ctx);
        let traced = id.partial_trace().unwrap();
        assert_eq!(traced.context().n(), 0);
        assert_eq!(traced.context().leading_color(), Color::S);
        assert_eq!(
            traced.coeff_of(&TLDiagram::identity(0)),
            generic_frac(-BiPoly::var_s(), BiPoly::one())
        );
        // With the other leading color the loop factor swaps.
        let ctx_t = AlgebraContext::generic(1, Color::T);
        let traced_t = TLElement::identity(&ctx_t).partial_trace().unwrap();
        assert_eq!(
            traced_t.coeff_of(&TLDiagram::identity(0)),
            generic_frac(-BiPoly::var_t(), BiPoly::one())
        );

        // No loop: the cap/cup generator traces to the identity strand.
        let ctx2 = AlgebraContext::generic(2, Color::S);
        let e1 = TLElement::generator(&ctx2, 1).unwrap();
        assert_eq!(
            e1.partial_trace().unwrap(),
            TLElement::identity(&ctx2.with_n(1))
        );

        // The normalized annihilator on two strands traces to -[3]_s/[2]_s
        // times the single strand.
        let jw2 = annihilator_solve(&ctx2).unwrap().unwrap();
        let traced = jw2.partial_trace().unwrap();
        let expected = TLElement::identity(&ctx2.with_n(1))
            .scale(&generic_frac(
                -quantum_number(3, Color::S),
                quantum_number(2, Color::S),
            ))
            .unwrap();
        assert_eq!(traced, expected);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = TLElement::identity(&AlgebraContext::generic(2, Color::S));
        let b = TLElement::identity(&AlgebraContext::generic(2, Color::T));
        assert!(matches!(a.add(&b), Err(AlgebraError::ContextMismatch)));
        assert!(matches!(a.mul(&b), Err(AlgebraError::ContextMismatch)));
        let c = TLElement::identity(&AlgebraContext::generic(3, Color::S));
        assert!(matches!(a.add(&c), Err(AlgebraError::ContextMismatch)));
    }

    #[test]
    fn json_form() {
        let ctx = AlgebraContext::generic(2, Color::S);
        let f = annihilator_solve(&ctx).unwrap().unwrap();
        let value = f.to_json();
        assert_eq!(value["context"]["n"], 2);
        assert_eq!(value["context"]["leading"], "s");
        assert_eq!(value["context"]["ring"], "FracA");
        let terms = value["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 2);
        // Terms arrive in diagram order: the cap/cup diagram {{1,2},{3,4}}
        // sorts before the identity {{1,4},{2,3}}.
        assert_eq!(terms[0]["coefficient"]["num"], "1");
        assert_eq!(terms[0]["coefficient"]["den"], "x_s");
        assert_eq!(terms[1]["coefficient"]["num"], "1");
        assert_eq!(terms[1]["coefficient"]["den"], "1");
    }

    #[test]
    fn element_display() {
        let ctx = AlgebraContext::generic(2, Color::S);
        let f = annihilator_solve(&ctx).unwrap().unwrap();
        assert_eq!(
            f.to_string(),
            "((1)/(x_s))*{{1,2},{3,4}} + (1)*{{1,4},{2,3}}"
        );
        assert_eq!(TLElement::zero(&ctx).to_string(), "0");
    }

    #[test]
    fn primality_helper() {
        let prime = |v: i64| modulus_is_prime(&BigInt::from(v));
        assert_eq!(prime(2), Some(true));
        assert_eq!(prime(97), Some(true));
        assert_eq!(prime(1), Some(false));
        assert_eq!(prime(91), Some(false));
        assert_eq!(prime(7919), Some(true));
        assert_eq!(prime(3_215_031_751), Some(false)); // strong pseudoprime to bases 2,3,5,7
        assert!(modulus_is_prime(&(BigInt::from(u64::MAX) + 1)).is_none());
    }
}
