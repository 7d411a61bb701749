//! Jones–Wenzl projectors: the generic computation over the fraction field,
//! denominator structure, specialization into concrete rings, and the
//! existence and rotatability decision procedures.
//!
//! The generic projector on `n` strands is computed once by an incremental
//! recursion: folding a diagram on `n + 1` strands exposes its bottom caps,
//! and each cap at position `i` contributes `[i]_u / [n+1]` times a
//! lower-level coefficient, where `u` is the cap color and the denominator is
//! taken in the leading color. Everything else in this module is either a
//! specialization of those generic coefficients or a decision procedure
//! driven by quantum binomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::algebra::{AlgebraContext, AlgebraError, TLElement};
use crate::diagram::{fold_and_caps, TLDiagram};
use crate::poly::BiPoly;
use crate::poly::RatFunc;
use crate::qnum::{
    cyclo_valuation, inv_binom_ideal_generator, qbinom, quantum_number, Color, QnumError,
};
use crate::ring::{RingError, RingValue, Specialization};

/// Errors from projector construction and the decision procedures.
#[derive(Debug, Error)]
pub enum JWError {
    /// The projector does not exist over the requested ring.
    #[error("no projector on {n} strands with leading color {leading} over this ring")]
    NotExists { n: usize, leading: Color },
    /// An internal cross-check failed; this always signals a bug.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    /// An underlying ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// An underlying algebra operation failed.
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    /// An underlying quantum number computation failed.
    #[error(transparent)]
    Qnum(#[from] QnumError),
}

/// The generic Jones–Wenzl projector: coefficients in the fraction field of
/// the two-variable polynomial ring, indexed by diagrams.
#[derive(Debug, Clone, PartialEq)]
pub struct JWGeneric {
    n: usize,
    leading: Color,
    coeffs: BTreeMap<TLDiagram, RatFunc>,
}

impl JWGeneric {
    /// Strand count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Leading (leftmost-region) color.
    pub fn leading_color(&self) -> Color {
        self.leading
    }

    /// The nonzero coefficients in diagram order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&TLDiagram, &RatFunc)> {
        self.coeffs.iter()
    }

    /// The coefficient of one diagram (zero when absent).
    pub fn coeff_of(&self, d: &TLDiagram) -> RatFunc {
        self.coeffs.get(d).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Number of diagrams with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// The projector as an element of the generic algebra.
    pub fn to_element(&self) -> TLElement {
        let ctx = AlgebraContext::generic(self.n, self.leading);
        let terms = self
            .coeffs
            .iter()
            .map(|(d, f)| (d.clone(), RingValue::Frac(f.clone())));
        TLElement::from_terms(&ctx, terms).expect("generic coefficients always fit their context")
    }
}

fn jw_cache() -> &'static Mutex<HashMap<Color, Vec<Arc<JWGeneric>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Color, Vec<Arc<JWGeneric>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn next_level(prev: &JWGeneric, leading: Color) -> JWGeneric {
    let m = prev.n + 1;
    let denominator = quantum_number(m as i64, leading);
    let mut coeffs = BTreeMap::new();
    for d in TLDiagram::enumerate(m) {
        let (_, caps) = fold_and_caps(&d);
        let mut total = RatFunc::zero();
        for cap in &caps {
            let lower = prev.coeff_of(&cap.deleted);
            if lower.is_zero() {
                continue;
            }
            // Cap colors are recorded relative to an s-leading picture.
            let u = match leading {
                Color::S => cap.cap_color,
                Color::T => cap.cap_color.swap(),
            };
            let step = RatFunc::new(quantum_number(cap.position as i64, u), denominator.clone())
                .expect("quantum number denominators are nonzero");
            total = &total + &(&step * &lower);
        }
        if !total.is_zero() {
            coeffs.insert(d, total);
        }
    }
    JWGeneric {
        n: m,
        leading,
        coeffs,
    }
}

/// The generic projector on `n` strands, memoized per `(n, leading_color)`.
///
/// Level zero is the empty diagram with coefficient one; each further level
/// is computed from the previous one by the folding recursion.
pub fn jw_generic(n: usize, leading: Color) -> Arc<JWGeneric> {
    let mut cache = jw_cache().lock().expect("projector cache poisoned");
    let levels = cache.entry(leading).or_insert_with(|| {
        let mut base = BTreeMap::new();
        base.insert(TLDiagram::identity(0), RatFunc::one());
        vec![Arc::new(JWGeneric {
            n: 0,
            leading,
            coeffs: base,
        })]
    });
    while levels.len() <= n {
        let prev = levels.last().expect("level zero always present").clone();
        levels.push(Arc::new(next_level(&prev, leading)));
    }
    levels[n].clone()
}

/// The least common multiple of the reduced coefficient denominators of the
/// generic projector, normalized to a positive leading coefficient. Verifies
/// that it equals the inverse-binomial ideal generator `g_n`.
pub fn jw_denominator(n: usize, leading: Color) -> Result<BiPoly, JWError> {
    assert!(n >= 1, "jw_denominator requires n >= 1");
    let jw = jw_generic(n, leading);
    let mut lcm = BiPoly::one();
    for (_, f) in jw.coefficients() {
        let den = f.den();
        let common = lcm.gcd(den);
        lcm = (&lcm * den)
            .exact_div(&common)
            .expect("gcd divides product");
        if lcm.is_negative() {
            lcm = -lcm;
        }
    }
    let expected = inv_binom_ideal_generator(n as u64, leading)?;
    if lcm != expected {
        return Err(JWError::VerificationFailed(format!(
            "denominator lcm of the projector on {n} strands is {lcm}, expected {expected}"
        )));
    }
    Ok(lcm)
}

/// The diagram with `k` nested caps on the bottom left, `k` nested cups on
/// the top right, and through strands elsewhere. Requires `2k ≤ n`.
pub fn nested_cap_diagram(n: usize, k: usize) -> TLDiagram {
    let mut pairs = Vec::new();
    for j in 1..=k {
        pairs.push((j, 2 * k + 1 - j));
        pairs.push((n + j, n + 2 * k + 1 - j));
    }
    for b in 2 * k + 1..=n {
        pairs.push((b, 2 * n + 2 * k + 1 - b));
    }
    TLDiagram::from_pairs(n, pairs).expect("nested cap pattern is planar")
}

/// The coefficient of the nested-cap diagram in the generic projector, which
/// is exactly the inverse of the binomial `[n choose k]`. The equality is
/// asserted before returning.
///
/// The cap pattern fits only while `2k ≤ n`; beyond that the mirror pattern
/// with `n - k` caps carries the same coefficient, because the binomial is
/// symmetric in `k` and `n - k`.
pub fn nested_cap_coefficient(n: usize, k: usize, leading: Color) -> Result<RatFunc, JWError> {
    assert!(k <= n, "nested_cap_coefficient requires 0 <= k <= n");
    let d = nested_cap_diagram(n, k.min(n - k));
    let actual = jw_generic(n, leading).coeff_of(&d);
    let expected = RatFunc::new(BiPoly::one(), qbinom(n as u64, k as i64, leading))
        .expect("binomials are nonzero polynomials");
    if actual != expected {
        return Err(JWError::VerificationFailed(format!(
            "nested cap coefficient at (n={n}, k={k}) is {actual}, expected {expected}"
        )));
    }
    Ok(actual)
}

/// One entry of an existence witness: the value of a quantum binomial under
/// the specialization and whether it is invertible there.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialCheck {
    pub k: u64,
    pub value: RingValue,
    pub invertible: bool,
}

/// The outcome of an existence or rotatability decision.
#[derive(Debug, Clone, PartialEq)]
pub struct ExistenceReport {
    /// Whether the projector(s) exist over the ring.
    pub exists: bool,
    /// The binomial values backing the existence decision.
    pub witness: Option<Vec<BinomialCheck>>,
    /// Whether the pair of projectors is rotatable; absent when existence
    /// already fails or the question was not asked.
    pub rotatable: Option<bool>,
    /// The rotation scalar relating the rotated projector to its
    /// opposite-color counterpart, when rotatable.
    pub rotation_scalar: Option<RingValue>,
}

impl ExistenceReport {
    /// The report as a JSON document; ring values are rendered as text.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "exists": self.exists,
            "witness": self.witness.as_ref().map(|w| {
                w.iter()
                    .map(|c| {
                        serde_json::json!({
                            "k": c.k,
                            "value": c.value.to_string(),
                            "invertible": c.invertible,
                        })
                    })
                    .collect::<Vec<_>>()
            }),
            "rotatable": self.rotatable,
            "rotation_scalar": self.rotation_scalar.as_ref().map(|v| v.to_string()),
        })
    }
}

/// Decides existence of the projector over a specialization by testing every
/// binomial `[n choose k]` for invertibility.
pub fn existence_check(n: usize, leading: Color, sp: &Specialization) -> ExistenceReport {
    let ring = sp.ring();
    let mut witness = Vec::new();
    let mut exists = true;
    for k in 0..=n as u64 {
        let value = sp.poly(&qbinom(n as u64, k as i64, leading));
        let invertible = ring
            .is_invertible(&value)
            .expect("specialized binomial belongs to the ring");
        exists &= invertible;
        witness.push(BinomialCheck {
            k,
            value,
            invertible,
        });
    }
    ExistenceReport {
        exists,
        witness: Some(witness),
        rotatable: None,
        rotation_scalar: None,
    }
}

/// Specializes the generic projector into a concrete ring. Fails with
/// `NotExists` when the existence criterion rejects the ring.
pub fn jw_specialize(n: usize, leading: Color, sp: &Specialization) -> Result<TLElement, JWError> {
    if !existence_check(n, leading, sp).exists {
        return Err(JWError::NotExists { n, leading });
    }
    let jw = jw_generic(n, leading);
    let ctx = AlgebraContext::new(n, leading, sp.clone());
    let mut terms = Vec::new();
    for (d, f) in jw.coefficients() {
        let value = sp.frac(f).map_err(|e| {
            JWError::VerificationFailed(format!(
                "coefficient {f} failed to specialize despite existence: {e}"
            ))
        })?;
        if !value.is_zero() {
            terms.push((d.clone(), value));
        }
    }
    Ok(TLElement::from_terms(&ctx, terms)?)
}

/// Rotates an element by one strand counterclockwise: every diagram is
/// relabeled and the result is read in the opposite leading color.
fn rotate_element(e: &TLElement, sp: &Specialization) -> Result<TLElement, AlgebraError> {
    let ctx = AlgebraContext::new(
        e.context().n(),
        e.context().leading_color().swap(),
        sp.clone(),
    );
    let terms = e.terms().map(|(d, c)| (d.rotate_ccw(), c.clone()));
    TLElement::from_terms(&ctx, terms)
}

/// Compares the rotation of the `s`-leading projector against the
/// `t`-leading one. Returns the scalar `λ` with `ρ(JW(s,n)) = λ·JW(t,n)`
/// when the pair is rotatable, and `None` otherwise.
///
/// Rotatability is decided by the vanishing of the partial trace. For `n ≥ 2`
/// this is equivalent to the rotated element being proportional to the
/// opposite projector, and the equivalence is asserted; at `n = 1` the
/// proportionality alone is degenerate (a rotated single strand is again a
/// single strand, so it compares equal over every ring), which is why the
/// partial trace carries the decision.
pub fn rotation_compare(n: usize, sp: &Specialization) -> Result<Option<RingValue>, JWError> {
    let jw_s = jw_specialize(n, Color::S, sp)?;
    let jw_t = jw_specialize(n, Color::T, sp)?;
    let rotated = rotate_element(&jw_s, sp)?;
    let lambda = rotated.coeff_of(&TLDiagram::identity(n));
    let proportional = rotated == jw_t.scale(&lambda)?;
    let rotatable = if n == 0 {
        true
    } else {
        jw_s.partial_trace()?.is_zero()
    };
    if rotatable && !proportional {
        return Err(JWError::VerificationFailed(format!(
            "partial trace of the projector on {n} strands vanishes but its rotation is not \
             proportional to the opposite-color projector"
        )));
    }
    if !rotatable && proportional && n >= 2 {
        return Err(JWError::VerificationFailed(format!(
            "rotation of the projector on {n} strands is proportional to the opposite-color \
             projector although its partial trace does not vanish"
        )));
    }
    Ok(if rotatable { Some(lambda) } else { None })
}

/// Decides rotatability of the pair of projectors over a specialization.
///
/// Both projectors must exist; the decision then evaluates the reduced
/// fractions `[n+1]/[k]` for `1 ≤ k ≤ n` in the leading color (their
/// denominators are guaranteed invertible, so only numerators are tested for
/// vanishing). The result is cross-checked against the binomial-vanishing
/// form (`[n+1 choose k]` must vanish in both colors) and against the
/// diagram-level rotation comparison; any disagreement is an internal error.
pub fn rotatability_check(
    n: usize,
    leading: Color,
    sp: &Specialization,
) -> Result<ExistenceReport, JWError> {
    let ring = sp.ring();
    let report_lead = existence_check(n, leading, sp);
    let report_other = existence_check(n, leading.swap(), sp);
    let exists = report_lead.exists && report_other.exists;
    let mut report = ExistenceReport {
        exists,
        witness: report_lead.witness,
        rotatable: None,
        rotation_scalar: None,
    };
    if !exists {
        // Theorem B consistency: when existence fails, the binomial-vanishing
        // form must fail as well.
        if binomials_vanish(n, sp) {
            return Err(JWError::VerificationFailed(format!(
                "all binomials on {} strands vanish although a projector on {n} strands is \
                 missing",
                n + 1
            )));
        }
        return Ok(report);
    }
    let mut rotatable = true;
    for k in 1..=n as u64 {
        let fraction = RatFunc::new(
            quantum_number(n as i64 + 1, leading),
            quantum_number(k as i64, leading),
        )
        .expect("quantum numbers are nonzero polynomials");
        let den = sp.poly(fraction.den());
        if !ring.is_invertible(&den)? {
            return Err(JWError::VerificationFailed(format!(
                "reduced denominator of [{}]/[{k}] is not invertible although both projectors \
                 exist",
                n + 1
            )));
        }
        rotatable &= sp.poly(fraction.num()).is_zero();
    }
    if rotatable != binomials_vanish(n, sp) {
        return Err(JWError::VerificationFailed(format!(
            "fraction-vanishing and binomial-vanishing rotatability disagree on {n} strands"
        )));
    }
    let scalar = rotation_compare(n, sp)?;
    if scalar.is_some() != rotatable {
        return Err(JWError::VerificationFailed(format!(
            "diagram-level rotation comparison disagrees with the rotatability criterion on {n} \
             strands"
        )));
    }
    report.rotatable = Some(rotatable);
    report.rotation_scalar = scalar;
    Ok(report)
}

fn binomials_vanish(n: usize, sp: &Specialization) -> bool {
    [Color::S, Color::T].into_iter().all(|c| {
        (1..=n as u64).all(|k| sp.poly(&qbinom(n as u64 + 1, k as i64, c)).is_zero())
    })
}

/// Verifies the closed formula for the partial trace of the generic
/// projector and returns its scalar `-[n+1]/[n]` (in the leading color).
pub fn verify_ptr(n: usize, leading: Color) -> Result<RatFunc, JWError> {
    assert!(n >= 1, "verify_ptr requires n >= 1");
    let traced = jw_generic(n, leading).to_element().partial_trace()?;
    let scalar = -RatFunc::new(
        quantum_number(n as i64 + 1, leading),
        quantum_number(n as i64, leading),
    )
    .expect("quantum numbers are nonzero polynomials");
    let expected = jw_generic(n - 1, leading)
        .to_element()
        .scale(&RingValue::Frac(scalar.clone()))?;
    if traced != expected {
        return Err(JWError::VerificationFailed(format!(
            "partial trace of the projector on {n} strands differs from its closed form"
        )));
    }
    Ok(scalar)
}

/// The outcome of a valuation and symmetry audit of the generic projector.
#[derive(Debug, Clone, PartialEq)]
pub struct ValuationAudit {
    pub n: usize,
    pub leading: Color,
    /// Number of nonzero coefficients scanned.
    pub coefficients_checked: usize,
    /// Minimum cyclotomic valuation seen per index and color, over all
    /// coefficients, for indices `1 < k ≤ n + 1`.
    pub minimum_valuations: BTreeMap<(u64, Color), i64>,
}

/// Scans every coefficient of the generic projector, checking that each
/// cyclotomic valuation is at least `-1`, that the equality cases occur only
/// where allowed (`1 < k ≤ n`, `k` not dividing `n + 1`, and only the leading
/// color at `k = 2`), and that the coefficients are reflection-symmetric:
/// the reflection of a diagram has the color-swapped coefficient in the
/// projector whose leading color matches the strand-count parity.
pub fn valuation_audit(n: usize, leading: Color) -> Result<ValuationAudit, JWError> {
    assert!(n >= 1, "valuation_audit requires n >= 1");
    let jw = jw_generic(n, leading);
    let mut minima = BTreeMap::new();
    for (d, f) in jw.coefficients() {
        for k in 2..=(n as u64 + 1) {
            for u in [Color::S, Color::T] {
                let v = cyclo_valuation(f, k, u);
                let entry = minima.entry((k, u)).or_insert(v);
                *entry = (*entry).min(v);
                if v < -1 {
                    return Err(JWError::VerificationFailed(format!(
                        "valuation of {f} at index {k} color {u} is {v} < -1 (diagram {d})"
                    )));
                }
                if v == -1 {
                    let allowed =
                        k <= n as u64 && (n as u64 + 1) % k != 0 && (k != 2 || u == leading);
                    if !allowed {
                        return Err(JWError::VerificationFailed(format!(
                            "valuation -1 at index {k} color {u} is not allowed on {n} strands \
                             (diagram {d})"
                        )));
                    }
                }
            }
        }
    }
    // Reflection symmetry: reflecting a diagram left-to-right and swapping
    // the two colors maps the projector to the one whose leading color is
    // unchanged for odd n and swapped for even n.
    let target = if n % 2 == 1 { leading } else { leading.swap() };
    let other = jw_generic(n, target);
    for (d, f) in jw.coefficients() {
        let mirrored = other.coeff_of(&d.tau_involute()).color_swap();
        if *f != mirrored {
            return Err(JWError::VerificationFailed(format!(
                "reflection symmetry fails at {d}: {f} vs {mirrored}"
            )));
        }
    }
    Ok(ValuationAudit {
        n,
        leading,
        coefficients_checked: jw.support_size(),
        minimum_valuations: minima,
    })
}
