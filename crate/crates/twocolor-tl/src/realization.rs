//! Validation of reflection-representation data over a ring: roots, coroots,
//! and a Coxeter matrix, checked against the three conditions that make the
//! associated diagrammatic category well behaved.
//!
//! The conditions are: (i) each coroot pairs to `2` against its own root;
//! (ii) the reflections define the expected braid relations, checked
//! pairwise on basis vectors; (iii) for each pair of generators with finite
//! order `m`, the two-colored quantum binomials `[m choose k]` vanish at the
//! off-diagonal pairing values. Condition (iii) is evaluated through the
//! equivalent minimal-polynomial form (`Ψ_m` at the product of the pairings,
//! or both pairings zero when `m = 2`) and cross-checked against the
//! brute-force binomial form on every call. An optional surjectivity check
//! decides, per generator, whether the coroot functional and the root's
//! coordinate functionals hit the unit ideal.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Deserialize;
use serde_json::json;
use thiserror::Error;

use crate::poly::RatPoly;
use crate::qnum::{psi, qbinom, Color, QnumError};
use crate::ring::{QuotientBase, RingDescriptor, RingError, RingValue, Specialization};

/// Errors from realization construction and validation.
#[derive(Debug, Error)]
pub enum RealizationError {
    /// A generator label was used that the realization does not declare.
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    /// Matrix shapes or Coxeter-matrix invariants are violated.
    #[error("malformed realization: {0}")]
    Shape(String),
    /// A configuration document could not be ingested.
    #[error("config error: {0}")]
    Config(String),
    /// An internal cross-check failed; this always signals a bug.
    #[error("verification failed: {0}")]
    Verification(String),
    /// An underlying ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
    /// An underlying cyclotomic computation failed.
    #[error(transparent)]
    Qnum(#[from] QnumError),
}

/// Reflection-representation data: a free module of the given rank over a
/// ring, one root (coordinate vector) and one coroot (dual-basis coordinate
/// vector) per generator, and the symmetric matrix of pairwise orders with
/// `None` standing for infinite order.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    ring: RingDescriptor,
    rank: usize,
    generators: Vec<String>,
    roots: Vec<Vec<RingValue>>,
    coroots: Vec<Vec<RingValue>>,
    coxeter: Vec<Vec<Option<u64>>>,
}

/// One pairwise braid-relation check: does `(st)^order` fix every basis
/// vector? Diagonal entries record the involution check `s² = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidCheck {
    pub s: String,
    pub t: String,
    pub order: u64,
    pub holds: bool,
}

/// One pairwise cyclotomic-vanishing check. For order `m > 2` the `value`
/// field holds `Ψ_m` evaluated at the product of the two pairings; the
/// condition at `m = 2` is that both pairings vanish, with no single value
/// to report.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclotomicCheck {
    pub s: String,
    pub t: String,
    pub order: u64,
    pub value: Option<RingValue>,
    pub holds: bool,
}

/// One per-generator surjectivity check: the coroot's values on the basis
/// and the root's coordinates must each generate the unit ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct DemazureCheck {
    pub generator: String,
    pub holds: bool,
}

/// The outcome of validating a realization. The overall verdict is the
/// conjunction of every present field; the surjectivity entries are filled
/// in only when requested.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub condition_i: bool,
    pub condition_ii: Vec<BraidCheck>,
    pub condition_iii: Vec<CyclotomicCheck>,
    pub demazure: Option<Vec<DemazureCheck>>,
}

impl ValidationReport {
    /// Conjunction of every check present in the report.
    pub fn pass(&self) -> bool {
        self.condition_i
            && self.condition_ii.iter().all(|c| c.holds)
            && self.condition_iii.iter().all(|c| c.holds)
            && self
                .demazure
                .as_ref()
                .is_none_or(|d| d.iter().all(|c| c.holds))
    }

    /// The report as a JSON document with per-condition entries and the
    /// overall verdict.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii.iter().map(|c| json!({
                "s": c.s, "t": c.t, "order": c.order, "holds": c.holds,
            })).collect::<Vec<_>>(),
            "condition_iii": self.condition_iii.iter().map(|c| json!({
                "s": c.s, "t": c.t, "order": c.order,
                "value": c.value.as_ref().map(|v| v.to_string()),
                "holds": c.holds,
            })).collect::<Vec<_>>(),
            "demazure": self.demazure.as_ref().map(|d| d.iter().map(|c| json!({
                "generator": c.generator, "holds": c.holds,
            })).collect::<Vec<_>>()),
            "pass": self.pass(),
        })
    }
}

#[derive(Deserialize)]
struct RawConfig {
    ring: String,
    rank: usize,
    generators: Vec<String>,
    roots: BTreeMap<String, Vec<serde_json::Value>>,
    coroots: BTreeMap<String, Vec<serde_json::Value>>,
    coxeter: Vec<Vec<Option<u64>>>,
}

fn parse_entry(ring: &RingDescriptor, v: &serde_json::Value) -> Result<RingValue, RealizationError> {
    match v {
        serde_json::Value::Number(n) => Ok(ring.parse_value(&n.to_string())?),
        serde_json::Value::String(s) => Ok(ring.parse_value(s)?),
        other => Err(RealizationError::Config(format!(
            "expected a number or string entry, got {other}"
        ))),
    }
}

impl Realization {
    /// Builds a realization after checking the shape invariants: distinct
    /// generators, one root and one coroot of the right length per
    /// generator with entries in the ring, and a symmetric Coxeter matrix
    /// with `1` on the diagonal and entries at least `2` (or `None` for
    /// infinite order) elsewhere.
    pub fn new(
        ring: RingDescriptor,
        rank: usize,
        generators: Vec<String>,
        roots: Vec<Vec<RingValue>>,
        coroots: Vec<Vec<RingValue>>,
        coxeter: Vec<Vec<Option<u64>>>,
    ) -> Result<Realization, RealizationError> {
        let count = generators.len();
        let labels: BTreeSet<&String> = generators.iter().collect();
        if labels.len() != count {
            return Err(RealizationError::Shape(
                "generator labels must be distinct".into(),
            ));
        }
        for (name, vectors) in [("roots", &roots), ("coroots", &coroots)] {
            if vectors.len() != count {
                return Err(RealizationError::Shape(format!(
                    "expected {count} {name}, got {}",
                    vectors.len()
                )));
            }
            for (g, vec) in generators.iter().zip(vectors.iter()) {
                if vec.len() != rank {
                    return Err(RealizationError::Shape(format!(
                        "{name} entry for {g:?} has length {}, expected {rank}",
                        vec.len()
                    )));
                }
                for v in vec {
                    ring.expect_member(v)?;
                }
            }
        }
        if coxeter.len() != count || coxeter.iter().any(|row| row.len() != count) {
            return Err(RealizationError::Shape(format!(
                "coxeter matrix must be {count}x{count}"
            )));
        }
        for i in 0..count {
            if coxeter[i][i] != Some(1) {
                return Err(RealizationError::Shape(format!(
                    "coxeter diagonal entry for {:?} must be 1",
                    generators[i]
                )));
            }
            for j in 0..count {
                if coxeter[i][j] != coxeter[j][i] {
                    return Err(RealizationError::Shape(
                        "coxeter matrix must be symmetric".into(),
                    ));
                }
                if i != j && coxeter[i][j].is_some_and(|m| m < 2) {
                    return Err(RealizationError::Shape(format!(
                        "off-diagonal coxeter entry for ({:?}, {:?}) must be at least 2",
                        generators[i], generators[j]
                    )));
                }
            }
        }
        Ok(Realization {
            ring,
            rank,
            generators,
            roots,
            coroots,
            coxeter,
        })
    }

    /// Ingests the JSON configuration schema: ring text, rank, generator
    /// list, root/coroot maps keyed by generator, and the Coxeter matrix
    /// with `null` for infinite order.
    pub fn from_json(text: &str) -> Result<Realization, RealizationError> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| RealizationError::Config(e.to_string()))?;
        let ring = RingDescriptor::parse(&raw.ring)?;
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for (name, map, out) in [
            ("roots", &raw.roots, &mut roots),
            ("coroots", &raw.coroots, &mut coroots),
        ] {
            let keys: BTreeSet<&String> = map.keys().collect();
            let expected: BTreeSet<&String> = raw.generators.iter().collect();
            if keys != expected {
                return Err(RealizationError::Config(format!(
                    "{name} must have exactly one entry per generator"
                )));
            }
            for g in &raw.generators {
                let entries = &map[g];
                let vec: Result<Vec<_>, _> =
                    entries.iter().map(|v| parse_entry(&ring, v)).collect();
                out.push(vec?);
            }
        }
        Realization::new(ring, raw.rank, raw.generators, roots, coroots, raw.coxeter)
    }

    /// The coefficient ring.
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// The rank of the underlying free module.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The generator labels, in declaration order.
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// The order of the product of two generators (`None` = infinite).
    pub fn coxeter_order(&self, s: &str, t: &str) -> Result<Option<u64>, RealizationError> {
        Ok(self.coxeter[self.index_of(s)?][self.index_of(t)?])
    }

    fn index_of(&self, label: &str) -> Result<usize, RealizationError> {
        self.generators
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| RealizationError::UnknownGenerator(label.to_string()))
    }

    fn pairing_by_index(&self, s: usize, t: usize) -> Result<RingValue, RingError> {
        let mut acc = self.ring.zero();
        for (c, r) in self.coroots[s].iter().zip(self.roots[t].iter()) {
            acc = self.ring.add(&acc, &self.ring.mul(c, r)?)?;
        }
        Ok(acc)
    }

    /// The dual-basis contraction `⟨coroot(s), root(t)⟩`.
    pub fn pairing(&self, s: &str, t: &str) -> Result<RingValue, RealizationError> {
        Ok(self.pairing_by_index(self.index_of(s)?, self.index_of(t)?)?)
    }

    fn reflect_index(&self, s: usize, beta: &[RingValue]) -> Result<Vec<RingValue>, RingError> {
        let mut scalar = self.ring.zero();
        for (c, b) in self.coroots[s].iter().zip(beta.iter()) {
            scalar = self.ring.add(&scalar, &self.ring.mul(c, b)?)?;
        }
        let mut out = Vec::with_capacity(self.rank);
        for (b, r) in beta.iter().zip(self.roots[s].iter()) {
            out.push(self.ring.sub(b, &self.ring.mul(&scalar, r)?)?);
        }
        Ok(out)
    }

    /// The reflection `s(β) = β − ⟨coroot(s), β⟩ · root(s)`, computed in
    /// coordinates.
    pub fn reflection_action(
        &self,
        s: &str,
        beta: &[RingValue],
    ) -> Result<Vec<RingValue>, RealizationError> {
        if beta.len() != self.rank {
            return Err(RealizationError::Shape(format!(
                "vector has length {}, expected {}",
                beta.len(),
                self.rank
            )));
        }
        for v in beta {
            self.ring.expect_member(v)?;
        }
        Ok(self.reflect_index(self.index_of(s)?, beta)?)
    }

    fn basis_vector(&self, i: usize) -> Vec<RingValue> {
        (0..self.rank)
            .map(|j| if j == i { self.ring.one() } else { self.ring.zero() })
            .collect()
    }

    /// Runs the three validation conditions. Surjectivity is not included;
    /// see [`Realization::demazure_check`].
    pub fn validate(&self) -> Result<ValidationReport, RealizationError> {
        let two = self.ring.from_int(2);
        let mut condition_i = true;
        for s in 0..self.generators.len() {
            condition_i &= self.pairing_by_index(s, s)? == two;
        }

        let mut condition_ii = Vec::new();
        for s in 0..self.generators.len() {
            for t in s..self.generators.len() {
                let Some(order) = self.coxeter[s][t] else {
                    continue;
                };
                let mut holds = true;
                for i in 0..self.rank {
                    let start = self.basis_vector(i);
                    let mut beta = start.clone();
                    for _ in 0..order {
                        beta = self.reflect_index(t, &beta)?;
                        beta = self.reflect_index(s, &beta)?;
                    }
                    holds &= beta == start;
                }
                condition_ii.push(BraidCheck {
                    s: self.generators[s].clone(),
                    t: self.generators[t].clone(),
                    order,
                    holds,
                });
            }
        }

        let mut condition_iii = Vec::new();
        for s in 0..self.generators.len() {
            for t in s + 1..self.generators.len() {
                let Some(order) = self.coxeter[s][t] else {
                    continue;
                };
                let a = self.pairing_by_index(s, t)?;
                let b = self.pairing_by_index(t, s)?;
                let (holds, value) = cyclotomic_condition(&self.ring, &a, &b, order)?;
                condition_iii.push(CyclotomicCheck {
                    s: self.generators[s].clone(),
                    t: self.generators[t].clone(),
                    order,
                    value,
                    holds,
                });
            }
        }

        Ok(ValidationReport {
            condition_i,
            condition_ii,
            condition_iii,
            demazure: None,
        })
    }

    /// Per-generator surjectivity: the ideal generated by the coroot's
    /// coordinates and the ideal generated by the root's coordinates must
    /// both be the unit ideal.
    pub fn demazure_check(&self) -> Result<Vec<DemazureCheck>, RealizationError> {
        let mut out = Vec::new();
        for i in 0..self.generators.len() {
            let holds = unit_ideal(&self.ring, &self.coroots[i])?
                && unit_ideal(&self.ring, &self.roots[i])?;
            out.push(DemazureCheck {
                generator: self.generators[i].clone(),
                holds,
            });
        }
        Ok(out)
    }
}

/// Decides the cyclotomic vanishing condition for one pair of pairing
/// values with finite order `m ≥ 2`: `Ψ_m(a·b) = 0` when `m > 2`, and
/// `a = b = 0` when `m = 2`. Returns the verdict together with the
/// evaluated value (absent at `m = 2`). Every call cross-checks the
/// equivalent brute-force form — vanishing of all binomials `[m choose k]`
/// in both colors at `(a, b)` — and reports disagreement as an error.
pub fn cyclotomic_condition(
    ring: &RingDescriptor,
    a: &RingValue,
    b: &RingValue,
    m: u64,
) -> Result<(bool, Option<RingValue>), RealizationError> {
    assert!(m >= 2, "cyclotomic_condition requires a finite order >= 2");
    let (holds, value) = if m == 2 {
        (a.is_zero() && b.is_zero(), None)
    } else {
        let product = ring.mul(a, b)?;
        let evaluated = ring.eval_unipoly(&psi(m)?, &product)?;
        (evaluated.is_zero(), Some(evaluated))
    };
    let sp = Specialization::new(ring.clone(), a.clone(), b.clone())?;
    let brute = [Color::S, Color::T]
        .into_iter()
        .all(|c| (1..m).all(|k| sp.poly(&qbinom(m, k as i64, c)).is_zero()));
    if brute != holds {
        return Err(RealizationError::Verification(format!(
            "minimal-polynomial and binomial forms disagree at order {m} on ({a}, {b})"
        )));
    }
    Ok((holds, value))
}

/// Decides whether the values generate the unit ideal of the ring.
fn unit_ideal(ring: &RingDescriptor, values: &[RingValue]) -> Result<bool, RealizationError> {
    for v in values {
        ring.expect_member(v)?;
    }
    match ring {
        RingDescriptor::Integers => {
            let mut g = BigInt::zero();
            for v in values {
                let RingValue::Int(n) = v else { unreachable!() };
                g = g.gcd(n);
            }
            Ok(g == BigInt::one())
        }
        RingDescriptor::Rationals | RingDescriptor::GenericBivariateFractionField => {
            Ok(values.iter().any(|v| !v.is_zero()))
        }
        RingDescriptor::IntegersMod(m) => {
            let mut g = m.clone();
            for v in values {
                let RingValue::Residue(n) = v else {
                    unreachable!()
                };
                g = g.gcd(n);
            }
            Ok(g == BigInt::one())
        }
        RingDescriptor::UnivariateQuotient {
            base: QuotientBase::Rationals,
            modulus,
        } => {
            let mut g = RatPoly::from_unipoly(modulus);
            for v in values {
                let RingValue::PolyResidue(p) = v else {
                    unreachable!()
                };
                g = g.xgcd(p).0;
            }
            Ok(g.degree() == Some(0))
        }
        RingDescriptor::UnivariateQuotient {
            base: QuotientBase::Integers,
            modulus,
        } => {
            // The ideal, viewed as a lattice in the free module with basis
            // 1, y, ..., y^(d-1), is spanned over the integers by the
            // shifts value·y^j mod f; it is the unit ideal exactly when
            // that lattice is everything.
            let dim = modulus.degree().expect("modulus is nonconstant");
            let f = RatPoly::from_unipoly(modulus);
            let mut rows = Vec::new();
            for v in values {
                let RingValue::PolyResidue(p) = v else {
                    unreachable!()
                };
                let mut shifted = p.clone();
                for _ in 0..dim {
                    let q = shifted
                        .to_unipoly()
                        .expect("shifts of integral values stay integral");
                    let mut coords: Vec<BigInt> = q.coeffs().to_vec();
                    coords.resize(dim, BigInt::zero());
                    rows.push(coords);
                    shifted = (&shifted * &RatPoly::var()).rem(&f);
                }
            }
            Ok(lattice_is_full(dim, rows))
        }
    }
}

/// Whether integer row vectors span all of the lattice `Z^dim`, decided by
/// Euclidean row reduction to echelon form: the span is full exactly when
/// every column gets a pivot of absolute value one.
fn lattice_is_full(dim: usize, mut rows: Vec<Vec<BigInt>>) -> bool {
    let mut r = 0;
    for col in 0..dim {
        loop {
            let mut pivot: Option<usize> = None;
            for i in r..rows.len() {
                if !rows[i][col].is_zero()
                    && pivot.is_none_or(|p: usize| rows[i][col].magnitude() < rows[p][col].magnitude())
                {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else {
                return false;
            };
            rows.swap(r, p);
            let mut settled = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = &rows[i][col] / &rows[r][col];
                if !q.is_zero() {
                    for j in col..dim {
                        let t = &rows[r][j] * &q;
                        rows[i][j] -= t;
                    }
                }
                if !rows[i][col].is_zero() {
                    settled = false;
                }
            }
            if settled {
                break;
            }
        }
        if rows[r][col].magnitude() != BigInt::one().magnitude() {
            return false;
        }
        r += 1;
    }
    true
}

fn rank_two(ring: RingDescriptor, pairing_st: &str, pairing_ts: &str, order: u64) -> Realization {
    let value = |t: &str| ring.parse_value(t).expect("builder literals are valid");
    Realization::new(
        ring.clone(),
        2,
        vec!["s".into(), "t".into()],
        vec![
            vec![ring.one(), ring.zero()],
            vec![ring.zero(), ring.one()],
        ],
        vec![
            vec![ring.from_int(2), value(pairing_st)],
            vec![value(pairing_ts), ring.from_int(2)],
        ],
        vec![vec![Some(1), Some(order)], vec![Some(order), Some(1)]],
    )
    .expect("standard data is well formed")
}

/// The rank-two type `A` datum over the integers: pairings `(-1, -1)`,
/// order 3.
pub fn standard_a2() -> Realization {
    rank_two(RingDescriptor::Integers, "-1", "-1", 3)
}

/// The rank-two type `B` datum over the integers: pairings `(-1, -2)`,
/// order 4.
pub fn standard_b2() -> Realization {
    rank_two(RingDescriptor::Integers, "-1", "-2", 4)
}

/// The rank-two type `G` datum over the integers: pairings `(-1, -3)`,
/// order 6.
pub fn standard_g2() -> Realization {
    rank_two(RingDescriptor::Integers, "-1", "-3", 6)
}

/// The reducible rank-two datum over the integers: both pairings zero,
/// order 2.
pub fn standard_a1xa1() -> Realization {
    rank_two(RingDescriptor::Integers, "0", "0", 2)
}

/// The rank-two pentagonal datum over `Z[y]/(y² − y − 1)`: pairings
/// `(-y, -y)`, order 5.
pub fn standard_h2_5() -> Realization {
    let ring = RingDescriptor::parse("Z[y]/(y^2-y-1)").expect("golden-ratio ring parses");
    rank_two(ring, "-y", "-y", 5)
}

/// A deliberately broken order-3 datum over the integers with pairings
/// `(-2, -1)`: the cyclotomic condition fails because `Ψ_3(2) = 1`.
pub fn broken_a2() -> Realization {
    rank_two(RingDescriptor::Integers, "-2", "-1", 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings_match_the_cartan_data() {
        let a2 = standard_a2();
        assert_eq!(a2.pairing("s", "s").unwrap(), RingValue::Int(2.into()));
        assert_eq!(a2.pairing("s", "t").unwrap(), RingValue::Int((-1).into()));
        let b2 = standard_b2();
        assert_eq!(b2.pairing("s", "t").unwrap(), RingValue::Int((-1).into()));
        assert_eq!(b2.pairing("t", "s").unwrap(), RingValue::Int((-2).into()));
        assert!(matches!(
            a2.pairing("s", "u"),
            Err(RealizationError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn reflections_are_involutions() {
        let a2 = standard_a2();
        let alpha_s = vec![RingValue::Int(1.into()), RingValue::Int(0.into())];
        let reflected = a2.reflection_action("s", &alpha_s).unwrap();
        assert_eq!(reflected, vec![RingValue::Int((-1).into()), RingValue::Int(0.into())]);
        for re in [standard_a2(), standard_b2(), standard_g2(), standard_h2_5()] {
            for g in re.generators().to_vec() {
                for i in 0..re.rank() {
                    let beta = re.basis_vector(i);
                    let twice = re
                        .reflection_action(&g, &re.reflection_action(&g, &beta).unwrap())
                        .unwrap();
                    assert_eq!(twice, beta);
                }
            }
        }
    }

    #[test]
    fn product_of_reflections_has_the_right_order() {
        let a2 = standard_a2();
        let alpha_s = vec![RingValue::Int(1.into()), RingValue::Int(0.into())];
        let mut beta = alpha_s.clone();
        for _ in 0..3 {
            beta = a2.reflection_action("t", &beta).unwrap();
            beta = a2.reflection_action("s", &beta).unwrap();
        }
        assert_eq!(beta, alpha_s);
    }

    #[test]
    fn standard_data_validates() {
        for re in [
            standard_a2(),
            standard_b2(),
            standard_g2(),
            standard_a1xa1(),
            standard_h2_5(),
        ] {
            let report = re.validate().unwrap();
            assert!(report.condition_i);
            assert!(report.condition_ii.iter().all(|c| c.holds));
            assert!(report.condition_iii.iter().all(|c| c.holds));
            assert!(report.pass());
        }
    }

    #[test]
    fn cyclotomic_values_are_reported() {
        let report = standard_g2().validate().unwrap();
        assert_eq!(report.condition_iii.len(), 1);
        let check = &report.condition_iii[0];
        assert_eq!(check.order, 6);
        assert_eq!(check.value, Some(RingValue::Int(0.into())));

        let report = standard_a1xa1().validate().unwrap();
        assert_eq!(report.condition_iii[0].value, None);
        assert!(report.condition_iii[0].holds);
    }

    #[test]
    fn broken_datum_fails_the_cyclotomic_condition() {
        let report = broken_a2().validate().unwrap();
        assert!(report.condition_i);
        assert_eq!(report.condition_iii.len(), 1);
        assert!(!report.condition_iii[0].holds);
        assert_eq!(report.condition_iii[0].value, Some(RingValue::Int(1.into())));
        assert!(!report.pass());
        // The product of reflections has order 4 here, so the pairwise braid
        // check fails as well.
        let st = report
            .condition_ii
            .iter()
            .find(|c| c.s != c.t)
            .unwrap();
        assert!(!st.holds);
    }

    #[test]
    fn demazure_checks() {
        let a2 = standard_a2();
        assert!(a2.demazure_check().unwrap().iter().all(|c| c.holds));

        // The type-B coroot (-2, 2) only hits the even integers.
        let b2 = standard_b2();
        let checks = b2.demazure_check().unwrap();
        assert!(checks[0].holds);
        assert!(!checks[1].holds);

        // In the golden-ratio ring the generator y is a unit, so even the
        // lattice path reports the unit ideal.
        let h2 = standard_h2_5();
        assert!(h2.demazure_check().unwrap().iter().all(|c| c.holds));

        let ring = RingDescriptor::Integers;
        let even = Realization::new(
            ring.clone(),
            2,
            vec!["s".into()],
            vec![vec![ring.one(), ring.zero()]],
            vec![vec![ring.from_int(2), ring.from_int(4)]],
            vec![vec![Some(1)]],
        )
        .unwrap();
        assert!(!even.demazure_check().unwrap()[0].holds);
    }

    #[test]
    fn unit_ideal_over_quotients() {
        let ring = RingDescriptor::parse("Z[y]/(y^2-y-1)").unwrap();
        let y = ring.parse_value("y").unwrap();
        assert!(unit_ideal(&ring, &[y]).unwrap());
        let two = ring.parse_value("2").unwrap();
        assert!(!unit_ideal(&ring, std::slice::from_ref(&two)).unwrap());
        let odd = ring.parse_value("3").unwrap();
        assert!(unit_ideal(&ring, &[two, odd]).unwrap());

        let qring = RingDescriptor::parse("Q[y]/(y^2-1)").unwrap();
        let v = qring.parse_value("y-1").unwrap();
        assert!(!unit_ideal(&qring, std::slice::from_ref(&v)).unwrap());
        let w = qring.parse_value("y+1").unwrap();
        assert!(unit_ideal(&qring, &[v, w]).unwrap());
    }

    #[test]
    fn config_round_trip() {
        let text = r#"{
            "ring": "Z[y]/(y^2-y-1)",
            "rank": 2,
            "generators": ["s", "t"],
            "roots": {"s": [1, 0], "t": [0, 1]},
            "coroots": {"s": [2, "-y"], "t": ["-y", 2]},
            "coxeter": [[1, 5], [5, 1]]
        }"#;
        let re = Realization::from_json(text).unwrap();
        assert_eq!(re, standard_h2_5());
        assert_eq!(re.coxeter_order("s", "t").unwrap(), Some(5));
    }

    #[test]
    fn config_errors() {
        let bad_ring = r#"{"ring": "Z/abc", "rank": 1, "generators": ["s"],
            "roots": {"s": [1]}, "coroots": {"s": [2]}, "coxeter": [[1]]}"#;
        assert!(matches!(
            Realization::from_json(bad_ring),
            Err(RealizationError::Ring(_))
        ));

        let missing = r#"{"ring": "Z", "rank": 1, "generators": ["s", "t"],
            "roots": {"s": [1]}, "coroots": {"s": [2]}, "coxeter": [[1,2],[2,1]]}"#;
        assert!(matches!(
            Realization::from_json(missing),
            Err(RealizationError::Config(_))
        ));

        let asymmetric = r#"{"ring": "Z", "rank": 2, "generators": ["s", "t"],
            "roots": {"s": [1, 0], "t": [0, 1]},
            "coroots": {"s": [2, -1], "t": [-1, 2]},
            "coxeter": [[1, 3], [4, 1]]}"#;
        assert!(matches!(
            Realization::from_json(asymmetric),
            Err(RealizationError::Shape(_))
        ));

        let short = r#"{"ring": "Z", "rank": 2, "generators": ["s"],
            "roots": {"s": [1]}, "coroots": {"s": [2, 0]}, "coxeter": [[1]]}"#;
        assert!(matches!(
            Realization::from_json(short),
            Err(RealizationError::Shape(_))
        ));
    }

    #[test]
    fn infinite_order_imposes_no_cyclotomic_condition() {
        let ring = RingDescriptor::Integers;
        let re = Realization::new(
            ring.clone(),
            2,
            vec!["s".into(), "t".into()],
            vec![
                vec![ring.one(), ring.zero()],
                vec![ring.zero(), ring.one()],
            ],
            vec![
                vec![ring.from_int(2), ring.from_int(-2)],
                vec![ring.from_int(-2), ring.from_int(2)],
            ],
            vec![vec![Some(1), None], vec![None, Some(1)]],
        )
        .unwrap();
        let report = re.validate().unwrap();
        assert!(report.condition_iii.is_empty());
        // Only the two involution checks appear.
        assert_eq!(report.condition_ii.len(), 2);
        assert!(report.pass());
    }

    #[test]
    fn minimal_polynomial_form_matches_binomial_form_on_random_values() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(20260816);
        for p in [3i64, 5, 7] {
            let ring = RingDescriptor::integers_mod(p).unwrap();
            for _ in 0..40 {
                let a = ring.from_int(rng.random_range(0..p));
                let b = ring.from_int(rng.random_range(0..p));
                let m = rng.random_range(2u64..=8);
                // The call cross-checks the two forms internally.
                cyclotomic_condition(&ring, &a, &b, m).unwrap();
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let mut report = broken_a2().validate().unwrap();
        report.demazure = Some(broken_a2().demazure_check().unwrap());
        let doc = report.to_json();
        assert_eq!(doc["condition_i"], json!(true));
        assert_eq!(doc["pass"], json!(false));
        assert_eq!(doc["condition_iii"][0]["value"], json!("1"));
        assert!(doc["demazure"].is_array());
    }
}
