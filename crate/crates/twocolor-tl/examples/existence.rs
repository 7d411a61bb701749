//! Deciding when a specialized Jones–Wenzl projector exists.
//!
//! The projector on n strands exists over a specialization exactly when all
//! two-colored binomial coefficients qbinom(n, k) map to units. This example
//! runs the decision procedure over a few rings, specializes a projector
//! where the answer is yes, and cross-checks the decision against a direct
//! linear-algebra search for the annihilated idempotent.

use twocolor_tl::algebra::annihilator_solve;
use twocolor_tl::jw::{existence_check, jw_specialize, JWError};
use twocolor_tl::{AlgebraContext, Color, RingDescriptor, Specialization, TLDiagram};

fn main() {
    // Over Z/5 with both circle values 2, projectors exist up to n = 4 and
    // stop existing at n = 5.
    let ring = RingDescriptor::parse("Z/5").unwrap();
    let two = ring.from_int(2);
    let sp = Specialization::new(ring, two.clone(), two).unwrap();
    for n in 0..=6 {
        let report = existence_check(n, Color::S, &sp);
        let verdict = if report.exists { "exists" } else { "does not exist" };
        println!("JW({n}) over Z/5 with x_s = x_t = 2: {verdict}");
        if !report.exists {
            let witness = report.witness.as_ref().unwrap();
            let bad = witness.iter().find(|w| !w.invertible).unwrap();
            println!("  first obstruction: qbinom({n}, {}) = {}", bad.k, bad.value);
        }
    }

    // A successful specialization: JW(3) over Q with x_s = x_t = 2.
    println!();
    let ring = RingDescriptor::parse("Q").unwrap();
    let sp_q = Specialization::new(
        ring.clone(),
        ring.parse_value("2").unwrap(),
        ring.parse_value("2").unwrap(),
    )
    .unwrap();
    let jw3 = jw_specialize(3, Color::S, &sp_q).unwrap();
    println!("JW(3) over Q with x_s = x_t = 2:");
    for (diagram, coeff) in jw3.terms() {
        println!("  {coeff}  on  {diagram}");
    }
    assert_eq!(jw3.coeff_of(&TLDiagram::identity(3)), sp_q.ring().one());
    assert_eq!(jw3.mul(&jw3).unwrap(), jw3);

    // A failed specialization reports which binomial broke.
    println!();
    let ring = RingDescriptor::parse("Z/5").unwrap();
    let two = ring.from_int(2);
    let sp5 = Specialization::new(ring, two.clone(), two).unwrap();
    match jw_specialize(5, Color::S, &sp5) {
        Err(JWError::NotExists { n, leading }) => {
            println!("JW({n}) with leading color {leading} does not specialize to Z/5.")
        }
        other => panic!("expected a non-existence error, got {other:?}"),
    }

    // Independent confirmation: a field-coefficient linear solver looks for
    // an element with identity coefficient 1 killed by all cap generators.
    // It finds one exactly when the binomial criterion says yes.
    println!();
    for n in 0..=6 {
        let ctx = AlgebraContext::new(n, Color::S, sp5.clone());
        let solver = annihilator_solve(&ctx).unwrap();
        let report = existence_check(n, Color::S, &sp5);
        assert_eq!(solver.is_some(), report.exists);
        println!(
            "n = {n}: binomial criterion {}, solver {}",
            if report.exists { "yes" } else { "no " },
            if solver.is_some() { "found it" } else { "found nothing" },
        );
        if let Some(found) = solver {
            assert_eq!(found, jw_specialize(n, Color::S, &sp5).unwrap());
        }
    }
}
