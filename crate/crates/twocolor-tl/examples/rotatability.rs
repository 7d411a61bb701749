//! Deciding when a pair of specialized projectors is rotatable.
//!
//! Rotating every diagram of JW(n) one step carries the leading color to its
//! opposite; the pair is rotatable when the rotated s-projector is a scalar
//! multiple of the t-projector. The decision procedure reduces this to the
//! vanishing of explicit quantum binomials, and the rotation scalar comes out
//! of the comparison for free.

use twocolor_tl::jw::{rotatability_check, rotation_compare};
use twocolor_tl::{Color, RingDescriptor, Specialization};

fn numbers(ring: &RingDescriptor, xs: &str, xt: &str) -> Specialization {
    Specialization::new(
        ring.clone(),
        ring.parse_value(xs).unwrap(),
        ring.parse_value(xt).unwrap(),
    )
    .unwrap()
}

fn main() {
    // The flagship positive case: n = 4 over Z/5 with both circle values 2.
    let z5 = RingDescriptor::parse("Z/5").unwrap();
    let sp = numbers(&z5, "2", "2");
    let report = rotatability_check(4, Color::S, &sp).unwrap();
    assert!(report.exists);
    assert_eq!(report.rotatable, Some(true));
    let scalar = report.rotation_scalar.clone().unwrap();
    println!("n = 4 over Z/5, x_s = x_t = 2: rotatable with scalar {scalar}");

    // Generically nothing is rotatable: the binomial qbinom(n+1, k) is a
    // nonzero polynomial for 0 < k < n + 1.
    let generic = Specialization::generic();
    for n in 1..=5 {
        let report = rotatability_check(n, Color::S, &generic).unwrap();
        assert!(report.exists);
        assert_eq!(report.rotatable, Some(false));
        println!("n = {n} generically: exists, not rotatable");
    }

    // n = 0 is vacuously rotatable over any coefficients.
    let report = rotatability_check(0, Color::S, &generic).unwrap();
    assert_eq!(report.rotatable, Some(true));
    println!("n = 0: rotatable (nothing to rotate)");

    // When the projectors do not even exist, rotatability is not asked.
    let sp5 = numbers(&z5, "2", "2");
    let report = rotatability_check(5, Color::S, &sp5).unwrap();
    assert!(!report.exists);
    assert_eq!(report.rotatable, None);
    println!("n = 5 over Z/5: projector missing, rotatability undefined");

    // rotation_compare works directly with the specialized elements and
    // returns the scalar exactly when the comparison succeeds.
    println!();
    let q = RingDescriptor::parse("Q").unwrap();
    let cases: [(usize, &str, &str); 3] = [(1, "0", "0"), (2, "2", "1/2"), (2, "2", "2")];
    for (n, xs, xt) in cases {
        let sp = numbers(&q, xs, xt);
        match rotation_compare(n, &sp).unwrap() {
            Some(scalar) => println!(
                "n = {n} over Q, x_s = {xs}, x_t = {xt}: rotated JW_s = {scalar} * JW_t"
            ),
            None => println!(
                "n = {n} over Q, x_s = {xs}, x_t = {xt}: rotated JW_s is not proportional to JW_t"
            ),
        }
    }

    // The two views agree: the scalar is present exactly when the binomial
    // criterion grants rotatability.
    for n in 0..=4 {
        let sp = numbers(&z5, "2", "2");
        let report = rotatability_check(n, Color::S, &sp).unwrap();
        let direct = rotation_compare(n, &sp).unwrap();
        assert_eq!(report.rotatable, Some(direct.is_some()));
        assert_eq!(report.rotation_scalar, direct);
    }
    println!("\nbinomial criterion and direct comparison agree for n <= 4 over Z/5.");
}
