//! The generic Jones–Wenzl projector and the shape of its denominators.
//!
//! Over the fraction field of Z[x_s, x_t] the projector on n strands always
//! exists. This example prints small projectors, checks the two defining
//! properties directly, and relates the denominators to the lcm of the
//! two-colored binomial coefficients.

use twocolor_tl::jw::{jw_denominator, jw_generic, nested_cap_coefficient, nested_cap_diagram};
use twocolor_tl::qnum::{inv_binom_ideal_generator, qbinom};
use twocolor_tl::{AlgebraContext, BiPoly, Color, RatFunc, TLDiagram, TLElement};

fn main() {
    // The first few projectors, coefficient by coefficient.
    for n in 1..=3 {
        let jw = jw_generic(n, Color::S);
        println!("JW({n}), leading color s, {} diagrams:", jw.support_size());
        for (diagram, coeff) in jw.coefficients() {
            println!("  {coeff}  on  {diagram}");
        }
        println!();
    }

    // Defining property: coefficient 1 on the identity, and every cap
    // generator annihilates the projector from either side.
    let ctx = AlgebraContext::generic(4, Color::S);
    let element = jw_generic(4, Color::S).to_element();
    assert_eq!(element.coeff_of(&TLDiagram::identity(4)), ctx.ring().one());
    for i in 1..4 {
        let e_i = TLElement::generator(&ctx, i).unwrap();
        assert!(e_i.mul(&element).unwrap().is_zero());
        assert!(element.mul(&e_i).unwrap().is_zero());
    }
    println!("JW(4) is normalized and killed by e_1, e_2, e_3 on both sides.");

    // Idempotence follows from the defining property.
    let square = element.mul(&element).unwrap();
    assert_eq!(square, element);
    println!("JW(4)^2 = JW(4).");

    // Every coefficient can be written over one denominator: the product of
    // the cyclotomic parts indexed by 2 <= k <= n with k not dividing n + 1.
    println!();
    for n in 1..=6 {
        let denominator = jw_denominator(n, Color::S).unwrap();
        let expected = inv_binom_ideal_generator(n as u64, Color::S).unwrap();
        assert_eq!(denominator, expected);
        let factors: Vec<String> = (2..=n as u64)
            .filter(|k| (n as u64 + 1) % k != 0)
            .map(|k| format!("Theta_{k}"))
            .collect();
        let label = if factors.is_empty() {
            "empty product".to_string()
        } else {
            factors.join(" * ")
        };
        println!("common denominator of JW({n}): {label} = {denominator}");
    }

    // Nested-cap coefficients are reciprocals of two-colored binomials.
    println!();
    for k in 0..=5usize {
        let coeff = nested_cap_coefficient(5, k, Color::S).unwrap();
        let reciprocal =
            RatFunc::new(BiPoly::one(), qbinom(5, k as i64, Color::S)).unwrap();
        assert_eq!(coeff, reciprocal);
        let diagram = nested_cap_diagram(5, k.min(5 - k));
        println!("JW(5) coefficient on {diagram} is {coeff}");
    }
}
