//! Validating rank-two realization data.
//!
//! A realization packages roots, coroots, and a Coxeter matrix over a base
//! ring. Validation checks three conditions: each generator pairs to 2 with
//! itself, the reflection representation satisfies the braid relations, and
//! the product of the two pairings kills the minimal polynomial attached to
//! the finite Coxeter order. A separate check asks whether each generator's
//! Demazure operator can be surjective (a unit-ideal condition).

use twocolor_tl::realization::{
    broken_a2, standard_a1xa1, standard_a2, standard_b2, standard_g2, standard_h2_5, Realization,
};

fn main() {
    // The classical crystallographic rank-two data all validate.
    let named: [(&str, Realization); 4] = [
        ("A2", standard_a2()),
        ("B2", standard_b2()),
        ("G2", standard_g2()),
        ("A1 x A1", standard_a1xa1()),
    ];
    for (name, realization) in &named {
        let report = realization.validate().unwrap();
        assert!(report.pass());
        println!(
            "{name} over {}: pass (pairings {} and {})",
            realization.ring(),
            realization.pairing("s", "t").unwrap(),
            realization.pairing("t", "s").unwrap(),
        );
    }

    // Order 5 needs the golden ratio, so the base ring is Z[y]/(y^2 - y - 1).
    let h2 = standard_h2_5();
    let report = h2.validate().unwrap();
    assert!(report.pass());
    println!("H2(5) over {}: pass", h2.ring());

    // The braid condition in action: applying the A2 reflections s, t three
    // times each brings every basis vector back.
    let a2 = standard_a2();
    let alpha_s = vec![a2.ring().one(), a2.ring().zero()];
    let mut v = alpha_s.clone();
    for _ in 0..3 {
        v = a2.reflection_action("t", &v).unwrap();
        v = a2.reflection_action("s", &v).unwrap();
    }
    assert_eq!(v, alpha_s);
    println!("\nA2: (s t)^3 fixes alpha_s.");

    // Deliberately wrong data: A2 Coxeter matrix with B2-style pairings.
    // Condition iii evaluates a nonzero minimal-polynomial value and fails.
    let broken = broken_a2();
    let report = broken.validate().unwrap();
    assert!(!report.pass());
    let cyclo = &report.condition_iii[0];
    println!(
        "\nbroken A2: cyclotomic check for order {} evaluates to {}, fails",
        cyclo.order,
        cyclo.value.clone().unwrap(),
    );

    // Demazure surjectivity is a separate, finer question: B2 passes the
    // realization conditions but one coroot spans only an index-two ideal.
    println!();
    for (name, realization) in [("A2", standard_a2()), ("B2", standard_b2())] {
        for check in realization.demazure_check().unwrap() {
            println!(
                "{name}: Demazure operator for {} {}",
                check.generator,
                if check.holds { "can be surjective" } else { "is never surjective" },
            );
        }
    }

    // Realizations round-trip through a JSON config format.
    let config = r#"{
        "ring": "Z[y]/(y^2-y-1)",
        "rank": 2,
        "generators": ["s", "t"],
        "roots": {"s": [1, 0], "t": [0, 1]},
        "coroots": {"s": [2, "-y"], "t": ["-y", 2]},
        "coxeter": [[1, 5], [5, 1]]
    }"#;
    let parsed = Realization::from_json(config).unwrap();
    assert_eq!(parsed, standard_h2_5());
    assert!(parsed.validate().unwrap().pass());
    println!("\nJSON config for H2(5) parses and validates.");
}
