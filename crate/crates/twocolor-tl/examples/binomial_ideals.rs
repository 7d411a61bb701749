//! Ideals generated by quantum binomials, and Bézout certificates.
//!
//! Two facts drive the existence theory of the projectors. First, the ideal
//! generated by the interior binomials `[n choose k]` (for `0 < k < n`) is
//! principal, generated by the cyclotomic part `Θ_n`. Second, the least
//! common multiple `g_n` of all the binomials at level `n` is the product of
//! the parts `Θ_k` over `k ≤ n` not dividing `n + 1` — exactly the
//! denominator the generic projector turns out to have.

use twocolor_tl::qnum::{
    binom_ideal_generator, inv_binom_ideal_generator, qbezout, quantum_number, theta_bezout,
    theta_two_color,
};
use twocolor_tl::{BiPoly, Color};

fn main() {
    println!("gcd of interior binomials (the binomial ideal generator):");
    for n in 2..=8u64 {
        let g = binom_ideal_generator(n, Color::S).unwrap();
        assert_eq!(g, theta_two_color(n, Color::S));
        println!("  gcd{{[{n} choose k]}} = theta_{n} = {g}");
    }

    println!("\nlcm of all binomials (the projector denominator g_n):");
    for n in 1..=8u64 {
        let g = inv_binom_ideal_generator(n, Color::S).unwrap();
        let factors: Vec<String> = (1..=n)
            .filter(|k| (n + 1) % k != 0)
            .map(|k| format!("theta_{k}"))
            .collect();
        let label = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(" * ")
        };
        println!("  g_{n} = {label} = {g}");
    }

    // A Bézout pair for quantum numbers: a[m] + b[n] = [gcd(m, n)].
    let (a, b) = qbezout(2, 3, Color::S);
    let combo = &(&a * &quantum_number(2, Color::S)) + &(&b * &quantum_number(3, Color::S));
    assert_eq!(combo, BiPoly::one());
    println!("\nqbezout(2, 3): ({a})·[2]_s + ({b})·[3]_s = 1");

    // Distinct cyclotomic parts at non-dividing indices are coprime, with an
    // explicit certificate.
    let (u, v) = theta_bezout(4, 5).unwrap();
    let combo = &(&u * &theta_two_color(4, Color::S)) + &(&v * &theta_two_color(5, Color::S));
    assert_eq!(combo, BiPoly::one());
    println!("theta_bezout(4, 5) certifies theta_4 and theta_5 coprime.");
    assert!(theta_bezout(2, 4).is_err());
    println!("theta_bezout(2, 4) is rejected: 2 divides 4.");
}
