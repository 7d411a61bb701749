//! Two-colored quantum numbers.
//!
//! The numbers `[n]_s`, `[n]_t` live in `Z[x_s, x_t]` and satisfy the coupled
//! recursion `[n+1]_s = x_s·[n]_t − [n−1]_s`. This example prints a small
//! table and demonstrates the identities that make the two colors almost —
//! but not quite — interchangeable.

use twocolor_tl::qnum::{qbinom, qfactorial, quantum_number};
use twocolor_tl::Color;

fn main() {
    println!("quantum numbers [n] in both colors:");
    for n in 0..=6 {
        println!(
            "  [{n}]_s = {:<30} [{n}]_t = {}",
            quantum_number(n, Color::S).to_string(),
            quantum_number(n, Color::T)
        );
    }

    // Odd-indexed numbers are color-independent; even-indexed ones differ
    // only by the ratio of the two variables.
    let n = 7;
    assert_eq!(quantum_number(n, Color::S), quantum_number(n, Color::T));
    println!("\n[{n}] is the same in both colors (odd index).");

    let n = 6;
    let lhs = &quantum_number(n, Color::S) * &twocolor_tl::BiPoly::var_t();
    let rhs = &quantum_number(n, Color::T) * &twocolor_tl::BiPoly::var_s();
    assert_eq!(lhs, rhs);
    println!("[{n}]_s·x_t = [{n}]_t·x_s (even index cross-identity).");

    // Swapping the two variables swaps the colors.
    assert_eq!(
        quantum_number(5, Color::S).color_swap(),
        quantum_number(5, Color::T)
    );
    println!("color_swap([5]_s) = [5]_t.");

    // Negative indices follow the antisymmetry [-n] = -[n].
    assert_eq!(quantum_number(-4, Color::S), -&quantum_number(4, Color::S));
    println!("[-4]_s = -[4]_s.");

    // Factorials and binomials: the binomial is always a polynomial.
    println!("\n[4]_s! = {}", qfactorial(4, Color::S));
    for k in 0..=4 {
        println!("  [4 choose {k}]_s = {}", qbinom(4, k, Color::S));
    }
    assert_eq!(qbinom(4, 1, Color::S), qbinom(4, 3, Color::S));
    println!("binomials are symmetric: [4 choose 1] = [4 choose 3].");
}
