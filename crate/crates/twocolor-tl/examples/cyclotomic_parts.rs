//! Cyclotomic parts of quantum numbers.
//!
//! Every `[n]` factors into "cyclotomic parts" `Θ_k`, one for each divisor
//! `k > 1` of `n`: the part new at level `k` is `Ψ_k(x_s·x_t)` for `k > 2`
//! and `x_s` (or `x_t`) at `k = 2`, where `Ψ_k` is the minimal polynomial of
//! `4cos²(π/k)`. The exponent of `Θ_k` in a reduced fraction — its
//! cyclotomic valuation — is the bookkeeping device behind the projector
//! denominators.

use twocolor_tl::poly::RatFunc;
use twocolor_tl::qnum::{cyclo_valuation, psi, quantum_number, theta_two_color};
use twocolor_tl::{BiPoly, Color};

fn main() {
    println!("minimal polynomials (in y = x_s*x_t):");
    for k in 3..=8 {
        println!("  psi_{k}(y) = {}", psi(k).unwrap().to_text("y"));
    }

    println!("\ncyclotomic parts in color s:");
    for k in 1..=8u64 {
        println!("  theta_{k} = {}", theta_two_color(k, Color::S));
    }

    // The product formula: [n] is exactly the product of the parts at the
    // divisors of n (skipping the trivial divisor 1).
    println!("\nproduct formula:");
    for n in 2..=10u64 {
        let mut product = BiPoly::one();
        for d in 2..=n {
            if n % d == 0 {
                product = &product * &theta_two_color(d, Color::S);
            }
        }
        assert_eq!(product, quantum_number(n as i64, Color::S));
        let divisors: Vec<String> = (2..=n).filter(|d| n % d == 0).map(|d| format!("theta_{d}")).collect();
        println!("  [{n}]_s = {}", divisors.join(" * "));
    }

    // Valuations of a reduced fraction [6]/[4]: the shared part theta_2
    // cancels, theta_3 and theta_6 survive upstairs, theta_4 downstairs.
    let f = RatFunc::new(
        quantum_number(6, Color::S),
        quantum_number(4, Color::S),
    )
    .unwrap();
    println!("\nreduced [6]_s/[4]_s = {f}");
    for k in 2..=6u64 {
        println!("  valuation at theta_{k}: {}", cyclo_valuation(&f, k, Color::S));
    }
    assert_eq!(cyclo_valuation(&f, 2, Color::S), 0);
    assert_eq!(cyclo_valuation(&f, 3, Color::S), 1);
    assert_eq!(cyclo_valuation(&f, 4, Color::S), -1);
    assert_eq!(cyclo_valuation(&f, 6, Color::S), 1);
}
