//! Planar diagram calculus on n strands.
//!
//! A diagram is a noncrossing perfect matching of 2n boundary points,
//! labeled circularly: bottom 1..n left to right, then top n+1..2n right to
//! left. Stacking two diagrams may close loops; each closed loop records the
//! color of the region it floats in, which is what the algebra layer turns
//! into a scalar factor.

use twocolor_tl::diagram::{compose, fold_and_caps};
use twocolor_tl::TLDiagram;

fn main() {
    // Catalan growth of the diagram basis.
    for n in 0..=6 {
        println!("diagrams on {n} strands: {}", TLDiagram::enumerate(n).len());
    }

    // The generators e_1, e_2 on three strands, printed as matchings.
    let e1 = TLDiagram::generator(1, 3).unwrap();
    let e2 = TLDiagram::generator(2, 3).unwrap();
    println!("\ne_1 = {e1}");
    println!("e_2 = {e2}");

    // Composition: e_1 then e_1 again closes one loop.
    let (square, loops) = compose(&e1, &e1).unwrap();
    println!("\ne_1 ∘ e_1 = {square} with {} loop(s)", loops.len());
    println!("  loop ambient color: {}", loops[0].ambient_color);

    // The braid-like relation e_1 e_2 e_1 = e_1 holds with no loops at all.
    let (partial, loops) = compose(&e2, &e1).unwrap();
    assert!(loops.is_empty());
    let (braid, loops) = compose(&e1, &partial).unwrap();
    assert!(loops.is_empty());
    assert_eq!(braid, e1);
    println!("e_1 e_2 e_1 = e_1 (no loops closed).");

    // Rotation relabels the boundary circularly; one full turn is trivial.
    let mut d = e1.clone();
    for _ in 0..6 {
        d = d.rotate_ccw();
    }
    assert_eq!(d, e1);
    assert_eq!(e1.rotate_ccw(), e2);
    println!("\nrotate_ccw(e_1) = e_2; six rotations return to e_1.");

    // Reflection (left-right) exchanges e_1 and e_2 as well.
    assert_eq!(e1.tau_involute(), e2);
    println!("tau(e_1) = e_2.");

    // Partial trace closes the rightmost strand around the right side.
    let (traced, closed) = e2.partial_trace();
    assert!(closed.is_none());
    println!("\npartial trace of e_2 lands on 2 strands: {traced}");
    let (_, closed) = TLDiagram::identity(1).partial_trace();
    println!(
        "partial trace of the single strand closes a loop in color {}",
        closed.unwrap().ambient_color
    );

    // Folding exposes the bottom caps of a diagram — the raw material of the
    // projector recursion.
    let (folded, caps) = fold_and_caps(&e1);
    println!(
        "\nfolding e_1 gives a half-diagram with {} bottom and {} top points",
        folded.bottom, folded.top
    );
    for cap in caps {
        println!(
            "  cap at position {} in color {}, deleting to {}",
            cap.position, cap.cap_color, cap.deleted
        );
    }
}
