//! Exact computer algebra for two-colored Temperley–Lieb algebras.
//!
//! Everything here is exact: integer, rational, and polynomial arithmetic use
//! arbitrary precision throughout, and every theorem-level claim the library
//! exposes (existence, rotatability, ideal membership, valuation bounds) is
//! decided by computation, never by floating point or heuristics.
//!
//! The library is organized in layers:
//!
//! * [`poly`] — sparse polynomials over `Z[x_s, x_t]`, exact division, gcds,
//!   and reduced rational functions (the generic coefficient field).
//! * [`qnum`] — two-colored quantum numbers `[n]_s`, `[n]_t`, quantum
//!   binomial coefficients, their cyclotomic factorization, and Bézout-style
//!   certificates for the ideals they generate.
//! * [`ring`] — coefficient rings a specialization can land in (`Z`, `Q`,
//!   `Z/m`, `Z[y]/(f)`, `Q[y]/(f)`, or the generic fraction field), with
//!   exact zero and invertibility tests.
//! * [`diagram`] — planar Temperley–Lieb diagrams: enumeration, composition
//!   with loop bookkeeping, rotation, reflection, and partial trace.
//! * [`algebra`] — linear combinations of diagrams over a coefficient ring,
//!   plus an independent linear-algebra solver for the Jones–Wenzl element.
//! * [`jw`] — Jones–Wenzl projectors: the generic coefficient recursion,
//!   existence and rotatability decision procedures, and consistency audits.
//! * [`realization`] — validity checks for realization data (roots, coroots,
//!   Coxeter matrix) over an arbitrary coefficient ring.
//! * [`cli`] — the `twocolor-tl` command-line interface.
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run -p twocolor-tl --example quantum_numbers
//! cargo run -p twocolor-tl --example cyclotomic_parts
//! cargo run -p twocolor-tl --example binomial_ideals
//! cargo run -p twocolor-tl --example diagram_calculus
//! cargo run -p twocolor-tl --example jones_wenzl_generic
//! cargo run -p twocolor-tl --example existence
//! cargo run -p twocolor-tl --example rotatability
//! cargo run -p twocolor-tl --example realization_check
//! ```
//!
//! The same functionality is scriptable through the thin `twocolor-tl`
//! binary; see the crate README for the subcommand reference.

pub mod algebra;
pub mod cli;
pub mod diagram;
pub mod jw;
pub mod poly;
mod prs;
pub mod qnum;
pub mod realization;
pub mod ring;

pub use algebra::{AlgebraContext, TLElement};
pub use diagram::TLDiagram;
pub use jw::{ExistenceReport, JWGeneric};
pub use poly::{BiPoly, RatFunc, RatPoly, UniPoly};
pub use qnum::Color;
pub use realization::{Realization, ValidationReport};
pub use ring::{RingDescriptor, RingValue, Specialization};
