//! Exact computational algebra over rational function fields `F_q(t)`,
//! together with a small zoo of diophantine-definability constructions
//! that live on top of it:
//!
//! * [`algebra`] — finite fields `F_q`, sparse polynomials with
//!   arbitrary-precision exponents, rational functions in canonical form,
//!   valuations at places, partial fractions and height-bounded enumeration.
//! * [`artin_schreier`] — a complete decision procedure with witness
//!   extraction for `u^p - u = f` over `F_q(t)`.
//! * [`pheidas`] — membership in `D_p = { t^(p^s) }` via the Pheidas curve
//!   (`p > 2`) and the Videla system (`p = 2`).
//! * [`encoding`] — the base-`q` bijection `F_q[t] <-> Z>=0` with recursive
//!   addition and multiplication on codes.
//! * [`model`] — valuation classes `[k]`, the switching set `{([k],[p^k])}`
//!   and the induced semiring structure on `D_p`.
//! * [`pell`] — Denef's Pell-equation model over `Z[t]` with discriminant
//!   `t^2 - 1`.
//! * [`discretize`] — selection of a discrete subset of a dense listable
//!   set of rationals via the intervals `[1/(2j+1), 1/(2j)]`.
//! * [`formula`] — parser, printer and height-bounded brute-force evaluator
//!   for positive-existential formulas in the language `(+, *, 0, 1, t)`.
//!
//! The `diolab` binary exposes each piece as a subcommand with JSON output;
//! see [`cli`] and the crate examples for end-to-end usage.

pub mod algebra;
pub mod artin_schreier;
pub mod cli;
pub mod discretize;
pub mod encoding;
pub mod formula;
pub mod model;
pub mod pell;
pub mod pheidas;
