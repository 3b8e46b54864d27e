//! Exact calculator for the equivariant cube invariant of rank-one
//! three-manifolds with a framed generating knot.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: half-integer Laurent polynomials, one-variable fractions,
//!   and the fraction field of `Q[x^{±1}, y^{±1}, z^{±1}] / (xyz = 1)`.
//! - [`alexander`]: normalized `(Δ, δ)` pairs and the functionals `I_Δ`, `J_Δ`.
//! - [`diagram`]: beaded trivalent diagrams, their canonical form, `ψ`, IHX
//!   relations and the labeled graph sets `CS_n`.
//! - [`casson`]: Dedekind sums and Casson-Walker values of lens spaces.
//! - [`surgery`]: the surgery, connected-sum, framing and knot-change
//!   formulas, the `Q_k` quotient and the move pipeline.
//! - [`io`] and [`cli`]: JSON encodings, manifests, reports and the
//!   command-line front end.

pub mod alexander;
pub mod algebra;
pub mod casson;
pub mod cli;
pub mod diagram;
pub mod io;
pub mod sample;
pub mod selfcheck;
pub mod surgery;
