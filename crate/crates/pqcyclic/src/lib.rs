//! Cyclotomic cosets, character-sum identities, primitive idempotents, and
//! minimal cyclic code parameters for lengths `n = p^s·q^t` over `F_l`.
//!
//! The crate is organized bottom-up:
//!
//! * [`numtheory`] — residue classes, primitive roots, CRT, and validation of
//!   the standing hypotheses on `(p, q, s, t, l)`.
//! * [`gf`] — the prime field `F_l`, its degree-`m` extension, a primitive
//!   `n`-th root of unity `α`, and the two quadratic Gauss-type sums `𝓡`, `𝓝`.
//! * [`cosets`] — the `l`-cyclotomic cosets modulo `n`, their labeling by
//!   prime-power levels, closed additive descriptions, the order-2 class
//!   partition `D₀ ∪ D₁`, and shifted-intersection counts (brute force and
//!   closed form).
//! * [`ring`] — dense arithmetic in `F_l[x]/(xⁿ−1)`, the coset characteristic
//!   polynomials `χ_γ`, and verification of the product identities they
//!   satisfy.
//! * [`idempotents`] — minimal polynomials, the primitive idempotent of each
//!   minimal ideal (spectral-sum oracle and closed-form assembly), and the
//!   algebraic checks `e² = e`, `Σθ = 1`, `θθ′ = 0`.
//! * [`codes`] — generator polynomials, dimensions, and distances (exact or
//!   bounded) of the minimal cyclic codes and the selection-product codes
//!   built from them.
//! * [`verify`] — the sweep drivers that cross-check every closed form
//!   against its brute-force oracle, shared by the CLI and the test suite.
//!
//! Every closed-form quantity in the crate has an independent brute-force
//! counterpart, and the sweeps in [`verify`] insist the two routes agree
//! exactly before anything is reported.

pub mod codes;
pub mod cosets;
pub mod gf;
pub mod idempotents;
pub mod numtheory;
pub mod poly;
pub mod ring;
pub mod verify;

pub use numtheory::{validate_parameters, HypothesisError, Parameters};
