//! Exact and modular arithmetic for weak-ordering counts.
//!
//! The crate computes Fubini numbers `F(n)` (weak orderings of `n` elements),
//! r-Fubini numbers `F_r(n)` (weak orderings in which `r` marked elements are
//! pairwise untied) and r-horse numbers `H_r(n) = F_r(n) / r!` with arbitrary
//! precision. The pieces:
//!
//! - [`stirling`]: Stirling triangles of both kinds and their matrices, which
//!   are mutual inverses and carry factorials to Fubini numbers and back.
//! - [`shift_calculus`]: polynomials in the shift operator `E`; the r-Fubini
//!   numbers are `(E)_r E^(-r)` applied to `F`.
//! - [`sequences`]: the exact sequences themselves.
//! - [`number_theory`] and [`periodicity`]: residues modulo `K`, whose
//!   eventual period divides the Carmichael function λ(K) and whose onset is
//!   bounded by the largest prime exponent of `K`.
//! - [`oracle`]: brute-force enumerators that every formula is checked
//!   against.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod number_theory;
pub mod oracle;
pub mod periodicity;
pub mod sequences;
pub mod shift_calculus;
pub mod stirling;

pub use error::{Error, Result};
pub use number_theory::{carmichael, euler_totient, factorize, Factorization};
pub use periodicity::{analyze, PeriodReport};
pub use sequences::{BigSequence, SequenceId};
pub use shift_calculus::ShiftPolynomial;
pub use stirling::{StirlingKind, TriangularMatrix};

pub use num_bigint::BigInt;
