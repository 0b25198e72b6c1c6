//! Exact factorials, Fubini numbers, r-Fubini numbers and r-horse numbers.
//!
//! Fubini numbers are produced by the strong-to-weak transform
//! `F(n) = Σ_k S(n, k) k!`. The r-Fubini numbers apply the shifted sum
//! `F_r(n) = Σ_{j=0..r} s(r, r-j) F(n-j)` and the r-horse numbers divide that
//! by `r!`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::shift_calculus::falling_factorial_operator;
use crate::stirling::{
    falling_factorial_coefficients, second_kind_row, stirling_matrix, times_x_minus, StirlingKind,
};

/// Which sequence a [`BigSequence`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    Factorial,
    Fubini,
    /// r-Fubini numbers `F_r(n)`, defined for `n >= r`.
    FubiniR(usize),
    /// r-horse numbers `H_r(n)`, defined for `n >= r`.
    HorseR(usize),
}

impl SequenceId {
    /// First index at which the sequence is defined.
    pub fn start(self) -> usize {
        match self {
            SequenceId::Factorial | SequenceId::Fubini => 0,
            SequenceId::FubiniR(r) | SequenceId::HorseR(r) => r,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Factorial => f.write_str("factorial"),
            SequenceId::Fubini => f.write_str("fubini"),
            SequenceId::FubiniR(r) => write!(f, "fubini_r({r})"),
            SequenceId::HorseR(r) => write!(f, "horse_r({r})"),
        }
    }
}

/// A computed prefix of one of the sequences, indexed by absolute `n`.
///
/// Values below [`SequenceId::start`] are undefined and never stored.
/// Extending appends; entries already computed are never touched again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigSequence {
    id: SequenceId,
    values: Vec<BigInt>,
}

impl BigSequence {
    /// An empty prefix of the given sequence.
    pub fn new(id: SequenceId) -> Self {
        BigSequence {
            id,
            values: Vec::new(),
        }
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn start(&self) -> usize {
        self.id.start()
    }

    /// One past the largest computed index.
    pub fn len(&self) -> usize {
        if self.values.is_empty() {
            0
        } else {
            self.start() + self.values.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.start()).and_then(|i| self.values.get(i))
    }

    /// Computed values, the first one belonging to index [`Self::start`].
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `(n, value)` pairs in increasing `n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        let start = self.start();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (start + i, v))
    }

    /// Computes every missing index below `len`.
    pub fn extend_to(&mut self, len: usize) {
        if len <= self.len() {
            return;
        }
        let first_new = self.len().max(self.start());
        match self.id {
            SequenceId::Factorial => {
                let mut acc = self.values.last().cloned().unwrap_or_else(BigInt::one);
                for n in first_new..len {
                    if n > 0 {
                        acc *= n;
                    }
                    self.values.push(acc.clone());
                }
            }
            SequenceId::Fubini => {
                let fact = factorials(len);
                for n in first_new..len {
                    let row = second_kind_row(n);
                    let value = row
                        .iter()
                        .zip(fact.values())
                        .fold(BigInt::zero(), |acc, (s, f)| acc + s * f);
                    self.values.push(value);
                }
            }
            SequenceId::FubiniR(r) | SequenceId::HorseR(r) => {
                let f = fubini(len);
                let coeffs = falling_factorial_coefficients(r);
                let divisor = factorial(r);
                for n in first_new..len {
                    let value = stirling_weighted_sum(&coeffs, &f, n);
                    let value = match self.id {
                        SequenceId::HorseR(_) => exact_quotient(value, &divisor, n, r),
                        _ => value,
                    };
                    self.values.push(value);
                }
            }
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

// Σ_{j=0..r} s(r, r-j) F(n-j); needs n >= r and F computed through n.
fn stirling_weighted_sum(first_kind_row: &[BigInt], f: &BigSequence, n: usize) -> BigInt {
    let r = first_kind_row.len() - 1;
    (0..=r).fold(BigInt::zero(), |acc, j| {
        acc + &first_kind_row[r - j] * f.get(n - j).expect("Fubini prefix covers n")
    })
}

fn exact_quotient(value: BigInt, divisor: &BigInt, n: usize, r: usize) -> BigInt {
    let (q, rem) = value.div_rem(divisor);
    assert!(
        rem.is_zero(),
        "F_{r}({n}) is not divisible by {r}!; arithmetic is broken"
    );
    q
}

/// `n!` for `0 <= n < len`.
pub fn factorials(len: usize) -> BigSequence {
    let mut seq = BigSequence::new(SequenceId::Factorial);
    seq.extend_to(len);
    seq
}

/// Fubini numbers `F(n)` for `0 <= n < len`.
pub fn fubini(len: usize) -> BigSequence {
    let mut seq = BigSequence::new(SequenceId::Fubini);
    seq.extend_to(len);
    seq
}

/// Fubini numbers from the alternating recurrence
/// `F(n) = n! - Σ_{j=1..n} s(n, n-j) F(n-j)`.
pub fn fubini_alternating(len: usize) -> BigSequence {
    let mut values: Vec<BigInt> = Vec::with_capacity(len);
    let mut fact = BigInt::one();
    let mut coeffs = falling_factorial_coefficients(0);
    for n in 0..len {
        if n > 0 {
            fact *= n;
            coeffs = times_x_minus(&coeffs, n - 1);
        }
        // coeffs[k] = s(n, k); the j-th term uses s(n, n-j) F(n-j)
        let correction = (1..=n).fold(BigInt::zero(), |acc, j| {
            acc + &coeffs[n - j] * &values[n - j]
        });
        values.push(&fact - correction);
    }
    BigSequence {
        id: SequenceId::Fubini,
        values,
    }
}

fn check_rank(n: usize, r: usize) -> Result<()> {
    if n < r {
        Err(Error::IndexBelowRank { n, r })
    } else {
        Ok(())
    }
}

fn require_fubini(f: &BigSequence, through: usize) -> Result<()> {
    if f.id() != SequenceId::Fubini {
        return Err(Error::WrongSequence);
    }
    if f.len() <= through {
        return Err(Error::IndexNotComputed {
            index: through,
            available: f.len(),
        });
    }
    Ok(())
}

/// `F_r(n) = Σ_{j=0..r} s(r, r-j) F(n-j)` over a precomputed Fubini prefix.
pub fn fubini_r_with(f: &BigSequence, n: usize, r: usize) -> Result<BigInt> {
    check_rank(n, r)?;
    require_fubini(f, n)?;
    Ok(stirling_weighted_sum(
        &falling_factorial_coefficients(r),
        f,
        n,
    ))
}

/// `F_r(n)` by applying the operator `(E)_r E^(-r)` to the Fubini numbers.
pub fn fubini_r_by_operator(f: &BigSequence, n: usize, r: usize) -> Result<BigInt> {
    check_rank(n, r)?;
    require_fubini(f, n)?;
    falling_factorial_operator(r).apply(f, n)
}

/// r-Fubini number: weak orderings of `n` elements in which `r` marked
/// elements are pairwise untied.
pub fn fubini_r(n: usize, r: usize) -> Result<BigInt> {
    check_rank(n, r)?;
    fubini_r_with(&fubini(n + 1), n, r)
}

/// `H_r(n) = F_r(n) / r!` over a precomputed Fubini prefix.
pub fn horse_r_with(f: &BigSequence, n: usize, r: usize) -> Result<BigInt> {
    let value = fubini_r_with(f, n, r)?;
    Ok(exact_quotient(value, &factorial(r), n, r))
}

/// r-horse number: weak orderings of `n` elements in which `r` marked
/// elements appear in one prescribed strict order.
pub fn horse_r(n: usize, r: usize) -> Result<BigInt> {
    check_rank(n, r)?;
    horse_r_with(&fubini(n + 1), n, r)
}

/// `F_r(n)` for `r <= n < len`.
pub fn fubini_r_sequence(r: usize, len: usize) -> BigSequence {
    let mut seq = BigSequence::new(SequenceId::FubiniR(r));
    seq.extend_to(len);
    seq
}

/// `H_r(n)` for `r <= n < len`.
pub fn horse_r_sequence(r: usize, len: usize) -> BigSequence {
    let mut seq = BigSequence::new(SequenceId::HorseR(r));
    seq.extend_to(len);
    seq
}

fn require_prefix(seq: &BigSequence, id: SequenceId, len: usize) -> Result<()> {
    if seq.id() != id {
        return Err(Error::WrongSequence);
    }
    if seq.len() < len {
        return Err(Error::SizeMismatch {
            left: len,
            right: seq.len(),
        });
    }
    Ok(())
}

/// `Ŝ(N) · f`: maps the factorials (strong orderings) to the Fubini numbers
/// (weak orderings).
pub fn transform_strong_to_weak(f: &BigSequence, len: usize) -> Result<BigSequence> {
    require_prefix(f, SequenceId::Factorial, len)?;
    if len == 0 {
        return Ok(BigSequence::new(SequenceId::Fubini));
    }
    let values = stirling_matrix(StirlingKind::Second, len).mul_vector(&f.values()[..len])?;
    Ok(BigSequence {
        id: SequenceId::Fubini,
        values,
    })
}

/// `ŝ(N) · F`: maps the Fubini numbers back to the factorials.
pub fn transform_weak_to_strong(big_f: &BigSequence, len: usize) -> Result<BigSequence> {
    require_prefix(big_f, SequenceId::Fubini, len)?;
    if len == 0 {
        return Ok(BigSequence::new(SequenceId::Factorial));
    }
    let values =
        stirling_matrix(StirlingKind::FirstSigned, len).mul_vector(&big_f.values()[..len])?;
    Ok(BigSequence {
        id: SequenceId::Factorial,
        values,
    })
}
