//! Finite polynomials in the shift operator `E` and its inverse.
//!
//! An operator `Σ c_j E^j` acts on a sequence by `(Σ c_j E^j) C(n) = Σ c_j C(n + j)`.
//! Composition multiplies the polynomials, so `E` can be handled like an
//! ordinary variable.

use alloc::collections::btree_map::{self, BTreeMap};
use core::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number_theory::mul_mod;
use crate::sequences::BigSequence;
use crate::stirling::falling_factorial_coefficients;

/// Sparse map from shift offset to coefficient. Zero coefficients are never
/// stored, so the empty map is the zero operator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ShiftPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl ShiftPolynomial {
    pub fn zero() -> Self {
        ShiftPolynomial::default()
    }

    /// The identity `I = E^0`.
    pub fn identity() -> Self {
        ShiftPolynomial::shift(0)
    }

    /// `E^offset`.
    pub fn shift(offset: i64) -> Self {
        ShiftPolynomial::monomial(offset, BigInt::one())
    }

    pub fn monomial(offset: i64, coeff: BigInt) -> Self {
        let mut p = ShiftPolynomial::zero();
        p.add_term(offset, coeff);
        p
    }

    /// Builds an operator from `(offset, coefficient)` pairs, merging repeated
    /// offsets.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = ShiftPolynomial::zero();
        for (offset, coeff) in terms {
            p.add_term(offset, coeff.into());
        }
        p
    }

    fn add_term(&mut self, offset: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(offset) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, offset: i64) -> BigInt {
        self.terms.get(&offset).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing offset order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&o, c)| (o, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_offset(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_offset(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Product of two operators.
    pub fn compose(&self, other: &ShiftPolynomial) -> ShiftPolynomial {
        let mut out = ShiftPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> ShiftPolynomial {
        ShiftPolynomial::from_terms(self.terms.iter().map(|(&o, c)| (o, c * factor)))
    }

    /// `Σ c_j · seq(n + j)`.
    ///
    /// Every index `n + j` must be non-negative and inside the computed
    /// domain of `seq`; nothing is zero-filled.
    pub fn apply(&self, seq: &BigSequence, n: usize) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (&offset, coeff) in &self.terms {
            let index = shifted_index(n, offset)?;
            let value = seq.get(index).ok_or(Error::IndexNotComputed {
                index,
                available: seq.len(),
            })?;
            acc += coeff * value;
        }
        Ok(acc)
    }

    /// The same action on a residue sequence, reduced modulo `modulus`.
    pub fn apply_residues(&self, residues: &[u64], n: usize, modulus: u64) -> Result<u64> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = BigInt::from(modulus);
        let mut acc = 0u64;
        for (&offset, coeff) in &self.terms {
            let index = shifted_index(n, offset)?;
            let value = *residues.get(index).ok_or(Error::IndexNotComputed {
                index,
                available: residues.len(),
            })?;
            let c = coefficient_residue(coeff, &m);
            acc = ((acc as u128 + mul_mod(c, value, modulus) as u128) % modulus as u128) as u64;
        }
        Ok(acc)
    }
}

fn shifted_index(n: usize, offset: i64) -> Result<usize> {
    let index = n as i128 + offset as i128;
    if index < 0 {
        return Err(Error::NegativeIndex { n, offset });
    }
    Ok(index as usize)
}

fn coefficient_residue(coeff: &BigInt, modulus: &BigInt) -> u64 {
    let r = coeff.mod_floor(modulus);
    u64::try_from(r).expect("residue below a u64 modulus fits in u64")
}

impl Add for &ShiftPolynomial {
    type Output = ShiftPolynomial;

    fn add(self, rhs: &ShiftPolynomial) -> ShiftPolynomial {
        let mut out = self.clone();
        for (&o, c) in &rhs.terms {
            out.add_term(o, c.clone());
        }
        out
    }
}

impl Mul for &ShiftPolynomial {
    type Output = ShiftPolynomial;

    fn mul(self, rhs: &ShiftPolynomial) -> ShiftPolynomial {
        self.compose(rhs)
    }
}

impl Neg for &ShiftPolynomial {
    type Output = ShiftPolynomial;

    fn neg(self) -> ShiftPolynomial {
        ShiftPolynomial::from_terms(self.terms.iter().map(|(&o, c)| (o, -c)))
    }
}

/// `E - c·I`.
pub fn shift_minus(c: i64) -> ShiftPolynomial {
    ShiftPolynomial::from_terms([(1, BigInt::one()), (0, BigInt::from(-c))])
}

/// `(E)_r · E^(-r) = E(E - I)(E - 2I)...(E - (r-1)I) · E^(-r)`.
///
/// Applied to the Fubini numbers this yields the r-Fubini numbers. The result
/// has offsets in `[-r, 0]`, with `s(r, j)` sitting at offset `j - r`.
pub fn falling_factorial_operator(r: usize) -> ShiftPolynomial {
    let mut op = ShiftPolynomial::identity();
    for i in 0..r {
        op = op.compose(&shift_minus(i as i64));
    }
    op.compose(&ShiftPolynomial::shift(-(r as i64)))
}

/// Same operator assembled directly from the falling-factorial coefficients.
pub fn falling_factorial_operator_from_stirling(r: usize) -> ShiftPolynomial {
    let offset = r as i64;
    ShiftPolynomial::from_terms(
        falling_factorial_coefficients(r)
            .into_iter()
            .enumerate()
            .map(|(j, c)| (j as i64 - offset, c)),
    )
}
