//! Fubini and r-Fubini numbers modulo `K`, and detection of their eventual
//! period.
//!
//! Modulo `K` every `k!` with `k >= K` vanishes, so
//! `F(n) ≡ Σ_{k<K} S(n,k) k!`. Expanding `S(n,k) k!` as an alternating
//! binomial sum turns this into a fixed linear combination of the powers
//! `t^n` for `t < K`:
//!
//! ```text
//! F(n) ≡ Σ_{t<K} w_t t^n (mod K),   w_t = Σ_{k=t}^{K-1} (-1)^(k-t) C(k,t)
//! ```
//!
//! Each step therefore costs `K` word multiplications regardless of how large
//! `F(n)` is. The same structure bounds the eventual period by λ(K) and the
//! onset by the largest prime exponent `R` of `K`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::number_theory::{divisors, factorize};
use crate::sequences::SequenceId;
use crate::shift_calculus::falling_factorial_operator;

/// Slack added to the verification window beyond `onset_bound + 2·λ(K)`.
pub const WINDOW_SLACK: usize = 16;

/// Measured periodicity of `F(n)` or `F_r(n)` modulo `K`, next to the bounds
/// that λ(K) and `R` predict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub modulus: u64,
    /// [`SequenceId::Fubini`] or [`SequenceId::FubiniR`].
    pub sequence: SequenceId,
    /// Smallest absolute index from which the sequence repeats with `period`.
    pub onset: usize,
    /// Minimal eventual period.
    pub period: u64,
    /// λ(K).
    pub carmichael: u64,
    /// Largest exponent in the factorization of `K`.
    pub max_exponent: u32,
    /// `R` for the Fubini numbers, `r - 1 + R` for the r-Fubini numbers.
    pub onset_bound: usize,
    /// Number of residues examined.
    pub window: usize,
    pub period_divides_carmichael: bool,
    pub onset_within_bound: bool,
}

fn check_modulus(modulus: u64) -> Result<()> {
    if modulus == 0 {
        Err(Error::ZeroModulus)
    } else {
        Ok(())
    }
}

// w_t = Σ_{k=t}^{k_max-1} (-1)^(k-t) C(k,t) mod K. Terms with k > n vanish
// (they equal k! S(n,k) = 0), so k_max = min(K, len) is exact for n < len.
fn power_weights(modulus: u64, len: usize) -> Vec<u64> {
    let k_max = usize::try_from(modulus).map_or(len, |k| k.min(len));
    let m = modulus;
    let add = |a: u64, b: u64| ((a as u128 + b as u128) % m as u128) as u64;
    let mut weights = vec![0u64; k_max];
    let mut pascal: Vec<u64> = Vec::with_capacity(k_max);
    for k in 0..k_max {
        // advance C(k-1, .) to C(k, .) in place
        pascal.push(1 % m);
        for t in (1..k).rev() {
            pascal[t] = add(pascal[t], pascal[t - 1]);
        }
        for (t, &c) in pascal.iter().enumerate() {
            let signed = if (k - t) % 2 == 0 { c } else { (m - c) % m };
            weights[t] = add(weights[t], signed);
        }
    }
    weights
}

/// `F(n) mod K` for `0 <= n < len`, using residue arithmetic only.
///
/// Costs `O(min(K, len)^2 + len * min(K, len))` word operations.
pub fn fubini_mod_sequence(modulus: u64, len: usize) -> Result<Vec<u64>> {
    check_modulus(modulus)?;
    if modulus == 1 {
        return Ok(vec![0; len]);
    }
    let m = modulus as u128;
    let weights = power_weights(modulus, len);
    // t^n mod K; 0^0 = 1 so the n = 0 term picks up the empty ordering.
    let mut powers = vec![1u64; weights.len()];
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let mut acc: u128 = 0;
        for (&w, &p) in weights.iter().zip(&powers) {
            acc += (w as u128 * p as u128) % m;
        }
        out.push((acc % m) as u64);
        for (t, p) in powers.iter_mut().enumerate() {
            *p = ((*p as u128 * t as u128) % m) as u64;
        }
    }
    Ok(out)
}

/// `F_r(n) mod K` for `r <= n < len`; entry `i` holds `F_r(r + i) mod K`.
///
/// Obtained by applying `(E)_r E^(-r)` to the residues of `F`.
pub fn fubini_r_mod_sequence(modulus: u64, r: usize, len: usize) -> Result<Vec<u64>> {
    check_modulus(modulus)?;
    if len <= r {
        return Err(Error::LengthTooShort { len, min: r });
    }
    let residues = fubini_mod_sequence(modulus, len)?;
    let op = falling_factorial_operator(r);
    (r..len)
        .map(|n| op.apply_residues(&residues, n, modulus))
        .collect()
}

/// Minimum residue count [`detect_eventual_period`] accepts.
pub fn required_window(lambda: u64, onset_bound: usize) -> usize {
    onset_bound + 2 * lambda as usize + WINDOW_SLACK
}

/// Finds the minimal eventual period and its onset in `seq`.
///
/// The period is the smallest divisor `d` of `lambda` with
/// `seq[n] == seq[n + d]` for every `n` in `[onset_bound, len - d)`; the onset
/// is then walked back from `onset_bound` as far as the relation keeps
/// holding. Both are relative to the start of `seq`.
///
/// Fails with [`Error::BoundViolation`] when no divisor of `lambda` works,
/// which contradicts the λ(K) period bound.
pub fn detect_eventual_period(
    seq: &[u64],
    lambda: u64,
    onset_bound: usize,
) -> Result<(usize, u64)> {
    let required = required_window(lambda, onset_bound);
    if seq.len() < required {
        return Err(Error::WindowTooShort {
            len: seq.len(),
            required,
        });
    }
    let holds = |n: usize, d: usize| seq[n] == seq[n + d];
    for d in divisors(lambda) {
        let step = d as usize;
        if (onset_bound..seq.len() - step).all(|n| holds(n, step)) {
            let mut onset = onset_bound;
            while onset > 0 && holds(onset - 1, step) {
                onset -= 1;
            }
            return Ok((onset, d));
        }
    }
    Err(Error::BoundViolation {
        carmichael: lambda,
        onset_bound,
    })
}

/// Measures the eventual period of `F(n)` (for `r = 0`) or `F_r(n)` modulo
/// `modulus` and checks it against λ(K) and the onset bound.
///
/// For odd moduli and `r = 0` the period must equal λ(K) exactly; anything
/// else is reported as [`Error::ExactPeriodViolation`].
pub fn analyze(modulus: u64, r: usize) -> Result<PeriodReport> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall { modulus, min: 2 });
    }
    let fact = factorize(modulus)?;
    let lambda = fact.carmichael();
    let max_exponent = fact.max_exponent();
    let big_r = max_exponent as usize;

    let (sequence, onset_bound, relative_bound) = if r == 0 {
        (SequenceId::Fubini, big_r, big_r)
    } else {
        // K >= 2 so R >= 1
        (SequenceId::FubiniR(r), r - 1 + big_r, big_r - 1)
    };
    let window = required_window(lambda, relative_bound);
    let residues = if r == 0 {
        fubini_mod_sequence(modulus, window)?
    } else {
        fubini_r_mod_sequence(modulus, r, r + window)?
    };
    let (relative_onset, period) = detect_eventual_period(&residues, lambda, relative_bound)?;
    let onset = relative_onset + r;

    if r == 0 && modulus % 2 == 1 && period != lambda {
        return Err(Error::ExactPeriodViolation {
            modulus,
            carmichael: lambda,
            period,
        });
    }

    Ok(PeriodReport {
        modulus,
        sequence,
        onset,
        period,
        carmichael: lambda,
        max_exponent,
        onset_bound,
        window,
        period_divides_carmichael: lambda % period == 0,
        onset_within_bound: onset <= onset_bound,
    })
}
