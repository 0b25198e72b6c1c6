#![allow(dead_code)]

use fubini_core::number_theory::pow_mod;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `F(n) = Σ_{k=1..n} C(n,k) F(n-k)`: choose the first block, order the rest.
pub fn fubini_binomial_recurrence(len: usize) -> Vec<BigInt> {
    let mut binom = vec![BigInt::one()];
    let mut f: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        if n > 0 {
            let mut next = vec![BigInt::one(); n + 1];
            for k in 1..n {
                next[k] = &binom[k - 1] + &binom[k];
            }
            binom = next;
        }
        let value = if n == 0 {
            BigInt::one()
        } else {
            (1..=n).fold(BigInt::zero(), |acc, k| acc + &binom[k] * &f[n - k])
        };
        f.push(value);
    }
    f
}

/// Brute-force minimal eventual period and onset over a long residue prefix,
/// scanning every candidate period (not just divisors of λ).
pub fn brute_eventual_period(seq: &[u64], max_period: usize) -> (usize, usize) {
    let len = seq.len();
    for q in 1..=max_period {
        let mut onset = len - q;
        while onset > 0 && seq[onset - 1] == seq[onset - 1 + q] {
            onset -= 1;
        }
        if onset + 2 * q < len / 2 {
            return (onset, q);
        }
    }
    panic!("no period up to {max_period}");
}

/// Exhaustive Carmichael-style check used as a second route in tests.
pub fn all_units_satisfy(modulus: u64, exponent: u64) -> bool {
    (1..modulus)
        .filter(|a| num_integer::gcd(*a, modulus) == 1)
        .all(|a| pow_mod(a, exponent, modulus) == 1)
}
