//! Factorization, Euler's totient and the Carmichael function for machine-word
//! moduli, plus the exponent identities the periodicity bounds rest on.

use alloc::vec::Vec;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Prime factorization of a positive modulus.
///
/// Primes are strictly increasing and every exponent is at least one. The
/// modulus 1 has no factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    modulus: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Iterator over the prime-power parts `p^e` of the modulus.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    /// Largest exponent in the factorization, 0 for the modulus 1.
    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| prime_power_totient(p, e))
            .product()
    }

    pub fn carmichael(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| prime_power_carmichael(p, e))
            .fold(1, |acc, l| acc.lcm(&l))
    }
}

fn prime_power_totient(p: u64, e: u32) -> u64 {
    (p - 1) * p.pow(e - 1)
}

fn prime_power_carmichael(p: u64, e: u32) -> u64 {
    let phi = prime_power_totient(p, e);
    if p == 2 && e >= 3 {
        phi / 2
    } else {
        phi
    }
}

/// Factorizes `modulus` by trial division.
pub fn factorize(modulus: u64) -> Result<Factorization> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut rest = modulus;
    let mut factors = Vec::new();
    let mut push_all = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push_all(&mut rest, 2);
    let mut p = 3;
    while p <= rest / p {
        push_all(&mut rest, p);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { modulus, factors })
}

pub fn euler_totient(modulus: u64) -> Result<u64> {
    Ok(factorize(modulus)?.totient())
}

/// λ(K): φ for 1, 2, 4 and odd prime powers, φ/2 for 2^r with r ≥ 3, and the
/// lcm over prime-power parts otherwise.
pub fn carmichael(modulus: u64) -> Result<u64> {
    Ok(factorize(modulus)?.carmichael())
}

/// R, the largest exponent in the factorization of `modulus`.
pub fn max_prime_exponent(modulus: u64) -> Result<u32> {
    Ok(factorize(modulus)?.max_exponent())
}

/// `a * b mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d <= n / d {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Exhaustively checks `a^R ≡ a^(λ+R)` for every residue `a` and
/// `b^λ ≡ 1` for every unit `b` modulo `modulus`.
///
/// Meant for moduli up to about 10^4.
pub fn verify_exponent_properties(modulus: u64) -> Result<bool> {
    if modulus < 2 {
        return Err(Error::ModulusTooSmall { modulus, min: 2 });
    }
    let fact = factorize(modulus)?;
    let lambda = fact.carmichael();
    let r = u64::from(fact.max_exponent());
    for a in 0..modulus {
        if pow_mod(a, r, modulus) != pow_mod(a, lambda + r, modulus) {
            return Ok(false);
        }
        if a.gcd(&modulus) == 1 && pow_mod(a, lambda, modulus) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
