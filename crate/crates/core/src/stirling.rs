//! Stirling numbers of both kinds and their lower-triangular matrices.
//!
//! Signed first-kind numbers `s(n, k)` come from expanding the falling
//! factorial `x(x-1)...(x-n+1)` as a polynomial in `x`. Second-kind numbers
//! `S(n, k)` use the explicit alternating sum
//! `S(n, k) = (1/k!) Σ_t (-1)^(k-t) C(k, t) t^n`, whose division by `k!` is
//! exact. The two matrices are inverse to each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Signed numbers of the first kind, `s(n, k)`.
    FirstSigned,
    /// Numbers of the second kind, `S(n, k)`.
    Second,
}

impl StirlingKind {
    pub fn name(self) -> &'static str {
        match self {
            StirlingKind::FirstSigned => "first_signed",
            StirlingKind::Second => "second",
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients `[s(r,0), ..., s(r,r)]` of `x(x-1)...(x-r+1)` in powers of `x`.
pub fn falling_factorial_coefficients(r: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..r {
        coeffs = times_x_minus(&coeffs, i);
    }
    coeffs
}

// (c_0 + c_1 x + ...) * (x - shift)
pub(crate) fn times_x_minus(coeffs: &[BigInt], shift: usize) -> Vec<BigInt> {
    let shift = BigInt::from(shift);
    let mut next = vec![BigInt::zero(); coeffs.len() + 1];
    for (k, c) in coeffs.iter().enumerate() {
        next[k + 1] += c;
        next[k] -= c * &shift;
    }
    next
}

/// Signed Stirling number of the first kind.
pub fn stirling_first_signed(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling_factorial_coefficients(n).swap_remove(k)
}

/// Row `n` of the second-kind triangle, `[S(n,0), ..., S(n,n)]`, each entry
/// evaluated by the explicit alternating binomial sum.
pub fn second_kind_row(n: usize) -> Vec<BigInt> {
    let powers: Vec<BigInt> = (0..=n)
        .map(|t| num_traits::pow(BigInt::from(t), n))
        .collect();
    let mut binomials = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            binomials = next_pascal_row(&binomials);
            factorial *= k;
        }
        row.push(explicit_second_kind(k, &binomials, &powers, &factorial));
    }
    row
}

fn next_pascal_row(prev: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(prev.len() + 1);
    next.push(BigInt::one());
    for w in prev.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

// binomials = C(k, 0..=k), powers[t] = t^n, factorial = k!
fn explicit_second_kind(
    k: usize,
    binomials: &[BigInt],
    powers: &[BigInt],
    factorial: &BigInt,
) -> BigInt {
    let mut sum = BigInt::zero();
    for t in 0..=k {
        let term = &binomials[t] * &powers[t];
        if (k - t).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (quotient, remainder) = sum.div_rem(factorial);
    assert!(
        remainder.is_zero(),
        "alternating sum for S(n, {k}) is not divisible by {k}!; arithmetic is broken"
    );
    quotient
}

/// Stirling number of the second kind.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let powers: Vec<BigInt> = (0..=k)
        .map(|t| num_traits::pow(BigInt::from(t), n))
        .collect();
    let mut binomials = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for i in 1..=k {
        binomials = next_pascal_row(&binomials);
        factorial *= i;
    }
    explicit_second_kind(k, &binomials, &powers, &factorial)
}

/// Dense `N x N` lower-triangular integer matrix.
///
/// Entries above the diagonal are zero. Stirling matrices also carry a unit
/// diagonal; `kind` is `None` for matrices that came out of arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularMatrix {
    size: usize,
    kind: Option<StirlingKind>,
    entries: Vec<BigInt>,
}

impl TriangularMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![BigInt::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = BigInt::one();
        }
        TriangularMatrix {
            size,
            kind: None,
            entries,
        }
    }

    /// Builds a matrix from lower-triangular rows (row `n` holds columns
    /// `0..=n`; shorter rows are zero-padded).
    fn from_rows(kind: Option<StirlingKind>, rows: Vec<Vec<BigInt>>) -> Self {
        let size = rows.len();
        let mut entries = vec![BigInt::zero(); size * size];
        for (n, row) in rows.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate().take(n + 1) {
                entries[n * size + k] = v;
            }
        }
        TriangularMatrix {
            size,
            kind,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> Option<StirlingKind> {
        self.kind
    }

    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        assert!(
            n < self.size && k < self.size,
            "index ({n}, {k}) out of range"
        );
        &self.entries[n * self.size + k]
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.entries[n * self.size..(n + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(k, v)| if n == k { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows()
            .enumerate()
            .all(|(n, row)| row[n + 1..].iter().all(Zero::is_zero))
    }

    /// `self * v` for a column vector of the same length.
    pub fn mul_vector(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: v.len(),
            });
        }
        Ok(self
            .rows()
            .enumerate()
            .map(|(n, row)| {
                row[..=n]
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

/// Truncation of the Stirling matrix of the given kind to `size` rows and
/// columns.
pub fn stirling_matrix(kind: StirlingKind, size: usize) -> TriangularMatrix {
    assert!(size >= 1, "matrix size must be positive");
    let rows = match kind {
        StirlingKind::FirstSigned => {
            let mut rows = Vec::with_capacity(size);
            let mut coeffs = vec![BigInt::one()];
            for n in 0..size {
                if n > 0 {
                    coeffs = times_x_minus(&coeffs, n - 1);
                }
                rows.push(coeffs.clone());
            }
            rows
        }
        StirlingKind::Second => (0..size).map(second_kind_row).collect(),
    };
    TriangularMatrix::from_rows(Some(kind), rows)
}

/// Exact product of two lower-triangular matrices of equal size.
pub fn matrix_product(a: &TriangularMatrix, b: &TriangularMatrix) -> Result<TriangularMatrix> {
    if a.size != b.size {
        return Err(Error::SizeMismatch {
            left: a.size,
            right: b.size,
        });
    }
    let n = a.size;
    let mut entries = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for j in 0..=i {
            let mut acc = BigInt::zero();
            for k in j..=i {
                acc += a.get(i, k) * b.get(k, j);
            }
            entries[i * n + j] = acc;
        }
    }
    Ok(TriangularMatrix {
        size: n,
        kind: None,
        entries,
    })
}

/// Stirling triangle of the given kind reduced modulo `modulus`, as `size`
/// full rows. Works directly on residues so sizes in the thousands stay cheap.
///
/// The second kind uses `S(n,k) = k S(n-1,k) + S(n-1,k-1)` here because the
/// explicit sum divides by `k!`, which has no inverse modulo a general `m`.
pub fn stirling_matrix_mod(kind: StirlingKind, size: usize, modulus: u64) -> Vec<Vec<u64>> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as u128;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(size);
    let mut prev = vec![0u64; size];
    for n in 0..size {
        let mut row = vec![0u64; size];
        if n == 0 {
            row[0] = (1 % m) as u64;
        } else {
            for k in 1..=n {
                let carry = prev[k - 1] as u128;
                let stay = prev[k] as u128;
                row[k] = match kind {
                    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
                    StirlingKind::FirstSigned => {
                        let shift = (n as u128 - 1) % m;
                        (carry + (m - shift) % m * stay) % m
                    }
                    StirlingKind::Second => (carry + (k as u128 % m) * stay) % m,
                } as u64;
            }
        }
        prev.clone_from(&row);
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    // s(n+1,k) = s(n,k-1) - n s(n,k)
    fn first_kind_by_recurrence(max: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::zero(); max + 1]; max + 1];
        t[0][0] = BigInt::one();
        for n in 0..max {
            for k in 1..=n + 1 {
                t[n + 1][k] = &t[n][k - 1] - BigInt::from(n) * &t[n][k];
            }
        }
        t
    }

    // S(n+1,k) = k S(n,k) + S(n,k-1)
    fn second_kind_by_recurrence(max: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::zero(); max + 1]; max + 1];
        t[0][0] = BigInt::one();
        for n in 0..max {
            for k in 1..=n + 1 {
                t[n + 1][k] = BigInt::from(k) * &t[n][k] + &t[n][k - 1];
            }
        }
        t
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(stirling_first_signed(3, 3), BigInt::from(1));
        assert_eq!(stirling_first_signed(3, 2), BigInt::from(-3));
        assert_eq!(stirling_first_signed(4, 0), BigInt::from(0));
        assert_eq!(stirling_first_signed(0, 0), BigInt::from(1));
        assert_eq!(stirling_first_signed(2, 5), BigInt::from(0));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(stirling_second(3, 2), BigInt::from(3));
        assert_eq!(stirling_second(5, 1), BigInt::from(1));
        assert_eq!(stirling_second(4, 4), BigInt::from(1));
        assert_eq!(stirling_second(0, 0), BigInt::from(1));
        assert_eq!(stirling_second(3, 0), BigInt::from(0));
        assert_eq!(stirling_second(3, 7), BigInt::from(0));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial_coefficients(0), ints(&[1]));
        assert_eq!(falling_factorial_coefficients(2), ints(&[0, -1, 1]));
        assert_eq!(falling_factorial_coefficients(3), ints(&[0, 2, -3, 1]));
    }

    #[test]
    fn explicit_formulas_match_recurrences() {
        let first = first_kind_by_recurrence(30);
        let second = second_kind_by_recurrence(30);
        for n in 0..=30 {
            assert_eq!(
                falling_factorial_coefficients(n)[..],
                first[n][..=n],
                "row {n}"
            );
            assert_eq!(second_kind_row(n)[..], second[n][..=n], "row {n}");
        }
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(stirling_second(n, k), second[n][k]);
            }
        }
    }

    #[test]
    fn first_kind_sign_structure() {
        for n in 0..=20 {
            for (k, v) in falling_factorial_coefficients(n).iter().enumerate() {
                let expected_negative = (n - k) % 2 == 1;
                assert!(v.is_zero() || (v.sign() == num_bigint::Sign::Minus) == expected_negative);
            }
        }
    }

    #[test]
    fn small_matrices() {
        let m = stirling_matrix(StirlingKind::FirstSigned, 1);
        assert!(m.is_identity());
        let second = stirling_matrix(StirlingKind::Second, 3);
        let rows: Vec<Vec<BigInt>> = second.rows().map(<[BigInt]>::to_vec).collect();
        assert_eq!(rows, [ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 1, 1])]);
        let first = stirling_matrix(StirlingKind::FirstSigned, 3);
        let rows: Vec<Vec<BigInt>> = first.rows().map(<[BigInt]>::to_vec).collect();
        assert_eq!(
            rows,
            [ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, -1, 1])]
        );
        assert_eq!(first.kind(), Some(StirlingKind::FirstSigned));
    }

    #[test]
    fn matrix_invariants() {
        for kind in [StirlingKind::FirstSigned, StirlingKind::Second] {
            let m = stirling_matrix(kind, 15);
            assert!(m.is_lower_triangular());
            assert!((0..15).all(|n| m.get(n, n).is_one()));
        }
    }

    #[test]
    fn inverse_pair() {
        for size in 1..=30 {
            let s = stirling_matrix(StirlingKind::FirstSigned, size);
            let big_s = stirling_matrix(StirlingKind::Second, size);
            assert!(
                matrix_product(&s, &big_s).unwrap().is_identity(),
                "N = {size}"
            );
            assert!(
                matrix_product(&big_s, &s).unwrap().is_identity(),
                "N = {size}"
            );
        }
    }

    #[test]
    fn product_size_mismatch() {
        let a = stirling_matrix(StirlingKind::FirstSigned, 2);
        let b = stirling_matrix(StirlingKind::Second, 3);
        assert_eq!(
            matrix_product(&a, &b),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
        assert!(a.mul_vector(&ints(&[1])).is_err());
    }

    #[test]
    fn residue_matrices_match_exact() {
        for kind in [StirlingKind::FirstSigned, StirlingKind::Second] {
            let exact = stirling_matrix(kind, 40);
            for modulus in [1u64, 2, 3, 7, 10, 36] {
                let residues = stirling_matrix_mod(kind, 40, modulus);
                for n in 0..40 {
                    for k in 0..40 {
                        let expected = exact.get(n, k).mod_floor(&BigInt::from(modulus));
                        assert_eq!(
                            BigInt::from(residues[n][k]),
                            expected,
                            "{kind} {n},{k} mod {modulus}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn first_kind_mod_two() {
        // s(3,1) = 2 vanishes mod 2
        let rows = stirling_matrix_mod(StirlingKind::FirstSigned, 4, 2);
        assert_eq!(
            rows,
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
        );
    }
}
