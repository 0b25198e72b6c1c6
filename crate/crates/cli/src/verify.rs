//! Verification suites behind `fubini verify`.
//!
//! Each suite is a list of independent checks. `all` runs the suites on
//! separate threads and merges the results sorted by check name.

use std::thread;

use clap::ValueEnum;
use fubini_core::number_theory::verify_exponent_properties;
use fubini_core::oracle::{
    count_rigged, count_weak_orderings, multiplicative_group_exponent, set_partition_counts,
    signed_cycle_counts, verify_counting_lemma, RiggedMode, MAX_LEMMA_ELEMENTS,
    MAX_ORDERING_ELEMENTS, MAX_PARTITION_ELEMENTS,
};
use fubini_core::periodicity::{analyze, fubini_mod_sequence};
use fubini_core::sequences::{
    factorials, fubini, fubini_alternating, fubini_r_by_operator, fubini_r_with, horse_r_with,
    transform_strong_to_weak, transform_weak_to_strong,
};
use fubini_core::stirling::{
    falling_factorial_coefficients, matrix_product, second_kind_row, stirling_matrix, StirlingKind,
};
use fubini_core::{carmichael, BigInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Matrix,
    Periodicity,
    Lemma,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Matrix => "matrix",
            Suite::Periodicity => "periodicity",
            Suite::Lemma => "lemma",
            Suite::All => "all",
        }
    }

    pub fn default_limit(self) -> usize {
        match self {
            Suite::Oracle => 8,
            Suite::Matrix => 30,
            Suite::Periodicity => 200,
            Suite::Lemma => MAX_LEMMA_ELEMENTS,
            Suite::All => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub cases: u64,
    pub detail: String,
}

/// Accumulates comparisons for one check and keeps the first failure.
struct Tally {
    name: String,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.to_owned(),
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.check(false, || msg);
    }

    fn finish(self, summary: String) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure.unwrap_or(summary),
        }
    }
}

pub fn run(suite: Suite, limit: Option<usize>) -> Vec<CheckResult> {
    let mut results = match suite {
        Suite::Oracle => oracle_suite(limit.unwrap_or(suite.default_limit())),
        Suite::Matrix => matrix_suite(limit.unwrap_or(suite.default_limit())),
        Suite::Periodicity => periodicity_suite(limit.unwrap_or(suite.default_limit())),
        Suite::Lemma => lemma_suite(limit.unwrap_or(suite.default_limit())),
        Suite::All => thread::scope(|scope| {
            let handles: Vec<_> = [
                Suite::Oracle,
                Suite::Matrix,
                Suite::Periodicity,
                Suite::Lemma,
            ]
            .into_iter()
            .map(|s| scope.spawn(move || run(s, limit)))
            .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("verification thread panicked"))
                .collect()
        }),
    };
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

fn oracle_suite(limit: usize) -> Vec<CheckResult> {
    let ordering_max = limit.min(MAX_ORDERING_ELEMENTS);
    let rigged_max = limit.min(MAX_LEMMA_ELEMENTS);
    let partition_max = limit.min(MAX_PARTITION_ELEMENTS);
    let f = fubini(ordering_max + 1);

    let mut weak = Tally::new("oracle.weak_orderings");
    for n in 0..=ordering_max {
        match count_weak_orderings(n) {
            Ok(c) => weak.check(BigInt::from(c) == f.values()[n], || {
                format!("n={n}: counted {c}")
            }),
            Err(e) => weak.fail(e.to_string()),
        }
    }

    let mut rigged = Tally::new("oracle.rigged");
    for n in 0..=rigged_max {
        for r in 0..=n {
            let strong = count_rigged(n, r, RiggedMode::RelativeStrong);
            let prescribed = count_rigged(n, r, RiggedMode::Prescribed);
            match (
                strong,
                prescribed,
                fubini_r_with(&f, n, r),
                horse_r_with(&f, n, r),
            ) {
                (Ok(s), Ok(p), Ok(fr), Ok(hr)) => {
                    rigged.check(BigInt::from(s) == fr, || {
                        format!("F_{r}({n}): counted {s}, formula {fr}")
                    });
                    rigged.check(BigInt::from(p) == hr, || {
                        format!("H_{r}({n}): counted {p}, formula {hr}")
                    });
                }
                _ => rigged.fail(format!("evaluation failed at n={n} r={r}")),
            }
        }
    }

    let mut cycles = Tally::new("oracle.stirling_first");
    for n in 0..=ordering_max {
        let coeffs = falling_factorial_coefficients(n);
        match signed_cycle_counts(n) {
            Ok(counts) => {
                for k in 0..=n {
                    cycles.check(BigInt::from(counts[k]) == coeffs[k], || {
                        format!("s({n},{k})")
                    });
                }
            }
            Err(e) => cycles.fail(e.to_string()),
        }
    }

    let mut partitions = Tally::new("oracle.stirling_second");
    for n in 0..=partition_max {
        let row = second_kind_row(n);
        match set_partition_counts(n) {
            Ok(counts) => {
                for k in 0..=n {
                    partitions.check(BigInt::from(counts[k]) == row[k], || format!("S({n},{k})"));
                }
            }
            Err(e) => partitions.fail(e.to_string()),
        }
    }

    vec![
        weak.finish(format!("n <= {ordering_max}")),
        rigged.finish(format!("r <= n <= {rigged_max}")),
        cycles.finish(format!("n <= {ordering_max}")),
        partitions.finish(format!("n <= {partition_max}")),
    ]
}

fn matrix_suite(limit: usize) -> Vec<CheckResult> {
    let size = limit.max(1);
    let first = stirling_matrix(StirlingKind::FirstSigned, size);
    let second = stirling_matrix(StirlingKind::Second, size);

    let mut inverse = Tally::new("matrix.inverse_pair");
    for (label, a, b) in [("s*S", &first, &second), ("S*s", &second, &first)] {
        match matrix_product(a, b) {
            Ok(p) => inverse.check(p.is_identity(), || format!("{label} != I at N={size}")),
            Err(e) => inverse.fail(e.to_string()),
        }
    }

    let mut dual = Tally::new("matrix.falling_factorial");
    for r in 0..size {
        let coeffs = falling_factorial_coefficients(r);
        for k in 0..=r {
            dual.check(&coeffs[k] == first.get(r, k), || format!("s({r},{k})"));
        }
    }

    let mut transform = Tally::new("matrix.transforms");
    let fact = factorials(size);
    match transform_strong_to_weak(&fact, size) {
        Ok(weak) => {
            transform.check(weak.values() == fubini(size).values(), || "S f != F".into());
            transform.check(weak.values() == fubini_alternating(size).values(), || {
                "S f disagrees with the alternating recurrence".into()
            });
            match transform_weak_to_strong(&weak, size) {
                Ok(strong) => {
                    transform.check(strong.values() == fact.values(), || "s F != f".into())
                }
                Err(e) => transform.fail(e.to_string()),
            }
        }
        Err(e) => transform.fail(e.to_string()),
    }

    let mut operator = Tally::new("matrix.shift_operator");
    let op_max = size.min(25);
    let f = fubini(op_max + 1);
    for n in 0..=op_max {
        for r in 0..=n {
            match (fubini_r_with(&f, n, r), fubini_r_by_operator(&f, n, r)) {
                (Ok(a), Ok(b)) => operator.check(a == b, || format!("F_{r}({n}): {a} vs {b}")),
                _ => operator.fail(format!("evaluation failed at n={n} r={r}")),
            }
        }
    }

    vec![
        inverse.finish(format!("N = {size}")),
        dual.finish(format!("r < {size}")),
        transform.finish(format!("N = {size}")),
        operator.finish(format!("r <= n <= {op_max}")),
    ]
}

fn periodicity_suite(limit: usize) -> Vec<CheckResult> {
    let k_max = limit.max(2) as u64;

    let mut bound = Tally::new("periodicity.fubini_bound");
    let mut odd = Tally::new("periodicity.odd_exact");
    for k in 2..=k_max {
        match analyze(k, 0) {
            Ok(rep) => {
                bound.check(
                    rep.period_divides_carmichael && rep.onset_within_bound,
                    || format!("K={k}: period {} onset {}", rep.period, rep.onset),
                );
                if k % 2 == 1 {
                    odd.check(rep.period == rep.carmichael, || format!("K={k}"));
                }
            }
            Err(e) => bound.fail(format!("K={k}: {e}")),
        }
    }

    let mut rigged = Tally::new("periodicity.rigged_bound");
    let rigged_max = k_max.min(60);
    for k in 2..=rigged_max {
        for r in 1..=5 {
            match analyze(k, r) {
                Ok(rep) => rigged.check(
                    rep.period_divides_carmichael && rep.onset_within_bound,
                    || format!("K={k} r={r}: period {} onset {}", rep.period, rep.onset),
                ),
                Err(e) => rigged.fail(format!("K={k} r={r}: {e}")),
            }
        }
    }

    let mut residues = Tally::new("periodicity.residue_path");
    let residue_max = k_max.min(30);
    let f = fubini(200);
    for k in 1..=residue_max {
        match fubini_mod_sequence(k, 200) {
            Ok(seq) => {
                let m = BigInt::from(k);
                for (n, v) in f.iter() {
                    residues.check(BigInt::from(seq[n]) == (v % &m), || format!("K={k} n={n}"));
                }
            }
            Err(e) => residues.fail(e.to_string()),
        }
    }

    let mut lambda = Tally::new("periodicity.carmichael");
    let exponent_max = k_max.min(2000);
    for k in 2..=exponent_max {
        match carmichael(k) {
            Ok(l) => lambda.check(l == multiplicative_group_exponent(k), || format!("K={k}")),
            Err(e) => lambda.fail(e.to_string()),
        }
        lambda.check(verify_exponent_properties(k).unwrap_or(false), || {
            format!("exponent identities fail at K={k}")
        });
    }

    vec![
        bound.finish(format!("2 <= K <= {k_max}")),
        odd.finish(format!("odd K <= {k_max}")),
        rigged.finish(format!("2 <= K <= {rigged_max}, 1 <= r <= 5")),
        residues.finish(format!("K <= {residue_max}, N = 200")),
        lambda.finish(format!("2 <= K <= {exponent_max}")),
    ]
}

fn lemma_suite(limit: usize) -> Vec<CheckResult> {
    let n_max = limit.min(MAX_LEMMA_ELEMENTS);
    let mut lemma = Tally::new("lemma.counting");
    for n in 0..=n_max {
        for m in 0..=n {
            match verify_counting_lemma(n, m) {
                Ok(ok) => lemma.check(ok, || format!("n={n} m={m}")),
                Err(e) => lemma.fail(e.to_string()),
            }
        }
    }
    vec![lemma.finish(format!("m <= n <= {n_max}"))]
}
