//! Brute-force enumerators used as ground truth for every closed form.
//!
//! Weak orderings are built by inserting elements `0, 1, ..., n-1` in turn:
//! each new element either joins one of the `k` existing blocks or opens a
//! new singleton block in one of the `k + 1` gaps. Every ordered set
//! partition arises from exactly one sequence of choices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest `n` accepted by the weak-ordering and permutation enumerators.
pub const MAX_ORDERING_ELEMENTS: usize = 9;
/// Largest `n` accepted by the set-partition enumerator.
pub const MAX_PARTITION_ELEMENTS: usize = 12;
/// Largest `n` accepted by [`verify_counting_lemma`].
pub const MAX_LEMMA_ELEMENTS: usize = 7;

/// An ordered set partition of `{0, ..., n-1}`: tied elements share a block
/// and earlier blocks finish earlier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WeakOrdering {
    blocks: Vec<Vec<usize>>,
}

impl WeakOrdering {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    /// Number of elements ordered.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Rank of each element, i.e. the index of the block holding it.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.len()];
        for (rank, block) in self.blocks.iter().enumerate() {
            for &e in block {
                ranks[e] = rank;
            }
        }
        ranks
    }
}

impl fmt::Display for WeakOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("]")
    }
}

fn check_ceiling(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::EnumerationTooLarge { n, max })
    } else {
        Ok(())
    }
}

// Placement of one element: join block `c` when `c < k`, otherwise open a new
// block in gap `c - k`.
fn place(blocks: &mut Vec<Vec<usize>>, element: usize, choice: usize) {
    let k = blocks.len();
    if choice < k {
        blocks[choice].push(element);
    } else {
        blocks.insert(choice - k, vec![element]);
    }
}

/// Streams every weak ordering of `n` elements exactly once.
#[derive(Clone, Debug)]
pub struct WeakOrderings {
    n: usize,
    current: WeakOrdering,
    // choice made for each placed element
    choices: Vec<usize>,
    started: bool,
    done: bool,
}

impl WeakOrderings {
    fn new(n: usize) -> Self {
        WeakOrderings {
            n,
            current: WeakOrdering::default(),
            choices: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn fill(&mut self) {
        while self.choices.len() < self.n {
            let e = self.choices.len();
            place(&mut self.current.blocks, e, 0);
            self.choices.push(0);
        }
    }

    /// Moves to the next ordering in place; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return true;
        }
        while let Some(choice) = self.choices.pop() {
            let e = self.choices.len();
            let blocks = &mut self.current.blocks;
            // undo element e
            let k_after = blocks.len();
            let opened = blocks.iter().position(|b| b.len() == 1 && b[0] == e);
            let k_before = if opened.is_some() {
                k_after - 1
            } else {
                k_after
            };
            match opened {
                Some(i) => {
                    blocks.remove(i);
                }
                None => {
                    blocks[choice].pop();
                }
            }
            let next = choice + 1;
            if next < 2 * k_before + 1 {
                place(blocks, e, next);
                self.choices.push(next);
                self.fill();
                return true;
            }
        }
        self.done = true;
        false
    }

    /// The ordering the stream currently points at.
    pub fn current(&self) -> &WeakOrdering {
        &self.current
    }
}

impl Iterator for WeakOrderings {
    type Item = WeakOrdering;

    fn next(&mut self) -> Option<WeakOrdering> {
        if self.advance() {
            Some(self.current.clone())
        } else {
            None
        }
    }
}

/// All weak orderings (ordered set partitions) of `{0, ..., n-1}`.
pub fn enumerate_weak_orderings(n: usize) -> Result<WeakOrderings> {
    check_ceiling(n, MAX_ORDERING_ELEMENTS)?;
    Ok(WeakOrderings::new(n))
}

/// Calls `visit` on every weak ordering of `n` elements without cloning.
pub fn for_each_weak_ordering<F: FnMut(&WeakOrdering)>(n: usize, mut visit: F) -> Result<()> {
    let mut stream = enumerate_weak_orderings(n)?;
    while stream.advance() {
        visit(stream.current());
    }
    Ok(())
}

/// Number of weak orderings of `n` elements, by enumeration.
pub fn count_weak_orderings(n: usize) -> Result<u64> {
    let mut count = 0;
    for_each_weak_ordering(n, |_| count += 1)?;
    Ok(count)
}

/// How the marked elements `0, ..., r-1` are constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RiggedMode {
    /// No two marked elements tie (counted by `F_r(n)`).
    RelativeStrong,
    /// Marked elements appear in strictly increasing block order (counted by
    /// `H_r(n)`).
    Prescribed,
}

fn satisfies(ordering: &WeakOrdering, marked: &[usize], mode: RiggedMode) -> bool {
    // marked elements are < MAX_ORDERING_ELEMENTS + 1
    let mut rank = [usize::MAX; MAX_ORDERING_ELEMENTS + 1];
    for (i, block) in ordering.blocks.iter().enumerate() {
        for &e in block {
            rank[e] = i;
        }
    }
    match mode {
        RiggedMode::Prescribed => marked.windows(2).all(|w| rank[w[0]] < rank[w[1]]),
        RiggedMode::RelativeStrong => {
            let mut used = [false; MAX_ORDERING_ELEMENTS + 1];
            marked
                .iter()
                .all(|&e| !core::mem::replace(&mut used[rank[e]], true))
        }
    }
}

/// Weak orderings of `n` elements in which the marked elements `0..r` obey
/// `mode`.
pub fn count_rigged(n: usize, r: usize, mode: RiggedMode) -> Result<u64> {
    if r > n {
        return Err(Error::IndexBelowRank { n, r });
    }
    let marked: Vec<usize> = (0..r).collect();
    let mut count = 0;
    for_each_weak_ordering(n, |o| {
        if satisfies(o, &marked, mode) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Visits all permutations of `0..n` (Heap's algorithm, iterative).
fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut visit: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// `(-1)^(n-k)` times the number of permutations of `n` elements with `k`
/// cycles, for every `k` in `0..=n`.
pub fn signed_cycle_counts(n: usize) -> Result<Vec<i64>> {
    check_ceiling(n, MAX_ORDERING_ELEMENTS)?;
    let mut counts = vec![0i64; n + 1];
    for_each_permutation(n, |p| counts[cycle_count(p)] += 1);
    for (k, c) in counts.iter_mut().enumerate() {
        if (n - k) % 2 == 1 {
            *c = -*c;
        }
    }
    Ok(counts)
}

/// Signed count of permutations of `n` elements with exactly `k` cycles.
pub fn count_cycles_signed(n: usize, k: usize) -> Result<i64> {
    let counts = signed_cycle_counts(n)?;
    Ok(counts.get(k).copied().unwrap_or(0))
}

/// Number of set partitions of `n` elements into exactly `k` blocks, for
/// every `k` in `0..=n`, by walking restricted growth strings.
pub fn set_partition_counts(n: usize) -> Result<Vec<u64>> {
    check_ceiling(n, MAX_PARTITION_ELEMENTS)?;
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    // a[i] <= 1 + max(a[..i]), a[0] = 0
    let mut a = vec![0usize; n];
    let mut prefix_max = vec![0usize; n];
    loop {
        counts[prefix_max[n - 1] + 1] += 1;
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(counts);
            }
            if a[i] <= prefix_max[i - 1] {
                a[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(a[i]);
                for j in i + 1..n {
                    a[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Number of set partitions of `n` elements into `k` unordered blocks.
pub fn count_set_partitions(n: usize, k: usize) -> Result<u64> {
    let counts = set_partition_counts(n)?;
    Ok(counts.get(k).copied().unwrap_or(0))
}

/// Checks by enumeration that adding an element to an `n`-element set, where
/// the new element may not tie with any of the first `m` (themselves pairwise
/// untied), gives `G(n+1) - m·G(n)` orderings, with `G(j)` the number of
/// orderings of `j` elements whose first `m` are pairwise untied.
pub fn verify_counting_lemma(n: usize, m: usize) -> Result<bool> {
    if m > n {
        return Err(Error::IndexBelowRank { n, r: m });
    }
    check_ceiling(n, MAX_LEMMA_ELEMENTS)?;
    let g_next = count_rigged(n + 1, m, RiggedMode::RelativeStrong)?;
    let g = count_rigged(n, m, RiggedMode::RelativeStrong)?;

    // first m and the new element n pairwise untied
    let marked: Vec<usize> = (0..m).chain(core::iter::once(n)).collect();
    let mut direct = 0u64;
    for_each_weak_ordering(n + 1, |o| {
        if satisfies(o, &marked, RiggedMode::RelativeStrong) {
            direct += 1;
        }
    })?;
    Ok(direct as i128 == g_next as i128 - m as i128 * g as i128)
}

/// Exponent of the unit group modulo `modulus`: the lcm of the
/// multiplicative orders of all units, found by repeated multiplication.
pub fn multiplicative_group_exponent(modulus: u64) -> u64 {
    if modulus <= 2 {
        return 1;
    }
    let mut exponent = 1u64;
    for a in 1..modulus {
        if a.gcd(&modulus) != 1 {
            continue;
        }
        let mut order = 1u64;
        let mut x = a;
        while x != 1 {
            x = (x as u128 * a as u128 % modulus as u128) as u64;
            order += 1;
        }
        exponent = exponent.lcm(&order);
    }
    exponent
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn small_enumerations() {
        let empty: Vec<WeakOrdering> = enumerate_weak_orderings(0).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());

        let two: BTreeSet<Vec<Vec<usize>>> = enumerate_weak_orderings(2)
            .unwrap()
            .map(WeakOrdering::into_blocks)
            .collect();
        let expected: BTreeSet<Vec<Vec<usize>>> = [
            vec![vec![0, 1]],
            vec![vec![0], vec![1]],
            vec![vec![1], vec![0]],
        ]
        .into_iter()
        .collect();
        assert_eq!(two, expected);

        assert_eq!(count_weak_orderings(4).unwrap(), 75);
        assert_eq!(
            enumerate_weak_orderings(10).err(),
            Some(Error::EnumerationTooLarge { n: 10, max: 9 })
        );
    }

    #[test]
    fn orderings_are_valid_and_distinct() {
        for n in 0..=6 {
            let mut seen = BTreeSet::new();
            for o in enumerate_weak_orderings(n).unwrap() {
                assert!(o.blocks().iter().all(|b| !b.is_empty()));
                let mut all: Vec<usize> = o.blocks().iter().flatten().copied().collect();
                all.sort_unstable();
                assert_eq!(all, (0..n).collect::<Vec<_>>());
                assert!(seen.insert(o.ranks()), "duplicate {o}");
            }
        }
    }

    #[test]
    fn rigged_examples() {
        for n in 0..=5 {
            let total = count_weak_orderings(n).unwrap();
            assert_eq!(count_rigged(n, 0, RiggedMode::Prescribed).unwrap(), total);
            assert_eq!(
                count_rigged(n, 0, RiggedMode::RelativeStrong).unwrap(),
                total
            );
        }
        assert_eq!(count_rigged(3, 2, RiggedMode::Prescribed).unwrap(), 5);
        assert_eq!(count_rigged(3, 2, RiggedMode::RelativeStrong).unwrap(), 10);
        assert_eq!(
            count_rigged(2, 3, RiggedMode::Prescribed),
            Err(Error::IndexBelowRank { n: 2, r: 3 })
        );
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(count_cycles_signed(3, 3).unwrap(), 1);
        assert_eq!(count_cycles_signed(3, 2).unwrap(), -3);
        assert_eq!(count_cycles_signed(4, 1).unwrap(), -6);
        assert_eq!(count_cycles_signed(0, 0).unwrap(), 1);
        assert_eq!(count_cycles_signed(3, 5).unwrap(), 0);
        let total: i64 = signed_cycle_counts(6)
            .unwrap()
            .iter()
            .map(|c| c.abs())
            .sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn partition_examples() {
        assert_eq!(count_set_partitions(4, 4).unwrap(), 1);
        assert_eq!(count_set_partitions(3, 2).unwrap(), 3);
        assert_eq!(count_set_partitions(5, 2).unwrap(), 15);
        assert_eq!(count_set_partitions(0, 0).unwrap(), 1);
        // Bell numbers
        let bells: Vec<u64> = (0..=8)
            .map(|n| set_partition_counts(n).unwrap().iter().sum())
            .collect();
        assert_eq!(bells, [1, 1, 2, 5, 15, 52, 203, 877, 4140]);
        assert!(count_set_partitions(13, 2).is_err());
    }

    #[test]
    fn lemma_examples() {
        for n in 0..=4 {
            assert!(verify_counting_lemma(n, 0).unwrap());
        }
        assert!(verify_counting_lemma(2, 1).unwrap());
        assert!(verify_counting_lemma(3, 2).unwrap());
        assert_eq!(
            verify_counting_lemma(1, 2),
            Err(Error::IndexBelowRank { n: 1, r: 2 })
        );
    }

    #[test]
    fn group_exponent_examples() {
        assert_eq!(multiplicative_group_exponent(2), 1);
        assert_eq!(multiplicative_group_exponent(8), 2);
        assert_eq!(multiplicative_group_exponent(15), 4);
        assert_eq!(multiplicative_group_exponent(7), 6);
    }
}
