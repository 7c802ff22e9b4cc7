//! Binomial coefficients, Stirling numbers of the second kind and Eulerian
//! numbers over arbitrary-precision integers.
//!
//! Stirling and Eulerian tables live in a process-wide [`CombCache`]. Rows
//! are appended under a write lock and never modified afterwards, so readers
//! only ever see complete, immutable entries.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle, `C(n, 0..=n)`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `base^exp` with the convention `0^0 = 1`.
fn ipow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `S(n, m)` from the alternating sum
/// `((-1)^m / m!) Σ_{l=0}^{m} (-1)^l C(m,l) l^n`.
pub fn stirling2_alternating(n: u64, m: u64) -> Result<BigInt> {
    if m > n {
        return Ok(BigInt::zero());
    }
    let row = binomial_row(m);
    let mut sum = BigInt::zero();
    for (l, c) in row.iter().enumerate() {
        let term = c * ipow(l as i64, n as u32);
        if (l + m as usize).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(m));
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "Stirling alternating sum for S({n},{m}) not divisible by {m}!"
        )));
    }
    if q.is_negative() {
        return Err(Error::Internal(format!("negative S({n},{m})")));
    }
    Ok(q)
}

/// `⟨r, j⟩` from `Σ_{l=0}^{j+1} (-1)^l C(r+1,l) (j-l+1)^r`, for `r ≥ 1`.
fn eulerian_formula(r: u64, j: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for l in 0..=j + 1 {
        let term = binomial(r + 1, l as i64) * ipow((j + 1 - l) as i64, r as u32);
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Lazily grown Stirling-2 and Eulerian tables.
#[derive(Debug, Default)]
pub struct CombCache {
    stirling: RwLock<Vec<Vec<BigInt>>>,
    eulerian: RwLock<Vec<Vec<BigInt>>>,
}

impl CombCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The shared process-wide cache.
    pub fn global() -> &'static CombCache {
        static CACHE: OnceLock<CombCache> = OnceLock::new();
        CACHE.get_or_init(CombCache::new)
    }

    /// `S(n, m)`; zero for `m > n`.
    pub fn stirling2(&self, n: u64, m: u64) -> BigInt {
        if m > n {
            return BigInt::zero();
        }
        {
            let table = self.stirling.read().expect("stirling cache poisoned");
            if let Some(row) = table.get(n as usize) {
                return row[m as usize].clone();
            }
        }
        self.grow_stirling(n);
        self.stirling.read().expect("stirling cache poisoned")[n as usize][m as usize].clone()
    }

    fn grow_stirling(&self, n: u64) {
        let mut table = self.stirling.write().expect("stirling cache poisoned");
        let start = table.len() as u64;
        for row_n in start..=n {
            let row: Vec<BigInt> = (0..=row_n)
                .map(|m| stirling2_alternating(row_n, m).expect("Stirling alternating sum"))
                .collect();
            // Cross-check the new row against the triangle recurrence.
            if row_n > 0 {
                let prev = &table[row_n as usize - 1];
                for m in 0..=row_n as usize {
                    let from_prev = if m < row_n as usize {
                        &prev[m] * BigInt::from(m)
                    } else {
                        BigInt::zero()
                    } + if m >= 1 { prev[m - 1].clone() } else { BigInt::zero() };
                    assert_eq!(
                        row[m], from_prev,
                        "Stirling table disagrees with the recurrence at S({row_n},{m})"
                    );
                }
            }
            table.push(row);
        }
    }

    /// `⟨r, j⟩`; zero outside `0 ≤ j ≤ max(r-1, 0)`.
    pub fn eulerian(&self, r: u64, j: i64) -> BigInt {
        if j < 0 || j as u64 > r.saturating_sub(1) {
            return BigInt::zero();
        }
        {
            let table = self.eulerian.read().expect("eulerian cache poisoned");
            if let Some(row) = table.get(r as usize) {
                return row[j as usize].clone();
            }
        }
        let mut table = self.eulerian.write().expect("eulerian cache poisoned");
        let start = table.len() as u64;
        for row_r in start..=r {
            let row = if row_r == 0 {
                // The empty permutation has no ascents.
                vec![BigInt::one()]
            } else {
                (0..row_r).map(|jj| eulerian_formula(row_r, jj)).collect()
            };
            table.push(row);
        }
        table[r as usize][j as usize].clone()
    }
}

/// `S(n, m)` through the global cache.
pub fn stirling2(n: u64, m: u64) -> BigInt {
    CombCache::global().stirling2(n, m)
}

/// `⟨r, j⟩` through the global cache.
pub fn eulerian(r: u64, j: i64) -> BigInt {
    CombCache::global().eulerian(r, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_partitions(n: usize, blocks: usize) -> u64 {
        // Restricted growth strings.
        fn go(i: usize, n: usize, max: usize, blocks: usize, used: usize) -> u64 {
            if i == n {
                return (used == blocks) as u64;
            }
            (0..=max.min(blocks - 1))
                .map(|b| {
                    let used2 = if b == max { used + 1 } else { used };
                    go(i + 1, n, if b == max { max + 1 } else { max }, blocks, used2)
                })
                .sum()
        }
        if n == 0 {
            return (blocks == 0) as u64;
        }
        if blocks == 0 {
            return 0;
        }
        go(0, n, 0, blocks, 0)
    }

    fn ascent_counts(r: usize) -> Vec<u64> {
        fn permute(v: &mut Vec<usize>, k: usize, counts: &mut Vec<u64>) {
            if k == v.len() {
                let asc = v.windows(2).filter(|w| w[0] < w[1]).count();
                counts[asc] += 1;
                return;
            }
            for i in k..v.len() {
                v.swap(k, i);
                permute(v, k + 1, counts);
                v.swap(k, i);
            }
        }
        let mut counts = vec![0u64; r.max(1)];
        let mut v: Vec<usize> = (0..r).collect();
        permute(&mut v, 0, &mut counts);
        counts
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 7), BigInt::from(0));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        // Pascal recurrence oracle
        let mut row = vec![BigInt::one()];
        for _ in 0..4 {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        assert_eq!(row[2], BigInt::from(6));
        assert_eq!(binomial(4, 2), row[2]);
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=30u64 {
            let row = binomial_row(n);
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), binomial(n, (n - k) as i64));
                assert_eq!(row[k as usize], binomial(n, k as i64));
            }
        }
    }

    #[test]
    fn stirling_examples_match_enumeration() {
        assert_eq!(stirling2(3, 3), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(set_partitions(3, 2)));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(set_partitions(4, 2)));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
        assert_eq!(stirling2(2, 5), BigInt::from(0));
        for n in 0..=7 {
            for m in 0..=n {
                assert_eq!(stirling2(n as u64, m as u64), BigInt::from(set_partitions(n, m)));
            }
        }
    }

    #[test]
    fn stirling_matches_recurrence_to_20() {
        let mut prev = vec![BigInt::one()];
        for n in 1..=20u64 {
            let mut row = vec![BigInt::zero(); n as usize + 1];
            for m in 1..=n as usize {
                let keep = if m < prev.len() { &prev[m] * m } else { BigInt::zero() };
                row[m] = keep + &prev[m - 1];
            }
            for m in 0..=n {
                assert_eq!(stirling2_alternating(n, m).unwrap(), row[m as usize]);
            }
            prev = row;
        }
    }

    #[test]
    fn eulerian_examples_match_enumeration() {
        assert_eq!(eulerian(3, 0), BigInt::from(1));
        assert_eq!(eulerian(3, 1), BigInt::from(ascent_counts(3)[1]));
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!(eulerian(4, 2), BigInt::from(ascent_counts(4)[2]));
        assert_eq!(eulerian(4, 2), BigInt::from(11));
        assert_eq!(eulerian(4, 4), BigInt::from(0));
        assert_eq!(eulerian(4, -1), BigInt::from(0));
        assert_eq!(eulerian(0, 0), BigInt::from(1));
    }

    #[test]
    fn eulerian_row_sums_are_factorials() {
        for r in 1..=8u64 {
            let s: BigInt = (0..r as i64).map(|j| eulerian(r, j)).sum();
            assert_eq!(s, factorial(r));
            let counts = ascent_counts(r as usize);
            for (j, c) in counts.iter().enumerate() {
                assert_eq!(eulerian(r, j as i64), BigInt::from(*c));
            }
        }
    }

    #[test]
    fn eulerian_formula_vanishes_at_top() {
        for r in 1..=8u64 {
            assert!(eulerian_formula(r, r).is_zero());
        }
    }

    #[test]
    fn cache_is_shareable_across_threads() {
        let cache = std::sync::Arc::new(CombCache::new());
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let c = cache.clone();
                std::thread::spawn(move || c.stirling2(12 + t, 3) + c.eulerian(6 + t, 2))
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let t = t as u64;
            assert_eq!(
                h.join().unwrap(),
                stirling2_alternating(12 + t, 3).unwrap() + eulerian_formula(6 + t, 2)
            );
        }
    }
}
