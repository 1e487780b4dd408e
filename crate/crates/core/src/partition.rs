//! Integer partitions and the primitive operations on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest `n` that [`enumerate_partitions`] accepts without an explicit bound.
pub const DEFAULT_ENUMERATION_BOUND: usize = 120;

/// A weakly decreasing sequence of positive parts, largest first.
///
/// The empty sequence is the unique partition of zero. Parts are addressed
/// 1-based through [`Partition::part`], which reads zero past the last part.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts` and wraps them. The error names the first offending index (0-based).
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::InvalidPartition {
                    index: i,
                    reason: "parts must be positive".into(),
                });
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::InvalidPartition {
                    index: i,
                    reason: format!("part {p} exceeds the preceding part {}", parts[i - 1]),
                });
            }
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts that are weakly decreasing but may end in zeros.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_j` for `j ≥ 1`, zero beyond the last part.
    ///
    /// # Panics
    /// If `j == 0`.
    pub fn part(&self, j: usize) -> usize {
        assert!(j >= 1, "parts are indexed from 1");
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Smallest part `e(λ)`, or `None` for the empty partition.
    pub fn smallest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest());
        for j in 1..=self.largest() {
            // parts are sorted, so the count is a prefix length
            out.push(self.0.partition_point(|&p| p >= j));
        }
        Partition(out)
    }

    /// Smallest part at least the number of parts. The empty partition counts.
    pub fn is_rogers_ramanujan(&self) -> bool {
        match self.smallest() {
            None => true,
            Some(e) => e >= self.len(),
        }
    }

    /// Componentwise sum `(λ + μ)_j = λ_j + μ_j`.
    pub fn sum(&self, other: &Partition) -> Partition {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut parts = long.0.clone();
        for (p, q) in parts.iter_mut().zip(&short.0) {
            *p += q;
        }
        Partition(parts)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        parts.push(x);
                        a.next();
                    } else {
                        parts.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => {
                    parts.extend(a);
                    break;
                }
                (None, Some(_)) => {
                    parts.extend(b);
                    break;
                }
                (None, None) => break,
            }
        }
        Partition(parts)
    }

    /// Removes one occurrence of `value` (a no-op for `value == 0`).
    pub(crate) fn remove_part(&self, value: usize) -> Option<Partition> {
        if value == 0 {
            return Some(self.clone());
        }
        let pos = self.0.iter().position(|&p| p == value)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Inserts `value` keeping the order (a no-op for `value == 0`).
    pub(crate) fn insert_part(&self, value: usize) -> Partition {
        if value == 0 {
            return self.clone();
        }
        let pos = self.0.partition_point(|&p| p >= value);
        let mut parts = self.0.clone();
        parts.insert(pos, value);
        Partition(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses a comma-separated part list such as `5,5,4,1`. Surrounding
/// parentheses or brackets are accepted; an empty list is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition {
                        index: i,
                        reason: format!("`{}`: {e}", tok.trim()),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Streams partitions in reverse-lexicographic order: `(n)`, `(n-1,1)`, ... `(1,…,1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    /// Leading parts that stay fixed for the lifetime of the stream.
    locked: usize,
    started: bool,
    done: bool,
}

impl Partitions {
    /// All partitions of `n` whose parts are at most `max_part`.
    pub fn with_max_part(n: usize, max_part: usize) -> Self {
        if n > 0 && max_part == 0 {
            return Partitions {
                parts: Vec::new(),
                locked: 0,
                started: true,
                done: true,
            };
        }
        let mut parts = Vec::new();
        fill_greedy(&mut parts, n, max_part);
        Partitions {
            parts,
            locked: 0,
            started: false,
            done: false,
        }
    }

    /// All partitions of `n` whose largest part is exactly `largest`.
    ///
    /// For `n ≥ 1`, the streams for `largest = n, n-1, …, 1` concatenate to the
    /// full reverse-lexicographic stream; this is how exhaustive work is split.
    pub fn with_largest_part(n: usize, largest: usize) -> Self {
        if largest == 0 || largest > n {
            let empty_ok = n == 0 && largest == 0;
            return Partitions {
                parts: Vec::new(),
                locked: 0,
                started: false,
                done: !empty_ok,
            };
        }
        let mut parts = vec![largest];
        fill_greedy(&mut parts, n - largest, largest);
        Partitions {
            parts,
            locked: 1,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let Some(i) = self.parts[self.locked..]
            .iter()
            .rposition(|&p| p > 1)
            .map(|i| i + self.locked)
        else {
            return false;
        };
        let mut rem = self.parts.len() - i;
        self.parts[i] -= 1;
        let cap = self.parts[i];
        self.parts.truncate(i + 1);
        while rem > 0 {
            let x = cap.min(rem);
            self.parts.push(x);
            rem -= x;
        }
        true
    }
}

fn fill_greedy(parts: &mut Vec<usize>, mut rem: usize, cap: usize) {
    while rem > 0 {
        let x = cap.min(rem);
        parts.push(x);
        rem -= x;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Partition(self.parts.clone()))
    }
}

/// Every partition of `n`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    enumerate_partitions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(Error::ResourceLimit { n, bound });
    }
    Ok(Partitions::with_max_part(n, n))
}

/// `p(0), …, p(n_max)` by Euler's pentagonal recurrence.
pub fn partition_numbers(n_max: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| {
            debug_assert!(!v.is_negative());
            v.to_biguint().expect("partition numbers are non-negative")
        })
        .collect()
}

/// `p(n)`, the number of partitions of `n`.
pub fn count_p(n: usize) -> BigUint {
    partition_numbers(n).pop().expect("table has n + 1 entries")
}

/// `p(n)` for a possibly negative argument (zero there).
pub fn count_p_signed(n: i64) -> BigUint {
    match usize::try_from(n) {
        Ok(n) => count_p(n),
        Err(_) => BigUint::zero(),
    }
}

/// `q(n)`, the number of Rogers-Ramanujan partitions of `n`, by filtering the enumeration.
pub fn count_q(n: usize) -> Result<BigUint> {
    let count = enumerate_partitions(n)?
        .filter(Partition::is_rogers_ramanujan)
        .count();
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let lam = p(&[5, 5, 4, 1]);
        assert_eq!(lam.size(), 15);
        assert_eq!(lam.len(), 4);
        assert_eq!(Partition::new(vec![]).unwrap().size(), 0);
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition {
                index: 1,
                reason: "part 2 exceeds the preceding part 1".into()
            })
        );
        assert!(matches!(
            Partition::new(vec![3, 0]),
            Err(Error::InvalidPartition { index: 1, .. })
        ));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 5, 4, 1]).conjugate(), p(&[4, 3, 3, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn part_at_is_zero_extended() {
        let lam = p(&[5, 5, 4, 1]);
        assert_eq!(lam.part(3), 4);
        assert_eq!(lam.part(9), 0);
        assert_eq!(Partition::empty().part(1), 0);
    }

    #[test]
    fn rogers_ramanujan_predicate() {
        assert!(p(&[3]).is_rogers_ramanujan());
        assert!(!p(&[2, 1]).is_rogers_ramanujan());
        assert!(p(&[3, 2]).is_rogers_ramanujan());
        assert!(Partition::empty().is_rogers_ramanujan());
    }

    #[test]
    fn sum_and_union() {
        assert_eq!(p(&[2, 1]).sum(&p(&[1, 1])), p(&[3, 2]));
        assert_eq!(p(&[4, 2]).sum(&Partition::empty()), p(&[4, 2]));
        assert_eq!(p(&[3, 1]).sum(&p(&[2])), p(&[5, 1]));
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[4, 2]).union(&Partition::empty()), p(&[4, 2]));
        let (s, t) = (p(&[4, 2]), p(&[4, 3]));
        assert_eq!(s.union(&t), p(&[4, 4, 3, 2]));
        assert_eq!(s.union(&t), s.conjugate().sum(&t.conjugate()).conjugate());
    }

    #[test]
    fn enumeration_small_cases() {
        let zero: Vec<_> = enumerate_partitions(0).unwrap().collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let four: Vec<_> = enumerate_partitions(4).unwrap().collect();
        assert_eq!(
            four,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(enumerate_partitions(5).unwrap().count(), 7);
        assert_eq!(
            enumerate_partitions(121).unwrap_err(),
            Error::ResourceLimit { n: 121, bound: 120 }
        );
    }

    #[test]
    fn split_by_largest_part_concatenates() {
        for n in 0..=20 {
            let whole: Vec<_> = enumerate_partitions(n).unwrap().collect();
            let split: Vec<_> = if n == 0 {
                Partitions::with_largest_part(0, 0).collect()
            } else {
                (1..=n)
                    .rev()
                    .flat_map(|a| Partitions::with_largest_part(n, a))
                    .collect()
            };
            assert_eq!(whole, split, "n = {n}");
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_p(0), BigUint::from(1u32));
        assert_eq!(count_q(0).unwrap(), BigUint::from(1u32));
        assert_eq!(count_p(3), BigUint::from(3u32));
        assert_eq!(count_q(3).unwrap(), BigUint::from(1u32));
        assert_eq!(count_q(4).unwrap(), BigUint::from(2u32));
        assert_eq!(count_p_signed(-3), BigUint::zero());
        // p(100) is the classical 190569292
        assert_eq!(count_p(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "10,10,9,9,7".parse().unwrap();
        assert_eq!(lam, p(&[10, 10, 9, 9, 7]));
        assert_eq!(lam.to_string(), "(10,10,9,9,7)");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,x".parse::<Partition>().is_err());
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, "[10,10,9,9,7]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
