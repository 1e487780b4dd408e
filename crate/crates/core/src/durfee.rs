//! Stacked `m`-Durfee rectangles and the `(2,m)`-rank.
//!
//! An `m`-rectangle has height minus width equal to `m`. The first
//! `m`-Durfee rectangle of `λ` is the largest one that fits in the diagram,
//! the second is the largest one fitting directly below it. Width zero is
//! allowed, height zero is not. Cutting the diagram along both rectangles
//! leaves three partitions: `α` to the right of the first, `β` to the right
//! of the second and `γ` below both.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{Partition, Partitions, DEFAULT_ENUMERATION_BOUND};
use crate::{Error, Result};

/// A partition cut by its two `m`-Durfee rectangles of heights `s ≥ t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DurfeeDecomposition {
    pub m: usize,
    pub s: usize,
    pub t: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

/// Height of the first `m`-Durfee rectangle.
///
/// Fails only for the empty partition with `m = 0`, which has no square at all.
pub fn first_durfee_height(lambda: &Partition, m: usize) -> Result<usize> {
    let lowest = m.max(1);
    let highest = lambda.len().max(m);
    (lowest..=highest)
        .rev()
        .find(|&s| lambda.part(s) + m >= s)
        .ok_or_else(|| Error::Domain("the empty partition has no Durfee square".into()))
}

/// Height of the second `m`-Durfee rectangle below a first one of height `s`.
///
/// `None` exactly when `m = 0` and nothing lies below the first square.
pub fn second_durfee_height(lambda: &Partition, m: usize, s: usize) -> Option<usize> {
    let lowest = m.max(1);
    let highest = lambda.len().saturating_sub(s).max(m);
    (lowest..=highest)
        .rev()
        .find(|&t| lambda.part(s + t) + m >= t)
}

/// Cuts `λ` along its two `m`-Durfee rectangles, or `None` if the second does not exist.
pub fn decompose(lambda: &Partition, m: usize) -> Option<DurfeeDecomposition> {
    let s = first_durfee_height(lambda, m).ok()?;
    let t = second_durfee_height(lambda, m, s)?;
    let alpha = (1..=s).map(|i| lambda.part(i) - (s - m)).collect();
    let beta = (1..=t).map(|i| lambda.part(s + i) - (t - m)).collect();
    let gamma = lambda.parts().iter().skip(s + t).copied().collect();
    Some(DurfeeDecomposition {
        m,
        s,
        t,
        alpha: Partition::from_decreasing(alpha),
        beta: Partition::from_decreasing(beta),
        gamma: Partition::from_decreasing(gamma),
    })
}

impl DurfeeDecomposition {
    /// Checks that the pieces fit around rectangles of heights `s` and `t`
    /// and that both rectangles are maximal.
    pub fn validate(&self) -> Result<()> {
        let Self {
            m,
            s,
            t,
            alpha,
            beta,
            gamma,
        } = self;
        let (m, s, t) = (*m, *s, *t);
        let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
        if s == 0 || t == 0 {
            return bad(format!(
                "rectangle heights must be positive (s = {s}, t = {t})"
            ));
        }
        if s < m || t < m {
            return bad(format!(
                "heights s = {s}, t = {t} are below the offset m = {m}"
            ));
        }
        if t > s {
            return bad(format!(
                "second height t = {t} exceeds first height s = {s}"
            ));
        }
        if alpha.len() > s {
            return bad(format!("alpha {alpha} has more than s = {s} parts"));
        }
        if beta.len() > t {
            return bad(format!("beta {beta} has more than t = {t} parts"));
        }
        if beta.largest() > s - t {
            return bad(format!(
                "beta {beta} has a part larger than s - t = {}",
                s - t
            ));
        }
        if gamma.largest() > t - m {
            return bad(format!(
                "gamma {gamma} has a part larger than t - m = {}",
                t - m
            ));
        }
        Ok(())
    }

    /// Reassembles the partition. Inverse of [`decompose`] on valid records.
    pub fn recompose(&self) -> Result<Partition> {
        self.validate()?;
        let (s, t, m) = (self.s, self.t, self.m);
        let mut rows = Vec::with_capacity(s + t + self.gamma.len());
        rows.extend((1..=s).map(|i| self.alpha.part(i) + (s - m)));
        rows.extend((1..=t).map(|i| self.beta.part(i) + (t - m)));
        rows.extend_from_slice(self.gamma.parts());
        Ok(Partition::from_decreasing(rows))
    }

    /// Index into `α` used by the rank, `s - t - β_1 + 1`.
    pub fn rank_alpha_index(&self) -> usize {
        self.s - self.t - self.beta.largest() + 1
    }

    /// `β_1 + α_{s-t-β_1+1} - γ'_1`.
    pub fn rank(&self) -> i64 {
        let beta1 = self.beta.largest() as i64;
        let alpha_k = self.alpha.part(self.rank_alpha_index()) as i64;
        let gamma_col = self.gamma.len() as i64;
        beta1 + alpha_k - gamma_col
    }

    /// Total number of cells, rectangles included.
    pub fn size(&self) -> usize {
        self.s * (self.s - self.m)
            + self.t * (self.t - self.m)
            + self.alpha.size()
            + self.beta.size()
            + self.gamma.size()
    }
}

/// The `(2,m)`-rank, undefined (`None`) for Rogers-Ramanujan partitions when `m = 0`.
pub fn rank_2m(lambda: &Partition, m: usize) -> Option<i64> {
    decompose(lambda, m).map(|d| d.rank())
}

/// Serializable description of a partition's rectangles, including the case
/// where the second one is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub m: usize,
    pub s: usize,
    pub t: Option<usize>,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl DecompositionRecord {
    pub fn of(lambda: &Partition, m: usize) -> Result<Self> {
        if let Some(d) = decompose(lambda, m) {
            return Ok(d.into());
        }
        let s = first_durfee_height(lambda, m)?;
        let alpha = (1..=s).map(|i| lambda.part(i) - (s - m)).collect();
        Ok(DecompositionRecord {
            m,
            s,
            t: None,
            alpha: Partition::from_decreasing(alpha),
            beta: Partition::empty(),
            gamma: Partition::empty(),
        })
    }
}

impl From<DurfeeDecomposition> for DecompositionRecord {
    fn from(d: DurfeeDecomposition) -> Self {
        DecompositionRecord {
            m: d.m,
            s: d.s,
            t: Some(d.t),
            alpha: d.alpha,
            beta: d.beta,
            gamma: d.gamma,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Comparison {
    pub fn holds(self, rank: i64, r: i64) -> bool {
        match self {
            Comparison::Eq => rank == r,
            Comparison::Le => rank <= r,
            Comparison::Ge => rank >= r,
        }
    }
}

/// Distribution of the `(2,m)`-rank over all partitions of `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RankHistogram {
    pub n: usize,
    pub m: usize,
    pub counts: BTreeMap<i64, u64>,
    /// Partitions without a rank (Rogers-Ramanujan partitions when `m = 0`).
    pub unranked: u64,
}

impl RankHistogram {
    /// Exhaustive tabulation; work is split by largest part and merged.
    pub fn tabulate(n: usize, m: usize) -> Result<Self> {
        if n > DEFAULT_ENUMERATION_BOUND {
            return Err(Error::ResourceLimit {
                n,
                bound: DEFAULT_ENUMERATION_BOUND,
            });
        }
        let empty = || RankHistogram {
            n,
            m,
            ..Default::default()
        };
        if n == 0 {
            let mut h = empty();
            h.record(rank_2m(&Partition::empty(), m));
            return Ok(h);
        }
        let h = (1..=n)
            .into_par_iter()
            .map(|largest| {
                let mut h = empty();
                for lambda in Partitions::with_largest_part(n, largest) {
                    h.record(rank_2m(&lambda, m));
                }
                h
            })
            .reduce(empty, RankHistogram::merge);
        Ok(h)
    }

    fn record(&mut self, rank: Option<i64>) {
        match rank {
            Some(r) => *self.counts.entry(r).or_default() += 1,
            None => self.unranked += 1,
        }
    }

    fn merge(mut self, other: RankHistogram) -> RankHistogram {
        for (r, c) in other.counts {
            *self.counts.entry(r).or_default() += c;
        }
        self.unranked += other.unranked;
        self
    }

    pub fn count(&self, cmp: Comparison, r: i64) -> BigUint {
        let c: u64 = match cmp {
            Comparison::Eq => self.counts.get(&r).copied().unwrap_or(0),
            Comparison::Le => self.counts.range(..=r).map(|(_, c)| c).sum(),
            Comparison::Ge => self.counts.range(r..).map(|(_, c)| c).sum(),
        };
        BigUint::from(c)
    }

    /// Number of partitions that carry a rank.
    pub fn ranked(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// `h(n, m, cmp r)`: partitions of `n` whose `(2,m)`-rank exists and compares to `r`.
pub fn h_count(n: usize, m: usize, cmp: Comparison, r: i64) -> Result<BigUint> {
    Ok(RankHistogram::tabulate(n, m)?.count(cmp, r))
}

/// As [`h_count`], but zero for negative `n`.
pub fn h_count_signed(n: i64, m: usize, cmp: Comparison, r: i64) -> Result<BigUint> {
    match usize::try_from(n) {
        Ok(n) => h_count(n, m, cmp, r),
        Err(_) => Ok(BigUint::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn two_squares() -> Partition {
        p(&[10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1])
    }

    fn offset_two() -> Partition {
        p(&[7, 6, 4, 4, 3, 3, 1])
    }

    #[test]
    fn first_heights() {
        assert_eq!(first_durfee_height(&two_squares(), 0).unwrap(), 6);
        assert_eq!(first_durfee_height(&offset_two(), 2).unwrap(), 5);
        assert_eq!(first_durfee_height(&p(&[1]), 2).unwrap(), 2);
        assert!(first_durfee_height(&Partition::empty(), 0).is_err());
        assert_eq!(first_durfee_height(&Partition::empty(), 3).unwrap(), 3);
    }

    #[test]
    fn second_heights() {
        assert_eq!(second_durfee_height(&two_squares(), 0, 6), Some(3));
        assert_eq!(second_durfee_height(&offset_two(), 2, 5), Some(2));
        assert_eq!(second_durfee_height(&p(&[3]), 0, 1), None);
    }

    #[test]
    fn decompose_worked_examples() {
        let d = decompose(&two_squares(), 0).unwrap();
        assert_eq!((d.s, d.t), (6, 3));
        assert_eq!(d.alpha, p(&[4, 4, 3, 3, 1]));
        assert_eq!(d.beta, p(&[2, 1, 1]));
        assert_eq!(d.gamma, p(&[2, 2, 1, 1, 1]));
        assert_eq!(d.recompose().unwrap(), two_squares());

        let d = decompose(&offset_two(), 2).unwrap();
        assert_eq!((d.s, d.t), (5, 2));
        assert_eq!(d.alpha, p(&[4, 3, 1, 1]));
        assert_eq!(d.beta, p(&[3, 1]));
        assert!(d.gamma.is_empty());

        let d = decompose(&p(&[2, 1]), 0).unwrap();
        assert_eq!((d.s, d.t), (1, 1));
        assert_eq!(d.alpha, p(&[1]));
        assert!(d.beta.is_empty() && d.gamma.is_empty());
    }

    #[test]
    fn recompose_examples() {
        let d = DurfeeDecomposition {
            m: 0,
            s: 1,
            t: 1,
            alpha: p(&[1]),
            beta: Partition::empty(),
            gamma: Partition::empty(),
        };
        assert_eq!(d.recompose().unwrap(), p(&[2, 1]));
        let d = DurfeeDecomposition {
            m: 2,
            s: 2,
            t: 2,
            ..d
        };
        assert_eq!(d.recompose().unwrap(), p(&[1]));
    }

    #[test]
    fn recompose_rejects_bad_records() {
        let ok = decompose(&two_squares(), 0).unwrap();
        let cases = [
            DurfeeDecomposition { t: 7, ..ok.clone() },
            DurfeeDecomposition { s: 0, ..ok.clone() },
            DurfeeDecomposition {
                beta: p(&[4]),
                ..ok.clone()
            },
            DurfeeDecomposition {
                gamma: p(&[4]),
                ..ok.clone()
            },
            DurfeeDecomposition {
                alpha: p(&[1; 7]),
                ..ok.clone()
            },
            DurfeeDecomposition { m: 4, ..ok.clone() },
        ];
        for d in cases {
            assert!(
                matches!(d.recompose(), Err(Error::InvalidDecomposition(_))),
                "{d:?}"
            );
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_2m(&two_squares(), 0), Some(1));
        assert_eq!(rank_2m(&offset_two(), 2), Some(7));
        let psi_input = p(&[14, 10, 9, 9, 8, 7, 7, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1]);
        assert_eq!(rank_2m(&psi_input, 0), Some(-5));
        assert_eq!(rank_2m(&p(&[2, 1]), 0), Some(1));
        assert_eq!(rank_2m(&p(&[1, 1, 1]), 0), Some(-1));
        assert_eq!(rank_2m(&p(&[3]), 0), None);
    }

    #[test]
    fn h_examples() {
        let one = BigUint::from(1u32);
        assert_eq!(h_count(3, 0, Comparison::Eq, 1).unwrap(), one);
        assert_eq!(h_count(3, 0, Comparison::Eq, -1).unwrap(), one);
        assert_eq!(
            h_count(3, 0, Comparison::Eq, 0).unwrap(),
            BigUint::default()
        );
        // the empty partition has no rank for m = 0, rank 0 for m > 0
        assert_eq!(
            h_count(0, 0, Comparison::Ge, -10).unwrap(),
            BigUint::default()
        );
        assert_eq!(h_count(0, 2, Comparison::Eq, 0).unwrap(), one);
        assert_eq!(
            h_count_signed(-1, 2, Comparison::Eq, 0).unwrap(),
            BigUint::default()
        );
    }

    #[test]
    fn record_json() {
        let rec = DecompositionRecord::of(&p(&[3]), 0).unwrap();
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"m":0,"s":1,"t":null,"alpha":[2],"beta":[],"gamma":[]}"#
        );
        let rec = DecompositionRecord::of(&offset_two(), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"m":2,"s":5,"t":2,"alpha":[4,3,1,1],"beta":[3,1],"gamma":[]}"#
        );
    }
}
