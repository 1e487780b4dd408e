//! The two rank symmetries as explicit maps.
//!
//! * [`phi`] is an involution on partitions with two Durfee squares. It keeps
//!   the size and both squares and negates the `(2,0)`-rank.
//! * [`psi`] maps partitions of `n` with `(2,m)`-rank `≤ -r` bijectively onto
//!   partitions of `n - r - 2m - 2` with `(2,m+2)`-rank `≥ -r`; [`psi_inverse`]
//!   undoes it.

use serde::{Deserialize, Serialize};

use crate::durfee::{decompose, DurfeeDecomposition};
use crate::fault::Fault;
use crate::partition::Partition;
use crate::{Error, Result};

/// Intermediate stage of `phi`: `β = μ`, `α = ν ∪ π`, `γ' = σ + ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiveTuple {
    pub mu: Partition,
    pub nu: Partition,
    pub pi: Partition,
    pub rho: Partition,
    pub sigma: Partition,
}

impl FiveTuple {
    pub fn size(&self) -> usize {
        [&self.mu, &self.nu, &self.pi, &self.rho, &self.sigma]
            .iter()
            .map(|p| p.size())
            .sum()
    }
}

/// Rows `s - t - β_j + j` (1-based, `j = 1..=t`) of `α` that `phi` moves into `ν`.
///
/// Strictly increasing because `β` is weakly decreasing.
pub fn phi_removal_rows(d: &DurfeeDecomposition) -> Vec<usize> {
    let rows: Vec<usize> = (1..=d.t).map(|j| d.s - d.t - d.beta.part(j) + j).collect();
    debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
    rows
}

/// `max{k ≤ s - t : γ'_j - k ≥ π_{s-t-k+1}}`. Always defined since `k = 0` qualifies.
fn phi_k(gamma_col: usize, pi: &Partition, width: usize) -> usize {
    (0..=width)
        .rev()
        .find(|&k| gamma_col as i64 - k as i64 >= pi.part(width - k + 1) as i64)
        .expect("k = 0 always satisfies the defining inequality")
}

/// First half of `phi`: splits `(α, β, γ)` into `(μ, ν, π, ρ, σ)`.
pub fn phi_split(d: &DurfeeDecomposition) -> Result<FiveTuple> {
    phi_split_with(d, None)
}

fn phi_split_with(d: &DurfeeDecomposition, fault: Option<Fault>) -> Result<FiveTuple> {
    if d.m != 0 {
        return Err(Error::Domain(format!(
            "phi acts on Durfee squares (m = 0), got m = {}",
            d.m
        )));
    }
    d.validate()?;
    let (s, t) = (d.s, d.t);
    let width = s - t;

    let rows = phi_removal_rows(d);
    let nu = Partition::from_decreasing(rows.iter().map(|&i| d.alpha.part(i)).collect());
    let pi = Partition::from_decreasing(
        (1..=s)
            .filter(|i| rows.binary_search(i).is_err())
            .map(|i| d.alpha.part(i))
            .collect(),
    );

    let gamma_conj = d.gamma.conjugate();
    let mut ks = Vec::with_capacity(t);
    let mut sigma = Vec::with_capacity(t);
    for j in 1..=t {
        let col = gamma_conj.part(j);
        let k = match fault {
            Some(Fault::PhiSkipKStep) => 0,
            _ => phi_k(col, &pi, width),
        };
        if fault.is_none() {
            debug_assert!(
                sandwich_holds(&pi, width, k, col as i64 - k as i64),
                "k_{j} = {k} violates its sandwich bound"
            );
        }
        ks.push(k);
        sigma.push(col - k);
    }
    let rho = Partition::new(trim_zeros(ks))
        .map_err(|e| Error::Consistency(format!("rho is not a partition: {e}")))?;
    let sigma = Partition::new(trim_zeros(sigma))
        .map_err(|e| Error::Consistency(format!("sigma is not a partition: {e}")))?;

    Ok(FiveTuple {
        mu: d.beta.clone(),
        nu,
        pi,
        rho,
        sigma,
    })
}

/// `seq_{w-k+1} ≤ value ≤ seq_{w-k}`, ignoring the upper bound when `k = w`.
pub(crate) fn sandwich_holds(seq: &Partition, width: usize, k: usize, value: i64) -> bool {
    let lower = seq.part(width - k + 1) as i64;
    let upper_ok = k == width || value <= seq.part(width - k) as i64;
    lower <= value && upper_ok
}

fn trim_zeros(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Second half of `phi`: `γ̂' = ν + μ`, `α̂ = σ ∪ π`, `β̂ = ρ`, same squares.
pub fn phi_assemble(f: &FiveTuple, s: usize, t: usize) -> Result<DurfeeDecomposition> {
    let d = DurfeeDecomposition {
        m: 0,
        s,
        t,
        alpha: f.sigma.union(&f.pi),
        beta: f.rho.clone(),
        gamma: f.nu.sum(&f.mu).conjugate(),
    };
    d.validate()
        .map_err(|e| Error::Consistency(format!("phi assembled an invalid decomposition: {e}")))?;
    Ok(d)
}

/// The involution on non-Rogers-Ramanujan partitions.
pub fn phi(lambda: &Partition) -> Result<Partition> {
    phi_with(lambda, None)
}

#[doc(hidden)]
pub fn phi_with(lambda: &Partition, fault: Option<Fault>) -> Result<Partition> {
    let d = decompose(lambda, 0).ok_or_else(|| {
        Error::Domain(format!(
            "{lambda} is a Rogers-Ramanujan partition; phi is undefined"
        ))
    })?;
    let f = phi_split_with(&d, fault)?;
    phi_assemble(&f, d.s, d.t)?.recompose()
}

/// `psi_{m,r}` is defined for `m, r > 0` and for `m = 0, r ≥ 0`.
pub fn check_psi_params(m: usize, r: i64) -> Result<()> {
    if (m > 0 && r > 0) || (m == 0 && r >= 0) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "psi is defined for m, r > 0 or m = 0, r >= 0; got m = {m}, r = {r}"
        )))
    }
}

/// `k_1 = max{k ≤ s - t : γ'_1 - r - k ≥ α_{s-t-k+1}}`.
pub fn psi_k1(d: &DurfeeDecomposition, r: i64) -> Option<usize> {
    psi_k1_with(d, r, None)
}

fn psi_k1_with(d: &DurfeeDecomposition, r: i64, fault: Option<Fault>) -> Option<usize> {
    let width = d.s - d.t;
    let col = d.gamma.len() as i64;
    (0..=width).rev().find(|&k| {
        let lhs = col - r - k as i64;
        let rhs = d.alpha.part(width - k + 1) as i64;
        match fault {
            Some(Fault::PsiTieDirection) => lhs > rhs,
            _ => lhs >= rhs,
        }
    })
}

/// Removes the first column: `γ ↦ (γ_1 - 1, γ_2 - 1, …)`.
pub fn remove_first_column(gamma: &Partition) -> Partition {
    Partition::from_decreasing(gamma.parts().iter().map(|&g| g - 1).collect())
}

/// Same as [`remove_first_column`], phrased on the conjugate.
pub fn remove_first_column_via_conjugate(gamma: &Partition) -> Partition {
    let conj = gamma.conjugate();
    Partition::from_decreasing(conj.parts().iter().skip(1).copied().collect()).conjugate()
}

/// Prepends a column of height `height ≥ γ'_1`.
fn add_first_column(gamma: &Partition, height: usize) -> Partition {
    debug_assert!(height >= gamma.len());
    Partition::from_decreasing((1..=height).map(|i| gamma.part(i) + 1).collect())
}

/// The bijection `psi_{m,r}` from rank `≤ -r` at offset `m` to rank `≥ -r` at offset `m + 2`.
pub fn psi(lambda: &Partition, m: usize, r: i64) -> Result<Partition> {
    psi_with(lambda, m, r, None)
}

#[doc(hidden)]
pub fn psi_with(lambda: &Partition, m: usize, r: i64, fault: Option<Fault>) -> Result<Partition> {
    check_psi_params(m, r)?;
    let d = decompose(lambda, m)
        .ok_or_else(|| Error::Domain(format!("{lambda} has no (2,{m})-rank")))?;
    let rank = d.rank();
    if rank > -r {
        return Err(Error::Domain(format!(
            "{lambda} has (2,{m})-rank {rank} > {}",
            -r
        )));
    }
    let k1 = psi_k1_with(&d, r, fault)
        .ok_or_else(|| Error::Consistency(format!("no admissible k_1 for {lambda}")))?;
    let new_alpha_part = d.gamma.len() as i64 - r - k1 as i64;
    if new_alpha_part < 0 {
        return Err(Error::Consistency(format!(
            "negative part {new_alpha_part} for {lambda}"
        )));
    }
    if fault.is_none() {
        debug_assert!(k1 >= d.beta.largest());
        debug_assert!(sandwich_holds(&d.alpha, d.s - d.t, k1, new_alpha_part));
    }
    let image = DurfeeDecomposition {
        m: m + 2,
        s: d.s + 1,
        t: d.t + 1,
        alpha: d.alpha.insert_part(new_alpha_part as usize),
        beta: d.beta.insert_part(k1),
        gamma: remove_first_column(&d.gamma),
    };
    image
        .recompose()
        .map_err(|e| Error::Consistency(format!("psi assembled an invalid decomposition: {e}")))
}

/// Inverse of [`psi`]: defined on partitions with `(2,m+2)`-rank `≥ -r`.
pub fn psi_inverse(image: &Partition, m: usize, r: i64) -> Result<Partition> {
    check_psi_params(m, r)?;
    let d = decompose(image, m + 2).expect("(2,m)-rank exists for every partition when m > 0");
    let rank = d.rank();
    if rank < -r {
        return Err(Error::Domain(format!(
            "{image} has (2,{})-rank {rank} < {}",
            m + 2,
            -r
        )));
    }
    if d.s < 2 || d.t < 2 {
        return Err(Error::Domain(format!(
            "{image} has a rectangle of height below 2"
        )));
    }
    let beta1 = d.beta.largest();
    let alpha_part = d.alpha.part(d.rank_alpha_index());
    let column = alpha_part + beta1 + r as usize;
    let alpha = d
        .alpha
        .remove_part(alpha_part)
        .expect("the part was read from alpha");
    let beta = d
        .beta
        .remove_part(beta1)
        .expect("the part was read from beta");
    let pre = DurfeeDecomposition {
        m,
        s: d.s - 1,
        t: d.t - 1,
        alpha,
        beta,
        gamma: add_first_column(&d.gamma, column),
    };
    pre.recompose().map_err(|e| {
        Error::Consistency(format!(
            "psi inverse produced an invalid decomposition: {e}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::durfee::rank_2m;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn two_squares() -> Partition {
        p(&[10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1])
    }

    fn psi_input() -> Partition {
        p(&[14, 10, 9, 9, 8, 7, 7, 5, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1])
    }

    fn psi_image() -> Partition {
        p(&[13, 10, 9, 8, 8, 7, 6, 6, 5, 4, 3, 2, 2, 1, 1, 1, 1, 1])
    }

    #[test]
    fn phi_worked_example() {
        let hat = phi(&two_squares()).unwrap();
        assert_eq!(hat, p(&[10, 9, 9, 7, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1]));
        assert_eq!(hat.size(), 71);
        assert_eq!(rank_2m(&hat, 0), Some(-1));
        assert_eq!(phi(&hat).unwrap(), two_squares());
    }

    #[test]
    fn phi_split_worked_example_relations() {
        let d = decompose(&two_squares(), 0).unwrap();
        let f = phi_split(&d).unwrap();
        assert_eq!(f.mu, d.beta);
        assert_eq!(f.nu.union(&f.pi), d.alpha);
        assert_eq!(f.sigma.sum(&f.rho), d.gamma.conjugate());
        assert_eq!(f.size(), d.alpha.size() + d.beta.size() + d.gamma.size());
        let hat = phi_assemble(&f, d.s, d.t).unwrap();
        assert_eq!(hat.beta, f.rho);
        assert_eq!(hat.alpha, f.pi.union(&f.sigma));
        assert_eq!(hat.gamma.conjugate(), f.mu.sum(&f.nu));
    }

    #[test]
    fn phi_split_with_empty_beta_and_gamma() {
        let d = DurfeeDecomposition {
            m: 0,
            s: 4,
            t: 2,
            alpha: p(&[3, 1]),
            beta: Partition::empty(),
            gamma: Partition::empty(),
        };
        let f = phi_split(&d).unwrap();
        assert!(f.mu.is_empty() && f.rho.is_empty() && f.sigma.is_empty());
        // rows s - t + j = 3, 4 of alpha are zero, so nu is empty and pi = alpha
        assert!(f.nu.is_empty());
        assert_eq!(f.pi, d.alpha);
        let empty = FiveTuple {
            mu: Partition::empty(),
            nu: Partition::empty(),
            pi: Partition::empty(),
            rho: Partition::empty(),
            sigma: Partition::empty(),
        };
        let hat = phi_assemble(&empty, 3, 1).unwrap();
        assert!(hat.alpha.is_empty() && hat.beta.is_empty() && hat.gamma.is_empty());
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(phi(&p(&[2, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(phi(&p(&[1, 1, 1])).unwrap(), p(&[2, 1]));
        assert!(matches!(phi(&p(&[3])), Err(Error::Domain(_))));
        assert!(matches!(phi(&Partition::empty()), Err(Error::Domain(_))));
    }

    #[test]
    fn psi_worked_example() {
        let d = decompose(&psi_input(), 0).unwrap();
        assert_eq!(psi_k1(&d, 2), Some(3));
        assert_eq!(d.gamma.len() as i64 - 2 - 3, 4);
        let hat = psi(&psi_input(), 0, 2).unwrap();
        assert_eq!(hat, psi_image());
        assert_eq!(hat.size(), 88);
        assert_eq!(rank_2m(&hat, 2), Some(1));
        let dh = decompose(&hat, 2).unwrap();
        assert_eq!((dh.s, dh.t), (8, 4));
        assert_eq!(psi_inverse(&hat, 0, 2).unwrap(), psi_input());
    }

    #[test]
    fn psi_domain_errors() {
        assert!(matches!(psi(&psi_input(), 1, 0), Err(Error::Domain(_))));
        assert!(matches!(psi(&psi_input(), 0, -1), Err(Error::Domain(_))));
        // rank -5 is not <= -6
        assert!(matches!(psi(&psi_input(), 0, 6), Err(Error::Domain(_))));
        assert!(matches!(psi(&p(&[3]), 0, 0), Err(Error::Domain(_))));
        assert!(psi_inverse(&psi_image(), 0, 0).is_ok());
        // m > 0 with r = 0 is outside the parameter range
        assert!(matches!(
            psi_inverse(&psi_image(), 2, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn psi_small_case_maps_to_empty() {
        // (1,1) has rank 0 and psi_{0,0} sends it to the empty partition of 0
        assert_eq!(psi(&p(&[1, 1]), 0, 0).unwrap(), Partition::empty());
        assert_eq!(psi_inverse(&Partition::empty(), 0, 0).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn first_column_removal_agrees() {
        for gamma in [p(&[3, 2, 2, 1]), Partition::empty(), p(&[1, 1, 1]), p(&[5])] {
            assert_eq!(
                remove_first_column(&gamma),
                remove_first_column_via_conjugate(&gamma)
            );
        }
        assert_eq!(
            remove_first_column(&p(&[3, 2, 2, 2, 2, 2, 1, 1, 1])),
            p(&[2, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn faults_change_behaviour() {
        assert_ne!(
            phi_with(&two_squares(), Some(Fault::PhiSkipKStep)).ok(),
            Some(p(&[10, 9, 9, 7, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1]))
        );
    }
}
