//! Exact truncated power series and the generating functions around the
//! Rogers-Ramanujan identity.
//!
//! All constructors take the truncation order `N` and return series exact
//! modulo `t^(N+1)`. Infinite products drop a factor `1 ± t^a` once `a > N`,
//! bilateral sums stop at the first index whose exponent exceeds `N`.

mod bivariate;
mod series;

pub use bivariate::{jtp_lhs, jtp_radius, jtp_rhs, BivariateLaurent};
pub use series::TruncatedSeries;

use crate::bijections::check_psi_params;
use crate::fault::Fault;
use crate::Result;

/// `P(t) = ∏_{i≥1} 1/(1 - t^i)`, coefficients `p(n)`.
pub fn euler_inverse_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        s.div_one_minus_power(i);
    }
    s
}

/// `∏_{i≥1} (1 - t^i)`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        s.mul_one_minus_power(i);
    }
    s
}

/// `Q(t) = 1 + Σ_{k≥1} t^{k²} / ((1-t)(1-t²)…(1-t^k))`.
pub fn rr_sum_side(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::one(order);
    let mut denom_inv = TruncatedSeries::one(order);
    for k in 1.. {
        if k * k > order {
            break;
        }
        denom_inv.div_one_minus_power(k);
        total = &total + &denom_inv.shift(k * k);
    }
    total
}

/// `∏_{i≥0} 1/((1 - t^{5i+1})(1 - t^{5i+4}))`.
pub fn rr_product_side(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for a in (1..=order).filter(|a| a % 5 == 1 || a % 5 == 4) {
        s.div_one_minus_power(a);
    }
    s
}

/// Exponents `m(5m-1)/2` for `m = 0, 1, -1, 2, -2, …` with their signs `(-1)^m`,
/// up to `order`.
fn schur_theta_terms(order: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0, 1)];
    for k in 1usize.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let plus = k * (5 * k - 1) / 2; // m = k
        let minus = k * (5 * k + 1) / 2; // m = -k
        if plus > order {
            break;
        }
        terms.push((plus, sign));
        if minus <= order {
            terms.push((minus, sign));
        }
    }
    terms
}

/// `Σ_{m∈ℤ} (-1)^m t^{m(5m-1)/2} = 1 - t² - t³ + t⁹ + t¹¹ - …`.
pub fn schur_theta(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for (e, sign) in schur_theta_terms(order) {
        s.add_term(e, sign);
    }
    s
}

/// `P(t) · Σ_{m∈ℤ} (-1)^m t^{m(5m-1)/2}`, the product side of Schur's form.
pub fn schur_rhs(order: usize) -> TruncatedSeries {
    &euler_inverse_product(order) * &schur_theta(order)
}

/// Exponents `jr + 2jm + j(5j-1)/2` of the rank generating function, `j ≥ 1`, up to `order`.
pub fn maltese_exponents(m: usize, r: i64, order: usize) -> Result<Vec<usize>> {
    maltese_exponents_with(m, r, order, None)
}

fn maltese_exponents_with(
    m: usize,
    r: i64,
    order: usize,
    fault: Option<Fault>,
) -> Result<Vec<usize>> {
    check_psi_params(m, r)?;
    let r = r as usize;
    let shift = usize::from(fault == Some(Fault::MalteseExponentOffByOne));
    Ok((1usize..)
        .map(|j| j * r + 2 * j * m + j * (5 * j - 1) / 2 + shift)
        .take_while(|&e| e <= order)
        .collect())
}

/// `H_{m,≤-r}(t) = P(t) · Σ_{j≥1} (-1)^{j-1} t^{jr + 2jm + j(5j-1)/2}`.
///
/// Defined for `m, r > 0` and for `m = 0, r ≥ 0`.
pub fn maltese_series(m: usize, r: i64, order: usize) -> Result<TruncatedSeries> {
    maltese_series_with(m, r, order, None)
}

#[doc(hidden)]
pub fn maltese_series_with(
    m: usize,
    r: i64,
    order: usize,
    fault: Option<Fault>,
) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::zero(order);
    for (j, e) in maltese_exponents_with(m, r, order, fault)?
        .into_iter()
        .enumerate()
    {
        s.add_term(e, if j % 2 == 0 { 1 } else { -1 });
    }
    for i in 1..=order {
        s.div_one_minus_power(i);
    }
    Ok(s)
}

/// `P(t) · Σ_{j≥1} (-1)^{j-1} (t^{j(5j-1)/2} + t^{j(5j+1)/2})`, built directly
/// from the two displayed sums rather than through [`maltese_series`].
pub fn pentagonal_pair_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for j in 1usize.. {
        let lo = j * (5 * j - 1) / 2;
        if lo > order {
            break;
        }
        let sign = if j % 2 == 1 { 1 } else { -1 };
        s.add_term(lo, sign);
        s.add_term(j * (5 * j + 1) / 2, sign);
    }
    &s * &euler_inverse_product(order)
}

/// The triple product after `q ← t⁵`, `z ← -t^{-2}`, both sides as series in `t`.
///
/// Sum side: `Σ_k (-1)^k t^{k(5k+1)/2}`. Product side:
/// `∏_{i≥1}(1 - t^{5i-2}) ∏_{j≥0}(1 - t^{5j+2}) ∏_{i≥1}(1 - t^{5i})`.
pub fn jtp_specialized_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut sum = TruncatedSeries::zero(order);
    for k in 0i64.. {
        let pos = k * (5 * k + 1) / 2;
        let neg = k * (5 * k - 1) / 2; // exponent for -k
        if neg as usize > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sum.add_term(pos as usize, sign);
        if k > 0 {
            sum.add_term(neg as usize, sign);
        }
    }
    let mut prod = TruncatedSeries::one(order);
    for a in 1..=order {
        if matches!(a % 5, 0 | 2 | 3) {
            prod.mul_one_minus_power(a);
        }
    }
    (sum, prod)
}

/// Outcome of comparing two series, with the first disagreeing exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub stage: &'static str,
    pub exponent: usize,
    pub left: String,
    pub right: String,
}

fn compare(
    stage: &'static str,
    a: &TruncatedSeries,
    b: &TruncatedSeries,
) -> Result<(), SeriesMismatch> {
    match a.first_difference(b) {
        None => Ok(()),
        Some(e) => Err(SeriesMismatch {
            stage,
            exponent: e,
            left: a.coeff(e).to_string(),
            right: b.coeff(e).to_string(),
        }),
    }
}

/// Checks the specialized triple product and the rewrite it yields:
/// the specialized sum equals the specialized product, the sum is the theta
/// series of Schur's form, and `∏ 1/((1-t^{5i+1})(1-t^{5i+4})) = θ(t)·P(t)`.
pub fn jtp_specialized_check(order: usize) -> Result<(), SeriesMismatch> {
    let (sum, prod) = jtp_specialized_sides(order);
    compare("specialized sum = specialized product", &sum, &prod)?;
    compare("specialized sum = theta", &sum, &schur_theta(order))?;
    compare(
        "rr product = theta * P",
        &rr_product_side(order),
        &schur_rhs(order),
    )
}

/// As [`jtp_specialized_check`] but against a caller-supplied product side,
/// so that a perturbed right-hand side can be exercised.
pub fn jtp_specialized_check_against(rhs: &TruncatedSeries) -> Result<(), SeriesMismatch> {
    let (sum, _) = jtp_specialized_sides(rhs.order());
    compare("specialized sum = specialized product", &sum, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn coeffs(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn euler_product_inverse() {
        let p = euler_inverse_product(50);
        assert_eq!(&p * &euler_product(50), TruncatedSeries::one(50));
        assert_eq!(euler_product(50).inverse_unit().unwrap(), p);
        assert_eq!(coeffs(&p.truncate(6)), vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn rr_sides_small() {
        let q = rr_sum_side(10);
        assert_eq!(q.coeff(0), &BigInt::from(1));
        assert_eq!(q.coeff(4), &BigInt::from(2));
        let r = rr_product_side(10);
        assert_eq!(r.coeff(1), &BigInt::from(1));
        assert_eq!(q, r);
    }

    #[test]
    fn theta_leading_terms() {
        assert_eq!(
            coeffs(&schur_theta(12)),
            vec![1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0]
        );
        assert_eq!(schur_rhs(0), TruncatedSeries::one(0));
    }

    #[test]
    fn maltese_exponent_examples() {
        assert_eq!(maltese_exponents(0, 0, 40).unwrap(), vec![2, 9, 21, 38]);
        assert_eq!(maltese_exponents(0, 1, 40).unwrap(), vec![3, 11, 24]);
        assert!(maltese_exponents(1, 0, 40).is_err());
        assert!(maltese_series(0, -1, 10).is_err());
    }

    #[test]
    fn maltese_pair_gives_p_minus_q() {
        let n = 150;
        let lhs = &maltese_series(0, 0, n).unwrap() + &maltese_series(0, 1, n).unwrap();
        let rhs = &euler_inverse_product(n) - &rr_sum_side(n);
        assert_eq!(lhs, rhs);
        assert_eq!(pentagonal_pair_series(n), rhs);
    }

    #[test]
    fn specialized_jtp() {
        assert!(jtp_specialized_check(0).is_ok());
        assert!(jtp_specialized_check(100).is_ok());
        let (_, mut prod) = jtp_specialized_sides(30);
        prod.add_term(17, 1);
        let err = jtp_specialized_check_against(&prod).unwrap_err();
        assert_eq!(err.exponent, 17);
    }

    #[test]
    fn bivariate_jtp_small() {
        assert_eq!(jtp_lhs(20).first_difference(&jtp_rhs(20)), None);
    }
}
