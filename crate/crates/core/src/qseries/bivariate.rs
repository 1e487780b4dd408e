use num_bigint::BigInt;
use num_traits::Zero;

use super::TruncatedSeries;

/// A Laurent polynomial in `z` with coefficients that are power series in
/// `q` truncated at order `N`. Stored densely for `z`-exponents in `[-K, K]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateLaurent {
    radius: usize,
    rows: Vec<TruncatedSeries>,
}

/// Smallest symmetric `z`-radius that holds every term of the triple product
/// up to `q`-order `N`: `max{k : k(k-1)/2 ≤ N}`.
///
/// A term `z^k` on either side carries `q`-weight at least `k(k+1)/2` for
/// `k > 0` and `|k|(|k|-1)/2` for `k < 0`, and weights only grow under
/// multiplication, so anything outside the radius is beyond order `N`.
pub fn jtp_radius(order: usize) -> usize {
    let mut k = 0;
    while (k + 1) * k / 2 <= order {
        k += 1;
    }
    k
}

impl BivariateLaurent {
    pub fn zero(order: usize, radius: usize) -> Self {
        BivariateLaurent {
            radius,
            rows: vec![TruncatedSeries::zero(order); 2 * radius + 1],
        }
    }

    pub fn one(order: usize, radius: usize) -> Self {
        let mut out = Self::zero(order, radius);
        out.rows[radius] = TruncatedSeries::one(order);
        out
    }

    pub fn order(&self) -> usize {
        self.rows[0].order()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    fn slot(&self, z_exp: i64) -> Option<usize> {
        let idx = z_exp + self.radius as i64;
        (0..self.rows.len() as i64)
            .contains(&idx)
            .then_some(idx as usize)
    }

    /// The `q`-series multiplying `z^k`, or `None` outside the stored range.
    pub fn row(&self, z_exp: i64) -> Option<&TruncatedSeries> {
        self.slot(z_exp).map(|i| &self.rows[i])
    }

    pub fn coeff(&self, z_exp: i64, q_exp: usize) -> BigInt {
        self.row(z_exp)
            .filter(|_| q_exp <= self.order())
            .map(|s| s.coeff(q_exp).clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds `c·z^k q^j`; silently dropped outside the stored window.
    pub fn add_term(&mut self, z_exp: i64, q_exp: usize, c: impl Into<BigInt>) {
        if let Some(i) = self.slot(z_exp) {
            self.rows[i].add_term(q_exp, c);
        }
    }

    /// `self · (1 + sign·z^k q^j)`, dropping anything that leaves the window.
    pub fn mul_binomial(&mut self, z_exp: i64, q_exp: usize, sign: i64) {
        let old = self.clone();
        for (i, row) in old.rows.iter().enumerate() {
            let target = i as i64 - self.radius as i64 + z_exp;
            let Some(t) = self.slot(target) else { continue };
            let shifted = row.shift(q_exp);
            self.rows[t] = if sign >= 0 {
                &self.rows[t] + &shifted
            } else {
                &self.rows[t] - &shifted
            };
        }
    }

    /// Multiplies every coefficient by a `z`-free series.
    pub fn mul_q_series(&mut self, f: &TruncatedSeries) {
        for row in &mut self.rows {
            *row = &*row * f;
        }
    }

    /// Full convolution in `z` of the dense rows. Costs `O(K²N²)`; the result
    /// keeps the smaller window and order.
    pub fn mul(&self, other: &Self) -> Self {
        let radius = self.radius.min(other.radius);
        let order = self.order().min(other.order());
        let mut out = Self::zero(order, radius);
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                let z = (i as i64 - self.radius as i64) + (j as i64 - other.radius as i64);
                if let Some(t) = out.slot(z) {
                    out.rows[t] = &out.rows[t] + &(a * b);
                }
            }
        }
        out
    }

    /// Lowest `(z, q)` exponent pair, in `z`-major order, where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, usize)> {
        let radius = self.radius.max(other.radius) as i64;
        let order = self.order().min(other.order());
        for z in -radius..=radius {
            for q in 0..=order {
                if self.coeff(z, q) != other.coeff(z, q) {
                    return Some((z, q));
                }
            }
        }
        None
    }
}

/// `Σ_k z^k q^{k(k+1)/2}` truncated at `q`-order `N`.
pub fn jtp_lhs(order: usize) -> BivariateLaurent {
    let radius = jtp_radius(order);
    let mut out = BivariateLaurent::zero(order, radius);
    let r = radius as i64;
    for k in -r..=r {
        let w = k * (k + 1) / 2;
        out.add_term(k, w as usize, 1);
    }
    out
}

/// `∏_{i≥1}(1 + z q^i) ∏_{j≥0}(1 + z^{-1} q^j) ∏_{i≥1}(1 - q^i)` truncated at `q`-order `N`.
pub fn jtp_rhs(order: usize) -> BivariateLaurent {
    let radius = jtp_radius(order);
    let mut out = BivariateLaurent::one(order, radius);
    for i in 1..=order {
        out.mul_binomial(1, i, 1);
    }
    for j in 0..=order {
        out.mul_binomial(-1, j, 1);
    }
    for row in &mut out.rows {
        for i in 1..=order {
            row.mul_one_minus_power(i);
        }
    }
    out
}
