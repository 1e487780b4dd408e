use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A power series in `t` known exactly modulo `t^(N+1)`.
///
/// Binary operations on series of different orders truncate to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigInt::one())
    }

    /// `c·t^e`, which is zero when `e > order`.
    pub fn monomial(order: usize, exponent: usize, c: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c.into();
        }
        s
    }

    /// Pads with zeros or drops high terms so that exactly `order + 1` coefficients remain.
    pub fn from_coeffs<T: Into<BigInt>>(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut v: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        v.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs: v }
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^n`.
    ///
    /// # Panics
    /// If `n` exceeds the truncation order; such coefficients are unknown, not zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut BigInt {
        &mut self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Adds `c·t^e` in place (ignored past the truncation order).
    pub fn add_term(&mut self, exponent: usize, c: impl Into<BigInt>) {
        if exponent <= self.order() {
            self.coeffs[exponent] += c.into();
        }
    }

    /// Multiplies in place by `1 - t^a`, `a ≥ 1`.
    pub fn mul_one_minus_power(&mut self, a: usize) {
        assert!(a >= 1);
        for i in (a..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - a];
        }
    }

    /// Multiplies in place by `1 + t^a`, `a ≥ 1`.
    pub fn mul_one_plus_power(&mut self, a: usize) {
        assert!(a >= 1);
        for i in (a..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }

    /// Divides in place by `1 - t^a`, `a ≥ 1` (multiplies by the geometric series).
    pub fn div_one_minus_power(&mut self, a: usize) {
        assert!(a >= 1);
        for i in a..=self.order() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }

    /// Multiplies by `t^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in e..=n {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Inverse of a series whose constant term is `±1`; stays over the integers.
    pub fn inverse_unit(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !(a0.is_one() || (-a0).is_one()) {
            return Err(Error::Domain(format!(
                "series with constant term {a0} has no integer inverse"
            )));
        }
        let n = self.order();
        let mut b: Vec<BigInt> = Vec::with_capacity(n + 1);
        b.push(a0.clone()); // 1/a0 == a0 for a0 = ±1
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            // b_k = -a0^{-1} * acc = -a0 * acc
            b.push(-(a0 * acc));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Lowest exponent at which the two series differ, over their common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Schoolbook product, `O(N²)` big-integer multiplications.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    #[serde(rename = "N")]
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for N = {}, got {}",
                raw.order + 1,
                raw.order,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("`{c}`: {e}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}
