//! Truncated formal power series with arbitrary-precision integer coefficients.
//!
//! A [`QSeries`] stores the coefficients of `q^0, q^1, ..., q^T` densely, where
//! `T` is the inclusive truncation. Every binary operation truncates to the
//! smaller of the two operands' truncations, so a result never claims more
//! precision than its inputs carry.
//!
//! Multiplication first attempts a machine-word path (`i64` inputs, checked
//! `i128` accumulation) and falls back to [`BigInt`] arithmetic as soon as any
//! coefficient or partial sum would not fit. Coefficients therefore never wrap.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Builds a series from its coefficients; the truncation is `coeffs.len() - 1`.
    ///
    /// An empty vector is treated as the zero series truncated at 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        QSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(truncation: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(BigInt::one(), truncation)
    }

    pub fn constant(c: BigInt, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = c;
        s
    }

    /// Inclusive maximum exponent carried by this series.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^index`.
    pub fn coeff(&self, index: usize) -> Result<&BigInt> {
        self.coeffs.get(index).ok_or(Error::IndexOutOfTruncation {
            index,
            truncation: self.truncation(),
        })
    }

    /// Drops every coefficient above `truncation`. Raising the truncation is
    /// not possible without recomputation, so a larger value is a no-op.
    pub fn truncate(&self, truncation: usize) -> Self {
        let t = truncation.min(self.truncation());
        QSeries {
            coeffs: self.coeffs[..=t].to_vec(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let t = self.truncation().min(other.truncation());
        QSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let t = self.truncation().min(other.truncation());
        QSeries {
            coeffs: (0..=t).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let t = self.truncation().min(other.truncation());
        let a = &self.coeffs[..=t];
        let b = &other.coeffs[..=t];
        // Iterate over the sparser operand's nonzero terms.
        let (sparse, dense) = if nonzero_count(a) <= nonzero_count(b) {
            (a, b)
        } else {
            (b, a)
        };
        let coeffs = match (to_i64s(sparse), to_i64s(dense)) {
            (Some(s), Some(d)) => mul_small(&s, &d).unwrap_or_else(|| mul_big(sparse, dense)),
            _ => mul_big(sparse, dense),
        };
        QSeries { coeffs }
    }

    /// `self^e` by repeated squaring; `pow(0)` is the unit series.
    pub fn pow(&self, mut e: u32) -> QSeries {
        let mut result = QSeries::one(self.truncation());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

fn nonzero_count(c: &[BigInt]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

fn to_i64s(c: &[BigInt]) -> Option<Vec<i64>> {
    c.iter().map(|x| x.to_i64()).collect()
}

/// `None` on any overflow.
fn mul_small(sparse: &[i64], dense: &[i64]) -> Option<Vec<BigInt>> {
    let t = sparse.len() - 1;
    let mut acc = vec![0i128; t + 1];
    for (i, &s) in sparse.iter().enumerate() {
        if s == 0 {
            continue;
        }
        let s = s as i128;
        for (j, &d) in dense[..=t - i].iter().enumerate() {
            if d == 0 {
                continue;
            }
            // i64 * i64 always fits in i128; only the sum can overflow.
            let slot = &mut acc[i + j];
            *slot = slot.checked_add(s * d as i128)?;
        }
    }
    Some(acc.into_iter().map(BigInt::from).collect())
}

fn mul_big(sparse: &[BigInt], dense: &[BigInt]) -> Vec<BigInt> {
    let t = sparse.len() - 1;
    let mut acc = vec![BigInt::zero(); t + 1];
    for (i, s) in sparse.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (j, d) in dense[..=t - i].iter().enumerate() {
            if !d.is_zero() {
                acc[i + j] += s * d;
            }
        }
    }
    acc
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(q^{})]", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta3(t: usize) -> QSeries {
        let mut c = vec![0i64; t + 1];
        c[0] = 1;
        let mut m = 1;
        while m * m <= t {
            c[m * m] = 2;
            m += 1;
        }
        QSeries::from_i64s(&c)
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let a = QSeries::from_i64s(&[1, 2]);
        assert_eq!(&a + &QSeries::zero(1), a);
        let b = QSeries::from_i64s(&[1, -1]);
        assert_eq!(&QSeries::from_i64s(&[1, 1]) + &b, QSeries::from_i64s(&[2, 0]));
    }

    #[test]
    fn theta_minus_one_has_zero_constant() {
        let t = theta3(9);
        let shifted = &t + &QSeries::constant(BigInt::from(-1), 9);
        assert!(shifted.coeff(0).unwrap().is_zero());
        assert_eq!(shifted.coeff(4).unwrap(), &BigInt::from(2));
    }

    #[test]
    fn binary_ops_take_min_truncation() {
        let a = QSeries::from_i64s(&[1, 1, 1, 1]);
        let b = QSeries::from_i64s(&[1, 1]);
        assert_eq!((&a + &b).truncation(), 1);
        assert_eq!((&a * &b).truncation(), 1);
        assert_eq!(&b * &b, QSeries::from_i64s(&[1, 2]));
    }

    #[test]
    fn multiplicative_identity() {
        let a = QSeries::from_i64s(&[3, -1, 4, 1, -5]);
        assert_eq!(&a * &QSeries::one(4), a);
        assert_eq!(a.pow(0), QSeries::one(4));
        assert_eq!(a.pow(1), a);
    }

    #[test]
    fn theta_square_counts_two_squares() {
        // (±1, 0), (0, ±1)
        let t2 = theta3(10).pow(2);
        assert_eq!(t2.coeff(1).unwrap(), &BigInt::from(4));
    }

    #[test]
    fn theta_powers_match_known_counts() {
        let t = theta3(10);
        assert_eq!(t.pow(4).coeff(3).unwrap(), &BigInt::from(32));
        let nz = &t - &QSeries::one(10);
        assert!(nz.pow(4).coeff(3).unwrap().is_zero());
    }

    #[test]
    fn coeff_out_of_window() {
        let t = theta3(9);
        assert_eq!(t.coeff(4).unwrap(), &BigInt::from(2));
        assert_eq!(QSeries::one(0).coeff(0).unwrap(), &BigInt::one());
        assert_eq!(
            t.coeff(10),
            Err(Error::IndexOutOfTruncation {
                index: 10,
                truncation: 9
            })
        );
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX;
        let a = QSeries::from_i64s(&[big, big, big]);
        let sq = &a * &a;
        let b = BigInt::from(big);
        assert_eq!(sq.coeff(0).unwrap(), &(&b * &b));
        assert_eq!(sq.coeff(2).unwrap(), &(&b * &b * 3));
    }

    #[test]
    fn bigint_inputs_multiply_exactly() {
        let huge = BigInt::from(10).pow(40);
        let a = QSeries::from_coeffs(vec![huge.clone(), BigInt::one()]);
        let sq = a.pow(2);
        assert_eq!(sq.coeff(1).unwrap(), &(&huge * 2));
    }

    #[test]
    fn truncate_never_extends() {
        let a = QSeries::from_i64s(&[1, 2, 3]);
        assert_eq!(a.truncate(1), QSeries::from_i64s(&[1, 2]));
        assert_eq!(a.truncate(10), a);
    }
}
