use num_traits::{One, Zero};

use super::{binomial_u64, BigRational};
use crate::error::{Error, Result};

/// Truncated power series `a_0 + a_1 t + ... + a_M t^M + O(t^{M+1})` in
/// `t = q - 1`, with exact rational coefficients.
///
/// Arithmetic never reads a coefficient beyond the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesAtOne {
    coeffs: Vec<BigRational>,
}

impl SeriesAtOne {
    /// Builds a series of truncation order `order`, zero-padding or dropping
    /// coefficients as needed.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// `q^e = (1 + t)^e`.
    pub fn q_power(e: u64, order: usize) -> Self {
        let coeffs = (0..=order as u64)
            .map(|i| BigRational::from_integer(binomial_u64(e, i)))
            .collect();
        Self { coeffs }
    }

    /// `1 + q + ... + q^{j-1} = ((1 + t)^j - 1) / t`, whose coefficient of
    /// `t^m` is `C(j, m + 1)`.
    pub fn q_block(j: u64, order: usize) -> Self {
        let coeffs = (0..=order as u64)
            .map(|m| BigRational::from_integer(binomial_u64(j, m + 1)))
            .collect();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Keeps the first `order + 1` coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Cauchy product truncated at `order`. Both factors must be known to at
    /// least that order.
    pub fn mul(&self, other: &Self, order: usize) -> Self {
        assert!(
            self.order() >= order && other.order() >= order,
            "factors truncated below requested order {order}"
        );
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse to `order`; fails when `a_0 = 0`.
    pub fn inverse(&self, order: usize) -> Result<Self> {
        assert!(self.order() >= order, "series truncated below order {order}");
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for m in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[m - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// `self / divisor` to `order` without forming the inverse separately.
    pub fn div(&self, divisor: &Self, order: usize) -> Result<Self> {
        assert!(
            self.order() >= order && divisor.order() >= order,
            "operands truncated below requested order {order}"
        );
        let d0 = &divisor.coeffs[0];
        if d0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = d0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = self.coeffs[m].clone();
            for i in 1..=m {
                let d = &divisor.coeffs[i];
                if !d.is_zero() {
                    acc -= d * &out[m - i];
                }
            }
            out.push(acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn product_examples() {
        let a = SeriesAtOne::from_integers(&[1, 1], 2);
        let b = SeriesAtOne::from_integers(&[1, -1], 2);
        assert_eq!(a.mul(&b, 2), SeriesAtOne::from_integers(&[1, 0, -1], 2));
        assert_eq!(a.mul(&SeriesAtOne::one(2), 2), a);
        let c = SeriesAtOne::from_integers(&[1, 1], 1);
        assert_eq!(c.mul(&c, 1), SeriesAtOne::from_integers(&[1, 2], 1));
    }

    #[test]
    fn inverse_examples() {
        let geometric = SeriesAtOne::from_integers(&[1, -1], 3);
        assert_eq!(
            geometric.inverse(3).unwrap(),
            SeriesAtOne::from_integers(&[1, 1, 1, 1], 3)
        );
        let two = SeriesAtOne::from_integers(&[2], 2);
        assert_eq!(
            two.inverse(2).unwrap(),
            SeriesAtOne::constant(ratio(1, 2), 2)
        );
        let square = SeriesAtOne::from_integers(&[1, 2, 1], 2);
        let inv = square.inverse(2).unwrap();
        assert_eq!(inv, SeriesAtOne::from_integers(&[1, -2, 3], 2));
        assert_eq!(square.mul(&inv, 2), SeriesAtOne::one(2));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let s = SeriesAtOne::from_integers(&[0, 1], 3);
        assert_eq!(s.inverse(3), Err(Error::NotInvertible));
        assert_eq!(SeriesAtOne::one(3).div(&s, 3), Err(Error::NotInvertible));
    }

    #[test]
    fn division_matches_inverse_then_product() {
        let a = SeriesAtOne::from_integers(&[3, -1, 4, 1, -5], 4);
        let b = SeriesAtOne::q_block(4, 4);
        let direct = a.div(&b, 4).unwrap();
        let via_inverse = a.mul(&b.inverse(4).unwrap(), 4);
        assert_eq!(direct, via_inverse);
    }

    #[test]
    fn q_block_is_geometric_sum_of_q_powers() {
        let order = 5;
        for j in 1..6u64 {
            let mut sum = SeriesAtOne::new(vec![], order);
            for i in 0..j {
                let p = SeriesAtOne::q_power(i, order);
                sum = SeriesAtOne::new(
                    sum.coeffs().iter().zip(p.coeffs()).map(|(x, y)| x + y).collect(),
                    order,
                );
            }
            assert_eq!(sum, SeriesAtOne::q_block(j, order));
        }
    }
}
