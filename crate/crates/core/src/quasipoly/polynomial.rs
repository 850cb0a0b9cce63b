use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{BigInt, BigRational};

/// Polynomial in `n` with exact rational coefficients, ascending powers.
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `n + a`.
    pub fn linear(a: BigRational) -> Self {
        Self::new(vec![a, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `n^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluation at an integer through a common-denominator Horner pass.
    pub fn eval_int(&self, n: i64) -> BigRational {
        self.to_integer_form().eval(n)
    }

    pub fn to_integer_form(&self) -> IntegerPolynomial {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        IntegerPolynomial { numer, den }
    }
}

/// `Σ numer[i] n^i / den`, for fast repeated evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPolynomial {
    numer: Vec<BigInt>,
    den: BigInt,
}

impl IntegerPolynomial {
    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigInt::from(n);
        let top = self
            .numer
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c);
        BigRational::new(top, self.den.clone())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    /// Comma-separated coefficients, constant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Exact interpolation through `(x_i, y_i)` by divided differences, returned
/// in monomial form. Points must have distinct abscissae.
pub fn interpolate(points: &[(i64, BigRational)]) -> RationalPolynomial {
    let n = points.len();
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer((*x).into()))
        .collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Newton form back to monomials by Horner on (n - x_i)
    let mut poly = RationalPolynomial::zero();
    for i in (0..n).rev() {
        let factor = RationalPolynomial::linear(-xs[i].clone());
        poly = &(&poly * &factor) + &RationalPolynomial::constant(table[i].clone());
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn normalises_trailing_zeros() {
        let p = RationalPolynomial::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RationalPolynomial::from_integers(&[0, 0]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let a = RationalPolynomial::from_integers(&[-1, 1]);
        let b = RationalPolynomial::from_integers(&[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod, RationalPolynomial::from_integers(&[-1, 0, 1]));
        assert_eq!(&prod - &prod, RationalPolynomial::zero());
        let half = prod.scale(&ratio(1, 2));
        assert_eq!(half.eval(&ratio(3, 1)), ratio(4, 1));
        assert_eq!(half.eval_int(3), ratio(4, 1));
        assert_eq!(half.eval_int(-5), ratio(12, 1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = RationalPolynomial::new(vec![ratio(-3, 7), ratio(1, 2), ratio(0, 1), ratio(5, 3)]);
        let pts: Vec<_> = [2i64, 5, 11, 17].iter().map(|&x| (x, p.eval_int(x))).collect();
        assert_eq!(interpolate(&pts), p);
    }

    #[test]
    fn display_lists_ascending_coefficients() {
        assert_eq!(RationalPolynomial::from_integers(&[0, 1]).to_string(), "0, 1");
        let p = RationalPolynomial::new(vec![ratio(1, 16), ratio(-1, 4)]);
        assert_eq!(p.to_string(), "1/16, -1/4");
    }
}
