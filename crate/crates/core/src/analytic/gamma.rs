use std::sync::Mutex;

use num_traits::{One, Zero};

use super::real::HighPrecisionReal;
use crate::error::{Error, Result};
use crate::exact::{binomial_u64, BigInt, BigRational};

static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// `B_m` with `B_1 = -1/2`.
pub fn bernoulli(m: usize) -> BigRational {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigRational::one());
    }
    while table.len() <= m {
        let n = table.len();
        if n > 1 && n % 2 == 1 {
            table.push(BigRational::zero());
            continue;
        }
        // Σ_{j<=n} C(n+1, j) B_j = 0
        let mut acc = BigRational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * BigRational::from_integer(binomial_u64(n as u64 + 1, j as u64));
            }
        }
        table.push(-acc / BigRational::from_integer((n as u64 + 1).into()));
    }
    table[m].clone()
}

/// `ln Γ(x)` for `x > 0`.
///
/// `x` is shifted up to `z >= 0.12 · bits + 10`, where the Stirling series
/// reaches its working accuracy well before its smallest term, and the shift
/// is undone with one logarithm of the product `x (x+1) ... (z-1)`.
pub fn ln_gamma(x: &HighPrecisionReal) -> Result<HighPrecisionReal> {
    if x.is_negative() || x.is_zero() {
        return Err(Error::Domain("ln Γ needs a positive argument".into()));
    }
    let digits = x.digits();
    let bits = x.bits();
    let floor_z = 0.12 * bits as f64 + 10.0;
    let xf = x.to_f64();
    let steps = if xf < floor_z { (floor_z - xf).ceil() as u64 } else { 0 };

    let mut product = HighPrecisionReal::one(digits);
    for i in 0..steps {
        product = product * (x + &HighPrecisionReal::from_i64(i as i64, digits));
    }
    let z = x + &HighPrecisionReal::from_i64(steps as i64, digits);

    let half = HighPrecisionReal::from_rational(&BigRational::new(1.into(), 2.into()), digits);
    let two_pi = HighPrecisionReal::pi(digits) * HighPrecisionReal::from_i64(2, digits);
    let mut total = &(&(&z - &half) * &z.ln()?) - &z;
    total = &total + &(two_pi.ln()?.half());

    let z_inv = z.recip()?;
    let z_inv2 = &z_inv * &z_inv;
    let mut power = z_inv;
    let cutoff = HighPrecisionReal::from_rational(
        &BigRational::new(1.into(), BigInt::one() << (bits + 8)),
        digits,
    );
    let max_terms = (std::f64::consts::PI * floor_z.max(xf)) as usize + 2;
    let mut converged = false;
    for j in 1..=max_terms {
        let coeff = bernoulli(2 * j) / BigRational::from_integer(((2 * j) * (2 * j - 1)).into());
        let term = HighPrecisionReal::from_rational(&coeff, digits) * &power;
        if term.abs() < cutoff {
            converged = true;
            break;
        }
        total = total + term;
        power = power * &z_inv2;
    }
    if !converged {
        return Err(Error::Convergence("Stirling series did not reach working precision".into()));
    }
    if steps > 0 {
        total = total - product.ln()?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, ratio};

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(4), ratio(-1, 30));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
        assert!(bernoulli(13).is_zero());
    }

    #[test]
    fn gamma_at_integers_is_factorial() {
        let d = 60;
        for m in 1..=30i64 {
            let g = ln_gamma(&HighPrecisionReal::from_i64(m, d)).unwrap().exp().unwrap();
            let exact = HighPrecisionReal::from_integer(factorial(m as u64 - 1), d);
            let diff = (&g - &exact).abs().to_rational();
            let tol = exact.to_rational() / BigRational::from_integer(BigInt::from(10).pow(55));
            assert!(diff < tol, "Γ({m})");
        }
    }

    #[test]
    fn gamma_at_half() {
        let d = 50;
        let x = HighPrecisionReal::from_rational(&ratio(1, 2), d);
        let g = ln_gamma(&x).unwrap().exp().unwrap();
        let root_pi = HighPrecisionReal::pi(d).sqrt().unwrap();
        assert_eq!(g.to_decimal(45), root_pi.to_decimal(45));
    }

    #[test]
    fn rejects_non_positive() {
        assert!(ln_gamma(&HighPrecisionReal::zero(30)).is_err());
    }
}
