use num_integer::Integer;
use num_traits::Signed;

use super::real::HighPrecisionReal;
use crate::error::{Error, Result};
use crate::exact::{kronecker, ratio, BigInt, BigRational};

/// `sign · e^{iπρ}` with `ρ` kept exactly and reduced into `[0, 2)`.
#[derive(Clone, Debug)]
pub struct RootOfUnity {
    sign: i8,
    exponent: BigRational,
}

fn reduce_mod_two(rho: &BigRational) -> BigRational {
    let two = ratio(2, 1);
    rho - (rho / &two).floor() * two
}

impl RootOfUnity {
    pub fn new(sign: i8, exponent: BigRational) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Domain(format!("sign must be ±1, got {sign}")));
        }
        Ok(Self {
            sign,
            exponent: reduce_mod_two(&exponent),
        })
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `ρ` in `[0, 2)`.
    pub fn exponent(&self) -> &BigRational {
        &self.exponent
    }

    /// The exponent with the sign folded in, so equal values compare equal.
    fn canonical(&self) -> BigRational {
        if self.sign == 1 {
            self.exponent.clone()
        } else {
            reduce_mod_two(&(&self.exponent + ratio(1, 1)))
        }
    }

    pub fn conjugate(&self) -> Self {
        Self {
            sign: self.sign,
            exponent: reduce_mod_two(&-&self.exponent),
        }
    }

    /// Multiplies by `e^{iπθ}`.
    pub fn rotate(&self, theta: &BigRational) -> Self {
        Self {
            sign: self.sign,
            exponent: reduce_mod_two(&(&self.exponent + theta)),
        }
    }

    /// `(Re, Im)` at `digits` decimal digits.
    pub fn evaluate(&self, digits: u32) -> (HighPrecisionReal, HighPrecisionReal) {
        let (c, s) = HighPrecisionReal::cos_sin_pi(&self.exponent, digits);
        if self.sign == 1 {
            (c, s)
        } else {
            (-c, -s)
        }
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for RootOfUnity {}

/// Which of the two defining expressions of `ω(h, k)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaBranch {
    /// Valid when `h` is odd.
    OddH,
    /// Valid when `k` is odd.
    OddK,
}

/// Least positive `h'` with `h h' ≡ -1 (mod k)`.
pub fn h_prime(h: u64, k: u64) -> Result<u64> {
    if k == 1 {
        return Ok(1);
    }
    let g = (h as i64).extended_gcd(&(k as i64));
    if g.gcd != 1 {
        return Err(Error::Domain(format!("gcd({h}, {k}) != 1")));
    }
    let inverse = g.x.rem_euclid(k as i64);
    let hp = (k as i64 - inverse).rem_euclid(k as i64);
    Ok(if hp == 0 { k } else { hp as u64 })
}

fn check_pair(h: u64, k: u64) -> Result<()> {
    if k == 0 || h >= k {
        return Err(Error::Domain(format!("need 0 <= h < k, got h = {h}, k = {k}")));
    }
    if h.gcd(&k) != 1 {
        return Err(Error::Domain(format!("gcd({h}, {k}) != 1")));
    }
    Ok(())
}

/// `ω(h, k) = e^{πi s(h,k)}` from one branch with a caller-chosen `h'`.
///
/// This is the conjugate of [`omega_as_printed_with`]: the exponent carries
/// the factor `-πi/12`.
pub fn omega_with(h: u64, k: u64, hp: u64, branch: OmegaBranch) -> Result<RootOfUnity> {
    Ok(omega_as_printed_with(h, k, hp, branch)?.conjugate())
}

/// The two-branch expression with exponent `+πi/12 (...)`, as it is usually
/// displayed without the leading minus sign. Summing it in `A_k(n)` does not
/// reproduce `p(n)`; it is kept for comparison only.
pub fn omega_as_printed_with(
    h: u64,
    k: u64,
    hp: u64,
    branch: OmegaBranch,
) -> Result<RootOfUnity> {
    check_pair(h, k)?;
    if (h as u128 * hp as u128 + 1) % k as u128 != 0 {
        return Err(Error::Domain(format!("{h} · {hp} is not -1 mod {k}")));
    }
    let (hi, ki, hpi) = (
        BigInt::from(h),
        BigInt::from(k),
        BigInt::from(hp),
    );
    let kq = BigRational::from_integer(ki.clone());
    let k_minus_inv = &kq - kq.recip();
    let core = BigRational::from_integer(BigInt::from(2) * &hi - &hpi + &hi * &hi * &hpi);
    let shared = k_minus_inv * core;
    let (sign, head) = match branch {
        OmegaBranch::OddH => {
            if h % 2 == 0 {
                return Err(Error::Domain(format!("odd-h branch needs odd h, got {h}")));
            }
            let s = kronecker(-(k as i64), h as i64);
            (s, BigInt::from(3) * (BigInt::from(2) - &hi * &ki - &hi))
        }
        OmegaBranch::OddK => {
            if k % 2 == 0 {
                return Err(Error::Domain(format!("odd-k branch needs odd k, got {k}")));
            }
            let s = kronecker(-(h as i64), k as i64);
            (s, BigInt::from(3) * (&ki - 1))
        }
    };
    let rho = (BigRational::from_integer(head) + shared) / ratio(12, 1);
    RootOfUnity::new(sign, rho)
}

/// `ω(h, k)`, the 24k-th root of unity in the Rademacher series, with `h'`
/// the least positive solution of `h h' ≡ -1 (mod k)`. The odd-`h` branch is
/// used whenever `h` is odd.
pub fn omega(h: u64, k: u64) -> Result<RootOfUnity> {
    check_pair(h, k)?;
    let branch = if h % 2 == 1 { OmegaBranch::OddH } else { OmegaBranch::OddK };
    omega_with(h, k, h_prime(h, k)?, branch)
}

/// [`omega_as_printed_with`] with the least positive `h'`.
pub fn omega_as_printed(h: u64, k: u64) -> Result<RootOfUnity> {
    Ok(omega(h, k)?.conjugate())
}

/// `A_k(n) = Σ_{0<=h<k, gcd(h,k)=1} ω(h, k) e^{-2πinh/k}`.
///
/// The sum is real; its imaginary part is required to be below
/// `10^{-(digits-5)}`.
pub fn a_k(n: u64, k: u64, digits: u32) -> Result<HighPrecisionReal> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let mut re = HighPrecisionReal::zero(digits);
    let mut im = HighPrecisionReal::zero(digits);
    for h in 0..k {
        if h.gcd(&k) != 1 {
            continue;
        }
        let phase = BigRational::new(BigInt::from(-2) * BigInt::from(n) * BigInt::from(h), k.into());
        let (c, s) = omega(h, k)?.rotate(&phase).evaluate(digits);
        re = re + c;
        im = im + s;
    }
    let limit = BigRational::new(1.into(), BigInt::from(10).pow(digits.saturating_sub(5)));
    if im.to_rational().abs() >= limit {
        return Err(Error::Precision(format!(
            "A_{k}({n}) has imaginary part {:e}",
            im.to_f64()
        )));
    }
    Ok(re)
}

fn x_of(n: u64, digits: u32) -> HighPrecisionReal {
    HighPrecisionReal::from_rational(&(BigRational::from_integer(n.into()) - ratio(1, 24)), digits)
}

/// The `k`-th term of the Rademacher series for `p(n)`:
/// `√k A_k(n) / (π√2) · [c/(2x) cosh(c√x) - sinh(c√x) / (2x^{3/2})]`
/// with `x = n - 1/24` and `c = (π/k)√(2/3)`.
pub fn hrr_term(n: u64, k: u64, digits: u32) -> Result<HighPrecisionReal> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let a = a_k(n, k, digits)?;
    if a.is_zero() {
        return Ok(a);
    }
    let one = |v: i64| HighPrecisionReal::from_i64(v, digits);
    let pi = HighPrecisionReal::pi(digits);
    let x = x_of(n, digits);
    let root_x = x.sqrt()?;
    let c = &pi / &one(k as i64)
        * HighPrecisionReal::from_rational(&ratio(2, 3), digits).sqrt()?;
    let s = &c * &root_x;
    let bracket = &(&c / &(&one(2) * &x)) * &s.cosh()?
        - &s.sinh()? / (one(2) * &x * &root_x);
    let prefactor = one(k as i64).sqrt()? * a / (pi * one(2).sqrt()?);
    Ok(prefactor * bracket)
}

/// `p_R(n)`, the first term of the Rademacher series.
pub fn p_r(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    hrr_term(n, 1, digits)
}

/// `p_R(n)` written out with `cosh` and `sinh` of `π√(2x/3)`.
pub fn p_r_closed_form(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let one = |v: i64| HighPrecisionReal::from_i64(v, digits);
    let pi = HighPrecisionReal::pi(digits);
    let x = x_of(n, digits);
    let arg = &pi * &(&x * &HighPrecisionReal::from_rational(&ratio(2, 3), digits)).sqrt()?;
    let first = arg.cosh()? / (one(2) * one(3).sqrt()? * &x);
    let second = arg.sinh()? / (one(2) * &pi * one(2).sqrt()? * &x * x.sqrt()?);
    Ok(first - second)
}

/// Default number of Rademacher terms for `hrr_p`.
pub fn default_terms(n: u64) -> u64 {
    n.isqrt() + 5
}

/// `p(n)` by rounding the truncated Rademacher series.
///
/// The partial sum must lie within `1/4` of an integer. Otherwise the sum is
/// redone once with twice the terms and 20 more digits before giving up.
pub fn hrr_p(n: u64, terms: Option<u64>, digits: u32) -> Result<BigInt> {
    let mut k_max = terms.unwrap_or_else(|| default_terms(n));
    let mut d = digits;
    for attempt in 0..2 {
        let mut sum = HighPrecisionReal::zero(d);
        for k in 1..=k_max {
            sum = sum + hrr_term(n, k, d)?;
        }
        let rounded = sum.round();
        let distance = (sum.to_rational() - BigRational::from_integer(rounded.clone())).abs();
        if distance < ratio(1, 4) {
            return Ok(rounded);
        }
        if attempt == 0 {
            k_max *= 2;
            d += 20;
        }
    }
    Err(Error::Convergence(format!(
        "Rademacher sum for p({n}) not within 1/4 of an integer after {k_max} terms"
    )))
}
