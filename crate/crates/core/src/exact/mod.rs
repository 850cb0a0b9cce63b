//! Exact scalars shared by every other module.
//!
//! All combinatorial quantities are carried as [`BigInt`] or [`BigRational`];
//! floating point only appears in [`crate::analytic`].

mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use series::SeriesAtOne;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Kronecker symbol `(a | b)`.
///
/// Agrees with the Jacobi symbol for odd positive `b`, and therefore with the
/// Legendre symbol when `b` is an odd prime.
pub fn kronecker(a: i64, b: i64) -> i8 {
    let mut a = a as i128;
    let mut b = b as i128;
    if b == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let mut result: i8 = 1;
    let twos = b.trailing_zeros();
    b >>= twos;
    if twos % 2 == 1 {
        // (a | 2) depends on a mod 8
        result = match a.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    if b < 0 {
        b = -b;
        if a < 0 {
            result = -result;
        }
    }
    // Jacobi symbol with b odd and positive.
    a = a.rem_euclid(b);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = b % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut b);
        if a % 4 == 3 && b % 4 == 3 {
            result = -result;
        }
        a %= b;
    }
    if b == 1 {
        result
    } else {
        0
    }
}

/// Binomial coefficient `C(n, j)` for any integer `n`.
///
/// Uses the falling-factorial definition, so the result is 0 for
/// `0 <= n < j` and the generalised value for negative `n`.
pub fn binomial(n: &BigInt, j: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1.
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient for machine-size arguments.
pub fn binomial_u64(n: u64, j: u64) -> BigInt {
    binomial(&BigInt::from(n), j)
}

/// Integer square root: the largest `m` with `m * m <= n`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative value {n}")));
    }
    if n.is_zero() {
        return Ok(BigInt::zero());
    }
    // Newton iteration from a power of two above the root.
    let mut x = BigInt::one() << (n.bits() / 2 + 1);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

/// `floor(sqrt(n))` for machine integers.
pub fn isqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// Least common multiple of `1, 2, ..., k` (1 for `k = 0`).
pub fn lcm_up_to(k: u64) -> u64 {
    (1..=k).fold(1u64, |acc, j| acc.lcm(&j))
}

/// `k!` as an exact integer.
pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Exact rational from a pair of machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational from an integer.
pub fn rational(value: &BigInt) -> BigRational {
    BigRational::from_integer(value.clone())
}

/// Formats `x` with exactly `places` digits after the decimal point,
/// rounding half to even. Never prints a negative zero.
pub fn format_decimal(x: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x * BigRational::from_integer(scale);
    let rounded = round_half_even(&scaled);
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Parses a plain decimal such as `-0.00202` or `7` exactly. Returns the
/// value and the number of digits after the point.
pub fn parse_decimal(text: &str) -> Result<(BigRational, usize)> {
    let bad = || Error::Domain(format!("not a decimal number: {text:?}"));
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    if body.contains('.') && frac_part.is_empty() {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    let value = BigRational::new(if negative { -digits } else { digits }, scale);
    Ok((value, frac_part.len()))
}

/// Nearest integer to `x`, ties to even.
pub fn round_half_even(x: &BigRational) -> BigInt {
    let floor = x.floor().to_integer();
    let frac = x - BigRational::from_integer(floor.clone());
    let half = ratio(1, 2);
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_decimal_round_trips() {
        assert_eq!(parse_decimal("-0.00202").unwrap(), (ratio(-202, 100000), 5));
        assert_eq!(parse_decimal("7").unwrap(), (ratio(7, 1), 0));
        assert_eq!(parse_decimal("0.25").unwrap(), (ratio(1, 4), 2));
        for bad in ["", "-", "1.", ".5", "1e5", "1,0", "--1"] {
            assert!(parse_decimal(bad).is_err(), "{bad:?}");
        }
        let x = ratio(-1442614889, 1000);
        assert_eq!(parse_decimal(&format_decimal(&x, 3)).unwrap().0, x);
    }

    fn legendre_by_euler(a: i64, p: i64) -> i8 {
        let r = BigInt::from(a.rem_euclid(p)).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
        if r.is_zero() {
            0
        } else if r.is_one() {
            1
        } else {
            -1
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(1, 3), 1);
        assert_eq!(kronecker(2, 3), -1);
        for a in -20..20 {
            assert_eq!(kronecker(a, 1), 1);
        }
    }

    #[test]
    fn kronecker_matches_euler_criterion_for_odd_primes() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            for a in -60..60 {
                assert_eq!(kronecker(a, p), legendre_by_euler(a, p), "({a} | {p})");
            }
        }
    }

    #[test]
    fn kronecker_even_and_negative_moduli() {
        assert_eq!(kronecker(1, 2), 1);
        assert_eq!(kronecker(3, 2), -1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-1, -1), -1);
        assert_eq!(kronecker(0, 1), 1);
        assert_eq!(kronecker(0, 3), 0);
        // multiplicative in the bottom argument
        for a in -15..15 {
            assert_eq!(kronecker(a, 15), kronecker(a, 3) * kronecker(a, 5));
            assert_eq!(kronecker(a, 12), kronecker(a, 4) * kronecker(a, 3));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_u64(5, 2), BigInt::from(10));
        assert_eq!(binomial_u64(17, 0), BigInt::one());
        assert_eq!(binomial_u64(9, 9), BigInt::one());
        assert_eq!(binomial_u64(3, 5), BigInt::zero());
        assert_eq!(binomial(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(binomial(&BigInt::from(-2), 2), BigInt::from(3));
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&BigInt::zero()).unwrap(), BigInt::zero());
        assert_eq!(isqrt(&BigInt::from(24)).unwrap(), BigInt::from(4));
        assert_eq!(isqrt(&BigInt::from(25)).unwrap(), BigInt::from(5));
        assert!(matches!(isqrt(&BigInt::from(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn isqrt_brackets_large_values() {
        let n: BigInt = "2300165032574323995027123456789".parse().unwrap();
        let m = isqrt(&n).unwrap();
        assert!(&m * &m <= n);
        assert!((&m + 1) * (&m + 1) > n);
    }

    #[test]
    fn decimal_formatting_rounds_half_even() {
        assert_eq!(format_decimal(&ratio(1, 4), 5), "0.25000");
        assert_eq!(format_decimal(&ratio(5, 2), 0), "2");
        assert_eq!(format_decimal(&ratio(7, 2), 0), "4");
        assert_eq!(format_decimal(&ratio(-5, 2), 0), "-2");
        assert_eq!(format_decimal(&ratio(1, 8), 2), "0.12");
        assert_eq!(format_decimal(&ratio(3, 8), 2), "0.38");
        assert_eq!(format_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(format_decimal(&ratio(-123, 100), 3), "-1.230");
        assert_eq!(format_decimal(&ratio(42, 1), 1), "42.0");
    }

    #[test]
    fn lcm_values() {
        assert_eq!(lcm_up_to(0), 1);
        assert_eq!(lcm_up_to(4), 12);
        assert_eq!(lcm_up_to(5), 60);
    }
}
