use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_decimal, isqrt, round_half_even, BigInt, BigRational};

/// Binary digits carried beyond the requested decimal precision. Every
/// operation rounds to `bits_for_digits(d)` bits, so a chain of `m`
/// operations stays within `m · 2^-40` relative of the requested accuracy.
pub const GUARD_BITS: u64 = 40;

/// Working mantissa width for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u64 {
    // log2(10) < 3.3219281
    (u64::from(digits) * 33_219_281).div_ceil(10_000_000) + GUARD_BITS
}

/// `mantissa · 2^exponent`, rounded to the working width of `digits`
/// decimal digits after each operation.
#[derive(Clone, Debug)]
pub struct HighPrecisionReal {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

fn shift(value: &BigInt, by: i64) -> BigInt {
    if by >= 0 {
        value << by as u64
    } else {
        value >> (-by) as u64
    }
}

fn bit_len(value: &BigInt) -> u64 {
    value.bits()
}

impl HighPrecisionReal {
    fn raw(mantissa: BigInt, exponent: i64, digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        if mantissa.is_zero() {
            return Self { mantissa, exponent: 0, digits };
        }
        let len = bit_len(&mantissa);
        if len <= bits {
            return Self { mantissa, exponent, digits };
        }
        let drop = len - bits;
        let half = BigInt::one() << (drop - 1);
        let magnitude = (mantissa.abs() + half) >> drop;
        let mantissa = if mantissa.is_negative() { -magnitude } else { magnitude };
        Self {
            mantissa,
            exponent: exponent + drop as i64,
            digits,
        }
    }

    pub fn zero(digits: u32) -> Self {
        Self::raw(BigInt::zero(), 0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::raw(BigInt::one(), 0, digits)
    }

    pub fn from_integer(value: BigInt, digits: u32) -> Self {
        Self::raw(value, 0, digits)
    }

    pub fn from_i64(value: i64, digits: u32) -> Self {
        Self::from_integer(value.into(), digits)
    }

    pub fn from_rational(value: &BigRational, digits: u32) -> Self {
        if value.denom().is_one() {
            return Self::from_integer(value.numer().clone(), digits);
        }
        let bits = bits_for_digits(digits) as i64;
        let s = bits + bit_len(value.denom()) as i64 - bit_len(value.numer()) as i64 + 2;
        let num = shift(value.numer(), s.max(0));
        let den = shift(value.denom(), (-s).max(0));
        Self::raw(num / den, -s, digits)
    }

    /// `value / 2^w` for a fixed-point integer.
    fn from_fixed(value: BigInt, w: u64, digits: u32) -> Self {
        Self::raw(value, -(w as i64), digits)
    }

    /// `⌊self · 2^w⌋`.
    fn to_fixed(&self, w: u64) -> BigInt {
        shift(&self.mantissa, self.exponent + w as i64)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u64 {
        bits_for_digits(self.digits)
    }

    /// Same value re-rounded to another precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::raw(self.mantissa.clone(), self.exponent, digits)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            ..self.clone()
        }
    }

    /// The exact binary value.
    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            BigRational::new(self.mantissa.clone(), BigInt::one() << (-self.exponent) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = bit_len(&self.mantissa) as i64;
        let drop = (len - 60).max(0);
        let top = shift(&self.mantissa, -drop).to_f64().unwrap_or(f64::NAN);
        let e = self.exponent + drop;
        top * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Nearest integer, ties to even.
    pub fn round(&self) -> BigInt {
        round_half_even(&self.to_rational())
    }

    /// Decimal rendering with `places` digits after the point.
    pub fn to_decimal(&self, places: usize) -> String {
        format_decimal(&self.to_rational(), places)
    }

    fn joint_digits(&self, other: &Self) -> u32 {
        self.digits.max(other.digits)
    }

    fn top(&self) -> i64 {
        self.exponent + bit_len(&self.mantissa) as i64
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.digits).checked_div(self)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let digits = self.joint_digits(other);
        let bits = bits_for_digits(digits) as i64;
        let s = bits + bit_len(&other.mantissa) as i64 - bit_len(&self.mantissa) as i64 + 2;
        let num = shift(&self.mantissa, s.max(0));
        let den = shift(&other.mantissa, (-s).max(0));
        Ok(Self::raw(num / den, self.exponent - other.exponent - s, digits))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let bits = self.bits() as i64;
        let mut s = (2 * bits + 2 - bit_len(&self.mantissa) as i64).max(0);
        if (self.exponent - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let root = isqrt(&shift(&self.mantissa, s))?;
        Ok(Self::raw(root, (self.exponent - s) / 2, self.digits))
    }

    pub fn exp(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::one(self.digits));
        }
        let xf = self.to_f64();
        if !xf.is_finite() || xf.abs() > 1e12 {
            return Err(Error::Domain(format!("exp argument {xf:e} out of range")));
        }
        let k = (xf / std::f64::consts::LN_2).round() as i64;
        let halvings = 12u64;
        let w = self.bits() + halvings + 24 + 64 - u64::from(k.unsigned_abs().leading_zeros());
        let x = self.to_fixed(w);
        let r = (x - BigInt::from(k) * ln2_fixed(w)) >> halvings;
        let one = BigInt::one() << w;
        let mut sum = one.clone();
        let mut term = one;
        for i in 1u64.. {
            term = ((term * &r) >> w) / i;
            if term.is_zero() {
                break;
            }
            sum += &term;
        }
        for _ in 0..halvings {
            sum = (&sum * &sum) >> w;
        }
        Ok(Self::raw(sum, k - w as i64, self.digits))
    }

    /// Natural logarithm through `ln y = 2 atanh((y - 1) / (y + 1))` on the
    /// mantissa scaled into `[1/√2, √2)`.
    pub fn ln(&self) -> Result<Self> {
        if self.is_negative() || self.is_zero() {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        let w = self.bits() + 30;
        let len = bit_len(&self.mantissa) as i64;
        let mut e2 = self.exponent + len;
        let mut y = shift(&self.mantissa, w as i64 - len);
        let one = BigInt::one() << w;
        if BigInt::from(2) * &y * &y < &one * &one {
            y <<= 1u32;
            e2 -= 1;
        }
        let z = ((&y - &one) << w) / (&y + &one);
        let z2 = (&z * &z) >> w;
        let mut sum = z.clone();
        let mut power = z;
        for i in (3u64..).step_by(2) {
            power = (power * &z2) >> w;
            let t = &power / i;
            if t.is_zero() {
                break;
            }
            sum += t;
        }
        let extra = 64u64;
        let log2_part = (BigInt::from(e2) * ln2_fixed(w + extra)) >> extra;
        Ok(Self::from_fixed(sum * 2 + log2_part, w, self.digits))
    }

    pub fn pow(&self, exponent: &Self) -> Result<Self> {
        (exponent * &self.ln()?).exp()
    }

    pub fn cosh(&self) -> Result<Self> {
        let e = self.exp()?;
        let inv = e.recip()?;
        Ok((&e + &inv).half())
    }

    pub fn sinh(&self) -> Result<Self> {
        let e = self.exp()?;
        let inv = e.recip()?;
        Ok((&e - &inv).half())
    }

    pub fn half(&self) -> Self {
        Self::raw(self.mantissa.clone(), self.exponent - 1, self.digits)
    }

    pub fn pi(digits: u32) -> Self {
        let w = bits_for_digits(digits) + 8;
        Self::from_fixed(pi_fixed(w), w, digits)
    }

    pub fn ln2(digits: u32) -> Self {
        let w = bits_for_digits(digits) + 8;
        Self::from_fixed(ln2_fixed(w), w, digits)
    }

    /// `(cos πρ, sin πρ)` for rational `ρ`, exact at multiples of `1/2`.
    pub fn cos_sin_pi(rho: &BigRational, digits: u32) -> (Self, Self) {
        let two = BigRational::from_integer(2.into());
        let mut r = rho - (rho / &two).floor() * &two;
        // r in [0, 2); move to (-1, 1]
        if r > BigRational::one() {
            r -= &two;
        }
        let negative_sin = r.is_negative();
        let mut r = r.abs();
        let half = BigRational::new(1.into(), 2.into());
        let reflect = r > half;
        if reflect {
            r = BigRational::one() - r;
        }
        let (c, s) = if r.is_zero() {
            (Self::one(digits), Self::zero(digits))
        } else if r == half {
            (Self::zero(digits), Self::one(digits))
        } else {
            let w = bits_for_digits(digits) + 24;
            let theta = pi_fixed(w) * r.numer() / r.denom();
            let (c, s) = cos_sin_fixed(&theta, w);
            (Self::from_fixed(c, w, digits), Self::from_fixed(s, w, digits))
        };
        let c = if reflect { -c } else { c };
        let s = if negative_sin { -s } else { s };
        (c, s)
    }
}

/// Taylor series for `|θ| <= π/2` in fixed point at scale `2^w`.
fn cos_sin_fixed(theta: &BigInt, w: u64) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let t2 = (theta * theta) >> w;
    let mut cos = one.clone();
    let mut term = one;
    for i in (2u64..).step_by(2) {
        term = -((term * &t2) >> w) / (i * (i - 1));
        if term.is_zero() {
            break;
        }
        cos += &term;
    }
    let mut sin = theta.clone();
    let mut term = theta.clone();
    for i in (3u64..).step_by(2) {
        term = -((term * &t2) >> w) / (i * (i - 1));
        if term.is_zero() {
            break;
        }
        sin += &term;
    }
    (cos, sin)
}

/// `⌊2^w / m⌋`-scaled `atan(1/m)` (alternating) or `atanh(1/m)`.
fn arc_inverse(m: u64, w: u64, alternating: bool) -> BigInt {
    let m2 = BigInt::from(m * m);
    let mut power = (BigInt::one() << w) / m;
    let mut sum = power.clone();
    for i in 1u64.. {
        power /= &m2;
        let t = &power / (2 * i + 1);
        if t.is_zero() {
            break;
        }
        if alternating && i % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
    }
    sum
}

type ConstantCache = Mutex<Option<(u64, BigInt)>>;

static PI_CACHE: ConstantCache = Mutex::new(None);
static LN2_CACHE: ConstantCache = Mutex::new(None);

fn cached_constant(cache: &ConstantCache, w: u64, compute: fn(u64) -> BigInt) -> BigInt {
    let mut slot = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some((have, value)) = slot.as_ref() {
        if *have >= w {
            return value >> (have - w);
        }
    }
    let guard = 24;
    let value = compute(w + guard) >> guard;
    *slot = Some((w, value.clone()));
    value
}

/// `π · 2^w` by Machin's formula.
fn pi_fixed(w: u64) -> BigInt {
    cached_constant(&PI_CACHE, w, |w| {
        arc_inverse(5, w, true) * 16 - arc_inverse(239, w, true) * 4
    })
}

/// `ln 2 · 2^w` as `2 atanh(1/3)`.
fn ln2_fixed(w: u64) -> BigInt {
    cached_constant(&LN2_CACHE, w, |w| arc_inverse(3, w, false) * 2)
}

impl PartialEq for HighPrecisionReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for HighPrecisionReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl HighPrecisionReal {
    fn cmp_value(&self, other: &Self) -> Ordering {
        let e = self.exponent.min(other.exponent);
        shift(&self.mantissa, self.exponent - e).cmp(&shift(&other.mantissa, other.exponent - e))
    }
}

impl Neg for HighPrecisionReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            mantissa: -self.mantissa,
            ..self
        }
    }
}

impl Neg for &HighPrecisionReal {
    type Output = HighPrecisionReal;
    fn neg(self) -> HighPrecisionReal {
        -self.clone()
    }
}

impl Add for &HighPrecisionReal {
    type Output = HighPrecisionReal;
    fn add(self, other: Self) -> HighPrecisionReal {
        let digits = self.joint_digits(other);
        if self.is_zero() {
            return other.with_digits(digits);
        }
        if other.is_zero() {
            return self.with_digits(digits);
        }
        // An addend entirely below the rounding point only matters for rounding.
        let limit = bits_for_digits(digits) as i64 + 4;
        if self.top() - other.top() > limit {
            return self.with_digits(digits);
        }
        if other.top() - self.top() > limit {
            return other.with_digits(digits);
        }
        let e = self.exponent.min(other.exponent);
        let m = shift(&self.mantissa, self.exponent - e) + shift(&other.mantissa, other.exponent - e);
        HighPrecisionReal::raw(m, e, digits)
    }
}

impl Sub for &HighPrecisionReal {
    type Output = HighPrecisionReal;
    fn sub(self, other: Self) -> HighPrecisionReal {
        self + &(-other)
    }
}

impl Mul for &HighPrecisionReal {
    type Output = HighPrecisionReal;
    fn mul(self, other: Self) -> HighPrecisionReal {
        HighPrecisionReal::raw(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
            self.joint_digits(other),
        )
    }
}

impl Div for &HighPrecisionReal {
    type Output = HighPrecisionReal;
    /// Panics on a zero divisor; see [`HighPrecisionReal::checked_div`].
    fn div(self, other: Self) -> HighPrecisionReal {
        self.checked_div(other).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for HighPrecisionReal {
            type Output = HighPrecisionReal;
            fn $method(self, other: Self) -> HighPrecisionReal {
                (&self).$method(&other)
            }
        }
        impl $tr<&HighPrecisionReal> for HighPrecisionReal {
            type Output = HighPrecisionReal;
            fn $method(self, other: &HighPrecisionReal) -> HighPrecisionReal {
                (&self).$method(other)
            }
        }
        impl $tr<HighPrecisionReal> for &HighPrecisionReal {
            type Output = HighPrecisionReal;
            fn $method(self, other: HighPrecisionReal) -> HighPrecisionReal {
                self.$method(&other)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for HighPrecisionReal {
    /// Scientific form with the full decimal precision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let q = self.to_rational();
        let magnitude = self.to_f64().abs().log10().floor() as i64;
        let scale = BigRational::from_integer(BigInt::from(10).pow(magnitude.unsigned_abs() as u32));
        let scaled = if magnitude >= 0 { q / scale } else { q * scale };
        let places = self.digits.saturating_sub(1) as usize;
        write!(f, "{}e{}", format_decimal(&scaled, places), magnitude)
    }
}
