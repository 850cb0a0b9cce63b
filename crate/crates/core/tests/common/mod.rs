//! Reference implementations used only by the integration tests. Each one is
//! written from the definition, without going through the library.

#![allow(dead_code)]

use num_traits::{One, Zero};
use pfun_core::exact::{BigInt, BigRational};

/// All partitions of `n` with parts at most `max_part`, nonincreasing.
pub fn partitions(n: u64, max_part: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn durfee_side(parts: &[u64]) -> u64 {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p > i as u64)
        .count() as u64
}

/// `p(m)` for `m <= max` by the coin-change recurrence.
pub fn partition_counts(max: usize) -> Vec<u128> {
    bounded_part_counts(max as u64, max)
}

/// Partitions of each `m <= max` into parts `<= max_part`.
pub fn bounded_part_counts(max_part: u64, max: usize) -> Vec<u128> {
    let mut c = vec![0u128; max + 1];
    c[0] = 1;
    for part in 1..=(max_part as usize).min(max) {
        for m in part..=max {
            c[m] += c[m - part];
        }
    }
    c
}

/// Coefficients of `q^{k²} / Π_{j<=k} (1 - q^j)²` up to `q^max`.
pub fn durfee_genfun(k: u64, max: usize) -> Vec<u128> {
    let mut c = vec![0u128; max + 1];
    let start = (k * k) as usize;
    if start > max {
        return c;
    }
    c[start] = 1;
    for j in 1..=k as usize {
        for _ in 0..2 {
            for m in j..=max {
                c[m] += c[m - j];
            }
        }
    }
    c
}

/// `D(n, k)` by enumerating every partition of `n`.
pub fn durfee_brute(n: u64, k: u64) -> u128 {
    partitions(n, n).iter().filter(|p| durfee_side(p) == k).count() as u128
}

/// Σ over partitions of `n - k²` with parts `<= k` of `Π_{i<=k} (m_i + 1)`.
pub fn durfee_weighted(n: u64, k: u64) -> u128 {
    let Some(rest) = n.checked_sub(k * k) else { return 0 };
    partitions(rest, k)
        .iter()
        .map(|p| {
            (1..=k)
                .map(|i| p.iter().filter(|&&x| x == i).count() as u128 + 1)
                .product::<u128>()
        })
        .sum()
}

/// Partitions of `n` with exactly `k` parts, consecutive parts differing by
/// at least 2, and smallest part at least `least`. Built from the smallest
/// part upward.
pub fn gap_two_partitions(n: u64, k: u64, least: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, left: u64, least: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            if rest == 0 {
                let mut parts = prefix.clone();
                parts.reverse();
                out.push(parts);
            }
            return;
        }
        let mut s = least;
        // the remaining parts are at least s, s + 2, ..., s + 2(left - 1)
        while left * s + left * (left - 1) <= rest {
            prefix.push(s);
            go(rest - s, left - 1, s + 2, prefix, out);
            prefix.pop();
            s += 1;
        }
    }
    let mut out = Vec::new();
    go(n, k, least.max(1), &mut Vec::new(), &mut out);
    out
}

pub fn distinct_part_counts(max: usize) -> Vec<u128> {
    let mut c = vec![0u128; max + 1];
    c[0] = 1;
    for part in 1..=max {
        for m in (part..=max).rev() {
            c[m] += c[m - part];
        }
    }
    c
}

pub fn odd_part_counts(max: usize) -> Vec<u128> {
    let mut c = vec![0u128; max + 1];
    c[0] = 1;
    for part in (1..=max).step_by(2) {
        for m in part..=max {
            c[m] += c[m - part];
        }
    }
    c
}

/// Coefficients of `f(q) = Σ_{m>=0} q^{m²} / ((1+q)(1+q²)...(1+q^m))²`.
pub fn mock_theta(max: usize) -> Vec<i128> {
    let mut total = vec![0i128; max + 1];
    let mut m = 0usize;
    while m * m <= max {
        let mut c = vec![0i128; max + 1];
        c[m * m] = 1;
        for j in 1..=m {
            for _ in 0..2 {
                for i in j..=max {
                    c[i] -= c[i - j];
                }
            }
        }
        for (t, v) in total.iter_mut().zip(&c) {
            *t += v;
        }
        m += 1;
    }
    total
}

pub fn rank(parts: &[u64]) -> i64 {
    parts[0] as i64 - parts.len() as i64
}

/// `r₁(n)`: partitions of `n` with all gaps at least 2, via
/// `r₁(n) = Σ_k #{partitions of n - k² into parts <= k}`.
pub fn gap_two_total(n: u64) -> BigInt {
    let len = n as usize + 1;
    let mut total = BigInt::zero();
    for k in 0..=n.isqrt() {
        let rest = (n - k * k) as usize;
        let mut c = vec![BigInt::zero(); len];
        c[0] = BigInt::one();
        for part in 1..=k as usize {
            for m in part..=rest {
                let prev = c[m - part].clone();
                c[m] += prev;
            }
        }
        total += &c[rest];
    }
    total
}

fn binomial(n: u64, j: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// First `terms` Taylor coefficients, in `t = q - 1`, of
/// `(1 - q)^{2k} q^{k²} / Π_{j<=k} (1 - q^j)²`, computed by substituting
/// `q = 1 + t` and dividing power series.
pub fn taylor_at_one(k: u64, terms: usize) -> Vec<BigRational> {
    let r = |v: BigInt| BigRational::from_integer(v);
    // numerator (1 + t)^{k²}
    let num: Vec<BigRational> = (0..terms as u64).map(|i| r(binomial(k * k, i))).collect();
    // (1 - q^j) / (1 - q) = Σ_{i<j} C(j, i + 1) t^i
    let mut den = vec![BigRational::zero(); terms];
    den[0] = BigRational::one();
    for j in 1..=k {
        let block: Vec<BigRational> = (0..j.min(terms as u64)).map(|i| r(binomial(j, i + 1))).collect();
        for _ in 0..2 {
            let mut next = vec![BigRational::zero(); terms];
            for (a, x) in den.iter().enumerate() {
                for (b, y) in block.iter().enumerate() {
                    if a + b < terms {
                        next[a + b] += x * y;
                    }
                }
            }
            den = next;
        }
    }
    let mut out: Vec<BigRational> = Vec::with_capacity(terms);
    for m in 0..terms {
        let mut acc = num[m].clone();
        for i in 1..=m {
            acc -= &den[i] * &out[m - i];
        }
        out.push(acc / &den[0]);
    }
    out
}

/// Γ(x) for `x > 0` by the Lanczos approximation (g = 7, n = 9).
pub fn gamma(x: f64) -> f64 {
    const G: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = G[0];
    let t = x + 7.5;
    for (i, g) in G.iter().enumerate().skip(1) {
        a += g / (x + i as f64);
    }
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// `2 (n/4)^{ν-1} / (ν Γ(ν+1) Γ(ν/2+1) Γ(ν/2))` with `ν = (27/50)(2 + √n)`.
pub fn conjecture_bound(n: u64) -> f64 {
    let n = n as f64;
    let nu = 0.54 * (2.0 + n.sqrt());
    2.0 * (n / 4.0).powf(nu - 1.0) / (nu * gamma(nu + 1.0) * gamma(nu / 2.0 + 1.0) * gamma(nu / 2.0))
}

pub fn rademacher_bound(n: u64) -> f64 {
    use std::f64::consts::{PI, SQRT_2};
    let n = n as f64;
    let c = PI * (2.0f64 / 3.0).sqrt();
    let x = c * n.sqrt();
    10.0 * SQRT_2 / (99.0 * PI) * c.powi(3)
        + 8.0 * SQRT_2 / (11.0 * PI) * n.powf(-1.5) * (x.sinh() - x)
        + 2.0 * (c * (n - 1.0).sqrt()).exp() * 4.0 / (n - 1.0)
            * (1.0 / (5.0 * 3f64.sqrt()) + 1.0 / (9.0 * PI * SQRT_2) / (n - 1.0).sqrt())
}

pub fn lehner(n: u64) -> f64 {
    let m = 60.0 * n as f64 - 1.0;
    (15.0 + 3.0 * 5f64.sqrt()).sqrt() * m.powf(-0.75) * (std::f64::consts::PI * m.sqrt() / 15.0).exp()
}

/// Exact decimal string to rational, plus the number of places.
pub fn decimal(text: &str) -> (BigRational, u32) {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let value = BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
    (if neg { -value } else { value }, frac.len() as u32)
}

pub fn big(v: u128) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
