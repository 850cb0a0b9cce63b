//! The `(k-1)`-fold Durfee multisum and its relatives.
//!
//! `D(n, k)` is the sum, over multiplicities `m_k, ..., m_2` with
//! `0 <= m_j <= U_j`, of `(1 + m_1) * Π_{i=2..k} (m_i + 1)`, where
//! `m_1 = n - k² - Σ_{h>=2} h m_h` and
//! `U_j = floor((n - k² - Σ_{h>j} h m_h) / j)`.
//!
//! Every evaluation here walks the index tuples with an explicit odometer
//! (no recursion) that keeps the residual `m_1` up to date incrementally.

mod bijection;

pub use bijection::{gap_two_to_bounded, rogers_ramanujan_map};

use num_traits::{One, ToPrimitive, Zero};

use crate::exact::BigInt;

/// Multiplicities `m_2, ..., m_k` of a partition of `n - k²` with parts at
/// most `k`; `m_1` is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    k: u64,
    m: Vec<u64>,
}

impl MultiIndex {
    /// All-zero index for order `k`.
    pub fn zeros(k: u64) -> Self {
        Self {
            k,
            m: vec![0; k as usize + 1],
        }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `m_j` for `2 <= j <= k`.
    pub fn get(&self, j: u64) -> u64 {
        assert!((2..=self.k).contains(&j), "index m_{j} outside 2..={}", self.k);
        self.m[j as usize]
    }

    pub fn set(&mut self, j: u64, value: u64) {
        assert!((2..=self.k).contains(&j), "index m_{j} outside 2..={}", self.k);
        self.m[j as usize] = value;
    }

    /// `m_1 = n - k² - Σ_{h=2..k} h m_h`, or `None` if that is negative.
    pub fn residual(&self, n: u64) -> Option<u64> {
        let used: u64 = (2..=self.k).map(|h| h * self.m[h as usize]).sum();
        n.checked_sub(self.k * self.k + used)
    }
}

/// Tally of integer additions and multiplications spent forming and
/// accumulating summands. Loop bookkeeping is not counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub additions: u64,
    pub multiplications: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications
    }
}

/// `U_j(n, k)` given the indices `m_{j+1}, ..., m_k` already fixed in `fixed`.
///
/// Panics if the fixed indices already overspend `n - k²`.
pub fn upper_bound(n: u64, k: u64, j: u64, fixed: &MultiIndex) -> u64 {
    assert!(2 <= j && j <= k, "U_j needs 2 <= j <= k (j = {j}, k = {k})");
    assert_eq!(fixed.k(), k, "multi-index order mismatch");
    let used: u64 = (j + 1..=k).map(|h| h * fixed.get(h)).sum();
    let available = (n as i128) - (k * k) as i128 - used as i128;
    assert!(
        available >= 0,
        "fixed indices exceed n - k² (n = {n}, k = {k}, j = {j})"
    );
    (available as u64) / j
}

/// One visited tuple of the odometer.
pub(crate) struct Step<'a> {
    /// `m[j]` for `1 <= j <= k`; `m[1]` is the derived residual.
    pub m: &'a [i64],
    /// Highest level whose index changed since the previous step; every
    /// lower level was reset to its lower bound.
    pub changed: usize,
}

/// Walks `m_k, ..., m_2` with `lower(j) <= m_j <= U_j`, calling `visit` on
/// each tuple. `k = 1` yields the single tuple `m_1 = n - 1`.
pub(crate) fn walk<L, V>(n: u64, k: u64, lower: L, mut visit: V)
where
    L: Fn(usize) -> i64,
    V: FnMut(&Step<'_>),
{
    if k == 0 || k * k > n {
        return;
    }
    let k = k as usize;
    let base = n as i64 - (k * k) as i64;
    let mut m = vec![0i64; k + 1];
    if k == 1 {
        m[1] = base;
        visit(&Step { m: &m, changed: 1 });
        return;
    }
    // rem[j - 1] is what remains for levels below j once m_j is chosen, so
    // rem[1] is m_1 itself.
    let mut rem = vec![0i64; k + 1];
    rem[k] = base;
    let mut level = k;
    m[k] = lower(k) - 1;
    rem[k - 1] = rem[k] - k as i64 * m[k];
    let mut changed = k;
    loop {
        m[level] += 1;
        rem[level - 1] -= level as i64;
        if rem[level - 1] < 0 {
            if level == k {
                return;
            }
            level += 1;
            continue;
        }
        changed = changed.max(level);
        if level == 2 {
            m[1] = rem[1];
            visit(&Step { m: &m, changed });
            changed = 0;
        } else {
            level -= 1;
            m[level] = lower(level) - 1;
            rem[level - 1] = rem[level] - level as i64 * m[level];
        }
    }
}

/// Exact accumulator used by the multisum: a fast checked `u128` path and an
/// unbounded `BigInt` fallback.
trait Tally: Sized + Clone {
    fn from_u64(v: u64) -> Self;
    fn mul_u64(&self, f: u64) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn into_bigint(self) -> BigInt;
    fn is_positive(&self) -> bool;
}

impl Tally for u128 {
    fn from_u64(v: u64) -> Self {
        v as u128
    }
    fn mul_u64(&self, f: u64) -> Option<Self> {
        self.checked_mul(f as u128)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
    fn is_positive(&self) -> bool {
        *self > 0
    }
}

impl Tally for BigInt {
    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }
    fn mul_u64(&self, f: u64) -> Option<Self> {
        Some(self * f)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn into_bigint(self) -> BigInt {
        self
    }
    fn is_positive(&self) -> bool {
        self.sign() == num_bigint::Sign::Plus
    }
}

fn durfee_multisum_with<T: Tally>(n: u64, k: u64, counter: &mut OpCounter) -> Option<T> {
    let ku = k as usize;
    // prefix[j] = Π_{i=j..k} (m_i + 1); prefix[k + 1] is the empty product.
    let mut prefix: Vec<T> = vec![T::from_u64(1); ku + 2];
    let mut sum: Option<T> = None;
    let mut ops = OpCounter::default();
    let mut overflow = false;
    walk(
        n,
        k,
        |_| 0,
        |step| {
            if overflow {
                return;
            }
            // Only the changed level has a factor other than 1; reset levels
            // below it copy the prefix down.
            let top = step.changed.min(ku);
            for j in (2..=top).rev() {
                let factor = step.m[j] as u64 + 1;
                prefix[j] = if j == top && factor != 1 {
                    if j == ku {
                        T::from_u64(factor)
                    } else {
                        ops.multiplications += 1;
                        match prefix[j + 1].mul_u64(factor) {
                            Some(v) => v,
                            None => {
                                overflow = true;
                                return;
                            }
                        }
                    }
                } else {
                    prefix[j + 1].clone()
                };
            }
            // first factor 1 + n - k² - Σ h m_h is the odometer residual + 1
            let first = step.m[1] as u64 + 1;
            let term = if ku == 1 {
                T::from_u64(first)
            } else {
                ops.multiplications += 1;
                match prefix[2].mul_u64(first) {
                    Some(v) => v,
                    None => {
                        overflow = true;
                        return;
                    }
                }
            };
            debug_assert!(term.is_positive(), "summand must be positive");
            sum = match sum.take() {
                None => Some(term),
                Some(acc) => {
                    ops.additions += 1;
                    match acc.add(&term) {
                        Some(v) => Some(v),
                        None => {
                            overflow = true;
                            None
                        }
                    }
                }
            };
        },
    );
    if overflow {
        return None;
    }
    counter.additions += ops.additions;
    counter.multiplications += ops.multiplications;
    Some(sum.unwrap_or_else(|| T::from_u64(0)))
}

/// `D(n, k)` by the multisum. `D(n, 0)` is 1 exactly when `n = 0`.
///
/// When a counter is supplied it receives every summand multiplication and
/// accumulation addition.
pub fn durfee_count_multisum(n: u64, k: u64, counter: Option<&mut OpCounter>) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut local = OpCounter::default();
    let counter = counter.unwrap_or(&mut local);
    if let Some(v) = durfee_multisum_with::<u128>(n, k, counter) {
        return v.into_bigint();
    }
    durfee_multisum_with::<BigInt>(n, k, counter).expect("BigInt tally never overflows")
}

/// `p(n) = Σ_{k=1..⌊√n⌋} D(n, k)` with every `D` from the multisum.
pub fn partition_count_multisum(n: u64, mut counter: Option<&mut OpCounter>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut total: Option<BigInt> = None;
    for k in 1..=n.isqrt() {
        let d = durfee_count_multisum(n, k, counter.as_deref_mut());
        total = Some(match total {
            None => d,
            Some(acc) => {
                if let Some(c) = counter.as_deref_mut() {
                    c.additions += 1;
                }
                acc + d
            }
        });
    }
    total.unwrap_or_else(BigInt::zero)
}

/// `D(n, k)` as Σ over partitions of `n - k²` with parts `<= k` of
/// `Π_{i=1..k} (m_i + 1)`, by enumeration. Independent of the odometer.
pub fn durfee_count_weighted(n: u64, k: u64) -> BigInt {
    let Some(rest) = n.checked_sub(k * k) else {
        return BigInt::zero();
    };
    crate::partition::Partitions::new(rest, Some(k))
        .map(|p| {
            let mult = p.multiplicities();
            (1..=k as usize).fold(BigInt::one(), |acc, i| {
                acc * BigInt::from(mult.get(i).copied().unwrap_or(0) + 1)
            })
        })
        .sum()
}

/// Number of index tuples the multisum visits for `(n, k)`.
pub fn term_count(n: u64, k: u64) -> BigInt {
    let mut count = 0u64;
    walk(n, k, |_| 0, |_| count += 1);
    BigInt::from(count)
}

/// Number of visited tuples with `m_k > 0`.
pub fn terms_with_top_part(n: u64, k: u64) -> BigInt {
    let mut count = 0u64;
    let top = k as usize;
    walk(n, k, |_| 0, |step| {
        if step.m[top] > 0 {
            count += 1;
        }
    });
    BigInt::from(count)
}

/// Partitions of `n` with Durfee order `k` and distinct parts.
///
/// Lower bounds are `m_k >= 0` and `m_j >= 1` for `2 <= j < k`; each tuple
/// contributes `2^{#{i : m_i > 1}}` when `m_1 != 0`. For `k = 1` the `m_1 != 0`
/// condition is dropped: a partition `(1 + m_1, 1^{b})` needs no column of
/// height one to its right, so `(1)` itself is counted.
pub fn distinct_durfee_multisum(n: u64, k: u64) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let ku = k as usize;
    let mut total = 0u64;
    walk(
        n,
        k,
        |j| if j == ku { 0 } else { 1 },
        |step| {
            if ku >= 2 && step.m[1] == 0 {
                return;
            }
            let doubled = (1..=ku).filter(|&i| step.m[i] > 1).count() as u32;
            total += 1u64 << doubled;
        },
    );
    BigInt::from(total)
}

/// `r(n, k)`: Σ over tuples of `(-1)^{m_1+...+m_k} Π_{i=1..k} (m_i + 1)`.
pub fn rank_parity_multisum(n: u64, k: u64) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let ku = k as usize;
    let mut total = BigInt::zero();
    walk(n, k, |_| 0, |step| {
        let mut product = BigInt::one();
        let mut parity = 0i64;
        for i in 1..=ku {
            product *= step.m[i] + 1;
            parity += step.m[i];
        }
        if parity % 2 == 0 {
            total += product;
        } else {
            total -= product;
        }
    });
    total
}

/// Coefficient of `q^n` in the third-order mock theta function `f(q)`.
pub fn mock_theta_coefficient(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (1..=n.isqrt()).map(|k| rank_parity_multisum(n, k)).sum()
}

/// Convenience for callers that know the count fits in 64 bits.
pub fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("count exceeds u64")
}
