use std::sync::Mutex;

use num_traits::{One, Zero};

use super::Partitions;
use crate::exact::BigInt;

static EULER_TABLE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `p(n)` by the pentagonal-number recurrence.
///
/// The memo table only ever grows; callers receive copies.
pub fn partition_count_euler(n: u64) -> BigInt {
    let n = n as usize;
    let mut table = EULER_TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let m = table.len();
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let positive = j % 2 == 1;
            let mut term = table[m - g1].clone();
            if g2 <= m {
                term += &table[m - g2];
            }
            if positive {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.push(acc);
    }
    table[n].clone()
}

/// `D(n, k)` by enumerating partitions of `n` and filtering on Durfee order.
/// `D(n, 0)` is 1 exactly when `n = 0`.
pub fn durfee_count_enumerated(n: u64, k: u64) -> BigInt {
    if k * k > n {
        return BigInt::zero();
    }
    let count = Partitions::new(n, None)
        .filter(|p| p.durfee_order() == k)
        .count();
    BigInt::from(count)
}

/// Coefficients of `q^{k²} / Π_{j=1..k} (1 - q^j)²` for `0 <= n <= max_n`
/// (zero below `k²`), by repeated in-place division by `1 - q^j`.
pub fn durfee_series(k: u64, max_n: u64) -> Vec<BigInt> {
    let len = max_n as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    let start = (k * k) as usize;
    if start >= len {
        return c;
    }
    c[start] = BigInt::one();
    for j in 1..=k as usize {
        for _ in 0..2 {
            for n in j..len {
                let prev = c[n - j].clone();
                c[n] += prev;
            }
        }
    }
    c
}

/// Coefficients of the third-order mock theta function
/// `f(q) = Σ_k q^{k²} / Π_{j=1..k} (1 + q^j)²` through `q^{max_n}`.
pub fn mock_theta_series(max_n: u64) -> Vec<BigInt> {
    let len = max_n as usize + 1;
    let mut total = vec![BigInt::zero(); len];
    for k in 0..=max_n.isqrt() as usize {
        let mut c = vec![BigInt::zero(); len];
        c[k * k] = BigInt::one();
        for j in 1..=k {
            for _ in 0..2 {
                // divide by (1 + q^j)
                for n in j..len {
                    let prev = c[n - j].clone();
                    c[n] -= prev;
                }
            }
        }
        for (t, v) in total.iter_mut().zip(c) {
            *t += v;
        }
    }
    total
}

/// Σ over partitions of `n` with Durfee order `k` of `(-1)^{rank}`.
pub fn rank_parity_count(n: u64, k: u64) -> BigInt {
    let mut acc = 0i64;
    for p in Partitions::new(n, None).filter(|p| p.durfee_order() == k) {
        let rank = p.rank().expect("Durfee order k >= 1 implies nonempty");
        acc += if rank.rem_euclid(2) == 0 { 1 } else { -1 };
    }
    BigInt::from(acc)
}

/// Partitions of `n` into distinct parts.
pub fn distinct_part_count(n: u64) -> BigInt {
    let len = n as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    for part in 1..len {
        for m in (part..len).rev() {
            let prev = c[m - part].clone();
            c[m] += prev;
        }
    }
    c[n as usize].clone()
}

/// Partitions of `n` into odd parts.
pub fn odd_part_count(n: u64) -> BigInt {
    let len = n as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    for part in (1..len).step_by(2) {
        for m in part..len {
            let prev = c[m - part].clone();
            c[m] += prev;
        }
    }
    c[n as usize].clone()
}

/// Number of partitions of each `0 <= m <= max_n` into parts no larger than
/// `max_part`.
pub fn partitions_with_bounded_parts(max_part: u64, max_n: u64) -> Vec<BigInt> {
    let len = max_n as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    for part in 1..=(max_part as usize).min(len.saturating_sub(1)) {
        for m in part..len {
            let prev = c[m - part].clone();
            c[m] += prev;
        }
    }
    c
}

/// `r₁(n, k)`: partitions of `n` into exactly `k` parts with consecutive
/// gaps of at least 2. Equal to the partitions of `n - k²` with parts `<= k`.
pub fn gap_two_count(n: u64, k: u64) -> BigInt {
    match n.checked_sub(k * k) {
        Some(rest) => partitions_with_bounded_parts(k, rest)[rest as usize].clone(),
        None => BigInt::zero(),
    }
}

/// `r₂(n, k)`: as [`gap_two_count`] with every part at least 2. Equal to the
/// partitions of `n - k² - k` with parts `<= k`.
pub fn gap_two_above_one_count(n: u64, k: u64) -> BigInt {
    match n.checked_sub(k * k + k) {
        Some(rest) => partitions_with_bounded_parts(k, rest)[rest as usize].clone(),
        None => BigInt::zero(),
    }
}

/// `r₁(n)`: all partitions of `n` with gaps at least 2, summed over length.
pub fn gap_two_total(n: u64) -> BigInt {
    // One table grown part by part: after adding part k it counts partitions
    // with parts <= k, which is what r₁(n, k) reads at n - k².
    let len = n as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    let mut total = if n == 0 { BigInt::one() } else { BigInt::zero() };
    for k in 1..=n.isqrt() as usize {
        for m in k..len {
            let prev = c[m - k].clone();
            c[m] += prev;
        }
        total += &c[n as usize - k * k];
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        assert_eq!(partition_count_euler(0), BigInt::one());
        assert_eq!(partition_count_euler(5), BigInt::from(7));
        assert_eq!(partition_count_euler(100), BigInt::from(190569292));
        assert_eq!(partition_count_euler(20), BigInt::from(627));
        let p500: BigInt = "2300165032574323995027".parse().unwrap();
        assert_eq!(partition_count_euler(500), p500);
    }

    #[test]
    fn enumerated_durfee_examples() {
        assert_eq!(durfee_count_enumerated(5, 1), BigInt::from(5));
        assert_eq!(durfee_count_enumerated(4, 2), BigInt::one());
        assert_eq!(durfee_count_enumerated(3, 2), BigInt::zero());
        assert_eq!(durfee_count_enumerated(0, 0), BigInt::one());
        assert_eq!(durfee_count_enumerated(3, 0), BigInt::zero());
    }

    #[test]
    fn series_examples() {
        let k1 = durfee_series(1, 12);
        for (n, c) in k1.iter().enumerate() {
            assert_eq!(c, &BigInt::from(n));
        }
        assert_eq!(durfee_series(2, 4)[4], BigInt::one());
        assert_eq!(durfee_series(3, 9)[9], BigInt::one());
        assert!(durfee_series(3, 5).iter().all(Zero::is_zero));
    }

    #[test]
    fn mock_theta_examples() {
        let f = mock_theta_series(6);
        let expected = [1, 1, -2, 3, -3, 3, -5];
        for (c, e) in f.iter().zip(expected) {
            assert_eq!(c, &BigInt::from(e));
        }
    }

    #[test]
    fn rank_parity_examples() {
        assert_eq!(rank_parity_count(4, 1), BigInt::from(-4));
        assert_eq!(rank_parity_count(2, 1), BigInt::from(-2));
        for k in 1..5 {
            assert_eq!(rank_parity_count(k * k, k), BigInt::one());
        }
    }

    #[test]
    fn distinct_and_odd_examples() {
        for n in [0u64, 1] {
            assert_eq!(distinct_part_count(n), BigInt::one());
            assert_eq!(odd_part_count(n), BigInt::one());
        }
        assert_eq!(distinct_part_count(6), BigInt::from(4));
        assert_eq!(odd_part_count(6), BigInt::from(4));
    }

    #[test]
    fn gap_two_examples() {
        assert_eq!(gap_two_count(9, 2), BigInt::from(3));
        for k in 1..6 {
            assert_eq!(gap_two_count(k * k, k), BigInt::one());
        }
        assert_eq!(gap_two_above_one_count(14, 3), BigInt::from(2));
        assert_eq!(gap_two_count(3, 2), BigInt::zero());
        assert_eq!(gap_two_total(5), BigInt::from(2));
        assert_eq!(gap_two_total(0), BigInt::one());
    }

    #[test]
    fn gap_two_total_sums_lengths() {
        for n in 0..80u64 {
            let by_length: BigInt = (1..=n.isqrt()).map(|k| gap_two_count(n, k)).sum();
            let expected = if n == 0 { BigInt::one() } else { by_length };
            assert_eq!(gap_two_total(n), expected, "n = {n}");
        }
    }
}
