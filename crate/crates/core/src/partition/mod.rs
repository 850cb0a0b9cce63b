//! Ground-truth partition combinatorics.
//!
//! Everything here is deliberately direct (enumeration, textbook recurrences,
//! plain convolution) so that it can serve as an oracle for the multisum and
//! quasipolynomial paths.

mod counts;

pub use counts::{
    distinct_part_count, durfee_count_enumerated, durfee_series, gap_two_above_one_count,
    gap_two_count, gap_two_total, mock_theta_series, odd_part_count, partition_count_euler,
    partitions_with_bounded_parts, rank_parity_count,
};

use std::fmt;

use crate::error::{Error, Result};

/// A partition: a nonincreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates that `parts` is nonincreasing and strictly positive.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "partition parts must be nonincreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts `parts` into nonincreasing order first.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds `<1^{m_1} 2^{m_2} ...>` from `(part, multiplicity)` pairs.
    pub fn from_multiplicities<I: IntoIterator<Item = (u64, usize)>>(pairs: I) -> Result<Self> {
        let mut parts = Vec::new();
        for (part, mult) in pairs {
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `|λ|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `m_j(λ)`.
    pub fn multiplicity(&self, j: u64) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Multiplicities indexed by part size; index 0 is always 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest() as usize + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Order of the Durfee square: the largest `k` with `λ_k >= k`.
    pub fn durfee_order(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i as u64)
            .count() as u64
    }

    /// Transpose of the Ferrers graph.
    pub fn conjugate(&self) -> Self {
        let width = self.largest() as usize;
        let mut parts = vec![0u64; width];
        for &p in &self.parts {
            for slot in parts.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Self { parts }
    }

    /// `λ ∪ μ`: multiplicities add.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self { parts }
    }

    /// Splits off the Durfee square, the parts below it, and the columns to
    /// its right (read as a partition).
    pub fn decompose_durfee(&self) -> DurfeeDecomposition {
        let k = self.durfee_order();
        let below = Self {
            parts: self.parts[k as usize..].to_vec(),
        };
        let conj = self.conjugate();
        let right = Self {
            parts: conj.parts[k as usize..].to_vec(),
        };
        DurfeeDecomposition {
            order: k,
            below,
            right,
        }
    }

    /// Dyson's rank `λ_1 - ℓ(λ)`.
    pub fn rank(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::Domain("rank of the empty partition".into()));
        }
        Ok(self.largest() as i64 - self.len() as i64)
    }

    pub fn frobenius(&self) -> Result<FrobeniusSymbol> {
        if self.is_empty() {
            return Err(Error::Domain(
                "Frobenius symbol of the empty partition".into(),
            ));
        }
        let k = self.durfee_order() as usize;
        let conj = self.conjugate();
        let top = (0..k).map(|j| self.parts[j] - (j as u64 + 1)).collect();
        let bottom = (0..k).map(|j| conj.parts[j] - (j as u64 + 1)).collect();
        Ok(FrobeniusSymbol { top, bottom })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `(δ, β, ρ)` with `δ = <k^k>`; `β` holds the rows below the square and `ρ`
/// the columns to its right. Both have parts `<= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeDecomposition {
    pub order: u64,
    pub below: Partition,
    pub right: Partition,
}

impl DurfeeDecomposition {
    /// Rebuilds the original partition.
    pub fn reassemble(&self) -> Partition {
        let k = self.order;
        let mut parts: Vec<u64> = (1..=k)
            .map(|i| k + self.right.parts.iter().filter(|&&r| r >= i).count() as u64)
            .collect();
        parts.extend_from_slice(&self.below.parts);
        Partition { parts }
    }

    pub fn weight(&self) -> u64 {
        self.order * self.order + self.below.weight() + self.right.weight()
    }
}

/// Two strictly decreasing rows `a_j = λ_j - j`, `b_j = λ'_j - j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSymbol {
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl FrobeniusSymbol {
    pub fn new(top: Vec<u64>, bottom: Vec<u64>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Domain("Frobenius rows differ in length".into()));
        }
        let decreasing = |row: &[u64]| row.windows(2).all(|w| w[0] > w[1]);
        if !decreasing(&top) || !decreasing(&bottom) {
            return Err(Error::Domain(
                "Frobenius rows must be strictly decreasing".into(),
            ));
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[u64] {
        &self.top
    }

    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    pub fn columns(&self) -> usize {
        self.top.len()
    }

    /// `k + Σ (a_j + b_j)`.
    pub fn weight(&self) -> u64 {
        self.columns() as u64 + self.top.iter().sum::<u64>() + self.bottom.iter().sum::<u64>()
    }

    pub fn to_partition(&self) -> Partition {
        let k = self.columns();
        let mut parts: Vec<u64> = (0..k).map(|j| self.top[j] + j as u64 + 1).collect();
        // Row i > k has one dot for every column j <= k of length >= i.
        let longest = self.bottom.first().map_or(0, |b| b + 1);
        for i in (k as u64 + 1)..=longest {
            let len = (0..k)
                .filter(|&j| self.bottom[j] + j as u64 + 1 >= i)
                .count() as u64;
            parts.push(len);
        }
        Partition { parts }
    }
}

/// Partitions of `n` in lexicographically decreasing order, optionally with
/// every part at most `max_part`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64, max_part: Option<u64>) -> Self {
        let cap = max_part.unwrap_or(n).min(n);
        let current = if n == 0 {
            Some(Vec::new())
        } else if cap == 0 {
            None
        } else {
            Some(greedy_fill(Vec::new(), n, cap))
        };
        Self { current }
    }
}

fn greedy_fill(mut parts: Vec<u64>, mut remaining: u64, cap: u64) -> Vec<u64> {
    while remaining >= cap {
        parts.push(cap);
        remaining -= cap;
    }
    if remaining > 0 {
        parts.push(remaining);
    }
    parts
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        // successor: drop trailing ones, decrement the last part > 1 and
        // refill greedily with parts no larger than it
        if let Some(i) = parts.iter().rposition(|&p| p > 1) {
            let ones = (parts.len() - i - 1) as u64;
            let x = parts[i] - 1;
            let mut next = parts[..i].to_vec();
            next.push(x);
            self.current = Some(greedy_fill(next, ones + 1, x));
        }
        Some(Partition { parts })
    }
}

/// All partitions of `n` (parts `<= max_part` when given), lexicographically
/// decreasing.
pub fn enumerate_partitions(n: u64, max_part: Option<u64>) -> Vec<Partition> {
    Partitions::new(n, max_part).collect()
}
