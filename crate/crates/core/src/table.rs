//! Rows comparing `p(n)` with the approximations `p_D(n)` and `p_R(n)`.

use crate::analytic::{default_digits, p_r, HighPrecisionReal};
use crate::error::{Error, Result};
use crate::exact::{format_decimal, rational, BigInt, BigRational};
use crate::partition::partition_count_euler;
use crate::quasipoly::PolynomialParts;

pub const CSV_HEADER: &str = "n,p,p_D,p_R,p_D_minus_p,p_R_minus_p,p_R_minus_p_D";
pub const FIGURE_HEADER: &str = "n,p_R_minus_p_D";
/// Largest `n` accepted for table rows.
pub const TABLE_MAX_N: u64 = 2000;
/// Largest `n` accepted for figure data.
pub const FIGURE_MAX_N: u64 = 1600;

#[derive(Clone, Debug)]
pub struct TableRow {
    pub n: u64,
    pub p: BigInt,
    pub p_d: BigRational,
    pub p_r: HighPrecisionReal,
}

impl TableRow {
    pub fn p_d_minus_p(&self) -> BigRational {
        &self.p_d - rational(&self.p)
    }

    pub fn p_r_minus_p(&self) -> BigRational {
        self.p_r.to_rational() - rational(&self.p)
    }

    pub fn p_r_minus_p_d(&self) -> BigRational {
        self.p_r.to_rational() - &self.p_d
    }

    /// One CSV line (no terminator), decimals rounded half-even to `places`.
    pub fn to_csv(&self, places: usize) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.p,
            format_decimal(&self.p_d, places),
            format_decimal(&self.p_r.to_rational(), places),
            format_decimal(&self.p_d_minus_p(), places),
            format_decimal(&self.p_r_minus_p(), places),
            format_decimal(&self.p_r_minus_p_d(), places),
        )
    }
}

/// Shared state for computing many rows: the principal parts up to the
/// largest `k` needed.
pub struct TableBuilder {
    parts: PolynomialParts,
    digits: Option<u32>,
    max_n: u64,
}

impl TableBuilder {
    /// `digits = None` uses the default precision for each `n`.
    pub fn new(max_n: u64, digits: Option<u32>) -> Self {
        Self {
            parts: PolynomialParts::for_n(max_n),
            digits,
            max_n,
        }
    }

    pub fn p_d(&self, n: u64) -> BigRational {
        self.parts.p_d(n)
    }

    pub fn p_r(&self, n: u64) -> Result<HighPrecisionReal> {
        p_r(n, self.digits.unwrap_or_else(|| default_digits(n)))
    }

    pub fn row(&self, n: u64) -> Result<TableRow> {
        if n == 0 || n > self.max_n {
            return Err(Error::Domain(format!("n = {n} outside 1..={}", self.max_n)));
        }
        Ok(TableRow {
            n,
            p: partition_count_euler(n),
            p_d: self.p_d(n),
            p_r: self.p_r(n)?,
        })
    }
}

fn check_range(from: u64, to: u64, max: u64) -> Result<()> {
    if from == 0 || from > to || to > max {
        return Err(Error::Domain(format!(
            "need 1 <= from <= to <= {max}, got {from}..={to}"
        )));
    }
    Ok(())
}

pub fn table_rows(from: u64, to: u64, digits: Option<u32>) -> Result<Vec<TableRow>> {
    check_range(from, to, TABLE_MAX_N)?;
    let builder = TableBuilder::new(to, digits);
    (from..=to).map(|n| builder.row(n)).collect()
}

/// `(n, p_R(n) - p_D(n))` for `1 <= n <= to`.
pub fn figure_points(to: u64, digits: Option<u32>) -> Result<Vec<(u64, BigRational)>> {
    check_range(1, to, FIGURE_MAX_N)?;
    let builder = TableBuilder::new(to, digits);
    (1..=to)
        .map(|n| Ok((n, builder.p_r(n)?.to_rational() - builder.p_d(n))))
        .collect()
}

/// Interior points strictly greater than both neighbours.
pub fn local_maxima(points: &[(u64, BigRational)]) -> Vec<u64> {
    points
        .windows(3)
        .filter(|w| w[1].1 > w[0].1 && w[1].1 > w[2].1)
        .map(|w| w[1].0)
        .collect()
}

/// Whether `n = m² - 1` for some `m >= 1`.
pub fn is_square_minus_one(n: u64) -> bool {
    let m = (n + 1).isqrt();
    m * m == n + 1
}
