use super::gamma::ln_gamma;
use super::real::HighPrecisionReal;
use crate::error::{Error, Result};
use crate::exact::ratio;
use crate::partition::gap_two_total;

fn positive(n: u64, least: u64) -> Result<()> {
    if n < least {
        return Err(Error::Domain(format!("n must be at least {least}, got {n}")));
    }
    Ok(())
}

/// `ν(n) = (27/50)(2 + √n)`.
pub fn conjecture_nu(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    let root = HighPrecisionReal::from_i64(n as i64, digits).sqrt()?;
    Ok(HighPrecisionReal::from_rational(&ratio(27, 50), digits)
        * (HighPrecisionReal::from_i64(2, digits) + root))
}

/// `2 (n/4)^{ν-1} / (ν Γ(ν+1) Γ(ν/2+1) Γ(ν/2))`, the conjectured bound on
/// `|p(n) - p_D(n)|`, evaluated through logarithms.
pub fn conjecture_bound(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    positive(n, 1)?;
    let one = HighPrecisionReal::one(digits);
    let nu = conjecture_nu(n, digits)?;
    let half_nu = nu.half();
    let quarter_n = HighPrecisionReal::from_rational(&ratio(n as i64, 4), digits);
    let log = HighPrecisionReal::ln2(digits) + (&nu - &one) * quarter_n.ln()?
        - nu.ln()?
        - ln_gamma(&(&nu + &one))?
        - ln_gamma(&(&half_nu + &one))?
        - ln_gamma(&half_nu)?;
    log.exp()
}

/// `π √(2/3)`.
pub fn rademacher_constant(digits: u32) -> Result<HighPrecisionReal> {
    Ok(HighPrecisionReal::pi(digits) * HighPrecisionReal::from_rational(&ratio(2, 3), digits).sqrt()?)
}

/// Rademacher's truncation estimate specialised to the first term:
///
/// `10√2/(99π) C³ + 8√2/(11π) n^{-3/2} (sinh(C√n) - C√n)
///  + 2 e^{C√(n-1)} · 4/(n-1) · (1/(5√3) + (n-1)^{-1/2} / (9π√2))`.
pub fn rademacher_bound(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    positive(n, 2)?;
    let int = |v: i64| HighPrecisionReal::from_i64(v, digits);
    let pi = HighPrecisionReal::pi(digits);
    let c = rademacher_constant(digits)?;
    let root2 = int(2).sqrt()?;
    let nn = int(n as i64);
    let root_n = nn.sqrt()?;
    let m = int(n as i64 - 1);
    let root_m = m.sqrt()?;

    let first = int(10) * &root2 / (int(99) * &pi) * (&c * &c * &c);
    let cn = &c * &root_n;
    let second = int(8) * &root2 / (int(11) * &pi) / (&nn * &root_n) * (cn.sinh()? - &cn);
    let inner = int(1) / (int(5) * int(3).sqrt()?) + int(1) / (int(9) * &pi * &root2 * &root_m);
    let third = int(2) * (&c * &root_m).exp()? * int(4) / m * inner;
    Ok(first + second + third)
}

/// `√(15 + 3√5) (60n - 1)^{-3/4} exp(π√(60n - 1)/15)`, the asymptotic size
/// of the number of partitions of `n` with gaps at least 2.
pub fn lehner_estimate(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    positive(n, 1)?;
    let int = |v: i64| HighPrecisionReal::from_i64(v, digits);
    let m = int(60 * n as i64 - 1);
    let root_m = m.sqrt()?;
    let lead = (int(15) + int(3) * int(5).sqrt()?).sqrt()?;
    let decay = (&root_m * &root_m.sqrt()?).recip()?;
    let growth = (HighPrecisionReal::pi(digits) * &root_m / int(15)).exp()?;
    Ok(lead * decay * growth)
}

/// `(ln r₁(n) - ln r₁(n - 1)) / (√n - √(n - 1))`: the local slope of
/// `ln r₁` against `√n`, with `r₁` counted exactly.
pub fn gap_two_growth_rate(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    positive(n, 2)?;
    let ln_r1 = |m: u64| HighPrecisionReal::from_integer(gap_two_total(m), digits).ln();
    let root = |m: u64| HighPrecisionReal::from_i64(m as i64, digits).sqrt();
    (ln_r1(n)? - ln_r1(n - 1)?).checked_div(&(root(n)? - root(n - 1)?))
}
