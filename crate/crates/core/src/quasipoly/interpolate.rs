use crate::error::{Error, Result};
use crate::exact::{lcm_up_to, rational, BigInt, BigRational};
use crate::partition::durfee_series;

use super::polynomial::{interpolate as fit, RationalPolynomial};

/// Upward window shifts tried before interpolation gives up.
pub const MAX_SHIFTS: u32 = 8;

/// `n ↦ f_{n mod N}(n)`, valid for `n >= n_min`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: u64,
    polys: Vec<RationalPolynomial>,
    n_min: u64,
    fit_end: u64,
}

impl Quasipolynomial {
    pub fn new(polys: Vec<RationalPolynomial>, n_min: u64) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Domain("quasipolynomial needs at least one residue".into()));
        }
        Ok(Self {
            period: polys.len() as u64,
            polys,
            n_min,
            fit_end: n_min,
        })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn n_min(&self) -> u64 {
        self.n_min
    }

    /// Largest `n` whose sample was used to fit or check the polynomials.
    pub fn fit_end(&self) -> u64 {
        self.fit_end
    }

    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    /// Polynomial used for `n ≡ r (mod period)`.
    pub fn residue(&self, r: u64) -> &RationalPolynomial {
        &self.polys[(r % self.period) as usize]
    }

    pub fn degree(&self) -> Option<usize> {
        self.polys.iter().filter_map(RationalPolynomial::degree).max()
    }

    /// `f_{n mod N}(n)`; meaningful as a count only for `n >= n_min`.
    pub fn value(&self, n: u64) -> BigRational {
        self.residue(n).eval_int(n as i64)
    }

    /// Average of the residue polynomials, which keeps exactly the
    /// quasiperiod-1 component.
    pub fn mean_polynomial(&self) -> RationalPolynomial {
        let sum = self
            .polys
            .iter()
            .fold(RationalPolynomial::zero(), |acc, p| &acc + p);
        sum.scale(&BigRational::new(1.into(), BigInt::from(self.period)))
    }

    /// Smallest `period` dividing the stored one under which the residue
    /// polynomials still repeat.
    pub fn minimal_period(&self) -> u64 {
        let n = self.period;
        (1..=n)
            .filter(|d| n % d == 0)
            .find(|&d| (0..n).all(|r| self.polys[r as usize] == self.polys[(r % d) as usize]))
            .unwrap_or(n)
    }
}

/// Cached generating-function coefficients of `D(·, k)`, grown on demand.
#[derive(Clone, Debug)]
pub struct SeriesSampler {
    k: u64,
    values: Vec<BigInt>,
}

impl SeriesSampler {
    pub fn new(k: u64) -> Self {
        Self { k, values: Vec::new() }
    }

    pub fn get(&mut self, n: u64) -> BigInt {
        if n as usize >= self.values.len() {
            let target = (n + 1).max(2 * self.values.len() as u64).max(64);
            self.values = durfee_series(self.k, target - 1);
        }
        self.values[n as usize].clone()
    }
}

/// Fits the quasipolynomial of `D(·, k)` from exact samples.
///
/// Period `L = lcm(1..k)`. Each residue gets a degree-`(2k-1)` fit through
/// `2k` samples starting at `k²`, checked on the next `2k` samples of the
/// same residue; on a mismatch the window moves up by `L`. Once a window
/// holds, `n_min` is lowered as far as the samples below it keep agreeing.
pub fn interpolate_with(
    k: u64,
    sample: &mut dyn FnMut(u64) -> Result<BigInt>,
) -> Result<Quasipolynomial> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let period = lcm_up_to(k);
    let width = 2 * k;
    let mut start = k * k;
    for shift in 0..=MAX_SHIFTS {
        if let Some(polys) = fit_window(period, width, start, sample)? {
            let mut q = Quasipolynomial::new(polys, start)?;
            q.fit_end = start + 2 * width * period - 1;
            while q.n_min > 0 {
                let n = q.n_min - 1;
                if q.value(n) != rational(&sample(n)?) {
                    break;
                }
                q.n_min = n;
            }
            return Ok(q);
        }
        if shift < MAX_SHIFTS {
            start += period;
        }
    }
    Err(Error::Interpolation { k, shifts: MAX_SHIFTS })
}

fn fit_window(
    period: u64,
    width: u64,
    start: u64,
    sample: &mut dyn FnMut(u64) -> Result<BigInt>,
) -> Result<Option<Vec<RationalPolynomial>>> {
    let mut polys = vec![RationalPolynomial::zero(); period as usize];
    for r in 0..period {
        let first = start + (r + period - start % period) % period;
        let mut points = Vec::with_capacity(width as usize);
        for i in 0..width {
            let n = first + i * period;
            points.push((n as i64, rational(&sample(n)?)));
        }
        let poly = fit(&points);
        for i in width..2 * width {
            let n = first + i * period;
            if poly.eval_int(n as i64) != rational(&sample(n)?) {
                return Ok(None);
            }
        }
        polys[(first % period) as usize] = poly;
    }
    Ok(Some(polys))
}

/// Quasipolynomial of `D(·, k)` fitted to generating-function samples.
pub fn interpolate(k: u64) -> Result<Quasipolynomial> {
    let mut sampler = SeriesSampler::new(k);
    interpolate_with(k, &mut |n| Ok(sampler.get(n)))
}

/// Points of `D(·, k)` outside the fit window that disagree with `q`, over
/// `q.n_min() <= n <= q.n_min() + span`.
pub fn mismatches(
    q: &Quasipolynomial,
    span: u64,
    sample: &mut dyn FnMut(u64) -> Result<BigInt>,
) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for n in q.n_min()..=q.n_min() + span {
        if q.value(n) != rational(&sample(n)?) {
            bad.push(n);
        }
    }
    Ok(bad)
}
