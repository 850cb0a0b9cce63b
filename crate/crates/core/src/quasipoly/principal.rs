use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{factorial, ratio, rational, BigInt, BigRational, SeriesAtOne};

use super::polynomial::RationalPolynomial;

/// Taylor coefficients `a_0..a_{2k-1}` of `F_k(q) = (1 - q)^{2k} D_k(q)` in
/// `t = q - 1`, where `D_k(q) = q^{k²} / Π_{j<=k} (1 - q^j)²`.
///
/// `a_j` is the coefficient of `(q - 1)^{-(2k - j)}` in the Laurent
/// expansion of `D_k`, i.e. `c_{0,1,2k-j}(k)` in the `Φ₁ = q - 1` convention.
pub fn taylor_at_one(k: u64) -> SeriesAtOne {
    assert!(k >= 1, "k must be positive");
    let order = 2 * k as usize - 1;
    let mut denom = SeriesAtOne::one(order);
    for j in 1..=k {
        let block = SeriesAtOne::q_block(j, order);
        denom = denom.mul(&block, order).mul(&block, order);
    }
    SeriesAtOne::q_power(k * k, order)
        .div(&denom, order)
        .expect("blocks are 1 + ... + q^{j-1}, with value j at q = 1")
}

/// Taylor data of `F_1, F_2, ..., F_K`, each at the common order `2K - 1`,
/// built by `F_k = q^{2k-1} F_{k-1} / (1 + q + ... + q^{k-1})²`.
pub fn taylor_at_one_upto(max_k: u64) -> Vec<SeriesAtOne> {
    if max_k == 0 {
        return Vec::new();
    }
    let order = 2 * max_k as usize - 1;
    scaled_taylor_upto(max_k, order)
        .iter()
        .map(|f| f.to_series())
        .collect()
}

/// `numer / den` with one shared denominator, so the recurrence runs on
/// integers and reduces once per step.
#[derive(Clone, Debug)]
struct ScaledSeries {
    numer: Vec<BigInt>,
    den: BigInt,
}

impl ScaledSeries {
    fn to_series(&self) -> SeriesAtOne {
        let coeffs = self
            .numer
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect();
        SeriesAtOne::new(coeffs, self.numer.len() - 1)
    }

    fn mul_integer(&self, b: &[BigInt]) -> Self {
        let len = self.numer.len();
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.numer.iter().enumerate() {
            for (j, c) in b.iter().take(len - i).enumerate() {
                out[i + j] += a * c;
            }
        }
        Self { numer: out, den: self.den.clone() }
    }

    /// Fraction-free division by an integer series: with `b0 = b[0]`,
    /// `g_m = s_m b0^m - Σ_{i>=1} b_i g_{m-i} b0^{i-1}` and
    /// `out_m = g_m / (den b0^{m+1})`.
    fn div_integer(&self, b: &[BigInt]) -> Self {
        let len = self.numer.len();
        let b0 = &b[0];
        let mut powers = Vec::with_capacity(len + 1);
        powers.push(BigInt::one());
        for i in 0..len {
            let next = &powers[i] * b0;
            powers.push(next);
        }
        let mut g: Vec<BigInt> = Vec::with_capacity(len);
        for m in 0..len {
            let mut acc = &self.numer[m] * &powers[m];
            for i in 1..=m.min(b.len() - 1) {
                acc -= &b[i] * &g[m - i] * &powers[i - 1];
            }
            g.push(acc);
        }
        let top = len - 1;
        let numer = g
            .into_iter()
            .enumerate()
            .map(|(m, x)| x * &powers[top - m])
            .collect();
        Self { numer, den: &self.den * &powers[len] }.reduced()
    }

    fn reduced(mut self) -> Self {
        let g = self
            .numer
            .iter()
            .fold(self.den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            for c in &mut self.numer {
                *c /= &g;
            }
            self.den /= &g;
        }
        self
    }
}

fn integer_coeffs(s: &SeriesAtOne) -> Vec<BigInt> {
    s.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn scaled_taylor_upto(max_k: u64, order: usize) -> Vec<ScaledSeries> {
    let mut out = Vec::with_capacity(max_k as usize);
    let mut f = ScaledSeries {
        numer: integer_coeffs(&SeriesAtOne::q_power(1, order)),
        den: BigInt::one(),
    };
    out.push(f.clone());
    for k in 2..=max_k {
        let block = SeriesAtOne::q_block(k, order);
        let square = integer_coeffs(&block.mul(&block, order));
        let shift = integer_coeffs(&SeriesAtOne::q_power(2 * k - 1, order));
        f = f.mul_integer(&shift).div_integer(&square);
        out.push(f.clone());
    }
    out
}

/// The closed forms for `c_{0,1,2k}`, `c_{0,1,2k-1}`, `c_{0,1,2k-2}` and
/// `c_{0,1,2k-3}` (in that order). Requires `k >= 2`.
pub fn lemma_closed_forms(k: u64) -> [BigRational; 4] {
    assert!(k >= 2, "closed forms need k >= 2");
    let kf = rational(&factorial(k));
    let km1 = rational(&factorial(k - 1));
    let km2 = rational(&factorial(k - 2));
    let x = BigRational::from_integer(BigInt::from(k));
    let poly = |c: &[i64]| RationalPolynomial::from_integers(c).eval(&x);
    [
        BigRational::one() / (&kf * &kf),
        poly(&[1, 1]) / (ratio(2, 1) * &km1 * &kf),
        poly(&[13, 25, 9]) / (ratio(72, 1) * &km2 * &kf),
        poly(&[-14, -31, -4, 10, 3]) / (ratio(144, 1) * &km2 * &kf),
    ]
}

/// Principal part `Σ_{ℓ=1..2k} c_ℓ / (1 - q)^ℓ` of `D_k(q)` at `q = 1`.
///
/// This is the single place where the `1 / (1 - q)` convention used here
/// meets the `Φ₁ = q - 1` convention: `c_{0,1,ℓ}(k) = (-1)^ℓ c_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPartAtOne {
    k: u64,
    c: Vec<BigRational>,
    // c_ℓ = numer[ℓ - 1] / den
    numer: Vec<BigInt>,
    den: BigInt,
}

impl PrincipalPartAtOne {
    /// From Taylor coefficients `a_0..a_{2k-1}` of `F_k`.
    pub fn from_taylor(k: u64, taylor: &SeriesAtOne) -> Self {
        let top = 2 * k as usize;
        let c = (1..=top)
            .map(|l| {
                let a = taylor.coeff(top - l).clone();
                if l % 2 == 0 {
                    a
                } else {
                    -a
                }
            })
            .collect::<Vec<BigRational>>();
        let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let numer = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Self { k, c, numer, den }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `c_ℓ` for `1 <= ℓ <= 2k`.
    pub fn coefficient(&self, l: usize) -> &BigRational {
        &self.c[l - 1]
    }

    /// `c_{0,1,ℓ}(k)`, the coefficient of `1 / (q - 1)^ℓ`.
    pub fn coefficient_at_q_minus_one(&self, l: usize) -> BigRational {
        let c = self.coefficient(l).clone();
        if l % 2 == 0 {
            c
        } else {
            -c
        }
    }

    /// `c_1..c_{2k}`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    /// `D̃(n, k) = Σ c_ℓ C(n + ℓ - 1, ℓ - 1)` as a polynomial in `n`.
    pub fn polynomial(&self) -> RationalPolynomial {
        let mut binom = RationalPolynomial::from_integers(&[1]);
        let mut total = RationalPolynomial::zero();
        for (idx, c) in self.c.iter().enumerate() {
            let l = idx as i64 + 1;
            if l > 1 {
                // C(n + l - 1, l - 1) = C(n + l - 2, l - 2) (n + l - 1) / (l - 1)
                let step = RationalPolynomial::from_integers(&[l - 1, 1]);
                binom = (&binom * &step).scale(&ratio(1, l - 1));
            }
            total = &total + &binom.scale(c);
        }
        total
    }

    /// `D̃(n, k)` evaluated straight from binomials.
    pub fn evaluate(&self, n: u64) -> BigRational {
        let mut binom = BigInt::one();
        let mut total = BigInt::zero();
        for (idx, c) in self.numer.iter().enumerate() {
            let l = idx as u64 + 1;
            if l > 1 {
                binom = binom * BigInt::from(n + l - 1) / BigInt::from(l - 1);
            }
            total += c * &binom;
        }
        BigRational::new(total, self.den.clone())
    }
}

pub fn principal_part(k: u64) -> PrincipalPartAtOne {
    PrincipalPartAtOne::from_taylor(k, &taylor_at_one(k))
}

/// `D̃(·, k)` as a polynomial of degree `2k - 1`.
pub fn polynomial_part(k: u64) -> RationalPolynomial {
    principal_part(k).polynomial()
}

pub fn polynomial_part_at(n: u64, k: u64) -> BigRational {
    principal_part(k).evaluate(n)
}

/// Top two coefficients of `D(n, k)` in `n`: those of `n^{2k-1}` and
/// `n^{2k-2}`. For `k = 1` this is `(1, 0)`, from `D(n, 1) = n`.
pub fn leading_terms(k: u64) -> (BigRational, BigRational) {
    assert!(k >= 1, "k must be positive");
    if k == 1 {
        return (BigRational::one(), BigRational::zero());
    }
    let kf = factorial(k);
    let first = BigRational::new(BigInt::one(), &kf * &kf * factorial(2 * k - 1));
    let second = BigRational::new(
        BigInt::from(-1),
        BigInt::from(2) * factorial(2 * k - 2) * &kf * factorial(k - 2),
    );
    (first, second)
}

/// Principal parts for `k = 1..=K`, built once and shared across many `n`.
#[derive(Clone, Debug)]
pub struct PolynomialParts {
    parts: Vec<PrincipalPartAtOne>,
}

impl PolynomialParts {
    pub fn new(max_k: u64) -> Self {
        let parts = taylor_at_one_upto(max_k)
            .iter()
            .zip(1..)
            .map(|(f, k)| PrincipalPartAtOne::from_taylor(k, &f.truncate(2 * k as usize - 1)))
            .collect();
        Self { parts }
    }

    /// Enough parts to evaluate `p_D(n)` for every `n <= max_n`.
    pub fn for_n(max_n: u64) -> Self {
        Self::new(max_n.isqrt())
    }

    pub fn max_k(&self) -> u64 {
        self.parts.len() as u64
    }

    pub fn part(&self, k: u64) -> &PrincipalPartAtOne {
        &self.parts[k as usize - 1]
    }

    /// `p_D(n) = Σ_{k <= √n} D̃(n, k)`. Panics if `√n` exceeds the cached range.
    pub fn p_d(&self, n: u64) -> BigRational {
        let top = n.isqrt();
        assert!(top <= self.max_k(), "cache holds k <= {}", self.max_k());
        (1..=top).map(|k| self.part(k).evaluate(n)).sum()
    }
}

/// `p_D(n)` as an exact rational.
pub fn p_d(n: u64) -> BigRational {
    PolynomialParts::for_n(n).p_d(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taylor_examples() {
        assert_eq!(taylor_at_one(1).coeffs(), &[ratio(1, 1), ratio(1, 1)]);
        assert_eq!(taylor_at_one(2).coeff(2), &ratio(11, 16));
        assert_eq!(taylor_at_one(3).coeff(0), &ratio(1, 36));
    }

    #[test]
    fn incremental_matches_direct() {
        let all = taylor_at_one_upto(7);
        for (k, f) in (1..=7u64).zip(&all) {
            let direct = taylor_at_one(k);
            assert_eq!(&f.truncate(direct.order()), &direct, "k = {k}");
        }
    }

    #[test]
    fn closed_form_examples() {
        let [a, b, c, _] = lemma_closed_forms(2);
        assert_eq!(a, ratio(1, 4));
        assert_eq!(b, ratio(3, 4));
        assert_eq!(c, ratio(11, 16));
    }

    #[test]
    fn principal_part_examples() {
        let p1 = principal_part(1);
        assert_eq!(p1.coefficient(2), &ratio(1, 1));
        assert_eq!(p1.coefficient(1), &ratio(-1, 1));
        assert_eq!(principal_part(2).coefficient(4), &ratio(1, 4));
        assert_eq!(p1.coefficient_at_q_minus_one(1), ratio(1, 1));
    }

    #[test]
    fn polynomial_part_examples() {
        assert_eq!(polynomial_part(1), RationalPolynomial::from_integers(&[0, 1]));
        assert_eq!(polynomial_part_at(5, 2), ratio(9, 4));
        let printed = (&RationalPolynomial::from_integers(&[-1, 1])
            * &RationalPolynomial::from_integers(&[-3, -4, 2]))
            .scale(&ratio(1, 48));
        assert_eq!(polynomial_part(2), printed);
    }

    #[test]
    fn evaluation_routes_agree() {
        for k in 1..=5 {
            let part = principal_part(k);
            let poly = part.polynomial();
            for n in 0..40 {
                assert_eq!(part.evaluate(n), poly.eval_int(n as i64), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn p_d_examples() {
        assert_eq!(p_d(1), ratio(1, 1));
        assert_eq!(p_d(5), ratio(29, 4));
    }

    #[test]
    fn leading_examples() {
        // -1/(2 · 2! · 2! · 0!), which is also the n² coefficient of D̃(n, 2)
        assert_eq!(leading_terms(2), (ratio(1, 24), ratio(-1, 8)));
        assert_eq!(leading_terms(3).0, ratio(1, 4320));
    }
}
