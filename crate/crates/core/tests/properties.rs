mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;

use pfun_core::analytic::{h_prime, omega_with, HighPrecisionReal, OmegaBranch};
use pfun_core::exact::{
    format_decimal, isqrt, isqrt_u64, kronecker, parse_decimal, BigInt, BigRational, SeriesAtOne,
};
use pfun_core::partition::Partition;
use pfun_core::quasipoly::{interpolate, interpolate_points, RationalPolynomial};

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=12, 0..10).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn pow_mod(mut b: i64, mut e: i64, m: i64) -> i64 {
    let mut acc = 1;
    b = b.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

const ODD_PRIMES: [i64; 14] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

proptest! {
    #[test]
    fn series_times_inverse_is_one(
        a0 in small_rational().prop_filter("unit", |c| !c.is_zero()),
        rest in prop::collection::vec(small_rational(), 0..16),
        order in 0usize..=16,
    ) {
        let mut coeffs = vec![a0];
        coeffs.extend(rest);
        let a = SeriesAtOne::new(coeffs, order);
        let inv = a.inverse(order).unwrap();
        prop_assert_eq!(a.mul(&inv, order), SeriesAtOne::one(order));
    }

    #[test]
    fn rational_sums_are_exact(a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000) {
        let x = BigRational::new(a.into(), b.into()) + BigRational::new(c.into(), d.into());
        let lhs = x * BigRational::from_integer(BigInt::from(b) * BigInt::from(d));
        prop_assert_eq!(lhs, BigRational::from_integer(BigInt::from(a * d + c * b)));
    }

    #[test]
    fn kronecker_matches_euler_criterion(a in -1000i64..1000, idx in 0usize..ODD_PRIMES.len()) {
        let p = ODD_PRIMES[idx];
        let e = pow_mod(a, (p - 1) / 2, p);
        let expected = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
        prop_assert_eq!(kronecker(a, p), expected);
    }

    #[test]
    fn isqrt_brackets(n in any::<u64>(), big in "[1-9][0-9]{0,60}") {
        let r = isqrt_u64(n) as u128;
        prop_assert!(r * r <= n as u128 && (r + 1) * (r + 1) > n as u128);
        let b: BigInt = big.parse().unwrap();
        let s = isqrt(&b).unwrap();
        prop_assert!(&s * &s <= b && (&s + 1u32) * (&s + 1u32) > b);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.durfee_order(), p.durfee_order());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn durfee_decomposition_reassembles(p in partition()) {
        let d = p.decompose_durfee();
        let k = d.order;
        prop_assert_eq!(d.below.weight() + d.right.weight() + k * k, p.weight());
        prop_assert!(d.below.union(&d.right).largest() <= k);
        prop_assert_eq!(d.reassemble(), p.clone());
        if !p.is_empty() {
            let f = p.frobenius().unwrap();
            prop_assert_eq!(f.to_partition(), p.clone());
            prop_assert_eq!(k + f.top().iter().chain(f.bottom()).sum::<u64>(), p.weight());
        }
    }

    #[test]
    fn decimal_round_trip(num in -1_000_000_000i64..1_000_000_000, places in 0usize..8) {
        let x = BigRational::new(num.into(), BigInt::from(10u32).pow(places as u32));
        let text = format_decimal(&x, places);
        prop_assert_eq!(parse_decimal(&text).unwrap(), (x, places));
    }

    #[test]
    fn interpolation_recovers_polynomials(coeffs in prop::collection::vec(small_rational(), 1..7), shift in -20i64..20) {
        let poly = RationalPolynomial::new(coeffs);
        let points: Vec<_> = (0..7).map(|i| (shift + 3 * i, poly.eval_int(shift + 3 * i))).collect();
        prop_assert_eq!(interpolate_points(&points), poly);
    }

    #[test]
    fn quasipolynomial_matches_genfun(k in 1u64..=3, n in 0u64..600) {
        let q = interpolate(k).unwrap();
        let g = common::durfee_genfun(k, n as usize);
        prop_assert_eq!(q.value(n), common::rat(g[n as usize]));
    }

    #[test]
    fn omega_ignores_choice_of_inverse(k in 2u64..=12, h in 1u64..12, extra in 1u64..4) {
        prop_assume!(h < k && num_integer_gcd(h, k) == 1);
        let hp = h_prime(h, k).unwrap();
        prop_assert_eq!((h * hp + 1) % k, 0);
        let branch = if h % 2 == 1 { OmegaBranch::OddH } else { OmegaBranch::OddK };
        prop_assert_eq!(omega_with(h, k, hp, branch).unwrap(), omega_with(h, k, hp + extra * k, branch).unwrap());
    }

    #[test]
    fn exp_inverts_ln(num in 1i64..1_000_000, den in 1i64..1000) {
        let digits = 40;
        let x = HighPrecisionReal::from_rational(&BigRational::new(num.into(), den.into()), digits);
        let back = x.ln().unwrap().exp().unwrap();
        let rel = ((&back - &x) / &x).abs();
        prop_assert!(rel < HighPrecisionReal::from_rational(&BigRational::new(BigInt::one(), BigInt::from(10u32).pow(38)), digits));
    }
}

fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
