//! High-precision side: the Rademacher series for `p(n)`, its first term
//! `p_R(n)`, the two error bounds, and Lehner's asymptotic.

mod bounds;
mod gamma;
mod hrr;
mod real;

pub use bounds::{
    conjecture_bound, conjecture_nu, gap_two_growth_rate, lehner_estimate, rademacher_bound, rademacher_constant,
};
pub use gamma::{bernoulli, ln_gamma};
pub use hrr::{
    a_k, default_terms, h_prime, hrr_p, hrr_term, omega, omega_as_printed, omega_as_printed_with,
    omega_with, p_r, p_r_closed_form,
    OmegaBranch, RootOfUnity,
};
pub use real::{bits_for_digits, HighPrecisionReal, GUARD_BITS};

/// Default working precision `max(60, 30 + ⌈1.2 √n⌉)` decimal digits,
/// computed without floating point.
pub fn default_digits(n: u64) -> u32 {
    if n == 0 {
        return 60;
    }
    // ⌈√(36n)⌉ = isqrt(36n - 1) + 1, and ⌈1.2√n⌉ = ⌈⌈√(36n)⌉ / 5⌉
    let ceil_root = (36 * n - 1).isqrt() + 1;
    let extra = ceil_root.div_ceil(5);
    (30 + extra).max(60) as u32
}
