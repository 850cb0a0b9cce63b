//! `D(n, k)` as a quasipolynomial in `n`: the principal part at `q = 1`,
//! the polynomial part `D̃(n, k)`, `p_D(n)`, and full interpolated forms.

mod interpolate;
mod polynomial;
mod principal;
mod printed;

pub use interpolate::{
    interpolate, interpolate_with, mismatches, Quasipolynomial, SeriesSampler, MAX_SHIFTS,
};
pub use polynomial::{interpolate as interpolate_points, IntegerPolynomial, RationalPolynomial};
pub use principal::{
    lemma_closed_forms, leading_terms, p_d, polynomial_part, polynomial_part_at, principal_part,
    taylor_at_one, taylor_at_one_upto, PolynomialParts, PrincipalPartAtOne,
};
pub use printed::{printed_durfee, printed_polynomial_part, PrintedForm};
