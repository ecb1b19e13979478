//! Text renderings of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::surprise::Rational;

/// `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn exact(value: &Rational) -> String {
    value.to_string()
}

/// Decimal with `places` digits, rounded half away from zero using exact arithmetic.
pub fn decimal(value: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled: BigInt = value.numer().abs() * &scale * 2 + value.denom();
    let (q, _) = scaled.div_rem(&(value.denom() * 2));
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if value.is_negative() && !q.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
}

/// `p/q (d.dddddd)`.
pub fn both(value: &Rational) -> String {
    format!("{} ({})", exact(value), decimal(value, 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn renderings() {
        assert_eq!(both(&q(7, 8)), "7/8 (0.875000)");
        assert_eq!(both(&q(1, 1)), "1 (1.000000)");
        assert_eq!(both(&q(0, 1)), "0 (0.000000)");
        assert_eq!(decimal(&q(1, 3), 6), "0.333333");
        assert_eq!(decimal(&q(2, 3), 6), "0.666667");
        assert_eq!(decimal(&q(1, 2_000_000), 6), "0.000001");
        assert_eq!(decimal(&q(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&q(5, 2), 0), "3");
    }
}
