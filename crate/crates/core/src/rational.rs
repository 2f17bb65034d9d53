use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number used for every coordinate and interval.
pub type Rational = BigRational;

/// Build `numer/denom`. Panics on a zero denominator.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Smallest non-negative integer `p` with `p^2 >= n`.
pub fn ceil_sqrt(n: &BigUint) -> BigUint {
    let root = n.sqrt();
    if &(&root * &root) == n {
        root
    } else {
        root + 1u32
    }
}

/// Smallest `p / 2^bits` (p a non-negative integer) whose square is at
/// least `value`. `value` must be non-negative.
pub(crate) fn dyadic_sqrt_ceil(value: &Rational, bits: u32) -> Rational {
    debug_assert!(!value.is_negative());
    if value.is_zero() {
        return Rational::zero();
    }
    // p^2 >= n * 4^bits / d  <=>  p^2 >= ceil(n * 4^bits / d)
    let scale = BigInt::from(1u8) << (2 * bits as usize);
    let scaled = value.numer() * scale;
    let (q, r) = scaled.div_rem(value.denom());
    let bound = if r.is_zero() { q } else { q + 1 };
    let p = ceil_sqrt(&bound.magnitude().clone());
    Rational::new(
        BigInt::from_biguint(Sign::Plus, p),
        BigInt::from(1u8) << bits as usize,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_sqrt_exact_and_inexact() {
        assert_eq!(ceil_sqrt(&BigUint::from(0u8)), BigUint::from(0u8));
        assert_eq!(ceil_sqrt(&BigUint::from(9u8)), BigUint::from(3u8));
        assert_eq!(ceil_sqrt(&BigUint::from(10u8)), BigUint::from(4u8));
    }

    #[test]
    fn dyadic_root_is_tight() {
        let two = rational(2, 1);
        let r = dyadic_sqrt_ceil(&two, 16);
        let step = rational(1, 1 << 16);
        assert!(&r * &r >= two);
        let below = &r - &step;
        assert!(&below * &below < two);
        assert_eq!(dyadic_sqrt_ceil(&rational(9, 4), 16), rational(3, 2));
    }
}
