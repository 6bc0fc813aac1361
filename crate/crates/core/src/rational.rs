//! Exact arithmetic helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Returns the numerator when `q` is an integer.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

/// `p/q`, or `p` when the denominator is one.
pub fn to_string(q: &Rational) -> String {
    q.to_string()
}

pub(crate) fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), BigInt::from(10));
        assert_eq!(binomial(60, 3), BigInt::from(34220));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(3, 3), BigInt::one());
    }

    #[test]
    fn reduced_form() {
        let q = frac(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(to_string(&q), "-3/2");
        assert_eq!(to_string(&int(28)), "28");
    }
}
