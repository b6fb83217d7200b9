use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used for every count.
pub type Integer = BigInt;

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Divides `a` by `d`, panicking when the division leaves a remainder.
///
/// Closed forms that halve (or divide by `p`) go through here so that a
/// wrong formula fails loudly instead of truncating.
pub fn exact_div(a: &Integer, d: &Integer) -> Integer {
    let (q, r) = a.div_rem(d);
    assert!(r.is_zero(), "inexact division: {a} / {d}");
    q
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
