//! Arbitrary-precision scalars.
//!
//! Every coefficient in this crate is a [`Rational`]: an exact fraction kept
//! in lowest terms with positive denominator (both invariants are maintained
//! by `num-rational`). No floating point appears anywhere.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Exact rational number in lowest terms, denominator > 0.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// `a / b` as a rational. Panics if `b == 0`.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(Int::from(a), Int::from(b))
}

/// True if `r` has denominator 1.
pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// True if `r` is an even integer.
pub fn is_even_integer(r: &Rational) -> bool {
    r.is_integer() && (r.numer() % 2i32).is_zero()
}

/// `k!` as a big integer.
pub fn factorial(k: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=k {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(b, k) = b(b-1)...(b-k+1)/k!` for an
/// arbitrary rational (or big-integer) upper argument.
pub fn binomial_general(b: &Rational, k: u64) -> Rational {
    let mut num = Rational::one();
    for i in 0..k {
        num *= b - rat(i as i64);
    }
    num / Rational::from_integer(factorial(k))
}

/// `base^exp` for a big-integer base and machine exponent.
pub fn int_pow(base: &Int, exp: u32) -> Int {
    base.pow(exp)
}

/// All divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Sign of `(-1)^k`.
pub fn neg_one_pow(k: u64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// |r| for rationals.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
