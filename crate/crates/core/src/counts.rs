//! Möbius-sum counts of monic irreducible polynomials and their
//! conjugation/duality orbit variants.
//!
//! Each count is exposed symbolically as a [`QPolynomial`] in `q` (with
//! rational coefficients that take integer values at integers) and, via
//! [`QPolynomial::eval_int_exact`], as an exact integer at a concrete `q`.
//! The characteristic parity enters only through `e(q)`, which is 1 for
//! even `q` and 2 for odd `q`; it is carried as an explicit parameter
//! because it is not a polynomial in `q`.

use crate::qpoly::QPolynomial;
use crate::rational::{divisors, Int, Rational};

/// Parity of the field characteristic: decides `e(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharParity {
    Even,
    Odd,
}

impl CharParity {
    /// Parity of a concrete prime power.
    pub fn of(q: u64) -> CharParity {
        if q % 2 == 0 {
            CharParity::Even
        } else {
            CharParity::Odd
        }
    }

    /// `e(q)`: 1 if `q` is even, 2 if `q` is odd.
    pub fn e(self) -> u32 {
        match self {
            CharParity::Even => 1,
            CharParity::Odd => 2,
        }
    }
}

/// Arithmetic Möbius function. Rejects `n = 0`.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for positive integers");
    let mut m = n;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            prime_count += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    if prime_count % 2 == 0 {
        1
    } else {
        -1
    }
}

fn mobius_sum(d: u32, term: impl Fn(u64, u32) -> QPolynomial) -> QPolynomial {
    // (1/d) * sum over divisors a of d of mu(a) * term(a, d/a)
    let mut acc = QPolynomial::zero();
    for a in divisors(d as u64) {
        let mu = mobius(a);
        if mu == 0 {
            continue;
        }
        let t = term(a, (d as u64 / a) as u32);
        acc = &acc + &t.scale(&Rational::from_integer(Int::from(mu)));
    }
    acc.scale(&Rational::new(Int::from(1), Int::from(d)))
}

/// `N(d,q)`: the number of monic irreducible degree-`d` polynomials over
/// `F_q` other than `z`, as a polynomial in `q`.
pub fn count_n(d: u32) -> QPolynomial {
    assert!(d >= 1);
    mobius_sum(d, |_, e| {
        &QPolynomial::monomial(Rational::from_integer(Int::from(1)), e) - &QPolynomial::one()
    })
}

/// `Ñ(d,q)`: zero for even `d`; for odd `d` the Möbius sum over
/// `q^{d/a} + 1`.
pub fn count_n_tilde(d: u32) -> QPolynomial {
    assert!(d >= 1);
    if d % 2 == 0 {
        return QPolynomial::zero();
    }
    mobius_sum(d, |_, e| {
        &QPolynomial::monomial(Rational::from_integer(Int::from(1)), e) + &QPolynomial::one()
    })
}

/// `M̃(d,q) = (N(d,q^2) - Ñ(d,q)) / 2`.
pub fn count_m_tilde(d: u32) -> QPolynomial {
    let n_qsq = count_n(d).compose_q_power(2);
    (&n_qsq - &count_n_tilde(d)).scale(&Rational::new(Int::from(1), Int::from(2)))
}

/// `N*(d,q)`: `e(q)` for `d = 1`; zero for odd `d > 1`; for even `d` the
/// Möbius sum over odd divisors of `q^{d/2a} + 1 - e(q)`.
pub fn count_n_star(d: u32, parity: CharParity) -> QPolynomial {
    assert!(d >= 1);
    if d == 1 {
        return QPolynomial::constant_i64(parity.e() as i64);
    }
    if d % 2 == 1 {
        return QPolynomial::zero();
    }
    let e = parity.e() as i64;
    let mut acc = QPolynomial::zero();
    for a in divisors(d as u64) {
        if a % 2 == 0 {
            continue;
        }
        let mu = mobius(a);
        if mu == 0 {
            continue;
        }
        let exp = (d as u64 / (2 * a)) as u32;
        let t = &QPolynomial::monomial(Rational::from_integer(Int::from(1)), exp)
            + &QPolynomial::constant_i64(1 - e);
        acc = &acc + &t.scale(&Rational::from_integer(Int::from(mu)));
    }
    acc.scale(&Rational::new(Int::from(1), Int::from(d)))
}

/// `M*(d,q) = (N(d,q) - N*(d,q)) / 2`.
pub fn count_m_star(d: u32, parity: CharParity) -> QPolynomial {
    (&count_n(d) - &count_n_star(d, parity)).scale(&Rational::new(Int::from(1), Int::from(2)))
}

/// Convenience: exact integer value of a count polynomial at `q = q0`.
pub fn eval_count(p: &QPolynomial, q0: u64) -> Int {
    p.eval_int_exact(&Int::from(q0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    #[should_panic]
    fn mobius_rejects_zero() {
        mobius(0);
    }

    #[test]
    fn n_of_degree_one_is_q_minus_one() {
        let p = count_n(1);
        assert_eq!(p.coeff(1), rat(1));
        assert_eq!(p.coeff(0), rat(-1));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn n_small_concrete_values() {
        assert_eq!(eval_count(&count_n(2), 2), Int::from(1));
        assert_eq!(eval_count(&count_n(3), 2), Int::from(2));
        assert_eq!(eval_count(&count_n(4), 2), Int::from(3));
        assert_eq!(eval_count(&count_n(1), 5), Int::from(4));
    }

    #[test]
    fn n_tilde_values() {
        assert!(count_n_tilde(2).is_zero());
        assert!(count_n_tilde(4).is_zero());
        let p = count_n_tilde(1); // q + 1
        assert_eq!(p.coeff(1), rat(1));
        assert_eq!(p.coeff(0), rat(1));
        // ((8+1) - (2+1)) / 3 = 2
        assert_eq!(eval_count(&count_n_tilde(3), 2), Int::from(2));
    }

    #[test]
    fn m_tilde_values() {
        assert_eq!(eval_count(&count_m_tilde(1), 2), Int::from(0));
        assert_eq!(eval_count(&count_m_tilde(1), 3), Int::from(2));
        // (N(2,4) - 0)/2 = 6/2 = 3
        assert_eq!(eval_count(&count_m_tilde(2), 2), Int::from(3));
    }

    #[test]
    fn n_star_branches() {
        let p = count_n_star(1, CharParity::Odd);
        assert_eq!(p.coeff(0), rat(2));
        let p = count_n_star(1, CharParity::Even);
        assert_eq!(p.coeff(0), rat(1));
        assert!(count_n_star(3, CharParity::Odd).is_zero());
        assert!(count_n_star(5, CharParity::Even).is_zero());
        // N*(2,3) = (3 + 1 - 2)/2 = 1
        assert_eq!(eval_count(&count_n_star(2, CharParity::Odd), 3), Int::from(1));
    }

    #[test]
    fn m_star_values() {
        assert_eq!(eval_count(&count_m_star(1, CharParity::Odd), 3), Int::from(0));
        assert_eq!(eval_count(&count_m_star(2, CharParity::Odd), 3), Int::from(1));
        assert_eq!(eval_count(&count_m_star(1, CharParity::Even), 2), Int::from(0));
    }

    #[test]
    fn counts_are_integers_at_prime_powers() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let parity = CharParity::of(q);
            for d in 1..=10u32 {
                for p in [
                    count_n(d),
                    count_n_tilde(d),
                    count_m_tilde(d),
                    count_n_star(d, parity),
                    count_m_star(d, parity),
                ] {
                    let v = p.eval_int(&Int::from(q));
                    assert!(v.is_integer(), "non-integer count at d={}, q={}", d, q);
                }
            }
        }
    }
}
