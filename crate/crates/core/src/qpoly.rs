//! Sparse exact polynomials in `q`.
//!
//! `QPolynomial` stores only nonzero coefficients, keyed by nonnegative
//! exponent. It houses the irreducible-polynomial counts `N(d,q)`, the
//! centralizer polynomials, and every exponent that a series gets raised to.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{Int, Rational};

/// Polynomial in `q` with rational coefficients, stored sparsely.
///
/// Invariant: no zero coefficient is stored, so `degree` is the largest key.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, Rational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(Rational::from_integer(Int::from(c)))
    }

    /// `c * q^e`.
    pub fn monomial(c: Rational, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPolynomial { coeffs }
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_pairs(pairs: &[(u32, Rational)]) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: u32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&u32, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, e: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitute `q -> q^d`.
    pub fn compose_q_power(&self, d: u32) -> Self {
        assert!(d >= 1);
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(e, v)| (e * d, v.clone())).collect(),
        }
    }

    /// Substitute `q -> -q`.
    pub fn substitute_neg_q(&self) -> Self {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (*e, if e % 2 == 0 { v.clone() } else { -v.clone() }))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, q0: &Int) -> Rational {
        let mut acc = Rational::zero();
        let mut last_e = 0u32;
        let mut power = Int::one();
        for (e, c) in self.coeffs.iter() {
            power *= q0.pow(e - last_e);
            last_e = *e;
            acc += c * Rational::from_integer(power.clone());
        }
        acc
    }

    /// Exact integer value at an integer point; panics if the value is not
    /// an integer.
    pub fn eval_int_exact(&self, q0: &Int) -> Int {
        let v = self.eval_int(q0);
        assert!(v.is_integer(), "polynomial value at {} is not an integer", q0);
        v.to_integer()
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// True if every coefficient is an even integer.
    pub fn has_even_coeffs(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_integer() && (c.numer() % 2i32).is_zero())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (ea, ca) in self.coeffs.iter() {
            for (eb, cb) in rhs.coeffs.iter() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let mut term = String::new();
            if c.is_negative() {
                term.push_str(if first { "-" } else { " - " });
            } else if !first {
                term.push_str(" + ");
            }
            let a = c.abs();
            let show_coeff = *e == 0 || !a.is_one();
            if show_coeff {
                term.push_str(&alloc::format!("{}", a));
            }
            if *e > 0 {
                if show_coeff {
                    term.push('*');
                }
                if *e == 1 {
                    term.push('q');
                } else {
                    term.push_str(&alloc::format!("q^{}", e));
                }
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q() -> QPolynomial {
        QPolynomial::q()
    }

    #[test]
    fn arithmetic_and_degree() {
        // (q - 1)(q + 1) = q^2 - 1
        let a = &q() - &QPolynomial::one();
        let b = &q() + &QPolynomial::one();
        let p = &a * &b;
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(2), rat(1));
        assert_eq!(p.coeff(1), rat(0));
        assert_eq!(p.coeff(0), rat(-1));
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = &q() - &QPolynomial::one();
        let s = &a - &a;
        assert!(s.is_zero());
        assert_eq!(s.degree(), None);
    }

    #[test]
    fn evaluation() {
        // q^2 - q at q = 3 is 6
        let p = &(&q() * &q()) - &q();
        assert_eq!(p.eval_int_exact(&Int::from(3)), Int::from(6));
    }

    #[test]
    fn substitutions() {
        let p = &(&q() * &q()) - &q(); // q^2 - q
        let p2 = p.compose_q_power(2); // q^4 - q^2
        assert_eq!(p2.coeff(4), rat(1));
        assert_eq!(p2.coeff(2), rat(-1));
        let pn = p.substitute_neg_q(); // q^2 + q
        assert_eq!(pn.coeff(1), rat(1));
    }
}
