//! Dense truncated power series over a generic coefficient ring.
//!
//! The product-form transforms and identity checks run over two coefficient
//! rings: plain rationals, and polynomials in `q` (so identities can be
//! verified symbolically in `q` rather than at sampled values).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::qpoly::QPolynomial;
use crate::rational::{Int, Rational};
use crate::series::SeriesError;

/// Commutative ring of coefficients that is also a Q-algebra.
pub trait Coeff: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Coeff for QPolynomial {
    fn zero() -> Self {
        QPolynomial::zero()
    }
    fn one() -> Self {
        QPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(r: &Rational) -> Self {
        QPolynomial::constant(r.clone())
    }
}

/// Truncated power series `sum_{k=0}^{order} c_k x^k + O(x^{order+1})`,
/// stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn zero(order: u32) -> Self {
        PowerSeries { coeffs: vec![C::zero(); order as usize + 1] }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// `c * x^k`, or zero if `k` is beyond the order.
    pub fn monomial(c: C, k: u32, order: u32) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k as usize] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, k: u32) -> &C {
        &self.coeffs[k as usize]
    }

    pub fn set_coeff(&mut self, k: u32, c: C) {
        self.coeffs[k as usize] = c;
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == C::one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient, or `order + 1`.
    pub fn valuation(&self) -> u32 {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| p as u32)
            .unwrap_or(self.order() + 1)
    }

    pub fn truncated(&self, new_order: u32) -> Self {
        let n = new_order.min(self.order());
        PowerSeries { coeffs: self.coeffs[..=n as usize].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order as usize)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order as usize)
            .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
            .collect();
        PowerSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order as usize + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order as usize + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|v| v.mul(c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|v| v.mul_rational(r)).collect() }
    }

    /// Reciprocal; requires constant term exactly 1.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != C::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order() as usize;
        let mut out = Self::one(self.order());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out.coeffs[n - k]));
                }
            }
            out.coeffs[n] = acc.neg();
        }
        Ok(out)
    }

    /// `log` of a series with constant term exactly 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != C::one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let mut y = self.clone();
        y.coeffs[0] = C::zero();
        let v = y.valuation();
        let mut out = Self::zero(order);
        if v > order {
            return Ok(out);
        }
        let mut power = y.clone();
        let mut k: u32 = 1;
        while k * v <= order {
            let r = Rational::new(Int::from(if k % 2 == 1 { 1 } else { -1 }), Int::from(k));
            out = out.add(&power.scale_rational(&r));
            k += 1;
            if k * v <= order {
                power = power.mul(&y);
            }
        }
        Ok(out)
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let v = self.valuation();
        let mut out = Self::one(order);
        if v > order {
            return Ok(out);
        }
        let mut power = self.clone();
        let mut kfact = Int::one();
        let mut k: u32 = 1;
        while k * v <= order {
            let r = Rational::new(Int::one(), kfact.clone());
            out = out.add(&power.scale_rational(&r));
            k += 1;
            kfact *= Int::from(k);
            if k * v <= order {
                power = power.mul(self);
            }
        }
        Ok(out)
    }

    /// `f^e = exp(e * log f)` for an exponent in the coefficient ring.
    pub fn pow_coeff(&self, e: &C) -> Result<Self, SeriesError> {
        Ok(self.log()?.scale(e).exp()?)
    }

    /// `f^r` for a rational exponent.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self, SeriesError> {
        Ok(self.log()?.scale_rational(r).exp()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn series(v: &[i64]) -> PowerSeries<Rational> {
        PowerSeries::from_coeffs(v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn mul_and_inv() {
        let f = series(&[1, -1, 0, 0, 0, 0]);
        let g = f.inv().unwrap();
        for k in 0..=5 {
            assert_eq!(*g.coeff(k), rat(1));
        }
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn log_exp_round_trip() {
        let f = series(&[1, 2, -3, 0, 5, 1, -2, 0, 0, 4, 1]);
        let back = f.log().unwrap().exp().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn pow_rational_square_root() {
        // (1 + x)^(1/2) squared gives back 1 + x.
        let f = series(&[1, 1, 0, 0, 0, 0, 0, 0]);
        let h = f.pow_rational(&ratio(1, 2)).unwrap();
        assert_eq!(h.mul(&h), f);
    }

    #[test]
    fn pow_coeff_with_polynomial_exponent() {
        // (1 - x)^q has x-coefficient -q.
        let mut f: PowerSeries<QPolynomial> = PowerSeries::one(5);
        f.set_coeff(1, QPolynomial::constant_i64(-1));
        let g = f.pow_coeff(&QPolynomial::q()).unwrap();
        assert_eq!(*g.coeff(1), -&QPolynomial::q());
        // x^2 coefficient is C(q,2) = (q^2 - q)/2.
        let expect = QPolynomial::from_pairs(&[(2, ratio(1, 2)), (1, ratio(-1, 2))]);
        assert_eq!(*g.coeff(2), expect);
    }
}
