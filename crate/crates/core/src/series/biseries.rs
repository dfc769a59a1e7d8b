//! Polynomials in `u` (truncated in degree) with Laurent-series coefficients.
//!
//! These carry the cycle-index generating functions: the coefficient of
//! `u^d` is a series in `q^{-1}`. All `u`-coefficients share a single
//! `q`-truncation order; `log`/`exp`/`pow` converge `u`-adically, so
//! exponent polynomials of any degree are allowed (each costs its degree in
//! `q`-truncation, exactly as in the univariate case).

use alloc::vec;
use alloc::vec::Vec;

use crate::qpoly::QPolynomial;
use crate::rational::{Int, Rational};
use crate::series::{LaurentSeries, SeriesError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<LaurentSeries>,
    q_order: i64,
}

impl BiSeries {
    pub fn zero(u_order: u32, q_order: i64) -> Self {
        BiSeries {
            coeffs: vec![LaurentSeries::zero(q_order); u_order as usize + 1],
            q_order,
        }
    }

    pub fn one(u_order: u32, q_order: i64) -> Self {
        let mut s = Self::zero(u_order, q_order);
        s.coeffs[0] = LaurentSeries::one(q_order);
        s
    }

    /// Build from `u`-coefficients; every entry is narrowed to the smallest
    /// truncation order present.
    pub fn from_u_coeffs(coeffs: Vec<LaurentSeries>) -> Self {
        assert!(!coeffs.is_empty());
        let q_order = coeffs.iter().map(|c| c.order()).min().unwrap();
        BiSeries {
            coeffs: coeffs.iter().map(|c| c.truncated(q_order)).collect(),
            q_order,
        }
    }

    pub fn u_order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn q_order(&self) -> i64 {
        self.q_order
    }

    pub fn coeff_u(&self, i: u32) -> &LaurentSeries {
        &self.coeffs[i as usize]
    }

    pub fn set_coeff_u(&mut self, i: u32, c: LaurentSeries) {
        assert!(c.order() >= self.q_order, "entry is less precise than the shared order");
        self.coeffs[i as usize] = c.truncated(self.q_order);
    }

    /// True if the `u^0` coefficient is 1 and all higher coefficients vanish.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn truncate_u(&self, u_order: u32) -> Self {
        let n = (u_order as usize + 1).min(self.coeffs.len());
        BiSeries { coeffs: self.coeffs[..n].to_vec(), q_order: self.q_order }
    }

    pub fn truncate_q(&self, q_order: i64) -> Self {
        let q_order = q_order.min(self.q_order);
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c.truncated(q_order)).collect(),
            q_order,
        }
    }

    fn renormalize(mut entries: Vec<LaurentSeries>) -> Self {
        let q_order = entries.iter().map(|c| c.order()).min().unwrap();
        for e in entries.iter_mut() {
            *e = e.truncated(q_order);
        }
        BiSeries { coeffs: entries, q_order }
    }

    pub fn add(&self, other: &Self) -> Self {
        let u_order = self.u_order().min(other.u_order());
        let entries = (0..=u_order as usize)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Self::renormalize(entries)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let u_order = self.u_order().min(other.u_order());
        let entries = (0..=u_order as usize)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Self::renormalize(entries)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let u_order = self.u_order().min(other.u_order()) as usize;
        let mut entries = Vec::with_capacity(u_order + 1);
        for m in 0..=u_order {
            let mut acc: Option<LaurentSeries> = None;
            for i in 0..=m {
                let t = &self.coeffs[i] * &other.coeffs[m - i];
                acc = Some(match acc {
                    None => t,
                    Some(s) => &s + &t,
                });
            }
            entries.push(acc.expect("at least one term"));
        }
        Self::renormalize(entries)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c.scaled(r)).collect(),
            q_order: self.q_order,
        }
    }

    /// Multiply every coefficient by an exact polynomial in `q`. Costs
    /// `deg p` orders of `q`-precision.
    pub fn mul_qpoly(&self, p: &QPolynomial) -> Self {
        let entries = self.coeffs.iter().map(|c| c.mul_qpoly(p)).collect();
        Self::renormalize(entries)
    }

    /// Substitute `(u, q) -> (u^m, q^m)`.
    pub fn inflate(&self, m: u32) -> Self {
        assert!(m >= 1);
        let new_u = (self.u_order() + 1) * m - 1;
        let new_q = (self.q_order + 1) * m as i64 - 1;
        let mut entries = vec![LaurentSeries::zero(new_q); new_u as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            entries[i * m as usize] = c.inflate(m as i64).truncated(new_q);
        }
        BiSeries { coeffs: entries, q_order: new_q }
    }

    /// Substitute `(u, q) -> (-u, -q)`: the `u^i q^{-j}` term picks up
    /// `(-1)^{i+j}`.
    pub fn substitute_neg_uq(&self) -> Self {
        let entries = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let s = c.substitute_neg_q();
                if i % 2 == 0 {
                    s
                } else {
                    s.scaled(&-Rational::from_integer(Int::from(1)))
                }
            })
            .collect();
        BiSeries { coeffs: entries, q_order: self.q_order }
    }

    /// `log` of a series whose `u^0` coefficient is exactly 1; converges
    /// `u`-adically.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let u_order = self.u_order();
        let mut y = self.clone();
        y.coeffs[0] = LaurentSeries::zero(self.q_order);
        let v = y.u_valuation();
        let mut out = Self::zero(u_order, self.q_order);
        if v > u_order {
            return Ok(out);
        }
        let mut power = y.clone();
        let mut k: u32 = 1;
        while k * v <= u_order {
            let r = Rational::new(Int::from(if k % 2 == 1 { 1 } else { -1 }), Int::from(k));
            out = out.add(&power.scale_rational(&r));
            k += 1;
            if k * v <= u_order {
                power = power.mul(&y);
            }
        }
        Ok(out)
    }

    /// `exp` of a series with zero `u^0` coefficient; converges `u`-adically.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let u_order = self.u_order();
        let v = self.u_valuation();
        let mut out = Self::one(u_order, self.q_order);
        if v > u_order {
            return Ok(out);
        }
        let mut power = self.clone();
        let mut kfact = Int::from(1);
        let mut k: u32 = 1;
        while k * v <= u_order {
            let r = Rational::new(Int::from(1), kfact.clone());
            out = out.add(&power.scale_rational(&r));
            k += 1;
            kfact *= Int::from(k);
            if k * v <= u_order {
                power = power.mul(self);
            }
        }
        Ok(out)
    }

    /// Smallest `u`-degree with a nonzero coefficient, or `u_order + 1`.
    pub fn u_valuation(&self) -> u32 {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| p as u32)
            .unwrap_or(self.u_order() + 1)
    }

    /// `a^{p(q)} = exp(p * log a)`. Exponent degree is unrestricted; it is
    /// paid for in `q`-truncation.
    pub fn pow_qpoly(&self, p: &QPolynomial) -> Result<Self, SeriesError> {
        self.log()?.mul_qpoly(p).exp()
    }

    /// `a^r` for a rational exponent.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self, SeriesError> {
        self.log()?.scale_rational(r).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn u_times_qinv(order_q: i64) -> BiSeries {
        // 1 + u*q^-1
        let mut s = BiSeries::one(4, order_q);
        s.set_coeff_u(1, LaurentSeries::monomial(rat(1), 1, order_q));
        s
    }

    #[test]
    fn square_of_one_plus_uqinv() {
        let a = u_times_qinv(8);
        let sq = a.mul(&a);
        assert!(sq.coeff_u(0).is_one());
        assert_eq!(sq.coeff_u(1).coeff(1), rat(2));
        assert_eq!(sq.coeff_u(2).coeff(2), rat(1));
        assert!(sq.coeff_u(3).is_zero());
    }

    #[test]
    fn pow_with_exponent_q_minus_one_at_concrete_q() {
        // (1 + u/(q-1))^(q-1) evaluated at q = 2 must match (1+u)^1.
        let q_order = 10;
        let mut base = BiSeries::one(3, q_order);
        let geo = LaurentSeries::from_pairs(
            &(1..=q_order).map(|k| (k, rat(1))).collect::<Vec<_>>(),
            q_order,
        );
        base.set_coeff_u(1, geo); // 1/(q-1) = q^-1 + q^-2 + ...
        let p = QPolynomial::from_pairs(&[(1, rat(1)), (0, rat(-1))]); // q - 1
        let powed = base.pow_qpoly(&p).unwrap();
        // u^1 coefficient evaluates to 1 at q = 2; u^2 and u^3 evaluate to 0.
        let tol = Rational::new(Int::from(1), Int::from(1i64 << (powed.q_order() - 1)));
        let err1 = powed.coeff_u(1).eval_at(2) - rat(1);
        assert!(crate::rational::rational_abs(&err1) < tol, "u^1 residual {}", err1);
        for i in 2..=3u32 {
            let err = powed.coeff_u(i).eval_at(2);
            assert!(crate::rational::rational_abs(&err) < tol, "u^{} residual {}", i, err);
        }
    }

    #[test]
    fn log_exp_round_trip() {
        let q_order = 9;
        let mut a = BiSeries::one(4, q_order);
        a.set_coeff_u(1, LaurentSeries::from_pairs(&[(1, rat(2)), (3, rat(-1))], q_order));
        a.set_coeff_u(2, LaurentSeries::from_pairs(&[(2, rat(5))], q_order));
        a.set_coeff_u(4, LaurentSeries::from_pairs(&[(0, rat(-3)), (4, rat(7))], q_order));
        let back = a.log().unwrap().exp().unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn inflate_places_terms() {
        let a = u_times_qinv(5);
        let b = a.inflate(2); // 1 + u^2 q^-2
        assert!(b.coeff_u(0).is_one());
        assert!(b.coeff_u(1).is_zero());
        assert_eq!(b.coeff_u(2).coeff(2), rat(1));
        assert_eq!(b.q_order(), 11);
    }

    #[test]
    fn neg_substitution_signs() {
        // u * q^-1 -> (-u)(-q)^-1 = u q^-1 (sign (+1) since i+j even).
        let a = u_times_qinv(5);
        let b = a.substitute_neg_uq();
        assert_eq!(b.coeff_u(1).coeff(1), rat(1));
        // u * q^-2 -> -u q^-2.
        let mut c = BiSeries::one(2, 5);
        c.set_coeff_u(1, LaurentSeries::monomial(rat(1), 2, 5));
        let d = c.substitute_neg_uq();
        assert_eq!(d.coeff_u(1).coeff(2), rat(-1));
    }
}
