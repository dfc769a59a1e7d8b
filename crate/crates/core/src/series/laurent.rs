//! Truncated Laurent series in `q^{-1}` with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::qpoly::QPolynomial;
use crate::rational::{Int, Rational};
use crate::series::SeriesError;

/// Truncated Laurent series `sum_k c_k q^{-k}`.
///
/// The map key is the exponent `k` of `q^{-k}`; negative keys encode a
/// finite positive-power (principal) part. Coefficients are exactly known
/// for every `k <= order` and unknown beyond; only nonzero coefficients are
/// stored, and every stored key is `<= order`.
///
/// Binary operations compute the widest sound truncation for the result:
/// with no positive powers in play this is the minimum of the operand
/// orders, and multiplying by a positive power of `q` costs exactly that
/// many orders of precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, Rational>,
    order: i64,
}

impl LaurentSeries {
    pub fn zero(order: i64) -> Self {
        LaurentSeries { coeffs: BTreeMap::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// `c * q^{-k}`, truncated at `order`.
    pub fn monomial(c: Rational, k: i64, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.set_coeff(k, c);
        s
    }

    pub fn from_pairs(pairs: &[(i64, Rational)], order: i64) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in pairs {
            let mut v = s.coeff_or_zero(*k);
            v += c;
            s.set_coeff(*k, v);
        }
        s
    }

    /// Embed a polynomial in `q` (exponent `e` becomes key `-e`).
    pub fn from_qpoly(p: &QPolynomial, order: i64) -> Self {
        assert!(order >= 0, "order must be nonnegative to hold a polynomial");
        let mut s = Self::zero(order);
        for (e, c) in p.iter() {
            s.set_coeff(-(*e as i64), c.clone());
        }
        s
    }

    /// Coefficients are exactly known for exponents `<= order`.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Smallest exponent that can carry a nonzero coefficient: the smallest
    /// stored key, or `order + 1` when everything known is zero.
    pub fn min_support(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order + 1)
    }

    /// Valuation of the series in `q^{-1}`: alias of [`min_support`].
    pub fn valuation(&self) -> i64 {
        self.min_support()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if no positive powers of `q` are present.
    pub fn positive_part_empty(&self) -> bool {
        self.min_support() >= 0
    }

    /// True if the series equals 1 through its truncation order.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff_or_zero(0).is_one()
    }

    /// Coefficient of `q^{-k}`. Panics beyond the truncation order: that
    /// coefficient is unknown, not zero.
    pub fn coeff(&self, k: i64) -> Rational {
        assert!(
            k <= self.order,
            "coefficient of q^-{} requested but series is only known to order {}",
            k,
            self.order
        );
        self.coeff_or_zero(k)
    }

    fn coeff_or_zero(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, k: i64, c: Rational) {
        assert!(k <= self.order, "cannot store beyond the truncation order");
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficients of `q^0 .. q^{-n}` as a dense vector. Panics if the
    /// series has a positive-power part or `n` exceeds the order.
    pub fn coeff_prefix(&self, n: i64) -> Vec<Rational> {
        assert!(self.positive_part_empty(), "series has positive powers of q");
        (0..=n).map(|k| self.coeff(k)).collect()
    }

    /// Narrow the truncation order (values are never widened).
    pub fn truncated(&self, new_order: i64) -> Self {
        let order = self.order.min(new_order);
        LaurentSeries {
            coeffs: self.coeffs.range(..=order).map(|(k, c)| (*k, c.clone())).collect(),
            order,
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
            order: self.order,
        }
    }

    /// Multiply by `q^g` (exact): exponents drop by `g`, and so does the
    /// truncation order when `g > 0`.
    pub fn mul_q_power(&self, g: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (k - g, v.clone())).collect(),
            order: self.order - g,
        }
    }

    /// Multiply by an exact polynomial in `q`.
    pub fn mul_qpoly(&self, p: &QPolynomial) -> Self {
        let Some(deg) = p.degree() else {
            return Self::zero(self.order);
        };
        let mut out = Self::zero(self.order - deg as i64);
        for (e, c) in p.iter() {
            for (k, v) in self.coeffs.iter() {
                let key = k - *e as i64;
                if key <= out.order {
                    let mut acc = out.coeff_or_zero(key);
                    acc += v * c;
                    out.set_coeff(key, acc);
                }
            }
        }
        out
    }

    /// Substitute `q -> q^m`: exponents scale by `m`.
    pub fn inflate(&self, m: i64) -> Self {
        assert!(m >= 1);
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (k * m, v.clone())).collect(),
            order: m * (self.order + 1) - 1,
        }
    }

    /// Substitute `q -> -q`: the coefficient of `q^{-k}` picks up `(-1)^k`.
    pub fn substitute_neg_q(&self) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, if k.rem_euclid(2) == 0 { v.clone() } else { -v.clone() }))
                .collect(),
            order: self.order,
        }
    }

    /// Reciprocal of a series with unit valuation structure: requires no
    /// positive part and a nonzero constant term.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        if !self.positive_part_empty() {
            return Err(SeriesError::PositivePart);
        }
        let c0 = self.coeff_or_zero(0);
        if c0.is_zero() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let c0_inv = Rational::one() / c0;
        let mut out = Self::zero(self.order);
        out.set_coeff(0, c0_inv.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for (k, a) in self.coeffs.range(1..=n) {
                let b = out.coeff_or_zero(n - *k);
                if !b.is_zero() {
                    acc += a * &b;
                }
            }
            out.set_coeff(n, -(&c0_inv * &acc));
        }
        Ok(out)
    }

    /// Expand `1 / p(q)` in powers of `q^{-1}`, exactly known through
    /// `order`. Requires a nonzero polynomial.
    pub fn recip_qpoly(p: &QPolynomial, order: i64) -> Self {
        let deg = p.degree().expect("reciprocal of the zero polynomial") as i64;
        let lead = p.leading_coeff();
        // p = lead * q^deg * (1 + w), with w a series of positive valuation.
        let mut unit = Self::one(order);
        for (e, c) in p.iter() {
            let k = deg - *e as i64;
            if k > 0 && k <= order {
                unit.set_coeff(k, c / &lead);
            }
        }
        let inv_unit = unit.inv().expect("unit part has constant term 1");
        inv_unit
            .mul_q_power(-deg)
            .scaled(&(Rational::one() / lead))
            .truncated(order)
    }

    /// `log` of a series with constant term exactly 1 and no positive part.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.positive_part_empty() {
            return Err(SeriesError::PositivePart);
        }
        if !self.coeff_or_zero(0).is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let mut y = self.clone();
        y.set_coeff(0, Rational::zero());
        let mut out = Self::zero(self.order);
        if y.is_zero() {
            return Ok(out);
        }
        let mut power = y.clone();
        let mut k: i64 = 1;
        loop {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let term = power.scaled(&Rational::new(Int::from(sign), Int::from(k)));
            out = &out + &term;
            if power.min_support() + y.min_support() > self.order {
                break;
            }
            power = &power * &y;
            k += 1;
        }
        Ok(out)
    }

    /// `exp` of a series with valuation at least 1.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.min_support() < 1 {
            return Err(SeriesError::PositivePart);
        }
        let mut out = Self::one(self.order);
        if self.is_zero() {
            return Ok(out);
        }
        let mut power = self.clone();
        let mut kfact = Int::one();
        let mut k: i64 = 1;
        loop {
            let term = power.scaled(&(Rational::one() / Rational::from_integer(kfact.clone())));
            out = &out + &term;
            if power.min_support() + self.min_support() > self.order {
                break;
            }
            power = &power * self;
            k += 1;
            kfact *= Int::from(k);
        }
        Ok(out)
    }

    /// `a^{p(q)} = exp(p * log a)` for a polynomial exponent.
    ///
    /// Requires constant term 1 and valuation of `a - 1` strictly above the
    /// degree of `p`, so the result has no positive powers. The result is
    /// exactly known through `a.order() - deg p`.
    pub fn pow_qpoly(&self, p: &QPolynomial) -> Result<Self, SeriesError> {
        let lg = self.log()?;
        let deg = p.degree().unwrap_or(0) as i64;
        let v = lg.min_support();
        if v <= deg && !lg.is_zero() {
            return Err(SeriesError::ValuationTooLow { valuation: v, exponent_degree: deg });
        }
        lg.mul_qpoly(p).exp()
    }

    /// Exact value of the retained part at `q = q0`.
    pub fn eval_at(&self, q0: u64) -> Rational {
        let q = Rational::from_integer(Int::from(q0));
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter() {
            let term = if *k >= 0 {
                c / q.pow(*k as i32)
            } else {
                c * q.pow((-k) as i32)
            };
            acc += term;
        }
        acc
    }

    /// True if every retained coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let mut out = LaurentSeries::zero(order);
        for (k, c) in self.coeffs.range(..=order) {
            out.set_coeff(*k, c.clone());
        }
        for (k, c) in rhs.coeffs.range(..=order) {
            let mut v = out.coeff_or_zero(*k);
            v += c;
            out.set_coeff(*k, v);
        }
        out
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
            order: self.order,
        }
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        // The first unknown cross terms sit at (order_a + 1 + min_b) and
        // (order_b + 1 + min_a); everything below is exactly determined.
        let exact = (self.order + rhs.min_support()).min(rhs.order + self.min_support());
        let order = exact.min(self.order.max(rhs.order));
        let mut out = LaurentSeries::zero(order);
        for (ka, ca) in self.coeffs.iter() {
            for (kb, cb) in rhs.coeffs.iter() {
                let k = ka + kb;
                if k <= order {
                    let mut v = out.coeff_or_zero(k);
                    v += ca * cb;
                    out.set_coeff(k, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (k, c) in self.coeffs.iter() {
                let mut term = String::new();
                if c.is_negative() {
                    term.push_str(if first { "-" } else { " - " });
                } else if !first {
                    term.push_str(" + ");
                }
                let a = c.abs();
                let show_coeff = *k == 0 || !a.is_one();
                if show_coeff {
                    term.push_str(&alloc::format!("{}", a));
                }
                if *k != 0 {
                    if show_coeff {
                        term.push('*');
                    }
                    term.push_str(&alloc::format!("q^{}", -k));
                }
                f.write_str(&term)?;
                first = false;
            }
        }
        write!(f, " + O(q^{})", -(self.order + 1))
    }
}
