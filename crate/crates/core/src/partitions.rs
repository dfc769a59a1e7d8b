//! Integer partitions, centralizer-order polynomials, and Λ-type
//! specifications.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::qpoly::QPolynomial;
use crate::rational::{Int, Rational};

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts in any order; zeros are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The one-part partition `(m)`.
    pub fn one_part(m: u32) -> Self {
        assert!(m > 0);
        Partition { parts: vec![m] }
    }

    /// The all-ones partition `(1^m)`.
    pub fn ones(m: u32) -> Self {
        assert!(m > 0);
        Partition { parts: vec![1; m as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`: the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `#(λ)`: the number of parts.
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_one_part(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicities `m_i`: how many parts equal `i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `k(λ) = 2 Σ_{i<j} i m_i m_j + Σ_i (i-1) m_i²`.
    pub fn k_lambda(&self) -> u64 {
        let m = self.multiplicities();
        let sizes: Vec<(u64, u64)> = m.iter().map(|(&i, &c)| (i as u64, c as u64)).collect();
        let mut acc = 0u64;
        for (a, &(i, mi)) in sizes.iter().enumerate() {
            acc += (i - 1) * mi * mi;
            for &(_, mj) in sizes.iter().skip(a + 1) {
                acc += 2 * i * mi * mj;
            }
        }
        acc
    }

    /// `Δ(λ)`: the degree of the GL centralizer polynomial. All three
    /// closed forms are computed and must agree.
    pub fn centralizer_degree(&self) -> u64 {
        assert!(!self.parts.is_empty());
        let m = self.multiplicities();
        let sizes: Vec<(u64, u64)> = m.iter().map(|(&i, &c)| (i as u64, c as u64)).collect();

        // 2 Σ_{i<j} i m_i m_j + Σ_i i m_i²
        let mut via_mults = 0u64;
        for (a, &(i, mi)) in sizes.iter().enumerate() {
            via_mults += i * mi * mi;
            for &(_, mj) in sizes.iter().skip(a + 1) {
                via_mults += 2 * i * mi * mj;
            }
        }

        // Σ_i n_i² with n_i = Σ_{j>=i} m_j
        let max_part = *self.parts.first().unwrap() as u64;
        let mut via_tails = 0u64;
        for i in 1..=max_part {
            let n_i: u64 = sizes.iter().filter(|&&(j, _)| j >= i).map(|&(_, c)| c).sum();
            via_tails += n_i * n_i;
        }

        // Σ_i (2i-1) a_i over the parts in weakly decreasing order
        let via_parts: u64 = self
            .parts
            .iter()
            .enumerate()
            .map(|(idx, &a)| (2 * idx as u64 + 1) * a as u64)
            .sum();

        assert!(
            via_mults == via_tails && via_tails == via_parts,
            "centralizer degree formulas disagree on {:?}",
            self.parts
        );
        via_mults
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, each exactly once, in increasing lexicographic
/// order of the part lists.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let hi = remaining.min(max_part);
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out.reverse();
    out
}

/// `|GL(m, q)| = q^{C(m,2)} (q^m - 1) ... (q - 1)` as a polynomial.
fn gl_order_poly(m: u32) -> QPolynomial {
    let mut acc = QPolynomial::monomial(Rational::one(), m * (m.saturating_sub(1)) / 2);
    for j in 1..=m {
        let factor = &QPolynomial::monomial(Rational::one(), j) - &QPolynomial::one();
        acc = &acc * &factor;
    }
    acc
}

/// `|U(m, q)| = q^{C(m,2)} (q^m - (-1)^m) ... (q + 1)` as a polynomial.
fn u_order_poly(m: u32) -> QPolynomial {
    let mut acc = QPolynomial::monomial(Rational::one(), m * (m.saturating_sub(1)) / 2);
    for j in 1..=m {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let factor = &QPolynomial::monomial(Rational::one(), j)
            - &QPolynomial::constant_i64(sign);
        acc = &acc * &factor;
    }
    acc
}

/// Which centralizer family a cycle-index factor uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralizerFlavor {
    Gl,
    U,
}

/// `C_{GL,λ}(q) = q^{k(λ)} Π_i |GL(m_i, q)|`; degree `Δ(λ)`, monic.
pub fn centralizer_gl(lambda: &Partition) -> QPolynomial {
    let mut acc = QPolynomial::monomial(Rational::one(), lambda.k_lambda() as u32);
    for (_, &mi) in lambda.multiplicities().iter() {
        acc = &acc * &gl_order_poly(mi);
    }
    acc
}

/// `C_{U,λ}(q) = q^{k(λ)} Π_i |U(m_i, q)|`; satisfies
/// `C_{U,λ}(q) = (-1)^{|λ|} C_{GL,λ}(-q)`.
pub fn centralizer_u(lambda: &Partition) -> QPolynomial {
    let mut acc = QPolynomial::monomial(Rational::one(), lambda.k_lambda() as u32);
    for (_, &mi) in lambda.multiplicities().iter() {
        acc = &acc * &u_order_poly(mi);
    }
    acc
}

pub fn centralizer(flavor: CentralizerFlavor, lambda: &Partition) -> QPolynomial {
    match flavor {
        CentralizerFlavor::Gl => centralizer_gl(lambda),
        CentralizerFlavor::U => centralizer_u(lambda),
    }
}

/// The classical group families handled here. `Sp` and the orthogonal
/// groups live on even-dimensional spaces (dimension `2d`) and carry the
/// convention that `λ_{z±1}` must be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Gl,
    U,
    Sp,
    OPlus,
    OMinus,
}

impl GroupKind {
    pub fn parse(s: &str) -> Result<GroupKind, ParseError> {
        match s {
            "gl" | "GL" => Ok(GroupKind::Gl),
            "u" | "U" => Ok(GroupKind::U),
            "sp" | "Sp" | "SP" => Ok(GroupKind::Sp),
            "o+" | "O+" => Ok(GroupKind::OPlus),
            "o-" | "O-" => Ok(GroupKind::OMinus),
            _ => Err(ParseError::bad_group(s)),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::Gl => "gl",
            GroupKind::U => "u",
            GroupKind::Sp => "sp",
            GroupKind::OPlus => "o+",
            GroupKind::OMinus => "o-",
        };
        write!(f, "{}", s)
    }
}

/// A decidable, size-enumerable set Λ of partitions.
///
/// The named families: `Separable = {(1)}`, `Cyclic = {(m)}`,
/// `Semisimple = {(1^m)}`, `All` = every partition. `Explicit` holds a
/// finite set. `Predicate` wraps an arbitrary membership test; it is
/// enumerable by filtering, but makes no closure promises (σ computations
/// report inconclusive instead of guessing).
#[derive(Clone, Debug, PartialEq)]
pub enum LambdaSpec {
    All,
    Separable,
    Cyclic,
    Semisimple,
    Explicit(Vec<Partition>),
    Predicate { name: &'static str, member: fn(&Partition) -> bool },
}

impl LambdaSpec {
    pub fn explicit(mut parts: Vec<Partition>) -> Self {
        parts.sort();
        parts.dedup();
        LambdaSpec::Explicit(parts)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        match self {
            LambdaSpec::All => true,
            LambdaSpec::Separable => lambda.parts() == [1],
            LambdaSpec::Cyclic => lambda.is_one_part(),
            LambdaSpec::Semisimple => lambda.is_all_ones(),
            LambdaSpec::Explicit(set) => set.binary_search(lambda).is_ok(),
            LambdaSpec::Predicate { member, .. } => member(lambda),
        }
    }

    pub fn contains_one(&self) -> bool {
        self.contains(&Partition::one_part(1))
    }

    /// Exactly the members of size `n`, in deterministic order.
    pub fn members_of_size(&self, n: u32) -> Vec<Partition> {
        match self {
            LambdaSpec::Separable => {
                if n == 1 {
                    vec![Partition::one_part(1)]
                } else {
                    vec![]
                }
            }
            LambdaSpec::Cyclic => vec![Partition::one_part(n)],
            LambdaSpec::Semisimple => vec![Partition::ones(n)],
            LambdaSpec::All => enumerate_partitions(n),
            LambdaSpec::Explicit(set) => {
                set.iter().filter(|p| p.size() == n).cloned().collect()
            }
            LambdaSpec::Predicate { member, .. } => enumerate_partitions(n)
                .into_iter()
                .filter(|p| member(p))
                .collect(),
        }
    }

    /// Whether the family certifies that every one-part partition is a
    /// member. `None` means no declaration is available (bare predicates).
    pub fn declares_all_one_parts(&self) -> Option<bool> {
        match self {
            LambdaSpec::All | LambdaSpec::Cyclic => Some(true),
            LambdaSpec::Separable | LambdaSpec::Semisimple | LambdaSpec::Explicit(_) => {
                Some(false)
            }
            LambdaSpec::Predicate { .. } => None,
        }
    }

    /// Parse the CLI/config syntax: a family name or `set:[..];[..]`.
    pub fn parse(s: &str) -> Result<LambdaSpec, ParseError> {
        let s = s.trim();
        match s {
            "all" => return Ok(LambdaSpec::All),
            "separable" => return Ok(LambdaSpec::Separable),
            "cyclic" => return Ok(LambdaSpec::Cyclic),
            "semisimple" => return Ok(LambdaSpec::Semisimple),
            _ => {}
        }
        if let Some(body) = s.strip_prefix("set:") {
            let mut parts = Vec::new();
            for item in body.split(';') {
                parts.push(parse_partition(item)?);
            }
            if parts.is_empty() {
                return Err(ParseError::new("empty partition set"));
            }
            return Ok(LambdaSpec::explicit(parts));
        }
        Err(ParseError::new_owned(alloc::format!(
            "unknown lambda spec '{}' (expected separable|cyclic|semisimple|all|set:[..];[..])",
            s
        )))
    }
}

impl fmt::Display for LambdaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaSpec::All => write!(f, "all"),
            LambdaSpec::Separable => write!(f, "separable"),
            LambdaSpec::Cyclic => write!(f, "cyclic"),
            LambdaSpec::Semisimple => write!(f, "semisimple"),
            LambdaSpec::Explicit(set) => {
                write!(f, "set:")?;
                for (i, p) in set.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{}", p)?;
                }
                Ok(())
            }
            LambdaSpec::Predicate { name, .. } => write!(f, "predicate:{}", name),
        }
    }
}

/// Parse `[2,1]` into a partition.
pub fn parse_partition(s: &str) -> Result<Partition, ParseError> {
    let s = s.trim();
    let body = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ParseError::new("partition must be bracketed, e.g. [2,1]"))?;
    let mut parts = Vec::new();
    for tok in body.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(ParseError::new("empty partition part"));
        }
        let v: u32 = tok
            .parse()
            .map_err(|_| ParseError::new_owned(alloc::format!("bad partition part '{}'", tok)))?;
        if v == 0 {
            return Err(ParseError::new("partition parts must be positive"));
        }
        parts.push(v);
    }
    if parts.is_empty() {
        return Err(ParseError::new("empty partition"));
    }
    Ok(Partition::new(parts))
}

/// Error for the partition / Λ-spec text syntax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    fn new(msg: &str) -> Self {
        ParseError { message: msg.to_owned() }
    }
    fn new_owned(message: String) -> Self {
        ParseError { message }
    }
    fn bad_group(s: &str) -> Self {
        ParseError::new_owned(alloc::format!(
            "unknown group '{}' (expected gl|u|sp|o+|o-)",
            s
        ))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl core::error::Error for ParseError {}

// Rational functions in q, used to verify the partition-sum identities by
// cross multiplication.
#[derive(Clone, Debug)]
struct RationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

impl RationalFunction {
    fn from_recip(den: QPolynomial) -> Self {
        RationalFunction { num: QPolynomial::one(), den }
    }

    fn add(&self, other: &Self) -> Self {
        RationalFunction {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    fn equals(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Check `Σ_{|λ|=n} 1/C(q) = q^{n(n-1)/2} / Π_{i<=n}(q^i ∓ (±1)^i)` as an
/// exact rational-function identity.
pub fn stong_sum(n: u32, flavor: CentralizerFlavor) -> bool {
    assert!(n >= 1);
    let mut lhs: Option<RationalFunction> = None;
    for lambda in enumerate_partitions(n) {
        let term = RationalFunction::from_recip(centralizer(flavor, &lambda));
        lhs = Some(match lhs {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    let lhs = lhs.unwrap();

    let mut den = QPolynomial::one();
    for i in 1..=n {
        let c = match flavor {
            CentralizerFlavor::Gl => -1,
            CentralizerFlavor::U => if i % 2 == 0 { -1 } else { 1 },
        };
        den = &den * &(&QPolynomial::monomial(Rational::one(), i) + &QPolynomial::constant_i64(c));
    }
    let rhs = RationalFunction {
        num: QPolynomial::monomial(Rational::from_integer(Int::one()), n * (n - 1) / 2),
        den,
    };
    lhs.equals(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn k_lambda_values() {
        assert_eq!(p(&[1]).k_lambda(), 0);
        assert_eq!(p(&[2]).k_lambda(), 1);
        assert_eq!(p(&[2, 1]).k_lambda(), 3);
    }

    #[test]
    fn centralizer_degree_values() {
        assert_eq!(p(&[1]).centralizer_degree(), 1);
        assert_eq!(p(&[1, 1]).centralizer_degree(), 4);
        assert_eq!(p(&[2, 1]).centralizer_degree(), 5);
        assert_eq!(p(&[3, 2, 2, 1]).centralizer_degree(), 2 * (3 + 4 + 6 + 4) - 8);
    }

    #[test]
    fn degree_bounds() {
        for n in 1..=12u32 {
            for lam in enumerate_partitions(n) {
                let d = lam.centralizer_degree();
                let size = lam.size() as u64;
                let parts = lam.num_parts() as u64;
                assert!(size <= d && d <= size * parts && size * parts <= size * size);
                assert_eq!(d == size, lam.is_one_part());
            }
        }
    }

    #[test]
    fn centralizer_polynomials() {
        // C_GL((1)) = q - 1
        let c = centralizer_gl(&p(&[1]));
        assert_eq!(c.coeff(1), rat(1));
        assert_eq!(c.coeff(0), rat(-1));
        // C_GL((2)) = q^2 - q
        let c = centralizer_gl(&p(&[2]));
        assert_eq!(c.coeff(2), rat(1));
        assert_eq!(c.coeff(1), rat(-1));
        // C_GL((1,1)) = (q^2-1)(q^2-q)
        let c = centralizer_gl(&p(&[1, 1]));
        let expect = &QPolynomial::from_pairs(&[(2, rat(1)), (0, rat(-1))])
            * &QPolynomial::from_pairs(&[(2, rat(1)), (1, rat(-1))]);
        assert_eq!(c, expect);
        // C_U((1)) = q + 1, C_U((2)) = q^2 + q
        let c = centralizer_u(&p(&[1]));
        assert_eq!(c.coeff(0), rat(1));
        let c = centralizer_u(&p(&[2]));
        assert_eq!(c.coeff(1), rat(1));
        // C_U((1,1)) = (q^2-1)(q^2+q)
        let c = centralizer_u(&p(&[1, 1]));
        let expect = &QPolynomial::from_pairs(&[(2, rat(1)), (0, rat(-1))])
            * &QPolynomial::from_pairs(&[(2, rat(1)), (1, rat(1))]);
        assert_eq!(c, expect);
    }

    #[test]
    fn centralizer_degree_matches_polynomial_degree() {
        for n in 1..=8u32 {
            for lam in enumerate_partitions(n) {
                let d = lam.centralizer_degree() as u32;
                assert_eq!(centralizer_gl(&lam).degree(), Some(d));
                assert_eq!(centralizer_u(&lam).degree(), Some(d));
            }
        }
    }

    #[test]
    fn u_is_gl_twisted() {
        // C_U(q) = (-1)^{|λ|} C_GL(-q)
        for n in 1..=7u32 {
            for lam in enumerate_partitions(n) {
                let twisted = centralizer_gl(&lam).substitute_neg_q();
                let signed = if n % 2 == 0 { twisted.clone() } else { -&twisted };
                assert_eq!(centralizer_u(&lam), signed);
            }
        }
    }

    #[test]
    fn gl_minus_u_has_even_coefficients() {
        for n in 1..=8u32 {
            for lam in enumerate_partitions(n) {
                let diff = &centralizer_gl(&lam) - &centralizer_u(&lam);
                assert!(diff.has_even_coeffs(), "odd difference for {:?}", lam);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(1).len(), 1);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(10).len(), 42);
        // lexicographic order and uniqueness
        for n in 1..=10 {
            let list = enumerate_partitions(n);
            for w in list.windows(2) {
                assert!(w[0].parts() < w[1].parts());
            }
            assert!(list.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn stong_sums_hold() {
        for n in 1..=6 {
            assert!(stong_sum(n, CentralizerFlavor::Gl), "GL failed at n={}", n);
            assert!(stong_sum(n, CentralizerFlavor::U), "U failed at n={}", n);
        }
    }

    #[test]
    fn lambda_spec_membership() {
        assert!(LambdaSpec::Separable.contains(&p(&[1])));
        assert!(!LambdaSpec::Separable.contains(&p(&[2])));
        assert!(LambdaSpec::Cyclic.contains(&p(&[5])));
        assert!(!LambdaSpec::Cyclic.contains(&p(&[2, 1])));
        assert!(LambdaSpec::Semisimple.contains(&p(&[1, 1, 1])));
        assert!(!LambdaSpec::Semisimple.contains(&p(&[2, 1])));
        assert!(LambdaSpec::All.contains(&p(&[4, 2, 1])));
    }

    #[test]
    fn lambda_spec_enumeration() {
        assert_eq!(LambdaSpec::Separable.members_of_size(1), vec![p(&[1])]);
        assert!(LambdaSpec::Separable.members_of_size(3).is_empty());
        assert_eq!(LambdaSpec::Cyclic.members_of_size(3), vec![p(&[3])]);
        assert_eq!(LambdaSpec::Semisimple.members_of_size(3), vec![p(&[1, 1, 1])]);
        assert_eq!(LambdaSpec::All.members_of_size(4).len(), 5);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(LambdaSpec::parse("separable").unwrap(), LambdaSpec::Separable);
        assert_eq!(LambdaSpec::parse("all").unwrap(), LambdaSpec::All);
        let s = LambdaSpec::parse("set:[2,1];[1]").unwrap();
        assert!(s.contains(&p(&[2, 1])) && s.contains(&p(&[1])) && !s.contains(&p(&[2])));
        assert!(LambdaSpec::parse("sep").is_err());
        assert!(parse_partition("[3,1]").unwrap() == p(&[3, 1]));
        assert!(parse_partition("3,1").is_err());
        assert!(parse_partition("[0]").is_err());
    }

    #[test]
    fn spec_round_trips_through_display() {
        for spec in [
            LambdaSpec::All,
            LambdaSpec::Separable,
            LambdaSpec::Cyclic,
            LambdaSpec::Semisimple,
            LambdaSpec::explicit(vec![p(&[1]), p(&[2, 1])]),
        ] {
            let text = alloc::format!("{}", spec);
            assert_eq!(LambdaSpec::parse(&text).unwrap(), spec);
        }
    }
}
