//! Sparse multivariate polynomials over `Z` in `x1, x2, …`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector with trailing zeros removed, so `x1` is `[1]` in any number
/// of variables. Lexicographic order on these agrees with lexicographic order
/// on zero-padded vectors, with `x1` most significant.
pub type Exponents = Vec<u32>;

fn add_exponents(a: &[u32], b: &[u32]) -> Exponents {
    (0..a.len().max(b.len()))
        .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
        .collect()
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), BigInt::one())
    }

    pub fn monomial(exponents: Exponents, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, coeff.into());
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    /// `x1 + x2 + … + xm`.
    pub fn elementary_linear(m: usize) -> Self {
        (1..=m).fold(Self::zero(), |acc, i| acc + Self::var(i))
    }

    /// `x1^{N-1} x2^{N-2} ⋯ x_{N-1}`.
    pub fn staircase(n: usize) -> Self {
        Self::monomial((0..n).map(|i| (n - 1 - i) as u32).collect(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        let key = trim(exponents.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponents: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(exponents);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).all_equal_value().is_ok()
            || self.is_zero()
    }

    /// Number of variables actually used.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Lexicographically smallest exponent vector and its coefficient.
    pub fn lex_min_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }
        out
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            let (a, b) = (e[i - 1], e[i]);
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
            let coeff = if sign == 1 { c.clone() } else { -c.clone() };
            // x_i^lo x_{i+1}^lo (x_i^{d-1} + x_i^{d-2} x_{i+1} + … + x_{i+1}^{d-1})
            let d = hi - lo;
            for k in 0..d {
                let mut f = e.clone();
                f[i - 1] = lo + d - 1 - k;
                f[i] = lo + k;
                out.add_term(f, coeff.clone());
            }
        }
        out
    }

    /// Evaluates at integer points; missing variables are zero.
    pub fn eval(&self, point: &[i64]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().enumerate().fold(c.clone(), |acc, (k, &a)| {
                    let x = BigInt::from(point.get(k).copied().unwrap_or(0));
                    acc * num_traits::pow(x, a as usize)
                })
            })
            .sum()
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        self + (-rhs)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(add_exponents(a, b), c * d);
            }
        }
        out
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    /// Terms from lexicographically largest to smallest, e.g. `3*x1^2*x2 + x3 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| {
                    if a == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{a}", k + 1)
                    }
                })
                .collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{mag}*{}", vars.join("*")),
            };
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::var(i)
    }

    // ∂_i by its definition: (f - s_i f) divided by x_i - x_{i+1}, with the
    // quotient checked by multiplying back.
    fn check_by_definition(f: &IntPolynomial, i: usize) {
        let q = f.divided_difference(i);
        let lhs = f.clone() - f.swap_vars(i);
        assert_eq!(&q * &(x(i) - x(i + 1)), lhs);
    }

    #[test]
    fn arithmetic() {
        let p = x(1) + x(2);
        let sq = &p * &p;
        assert_eq!(sq.coeff(&[2]), BigInt::from(1));
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coeff(&[1, 1, 0, 0]), BigInt::from(2));
        assert!((p.clone() - p).is_zero());
        assert_eq!(IntPolynomial::staircase(3), IntPolynomial::monomial(vec![2, 1], 1));
    }

    #[test]
    fn display() {
        let p = IntPolynomial::monomial(vec![2, 1], 3) + x(3) - IntPolynomial::one();
        assert_eq!(p.to_string(), "3*x1^2*x2 + x3 - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!((-x(2)).to_string(), "-x2");
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(1).divided_difference(1), IntPolynomial::one());
        assert_eq!(x(2).divided_difference(1), -IntPolynomial::one());
        assert!(x(3).divided_difference(1).is_zero());
        let f = IntPolynomial::monomial(vec![3, 1], 1);
        assert_eq!(
            f.divided_difference(1),
            IntPolynomial::monomial(vec![2, 1], 1) + IntPolynomial::monomial(vec![1, 2], 1)
        );
        check_by_definition(&f, 1);
        check_by_definition(&IntPolynomial::monomial(vec![0, 4, 1], -2), 2);
    }

    #[test]
    fn lex_min() {
        let p = x(1) + x(2);
        assert_eq!(p.lex_min_term().unwrap().0, &vec![0, 1]);
        let p = IntPolynomial::monomial(vec![1, 1], 1) + IntPolynomial::monomial(vec![1], 1);
        assert_eq!(p.lex_min_term().unwrap().0, &vec![1]);
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 0..4), -3i64..=3), 0..6)
            .prop_map(|terms| {
                terms.into_iter().fold(IntPolynomial::zero(), |acc, (e, c)| {
                    acc + IntPolynomial::monomial(e, c)
                })
            })
    }

    proptest! {
        #[test]
        fn divided_difference_is_the_quotient(f in arb_poly(), i in 1usize..4) {
            check_by_definition(&f, i);
        }

        #[test]
        fn evaluation_is_a_ring_map(f in arb_poly(), g in arb_poly(), pt in proptest::collection::vec(-3i64..=3, 4)) {
            prop_assert_eq!((&f * &g).eval(&pt), f.eval(&pt) * g.eval(&pt));
            prop_assert_eq!((f.clone() + g.clone()).eval(&pt), f.eval(&pt) + g.eval(&pt));
        }

        #[test]
        fn leibniz_rule(f in arb_poly(), g in arb_poly(), i in 1usize..4) {
            // ∂(fg) = ∂(f) g + s_i(f) ∂(g)
            let lhs = (&f * &g).divided_difference(i);
            let rhs = &f.divided_difference(i) * &g + &f.swap_vars(i) * &g.divided_difference(i);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
