//! Univariate Laurent polynomials in `q` with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, EuclideanDomain, Field};

/// `Σ coeffs[i] q^(low + i)`, trimmed so that the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients and
/// `low == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    low: i64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> LaurentPoly<T> {
    pub fn from_coeffs(low: i64, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    pub fn monomial(c: T, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient; `low - 1` for zero.
    pub fn high_exponent(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> T {
        let i = exponent - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            T::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Exponent span `high - low`; zero for constants and monomials.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map_coeffs<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }

    /// Evaluate at `x`. Negative exponents use `T::one() / x^k`, so over the
    /// integers only units are meaningful there.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc * pow_signed(x, self.low)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self / divisor` when the division is exact.
    ///
    /// Long division is carried out on the coefficient vectors after shifting
    /// both operands to lowest exponent zero; at each step the leading
    /// coefficient must be divisible by that of `divisor`.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + divisor.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if !(top.clone() % lead.clone()).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = top / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(self.low - divisor.low, quot))
    }
}

fn pow_signed<T: Coefficient>(x: &T, e: i64) -> T {
    let mut acc = T::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * x.clone();
    }
    if e < 0 {
        T::one() / acc
    } else {
        acc
    }
}

impl<T: Field> LaurentPoly<T> {
    /// Divide by the leading coefficient and shift to lowest exponent zero.
    pub fn monic_normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        Self::from_coeffs(0, self.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
    }
}

impl<T: Coefficient> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> One for LaurentPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<'a, T: Coefficient> Add<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exponent().max(rhs.high_exponent());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl<'a, T: Coefficient> Sub<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Coefficient> Mul<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl<T: Coefficient> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

/// Renders in ascending exponent order, e.g. `q^-1 + 2 + q` or `1 - 3*q^2`.
impl<T: Coefficient> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Field> EuclideanDomain for LaurentPoly<T> {
    type Norm = usize;

    fn norm(&self) -> usize {
        self.span()
    }

    fn div_rem_euclid(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "Euclidean division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let a = &self.coeffs;
        let b = &other.coeffs;
        if a.len() < b.len() {
            return (Self::zero(), self.clone());
        }
        let lead = other.leading_coeff();
        let mut rem = a.clone();
        let qlen = a.len() - b.len() + 1;
        let mut quot = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + b.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let c = top / lead.clone();
            for (j, d) in b.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        // self = q^la * A, other = q^lb * B, A = B*Q + R
        let quotient = Self::from_coeffs(self.low - other.low, quot);
        let remainder = Self::from_coeffs(self.low, rem);
        (quotient, remainder)
    }

    fn normalize(&self) -> Self {
        self.monic_normalized()
    }

    fn is_unit(&self) -> bool {
        self.is_monomial()
    }

    fn ring_symbol() -> &'static str {
        "R"
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Z = LaurentPoly<BigInt>;
    type Q = LaurentPoly<BigRational>;

    fn z(low: i64, c: &[i64]) -> Z {
        Z::from_coeffs(low, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn qp(low: i64, c: &[i64]) -> Q {
        Q::from_coeffs(low, c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    #[test]
    fn trimming_is_canonical() {
        let p = z(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(p.low_exponent(), 0);
        assert_eq!(p.coeffs().len(), 2);
        assert!(z(5, &[0, 0]).is_zero());
        assert_eq!(z(5, &[0]), Z::zero());
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(z(-1, &[1, 2, 1]).to_string(), "q^-1 + 2 + q");
        assert_eq!(z(0, &[1, 0, -3]).to_string(), "1 - 3*q^2");
        assert_eq!(z(1, &[-1]).to_string(), "-q");
        assert_eq!(Z::zero().to_string(), "0");
        let half = Q::monomial(BigRational::new(1.into(), 2.into()), 2);
        assert_eq!(half.to_string(), "1/2*q^2");
    }

    #[test]
    fn exact_division_examples() {
        // (q^2 - 1)/(q - 1) = q + 1
        let a = z(0, &[-1, 0, 1]);
        let b = z(0, &[-1, 1]);
        assert_eq!(a.exact_divide(&b).unwrap(), z(0, &[1, 1]));
        assert_eq!(a.exact_divide(&a).unwrap(), Z::one());
        assert_eq!(z(0, &[1, 0, 1]).exact_divide(&b), Err(Error::InexactDivision));
        // Laurent shifts
        assert_eq!(z(-3, &[2]).exact_divide(&z(2, &[2])).unwrap(), z(-5, &[1]));
    }

    #[test]
    fn euclidean_division_on_laurent_ring() {
        let a = qp(-1, &[1, 3, 0, 2]);
        let b = qp(2, &[1, 1]);
        let (quot, rem) = a.div_rem_euclid(&b);
        assert_eq!(&(&b * &quot) + &rem, a);
        assert!(rem.is_zero() || rem.norm() < b.norm());
        assert!(qp(4, &[7]).is_unit());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            qp(3, &[2, 4]).normalize(),
            Q::from_coeffs(0, vec![half, BigRational::one()])
        );
    }

    #[test]
    fn evaluation_at_units() {
        let p = z(-1, &[1, 2, 1]);
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(4));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(0));
        assert_eq!(z(-1, &[1, 0, 3]).eval(&BigInt::from(-1)), BigInt::from(-4));
    }

    fn arb_poly() -> impl Strategy<Value = Q> {
        (-3i64..3, prop::collection::vec(-5i64..6, 0..5)).prop_map(|(low, c)| qp(low, &c))
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let two = BigRational::from_integer(2.into());
            let expr = &(&a * &b) - &c;
            prop_assert_eq!(expr.eval(&two), a.eval(&two) * b.eval(&two) - c.eval(&two));
            let sum = &a + &b;
            prop_assert_eq!(sum.eval(&two), a.eval(&two) + b.eval(&two));
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
        }
    }
}
