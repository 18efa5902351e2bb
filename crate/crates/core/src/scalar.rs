//! Coefficient traits shared by the polynomial, cyclotomic and Smith normal
//! form code.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

/// Exact coefficient domain: integers or rationals of any width.
pub trait Coefficient: Clone + Debug + Display + Hash + Eq + Num + Signed {}

impl<T> Coefficient for T where T: Clone + Debug + Display + Hash + Eq + Num + Signed {}

/// Marker for coefficient domains in which every nonzero element is invertible.
pub trait Field: Coefficient {}

impl<T> Field for Ratio<T> where T: Clone + Debug + Display + Hash + Integer + Signed {}

/// A principal ideal domain with a Euclidean division, as needed by Smith
/// normal form.
pub trait EuclideanDomain: Clone + Debug + Display + PartialEq + Zero + One {
    /// Euclidean size. `div_rem` must produce a remainder that is zero or of
    /// strictly smaller norm than the divisor.
    type Norm: Ord;

    fn norm(&self) -> Self::Norm;

    fn div_rem_euclid(&self, other: &Self) -> (Self, Self);

    /// Canonical associate: positive integers, monic polynomials, 1 in a field.
    fn normalize(&self) -> Self;

    fn is_unit(&self) -> bool;

    /// Symbol used when printing modules over this ring ("Z", "Q", "R").
    fn ring_symbol() -> &'static str;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem_euclid(self).1.is_zero()
    }
}

impl EuclideanDomain for BigInt {
    type Norm = BigUint;

    fn norm(&self) -> BigUint {
        self.magnitude().clone()
    }

    fn div_rem_euclid(&self, other: &Self) -> (Self, Self) {
        self.div_rem(other)
    }

    fn normalize(&self) -> Self {
        self.abs()
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn ring_symbol() -> &'static str {
        "Z"
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

impl<T> EuclideanDomain for Ratio<T>
where
    T: Clone + Debug + Display + Hash + Integer + Signed,
{
    type Norm = u8;

    fn norm(&self) -> u8 {
        0
    }

    fn div_rem_euclid(&self, other: &Self) -> (Self, Self) {
        (self.clone() / other.clone(), Self::zero())
    }

    fn normalize(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            Self::one()
        }
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn ring_symbol() -> &'static str {
        "Q"
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
    use num_rational::BigRational;

    #[test]
    fn integer_division_is_euclidean() {
        let a = BigInt::from(-17);
        let b = BigInt::from(5);
        let (q, r) = a.div_rem_euclid(&b);
        assert_eq!(q * &b + &r, a);
        assert!(r.norm() < b.norm());
        assert!(EuclideanDomain::divides(&BigInt::from(3), &BigInt::from(12)));
        assert!(!EuclideanDomain::divides(&BigInt::from(5), &BigInt::from(12)));
        assert_eq!(BigInt::from(-4).normalize(), BigInt::from(4));
    }

    #[test]
    fn rational_field_units() {
        let x = BigRational::new(3.into(), 7.into());
        assert!(x.is_unit());
        assert_eq!(x.normalize(), BigRational::one());
        assert!(!BigRational::zero().is_unit());
    }
}
