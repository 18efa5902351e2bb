//! q-integers, q-factorials and Gaussian binomials.

use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

/// `[k] = 1 + q + … + q^(k-1)`.
pub fn q_integer<T: Coefficient>(k: i64) -> Result<LaurentPoly<T>> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("q-integer [{k}] needs k >= 1")));
    }
    Ok(LaurentPoly::from_coeffs(0, vec![T::one(); k as usize]))
}

/// `[k]! = [1][2]…[k]`, with `[0]! = 1`.
pub fn q_factorial<T: Coefficient>(k: i64) -> Result<LaurentPoly<T>> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!("q-factorial [{k}]! needs k >= 0")));
    }
    (1..=k).try_fold(LaurentPoly::one(), |acc, i| Ok(&acc * &q_integer(i)?))
}

/// `[k]! / ([h]! [k-h]!)`.
pub fn q_binomial<T: Coefficient>(k: i64, h: i64) -> Result<LaurentPoly<T>> {
    if h < 0 || k < h {
        return Err(Error::InvalidArgument(format!("q-binomial [{k} over {h}] out of range")));
    }
    let den = &q_factorial::<T>(h)? * &q_factorial::<T>(k - h)?;
    q_factorial::<T>(k)?.exact_divide(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::binomial;
    use proptest::prelude::*;

    type Z = LaurentPoly<BigInt>;

    fn z(c: &[i64]) -> Z {
        Z::from_coeffs(0, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer::<BigInt>(1).unwrap(), z(&[1]));
        assert_eq!(q_integer::<BigInt>(2).unwrap(), z(&[1, 1]));
        assert_eq!(q_integer::<BigInt>(3).unwrap(), z(&[1, 1, 1]));
        assert!(q_integer::<BigInt>(0).is_err());
        assert!(q_integer::<BigInt>(-2).is_err());
    }

    #[test]
    fn q_factorial_three() {
        assert_eq!(q_factorial::<BigInt>(3).unwrap(), &z(&[1, 1]) * &z(&[1, 1, 1]));
        assert_eq!(q_factorial::<BigInt>(0).unwrap(), z(&[1]));
        assert!(q_factorial::<BigInt>(-1).is_err());
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial::<BigInt>(2, 1).unwrap(), z(&[1, 1]));
        // [4]!/([2]![2]!) expanded by hand
        assert_eq!(q_binomial::<BigInt>(4, 2).unwrap(), z(&[1, 1, 2, 1, 1]));
        assert!(q_binomial::<BigInt>(2, 3).is_err());
        assert!(q_binomial::<BigInt>(2, -1).is_err());
    }

    #[test]
    fn factorial_quotient() {
        let a = q_factorial::<BigInt>(3).unwrap();
        let b = q_factorial::<BigInt>(2).unwrap();
        assert_eq!(a.exact_divide(&b).unwrap(), q_integer(3).unwrap());
    }

    proptest! {
        #[test]
        fn q_binomial_at_one_is_binomial(k in 0i64..12, h in 0i64..12) {
            prop_assume!(h <= k);
            let p = q_binomial::<BigInt>(k, h).unwrap();
            prop_assert_eq!(p.eval(&BigInt::one()), BigInt::from(binomial(k, h)));
        }
    }
}
