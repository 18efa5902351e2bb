//! Exact arithmetic in `Q(ζ_L)` using the power basis `1, ζ, …, ζ^(φ(L)-1)`.
//!
//! Elements are dense coefficient vectors reduced modulo the `L`-th
//! cyclotomic polynomial. Because `Φ_L` is monic with integer coefficients,
//! reduction keeps integer vectors integral, so `i64` coefficients suffice for
//! cyclotomic integers such as `2cos(π/m)`.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::FromPrimitive;

use crate::scalar::Coefficient;

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    fn go(n: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1 divided by Φ_d for every proper divisor d
        let mut num = vec![0i64; n + 1];
        num[0] = -1;
        num[n] = 1;
        for d in (1..n).filter(|d| n % d == 0) {
            let den = go(d, memo);
            num = divide_monic(&num, &den);
        }
        memo.insert(n, num.clone());
        num
    }
    assert!(n >= 1, "cyclotomic level must be positive");
    go(n, &mut HashMap::new())
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![0; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + den.len() - 1];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Element of a cyclotomic field; only meaningful together with the
/// [`CyclotomicField`] that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber<T> {
    pub coeffs: Vec<T>,
}

#[derive(Clone, Debug)]
pub struct CyclotomicField {
    level: usize,
    degree: usize,
    /// `powers[k]` is `ζ^k` reduced, for `0 <= k < level`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(level: usize) -> Self {
        let modulus = cyclotomic_polynomial(level);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(level);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..level {
            powers.push(cur.clone());
            // multiply by ζ, then substitute ζ^degree = -Σ modulus[i] ζ^i
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            for i in 0..degree {
                cur[i] -= top * modulus[i];
            }
        }
        CyclotomicField { level, degree, powers }
    }

    /// Smallest field containing `2cos(π/m)` for every label in `labels`.
    pub fn for_labels(labels: impl IntoIterator<Item = u32>) -> Self {
        let level = labels.into_iter().fold(1usize, |l, m| l.lcm(&(2 * m as usize)));
        Self::new(level)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn lift<T: Coefficient + FromPrimitive>(v: &[i64]) -> Vec<T> {
        v.iter().map(|&x| T::from_i64(x).expect("coefficient fits target type")).collect()
    }

    pub fn zero<T: Coefficient>(&self) -> CyclotomicNumber<T> {
        CyclotomicNumber { coeffs: vec![T::zero(); self.degree] }
    }

    pub fn from_integer<T: Coefficient + FromPrimitive>(&self, c: i64) -> CyclotomicNumber<T> {
        let mut z = self.zero::<T>();
        z.coeffs[0] = T::from_i64(c).expect("integer fits target type");
        z
    }

    /// `ζ^e` for any integer exponent.
    pub fn zeta_power<T: Coefficient + FromPrimitive>(&self, e: i64) -> CyclotomicNumber<T> {
        let k = e.rem_euclid(self.level as i64) as usize;
        CyclotomicNumber { coeffs: Self::lift(&self.powers[k]) }
    }

    /// `2cos(π/m) = ζ_{2m} + ζ_{2m}^{-1}`; requires `2m | level`.
    pub fn two_cos_pi_over<T: Coefficient + FromPrimitive>(&self, m: u32) -> CyclotomicNumber<T> {
        let two_m = 2 * m as usize;
        assert!(self.level % two_m == 0, "2cos(pi/{m}) is not in the field of level {}", self.level);
        let step = (self.level / two_m) as i64;
        self.add(&self.zeta_power(step), &self.zeta_power(-step))
    }

    pub fn add<T: Coefficient>(&self, a: &CyclotomicNumber<T>, b: &CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        CyclotomicNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() + y.clone()).collect() }
    }

    pub fn sub<T: Coefficient>(&self, a: &CyclotomicNumber<T>, b: &CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        CyclotomicNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() - y.clone()).collect() }
    }

    pub fn neg<T: Coefficient>(&self, a: &CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        CyclotomicNumber { coeffs: a.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul<T: Coefficient + FromPrimitive>(
        &self,
        a: &CyclotomicNumber<T>,
        b: &CyclotomicNumber<T>,
    ) -> CyclotomicNumber<T> {
        let mut out = vec![T::zero(); self.degree];
        self.mul_add_into(&a.coeffs, &b.coeffs, &mut out);
        CyclotomicNumber { coeffs: out }
    }

    /// `out += a * b` on raw coefficient slices.
    pub fn mul_add_into<T: Coefficient + FromPrimitive>(&self, a: &[T], b: &[T], out: &mut [T]) {
        let d = self.degree;
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let prod = x.clone() * y.clone();
                let k = i + j;
                if k < d {
                    out[k] = out[k].clone() + prod;
                } else {
                    for (o, &r) in out.iter_mut().zip(&self.powers[k % self.level]) {
                        if r != 0 {
                            *o = o.clone() + prod.clone() * T::from_i64(r).expect("small integer");
                        }
                    }
                }
            }
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate<T: Coefficient + FromPrimitive>(&self, a: &CyclotomicNumber<T>) -> CyclotomicNumber<T> {
        let mut out = self.zero::<T>();
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z: CyclotomicNumber<T> = self.zeta_power(-(k as i64));
            for (o, zc) in out.coeffs.iter_mut().zip(z.coeffs) {
                *o = o.clone() + c.clone() * zc;
            }
        }
        out
    }

    pub fn is_zero<T: Coefficient>(&self, a: &CyclotomicNumber<T>) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }
}
