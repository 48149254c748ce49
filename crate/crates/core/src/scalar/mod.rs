//! Exact coefficient arithmetic.
//!
//! Everything is built over a field `F` of rational numbers (any
//! `num_traits` field works; the crate root fixes `F = BigRational`):
//! polynomials in `t = q^{1/2}`, reduced rational functions in `t`, and the
//! quadratic extension by `sqrt(D)` in which the parameters `chi_pm` live.

mod laurent;
mod poly;
mod quadratic;
mod ratfunc;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num, One, Signed, Zero};

pub use laurent::Laurent;
pub use poly::Polynomial;
pub use quadratic::{QuadValue, Quadratic};
pub use ratfunc::RationalFunction;

use crate::error::{Error, Result};

/// Exact base field for coefficients.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + Send + Sync + 'static {}

impl<T> Field for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + Send + Sync + 'static {}

/// Coefficient field of the quantum group algebra: a field containing
/// `t = q^{1/2}` and carrying the conjugation used by `*` (with `|q| = 1`).
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + 'static
{
    fn conj(&self) -> Self;

    /// `t^k`.
    fn t_pow(k: i32) -> Self;

    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Option<Self>;

    fn from_laurent(l: &Laurent) -> Self {
        l.terms().iter().fold(Self::zero(), |acc, &(e, c)| acc + &(Self::from_i64(c) * &Self::t_pow(e)))
    }

    fn mul_t_pow(&self, k: i32) -> Self {
        self.clone() * &Self::t_pow(k)
    }

    /// True if the printed form is a single signed factor.
    fn is_single_term(&self) -> bool {
        false
    }

    /// `q^k = t^{2k}`.
    fn q_pow(k: i32) -> Self {
        Self::t_pow(2 * k)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * &inv)
    }

    fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self)
    }
}

impl<F: Field> Coeff for RationalFunction<F> {
    fn conj(&self) -> Self {
        RationalFunction::conj(self)
    }
    fn t_pow(k: i32) -> Self {
        RationalFunction::t_pow(k)
    }
    fn from_i64(n: i64) -> Self {
        RationalFunction::constant(F::from_i64(n).expect("integer conversion"))
    }
    fn from_laurent(l: &Laurent) -> Self {
        RationalFunction::from_laurent(l)
    }
    fn inv(&self) -> Option<Self> {
        RationalFunction::inv(self)
    }
    fn mul_t_pow(&self, k: i32) -> Self {
        RationalFunction::mul_t_pow(self, k)
    }
    fn is_single_term(&self) -> bool {
        RationalFunction::is_single_term(self)
    }
}

/// The q-number `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, as the Laurent
/// polynomial `sum_{k=0}^{|n|-1} q^{|n|-1-2k}` with sign of `n`.
pub fn q_number<C: Coeff>(n: i64) -> C {
    let m = n.unsigned_abs() as i32;
    let mut l = Laurent::zero();
    for k in 0..m {
        l = &l + &Laurent::q_pow(m - 1 - 2 * k);
    }
    let v = C::from_laurent(&l);
    if n < 0 {
        -v
    } else {
        v
    }
}

/// `[n]_q! = prod_{k=1}^{n} [k]_q`, with `[0]_q! = 1`.
pub fn q_factorial<C: Coeff>(n: u32) -> C {
    (1..=n as i64).fold(C::one(), |acc, k| acc * &q_number::<C>(k))
}

/// `q - q^{-1}`.
pub fn q_minus_qinv<C: Coeff>() -> C {
    C::q_pow(1) - C::q_pow(-1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{RatFunc, Rational, Scalar};

    #[test]
    fn q_number_small_values() {
        assert_eq!(q_number::<Scalar>(0), Scalar::zero());
        assert_eq!(q_number::<Scalar>(1), Scalar::one());
        assert_eq!(q_number::<Scalar>(2), Scalar::q_pow(1) + &Scalar::q_pow(-1));
        assert_eq!(q_number::<Scalar>(-3), -q_number::<Scalar>(3));
    }

    #[test]
    fn q_number_matches_defining_quotient() {
        // oracle: divide (q^n - q^{-n}) by (q - q^{-1}) with the GCD machinery
        for n in -12i64..=12 {
            let lhs = q_number::<RatFunc>(n) * &q_minus_qinv::<RatFunc>();
            let rhs = RatFunc::q_pow(n as i32) - RatFunc::q_pow(-n as i32);
            assert_eq!(lhs, rhs, "n = {n}");
            let quotient = rhs.checked_div(&q_minus_qinv()).unwrap();
            assert_eq!(quotient, q_number::<RatFunc>(n));
        }
    }

    #[test]
    fn q_factorial_classical_limit() {
        let f = q_factorial::<Scalar>(4);
        let v = f.eval_at_t(&Rational::one()).unwrap();
        assert_eq!(v.re, Rational::from_integer(24.into()));
        assert_eq!(q_factorial::<Scalar>(0), Scalar::one());
    }
}
