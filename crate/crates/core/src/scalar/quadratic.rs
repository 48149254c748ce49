//! The coefficient field `Q(t)(sqrt D)` with its conjugation.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Laurent, RationalFunction};
use crate::error::{Error, Result};

/// `re + rad * sqrt(disc)`.
///
/// The discriminant only matters while `rad` is nonzero; values with
/// `rad = 0` carry `disc = 0` so that rational-function constants are
/// context free and compare equal regardless of session.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Quadratic<F> {
    re: RationalFunction<F>,
    rad: RationalFunction<F>,
    disc: F,
}

/// Exact value of a [`Quadratic`] after substituting a rational `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadValue<F> {
    pub re: F,
    pub rad: F,
    pub disc: F,
}

impl<F: Field> Quadratic<F> {
    pub fn new(re: RationalFunction<F>, rad: RationalFunction<F>, disc: F) -> Self {
        if rad.is_zero() || disc.is_zero() {
            Self { re, rad: RationalFunction::zero(), disc: F::zero() }
        } else {
            Self { re, rad, disc }
        }
    }

    pub fn from_ratfunc(re: RationalFunction<F>) -> Self {
        Self { re, rad: RationalFunction::zero(), disc: F::zero() }
    }

    pub fn from_base(c: F) -> Self {
        Self::from_ratfunc(RationalFunction::constant(c))
    }

    /// `sqrt(D)` for the given discriminant.
    pub fn sqrt_disc(disc: F) -> Self {
        Self::new(RationalFunction::zero(), RationalFunction::one(), disc)
    }

    pub fn re(&self) -> &RationalFunction<F> {
        &self.re
    }

    pub fn rad(&self) -> &RationalFunction<F> {
        &self.rad
    }

    pub fn disc(&self) -> &F {
        &self.disc
    }

    fn shared_disc(&self, other: &Self) -> F {
        if self.rad.is_zero() {
            other.disc.clone()
        } else {
            debug_assert!(other.rad.is_zero() || other.disc == self.disc, "mixing quadratic extensions with different discriminants");
            self.disc.clone()
        }
    }

    /// Constant in the base field, if any.
    pub fn as_base(&self) -> Option<F> {
        if self.rad.is_zero() {
            self.re.as_constant()
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        let rad = if self.disc.is_negative() { -&self.rad.conj() } else { self.rad.conj() };
        Self { re: self.re.conj(), rad, disc: self.disc.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.rad.is_zero() {
            return self.re.inv().map(Self::from_ratfunc);
        }
        let d = RationalFunction::constant(self.disc.clone());
        let norm = &(&self.re * &self.re) - &(&d * &(&self.rad * &self.rad));
        let n_inv = norm.inv()?;
        Some(Self::new(&self.re * &n_inv, -&(&self.rad * &n_inv), self.disc.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn mul_t_pow(&self, k: i32) -> Self {
        Self { re: self.re.mul_t_pow(k), rad: self.rad.mul_t_pow(k), disc: self.disc.clone() }
    }

    pub fn eval_at_t(&self, t0: &F) -> Result<QuadValue<F>> {
        Ok(QuadValue { re: self.re.eval(t0)?, rad: self.rad.eval(t0)?, disc: self.disc.clone() })
    }

    /// True if the text form needs no parentheses as a factor.
    pub fn is_single_term(&self) -> bool {
        if self.rad.is_zero() {
            self.re.is_single_term()
        } else {
            self.re.is_zero() && self.rad.is_single_term()
        }
    }
}

impl<F: Field> fmt::Display for Quadratic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            return write!(f, "{}", self.re);
        }
        let rad = if self.rad.is_one() {
            "sqrtD".to_string()
        } else if (-&self.rad).is_one() {
            "-sqrtD".to_string()
        } else if self.rad.is_single_term() {
            format!("{}*sqrtD", self.rad)
        } else {
            format!("({})*sqrtD", self.rad)
        };
        if self.re.is_zero() {
            return write!(f, "{rad}");
        }
        match rad.strip_prefix('-') {
            Some(rest) => write!(f, "{} - {}", self.re, rest),
            None => write!(f, "{} + {}", self.re, rad),
        }
    }
}

impl<F: Field> Zero for Quadratic<F> {
    fn zero() -> Self {
        Self::from_ratfunc(RationalFunction::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.rad.is_zero()
    }
}

impl<F: Field> One for Quadratic<F> {
    fn one() -> Self {
        Self::from_ratfunc(RationalFunction::one())
    }
}

impl<'a, F: Field> Add<&'a Quadratic<F>> for &'a Quadratic<F> {
    type Output = Quadratic<F>;
    fn add(self, rhs: Self) -> Quadratic<F> {
        let disc = self.shared_disc(rhs);
        Quadratic::new(&self.re + &rhs.re, &self.rad + &rhs.rad, disc)
    }
}

impl<'a, F: Field> Sub<&'a Quadratic<F>> for &'a Quadratic<F> {
    type Output = Quadratic<F>;
    fn sub(self, rhs: Self) -> Quadratic<F> {
        let disc = self.shared_disc(rhs);
        Quadratic::new(&self.re - &rhs.re, &self.rad - &rhs.rad, disc)
    }
}

impl<'a, F: Field> Mul<&'a Quadratic<F>> for &'a Quadratic<F> {
    type Output = Quadratic<F>;
    fn mul(self, rhs: Self) -> Quadratic<F> {
        if self.rad.is_zero() && rhs.rad.is_zero() {
            return Quadratic::from_ratfunc(&self.re * &rhs.re);
        }
        let disc = self.shared_disc(rhs);
        let mut re = &self.re * &rhs.re;
        if !self.rad.is_zero() && !rhs.rad.is_zero() {
            let d = RationalFunction::constant(disc.clone());
            re = &re + &(&d * &(&self.rad * &rhs.rad));
        }
        let rad = &(&self.re * &rhs.rad) + &(&self.rad * &rhs.re);
        Quadratic::new(re, rad, disc)
    }
}

impl<F: Field> Neg for &Quadratic<F> {
    type Output = Quadratic<F>;
    fn neg(self) -> Quadratic<F> {
        Quadratic { re: -&self.re, rad: -&self.rad, disc: self.disc.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr for Quadratic<F> {
            type Output = Quadratic<F>;
            fn $m(self, rhs: Self) -> Self { (&self).$m(&rhs) }
        }
        impl<'a, F: Field> $tr<&'a Quadratic<F>> for Quadratic<F> {
            type Output = Quadratic<F>;
            fn $m(self, rhs: &'a Self) -> Self { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Quadratic<F> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<'a, F: Field> AddAssign<&'a Quadratic<F>> for Quadratic<F> {
    fn add_assign(&mut self, rhs: &'a Self) {
        *self = &*self + rhs;
    }
}

impl<F: Field> Div for Quadratic<F> {
    type Output = Self;
    /// Panics on division by zero; use [`Quadratic::checked_div`] to check.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl<F: Field> super::Coeff for Quadratic<F> {
    fn conj(&self) -> Self {
        Quadratic::conj(self)
    }
    fn t_pow(k: i32) -> Self {
        Self::from_ratfunc(RationalFunction::t_pow(k))
    }
    fn from_i64(n: i64) -> Self {
        Self::from_base(F::from_i64(n).expect("integer conversion"))
    }
    fn from_laurent(l: &Laurent) -> Self {
        Self::from_ratfunc(RationalFunction::from_laurent(l))
    }
    fn inv(&self) -> Option<Self> {
        Quadratic::inv(self)
    }
    fn mul_t_pow(&self, k: i32) -> Self {
        Quadratic::mul_t_pow(self, k)
    }
    fn is_single_term(&self) -> bool {
        Quadratic::is_single_term(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Coeff;
    use crate::Rational;

    type S = Quadratic<Rational>;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_squares_to_disc() {
        let d = rat(5, 4);
        let r = S::sqrt_disc(d.clone());
        assert_eq!(&r * &r, S::from_base(d));
        assert_eq!((&r * &r).rad(), &RationalFunction::zero());
    }

    #[test]
    fn conj_of_imaginary_radical() {
        let r = S::sqrt_disc(rat(-1, 1));
        assert_eq!(r.conj(), -&r);
        let real = S::sqrt_disc(rat(2, 1));
        assert_eq!(real.conj(), real);
        let x = &S::t_pow(1) * &r;
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn inverse_through_norm() {
        let r = S::sqrt_disc(rat(5, 4));
        let x = &S::from_i64(3) + &(&r * &S::t_pow(1));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, S::one());
        assert_eq!(S::zero().inv(), None);
        assert_eq!(S::one().checked_div(&S::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        let r = S::sqrt_disc(rat(-1, 1));
        assert_eq!(r.to_string(), "sqrtD");
        let x = &S::t_pow(1) - &(&r * &S::t_pow(1));
        assert_eq!(x.to_string(), "t - t*sqrtD");
    }
}
