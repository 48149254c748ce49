//! Rational functions in `t` with a unique reduced form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Laurent, Polynomial};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let lead = den.lead().expect("zero denominator").clone();
        let (mut num, mut den) = if lead.is_one() {
            (num, den)
        } else {
            let inv = F::one() / lead;
            (num.scale(&inv), den.scale(&inv))
        };
        if den.is_one() {
            return Self { num, den };
        }
        if den.is_monomial() {
            let k = den.ord().unwrap().min(num.ord().unwrap());
            if k > 0 {
                num = num.shift_down(k);
                den = den.shift_down(k);
            }
            return Self { num, den };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_rem(&g).0;
            den = den.div_rem(&g).0;
        }
        Self { num, den }
    }

    /// For coprime `num`, `den`: only makes `den` monic.
    fn normalized(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        let lead = den.lead().expect("zero denominator").clone();
        if lead.is_one() {
            return Self { num, den };
        }
        let inv = F::one() / lead;
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn t_pow(k: i32) -> Self {
        Self::constant(F::one()).mul_t_pow(k)
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        let Some(&(lo, _)) = l.terms().first() else {
            return Self::zero();
        };
        let hi = l.terms().last().unwrap().0;
        let mut coeffs = vec![F::zero(); (hi - lo) as usize + 1];
        for &(e, c) in l.terms() {
            coeffs[(e - lo) as usize] = F::from_i64(c).expect("integer conversion");
        }
        Self::constant(F::one()).mul_t_pow(lo).mul_poly(Polynomial::from_coeffs(coeffs))
    }

    fn mul_poly(self, p: Polynomial<F>) -> Self {
        Self::reduce(&self.num * &p, self.den)
    }

    /// Multiplies by `t^k`.
    pub fn mul_t_pow(&self, k: i32) -> Self {
        if self.num.is_zero() || k == 0 {
            return self.clone();
        }
        let k_abs = k.unsigned_abs() as usize;
        if k > 0 {
            // cancel against t-factors of the denominator first
            let cancel = self.den.ord().unwrap().min(k_abs);
            Self { num: self.num.shift_up(k_abs - cancel), den: self.den.shift_down(cancel) }
        } else {
            let cancel = self.num.ord().unwrap().min(k_abs);
            Self { num: self.num.shift_down(cancel), den: self.den.shift_up(k_abs - cancel) }
        }
    }

    pub fn numer(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial<F> {
        &self.den
    }

    /// True when the denominator is a power of `t`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    /// `t -> 1/t`.
    pub fn conj(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let n = self.num.degree().unwrap();
        let m = self.den.degree().unwrap();
        // num(1/t)/den(1/t) = t^(m-n) rev(num) / rev(den)
        Self::reduce(self.num.reversed(n), self.den.reversed(m)).mul_t_pow(m as i32 - n as i32)
    }

    pub fn eval(&self, t0: &F) -> Result<F> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(t0.to_string()));
        }
        Ok(self.num.eval(t0) / d)
    }

    /// Constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_zero() {
            Some(F::zero())
        } else if self.den.is_one() && self.num.degree() == Some(0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// True if the text form is a single signed term such as `-3/2*t^-2`.
    pub fn is_single_term(&self) -> bool {
        self.num.is_zero() || (self.den.is_monomial() && self.num.is_monomial())
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() {
            self.num.fmt_laurent(self.den.ord().unwrap(), f)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<F: Field> Zero for RationalFunction<F> {
    fn zero() -> Self {
        Self { num: Polynomial::zero(), den: Polynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for RationalFunction<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<'a, F: Field> Add<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: Self) -> RationalFunction<F> {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            let a = self.den.ord().unwrap();
            let b = rhs.den.ord().unwrap();
            let k = a.max(b);
            let num = &self.num.shift_up(k - a) + &rhs.num.shift_up(k - b);
            return RationalFunction::reduce(num, Polynomial::monomial(F::one(), k));
        }
        // over lcm(den, den'), so only gcd(num, g) can remain
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RationalFunction::reduce(num, &self.den * &rhs.den);
        }
        let d1 = self.den.div_rem(&g).0;
        let d2 = rhs.den.div_rem(&g).0;
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() { (num, g) } else { (num.div_rem(&h).0, g.div_rem(&h).0) };
        RationalFunction::normalized(num, &(&d1 * &d2) * &g)
    }
}

fn cancel<F: Field>(num: &Polynomial<F>, den: &Polynomial<F>) -> (Polynomial<F>, Polynomial<F>) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    let g = num.gcd(den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (num.div_rem(&g).0, den.div_rem(&g).0)
    }
}

impl<'a, F: Field> Mul<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: Self) -> RationalFunction<F> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // both inputs are reduced, so cross-cancelling leaves a reduced product
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RationalFunction::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a, F: Field> Sub<&'a RationalFunction<F>> for &'a RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: Self) -> RationalFunction<F> {
        self + &(-rhs)
    }
}

// Owned forwarding, needed by the `num_traits` and `Coeff` bounds.
macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr for RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $m(self, rhs: Self) -> Self { (&self).$m(&rhs) }
        }
        impl<'a, F: Field> $tr<&'a RationalFunction<F>> for RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $m(self, rhs: &'a Self) -> Self { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for RationalFunction<F> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<'a, F: Field> AddAssign<&'a RationalFunction<F>> for RationalFunction<F> {
    fn add_assign(&mut self, rhs: &'a Self) {
        *self = &*self + rhs;
    }
}

impl<F: Field> Div for RationalFunction<F> {
    type Output = Self;
    /// Panics on division by zero; use [`RationalFunction::inv`] to check.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        &self * &rhs.inv().expect("division by zero")
    }
}
