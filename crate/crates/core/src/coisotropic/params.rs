use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Coeff, Field, Quadratic};
use crate::Rational;

/// Which of the three families the parameters fall in, by the sign of
/// `D = mu^2 - nu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    /// `D > 0`.
    Rplus,
    /// `D < 0`.
    S1,
    /// `D = 0`.
    Special,
    /// Parameters given directly in the coefficient field.
    General,
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamKind::Rplus => "rplus",
            ParamKind::S1 => "s1",
            ParamKind::Special => "special",
            ParamKind::General => "general",
        })
    }
}

/// Coideal parameters `(mu, nu)` together with the roots `chi_pm` of
/// `chi^2 - 2 mu chi + nu`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<C> {
    pub mu: C,
    pub nu: C,
    pub chi_plus: C,
    pub chi_minus: C,
    pub kind: ParamKind,
    pub name: String,
}

impl<C: Coeff> Params<C> {
    /// Checks `chi_+ + chi_- = 2 mu`, `chi_+ chi_- = nu` and reality of
    /// `mu`, `nu`.
    pub fn new(mu: C, nu: C, chi_plus: C, chi_minus: C) -> Result<Self> {
        let p = Self { mu, nu, chi_plus, chi_minus, kind: ParamKind::General, name: "general".into() };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let two_mu = self.mu.clone() + &self.mu;
        if self.chi_plus.clone() + &self.chi_minus != two_mu {
            return Err(Error::Domain("chi_+ + chi_- must equal 2 mu".into()));
        }
        if self.chi_plus.clone() * &self.chi_minus != self.nu {
            return Err(Error::Domain("chi_+ chi_- must equal nu".into()));
        }
        if self.mu.conj() != self.mu || self.nu.conj() != self.nu {
            return Err(Error::Domain("mu and nu must be real".into()));
        }
        Ok(())
    }

    /// `Θ = nu - mu^2`.
    pub fn theta(&self) -> C {
        self.nu.clone() - self.mu.clone() * &self.mu
    }

    pub fn is_special(&self) -> bool {
        self.chi_plus == self.chi_minus
    }

    /// `mu_n = (q^n chi_+ + q^{-n} chi_-) / 2`.
    pub fn shifted_mu(&self, n: i64) -> C {
        let n = n as i32;
        let half = C::from_i64(2).inv().expect("2 is invertible");
        (self.chi_plus.clone() * &C::q_pow(n) + &(self.chi_minus.clone() * &C::q_pow(-n))) * &half
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(x.numer())?, root(x.denom())?))
}

impl<F: Field> Params<Quadratic<F>> {
    pub fn discriminant(&self) -> Quadratic<F> {
        self.mu.clone() * &self.mu - self.nu.clone()
    }
}

impl Params<Quadratic<Rational>> {
    /// Parameters from rational `(mu, nu)`. `sqrt(D)` is rational when `D`
    /// is a perfect square and otherwise adjoined formally.
    pub fn from_rationals(mu: Rational, nu: Rational) -> Self {
        let d = &mu * &mu - &nu;
        let kind = if d.is_zero() {
            ParamKind::Special
        } else if d.is_positive() {
            ParamKind::Rplus
        } else {
            ParamKind::S1
        };
        let sqrt_d = match rational_sqrt(&d) {
            Some(r) => Quadratic::from_base(r),
            None => Quadratic::sqrt_disc(d.clone()),
        };
        let m = Quadratic::from_base(mu.clone());
        Self {
            chi_plus: m.clone() + &sqrt_d,
            chi_minus: m.clone() - sqrt_d,
            mu: m,
            nu: Quadratic::from_base(nu.clone()),
            kind,
            name: format!("mu={mu},nu={nu}"),
        }
    }

    /// `rplus` = (3/2, 1), `s1` = (0, 1), `special` = (1, 1).
    pub fn preset(name: &str) -> Result<Self> {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        let (mu, nu) = match name {
            "rplus" => (r(3, 2), r(1, 1)),
            "s1" => (r(0, 1), r(1, 1)),
            "special" => (r(1, 1), r(1, 1)),
            other => return Err(Error::UnknownPreset(other.to_string())),
        };
        let mut p = Self::from_rationals(mu, nu);
        p.name = name.to_string();
        Ok(p)
    }

    pub const PRESETS: [&'static str; 3] = ["rplus", "s1", "special"];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn preset_kinds_and_roots() {
        let rp = Params::preset("rplus").unwrap();
        assert_eq!(rp.kind, ParamKind::Rplus);
        rp.validate().unwrap();
        assert_eq!(rp.chi_plus.conj(), rp.chi_plus);

        let s1 = Params::preset("s1").unwrap();
        assert_eq!(s1.kind, ParamKind::S1);
        s1.validate().unwrap();
        assert_eq!(s1.chi_plus.conj(), s1.chi_minus);

        let sp = Params::preset("special").unwrap();
        assert_eq!(sp.kind, ParamKind::Special);
        assert!(sp.is_special());
        assert_eq!(sp.chi_plus, Scalar::from_i64(1));
        assert!(Params::preset("nope").is_err());
    }

    #[test]
    fn rational_square_discriminant_stays_rational() {
        let p = Params::from_rationals(Rational::new(5.into(), 4.into()), Rational::new(1.into(), 1.into()));
        assert_eq!(p.chi_plus, Scalar::from_base(Rational::new(2.into(), 1.into())));
        assert_eq!(p.chi_minus, Scalar::from_base(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn shifted_mu_at_zero_is_mu() {
        for name in Params::PRESETS {
            let p = Params::preset(name).unwrap();
            assert_eq!(p.shifted_mu(0), p.mu);
        }
        assert_eq!(Params::preset("s1").unwrap().theta(), Scalar::from_i64(1));
    }
}
