//! The algebra of functions on `SL_q(2,R)` in its PBW normal form.
//!
//! Generators `a, b, c, d` satisfy
//!
//! ```text
//! ab = q ba   ac = q ca   bc = cb   bd = q db   cd = q dc
//! da - q^{-1} bc = 1 = ad - q bc
//! ```
//!
//! and every element is stored in the basis `a^r b^s c^t d^u` with
//! `r * u = 0`.

mod product;
mod rewrite;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use product::mono_mul;
pub use rewrite::{all_words, apply, normal_form_with, redexes, ConfluenceChecker, ConfluenceFailure, FreeWord, Redex, RewriteOrder, Rule};

use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A, Generator::B, Generator::C, Generator::D];

    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
            Generator::D => 'd',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Self> {
        match ch {
            'a' => Some(Generator::A),
            'b' => Some(Generator::B),
            'c' => Some(Generator::C),
            'd' => Some(Generator::D),
            _ => None,
        }
    }
}

/// PBW monomial `a^a b^b c^c d^d`; `a` and `d` never co-occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0, c: 0, d: 0 };

    /// Panics if both `a` and `d` are present.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        assert!(a == 0 || d == 0, "a^{a} and d^{d} cannot both appear in a PBW monomial");
        Mono { a, b, c, d }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::A => Mono::new(1, 0, 0, 0),
            Generator::B => Mono::new(0, 1, 0, 0),
            Generator::C => Mono::new(0, 0, 1, 0),
            Generator::D => Mono::new(0, 0, 0, 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    pub fn is_one(&self) -> bool {
        *self == Mono::ONE
    }

    /// Letters of the monomial in order.
    pub fn letters(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (g, n) in Generator::ALL.into_iter().zip([self.a, self.b, self.c, self.d]) {
            w.extend(std::iter::repeat_n(g, n as usize));
        }
        w
    }
}

impl Ord for Mono {
    /// Graded, then `a` before `b` before `c` before `d`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.a.cmp(&self.a))
            .then(other.b.cmp(&self.b))
            .then(other.c.cmp(&self.c))
            .then(other.d.cmp(&self.d))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, n) in Generator::ALL.into_iter().zip([self.a, self.b, self.c, self.d]) {
            if n == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if n == 1 {
                write!(f, "{}", g.symbol())?;
            } else {
                write!(f, "{}^{}", g.symbol(), n)?;
            }
        }
        Ok(())
    }
}

/// Finite linear combination of PBW monomials; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<C> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> AlgebraElement<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn term(c: C, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(C::one(), m)
    }

    pub fn generator(g: Generator) -> Self {
        Self::mono(Mono::generator(g))
    }

    pub fn a() -> Self {
        Self::generator(Generator::A)
    }
    pub fn b() -> Self {
        Self::generator(Generator::B)
    }
    pub fn c() -> Self {
        Self::generator(Generator::C)
    }
    pub fn d() -> Self {
        Self::generator(Generator::D)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, &c);
        }
        out
    }

    pub fn add_term(&mut self, m: Mono, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The scalar value, if the element is a multiple of `1`.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x.clone() * c)).filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Linear extension of `f` on monomials.
    pub fn map_linear(&self, f: impl Fn(&Mono) -> Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (m2, c2) in f(m).terms {
                out.add_term(m2, &(c2 * c));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Product of normal forms, reduced with the cached closed-form
    /// monomial products.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c12 = c1.clone() * c2;
                for (l, m) in mono_mul(*m1, *m2).iter() {
                    out.add_term(*m, &(C::from_laurent(l) * &c12));
                }
            }
        }
        out
    }

    /// Antilinear, antimultiplicative involution fixing `a, b, c, d`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let rev = m.letters().into_iter().rev().fold(Self::one(), |acc, g| &acc * &Self::generator(g));
            let cc = c.conj();
            for (m2, c2) in rev.terms {
                out.add_term(m2, &(c2 * &cc));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for AlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (c, m.to_string())))
    }
}

/// Writes `sum c_i x_i` in the canonical text form shared by elements,
/// tensors and quotient classes.
pub(crate) fn write_terms<'a, C: Coeff + 'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a C, String)>) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let text = c.to_string();
        let (neg, coeff) = if c.is_single_term() {
            match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            }
        } else {
            (false, format!("({text})"))
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (coeff == "1", body == "1") {
            (true, _) => write!(f, "{body}")?,
            (false, true) => write!(f, "{coeff}")?,
            (false, false) => write!(f, "{coeff} {body}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<C: Coeff> Add for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn add(self, rhs: Self) -> AlgebraElement<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<C: Coeff> Sub for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn sub(self, rhs: Self) -> AlgebraElement<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn neg(self) -> AlgebraElement<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coeff> Mul for &AlgebraElement<C> {
    type Output = AlgebraElement<C>;
    fn mul(self, rhs: Self) -> AlgebraElement<C> {
        self.multiply(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr for AlgebraElement<C> {
            type Output = AlgebraElement<C>;
            fn $m(self, rhs: Self) -> Self { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Product of the listed generators, left to right.
pub fn word<C: Coeff>(letters: &[Generator]) -> AlgebraElement<C> {
    letters.iter().fold(AlgebraElement::one(), |acc, &g| &acc * &AlgebraElement::generator(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, Scalar};
    use Generator::*;

    fn q(k: i32) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn determinant_relations() {
        let bc = Element::mono(Mono::new(0, 1, 1, 0));
        assert_eq!(word::<Scalar>(&[D, A]), &Element::one() + &bc.scale(&q(-1)));
        assert_eq!(Element::a() * Element::d(), &Element::one() + &bc.scale(&q(1)));
        let lhs = &word::<Scalar>(&[D, A]) - &word::<Scalar>(&[B, C]).scale(&q(-1));
        assert_eq!(lhs, Element::one());
    }

    #[test]
    fn q_commutations() {
        let ab = Element::mono(Mono::new(1, 1, 0, 0));
        assert_eq!(word::<Scalar>(&[B, A]), ab.scale(&q(-1)));
        assert_eq!(word::<Scalar>(&[B, C]), word::<Scalar>(&[C, B]));
        assert_eq!(word::<Scalar>(&[C, D]), word::<Scalar>(&[D, C]).scale(&q(1)));
        assert_eq!(&Element::a() * &Element::one(), Element::a());
    }

    #[test]
    fn star_examples() {
        use crate::scalar::Coeff;
        assert_eq!(Element::a().star(), Element::a());
        let tb = Element::b().scale(&Scalar::t_pow(1));
        assert_eq!(tb.star(), Element::b().scale(&Scalar::t_pow(-1)));
        let ab = word::<Scalar>(&[A, B]);
        assert_eq!(ab.star(), word::<Scalar>(&[B, A]));
        assert_eq!(ab.star(), ab.scale(&q(-1)));
    }

    #[test]
    fn printing() {
        assert_eq!(word::<Scalar>(&[D, A]).to_string(), "1 + t^-2 b c");
        let x = &Element::a().scale(&Scalar::from_i64(-3)) + &Element::mono(Mono::new(0, 2, 0, 1));
        assert_eq!(x.to_string(), "-3 a + b^2 d");
        assert_eq!(Element::zero().to_string(), "0");
    }
}
