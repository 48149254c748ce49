//! Sparse elements of `A ⊗ A` and `A ⊗ A ⊗ A` over PBW monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::pbw::{mono_mul, write_terms, AlgebraElement, Mono};
use crate::scalar::Coeff;

/// `sum c (m1 ⊗ m2)`, each leg a PBW monomial.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement<C> {
    terms: BTreeMap<(Mono, Mono), C>,
}

impl<C: Coeff> TensorElement<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn pure(x: &AlgebraElement<C>, y: &AlgebraElement<C>) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                out.add_term(*m1, *m2, &(c1.clone() * c2));
            }
        }
        out
    }

    pub fn add_term(&mut self, m1: Mono, m2: Mono, c: &C) {
        if c.is_zero() {
            return;
        }
        let key = (m1, m2);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono), &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for ((m1, m2), x) in &self.terms {
            out.add_term(*m1, *m2, &(x.clone() * c));
        }
        out
    }

    /// Legwise product `(x ⊗ y)(x' ⊗ y') = x x' ⊗ y y'`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, a2), c1) in &self.terms {
            for ((b1, b2), c2) in &rhs.terms {
                let c = c1.clone() * c2;
                let left = mono_mul(*a1, *b1);
                let right = mono_mul(*a2, *b2);
                for (l1, m1) in left.iter() {
                    let cl = C::from_laurent(l1) * &c;
                    for (l2, m2) in right.iter() {
                        out.add_term(*m1, *m2, &(C::from_laurent(l2) * &cl));
                    }
                }
            }
        }
        out
    }

    /// `(f ⊗ g)` for linear maps given on monomials.
    pub fn map_legs(&self, f: impl Fn(&Mono) -> AlgebraElement<C>, g: impl Fn(&Mono) -> AlgebraElement<C>) -> Self {
        let mut left_cache: BTreeMap<Mono, AlgebraElement<C>> = BTreeMap::new();
        let mut right_cache: BTreeMap<Mono, AlgebraElement<C>> = BTreeMap::new();
        let mut out = Self::zero();
        for ((m1, m2), c) in &self.terms {
            let x = left_cache.entry(*m1).or_insert_with(|| f(m1));
            let y = right_cache.entry(*m2).or_insert_with(|| g(m2));
            for (n1, c1) in x.terms() {
                let c1 = c1.clone() * c;
                for (n2, c2) in y.terms() {
                    out.add_term(*n1, *n2, &(c2.clone() * &c1));
                }
            }
        }
        out
    }

    /// `(id ⊗ φ)` for a functional `φ`.
    pub fn contract_right(&self, phi: impl Fn(&Mono) -> C) -> AlgebraElement<C> {
        AlgebraElement::from_terms(self.terms.iter().map(|((m1, m2), c)| (*m1, phi(m2) * c)))
    }

    /// `(φ ⊗ id)` for a functional `φ`.
    pub fn contract_left(&self, phi: impl Fn(&Mono) -> C) -> AlgebraElement<C> {
        AlgebraElement::from_terms(self.terms.iter().map(|((m1, m2), c)| (*m2, phi(m1) * c)))
    }

    /// Multiplication map `m(f ⊗ g)`.
    pub fn multiply_legs(&self, f: impl Fn(&Mono) -> AlgebraElement<C>, g: impl Fn(&Mono) -> AlgebraElement<C>) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero();
        for ((m1, m2), c) in &self.terms {
            let prod = &f(m1) * &g(m2);
            for (m, x) in prod.terms() {
                out.add_term(*m, &(x.clone() * c));
            }
        }
        out
    }

    /// The flip `x ⊗ y -> y ⊗ x`.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero();
        for ((m1, m2), c) in &self.terms {
            out.add_term(*m2, *m1, c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero();
        for ((m1, m2), c) in &self.terms {
            out.add_term(*m1, *m2, &f(c));
        }
        out
    }
}

impl<C: Coeff> fmt::Display for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|((m1, m2), c)| (c, format!("{m1} (⊗) {m2}"))))
    }
}

impl<C: Coeff> Add for &TensorElement<C> {
    type Output = TensorElement<C>;
    fn add(self, rhs: Self) -> TensorElement<C> {
        let mut out = self.clone();
        for ((m1, m2), c) in &rhs.terms {
            out.add_term(*m1, *m2, c);
        }
        out
    }
}

impl<C: Coeff> Sub for &TensorElement<C> {
    type Output = TensorElement<C>;
    fn sub(self, rhs: Self) -> TensorElement<C> {
        let mut out = self.clone();
        for ((m1, m2), c) in &rhs.terms {
            out.add_term(*m1, *m2, &-c.clone());
        }
        out
    }
}

/// Elements of `A ⊗ A ⊗ A`, used for coassociativity.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3<C> {
    terms: BTreeMap<(Mono, Mono, Mono), C>,
}

impl<C: Coeff> Tensor3<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, key: (Mono, Mono, Mono), c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono, Mono), &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> fmt::Display for Tensor3<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|((m1, m2, m3), c)| (c, format!("{m1} (⊗) {m2} (⊗) {m3}"))))
    }
}

impl<C: Coeff> Sub for &Tensor3<C> {
    type Output = Tensor3<C>;
    fn sub(self, rhs: Self) -> Tensor3<C> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c.clone());
        }
        out
    }
}
