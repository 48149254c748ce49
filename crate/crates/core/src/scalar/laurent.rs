//! Integer Laurent polynomials in `t`.
//!
//! Structure constants of the PBW product and of the coproduct live in
//! `Z[t, 1/t]`, so they are computed and cached in this coefficient-free
//! form and converted into a concrete coefficient field on use.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

/// Sparse `sum c_e t^e` with nonzero `c_e`, sorted by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Vec<(i32, i64)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^e`
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// `q^k = t^{2k}`
    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, 2 * k)
    }

    fn from_map(map: BTreeMap<i32, i64>) -> Self {
        Self { terms: map.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|&(e, c)| (e, -c)).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect() }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut map: BTreeMap<i32, i64> = self.terms.iter().copied().collect();
        for &(e, c) in &rhs.terms {
            let slot = map.entry(e).or_insert(0);
            *slot = slot.checked_add(c).expect("structure constant overflow");
        }
        Laurent::from_map(map)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut map = BTreeMap::new();
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &rhs.terms {
                let prod = c1.checked_mul(c2).expect("structure constant overflow");
                let slot = map.entry(e1 + e2).or_insert(0i64);
                *slot = slot.checked_add(prod).expect("structure constant overflow");
            }
        }
        Laurent::from_map(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = &Laurent::one() + &Laurent::q_pow(1);
        let y = &Laurent::one() + &Laurent::q_pow(-1).neg();
        // (1 + t^2)(1 - t^-2) = t^2 - t^-2
        let p = &x * &y;
        assert_eq!(p.terms(), &[(-2, -1), (2, 1)]);
        assert!((&p + &p.neg()).is_zero());
        assert_eq!(Laurent::monomial(3, 1).shift(-2).terms(), &[(-1, 3)]);
    }
}
