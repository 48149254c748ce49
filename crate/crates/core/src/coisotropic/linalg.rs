//! Exact Gaussian elimination on sparse vectors indexed by monomials.

use crate::pbw::AlgebraElement;
use crate::scalar::Coeff;

struct Row<C> {
    pivot: crate::pbw::Mono,
    vector: AlgebraElement<C>,
    /// `vector = sum combo[i] * family[i]`.
    combo: Vec<C>,
}

/// Row-echelon form of a family, remembering how each row was built.
pub struct Echelon<C> {
    size: usize,
    rows: Vec<Row<C>>,
}

fn axpy<C: Coeff>(acc: &mut [C], c: &C, x: &[C]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a = a.clone() - b.clone() * c;
    }
}

impl<C: Coeff> Echelon<C> {
    pub fn new(family: &[AlgebraElement<C>]) -> Self {
        let mut e = Self { size: family.len(), rows: Vec::new() };
        for (i, f) in family.iter().enumerate() {
            let mut combo = vec![C::zero(); family.len()];
            combo[i] = C::one();
            let (v, combo) = e.reduce(f.clone(), combo);
            let Some((pivot, lead)) = v.terms().last().map(|(m, c)| (*m, c.clone())) else {
                continue;
            };
            let inv = lead.inv().expect("nonzero pivot");
            let combo = combo.iter().map(|c| c.clone() * &inv).collect();
            e.rows.push(Row { pivot, vector: v.scale(&inv), combo });
        }
        e
    }

    /// Subtracts row multiples from `v`, updating `combo` so that the
    /// remainder stays equal to `sum combo[i] * family[i]` when it started so.
    fn reduce(&self, mut v: AlgebraElement<C>, mut combo: Vec<C>) -> (AlgebraElement<C>, Vec<C>) {
        for row in &self.rows {
            let c = v.coeff(&row.pivot);
            if c.is_zero() {
                continue;
            }
            v = &v - &row.vector.scale(&c);
            axpy(&mut combo, &c, &row.combo);
        }
        (v, combo)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates `x` with `target = sum x[i] * family[i]`, if any.
    pub fn solve(&self, target: &AlgebraElement<C>) -> Option<Vec<C>> {
        let (rest, combo) = self.reduce(target.clone(), vec![C::zero(); self.size]);
        rest.is_zero().then(|| combo.into_iter().map(|c| -c).collect())
    }

    pub fn contains(&self, target: &AlgebraElement<C>) -> bool {
        self.reduce(target.clone(), Vec::new()).0.is_zero()
    }
}

pub fn rank<C: Coeff>(family: &[AlgebraElement<C>]) -> usize {
    Echelon::new(family).rank()
}

pub fn solve<C: Coeff>(family: &[AlgebraElement<C>], target: &AlgebraElement<C>) -> Option<Vec<C>> {
    Echelon::new(family).solve(target)
}

/// Whether the two families span the same subspace.
pub fn same_span<C: Coeff>(x: &[AlgebraElement<C>], y: &[AlgebraElement<C>]) -> bool {
    let ex = Echelon::new(x);
    let ey = Echelon::new(y);
    y.iter().all(|v| ex.contains(v)) && x.iter().all(|v| ey.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::Mono;
    use crate::{Element, Scalar};

    #[test]
    fn rank_and_solve() {
        let a = Element::a();
        let b = Element::b();
        let two = Scalar::from_i64(2);
        let fam = vec![&a + &b, &a - &b, a.scale(&two)];
        let e = Echelon::new(&fam);
        assert_eq!(e.rank(), 2);
        let x = e.solve(&b).unwrap();
        let back = fam.iter().zip(&x).fold(Element::zero(), |acc, (f, c)| &acc + &f.scale(c));
        assert_eq!(back, b);
        assert!(e.solve(&Element::mono(Mono::new(0, 0, 1, 0))).is_none());
        assert!(same_span(&fam[..2], &[a, b]));
    }
}
