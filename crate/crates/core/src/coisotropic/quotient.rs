use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::{Arc, RwLock};

use super::Params;
use crate::error::{Error, Result};
use crate::hopf::{coproduct, counit, tau, TensorElement};
use crate::pbw::{AlgebraElement, Mono};
use crate::scalar::Coeff;

/// Which one-sided ideal a class is taken modulo: `R = C·A` (right) or
/// `L = A·C` (left).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// A class in `A/R` or `A/L`, stored through its canonical representative
/// in the span of `b^s` and `a b^s`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientElement<C> {
    pub side: Side,
    pub rep: AlgebraElement<C>,
}

impl<C: Coeff> QuotientElement<C> {
    pub fn zero(side: Side) -> Self {
        Self { side, rep: AlgebraElement::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { side: self.side, rep: self.rep.scale(c) }
    }
}

impl<C: Coeff> fmt::Display for QuotientElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl<C: Coeff> Add for &QuotientElement<C> {
    type Output = QuotientElement<C>;
    fn add(self, rhs: Self) -> QuotientElement<C> {
        assert_eq!(self.side, rhs.side, "adding classes from different quotients");
        QuotientElement { side: self.side, rep: &self.rep + &rhs.rep }
    }
}

impl<C: Coeff> Sub for &QuotientElement<C> {
    type Output = QuotientElement<C>;
    fn sub(self, rhs: Self) -> QuotientElement<C> {
        assert_eq!(self.side, rhs.side, "subtracting classes from different quotients");
        QuotientElement { side: self.side, rep: &self.rep - &rhs.rep }
    }
}

type Cache<C> = RwLock<HashMap<Mono, Arc<AlgebraElement<C>>>>;

/// The coideal `C = span(k1, k2)` for fixed parameters, with memoized
/// reduction modulo `R` and `L`.
pub struct Coisotropic<C> {
    params: Params<C>,
    k1: AlgebraElement<C>,
    k2: AlgebraElement<C>,
    /// `a + 2 t mu b`, which `d` reduces to on either side.
    d_image: AlgebraElement<C>,
    /// `1 - nu b^2 - 2 t^{-1} mu a b`, which `a^2 ...` reduces to on the right.
    a2_right: AlgebraElement<C>,
    /// `1 - q^2 nu b^2 - 2 t mu a b`, which `... a^2` reduces to on the left.
    a2_left: AlgebraElement<C>,
    right: Cache<C>,
    left: Cache<C>,
    v_right: RwLock<HashMap<i64, QuotientElement<C>>>,
    v_left: RwLock<HashMap<i64, QuotientElement<C>>>,
}

fn m(a: u32, b: u32, c: u32, d: u32) -> Mono {
    Mono::new(a, b, c, d)
}

/// `k1 = a - d + 2 t mu b` and `k2 = q nu b + c`.
pub fn coideal_generators<C: Coeff>(mu: &C, nu: &C) -> (AlgebraElement<C>, AlgebraElement<C>) {
    let two_t_mu = mu.clone() * &C::from_i64(2) * &C::t_pow(1);
    let mut k1 = AlgebraElement::a();
    k1.add_term(m(0, 0, 0, 1), &-C::one());
    k1.add_term(m(0, 1, 0, 0), &two_t_mu);
    let mut k2 = AlgebraElement::c();
    k2.add_term(m(0, 1, 0, 0), &(nu.clone() * &C::q_pow(1)));
    (k1, k2)
}

impl<C: Coeff> Coisotropic<C> {
    pub fn new(params: Params<C>) -> Self {
        let (k1, k2) = coideal_generators(&params.mu, &params.nu);
        let two = C::from_i64(2);
        let mu = &params.mu;
        let nu = &params.nu;
        let mut d_image = AlgebraElement::a();
        d_image.add_term(m(0, 1, 0, 0), &(mu.clone() * &two * &C::t_pow(1)));
        let mut a2_right = AlgebraElement::one();
        a2_right.add_term(m(0, 2, 0, 0), &-nu.clone());
        a2_right.add_term(m(1, 1, 0, 0), &-(mu.clone() * &two * &C::t_pow(-1)));
        let mut a2_left = AlgebraElement::one();
        a2_left.add_term(m(0, 2, 0, 0), &-(nu.clone() * &C::q_pow(2)));
        a2_left.add_term(m(1, 1, 0, 0), &-(mu.clone() * &two * &C::t_pow(1)));
        Self {
            params,
            k1,
            k2,
            d_image,
            a2_right,
            a2_left,
            right: RwLock::default(),
            left: RwLock::default(),
            v_right: RwLock::default(),
            v_left: RwLock::default(),
        }
    }

    pub fn params(&self) -> &Params<C> {
        &self.params
    }

    pub fn k1(&self) -> &AlgebraElement<C> {
        &self.k1
    }

    pub fn k2(&self) -> &AlgebraElement<C> {
        &self.k2
    }

    /// One rewriting step on a monomial that is not a representative.
    ///
    /// Right side, with the coideal generators as left factors: a `d` is
    /// q-commuted to the front and replaced by `a + 2 t mu b`; then a `c` is
    /// moved to the front and replaced by `-q nu b`; then `a^2` at the front
    /// is replaced using `k1 a + q^{-1} k2 b = a^2 - 1 + 2 t^{-1} mu ab + nu b^2`.
    /// The left side mirrors this at the back, using
    /// `a k1 + q b k2 = a^2 - 1 + 2 t mu ab + q^2 nu b^2`.
    fn step(&self, side: Side, x: Mono) -> Option<AlgebraElement<C>> {
        let (r, s, t, u) = (x.a, x.b, x.c, x.d);
        let mono = |a, b, c, d| AlgebraElement::<C>::mono(m(a, b, c, d));
        let nu = &self.params.nu;
        if u > 0 {
            let rest = mono(0, s, t, u - 1);
            return Some(match side {
                Side::Right => self.d_image.multiply(&rest).scale(&C::q_pow((s + t) as i32)),
                Side::Left => rest.multiply(&self.d_image),
            });
        }
        if t > 0 {
            return Some(match side {
                Side::Right => AlgebraElement::b().multiply(&mono(r, s, t - 1, 0)).scale(&-(nu.clone() * &C::q_pow(r as i32 + 1))),
                Side::Left => mono(r, s + 1, t - 1, 0).scale(&-(nu.clone() * &C::q_pow(1))),
            });
        }
        if r >= 2 {
            let rest = mono(r - 2, s, 0, 0);
            return Some(match side {
                Side::Right => self.a2_right.multiply(&rest),
                Side::Left => rest.multiply(&self.a2_left).scale(&C::q_pow(2 * s as i32)),
            });
        }
        None
    }

    fn cache(&self, side: Side) -> &Cache<C> {
        match side {
            Side::Right => &self.right,
            Side::Left => &self.left,
        }
    }

    /// Canonical representative of a monomial's class.
    pub fn reduce_mono(&self, side: Side, x: Mono) -> Arc<AlgebraElement<C>> {
        if let Some(hit) = self.cache(side).read().unwrap().get(&x) {
            return hit.clone();
        }
        let value = Arc::new(match self.step(side, x) {
            None => AlgebraElement::mono(x),
            Some(e) => self.reduce_rep(side, &e),
        });
        self.cache(side).write().unwrap().insert(x, value.clone());
        value
    }

    fn reduce_rep(&self, side: Side, x: &AlgebraElement<C>) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero();
        for (mono, c) in x.terms() {
            for (m2, c2) in self.reduce_mono(side, *mono).terms() {
                out.add_term(*m2, &(c2.clone() * c));
            }
        }
        out
    }

    pub fn reduce(&self, side: Side, x: &AlgebraElement<C>) -> QuotientElement<C> {
        QuotientElement { side, rep: self.reduce_rep(side, x) }
    }

    pub fn right_reduce(&self, x: &AlgebraElement<C>) -> QuotientElement<C> {
        self.reduce(Side::Right, x)
    }

    pub fn left_reduce(&self, x: &AlgebraElement<C>) -> QuotientElement<C> {
        self.reduce(Side::Left, x)
    }

    /// The class of `1`.
    pub fn unit(&self, side: Side) -> QuotientElement<C> {
        QuotientElement { side, rep: AlgebraElement::one() }
    }

    /// `x · f` for a right class.
    pub fn act_right(&self, x: &QuotientElement<C>, f: &AlgebraElement<C>) -> Result<QuotientElement<C>> {
        if x.side != Side::Right {
            return Err(Error::SideMismatch("left class acted on from the right".into()));
        }
        Ok(self.right_reduce(&x.rep.multiply(f)))
    }

    /// `f · x` for a left class.
    pub fn act_left(&self, f: &AlgebraElement<C>, x: &QuotientElement<C>) -> Result<QuotientElement<C>> {
        if x.side != Side::Left {
            return Err(Error::SideMismatch("right class acted on from the left".into()));
        }
        Ok(self.left_reduce(&f.multiply(&x.rep)))
    }

    /// The `j`-th factor: `a + q^{j-1/2} chi b` on the right and
    /// `a + q^{3/2-j} chi b` on the left.
    fn w_factor(&self, j: i64, sigma: i64, side: Side) -> AlgebraElement<C> {
        let chi = if sigma > 0 { &self.params.chi_plus } else { &self.params.chi_minus };
        let e = match side {
            Side::Right => 2 * j as i32 - 1,
            Side::Left => 3 - 2 * j as i32,
        };
        let mut f = AlgebraElement::a();
        f.add_term(m(0, 1, 0, 0), &(chi.clone() * &C::t_pow(e)));
        f
    }

    /// `w_n = (a + q^{1/2} chi b)(a + q^{3/2} chi b)...(a + q^{|n|-1/2} chi b)`
    /// with `chi = chi_sign(n)`. The left word is
    /// `(a + q^{3/2-|n|} chi b)...(a + q^{-1/2} chi b)(a + q^{1/2} chi b)`;
    /// keeping the right exponents in reverse order is group-like only for
    /// `|n| <= 1`.
    pub fn w_word(&self, n: i64, side: Side) -> AlgebraElement<C> {
        let sigma = n.signum();
        let mut w = AlgebraElement::one();
        for j in 1..=n.abs() {
            let f = self.w_factor(j, sigma, side);
            w = match side {
                Side::Right => w.multiply(&f),
                Side::Left => f.multiply(&w),
            };
        }
        w
    }

    /// `v_n = r[w_n]`, built by the recursion
    /// `v_{n+1} = v_n · (a + q^{n+1/2} chi_+ b)` and
    /// `v_{n-1} = v_n · (a + q^{-n+1/2} chi_- b)`. For the left side the
    /// factors act from the left on `ℓ[w̃_n]`.
    pub fn v(&self, n: i64, side: Side) -> QuotientElement<C> {
        let table = match side {
            Side::Right => &self.v_right,
            Side::Left => &self.v_left,
        };
        if let Some(hit) = table.read().unwrap().get(&n) {
            return hit.clone();
        }
        let value = if n == 0 {
            self.unit(side)
        } else {
            let prev = self.v(n - n.signum(), side);
            let f = self.w_factor(n.abs(), n.signum(), side);
            match side {
                Side::Right => self.act_right(&prev, &f),
                Side::Left => self.act_left(&f, &prev),
            }
            .expect("sides agree")
        };
        table.write().unwrap().insert(n, value.clone());
        value
    }

    /// `v_n` by reducing the explicit product `w_n`.
    pub fn v_direct(&self, n: i64, side: Side) -> QuotientElement<C> {
        self.reduce(side, &self.w_word(n, side))
    }

    /// `(r ⊗ r) Δ(rep)`.
    pub fn coproduct(&self, x: &QuotientElement<C>) -> TensorElement<C> {
        let side = x.side;
        coproduct(&x.rep).map_legs(|m| (*self.reduce_mono(side, *m)).clone(), |m| (*self.reduce_mono(side, *m)).clone())
    }

    pub fn counit(&self, x: &QuotientElement<C>) -> C {
        counit(&x.rep)
    }

    pub fn tau(&self, x: &QuotientElement<C>) -> QuotientElement<C> {
        self.reduce(x.side, &tau(&x.rep))
    }

    /// `x ⊗ y` for two classes.
    pub fn tensor(&self, x: &QuotientElement<C>, y: &QuotientElement<C>) -> TensorElement<C> {
        TensorElement::pure(&x.rep, &y.rep)
    }

    /// `(id ⊗ r) Δx` in `A ⊗ A/R`.
    pub fn right_coaction(&self, x: &AlgebraElement<C>) -> TensorElement<C> {
        coproduct(x).map_legs(|m| AlgebraElement::mono(*m), |m| (*self.reduce_mono(Side::Right, *m)).clone())
    }

    /// `(ℓ ⊗ id) Δx` in `A/L ⊗ A`.
    pub fn left_coaction(&self, x: &AlgebraElement<C>) -> TensorElement<C> {
        coproduct(x).map_legs(|m| (*self.reduce_mono(Side::Left, *m)).clone(), |m| AlgebraElement::mono(*m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, Rational, Scalar};

    fn ctx(name: &str) -> Coisotropic<Scalar> {
        Coisotropic::new(Params::preset(name).unwrap())
    }

    fn qs(k: i32) -> Scalar {
        Scalar::q_pow(k)
    }

    #[test]
    fn right_reduce_generators() {
        let k = Coisotropic::new(Params::from_rationals(Rational::new(3.into(), 2.into()), Rational::new(1.into(), 1.into())));
        let nu = k.params().nu.clone();
        let mu = k.params().mu.clone();
        let c = k.right_reduce(&Element::c());
        assert_eq!(c.rep, Element::b().scale(&-(qs(1) * &nu)));
        let d = k.right_reduce(&Element::d());
        let expect = &Element::a() + &Element::b().scale(&(mu * &Scalar::from_i64(2) * &Scalar::t_pow(1)));
        assert_eq!(d.rep, expect);
    }

    #[test]
    fn quadratic_relation_reduces_to_one() {
        for name in Params::PRESETS {
            let k = ctx(name);
            let p = k.params();
            let two_mu = p.mu.clone() * &Scalar::from_i64(2);
            let ab = Element::mono(m(1, 1, 0, 0));
            let bb = Element::mono(m(0, 2, 0, 0));
            let aa = Element::mono(m(2, 0, 0, 0));
            let right = &(&aa + &bb.scale(&p.nu)) + &ab.scale(&(two_mu.clone() * &Scalar::t_pow(-1)));
            assert_eq!(k.right_reduce(&right), k.unit(Side::Right));
            let left = &(&aa + &bb.scale(&(p.nu.clone() * &qs(2)))) + &ab.scale(&(two_mu * &Scalar::t_pow(1)));
            assert_eq!(k.left_reduce(&left), k.unit(Side::Left));
        }
    }

    #[test]
    fn ideal_is_killed() {
        for name in Params::PRESETS {
            let k = ctx(name);
            for x in [m(0, 0, 0, 0), m(1, 0, 0, 0), m(0, 2, 1, 0), m(2, 1, 1, 0), m(0, 1, 0, 2), m(0, 0, 2, 1)] {
                let y = Element::mono(x);
                for g in [k.k1(), k.k2()] {
                    assert!(k.right_reduce(&g.multiply(&y)).is_zero(), "{name} right {x}");
                    assert!(k.left_reduce(&y.multiply(g)).is_zero(), "{name} left {x}");
                }
            }
        }
    }

    #[test]
    fn representatives_are_fixed() {
        let k = ctx("s1");
        for x in [m(0, 3, 0, 0), m(1, 2, 0, 0), m(0, 0, 0, 0)] {
            for side in [Side::Right, Side::Left] {
                assert_eq!(k.reduce(side, &Element::mono(x)).rep, Element::mono(x));
            }
        }
    }

    #[test]
    fn module_action_sides() {
        let k = ctx("rplus");
        let one = k.unit(Side::Right);
        let got = k.act_right(&one, &Element::c()).unwrap();
        let expect = k.right_reduce(&Element::b()).scale(&-(qs(1) * &k.params().nu));
        assert_eq!(got, expect);
        assert_eq!(k.act_right(&one, &Element::one()).unwrap(), one);
        assert!(matches!(k.act_left(&Element::c(), &one), Err(Error::SideMismatch(_))));
        assert!(matches!(k.act_right(&k.unit(Side::Left), &Element::c()), Err(Error::SideMismatch(_))));
    }

    #[test]
    fn w_words() {
        let k = ctx("rplus");
        let p = k.params().clone();
        assert_eq!(k.w_word(0, Side::Right), Element::one());
        let w1 = &Element::a() + &Element::b().scale(&(p.chi_plus.clone() * &Scalar::t_pow(1)));
        assert_eq!(k.w_word(1, Side::Right), w1);
        let wm1 = &Element::a() + &Element::b().scale(&(p.chi_minus * &Scalar::t_pow(1)));
        assert_eq!(k.w_word(-1, Side::Right), wm1);
        assert_eq!(k.v(1, Side::Right).rep, w1);
    }

    #[test]
    fn recursion_matches_direct_product() {
        for name in Params::PRESETS {
            let k = ctx(name);
            for n in -3..=3 {
                for side in [Side::Right, Side::Left] {
                    assert_eq!(k.v(n, side), k.v_direct(n, side), "{name} {side} {n}");
                }
            }
        }
    }

    #[test]
    fn left_words_need_descending_exponents() {
        let k = ctx("s1");
        let p = k.params().clone();
        let f = |e: i32| &Element::a() + &Element::b().scale(&(p.chi_plus.clone() * &Scalar::t_pow(e)));
        let grouplike = |w: &Element| {
            let v = k.reduce(Side::Left, w);
            k.coproduct(&v) == k.tensor(&v, &v)
        };
        assert_eq!(k.w_word(2, Side::Left), f(-1).multiply(&f(1)));
        assert!(grouplike(&k.w_word(2, Side::Left)));
        assert!(!grouplike(&f(3).multiply(&f(1))));
    }

    #[test]
    fn v_is_group_like() {
        let k = ctx("s1");
        for n in [-2, 0, 1, 2] {
            let v = k.v(n, Side::Right);
            assert_eq!(k.coproduct(&v), k.tensor(&v, &v));
            assert_eq!(k.counit(&v), Scalar::one());
        }
    }

    #[test]
    fn v_d_acts_like_shifted_a() {
        let k = ctx("rplus");
        let p = k.params();
        for n in -2i64..=2 {
            let v = k.v(n, Side::Right);
            let coeff = p.chi_plus.clone() * &Scalar::t_pow(2 * n as i32 + 1) + &(p.chi_minus.clone() * &Scalar::t_pow(-2 * n as i32 + 1));
            let f = &Element::a() + &Element::b().scale(&coeff);
            assert_eq!(k.act_right(&v, &Element::d()).unwrap(), k.act_right(&v, &f).unwrap());
        }
    }

    #[test]
    fn tau_case_split_at_one() {
        assert_eq!(ctx("s1").tau(&ctx("s1").v(1, Side::Right)), ctx("s1").v(1, Side::Right));
        for name in ["rplus", "special"] {
            let k = ctx(name);
            assert_eq!(k.tau(&k.v(1, Side::Right)), k.v(-1, Side::Right));
        }
    }

    use num_traits::One;
}
