//! Hopf *-algebra structure of `SL_q(2,R)`.
//!
//! ```text
//! Δa = a⊗a + b⊗c   Δb = a⊗b + b⊗d   Δc = c⊗a + d⊗c   Δd = c⊗b + d⊗d
//! ε(a) = ε(d) = 1, ε(b) = ε(c) = 0
//! S(a) = d, S(b) = -q^{-1} b, S(c) = -q c, S(d) = a
//! ```
//!
//! and `τ = * ∘ S`.

mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

pub use tensor::{Tensor3, TensorElement};

use crate::error::{Error, Result};
use crate::pbw::{mono_mul, AlgebraElement, Generator, Mono};
use crate::scalar::{Coeff, Laurent};

type LaurentTensor = Vec<(Laurent, Mono, Mono)>;

fn coproduct_cache() -> &'static RwLock<HashMap<Mono, Arc<LaurentTensor>>> {
    static CACHE: OnceLock<RwLock<HashMap<Mono, Arc<LaurentTensor>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn generator_coproduct(g: Generator) -> LaurentTensor {
    let [a, b, c, d] = Generator::ALL.map(Mono::generator);
    let one = Laurent::one;
    match g {
        Generator::A => vec![(one(), a, a), (one(), b, c)],
        Generator::B => vec![(one(), a, b), (one(), b, d)],
        Generator::C => vec![(one(), c, a), (one(), d, c)],
        Generator::D => vec![(one(), c, b), (one(), d, d)],
    }
}

fn laurent_tensor_mul(x: &LaurentTensor, y: &LaurentTensor) -> LaurentTensor {
    let mut acc: BTreeMap<(Mono, Mono), Laurent> = BTreeMap::new();
    for (l1, a1, a2) in x {
        for (l2, b1, b2) in y {
            let l12 = l1 * l2;
            let left = mono_mul(*a1, *b1);
            let right = mono_mul(*a2, *b2);
            for (e1, m1) in left.iter() {
                let e1 = &l12 * e1;
                for (e2, m2) in right.iter() {
                    let slot = acc.entry((*m1, *m2)).or_default();
                    *slot = &*slot + &(&e1 * e2);
                }
            }
        }
    }
    acc.into_iter().filter(|(_, l)| !l.is_zero()).map(|((m1, m2), l)| (l, m1, m2)).collect()
}

/// Coproduct of a PBW monomial, built one letter at a time and cached.
fn mono_coproduct(m: Mono) -> Arc<LaurentTensor> {
    if let Some(hit) = coproduct_cache().read().unwrap().get(&m) {
        return hit.clone();
    }
    let value = if m.is_one() {
        vec![(Laurent::one(), Mono::ONE, Mono::ONE)]
    } else {
        let mut letters = m.letters();
        let last = letters.pop().unwrap();
        let mut rest = Mono::ONE;
        for g in letters {
            let g = Mono::generator(g);
            rest = Mono { a: rest.a + g.a, b: rest.b + g.b, c: rest.c + g.c, d: rest.d + g.d };
        }
        laurent_tensor_mul(&mono_coproduct(rest), &generator_coproduct(last))
    };
    let value = Arc::new(value);
    coproduct_cache().write().unwrap().insert(m, value.clone());
    value
}

pub fn coproduct<C: Coeff>(x: &AlgebraElement<C>) -> TensorElement<C> {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        for (l, m1, m2) in mono_coproduct(*m).iter() {
            out.add_term(*m1, *m2, &(C::from_laurent(l) * c));
        }
    }
    out
}

/// `(Δ ⊗ id) Δ x`.
pub fn coproduct_left_iterated<C: Coeff>(x: &AlgebraElement<C>) -> Tensor3<C> {
    let mut out = Tensor3::zero();
    for ((m1, m2), c) in coproduct(x).terms() {
        for (l, n1, n2) in mono_coproduct(*m1).iter() {
            out.add_term((*n1, *n2, *m2), &(C::from_laurent(l) * c));
        }
    }
    out
}

/// `(id ⊗ Δ) Δ x`.
pub fn coproduct_right_iterated<C: Coeff>(x: &AlgebraElement<C>) -> Tensor3<C> {
    let mut out = Tensor3::zero();
    for ((m1, m2), c) in coproduct(x).terms() {
        for (l, n2, n3) in mono_coproduct(*m2).iter() {
            out.add_term((*m1, *n2, *n3), &(C::from_laurent(l) * c));
        }
    }
    out
}

pub fn mono_counit(m: &Mono) -> bool {
    m.b == 0 && m.c == 0
}

pub fn counit<C: Coeff>(x: &AlgebraElement<C>) -> C {
    x.terms().filter(|(m, _)| mono_counit(m)).fold(C::zero(), |acc, (_, c)| acc + c)
}

/// `S(a^r b^s c^t d^u) = a^u (-q c)^t (-q^{-1} b)^s d^r`.
pub fn mono_antipode<C: Coeff>(m: &Mono) -> AlgebraElement<C> {
    let sign = if (m.b + m.c).is_multiple_of(2) { 1 } else { -1 };
    let scale = C::from_i64(sign) * &C::q_pow(m.c as i32 - m.b as i32);
    let prod = mono_mul(Mono::new(m.d, m.b, m.c, 0), Mono::new(0, 0, 0, m.a));
    AlgebraElement::from_terms(prod.iter().map(|(l, n)| (*n, C::from_laurent(l) * &scale)))
}

pub fn antipode<C: Coeff>(x: &AlgebraElement<C>) -> AlgebraElement<C> {
    x.map_linear(mono_antipode)
}

pub fn star<C: Coeff>(x: &AlgebraElement<C>) -> AlgebraElement<C> {
    x.star()
}

/// `τ = * ∘ S`.
pub fn tau<C: Coeff>(x: &AlgebraElement<C>) -> AlgebraElement<C> {
    antipode(x).star()
}

/// `(* ⊗ *)` on a tensor.
pub fn tensor_star<C: Coeff>(x: &TensorElement<C>) -> TensorElement<C> {
    let conj = x.map_coeffs(|c| c.conj());
    conj.map_legs(|m| AlgebraElement::mono(*m).star(), |m| AlgebraElement::mono(*m).star())
}

/// The character `g_α`: `a -> α`, `d -> 1/α`, `b, c -> 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<C> {
    alpha: C,
    alpha_inv: C,
}

impl<C: Coeff> Character<C> {
    /// Rejects `α = 0` and non-real `α`.
    pub fn new(alpha: C) -> Result<Self> {
        let alpha_inv = alpha.inv().ok_or(Error::ZeroAlpha)?;
        if alpha.conj() != alpha {
            return Err(Error::ComplexAlpha(alpha.to_string()));
        }
        Ok(Self { alpha, alpha_inv })
    }

    pub fn alpha(&self) -> &C {
        &self.alpha
    }

    pub fn eval_mono(&self, m: &Mono) -> C {
        if !mono_counit(m) {
            return C::zero();
        }
        if m.a > 0 {
            self.alpha.pow(m.a)
        } else {
            self.alpha_inv.pow(m.d)
        }
    }

    pub fn eval(&self, x: &AlgebraElement<C>) -> C {
        x.terms().fold(C::zero(), |acc, (m, c)| acc + &(self.eval_mono(m) * c))
    }

    /// `Ad_g x = sum g(S(x_(1))) g(x_(3)) x_(2)` over `(Δ ⊗ id) Δ x`.
    pub fn adjoint(&self, x: &AlgebraElement<C>) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero();
        for ((m12, m3), c) in coproduct(x).terms() {
            let right = self.eval_mono(m3);
            if right.is_zero() {
                continue;
            }
            let c = right * c;
            for (l, m1, m2) in mono_coproduct(*m12).iter() {
                let left = self.eval(&mono_antipode(m1));
                if left.is_zero() {
                    continue;
                }
                out.add_term(*m2, &(C::from_laurent(l) * &left * &c));
            }
        }
        out
    }
}

/// Counit axioms, antipode axioms and *-compatibility for one element;
/// returns the name and nonzero defect of the first failing identity.
pub fn hopf_axiom_defects<C: Coeff>(x: &AlgebraElement<C>) -> Vec<(&'static str, String)> {
    let mut out = Vec::new();
    let dx = coproduct(x);
    let eps_id = dx.contract_left(|m| if mono_counit(m) { C::one() } else { C::zero() });
    let id_eps = dx.contract_right(|m| if mono_counit(m) { C::one() } else { C::zero() });
    let unit = AlgebraElement::scalar(counit(x));
    let mut push = |name, diff: String| out.push((name, diff));
    let d = &eps_id - x;
    if !d.is_zero() {
        push("counit-left", d.to_string());
    }
    let d = &id_eps - x;
    if !d.is_zero() {
        push("counit-right", d.to_string());
    }
    let s_id = dx.multiply_legs(mono_antipode, |m| AlgebraElement::mono(*m));
    let d = &s_id - &unit;
    if !d.is_zero() {
        push("antipode-left", d.to_string());
    }
    let id_s = dx.multiply_legs(|m| AlgebraElement::mono(*m), mono_antipode);
    let d = &id_s - &unit;
    if !d.is_zero() {
        push("antipode-right", d.to_string());
    }
    let d = &coproduct_left_iterated(x) - &coproduct_right_iterated(x);
    if !d.is_zero() {
        push("coassociativity", d.to_string());
    }
    let d = &coproduct(&x.star()) - &tensor_star(&dx);
    if !d.is_zero() {
        push("coproduct-star", d.to_string());
    }
    let d = &tau(&tau(x)) - x;
    if !d.is_zero() {
        push("tau-involution", d.to_string());
    }
    out
}
