//! Closed-form products of PBW monomials.
//!
//! With `B = bc` and `Y = b^s c^t`:
//!
//! ```text
//! Y a^m = q^{-m(s+t)} a^m Y        d^m Y = q^{-m(s+t)} Y d^m
//! d^n a^n = prod_{i=1}^n (1 + q^{-(2i-1)} B)
//! a^n d^n = prod_{i=1}^n (1 + q^{2i-1} B)
//! ```
//!
//! The structure constants are integer Laurent polynomials in `t`, so the
//! table is cached once for every coefficient field.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::Mono;
use crate::scalar::Laurent;

type Terms = Arc<Vec<(Laurent, Mono)>>;

fn cache() -> &'static RwLock<HashMap<(Mono, Mono), Terms>> {
    static CACHE: OnceLock<RwLock<HashMap<(Mono, Mono), Terms>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Normal form of `m1 * m2`.
pub fn mono_mul(m1: Mono, m2: Mono) -> Terms {
    if let Some(hit) = cache().read().unwrap().get(&(m1, m2)) {
        return hit.clone();
    }
    let value = Arc::new(compute(m1, m2));
    cache().write().unwrap().insert((m1, m2), value.clone());
    value
}

/// Coefficients of `B^k` in `prod_{i=1}^n (1 + q^{sign (2i-1)} B)`.
fn b_polynomial(n: u32, sign: i32) -> Vec<Laurent> {
    let mut coeffs = vec![Laurent::one()];
    for i in 1..=n as i32 {
        let factor = Laurent::q_pow(sign * (2 * i - 1));
        let mut next = coeffs.clone();
        next.push(Laurent::zero());
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(c * &factor);
        }
        coeffs = next;
    }
    coeffs
}

/// `d^u a^r` in normal form.
fn d_times_a(u: u32, r: u32) -> Vec<(Laurent, Mono)> {
    if r >= u {
        let m = r - u;
        b_polynomial(u, -1)
            .into_iter()
            .enumerate()
            .map(|(k, e)| (&e * &Laurent::q_pow(-2 * k as i32 * m as i32), Mono::new(m, k as u32, k as u32, 0)))
            .collect()
    } else {
        let m = u - r;
        b_polynomial(r, -1)
            .into_iter()
            .enumerate()
            .map(|(k, e)| (&e * &Laurent::q_pow(-2 * k as i32 * m as i32), Mono::new(0, k as u32, k as u32, m)))
            .collect()
    }
}

/// `a^r d^u` in normal form.
fn a_times_d(r: u32, u: u32) -> Vec<(Laurent, Mono)> {
    let (n, a, d) = if r >= u { (u, r - u, 0) } else { (r, 0, u - r) };
    b_polynomial(n, 1).into_iter().enumerate().map(|(k, e)| (e, Mono::new(a, k as u32, k as u32, d))).collect()
}

/// Normal form of the word `a^r b^s c^t d^u` where `a` and `d` may both occur.
fn ordered_word(r: u32, s: u32, t: u32, u: u32, out: &mut BTreeMap<Mono, Laurent>, coeff: &Laurent) {
    let mut push = |m: Mono, l: Laurent| {
        let slot = out.entry(m).or_default();
        *slot = &*slot + &l;
    };
    if r == 0 || u == 0 {
        push(Mono::new(r, s, t, u), coeff.clone());
        return;
    }
    let y = (s + t) as i32;
    // a^r Y = q^{r(s+t)} Y a^r
    let lead = coeff * &Laurent::q_pow(r as i32 * y);
    for (e, z) in a_times_d(r, u) {
        let e = &lead * &e;
        // Y a^m = q^{-m(s+t)} a^m Y
        let e = &e * &Laurent::q_pow(-(z.a as i32) * y);
        push(Mono { a: z.a, b: s + z.b, c: t + z.c, d: z.d }, e);
    }
}

fn compute(m1: Mono, m2: Mono) -> Vec<(Laurent, Mono)> {
    let mut out = BTreeMap::new();
    let y1 = (m1.b + m1.c) as i32;
    let y2 = (m2.b + m2.c) as i32;
    for (e, z) in d_times_a(m1.d, m2.a) {
        // a^{r1} Y1 (a^al B^k d^de) Y2 d^{u2}
        if z.d > 0 {
            let e = &e * &Laurent::q_pow(-(z.d as i32) * y2);
            ordered_word(m1.a, m1.b + m2.b + z.b, m1.c + m2.c + z.c, z.d + m2.d, &mut out, &e);
        } else {
            let e = &e * &Laurent::q_pow(-(z.a as i32) * y1);
            ordered_word(m1.a + z.a, m1.b + m2.b + z.b, m1.c + m2.c + z.c, m2.d, &mut out, &e);
        }
    }
    out.into_iter().filter(|(_, l)| !l.is_zero()).map(|(m, l)| (l, m)).collect()
}
