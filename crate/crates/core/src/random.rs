//! Seeded random inputs for property checks.

use num_traits::{One, Zero};
use rand::Rng;

use crate::pbw::{AlgebraElement, Generator, Mono};
use crate::scalar::{Coeff, Quadratic};
use crate::Rational;

/// A nonzero Laurent polynomial in `t` with small integer coefficients,
/// optionally plus a multiple of `sqrt(disc)` and divided by `1 + t^k`.
pub fn scalar<R: Rng>(rng: &mut R, disc: Option<&Rational>) -> Quadratic<Rational> {
    let laurent = |rng: &mut R| {
        let mut x = Quadratic::<Rational>::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            x += &Quadratic::from_i64(c).mul_t_pow(rng.gen_range(-3..=3));
        }
        x
    };
    let mut x = laurent(rng);
    while x.is_zero() {
        x = laurent(rng);
    }
    if let Some(d) = disc {
        if rng.gen_bool(0.3) {
            x += &(laurent(rng) * &Quadratic::sqrt_disc(d.clone()));
        }
    }
    if rng.gen_bool(0.2) {
        let den = Quadratic::one() + &Quadratic::t_pow(rng.gen_range(1..=2));
        x = x * &den.inv().expect("1 + t^k is nonzero");
    }
    x
}

/// A PBW monomial of total degree at most `max_degree`.
pub fn mono<R: Rng>(rng: &mut R, max_degree: u32) -> Mono {
    let total = rng.gen_range(0..=max_degree);
    let mut e = [0u32; 4];
    for _ in 0..total {
        e[rng.gen_range(0..4)] += 1;
    }
    if e[0] > 0 && e[3] > 0 {
        if rng.gen_bool(0.5) {
            e[0] = 0;
        } else {
            e[3] = 0;
        }
    }
    Mono::new(e[0], e[1], e[2], e[3])
}

/// A combination of up to `max_terms` monomials of degree at most
/// `max_degree`.
pub fn element<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize, disc: Option<&Rational>) -> AlgebraElement<Quadratic<Rational>> {
    let n = rng.gen_range(1..=max_terms);
    AlgebraElement::from_terms((0..n).map(|_| (mono(rng, max_degree), scalar(rng, disc))))
}

/// A word of length at most `max_len` in `a, b, c, d`.
pub fn word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Generator> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| Generator::ALL[rng.gen_range(0..4)]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_generation_is_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(element(&mut r1, 3, 4, None), element(&mut r2, 3, 4, None));
        }
    }

    #[test]
    fn monomials_respect_degree() {
        let mut r = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(mono(&mut r, 3).degree() <= 3);
            assert!(!scalar(&mut r, None).is_zero());
        }
    }
}
