//! The quantum homogeneous spaces of right coinvariants, generated by
//! `z1, z2, z3`, and their line-bundle sectors.

use crate::coisotropic::linalg::{rank, Echelon};
use crate::coisotropic::{coideal_generators, Coisotropic, Side};
use crate::error::{Error, Result};
use crate::hopf::{coproduct, tau, Character, TensorElement};
use crate::pbw::{AlgebraElement, Mono};
use crate::report::Outcome;
use crate::scalar::Coeff;

/// ```text
/// z1 = t^{-1}(ac + nu bd) + 2 mu bc
/// z2 = c^2 + nu d^2 + 2 mu t^{-1} cd
/// z3 = a^2 + nu b^2 + 2 mu t^{-1} ab
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct ZGenerators<C> {
    pub z1: AlgebraElement<C>,
    pub z2: AlgebraElement<C>,
    pub z3: AlgebraElement<C>,
}

fn m(a: u32, b: u32, c: u32, d: u32) -> Mono {
    Mono::new(a, b, c, d)
}

fn el<C: Coeff>(terms: &[(Mono, C)]) -> AlgebraElement<C> {
    AlgebraElement::from_terms(terms.iter().cloned())
}

impl<C: Coeff> ZGenerators<C> {
    pub fn new(mu: &C, nu: &C) -> Self {
        let two_mu = mu.clone() * &C::from_i64(2);
        let tinv = C::t_pow(-1);
        let z1 = el(&[(m(1, 0, 1, 0), tinv.clone()), (m(0, 1, 0, 1), nu.clone() * &tinv), (m(0, 1, 1, 0), two_mu.clone())]);
        let z2 = el(&[(m(0, 0, 2, 0), C::one()), (m(0, 0, 0, 2), nu.clone()), (m(0, 0, 1, 1), two_mu.clone() * &tinv)]);
        let z3 = el(&[(m(2, 0, 0, 0), C::one()), (m(0, 2, 0, 0), nu.clone()), (m(1, 1, 0, 0), two_mu * &tinv)]);
        Self { z1, z2, z3 }
    }

    pub fn all(&self) -> [&AlgebraElement<C>; 3] {
        [&self.z1, &self.z2, &self.z3]
    }

    /// The double-coset generator `z2 + nu z3 - 2 mu z1`.
    pub fn double_coset_generator(&self, mu: &C, nu: &C) -> AlgebraElement<C> {
        &(&self.z2 + &self.z3.scale(nu)) - &self.z1.scale(&(mu.clone() * &C::from_i64(2)))
    }
}

pub fn z_generators<C: Coeff>(k: &Coisotropic<C>) -> ZGenerators<C> {
    ZGenerators::new(&k.params().mu, &k.params().nu)
}

fn check_relations<C: Coeff>(z: &ZGenerators<C>, mu: &C, nu: &C) -> Vec<Outcome> {
    let (z1, z2, z3) = (&z.z1, &z.z2, &z.z3);
    let q2 = C::q_pow(2);
    let mut out = Vec::new();
    let d = &z1.multiply(z2) - &z2.multiply(z1).scale(&q2);
    out.push(Outcome::zero("z-comm-12", d.is_zero(), &d));
    let d = &z1.multiply(z3) - &z3.multiply(z1).scale(&C::q_pow(-2));
    out.push(Outcome::zero("z-comm-13", d.is_zero(), &d));
    let rhs =
        &(&AlgebraElement::scalar(nu.clone()) + &z1.multiply(z1).scale(&q2)) + &z1.scale(&(mu.clone() * &C::from_i64(2) * &C::q_pow(1)));
    let d = &z3.multiply(z2) - &rhs;
    out.push(Outcome::zero("z-quad", d.is_zero(), &d));
    out
}

/// The three displayed coproducts:
///
/// ```text
/// Δz1 = (1 + (q + q^{-1}) bc) ⊗ z1 + t^{-1} bd ⊗ z2 + t^{-1} ac ⊗ z3 + 2 mu bc ⊗ 1
/// Δz2 = t^{-1}(q + q^{-1}) cd ⊗ z1 + d^2 ⊗ z2 + c^2 ⊗ z3 + 2 mu t^{-1} cd ⊗ 1
/// Δz3 = t^{-1}(q + q^{-1}) ab ⊗ z1 + b^2 ⊗ z2 + a^2 ⊗ z3 + 2 mu t^{-1} ab ⊗ 1
/// ```
fn displayed_coproducts<C: Coeff>(z: &ZGenerators<C>, mu: &C) -> [TensorElement<C>; 3] {
    let tinv = C::t_pow(-1);
    let qsum = C::q_pow(1) + &C::q_pow(-1);
    let two_mu = mu.clone() * &C::from_i64(2);
    let one = AlgebraElement::one();
    let mono = |a, b, c, d| AlgebraElement::<C>::mono(m(a, b, c, d));
    let pure = TensorElement::pure;
    let sum = |ts: Vec<TensorElement<C>>| ts.iter().fold(TensorElement::zero(), |acc, t| &acc + t);
    let one_bc = &one + &mono(0, 1, 1, 0).scale(&qsum);
    let dz1 = sum(vec![
        pure(&one_bc, &z.z1),
        pure(&mono(0, 1, 0, 1).scale(&tinv), &z.z2),
        pure(&mono(1, 0, 1, 0).scale(&tinv), &z.z3),
        pure(&mono(0, 1, 1, 0).scale(&two_mu), &one),
    ]);
    let dz2 = sum(vec![
        pure(&mono(0, 0, 1, 1).scale(&(qsum.clone() * &tinv)), &z.z1),
        pure(&mono(0, 0, 0, 2), &z.z2),
        pure(&mono(0, 0, 2, 0), &z.z3),
        pure(&mono(0, 0, 1, 1).scale(&(two_mu.clone() * &tinv)), &one),
    ]);
    let dz3 = sum(vec![
        pure(&mono(1, 1, 0, 0).scale(&(qsum * &tinv)), &z.z1),
        pure(&mono(0, 2, 0, 0), &z.z2),
        pure(&mono(2, 0, 0, 0), &z.z3),
        pure(&mono(1, 1, 0, 0).scale(&(two_mu * &tinv)), &one),
    ]);
    [dz1, dz2, dz3]
}

/// The three relations, the three displayed coproducts and `z_i* = z_i`.
pub fn verify_z_structure<C: Coeff>(k: &Coisotropic<C>) -> Vec<Outcome> {
    let p = k.params();
    let z = z_generators(k);
    let mut out = check_relations(&z, &p.mu, &p.nu);
    for (i, (zi, expect)) in z.all().into_iter().zip(displayed_coproducts(&z, &p.mu)).enumerate() {
        let d = &coproduct(zi) - &expect;
        out.push(Outcome::zero(format!("coproduct-z{}", i + 1), d.is_zero(), &d));
    }
    for (i, zi) in z.all().into_iter().enumerate() {
        let d = &zi.star() - zi;
        out.push(Outcome::zero(format!("reality-z{}", i + 1), d.is_zero(), &d));
    }
    out
}

/// Negative control: `z2 + b` in place of `z2` breaks `z1 z2 = q^2 z2 z1`.
pub fn perturbed_z_control<C: Coeff>(k: &Coisotropic<C>) -> Outcome {
    let p = k.params();
    let mut z = z_generators(k);
    z.z2 = &z.z2 + &AlgebraElement::b();
    let comm = &check_relations(&z, &p.mu, &p.nu)[0];
    Outcome::violated("control-perturbed-z2", comm.passed, &comm.witness.clone().unwrap_or_default())
}

/// `(id ⊗ r) Δx = x ⊗ v_j`.
pub fn is_right_sector<C: Coeff>(k: &Coisotropic<C>, x: &AlgebraElement<C>, j: i64) -> bool {
    k.right_coaction(x) == TensorElement::pure(x, &k.v(j, Side::Right).rep)
}

/// `(ℓ ⊗ id) Δx = ṽ_j ⊗ x`, with `ṽ_j` the class of the reversed product.
pub fn is_left_sector<C: Coeff>(k: &Coisotropic<C>, x: &AlgebraElement<C>, j: i64) -> bool {
    k.left_coaction(x) == TensorElement::pure(&k.v(j, Side::Left).rep, x)
}

fn sector_outcome<C: Coeff>(id: String, k: &Coisotropic<C>, x: &AlgebraElement<C>, j: i64, side: Side) -> Outcome {
    let (got, expect) = match side {
        Side::Right => (k.right_coaction(x), TensorElement::pure(x, &k.v(j, Side::Right).rep)),
        Side::Left => (k.left_coaction(x), TensorElement::pure(&k.v(j, Side::Left).rep, x)),
    };
    let d = &got - &expect;
    Outcome::zero(id, d.is_zero(), &d)
}

/// All words in `z1, z2, z3` of length at most `max_degree`.
pub fn z_monomials<C: Coeff>(z: &ZGenerators<C>, max_degree: u32) -> Vec<(String, AlgebraElement<C>)> {
    let mut layer = vec![(String::from("1"), AlgebraElement::one())];
    let mut out = layer.clone();
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for (name, x) in &layer {
            for (i, zi) in z.all().into_iter().enumerate() {
                let label = if name == "1" { format!("z{}", i + 1) } else { format!("{name}z{}", i + 1) };
                next.push((label, x.multiply(zi)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Right coinvariance of every z-word up to `max_degree`.
pub fn coinvariance_check<C: Coeff>(k: &Coisotropic<C>, max_degree: u32) -> Vec<Outcome> {
    z_monomials(&z_generators(k), max_degree)
        .into_iter()
        .map(|(name, x)| sector_outcome(format!("coinvariant-{name}"), k, &x, 0, Side::Right))
        .collect()
}

/// `y^n` with `y = z2 + nu z3 - 2 mu z1` is left and right coinvariant.
pub fn double_coset_member<C: Coeff>(k: &Coisotropic<C>, n: u32) -> Vec<Outcome> {
    let p = k.params();
    let y = z_generators(k).double_coset_generator(&p.mu, &p.nu).pow(n);
    vec![
        sector_outcome(format!("double-coset-right-{n}"), k, &y, 0, Side::Right),
        sector_outcome(format!("double-coset-left-{n}"), k, &y, 0, Side::Left),
    ]
}

/// Rank of `{y^0, ..., y^n}`.
pub fn double_coset_rank<C: Coeff>(k: &Coisotropic<C>, n: u32) -> usize {
    let p = k.params();
    let y = z_generators(k).double_coset_generator(&p.mu, &p.nu);
    let powers: Vec<_> = (0..=n).map(|i| y.pow(i)).collect();
    rank(&powers)
}

/// The character of the homogeneous space: `g(z1) = 0`, `g(z2) = alpha nu`,
/// `g(z3) = 1/alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomspaceCharacter<C> {
    pub alpha: C,
    pub values: [C; 3],
}

pub fn homspace_character<C: Coeff>(alpha: &C, k: &Coisotropic<C>) -> Result<HomspaceCharacter<C>> {
    let inv = alpha.inv().ok_or(Error::ZeroAlpha)?;
    if alpha.conj() != *alpha {
        return Err(Error::ComplexAlpha(alpha.to_string()));
    }
    let values = [C::zero(), alpha.clone() * &k.params().nu, inv];
    Ok(HomspaceCharacter { alpha: alpha.clone(), values })
}

impl<C: Coeff> HomspaceCharacter<C> {
    /// The three relations after substituting the character values.
    pub fn relation_check(&self, k: &Coisotropic<C>) -> Vec<Outcome> {
        let p = k.params();
        let [g1, g2, g3] = &self.values;
        let q2 = C::q_pow(2);
        let r1 = g1.clone() * g2 - q2.clone() * g2 * g1;
        let r2 = g1.clone() * g3 - C::q_pow(-2) * g3 * g1;
        let r3 = g3.clone() * g2 - (p.nu.clone() + &(q2 * g1 * g1) + &(p.mu.clone() * &C::from_i64(2) * &C::q_pow(1) * g1));
        vec![
            Outcome::zero("bchar-comm-12", r1.is_zero(), &r1),
            Outcome::zero("bchar-comm-13", r2.is_zero(), &r2),
            Outcome::zero("bchar-quad", r3.is_zero(), &r3),
        ]
    }

    /// `(id ⊗ g) Δx` for `x` whose right legs lie in `span{1, z1, z2, z3}`.
    /// Right legs are expressed in that span by exact elimination.
    pub fn apply_right(&self, z: &ZGenerators<C>, x: &AlgebraElement<C>) -> Option<AlgebraElement<C>> {
        let basis = vec![AlgebraElement::one(), z.z1.clone(), z.z2.clone(), z.z3.clone()];
        let e = Echelon::new(&basis);
        let mut legs: std::collections::BTreeMap<Mono, AlgebraElement<C>> = Default::default();
        for ((m1, m2), c) in coproduct(x).terms() {
            legs.entry(*m1).or_insert_with(AlgebraElement::zero).add_term(*m2, c);
        }
        let mut out = AlgebraElement::zero();
        for (m1, leg) in legs {
            let coords = e.solve(&leg)?;
            let g = coords[1..].iter().zip(&self.values).fold(coords[0].clone(), |acc, (c, v)| acc + &(c.clone() * v));
            out.add_term(m1, &g);
        }
        Some(out)
    }
}

/// Result of rescaling by a homogeneous-space character.
#[derive(Clone, Debug)]
pub struct Rescale<C> {
    pub outcomes: Vec<Outcome>,
    /// `f_i` with `(id ⊗ g) Δ z_i = f_i z_i[mu', nu']`.
    pub factors: Vec<C>,
    pub mu_prime: C,
    pub nu_prime: C,
    /// `λ` with `(mu', nu') = (λ mu, λ^2 nu)`; only determined when `mu != 0`.
    pub lambda: Option<C>,
}

/// Computes `(id ⊗ g) Δ z_i`, reads off `(mu', nu')` and the factor from
/// the image of `z3`, then checks every image against `f_i z_i[mu', nu']`
/// and the family relation `nu' mu^2 = nu mu'^2`.
pub fn rescale_homspace<C: Coeff>(alpha: &C, k: &Coisotropic<C>) -> Result<Rescale<C>> {
    let g = homspace_character(alpha, k)?;
    let p = k.params();
    let z = z_generators(k);
    let images: Vec<_> = z
        .all()
        .into_iter()
        .map(|zi| g.apply_right(&z, zi).ok_or_else(|| Error::Domain("right legs outside span{1, z_i}".into())))
        .collect::<Result<_>>()?;
    let f3 = images[2].coeff(&m(2, 0, 0, 0));
    let f3_inv = f3.inv().ok_or_else(|| Error::Domain("image of z3 has no a^2 term".into()))?;
    let nu_prime = images[2].coeff(&m(0, 2, 0, 0)) * &f3_inv;
    let half_t = C::from_i64(2).inv().expect("2 invertible").mul_t_pow(1);
    let mu_prime = images[2].coeff(&m(1, 1, 0, 0)) * &f3_inv * &half_t;
    let zp = ZGenerators::new(&mu_prime, &nu_prime);
    let mut outcomes = Vec::new();
    let mut factors = Vec::new();
    for (i, (img, target)) in images.iter().zip(zp.all()).enumerate() {
        let lead = *target.terms().next().expect("nonzero generator").0;
        let f = img.coeff(&lead) * &target.coeff(&lead).inv().expect("nonzero");
        let d = img - &target.scale(&f);
        outcomes.push(Outcome::zero(format!("rescale-z{}", i + 1), d.is_zero(), &d));
        factors.push(f);
    }
    let fam = nu_prime.clone() * &p.mu * &p.mu - p.nu.clone() * &mu_prime * &mu_prime;
    outcomes.push(Outcome::zero("rescale-family", fam.is_zero(), &fam));
    let consistent = factors.windows(2).all(|w| w[0] == w[1]);
    outcomes.push(if consistent {
        Outcome::pass("rescale-factors-agree")
    } else {
        Outcome::fail("rescale-factors-agree", format!("{:?}", factors.iter().map(|f| f.to_string()).collect::<Vec<_>>()))
    });
    let lambda = p.mu.inv().map(|inv| mu_prime.clone() * &inv);
    if let Some(l) = &lambda {
        let d = l.clone() * l * &p.nu - nu_prime.clone();
        outcomes.push(Outcome::zero("rescale-lambda-squared", d.is_zero(), &d));
    }
    Ok(Rescale { outcomes, factors, mu_prime, nu_prime, lambda })
}

/// Result of transporting the coideal by `Ad_{g_alpha}`.
#[derive(Clone, Debug)]
pub struct AdTransport<C> {
    pub outcomes: Vec<Outcome>,
    /// Coordinates of `Ad(k1)` and `Ad(k2)` in the generators of
    /// `C_{mu/alpha^2, nu/alpha^4}`.
    pub coordinates: Vec<Vec<C>>,
}

fn ad_target<C: Coeff>(alpha: &C, mu: &C, nu: &C, mu_pow: u32, nu_pow: u32) -> (AlgebraElement<C>, AlgebraElement<C>) {
    let inv = alpha.inv().expect("checked nonzero");
    coideal_generators(&(mu.clone() * &inv.pow(mu_pow)), &(nu.clone() * &inv.pow(nu_pow)))
}

/// `Ad_{g_alpha}(k_i) ∈ span(k1', k2')` for `C_{mu/alpha^2, nu/alpha^4}` and
/// `Ad ∘ τ = τ ∘ Ad` on `k1, k2`.
pub fn ad_transport_check<C: Coeff>(alpha: &C, k: &Coisotropic<C>) -> Result<AdTransport<C>> {
    let g = Character::new(alpha.clone())?;
    let p = k.params();
    let (t1, t2) = ad_target(alpha, &p.mu, &p.nu, 2, 4);
    let e = Echelon::new(&[t1, t2]);
    let mut outcomes = Vec::new();
    let mut coordinates = Vec::new();
    for (name, gen) in [("k1", k.k1()), ("k2", k.k2())] {
        let image = g.adjoint(gen);
        match e.solve(&image) {
            Some(c) => {
                outcomes.push(Outcome::pass(format!("ad-{name}")));
                coordinates.push(c);
            }
            None => outcomes.push(Outcome::fail(format!("ad-{name}"), image.to_string())),
        }
        let d = &g.adjoint(&tau(gen)) - &tau(&image);
        outcomes.push(Outcome::zero(format!("ad-tau-{name}"), d.is_zero(), &d));
    }
    Ok(AdTransport { outcomes, coordinates })
}

/// Negative control: the image of `k2` is not in `C_{mu/alpha, nu/alpha^2}`.
pub fn ad_wrong_direction_control<C: Coeff>(alpha: &C, k: &Coisotropic<C>) -> Result<Outcome> {
    let g = Character::new(alpha.clone())?;
    let p = k.params();
    let (t1, t2) = ad_target(alpha, &p.mu, &p.nu, 1, 2);
    let image = g.adjoint(k.k2());
    let e = Echelon::new(&[t1, t2]);
    Ok(Outcome::violated("control-ad-wrong-family", e.contains(&image), &image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coisotropic::Params;
    use crate::hopf::counit;
    use crate::{Element, Rational, Scalar};

    fn ctx(name: &str) -> Coisotropic<Scalar> {
        Coisotropic::new(Params::preset(name).unwrap())
    }

    fn all_pass(o: &[Outcome]) {
        for x in o {
            assert!(x.passed, "{} failed: {:?}", x.id, x.witness);
        }
    }

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::from_base(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn generators_at_s1() {
        let k = ctx("s1");
        let z = z_generators(&k);
        assert_eq!(z.z3, &Element::mono(m(2, 0, 0, 0)) + &Element::mono(m(0, 2, 0, 0)));
        assert_eq!(counit(&z.z3), Scalar::from_i64(1));
        assert!(counit(&z.z1).is_zero());
        assert_eq!(counit(&z.z2), k.params().nu);
    }

    #[test]
    fn structure_at_presets() {
        for name in Params::PRESETS {
            let k = ctx(name);
            all_pass(&verify_z_structure(&k));
            assert!(perturbed_z_control(&k).passed);
        }
    }

    #[test]
    fn sectors() {
        let k = ctx("rplus");
        let z = z_generators(&k);
        for zi in z.all() {
            assert!(is_right_sector(&k, zi, 0));
        }
        assert!(is_right_sector(&k, &Element::one(), 0));
        assert!(!is_right_sector(&k, &Element::b(), 0));
        assert!(is_left_sector(&k, &Element::one(), 0));
        let p = k.params();
        assert!(is_left_sector(&k, &z.double_coset_generator(&p.mu, &p.nu), 0));
        assert!(!is_left_sector(&k, &Element::c(), 0));
    }

    #[test]
    fn double_coset() {
        let k = ctx("special");
        for n in 0..=2 {
            all_pass(&double_coset_member(&k, n));
        }
        assert_eq!(double_coset_rank(&k, 2), 3);
    }

    #[test]
    fn character_values() {
        let k = ctx("special");
        let g = homspace_character(&Scalar::from_i64(1), &k).unwrap();
        assert_eq!(g.values, [Scalar::zero(), Scalar::from_i64(1), Scalar::from_i64(1)]);
        all_pass(&g.relation_check(&k));
        assert!(matches!(homspace_character(&Scalar::zero(), &k), Err(Error::ZeroAlpha)));
    }

    #[test]
    fn rescale_by_alpha() {
        let k = ctx("rplus");
        let alpha = rat(2, 1);
        let r = rescale_homspace(&alpha, &k).unwrap();
        all_pass(&r.outcomes);
        assert_eq!(r.factors, vec![rat(1, 2); 3]);
        assert_eq!(r.lambda, Some(alpha.clone()));
        assert_eq!(r.mu_prime, k.params().mu.clone() * &alpha);
        let one = rescale_homspace(&Scalar::from_i64(1), &k).unwrap();
        assert_eq!(one.factors, vec![Scalar::from_i64(1); 3]);
    }

    #[test]
    fn ad_transport() {
        for name in Params::PRESETS {
            let k = ctx(name);
            for alpha in [rat(2, 1), rat(1, 3)] {
                let r = ad_transport_check(&alpha, &k).unwrap();
                all_pass(&r.outcomes);
                assert_eq!(r.coordinates[0], vec![Scalar::from_i64(1), Scalar::zero()]);
                assert_eq!(r.coordinates[1], vec![Scalar::zero(), alpha.clone() * &alpha]);
                assert!(ad_wrong_direction_control(&alpha, &k).unwrap().passed);
            }
        }
    }

    use num_traits::Zero;
}
