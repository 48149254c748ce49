//! Verification suites: groups of exact checks run in parallel and
//! assembled into a [`SuiteReport`] in a fixed order.

use std::time::Instant;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coisotropic::{self as co, Coisotropic, Params, QuotientElement, Side};
use crate::error::{Error, Result};
use crate::homogeneous as hs;
use crate::hopf::{self, Character};
use crate::pbw::{word, AlgebraElement, ConfluenceChecker, Generator, Mono};
use crate::report::{CheckRecord, Outcome, Status, SuiteReport};
use crate::scalar::Coeff;
use crate::{random, Element, Rational, Scalar, Tensor};

/// Knobs shared by all suites.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Largest `|n|` for group-likes, expansions and `X_n`.
    pub max_n: u32,
    /// Largest z-degree in coinvariance checks.
    pub degree_cap: u32,
    /// Number of random samples per property.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_n: 5, degree_cap: 3, samples: 100, seed: 20240 }
    }
}

pub const SUITES: [&str; 10] =
    ["hopf", "pbw", "coideal", "grouplike", "expansion", "special-series", "homspace", "doublecoset", "adjoint", "classical-limit"];

/// Suites that only make sense in the special series.
pub fn needs_special(suite: &str) -> bool {
    matches!(suite, "special-series" | "classical-limit")
}

type Job<'a> = (String, Box<dyn Fn() -> Result<Vec<Outcome>> + Send + Sync + 'a>);

fn job<'a>(name: impl Into<String>, f: impl Fn() -> Result<Vec<Outcome>> + Send + Sync + 'a) -> Job<'a> {
    (name.into(), Box::new(f))
}

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<CheckRecord> {
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let out = f().unwrap_or_else(|e| vec![Outcome::fail(name.clone(), e.to_string())]);
            (out, start.elapsed().as_millis() as u64)
        })
        .collect();
    results
        .into_iter()
        .flat_map(|(outs, ms)| {
            outs.into_iter().map(move |o| CheckRecord {
                id: o.id,
                status: if o.passed { Status::Pass } else { Status::Fail },
                witness: o.witness,
                ms,
            })
        })
        .collect()
}

fn rng(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn disc(p: &Params<Scalar>) -> Option<Rational> {
    let d = p.chi_plus.disc();
    (!d.is_zero()).then(|| d.clone())
}

const AXIOMS: [&str; 7] =
    ["counit-left", "counit-right", "antipode-left", "antipode-right", "coassociativity", "coproduct-star", "tau-involution"];

fn hopf_jobs<'a>(p: &'a Params<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for g in Generator::ALL {
        jobs.push(job(format!("axioms-{}", g.symbol()), move || {
            let defects = hopf::hopf_axiom_defects(&Element::generator(g));
            Ok(AXIOMS
                .iter()
                .map(|ax| {
                    let id = format!("{ax}-{}", g.symbol());
                    match defects.iter().find(|(n, _)| n == ax) {
                        Some((_, w)) => Outcome::fail(id, w.clone()),
                        None => Outcome::pass(id),
                    }
                })
                .collect())
        }));
    }
    let mut r = rng(cfg, 1);
    let d = disc(p);
    for i in 0..cfg.samples {
        let x = random::element(&mut r, 3, 3, d.as_ref());
        jobs.push(job(format!("axioms-random-{i:03}"), move || {
            let defects = hopf::hopf_axiom_defects(&x);
            let id = format!("axioms-random-{i:03}");
            Ok(vec![match defects.first() {
                None => Outcome::pass(id),
                Some((n, w)) => Outcome::fail(id, format!("{n}: {w}")),
            }])
        }));
    }
    let g = Character::new(Scalar::from_i64(2)).expect("real nonzero");
    for i in 0..cfg.samples / 2 {
        let x = random::element(&mut r, 2, 2, None);
        let y = random::element(&mut r, 2, 2, None);
        let g = g.clone();
        jobs.push(job(format!("adjoint-random-{i:03}"), move || {
            let mut out = Vec::new();
            let d = &g.adjoint(&x.multiply(&y)) - &g.adjoint(&x).multiply(&g.adjoint(&y));
            out.push(Outcome::zero(format!("adjoint-multiplicative-{i:03}"), d.is_zero(), &d));
            let ad = |m: &Mono| g.adjoint(&AlgebraElement::mono(*m));
            let d: Tensor = &hopf::coproduct(&g.adjoint(&x)) - &hopf::coproduct(&x).map_legs(ad, ad);
            out.push(Outcome::zero(format!("adjoint-coproduct-{i:03}"), d.is_zero(), &d));
            let d = &g.adjoint(&hopf::tau(&x)) - &hopf::tau(&g.adjoint(&x));
            out.push(Outcome::zero(format!("adjoint-tau-{i:03}"), d.is_zero(), &d));
            Ok(out)
        }));
    }
    jobs.push(job("control", || {
        // S'(b) = -q b in place of -q^{-1} b: m(S' ⊗ id)Δb = d b - q b d
        let db = Element::d().multiply(&Element::b());
        let bd = Element::b().multiply(&Element::d()).scale(&Scalar::q_pow(1));
        let d = &db - &bd;
        Ok(vec![Outcome::violated("control-perturbed-antipode", d.is_zero(), &d)])
    }));
    jobs
}

fn pbw_jobs<'a>(cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for n in 0..=4usize {
        jobs.push(job(format!("confluence-length-{n}"), move || {
            let mut checker = ConfluenceChecker::new();
            for w in crate::pbw::all_words(n) {
                let id = format!("confluence-length-{n}");
                match checker.check(&w) {
                    Err(f) => return Ok(vec![Outcome::fail(id, format!("{:?}", f))]),
                    Ok(nf) => {
                        let got = Element::from_terms(nf.iter().map(|(m, l)| (*m, Scalar::from_laurent(l))));
                        let d = &got - &word::<Scalar>(&w);
                        if !d.is_zero() {
                            return Ok(vec![Outcome::fail(id, d.to_string())]);
                        }
                    }
                }
            }
            Ok(vec![Outcome::pass(format!("confluence-length-{n}"))])
        }));
    }
    let mut r = rng(cfg, 2);
    let words: Vec<_> = (0..2 * cfg.samples).map(|_| random::word(&mut r, 6)).collect();
    for (chunk_idx, chunk) in words.chunks(20).enumerate() {
        let chunk = chunk.to_vec();
        jobs.push(job(format!("confluence-random-{chunk_idx}"), move || {
            let mut checker = ConfluenceChecker::new();
            Ok(chunk
                .iter()
                .enumerate()
                .map(|(j, w)| {
                    let id = format!("confluence-random-{:03}", chunk_idx * 20 + j);
                    match checker.check(w) {
                        Err(f) => Outcome::fail(id, format!("{:?}", f)),
                        Ok(nf) => {
                            let got = Element::from_terms(nf.iter().map(|(m, l)| (*m, Scalar::from_laurent(l))));
                            let d = &got - &word::<Scalar>(w);
                            Outcome::zero(id, d.is_zero(), &d)
                        }
                    }
                })
                .collect())
        }));
    }
    for i in 0..cfg.samples {
        let x = random::element(&mut r, 2, 3, None);
        let y = random::element(&mut r, 2, 3, None);
        let z = random::element(&mut r, 2, 3, None);
        jobs.push(job(format!("associativity-{i:03}"), move || {
            let d = &x.multiply(&y).multiply(&z) - &x.multiply(&y.multiply(&z));
            Ok(vec![Outcome::zero(format!("associativity-{i:03}"), d.is_zero(), &d)])
        }));
    }
    jobs.push(job("control", || {
        // ab = q^{-1} ba instead of ab = q ba
        let d = &word::<Scalar>(&[Generator::A, Generator::B]) - &word::<Scalar>(&[Generator::B, Generator::A]).scale(&Scalar::q_pow(-1));
        Ok(vec![Outcome::violated("control-wrong-q-commutation", d.is_zero(), &d)])
    }));
    jobs
}

fn coideal_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let mut jobs =
        vec![job("coideal", move || Ok(co::coideal_check(k))), job("control", move || Ok(vec![co::perturbed_coideal_control(k)]))];
    let mut r = rng(cfg, 3);
    let monos: Vec<_> = (0..cfg.samples).map(|_| random::mono(&mut r, 3)).collect();
    jobs.push(job("ideal", move || {
        Ok(monos
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let y = Element::mono(*m);
                let mut defect = QuotientElement::zero(Side::Right);
                for g in [k.k1(), k.k2()] {
                    for side in [Side::Right, Side::Left] {
                        let x = if side == Side::Right { g.multiply(&y) } else { y.multiply(g) };
                        let red = k.reduce(side, &x);
                        if !red.is_zero() {
                            defect = red;
                        }
                    }
                }
                Outcome::zero(format!("ideal-annihilation-{i:03}"), defect.is_zero(), &defect)
            })
            .collect())
    }));
    let d = disc(k.params());
    for i in 0..cfg.samples / 2 {
        let x = random::element(&mut r, 2, 3, d.as_ref());
        let m1 = random::element(&mut r, 2, 2, d.as_ref());
        let m2 = random::element(&mut r, 2, 2, d.as_ref());
        jobs.push(job(format!("welldefined-{i:03}"), move || {
            let mut out = Vec::new();
            for side in [Side::Right, Side::Left] {
                let y = match side {
                    Side::Right => &k.k1().multiply(&m1) + &k.k2().multiply(&m2),
                    Side::Left => &m1.multiply(k.k1()) + &m2.multiply(k.k2()),
                };
                let base = QuotientElement { side, rep: x.clone() };
                let moved = QuotientElement { side, rep: &x + &y };
                let d = &k.coproduct(&moved) - &k.coproduct(&base);
                out.push(Outcome::zero(format!("welldefined-coproduct-{side}-{i:03}"), d.is_zero(), &d));
                let d = &k.tau(&moved) - &k.tau(&base);
                out.push(Outcome::zero(format!("welldefined-tau-{side}-{i:03}"), d.is_zero(), &d));
            }
            Ok(out)
        }));
    }
    jobs
}

fn grouplike_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let n = cfg.max_n as i64;
    let mut jobs = Vec::new();
    for j in -n..=n {
        jobs.push(job(format!("right-{j}"), move || Ok(co::grouplike_check(k, j, Side::Right))));
    }
    for j in -n.min(3)..=n.min(3) {
        jobs.push(job(format!("left-{j}"), move || Ok(co::grouplike_check(k, j, Side::Left))));
    }
    jobs.push(job("control", move || {
        let x = &k.v(1, Side::Right) + &k.right_reduce(&Element::b());
        let d = &k.coproduct(&x) - &k.tensor(&x, &x);
        Ok(vec![Outcome::violated("control-perturbed-grouplike", d.is_zero(), &d)])
    }));
    jobs
}

fn expansion_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let n = cfg.max_n;
    let mut jobs = Vec::new();
    if k.params().is_special() {
        jobs.push(job("expand-guard", move || {
            Ok(vec![match co::expand_bs(k, 1) {
                Err(Error::VanishingDenominator(_)) => Outcome::pass("expand-vanishing-denominator"),
                other => Outcome::fail("expand-vanishing-denominator", format!("{other:?}")),
            }])
        }));
    } else {
        for s in 0..=n {
            jobs.push(job(format!("expand-{s}"), move || co::expansion_check(k, s)));
        }
    }
    for j in -(n as i64)..=n as i64 {
        jobs.push(job(format!("vbva-{j}"), move || Ok(co::vbva_check(k, j))));
    }
    jobs.push(job("control", move || {
        // sign flipped: t (q chi_+ - q^{-1} chi_-) v_1 · b = v_2 + v_0
        let p = k.params();
        let f = (p.chi_plus.clone() * &Scalar::q_pow(1) - p.chi_minus.clone() * &Scalar::q_pow(-1)).mul_t_pow(1);
        let lhs = k.act_right(&k.v(1, Side::Right), &Element::b())?.scale(&f);
        let d = &lhs - &(&k.v(2, Side::Right) + &k.v(0, Side::Right));
        Ok(vec![Outcome::violated("control-vbva-sign", d.is_zero(), &d)])
    }));
    jobs
}

fn special_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let n = cfg.max_n;
    let mut jobs = Vec::new();
    for j in 1..=n {
        jobs.push(job(format!("x-{j}"), move || co::x_check(k, j)));
    }
    jobs.push(job("rank", move || {
        let r = co::linalg::rank(&co::special_family(k, n)?);
        let id = format!("rank-v0..v{n}-x1..x{n}");
        Ok(vec![if r == 2 * n as usize + 1 { Outcome::pass(id) } else { Outcome::fail(id, format!("rank {r}")) }])
    }));
    jobs.push(job("span", move || {
        let id = format!("span-equality-{n}");
        Ok(vec![if co::span_equality(k, n)? { Outcome::pass(id) } else { Outcome::fail(id, "spans differ") }])
    }));
    jobs.push(job("control", move || {
        let x = &co::x_element(k, 2)? + &k.v(2, Side::Right);
        let v = k.v(2, Side::Right);
        let d = &k.coproduct(&x) - &(&k.tensor(&x, &v) + &k.tensor(&v, &x));
        Ok(vec![Outcome::violated("control-perturbed-x2", d.is_zero(), &d)])
    }));
    jobs
}

fn classical_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> =
        (1..=cfg.max_n.min(2)).map(|n| job(format!("classical-{n}"), move || co::classical_limit_check(k, n))).collect();
    jobs.push(job("control", move || Ok(vec![co::classical_limit_control(k)])));
    jobs
}

fn homspace_jobs<'a>(k: &'a Coisotropic<Scalar>, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let cap = cfg.degree_cap;
    let mut jobs = vec![job("z-structure", move || Ok(hs::verify_z_structure(k)))];
    jobs.push(job("coinvariance", move || Ok(hs::coinvariance_check(k, cap))));
    jobs.push(job("sectors", move || {
        let mut out = Vec::new();
        let z = hs::z_generators(k);
        for n in -2i64..=2 {
            let w = k.w_word(n, Side::Right);
            let id = format!("sector-w{n}");
            out.push(if hs::is_right_sector(k, &w, n) { Outcome::pass(id) } else { Outcome::fail(id, w.to_string()) });
        }
        let w1 = k.w_word(1, Side::Right);
        for (i, zi) in z.all().into_iter().enumerate() {
            let x = zi.multiply(&w1);
            let id = format!("sector-z{}-w1", i + 1);
            out.push(if hs::is_right_sector(k, &x, 1) { Outcome::pass(id) } else { Outcome::fail(id, x.to_string()) });
        }
        Ok(out)
    }));
    jobs.push(job("control", move || {
        let mut out = vec![hs::perturbed_z_control(k)];
        let b = Element::b();
        let d = &k.right_coaction(&b) - &Tensor::pure(&b, &Element::one());
        out.push(Outcome::violated("control-b-not-coinvariant", d.is_zero(), &d));
        Ok(out)
    }));
    jobs
}

fn doublecoset_jobs<'a>(k: &'a Coisotropic<Scalar>) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> = (0..=2).map(|n| job(format!("double-coset-{n}"), move || Ok(hs::double_coset_member(k, n)))).collect();
    jobs.push(job("independence", move || {
        let r = hs::double_coset_rank(k, 2);
        Ok(vec![if r == 3 { Outcome::pass("independence-y0-y2") } else { Outcome::fail("independence-y0-y2", format!("rank {r}")) }])
    }));
    jobs.push(job("control", move || {
        let p = k.params();
        let y = &hs::z_generators(k).double_coset_generator(&p.mu, &p.nu) + &Element::b();
        let d = &k.left_coaction(&y) - &Tensor::pure(&Element::one(), &y);
        Ok(vec![Outcome::violated("control-perturbed-double-coset", d.is_zero(), &d)])
    }));
    jobs
}

fn adjoint_jobs<'a>(k: &'a Coisotropic<Scalar>) -> Vec<Job<'a>> {
    let alphas = [(Scalar::from_i64(2), "2"), (Scalar::from_i64(3).inv().expect("nonzero"), "1/3")];
    let mut jobs = Vec::new();
    for (alpha, label) in alphas {
        let a1 = alpha.clone();
        jobs.push(job(format!("ad-{label}"), move || {
            let r = hs::ad_transport_check(&a1, k)?;
            Ok(r.outcomes.into_iter().map(|o| o.with_prefix(&format!("alpha={label}/"))).collect())
        }));
        let a2 = alpha.clone();
        jobs.push(job(format!("bchar-{label}"), move || {
            let g = hs::homspace_character(&a2, k)?;
            Ok(g.relation_check(k).into_iter().map(|o| o.with_prefix(&format!("alpha={label}/"))).collect())
        }));
        let a3 = alpha.clone();
        jobs.push(job(format!("rescale-{label}"), move || {
            let r = hs::rescale_homspace(&a3, k)?;
            let mut out: Vec<_> = r.outcomes;
            if let Some(l) = &r.lambda {
                let d = l.clone() - a3.clone();
                out.push(Outcome::zero("rescale-lambda-is-alpha", d.is_zero(), &d));
            }
            Ok(out.into_iter().map(|o| o.with_prefix(&format!("alpha={label}/"))).collect())
        }));
        jobs.push(job(format!("control-{label}"), move || {
            Ok(vec![hs::ad_wrong_direction_control(&alpha, k)?.with_prefix(&format!("alpha={label}/"))])
        }));
    }
    let real_shifts = k.params().shifted_mu(1).conj() == k.params().shifted_mu(1);
    if real_shifts {
        for n in -2i64..=2 {
            jobs.push(job(format!("annihilator-{n}"), move || co::annihilator_check(k, n)));
        }
    } else {
        jobs.push(job("annihilator-0", move || co::annihilator_check(k, 0)));
        jobs.push(job("annihilator-guard", move || {
            Ok(vec![match co::annihilator_check(k, 1) {
                Err(Error::NonRealShiftedParameter(1)) => Outcome::pass("annihilator-guard-1"),
                other => Outcome::fail("annihilator-guard-1", format!("{other:?}")),
            }])
        }));
    }
    jobs
}

/// Runs one suite (or `all`) for the given parameters.
pub fn run_suite_with(suite: &str, params: &Params<Scalar>, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if suite == "all" {
        let mut checks = Vec::new();
        for s in SUITES {
            if needs_special(s) && !params.is_special() {
                continue;
            }
            let r = run_suite_with(s, params, cfg)?;
            checks.extend(r.checks.into_iter().map(|mut c| {
                c.id = format!("{s}/{}", c.id);
                c
            }));
        }
        return Ok(SuiteReport::new("all", params.name.clone(), checks));
    }
    if needs_special(suite) && !params.is_special() {
        return Err(Error::NotSpecialSeries);
    }
    let k = Coisotropic::new(params.clone());
    let jobs = match suite {
        "hopf" => hopf_jobs(params, cfg),
        "pbw" => pbw_jobs(cfg),
        "coideal" => coideal_jobs(&k, cfg),
        "grouplike" => grouplike_jobs(&k, cfg),
        "expansion" => expansion_jobs(&k, cfg),
        "special-series" => special_jobs(&k, cfg),
        "classical-limit" => classical_jobs(&k, cfg),
        "homspace" => homspace_jobs(&k, cfg),
        "doublecoset" => doublecoset_jobs(&k),
        "adjoint" => adjoint_jobs(&k),
        other => return Err(Error::Domain(format!("unknown suite `{other}`"))),
    };
    Ok(SuiteReport::new(suite, params.name.clone(), run_jobs(jobs)))
}

pub fn run_suite(suite: &str, preset: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    run_suite_with(suite, &Params::preset(preset)?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { max_n: 2, degree_cap: 2, samples: 6, seed: 1 }
    }

    #[test]
    fn every_suite_passes_small_and_has_a_control() {
        for preset in ["s1", "special"] {
            for s in SUITES {
                if needs_special(s) && preset != "special" {
                    assert!(matches!(run_suite(s, preset, &small()), Err(Error::NotSpecialSeries)));
                    continue;
                }
                let r = run_suite(s, preset, &small()).unwrap();
                let failed: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
                assert!(failed.is_empty(), "{s}@{preset}: {failed:?}");
                let controls: Vec<_> = r.checks.iter().filter(|c| c.id.contains("control-")).collect();
                assert!(!controls.is_empty(), "{s} has no control");
                assert!(controls.iter().all(|c| c.witness.as_deref().is_some_and(|w| !w.is_empty() && w != "0")));
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("coideal", "rplus", &small()).unwrap();
        let b = run_suite("coideal", "rplus", &small()).unwrap();
        let ids = |r: &SuiteReport| r.checks.iter().map(|c| (c.id.clone(), c.status, c.witness.clone())).collect::<Vec<_>>();
        assert_eq!(ids(&a), ids(&b));
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", "s1", &small()).is_err());
        assert!(matches!(run_suite("hopf", "nope", &small()), Err(Error::UnknownPreset(_))));
    }
}
