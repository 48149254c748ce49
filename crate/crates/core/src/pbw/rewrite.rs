//! Letter-level rewriting of free words into PBW normal form.
//!
//! Rules (with `q = t^2`):
//!
//! ```text
//! ba -> q^{-1} ab    ca -> q^{-1} ac    cb -> bc
//! db -> q^{-1} bd    dc -> q^{-1} cd
//! da -> 1 + q^{-1} bc
//! ad -> 1 + q bc
//! a w d -> q^{|w|} w + q^{|w|+1} w bc      (w a nonempty word in b, c)
//! ```
//!
//! The last family is needed because sorted words such as `a c d` contain
//! no adjacent redex yet are not PBW monomials. Every rule lowers
//! `(deg_a * deg_d, inversions)` lexicographically, so rewriting terminates
//! under any strategy.
//!
//! This module is an independent route to the normal form: [`super::mono_mul`]
//! uses closed formulas instead, and the two are compared in tests.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraElement, Generator, Mono};
use crate::scalar::{Coeff, Laurent};

use Generator::{A, B, C, D};

/// A raw product `coeff * g_1 g_2 ... g_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeWord<S> {
    pub coeff: S,
    pub letters: Vec<Generator>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Swap(Generator, Generator),
    DA,
    AD,
    /// `a w d` with `w` in `{b, c}+`.
    ASpanD,
}

/// An occurrence of a rule's left-hand side at `pos..pos + len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub pos: usize,
    pub len: usize,
    pub rule: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    Leftmost,
    Rightmost,
    /// Uniformly random redex, reproducible from the seed.
    Random(u64),
}

fn swap_coeff(x: Generator, y: Generator) -> Option<i32> {
    // power of q picked up by rewriting `x y -> y x`
    match (x, y) {
        (B, A) | (C, A) | (D, B) | (D, C) => Some(-1),
        (C, B) => Some(0),
        _ => None,
    }
}

pub fn redexes(w: &[Generator]) -> Vec<Redex> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let (x, y) = (w[i], w[i + 1]);
        if swap_coeff(x, y).is_some() {
            out.push(Redex { pos: i, len: 2, rule: Rule::Swap(x, y) });
        } else if (x, y) == (D, A) {
            out.push(Redex { pos: i, len: 2, rule: Rule::DA });
        } else if (x, y) == (A, D) {
            out.push(Redex { pos: i, len: 2, rule: Rule::AD });
        }
        if x == A {
            let mut j = i + 1;
            while j < w.len() && matches!(w[j], B | C) {
                j += 1;
            }
            if j > i + 1 && j < w.len() && w[j] == D {
                out.push(Redex { pos: i, len: j - i + 1, rule: Rule::ASpanD });
            }
        }
    }
    out
}

/// Result of rewriting `w` at `r`, as a combination of words.
pub fn apply(w: &[Generator], r: Redex) -> Vec<(Laurent, Vec<Generator>)> {
    let prefix = &w[..r.pos];
    let suffix = &w[r.pos + r.len..];
    let splice = |mid: &[Generator]| -> Vec<Generator> {
        let mut v = Vec::with_capacity(prefix.len() + mid.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(mid);
        v.extend_from_slice(suffix);
        v
    };
    match r.rule {
        Rule::Swap(x, y) => vec![(Laurent::q_pow(swap_coeff(x, y).unwrap()), splice(&[y, x]))],
        Rule::DA => vec![(Laurent::one(), splice(&[])), (Laurent::q_pow(-1), splice(&[B, C]))],
        Rule::AD => vec![(Laurent::one(), splice(&[])), (Laurent::q_pow(1), splice(&[B, C]))],
        Rule::ASpanD => {
            let inner = &w[r.pos + 1..r.pos + r.len - 1];
            let n = inner.len() as i32;
            let mut with_bc = inner.to_vec();
            with_bc.extend_from_slice(&[B, C]);
            vec![(Laurent::q_pow(n), splice(inner)), (Laurent::q_pow(n + 1), splice(&with_bc))]
        }
    }
}

/// The PBW monomial of an irreducible word.
fn irreducible_mono(w: &[Generator]) -> Mono {
    debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
    let count = |g| w.iter().filter(|&&x| x == g).count() as u32;
    Mono::new(count(A), count(B), count(C), count(D))
}

type LaurentElement = BTreeMap<Mono, Laurent>;

fn accumulate(out: &mut LaurentElement, m: Mono, l: &Laurent) {
    let slot = out.entry(m).or_default();
    *slot = &*slot + l;
    if slot.is_zero() {
        out.remove(&m);
    }
}

/// Rewrites a word to normal form following `order`.
pub fn normal_form_with(letters: &[Generator], order: RewriteOrder) -> LaurentElement {
    let mut rng = match order {
        RewriteOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut out = LaurentElement::new();
    let mut work = vec![(Laurent::one(), letters.to_vec())];
    while let Some((coeff, w)) = work.pop() {
        let rs = redexes(&w);
        if rs.is_empty() {
            accumulate(&mut out, irreducible_mono(&w), &coeff);
            continue;
        }
        let r = match (order, rng.as_mut()) {
            (RewriteOrder::Leftmost, _) => rs[0],
            (RewriteOrder::Rightmost, _) => *rs.last().unwrap(),
            (RewriteOrder::Random(_), Some(rng)) => rs[rng.gen_range(0..rs.len())],
            _ => unreachable!(),
        };
        for (l, w2) in apply(&w, r) {
            work.push((&coeff * &l, w2));
        }
    }
    out
}

impl<S: Coeff> FreeWord<S> {
    pub fn new(coeff: S, letters: Vec<Generator>) -> Self {
        Self { coeff, letters }
    }

    /// Leftmost-first reduction to PBW normal form.
    pub fn normalize(&self) -> AlgebraElement<S> {
        self.normalize_with(RewriteOrder::Leftmost)
    }

    pub fn normalize_with(&self, order: RewriteOrder) -> AlgebraElement<S> {
        let nf = normal_form_with(&self.letters, order);
        AlgebraElement::from_terms(nf.iter().map(|(m, l)| (*m, S::from_laurent(l) * &self.coeff)))
    }
}

/// Two reduction paths of the same word that disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfluenceFailure {
    pub word: Vec<Generator>,
    pub first: Redex,
    pub second: Redex,
}

/// Exhaustive check that every reduction order reaches the same normal form.
///
/// The normal form of a word is computed once per applicable redex, each
/// branch recursing on the resulting words; all branches must agree. Results
/// are memoized, so the whole tree of reduction orders is covered without
/// enumerating paths explicitly.
#[derive(Default)]
pub struct ConfluenceChecker {
    memo: HashMap<Vec<Generator>, LaurentElement>,
}

impl ConfluenceChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, w: &[Generator]) -> Result<LaurentElement, ConfluenceFailure> {
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        let rs = redexes(w);
        let result = if rs.is_empty() {
            let mut e = LaurentElement::new();
            e.insert(irreducible_mono(w), Laurent::one());
            e
        } else {
            let mut first: Option<(Redex, LaurentElement)> = None;
            for r in rs {
                let mut branch = LaurentElement::new();
                for (l, w2) in apply(w, r) {
                    for (m, l2) in self.check(&w2)? {
                        accumulate(&mut branch, m, &(&l * &l2));
                    }
                }
                match &first {
                    None => first = Some((r, branch)),
                    Some((r0, e0)) if *e0 != branch => {
                        return Err(ConfluenceFailure { word: w.to_vec(), first: *r0, second: r });
                    }
                    _ => {}
                }
            }
            first.unwrap().1
        };
        self.memo.insert(w.to_vec(), result.clone());
        Ok(result)
    }

    pub fn explored(&self) -> usize {
        self.memo.len()
    }
}

/// All words of exactly length `n`.
pub fn all_words(n: usize) -> Vec<Vec<Generator>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                Generator::ALL.into_iter().map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::word;
    use crate::{Element, Scalar};
    use num_traits::One;

    #[test]
    fn sorted_word_with_a_and_d_is_reducible() {
        let rs = redexes(&[A, C, D]);
        assert_eq!(rs, vec![Redex { pos: 0, len: 3, rule: Rule::ASpanD }]);
        assert!(redexes(&[A, B, C]).is_empty());
        assert!(redexes(&[B, C, D, D]).is_empty());
    }

    #[test]
    fn dad_orders_agree() {
        let w = FreeWord::new(Scalar::one(), vec![D, A, D]);
        let left = w.normalize_with(RewriteOrder::Leftmost);
        let right = w.normalize_with(RewriteOrder::Rightmost);
        assert_eq!(left, right);
        assert_eq!(left, word::<Scalar>(&[D, A, D]));
    }

    #[test]
    fn da_rewrites_to_determinant() {
        let w = FreeWord::new(Scalar::one(), vec![D, A]).normalize();
        let expect = &Element::one() + &Element::mono(Mono::new(0, 1, 1, 0)).scale(&Scalar::q_pow(-1));
        assert_eq!(w, expect);
    }

    #[test]
    fn exhaustive_confluence_short_words() {
        let mut checker = ConfluenceChecker::new();
        for n in 0..=4 {
            for w in all_words(n) {
                checker.check(&w).unwrap();
            }
        }
    }
}
