//! Conjugacy in `B_l` through super summit sets.
//!
//! A braid is first moved into its super summit set by iterated cycling
//! (maximizing the infimum) and decycling (minimizing the supremum). The
//! set itself is then explored by conjugating with simple elements, which
//! connects any two of its members. Exploration is bounded by an element
//! budget; when it runs out the answer is `Unknown`, never a guess.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::garside::{braids_equal, left_normal_form, GarsideNormalForm, Simple};
use super::perm::Permutation;
use super::word::BraidWord;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjugacyVerdict {
    /// `witness⁻¹ · a · witness = b`.
    Conjugate { witness: BraidWord },
    NotConjugate,
    /// The super summit set outgrew the budget before a decision.
    Unknown { explored: usize },
}

fn simple_word(s: &Simple) -> BraidWord {
    BraidWord::from_raw(s.strands(), s.to_letters())
}

fn cat(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.compose(b).expect("same braid group")
}

/// One cycling step. Returns `(c(x), g)` with `c(x) = g⁻¹ x g`.
pub fn cycling(x: &GarsideNormalForm) -> (GarsideNormalForm, BraidWord) {
    let n = x.strands;
    let Some(first) = x.factors.first() else {
        return (x.clone(), BraidWord::identity(n));
    };
    let mut moved = Simple::from_permutation(first.clone());
    if x.infimum.rem_euclid(2) == 1 {
        moved = moved.flip();
    }
    let g = simple_word(&moved);
    let rest = x.simples().skip(1).chain(std::iter::once(moved));
    (GarsideNormalForm::from_simples(n, x.infimum, rest), g)
}

/// One decycling step. Returns `(d(x), g)` with `d(x) = g⁻¹ x g`.
pub fn decycling(x: &GarsideNormalForm) -> (GarsideNormalForm, BraidWord) {
    let n = x.strands;
    let Some(last) = x.factors.last() else {
        return (x.clone(), BraidWord::identity(n));
    };
    let last = Simple::from_permutation(last.clone());
    let g = simple_word(&last).inverse();
    let mut front = last;
    if x.infimum.rem_euclid(2) == 1 {
        front = front.flip();
    }
    let r = x.factors.len();
    let rest = std::iter::once(front).chain(x.simples().take(r - 1));
    (GarsideNormalForm::from_simples(n, x.infimum, rest), g)
}

/// Moves `w` into its super summit set. Returns the summit element and
/// `g` with `summit = g⁻¹ w g`.
fn to_summit(w: &BraidWord) -> (GarsideNormalForm, BraidWord) {
    let n = w.strands();
    let patience = (n * n.saturating_sub(1) / 2).max(1);
    let mut x = left_normal_form(w);
    let mut g = BraidWord::identity(n);

    // Raise the infimum: if it is not maximal, some cycling power within
    // |Δ| steps increases it.
    'inf: loop {
        let (mut y, mut h) = (x.clone(), BraidWord::identity(n));
        for _ in 0..patience {
            let (y2, step) = cycling(&y);
            h = cat(&h, &step);
            y = y2;
            if y.infimum > x.infimum {
                x = y;
                g = cat(&g, &h);
                continue 'inf;
            }
        }
        break;
    }
    'sup: loop {
        let (mut y, mut h) = (x.clone(), BraidWord::identity(n));
        for _ in 0..patience {
            let (y2, step) = decycling(&y);
            h = cat(&h, &step);
            y = y2;
            if y.supremum() < x.supremum() {
                x = y;
                g = cat(&g, &h);
                continue 'sup;
            }
        }
        break;
    }
    (x, g.free_reduce())
}

fn all_simples(n: usize) -> Vec<Simple> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Simple>) {
        if prefix.len() == used.len() {
            out.push(Simple::from_permutation(Permutation::from_images_unchecked(prefix.clone())));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = vec![];
    rec(&mut vec![], &mut vec![false; n], &mut out);
    out.retain(|s| !s.is_identity());
    out
}

/// The (possibly partial) super summit set of a braid.
#[derive(Debug, Clone)]
pub struct SummitSet {
    /// Members paired with `g` such that `member = g⁻¹ w g` for the input `w`.
    pub elements: BTreeMap<GarsideNormalForm, BraidWord>,
    /// False when the budget stopped the exploration early.
    pub complete: bool,
}

impl SummitSet {
    pub fn infimum(&self) -> i64 {
        self.elements.keys().next().map_or(0, |x| x.infimum)
    }

    pub fn supremum(&self) -> i64 {
        self.elements.keys().next().map_or(0, |x| x.supremum())
    }
}

/// Breadth-first closure under conjugation by simples. `stop` is checked
/// on each new member; exploration halts as soon as it returns true.
fn explore(
    w: &BraidWord,
    budget: usize,
    mut stop: impl FnMut(&GarsideNormalForm) -> bool,
) -> (SummitSet, Option<GarsideNormalForm>) {
    let n = w.strands();
    let (start, g0) = to_summit(w);
    let (inf, sup) = (start.infimum, start.supremum());
    let simples = all_simples(n);
    let mut elements = BTreeMap::new();
    let mut queue = VecDeque::new();
    if stop(&start) {
        elements.insert(start.clone(), g0);
        return (SummitSet { elements, complete: false }, Some(start));
    }
    elements.insert(start.clone(), g0);
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for s in &simples {
            let y = x.conjugate_by_simple(s);
            if y.infimum != inf || y.supremum() != sup || elements.contains_key(&y) {
                continue;
            }
            if elements.len() >= budget {
                return (SummitSet { elements, complete: false }, None);
            }
            let g = cat(&elements[&x], &simple_word(s)).free_reduce();
            let hit = stop(&y);
            elements.insert(y.clone(), g);
            if hit {
                return (SummitSet { elements, complete: false }, Some(y));
            }
            queue.push_back(y);
        }
    }
    (SummitSet { elements, complete: true }, None)
}

/// Super summit set of `w`, exploring at most `budget` elements.
pub fn super_summit_set(w: &BraidWord, budget: usize) -> SummitSet {
    explore(w, budget.max(1), |_| false).0
}

/// Decides whether `a` and `b` are conjugate, within `budget` super summit
/// elements.
pub fn conjugacy_test(a: &BraidWord, b: &BraidWord, budget: usize) -> Result<ConjugacyVerdict> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    if a.exponent_sum() != b.exponent_sum()
        || a.permutation().cycle_type() != b.permutation().cycle_type()
    {
        return Ok(ConjugacyVerdict::NotConjugate);
    }
    let (target, gb) = to_summit(b);
    let (set, found) = explore(a, budget.max(1), |x| *x == target);
    if set.infimum() != target.infimum || set.supremum() != target.supremum() {
        return Ok(ConjugacyVerdict::NotConjugate);
    }
    match found {
        Some(x) => {
            let witness = cat(&set.elements[&x], &gb.inverse()).free_reduce();
            debug_assert!(braids_equal(&a.conjugate(&witness)?, b)?);
            Ok(ConjugacyVerdict::Conjugate { witness })
        }
        None if set.complete => Ok(ConjugacyVerdict::NotConjugate),
        None => Ok(ConjugacyVerdict::Unknown { explored: set.elements.len() }),
    }
}

/// Least normal form in the super summit set, as a conjugacy-class label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRepresentative {
    pub word: BraidWord,
    pub normal_form: GarsideNormalForm,
    /// False when the budget ran out; the representative is then only the
    /// least element among those found.
    pub complete: bool,
}

pub fn canonical_representative(w: &BraidWord, budget: usize) -> CanonicalRepresentative {
    let set = super_summit_set(w, budget);
    let normal_form = set.elements.keys().next().expect("summit set is nonempty").clone();
    CanonicalRepresentative { word: normal_form.to_word(), normal_form, complete: set.complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::full_twist;
    use crate::DEFAULT_BUDGET;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    fn check_witness(a: &BraidWord, b: &BraidWord) {
        match conjugacy_test(a, b, DEFAULT_BUDGET).unwrap() {
            ConjugacyVerdict::Conjugate { witness } => {
                assert!(braids_equal(&a.conjugate(&witness).unwrap(), b).unwrap())
            }
            other => panic!("{a} ~ {b}: {other:?}"),
        }
    }

    #[test]
    fn cycling_and_decycling_are_conjugations() {
        let x = w(4, &[1, -2, 3, 3, -1, 2, 2, -3]);
        let nf = left_normal_form(&x);
        let (c, g) = cycling(&nf);
        assert_eq!(left_normal_form(&x.conjugate(&g).unwrap()), c);
        let (d, g) = decycling(&nf);
        assert_eq!(left_normal_form(&x.conjugate(&g).unwrap()), d);
    }

    #[test]
    fn summit_conjugator() {
        let x = w(4, &[-1, 2, 2, 1, -3, 2, 1, -2]);
        let (s, g) = to_summit(&x);
        assert_eq!(left_normal_form(&x.conjugate(&g).unwrap()), s);
        let set = super_summit_set(&x, DEFAULT_BUDGET);
        assert!(set.complete);
        for (y, g) in &set.elements {
            assert_eq!(&left_normal_form(&x.conjugate(g).unwrap()), y);
        }
    }

    #[test]
    fn conjugacy_examples() {
        check_witness(&w(3, &[1]), &w(3, &[2]));
        assert_eq!(
            conjugacy_test(&w(2, &[1, 1, 1]), &w(2, &[-1, -1, -1]), 100).unwrap(),
            ConjugacyVerdict::NotConjugate
        );
        let x = w(3, &[1, -2, 1, -2]);
        assert_eq!(
            conjugacy_test(&x, &x, 100).unwrap(),
            ConjugacyVerdict::Conjugate { witness: BraidWord::identity(3) }
        );
        check_witness(&x, &x.conjugate(&w(3, &[2, 2, -1])).unwrap());
        check_witness(&w(4, &[3, 2, -3, 2, -1, 2, 1]), &w(4, &[2, -1, 2, 1, 3, 2, -3]));
        assert!(conjugacy_test(&w(3, &[1]), &w(4, &[1]), 10).is_err());
    }

    #[test]
    fn non_conjugate_with_equal_cheap_invariants() {
        // σ1σ2⁻¹ and σ1⁻¹σ2: same exponent sum and permutation type.
        let a = w(3, &[1, 1, -2]);
        let b = w(3, &[1, -2, -2]);
        assert_eq!(conjugacy_test(&a, &b, DEFAULT_BUDGET).unwrap(), ConjugacyVerdict::NotConjugate);
        let a = w(3, &[1, 2]);
        let b = w(3, &[1, 1]);
        assert_eq!(conjugacy_test(&a, &b, DEFAULT_BUDGET).unwrap(), ConjugacyVerdict::NotConjugate);
    }

    #[test]
    fn tiny_budget_is_unknown() {
        let a = w(4, &[1, -2, 3, -2, 1, 3]);
        let b = a.conjugate(&w(4, &[2, 3, -1, 2])).unwrap();
        match conjugacy_test(&a, &b, 1).unwrap() {
            ConjugacyVerdict::Unknown { .. } | ConjugacyVerdict::Conjugate { .. } => {}
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn canonical_representatives() {
        let r1 = canonical_representative(&w(3, &[1]), DEFAULT_BUDGET);
        let r2 = canonical_representative(&w(3, &[2]), DEFAULT_BUDGET);
        assert_eq!(r1, r2);
        assert!(r1.complete);
        assert_eq!(canonical_representative(&BraidWord::identity(3), 10).word, BraidWord::identity(3));
        assert_eq!(canonical_representative(&w(2, &[1, 1, 1]), 10).word, w(2, &[1, 1, 1]));
        let tw = full_twist(3).unwrap();
        assert_eq!(canonical_representative(&tw, 10).normal_form.infimum, 2);
    }
}
