//! Garside structure of `B_l`: permutation braids and left normal forms.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::word::BraidWord;
use crate::{Error, Result};

/// A simple element (positive permutation braid), identified with its
/// permutation. Indices are zero-based: atom `i` is `σ_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple(Permutation);

impl Simple {
    pub fn identity(n: usize) -> Self {
        Simple(Permutation::identity(n))
    }

    /// The half twist `Δ`.
    pub fn delta(n: usize) -> Self {
        Simple(Permutation::from_images_unchecked((0..n).rev().collect()))
    }

    pub fn atom(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Simple(Permutation::from_images_unchecked(images))
    }

    /// Every permutation is the permutation of exactly one simple element.
    pub fn from_permutation(p: Permutation) -> Self {
        Simple(p)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn strands(&self) -> usize {
        self.0.size()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.0.images().iter().enumerate().all(|(i, &x)| x == n - 1 - i)
    }

    /// Bitmask of atoms `i` with `σ_{i+1} ≼ self`.
    pub fn starting_set(&self) -> u64 {
        let im = self.0.images();
        (0..im.len().saturating_sub(1))
            .filter(|&i| im[i] > im[i + 1])
            .fold(0, |m, i| m | 1 << i)
    }

    /// Bitmask of atoms `i` with `self ≽ σ_{i+1}`.
    pub fn finishing_set(&self) -> u64 {
        let inv = self.0.inverse();
        let im = inv.images();
        (0..im.len().saturating_sub(1))
            .filter(|&i| im[i] > im[i + 1])
            .fold(0, |m, i| m | 1 << i)
    }

    /// `self · σ_{i+1}`; caller guarantees the product is simple.
    fn mul_atom(&mut self, i: usize) {
        let images = self
            .0
            .images()
            .iter()
            .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
            .collect();
        self.0 = Permutation::from_images_unchecked(images);
    }

    /// `σ_{i+1}⁻¹ · self`; caller guarantees `i` is in the starting set.
    fn left_div_atom(&mut self, i: usize) {
        let mut images = self.0.images().to_vec();
        images.swap(i, i + 1);
        self.0 = Permutation::from_images_unchecked(images);
    }

    /// Conjugation by `Δ`, sending `σ_i` to `σ_{l-i}`.
    pub fn flip(&self) -> Self {
        let n = self.strands();
        let im = self.0.images();
        Simple(Permutation::from_images_unchecked(
            (0..n).map(|i| n - 1 - im[n - 1 - i]).collect(),
        ))
    }

    fn flip_pow(&self, e: i64) -> Self {
        if e.rem_euclid(2) == 1 {
            self.flip()
        } else {
            self.clone()
        }
    }

    /// The simple `s` with `self · s = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.strands();
        let inv = self.0.inverse();
        Simple(Permutation::from_images_unchecked(
            inv.images().iter().map(|&x| n - 1 - x).collect(),
        ))
    }

    /// Number of crossings (inversions of the permutation).
    pub fn length(&self) -> usize {
        let im = self.0.images();
        let mut c = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A positive word for this simple element.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(rest.length());
        loop {
            let s = rest.starting_set();
            if s == 0 {
                return out;
            }
            let i = s.trailing_zeros() as usize;
            out.push(i as i32 + 1);
            rest.left_div_atom(i);
        }
    }
}

/// Makes `(a, b)` left-weighted without changing the product `a·b`.
/// Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let mut changed = false;
    loop {
        let movable = b.starting_set() & !a.finishing_set();
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as usize;
        a.mul_atom(i);
        b.left_div_atom(i);
        changed = true;
    }
}

/// Left normal form `Δ^infimum · A_1 ⋯ A_r` with every `A_j` a proper simple
/// factor and each pair `(A_j, A_{j+1})` left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    /// Normal form of `Δ^infimum · s_1 ⋯ s_k` for arbitrary simples.
    pub(crate) fn from_simples<I>(strands: usize, infimum: i64, simples: I) -> Self
    where
        I: IntoIterator<Item = Simple>,
    {
        let mut factors: Vec<Simple> = Vec::new();
        for s in simples {
            factors.push(s);
            let mut j = factors.len() - 1;
            while j > 0 {
                let (head, tail) = factors.split_at_mut(j);
                if !left_weight(&mut head[j - 1], &mut tail[0]) {
                    break;
                }
                j -= 1;
            }
        }
        let deltas = factors.iter().take_while(|s| s.is_delta()).count();
        while factors.last().is_some_and(Simple::is_identity) {
            factors.pop();
        }
        GarsideNormalForm {
            strands,
            infimum: infimum + deltas as i64,
            factors: factors.into_iter().skip(deltas).map(|s| s.0).collect(),
        }
    }

    pub fn simples(&self) -> impl Iterator<Item = Simple> + '_ {
        self.factors.iter().cloned().map(Simple)
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    /// `s⁻¹ · self · s`.
    pub fn conjugate_by_simple(&self, s: &Simple) -> Self {
        let p = self.infimum;
        let head = s.right_complement().flip_pow(p + 1);
        let simples = std::iter::once(head)
            .chain(self.simples())
            .chain(std::iter::once(s.clone()));
        Self::from_simples(self.strands, p - 1, simples)
    }

    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::from_raw(n, Simple::delta(n).to_letters());
        let mut letters = delta.pow(self.infimum).letters().to_vec();
        for f in self.simples() {
            letters.extend(f.to_letters());
        }
        BraidWord::from_raw(n, letters)
    }

    fn sort_key(&self) -> (i64, usize, Vec<&[usize]>) {
        (self.infimum, self.factors.len(), self.factors.iter().map(|f| f.images()).collect())
    }
}

impl PartialOrd for GarsideNormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(infimum, factor count, factor permutation tables)`.
impl Ord for GarsideNormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.strands
            .cmp(&other.strands)
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for factor in self.simples() {
            let letters: Vec<String> = factor.to_letters().iter().map(|x| x.to_string()).collect();
            write!(f, " [{}]", letters.join(" "))?;
        }
        Ok(())
    }
}

/// Left normal form of a braid word.
pub fn left_normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let letters = w.letters();
    // σ_i⁻¹ = (σ_i⁻¹ Δ) Δ⁻¹, and Y Δ⁻¹ = Δ⁻¹ τ(Y): every simple is flipped once
    // for each inverse letter at or after it.
    let negatives = letters.iter().filter(|&&x| x < 0).count() as i64;
    let mut seen_neg = 0i64;
    let mut simples = Vec::with_capacity(letters.len());
    for &x in letters {
        let i = x.unsigned_abs() as usize - 1;
        if x > 0 {
            simples.push((Simple::atom(n, i), seen_neg));
        } else {
            seen_neg += 1;
            simples.push((Simple::atom(n, i).right_complement(), seen_neg - 1));
        }
    }
    let simples = simples.into_iter().map(|(s, before)| s.flip_pow(negatives - before));
    GarsideNormalForm::from_simples(n, -negatives, simples)
}

/// Word problem in `B_l` via normal forms.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    Ok(left_normal_form(a) == left_normal_form(b))
}

/// A braid is periodic iff `w^l` or `w^{l-1}` is a power of the full twist.
pub fn is_periodic(w: &BraidWord) -> bool {
    let l = w.strands() as i64;
    if l <= 1 {
        return true;
    }
    let twist_exp = l * (l - 1);
    let e = w.exponent_sum();
    for power in [l, l - 1] {
        if power == 0 || (e * power) % twist_exp != 0 {
            continue;
        }
        let j = e * power / twist_exp;
        let nf = left_normal_form(&w.pow(power));
        if nf.infimum == 2 * j && nf.factors.is_empty() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::full_twist;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    #[test]
    fn atom_sets() {
        let s1 = Simple::atom(3, 0);
        assert_eq!(s1.starting_set(), 0b01);
        assert_eq!(s1.finishing_set(), 0b01);
        let d = Simple::delta(4);
        assert_eq!(d.starting_set(), 0b111);
        assert_eq!(d.length(), 6);
        assert_eq!(Simple::atom(4, 1).right_complement().length(), 5);
    }

    #[test]
    fn simple_words_have_the_right_permutation() {
        for images in [vec![2, 0, 1], vec![1, 2, 0], vec![2, 1, 0], vec![0, 2, 1]] {
            let p = Permutation::from_images(images).unwrap();
            let s = Simple::from_permutation(p.clone());
            let word = BraidWord::new(3, s.to_letters()).unwrap();
            assert_eq!(word.permutation(), p);
            assert_eq!(word.len(), s.length());
        }
    }

    #[test]
    fn complements() {
        for i in 0..3 {
            let a = Simple::atom(4, i);
            let r = a.right_complement();
            let mut prod = a.to_letters();
            prod.extend(r.to_letters());
            assert!(braids_equal(&w(4, &prod), &w(4, &Simple::delta(4).to_letters())).unwrap());
            let nf = left_normal_form(&w(4, &prod));
            assert_eq!((nf.infimum, nf.factors.len()), (1, 0));
        }
    }

    #[test]
    fn normal_form_examples() {
        let nf = left_normal_form(&w(2, &[1, -1]));
        assert_eq!((nf.infimum, nf.factors.len()), (0, 0));
        assert_eq!(left_normal_form(&w(3, &[1, 2, 1])), left_normal_form(&w(3, &[2, 1, 2])));
        let nf = left_normal_form(&full_twist(3).unwrap());
        assert_eq!((nf.infimum, nf.factors.len()), (2, 0));
        let nf = left_normal_form(&w(3, &[-1]));
        assert_eq!(nf.infimum, -1);
        assert_eq!(nf.factors.len(), 1);
        assert_eq!(left_normal_form(&w(2, &[1, 1, 1])).infimum, 3);
    }

    #[test]
    fn normal_form_recomposes() {
        for letters in [&[1, -2, 1, -2][..], &[3, 2, -3, 2, -1, 2, 1], &[-1, -1, 2, -3, 1]] {
            let x = w(4, letters);
            let nf = left_normal_form(&x);
            assert!(braids_equal(&nf.to_word(), &x).unwrap());
            assert_eq!(left_normal_form(&nf.to_word()), nf);
        }
    }

    #[test]
    fn equality_examples() {
        assert!(braids_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!braids_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(braids_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!braids_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
        assert!(braids_equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }

    #[test]
    fn conjugate_by_simple_matches_words() {
        let x = w(4, &[1, -2, 3, 3, -1, 2]);
        let nf = left_normal_form(&x);
        for images in [vec![1, 0, 2, 3], vec![3, 1, 0, 2], vec![3, 2, 1, 0]] {
            let s = Simple::from_permutation(Permutation::from_images(images).unwrap());
            let sw = BraidWord::new(4, s.to_letters()).unwrap();
            let expected = left_normal_form(&x.conjugate(&sw).unwrap());
            assert_eq!(nf.conjugate_by_simple(&s), expected);
        }
    }

    #[test]
    fn periodicity() {
        assert!(is_periodic(&w(3, &[1, 2])));
        assert!(!is_periodic(&w(3, &[1, -2])));
        assert!(is_periodic(&BraidWord::identity(4)));
        assert!(is_periodic(&w(3, &[1, 2, 1])));
        assert!(is_periodic(&w(2, &[1, 1, 1])));
        assert!(!is_periodic(&w(3, &[1, -2, 1, -2])));
        assert!(!is_periodic(&w(3, &[1])));
    }
}
