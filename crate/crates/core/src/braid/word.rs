use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::{Error, Result};

/// A word in the Artin generators of `B_l`.
///
/// The strand count is explicit: the same letters denote different braids
/// in different braid groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i64>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl BraidWord {
    pub fn new<I>(strands: usize, letters: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        let letters = letters
            .into_iter()
            .map(|x| {
                let x: i64 = x.into();
                if x == 0 || x.unsigned_abs() >= strands as u64 {
                    Err(Error::LetterOutOfRange { letter: x, strands })
                } else {
                    Ok(x as i32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word without validating the letters. Callers guarantee
    /// `1 <= |letter| < strands`.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&x| x != 0 && (x.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: vec![] }
    }

    /// The generator `σ_i^{sign}`.
    pub fn generator(strands: usize, i: usize, positive: bool) -> Result<Self> {
        let letter = if positive { i as i64 } else { -(i as i64) };
        Self::new(strands, [letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|&x| -x).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// `g⁻¹ · self · g`, without any normalization.
    pub fn conjugate(&self, g: &Self) -> Result<Self> {
        g.inverse().compose(self)?.compose(g)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent pairs `i, -i` until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Free reduction followed by cancellation between the two ends of the
    /// word. The result is a conjugate of `self`.
    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.free_reduce().letters;
        let (mut lo, mut hi) = (0usize, w.len());
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        w.truncate(hi);
        w.drain(..lo);
        BraidWord { strands: self.strands, letters: w }
    }

    /// Image in the symmetric group, letters acting left to right.
    pub fn permutation(&self) -> Permutation {
        let mut pos_of: Vec<usize> = (0..self.strands).collect();
        // strand_at[p] = starting index of the strand currently at position p
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        for &x in &self.letters {
            let i = x.unsigned_abs() as usize - 1;
            strand_at.swap(i, i + 1);
        }
        for (p, &s) in strand_at.iter().enumerate() {
            pos_of[s] = p;
        }
        Permutation::from_images(pos_of).expect("swaps give a bijection")
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&x| x.signum() as i64).sum()
    }

    /// `(c_plus, c_minus)`: number of positive and negative letters.
    pub fn crossing_counts(&self) -> (usize, usize) {
        let plus = self.letters.iter().filter(|&&x| x > 0).count();
        (plus, self.letters.len() - plus)
    }

    /// Markov stabilization: appends `σ_l^{±1}` and moves to `B_{l+1}`.
    pub fn markov_stabilize(&self, positive: bool) -> Self {
        let l = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { l } else { -l });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Markov destabilization. After free reduction the word must end in
    /// `σ_{l-1}^{±1}` and that generator must occur nowhere else.
    pub fn markov_destabilize(&self) -> Result<Self> {
        if self.strands < 2 {
            return Err(Error::NotApplicable);
        }
        let top = self.strands as i32 - 1;
        let reduced = self.free_reduce();
        let (last, rest) = reduced.letters.split_last().ok_or(Error::NotApplicable)?;
        if last.abs() != top || rest.iter().any(|x| x.abs() == top) {
            return Err(Error::NotApplicable);
        }
        Ok(BraidWord { strands: self.strands - 1, letters: rest.to_vec() })
    }

    /// Space separated letters, the same format [`parse_braid`] reads.
    pub fn to_text(&self) -> String {
        self.letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1 (B{})", self.strands);
        }
        for (k, &x) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if x > 0 {
                write!(f, "s{x}")?;
            } else {
                write!(f, "s{}^-1", -x)?;
            }
        }
        write!(f, " (B{})", self.strands)
    }
}

/// Parses whitespace separated signed integers into a word of `B_strands`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(|tok| match tok.parse::<i64>() {
            Ok(0) | Err(_) => Err(Error::MalformedToken(tok.to_string())),
            Ok(x) => Ok(x),
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

/// The full twist `Δ² = (σ_1 σ_2 ⋯ σ_{l-1})^l`.
pub fn full_twist(strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::StrandTooSmall(strands));
    }
    let delta: Vec<i32> = (1..strands as i32).collect();
    Ok(BraidWord::from_raw(strands, delta).pow(strands as i64))
}
