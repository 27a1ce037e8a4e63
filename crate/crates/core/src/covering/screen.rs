use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{canonical_representative, GarsideNormalForm};
use crate::invariants::{
    alexander_knot, bennequin_bounds, closure_info, unknot_check, Obstruction, UnknotVerdict,
};
use crate::{BraidWord, Result};

/// Necessary conditions for a braid to be exchangeable.
///
/// A failing report proves the braid is not exchangeable. A passing report
/// proves nothing: Stallings braids such as Morton's example pass every
/// check without being exchangeable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenReport {
    pub candidate: BraidWord,
    pub knot_closure: bool,
    pub alexander_trivial: bool,
    pub bennequin_lower_zero: bool,
    pub unknot_verdict: UnknotVerdict,
    pub passes: bool,
    /// True iff the report is a proof (of non-exchangeability).
    pub conclusive: bool,
}

pub fn screen_exchangeable(w: &BraidWord, budget: usize) -> ScreenReport {
    let info = closure_info(w);
    let knot_closure = info.is_knot();
    let bennequin_lower_zero = bennequin_bounds(w).lower == 0;
    let (alexander_trivial, unknot_verdict) = if knot_closure {
        let trivial = alexander_knot(w).map(|p| p.is_one()).unwrap_or(false);
        let verdict = unknot_check(w, budget).unwrap_or(UnknotVerdict::Unknown { explored: 0 });
        (trivial, verdict)
    } else {
        let obstruction = Obstruction::NotAKnot { components: info.components };
        (false, UnknotVerdict::Obstructed { obstruction })
    };
    let passes =
        knot_closure && alexander_trivial && bennequin_lower_zero && !unknot_verdict.is_obstructed();
    ScreenReport {
        candidate: w.clone(),
        knot_closure,
        alexander_trivial,
        bennequin_lower_zero,
        unknot_verdict,
        passes,
        conclusive: !passes,
    }
}

/// Screened conjugacy classes of knot-closure braids up to a word length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    /// One report per conjugacy class, sorted by canonical normal form.
    /// The candidate is the shortest (then lexicographically least) word
    /// found in the class.
    pub reports: Vec<ScreenReport>,
    pub canonical_forms: Vec<GarsideNormalForm>,
    /// False when some super summit set exceeded the budget, in which case
    /// classes may be split across several entries.
    pub complete: bool,
}

impl Enumeration {
    pub fn passing(&self) -> impl Iterator<Item = &ScreenReport> {
        self.reports.iter().filter(|r| r.passes)
    }
}

/// Freely reduced words of length at most `max_len`, shortest first.
fn reduced_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    let mut out = vec![BraidWord::identity(strands)];
    for _ in 0..max_len {
        let mut next = vec![];
        for w in &layer {
            for &x in &alphabet {
                if w.last() != Some(&-x) {
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().map(|v| BraidWord::from_raw(strands, v.clone())));
        layer = next;
    }
    out
}

/// Screens every knot-closure conjugacy class met by words of length at
/// most `max_len` in `B_strands`. Intended for desk-scale inputs
/// (`strands ≤ 4`, `max_len ≤ 10`).
pub fn enumerate_exchange_candidates(
    strands: usize,
    max_len: usize,
    budget: usize,
) -> Result<Enumeration> {
    if strands == 0 {
        return Err(crate::Error::InvalidArgument("strands must be positive".into()));
    }
    let knots: Vec<BraidWord> = reduced_words(strands, max_len)
        .into_iter()
        .filter(|w| w.permutation().cycles().len() == 1)
        .collect();
    let canon: Vec<_> = knots.par_iter().map(|w| canonical_representative(w, budget)).collect();
    let complete = canon.iter().all(|c| c.complete);

    let mut classes: BTreeMap<GarsideNormalForm, BraidWord> = BTreeMap::new();
    for (w, c) in knots.into_iter().zip(canon) {
        let entry = classes.entry(c.normal_form).or_insert_with(|| w.clone());
        if (w.len(), w.letters()) < (entry.len(), entry.letters()) {
            *entry = w;
        }
    }
    let (canonical_forms, words): (Vec<_>, Vec<_>) = classes.into_iter().unzip();
    let reports = words.par_iter().map(|w| screen_exchangeable(w, budget)).collect();
    Ok(Enumeration { reports, canonical_forms, complete })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::conjugacy_test;
    use crate::{ConjugacyVerdict, DEFAULT_BUDGET};

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    #[test]
    fn screening_examples() {
        let r = screen_exchangeable(&w(3, &[1, 2]), DEFAULT_BUDGET);
        assert!(r.passes && !r.conclusive);
        assert!(r.unknot_verdict.is_certified());
        let r = screen_exchangeable(&w(2, &[1, 1, 1]), DEFAULT_BUDGET);
        assert!(!r.passes && !r.alexander_trivial && r.conclusive);
        let r = screen_exchangeable(&w(4, &[3, 2, -3, 2, -1, 2, 1]), DEFAULT_BUDGET);
        assert!(r.passes);
        let r = screen_exchangeable(&w(2, &[1, 1]), DEFAULT_BUDGET);
        assert!(!r.knot_closure && !r.passes);
    }

    #[test]
    fn word_counts() {
        // 1 + 4 + 4·3 + 4·9
        assert_eq!(reduced_words(3, 3).len(), 53);
        assert_eq!(reduced_words(2, 0).len(), 1);
    }

    #[test]
    fn two_strands() {
        let e = enumerate_exchange_candidates(2, 3, DEFAULT_BUDGET).unwrap();
        assert!(e.complete);
        // σ1^{±1}, σ1^{±3}
        assert_eq!(e.reports.len(), 4);
        let passing: Vec<_> = e.passing().map(|r| r.candidate.clone()).collect();
        assert_eq!(passing.len(), 2);
        for c in &passing {
            let one = w(2, &[c.exponent_sum().signum() as i32]);
            assert!(matches!(
                conjugacy_test(c, &one, DEFAULT_BUDGET).unwrap(),
                ConjugacyVerdict::Conjugate { .. }
            ));
        }
        assert!(enumerate_exchange_candidates(2, 0, 10).unwrap().reports.is_empty());
    }

    #[test]
    fn three_strands_length_two() {
        let e = enumerate_exchange_candidates(3, 2, DEFAULT_BUDGET).unwrap();
        // classes of σ1σ2, σ1⁻¹σ2⁻¹ and σ1σ2⁻¹; every closure is an unknot
        assert_eq!(e.reports.len(), 3);
        assert_eq!(e.passing().count(), 3);
        let sums: Vec<i64> = e.reports.iter().map(|r| r.candidate.exponent_sum()).collect();
        assert_eq!(sums.iter().filter(|&&s| s == 0).count(), 1);
    }
}
