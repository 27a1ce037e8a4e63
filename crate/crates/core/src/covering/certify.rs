//! Bounded certification that the manifold built from `b = (σ₁σ₂⁻¹)²` is
//! not a Hirsch manifold.
//!
//! If it were, `b^{q₂} τ^p` would be exchangeable for some `p` (`τ` the
//! full twist of `B_3`), so its closure would be an unknot. Every pair
//! `(q₂, p)` in the tested range is refuted: for `p ≠ 0` the Bennequin
//! bound gives genus at least `3|p| - 1`, for `p = 0` the Alexander
//! polynomial of the closure has positive span. Pairs whose closure is a
//! link are refuted by the component count; they also violate `q₂ | 8`.

use serde::{Deserialize, Serialize};

use crate::braid::full_twist;
use crate::invariants::{
    alexander_genus_lower, alexander_knot, bennequin_bounds, closure_info, LaurentPolynomial,
};
use crate::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairObstruction {
    /// Bennequin lower genus bound is positive.
    Bennequin { lower: i64 },
    /// Half the Alexander span is positive.
    AlexanderGenus { lower: i64 },
    /// The closure is a link, not a knot.
    NotAKnot { components: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub q2: i64,
    pub p: i64,
    pub braid: BraidWord,
    pub components: usize,
    pub exponent_sum: i64,
    pub bennequin_lower: i64,
    /// `3|p| - 1` for `p ≠ 0`.
    pub closed_form_lower: Option<i64>,
    pub alexander: Option<LaurentPolynomial>,
    pub alexander_genus_lower: Option<i64>,
    /// Whether `q₂` divides `n² - 1 = 8`, as every covering degree must.
    pub admissible_degree: bool,
    pub obstruction: Option<PairObstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub base_braid: BraidWord,
    pub q2_max: i64,
    pub p_max: i64,
    pub pairs: Vec<PairCertificate>,
    /// Every pair in `1 ≤ q₂ ≤ q2_max`, `|p| ≤ p_max` is obstructed. The
    /// claim covers this range only.
    pub all_obstructed: bool,
}

fn certify_pair(b: &BraidWord, tau: &BraidWord, q2: i64, p: i64) -> PairCertificate {
    let braid = b.pow(q2).compose(&tau.pow(p)).expect("both in B_3");
    let components = closure_info(&braid).components;
    let bennequin_lower = bennequin_bounds(&braid).lower;
    let closed_form_lower = (p != 0).then(|| 3 * p.abs() - 1);
    let (alexander, alexander_genus_lower) = if components == 1 && p == 0 {
        (alexander_knot(&braid).ok(), alexander_genus_lower(&braid).ok())
    } else {
        (None, None)
    };
    let obstruction = if components != 1 {
        Some(PairObstruction::NotAKnot { components })
    } else if p != 0 && bennequin_lower > 0 {
        Some(PairObstruction::Bennequin { lower: bennequin_lower })
    } else {
        alexander_genus_lower
            .filter(|&g| g > 0)
            .map(|lower| PairObstruction::AlexanderGenus { lower })
    };
    PairCertificate {
        q2,
        p,
        exponent_sum: braid.exponent_sum(),
        braid,
        components,
        bennequin_lower,
        closed_form_lower,
        alexander,
        alexander_genus_lower,
        admissible_degree: 8 % q2 == 0,
        obstruction,
    }
}

pub fn certify_not_hirsch_example(q2_max: i64, p_max: i64) -> CertificationReport {
    let b = BraidWord::new(3, [1, -2, 1, -2]).expect("valid braid");
    let tau = full_twist(3).expect("3 strands");
    let pairs: Vec<PairCertificate> = (1..=q2_max)
        .flat_map(|q2| (-p_max..=p_max).map(move |p| (q2, p)))
        .map(|(q2, p)| certify_pair(&b, &tau, q2, p))
        .collect();
    let all_obstructed = pairs.iter().all(|c| c.obstruction.is_some());
    CertificationReport { base_braid: b, q2_max, p_max, pairs, all_obstructed }
}
