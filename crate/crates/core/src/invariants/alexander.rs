use serde::{Deserialize, Serialize};

use super::burau::{reduced_burau, PolyMatrix};
use super::closure::closure_info;
use super::laurent::LaurentPolynomial;
use crate::{BraidWord, Error, Result};

fn require_knot(w: &BraidWord) -> Result<()> {
    let mu = w.permutation().cycles().len();
    if mu != 1 {
        return Err(Error::NotAKnot { components: mu });
    }
    Ok(())
}

/// Alexander polynomial of a knot closure, unit-normalized (lowest exponent
/// 0, positive leading coefficient).
///
/// Uses `Δ(t) · (1 + t + ⋯ + t^{l-1}) ≐ det(I - B(w))` with `B` the reduced
/// Burau matrix.
pub fn alexander_knot(w: &BraidWord) -> Result<LaurentPolynomial> {
    require_knot(w)?;
    let l = w.strands();
    let burau = reduced_burau(w);
    let det = PolyMatrix::identity(l - 1).sub(&burau).determinant();
    let cyclotomic = LaurentPolynomial::from_terms((0..l as i32).map(|e| (e, 1)));
    let delta = det.exact_div(&cyclotomic).ok_or_else(|| {
        Error::Internal(format!("det(I - B) = {det} is not divisible by {cyclotomic}"))
    })?;
    let delta = delta.unit_normalize();
    match delta.eval(1) {
        Some(1) | Some(-1) => Ok(delta),
        v => Err(Error::Internal(format!("Alexander polynomial {delta} has Δ(1) = {v:?}"))),
    }
}

/// Half the exponent span of the Alexander polynomial; a lower bound for
/// the genus of the knot.
pub fn alexander_genus_lower(w: &BraidWord) -> Result<i64> {
    Ok(alexander_knot(w)?.span() as i64 / 2)
}

/// Genus bounds of a closed braid from its strand and crossing counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBounds {
    pub lower: i64,
    pub upper: i64,
}

/// Bennequin bounds
/// `(|c₊ - c₋| - l - μ)/2 + 1 ≤ g ≤ (c₊ + c₋ - l - μ)/2 + 1`,
/// with the lower bound clamped at 0.
pub fn bennequin_bounds(w: &BraidWord) -> GenusBounds {
    let l = w.strands() as i64;
    let mu = closure_info(w).components as i64;
    let (plus, minus) = w.crossing_counts();
    let (plus, minus) = (plus as i64, minus as i64);
    let lower = ((plus - minus).abs() - l - mu).div_ceil_2() + 1;
    let upper = (plus + minus - l - mu).div_floor_2() + 1;
    GenusBounds { lower: lower.max(0), upper }
}

trait HalfRound {
    fn div_ceil_2(self) -> Self;
    fn div_floor_2(self) -> Self;
}

impl HalfRound for i64 {
    fn div_ceil_2(self) -> i64 {
        -((-self).div_euclid(2))
    }

    fn div_floor_2(self) -> i64 {
        self.div_euclid(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::full_twist;

    fn w(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.iter().copied()).unwrap()
    }

    fn poly(terms: &[(i32, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn alexander_examples() {
        assert!(alexander_knot(&w(2, &[1])).unwrap().is_one());
        assert!(alexander_knot(&BraidWord::identity(1)).unwrap().is_one());
        assert_eq!(alexander_knot(&w(2, &[1, 1, 1])).unwrap(), poly(&[(2, 1), (1, -1), (0, 1)]));
        let fig8 = alexander_knot(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(fig8.to_string(), "t^2-3t+1");
        assert_eq!(alexander_knot(&w(2, &[1, 1])), Err(Error::NotAKnot { components: 2 }));
        // cinquefoil
        assert_eq!(alexander_knot(&w(2, &[1; 5])).unwrap().to_string(), "t^4-t^3+t^2-t+1");
        assert!(alexander_knot(&w(3, &[1, 2])).unwrap().is_one());
    }

    #[test]
    fn genus_from_alexander() {
        assert_eq!(alexander_genus_lower(&w(2, &[1])).unwrap(), 0);
        assert_eq!(alexander_genus_lower(&w(3, &[1, -2, 1, -2])).unwrap(), 1);
        let b = w(3, &[1, -2, 1, -2]);
        for q in [1, 2, 4, 5] {
            assert!(alexander_genus_lower(&b.pow(q)).unwrap() >= 1, "q={q}");
        }
        assert!(alexander_genus_lower(&b.pow(3)).is_err());
    }

    #[test]
    fn bennequin_examples() {
        assert_eq!(bennequin_bounds(&w(2, &[1])), GenusBounds { lower: 0, upper: 0 });
        assert_eq!(bennequin_bounds(&w(2, &[1, 1, 1])), GenusBounds { lower: 1, upper: 1 });
        let b = w(3, &[1, -2, 1, -2]);
        let tau = full_twist(3).unwrap();
        for p in [-3i64, -2, -1, 1, 2, 3] {
            let x = b.compose(&tau.pow(p)).unwrap();
            assert_eq!(bennequin_bounds(&x).lower, 3 * p.abs() - 1);
        }
        assert_eq!(bennequin_bounds(&b).lower, 0);
    }
}
