use std::fmt;

use num_integer::{gcd, Integer};
use serde::{Deserialize, Serialize};

use super::curves::{embed_curve, H1Element, Torus, TorusCurve};
use super::require_strand_number;
use crate::{Error, Result};

/// Parameters of a punctured-disk fibration on `N`: the fiber meets
/// `T^out` in `s` copies of `c₁ = p₁m₁ + q₁l₁` and `T^in` in
/// `c₂ = p₂m₂ + q₂l₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FibrationParams {
    pub s: i64,
    pub p1: i64,
    pub q1: i64,
    pub p2: i64,
    pub q2: i64,
}

impl fmt::Display for FibrationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} p1={} q1={} p2={} q2={}", self.s, self.p1, self.q1, self.p2, self.q2)
    }
}

impl FibrationParams {
    /// `c₁` as a class on `T^out`.
    pub fn outer_curve(&self) -> TorusCurve {
        TorusCurve::new(Torus::Out, self.p1, self.q1)
    }

    /// `c₂` as a class on `T^in`.
    pub fn inner_curve(&self) -> TorusCurve {
        TorusCurve::new(Torus::In, self.p2, self.q2)
    }
}

/// Shape forced on every fibration of `N` by punctured disks:
/// `s = n`, `p₁ = p₂ = 1`, `q₁ = n²q₂`.
pub fn first_fibration_constraints(n: i64, q2: i64) -> Result<FibrationParams> {
    require_strand_number(n)?;
    Ok(FibrationParams { s: n, p1: 1, q1: n * n * q2, p2: 1, q2 })
}

/// Closed form for a second fibration inducing an affine Hirsch
/// foliation under the gluing with twist `k`. With
/// `g = gcd(n² - 1, |k|)`: `p₁ = k/g`, `q₁ = (n² - 1)/g`, `p₂ = n²p₁`,
/// `q₂ = q₁`, `s = n`.
pub fn dual_fibration_params(n: i64, k: i64) -> Result<FibrationParams> {
    require_strand_number(n)?;
    let m = n * n - 1;
    // gcd(m, 0) = m, so k = 0 gives (p1, q1) = (0, 1)
    let g = gcd(m, k);
    let fp = FibrationParams { s: n, p1: k / g, q1: m / g, p2: n * n * (k / g), q2: m / g };
    let ok = fp.p1 + fp.q1 * k == fp.p2
        && fp.s * fp.q1 == n * fp.q2
        && gcd(fp.p1, fp.q1) == 1
        && gcd(fp.p2, fp.q2) == 1
        && gcd(n * fp.p1, fp.q1) == 1
        && fp.q2 > 0;
    if !ok {
        return Err(Error::Internal(format!("{fp} violates the fibration equations")));
    }
    Ok(fp)
}

/// Exhaustive search for `(s, p₁, q₁, p₂, q₂)` with all of `|p₁|, |q₁|,
/// |p₂|, |q₂|, s` at most `bound` satisfying
///
/// 1. `p₂ = s·n·p₁` and `n·q₂ = s·q₁`,
/// 2. `n·p₁` and `q₁` coprime,
/// 3. `p₁ + q₁·k = p₂` and `q₁ = q₂`,
///
/// together with `gcd(p₁, q₁) = gcd(p₂, q₂) = 1` and `q₂ > 0`. The pair
/// `(s, p₂)` is determined by `(p₁, q₁, q₂)` through (1), so the loops run
/// over those three only. Independent of [`dual_fibration_params`].
pub fn dual_fibration_bruteforce(n: i64, k: i64, bound: i64) -> Result<FibrationParams> {
    require_strand_number(n)?;
    let mut found = vec![];
    for q1 in -bound..=bound {
        for q2 in 1..=bound {
            if q1 != q2 {
                continue;
            }
            // n·q2 = s·q1 with 1 ≤ s ≤ bound
            let (s, r) = (n * q2).div_rem(&q1);
            if r != 0 || !(1..=bound).contains(&s) {
                continue;
            }
            for p1 in -bound..=bound {
                let p2 = s * n * p1;
                if p2.abs() > bound || p1 + q1 * k != p2 {
                    continue;
                }
                if gcd(n * p1, q1) == 1 && gcd(p1, q1) == 1 && gcd(p2, q2) == 1 {
                    found.push(FibrationParams { s, p1, q1, p2, q2 });
                }
            }
        }
    }
    match found.len() {
        0 => Err(Error::NoSolutionWithinBound(bound)),
        1 => Ok(found[0]),
        many => Err(Error::MultipleSolutions(many)),
    }
}

/// Checks that no multiple `λ·[c₂]` with `0 < |λ| ≤ lambda_max` equals
/// `n^m·[m₂]` for `1 ≤ m ≤ m_max`, and that `n·r·[m₂] + t·[l₁] = [m₂]`
/// has no integer solution. True when no counterexample exists, i.e. the
/// dual fibration cannot be isotopic to the original one.
pub fn nonisotopy_obstruction(n: i64, k: i64, m_max: u32, lambda_max: i64) -> Result<bool> {
    let fp = dual_fibration_params(n, k)?;
    let c2 = embed_curve(&fp.inner_curve(), n);
    debug_assert_eq!(c2, H1Element::new(n * n * fp.p1, n * fp.q1));
    // (n r, t) = (1, 0) is solvable iff n divides 1
    if 1 % n == 0 {
        return Ok(false);
    }
    for m in 1..=m_max {
        let Some(target) = n.checked_pow(m) else {
            // n^m exceeds every |λ·a| that fits in i64
            continue;
        };
        let target = H1Element::new(target, 0);
        for lambda in (-lambda_max..=lambda_max).filter(|&l| l != 0) {
            if lambda * c2 == target {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
