use serde::{Deserialize, Serialize};

use crate::hirsch::{dual_fibration_params, HirschDescriptor};
use crate::Result;

/// The cyclic cover of `M` given by `ψ: H_1(N) → Z/q₂` with
/// `ψ([m₂]) = 0`, `ψ([l₁]) = 1`.
///
/// Fibers lift homeomorphically (`lifted_m_degree = 1`) while `l₁` lifts
/// to a `q₂`-fold cover of itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringDescriptor {
    pub degree: i64,
    /// `ψ([m₂])` in `Z/degree`.
    pub psi_m2: i64,
    /// `ψ([l₁])` in `Z/degree`; `1` reduced modulo the degree.
    pub psi_l1: i64,
    pub lifted_m_degree: i64,
    pub lifted_l1_degree: i64,
    pub base: HirschDescriptor,
}

pub fn covering_homomorphism(d: &HirschDescriptor) -> Result<CoveringDescriptor> {
    let q2 = dual_fibration_params(d.n(), d.k())?.q2;
    Ok(CoveringDescriptor {
        degree: q2,
        psi_m2: 0,
        psi_l1: 1 % q2,
        lifted_m_degree: 1,
        lifted_l1_degree: q2,
        base: d.clone(),
    })
}

/// Whether the covering degree `q₂` divides `n² - 1`.
pub fn check_divisibility(d: &HirschDescriptor) -> Result<bool> {
    let q2 = dual_fibration_params(d.n(), d.k())?.q2;
    Ok((d.n() * d.n() - 1) % q2 == 0)
}
