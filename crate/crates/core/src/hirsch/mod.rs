//! Homology calculus on the braid complement `N` and the glued manifold `M`.
//!
//! `H_1(N) ≅ Z²` is generated by `[m₂]` and `[l₁]`, with `[m₁] = n[m₂]` and
//! `[l₂] = n[l₁]` where `n` is the strand number. The gluing map sends
//! `m₁ ↦ m₂` and `l₁ ↦ l₂ + k·m₂`.

mod curves;
mod descriptor;
mod fibration;
mod smith;

pub use curves::{embed_curve, glue_image, H1Element, Torus, TorusCurve};
pub use descriptor::HirschDescriptor;
pub use fibration::{
    dual_fibration_bruteforce, dual_fibration_params, first_fibration_constraints,
    nonisotopy_obstruction, FibrationParams,
};
pub use smith::{gluing_cokernel, homology_of_m, smith_invariants, AbelianGroup};

use crate::{Error, Result};

pub(crate) fn require_strand_number(n: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("strand number must be at least 2, got {n}")));
    }
    Ok(())
}
