use serde::{Deserialize, Serialize};

use super::screen::screen_exchangeable;
use crate::invariants::closure_info;
use crate::{BraidWord, Error, Result};

/// A doubly exchangeably braided link: `K₁` is the closure of `b1` around
/// `K₂` and `K₂` the closure of `b2` around `K₁`, both on `n` strands. The
/// link determines its Hirsch manifold uniquely, so the descriptor serves
/// as the manifold's name. `b2` is supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeblDescriptor {
    pub b1: BraidWord,
    pub b2: BraidWord,
    pub n: usize,
}

pub fn debl_descriptor(b1: &BraidWord, b2: &BraidWord, budget: usize) -> Result<DeblDescriptor> {
    if b1.strands() != b2.strands() {
        return Err(Error::StrandMismatch { left: b1.strands(), right: b2.strands() });
    }
    for b in [b1, b2] {
        let mu = closure_info(b).components;
        if mu != 1 {
            return Err(Error::NotAKnotClosure { components: mu });
        }
    }
    for (name, b) in [("b1", b1), ("b2", b2)] {
        if !screen_exchangeable(b, budget).passes {
            return Err(Error::ScreeningFailed(name.to_string()));
        }
    }
    Ok(DeblDescriptor { b1: b1.clone(), b2: b2.clone(), n: b1.strands() })
}
