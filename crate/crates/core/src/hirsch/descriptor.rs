use serde::{Deserialize, Serialize};

use crate::invariants::closure_info;
use crate::{BraidWord, Error, Result};

/// The manifold `M = N / (x ∼ φ(x))` built from a knot-closure braid `b`
/// and the gluing twist `k` (`φ(m₁) = m₂`, `φ(l₁) = l₂ + k·m₂`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor")]
pub struct HirschDescriptor {
    braid: BraidWord,
    k: i64,
}

#[derive(Deserialize)]
struct RawDescriptor {
    braid: BraidWord,
    k: i64,
}

impl TryFrom<RawDescriptor> for HirschDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        HirschDescriptor::new(raw.braid, raw.k)
    }
}

impl HirschDescriptor {
    pub fn new(braid: BraidWord, k: i64) -> Result<Self> {
        if braid.strands() < 2 {
            return Err(Error::StrandTooSmall(braid.strands()));
        }
        let mu = closure_info(&braid).components;
        if mu != 1 {
            return Err(Error::NotAKnotClosure { components: mu });
        }
        Ok(HirschDescriptor { braid, k })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The strand number `n`, i.e. the braid's strand count.
    pub fn strand_number(&self) -> usize {
        self.braid.strands()
    }

    pub fn n(&self) -> i64 {
        self.braid.strands() as i64
    }
}
