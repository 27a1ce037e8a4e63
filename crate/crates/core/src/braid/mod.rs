//! Braid words and the algorithms acting on them.
//!
//! Conventions used throughout the crate:
//!
//! * A letter `i > 0` is the Artin generator `σ_i`, a positive crossing
//!   where strand `i` passes over strand `i + 1`; `-i` is `σ_i⁻¹`.
//! * Letters act left to right. The permutation of a word sends the strand
//!   starting at position `p` to the position where it ends.


mod conjugacy;
mod garside;
mod perm;
mod word;


pub use conjugacy::{
    canonical_representative, conjugacy_test, cycling, decycling, super_summit_set,
    CanonicalRepresentative, ConjugacyVerdict, SummitSet,
};
pub use garside::{braids_equal, is_periodic, left_normal_form, GarsideNormalForm, Simple};
pub use perm::Permutation;
pub use word::{full_twist, parse_braid, BraidWord};
