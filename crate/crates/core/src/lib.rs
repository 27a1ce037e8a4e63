//! Exact braid-group algebra and the homology calculus of affine Hirsch
//! foliations.
//!
//! The crate is organised in four layers:
//!
//! * [`braid`]: braid words, permutations, Garside normal forms, conjugacy
//!   and periodicity tests, Markov moves.
//! * [`invariants`]: invariants of braid closures (components, linking,
//!   reduced Burau, Alexander polynomial, Bennequin genus bounds, bounded
//!   unknot search).
//! * [`hirsch`]: curve classes in `H_1(N)`, the gluing map, fibration
//!   parameters with a brute-force oracle, the non-isotopy obstruction and
//!   `H_1(M)` via Smith normal form.
//! * [`covering`]: the finite cyclic cover, exchangeability screening,
//!   desk-scale enumeration, DEBL descriptors and the non-Hirsch certifier.
//!
//! Every function is pure and deterministic. Values are immutable once
//! built and can be shared freely between threads.

pub mod braid;
pub mod covering;
mod error;
pub mod hirsch;
pub mod invariants;

pub use error::{Error, Result};

pub use braid::{
    BraidWord, CanonicalRepresentative, ConjugacyVerdict, GarsideNormalForm, Permutation,
};
pub use covering::{
    CertificationReport, CoveringDescriptor, DeblDescriptor, Enumeration, PairCertificate,
    ScreenReport,
};
pub use hirsch::{AbelianGroup, FibrationParams, H1Element, HirschDescriptor, Torus, TorusCurve};
pub use invariants::{ClosureInfo, GenusBounds, LaurentPolynomial, UnknotMove, UnknotVerdict};

/// Default number of states explored by the bounded searches (super summit
/// sets, unknot search).
pub const DEFAULT_BUDGET: usize = 20_000;
