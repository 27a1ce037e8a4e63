//! Finite covers, exchangeability screening and the non-Hirsch certifier.

mod certify;
mod cover;
mod debl;
mod screen;

pub use certify::{certify_not_hirsch_example, CertificationReport, PairCertificate, PairObstruction};
pub use cover::{check_divisibility, covering_homomorphism, CoveringDescriptor};
pub use debl::{debl_descriptor, DeblDescriptor};
pub use screen::{enumerate_exchange_candidates, screen_exchangeable, Enumeration, ScreenReport};
