//! Invariants of braid closures.

mod alexander;
mod burau;
mod closure;
mod laurent;
mod unknot;

pub use alexander::{alexander_genus_lower, alexander_knot, bennequin_bounds, GenusBounds};
pub use burau::{reduced_burau, PolyMatrix};
pub use closure::{closure_info, ClosureInfo};
pub use laurent::LaurentPolynomial;
pub use unknot::{apply_move, replay_moves, unknot_check, Obstruction, UnknotMove, UnknotVerdict};
