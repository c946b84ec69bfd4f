//! Rational polyhedral cones and fans.

mod cone;
mod dd;
mod fan;
mod lp;
mod shift;

pub use cone::{Cone, Facets};
pub use fan::{Fan, FanReport, Violation};
pub use lp::{cone_contains, nonnegative_combination, ConeMembershipQuery};
pub use shift::{shifted_intersection, ShiftOutcome};

pub(crate) use cone::canonical_subspace;
