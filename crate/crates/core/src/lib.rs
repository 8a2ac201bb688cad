//! Exact computations in the orbifold Chow ring of a weighted projective
//! space `P(w)` and in the graded group algebra of `|w|`-th roots of unity
//! that models it.
//!
//! * [`unity`]: roots of unity by argument, fixed sets, ages and the sector
//!   enumeration.
//! * [`chow`]: the η-basis, orbifold degrees, cup product and pairing.
//! * [`model`]: the ξ-basis, its degree function, the graded product,
//!   integral and pairing.
//! * [`isomorphism`]: the basis bijection `Ξ` and exhaustive verification.
//! * [`cli`]: the `orbifold-ring` command-line front-end.

pub mod chow;
pub mod cli;
pub mod element;
pub mod error;
pub mod isomorphism;
pub mod model;
pub mod ring;
pub mod unity;

/// Exact rational scalars.
pub type Rational = num_rational::Ratio<i64>;

pub use chow::{ChowBasisIndex, ChowElement, ChowRing};
pub use element::Element;
pub use error::{Error, Result};
pub use isomorphism::{VerificationReport, XiMap};
pub use model::{ModelElement, ModelRing, XiPower};
pub use ring::GradedRing;
pub use unity::{IndexSet, RootOfUnity, SectorEnumeration, Weights};
