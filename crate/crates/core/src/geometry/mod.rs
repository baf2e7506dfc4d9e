//! Exact isometries of the cubic tessellation and the analysis of twists.

mod isometry;
mod quad;
mod signed_perm;
mod twist;
mod vec3;

pub use isometry::{compose, half_shift, inverse, preserves_tessellation, Isometry, Motion};
pub use quad::QuadMagnitude;
pub use signed_perm::SignedPerm;
pub use twist::{
    analyze_twist, canonical_representatives, classify_twist_type, petrie_handedness, petrie_m,
    screw_handedness, DirectionClass, Handedness, Incidence, NormClass, PetrieHandedness,
    TwistClassRow, TwistData, TwistType, TWIST_CLASSES,
};
pub use vec3::Vec3;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::Rational64;
