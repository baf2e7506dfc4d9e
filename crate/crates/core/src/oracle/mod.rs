//! Brute-force verification on the finite quotient flag complex.
//!
//! Nothing here uses the closed-form predicates; the oracle only knows the group.

mod complex;
mod detect;
mod symmetries;
mod verify;

pub use complex::{adjacent, build_complex, Flag, FlagComplex, DEFAULT_FLAG_BOUND};
pub use detect::detect_predicates;
pub use symmetries::{enumerate_symmetries, enumerate_symmetry_motions, orbit_count, OrbitPartition};
pub use verify::{verify, verify_with_bound, PredicateCheck, VerificationReport};
