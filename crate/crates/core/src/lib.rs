//! Exact classification of cubic twistoids on the dicosm, tricosm and tetracosm.
//!
//! A twistoid is the quotient of the cubic tessellation of Euclidean 3-space by a
//! fixed-point-free group generated by parallel twists (screw motions). This crate
//! builds those groups as subgroups of the symmetry group of the tessellation,
//! classifies the resulting twistoids in closed form, and checks every closed-form
//! count against a brute-force flag-orbit oracle.
//!
//! All arithmetic is exact. Coordinates are rationals or integers, and norms along
//! √2 and √3 directions are kept symbolic.

pub mod classifier;
pub mod covers;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod groups;
pub mod lattice;
pub mod oracle;
pub mod params;
pub mod record;
pub mod union_find;

pub use classifier::{
    classify, deformable_class_dicosm_axial, dual_params, families, flag_count,
    rigid_part_dicosm_axial, table2_witnesses, ClassificationReport, DeformableClass, Family,
    RigidPart, RigidRow, SymmetryProfile, Table2Witness,
};
pub use covers::{
    cover_class, cover_flag_count, cover_lattice, lattice_toroid_class, CoverLattice, ToroidClass,
};
pub use error::{Error, Result};
pub use geometry::{
    analyze_twist, classify_twist_type, compose, inverse, petrie_handedness,
    preserves_tessellation, screw_handedness, Handedness, Isometry, Motion, PetrieHandedness,
    QuadMagnitude, Rational, SignedPerm, TwistData, TwistType, Vec3,
};
pub use groups::{build_group, dual_group, GroupSpec, ManifoldKind};
pub use lattice::{IVec3, TranslationLattice};
pub use oracle::{
    build_complex, enumerate_symmetries, orbit_count, verify, FlagComplex, OrbitPartition,
    VerificationReport, DEFAULT_FLAG_BOUND,
};
pub use params::{
    validate, DicosmAxialParams, DicosmDiagonalParams, TetracosmParams, TricosmParams,
    TwistoidParams,
};
pub use record::OutputRecord;
