//! Parameter sets shared by the benchmarks.

use twistoid::{
    DicosmAxialParams, DicosmDiagonalParams, TetracosmParams, TricosmParams, TwistoidParams,
};

/// One mid-sized instance per case, each with a few hundred to a few thousand flags.
pub fn sample_instances() -> Vec<(&'static str, TwistoidParams)> {
    vec![
        ("dicosm-axial", DicosmAxialParams::new(1, 0, 12, 6, 2).into()),
        ("dicosm-diagonal", DicosmDiagonalParams::new(2, 0, 6, 2, 2).into()),
        ("tricosm", TricosmParams::new(3, 2, 1).into()),
        ("tetracosm", TetracosmParams::new(1, 3, 1).into()),
    ]
}
