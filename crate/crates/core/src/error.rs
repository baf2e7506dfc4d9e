use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("no cubic twistoids on the hexacosm: [4,3,4] contains no 6-fold twists (none of the eleven twist classes has order 6)")]
    HexacosmImpossible,

    #[error("generator {index} has a non-integral translation; parameters are inconsistent")]
    NonIntegralGenerator { index: usize },

    #[error("not a twist: {0}")]
    NotATwist(&'static str),

    #[error("twist matches no conjugacy class of [4,3,4]")]
    Unclassifiable,

    #[error("expected a 3-fold twist, found order {0}")]
    NotThreeFold(u8),

    #[error("flag complex has {flags} flags, above the bound of {bound}")]
    ComplexityBound { flags: u64, bound: u64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::InternalInconsistency(msg.into())
    }
}
