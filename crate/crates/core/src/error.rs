use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{0}` must be positive")]
    ZeroParameter(&'static str),

    #[error("s and t must be coprime, got s = {s}, t = {t}")]
    NotCoprime { s: u32, t: u32 },

    #[error("s and t must differ, got s = t = {0}")]
    EqualParameters(u32),

    #[error("a convolution with zero factors is only defined for k = 0, got k = {k}")]
    EmptyConvolution { k: u32 },

    #[error("{what} = {value} exceeds the enumeration bound {bound}")]
    EnumerationBound {
        what: &'static str,
        value: u32,
        bound: u32,
    },

    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("beta-set elements must be distinct and positive: {0:?}")]
    InvalidBetaSet(Vec<u32>),

    #[error("expected root arity {expected}, found {found}")]
    RootArity {
        expected: &'static str,
        found: usize,
    },

    #[error("the root edge carries no star to contract")]
    NoStarAtop,

    #[error("diagrams have different star arities ({0} vs {1})")]
    ArityMismatch(u32, u32),
}
