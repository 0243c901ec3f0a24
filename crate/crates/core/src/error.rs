use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),
    #[error("group is infinite or larger than the cap of {cap} elements")]
    InfiniteOrTooLarge { cap: usize },
    #[error("operands belong to different groups")]
    MixedGroups,
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("generator {0} is out of range")]
    GeneratorOutOfRange(usize),
    #[error("{element} is not a minimal coset representative for J = {subset}")]
    NotInDJ { element: String, subset: String },
    #[error("{element} is not a maximal coset representative for J = {subset}")]
    NotInDJbar { element: String, subset: String },
    #[error("{element} is not in E_J for J = {subset}")]
    NotInEJ { element: String, subset: String },
    #[error("{element} is not a coset representative for J = {subset}")]
    NotInCosetSet { element: String, subset: String },
    #[error("relative KL recursion has no pivot for {0}")]
    RecursionStuck(String),
    #[error("computation too large: {what} is {size}, cap is {cap}")]
    TooLarge { what: String, size: usize, cap: usize },
    #[error("the element set is not a union of left cells closed under the left preorder")]
    NotCellClosed,
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("tableau is not row-standard")]
    NotRowStandard,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
