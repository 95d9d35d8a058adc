use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: S_{left} vs S_{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid permutation {0:?}: must be a bijection on 1..n")]
    InvalidPermutation(Vec<u8>),

    #[error("generator s_{letter} out of range for S_{n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("pattern of size {pattern} is longer than host of size {host}")]
    PatternTooLong { pattern: usize, host: usize },

    #[error("word is not reduced")]
    NotReduced,

    #[error("word is not 321-avoiding; its heap is undefined")]
    Not321Avoiding,

    #[error("permutation is not 321-hexagon-avoiding")]
    NotHexagonAvoiding,

    #[error("mask has length {mask} but word has length {word}")]
    MaskLength { mask: usize, word: usize },

    #[error("word of length {len} exceeds the mask-enumeration bound of {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("n = {n} exceeds the bound of {max} for this operation")]
    RankTooLarge { n: usize, max: usize },

    #[error("delta is undefined for a mask whose product is the top element")]
    DeltaUndefined,

    #[error("position {0} is not a zero-defect of the mask")]
    NotZeroDefect(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("series denominator has non-invertible constant term")]
    NonInvertibleSeries,

    #[error("{0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
