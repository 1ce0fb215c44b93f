use thiserror::Error;

/// Errors raised by the library. Positions and indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} outside 1..=64")]
    GroundSize(usize),
    #[error("position {pos} outside the ground set of size {n}")]
    Position { pos: usize, n: usize },
    #[error("ground sizes differ ({0} vs {1})")]
    GroundMismatch(usize, usize),
    #[error("undefined extremes: the family is empty")]
    EmptyFamily,
    #[error("intersection parameter k must be at least 1")]
    InvalidK,
    #[error("layer {r} not allowed here: {reason}")]
    Layer { r: usize, reason: &'static str },
    #[error("n = {n} too large to materialize the power set (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("code length {0} outside 1..=64")]
    CodeLength(usize),
    #[error("alphabet size {0} outside 2..=256")]
    Alphabet(usize),
    #[error("word {index} has length {len}, expected {n}")]
    WordLength { index: usize, len: usize, n: usize },
    #[error("word {index} has symbol {symbol} at position {pos}, alphabet size is {q}")]
    Symbol { index: usize, pos: usize, symbol: u8, q: u16 },
    #[error("words {0} and {1} are equal")]
    DuplicateWord(usize, usize),
    #[error("word index {index} out of range for a code of {m} words")]
    Index { index: usize, m: usize },
    #[error("indices must be pairwise distinct")]
    RepeatedIndex,
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("operation needs at least {needed} words, code has {m}")]
    TooFewWords { needed: usize, m: usize },
    #[error("theorem inapplicable: {0}")]
    Inapplicable(&'static str),
    #[error("binomial({n}, {k}) undefined")]
    Binomial { n: u64, k: u64 },
    #[error("oracle out of range: {0}")]
    OracleRange(&'static str),
    #[error("cannot sample {m} distinct words from a space of {space}")]
    SpaceTooSmall { m: u128, space: u128 },
    #[error("constraint cannot be satisfied: {0}")]
    Unsatisfiable(&'static str),
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
