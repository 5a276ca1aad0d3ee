use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("braid closure has {0} components, expected a knot")]
    MultiComponentClosure(usize),
    #[error("invalid braid: {0}")]
    InvalidBraid(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("arc {0} does not exist")]
    InvalidArc(usize),
    #[error("crossing {0} does not exist")]
    InvalidCrossing(usize),
    #[error("coloring does not match its class: {0}")]
    SpecMismatch(String),
    #[error("coloring is not surjective")]
    NotSurjective,
    #[error("search exceeded node limit {limit}")]
    BudgetExceeded { limit: u64 },
    #[error("malformed clasp section: {0}")]
    MalformedSection(String),
    #[error("no tangle with at most {0} crossings satisfies the rewrite contracts")]
    SynthesisExhausted(usize),
    #[error("diagram is not twice 3-colorable (F_3 coloring dimension {0})")]
    NotTwiceThreeColorable(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
