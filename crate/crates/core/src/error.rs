use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("Laurent polynomial division is not exact")]
    DivisionNotExact,

    #[error("division by zero")]
    DivisionByZero,

    #[error("limit is undefined: {0}")]
    Undefined(String),

    #[error("diagram {0} is not singular")]
    NotSingular(Partition),

    #[error("sharp chain of {partition} has length {found}, expected {expected}")]
    LengthMismatch {
        partition: Partition,
        expected: usize,
        found: usize,
    },

    #[error("{mu} is not obtained from {lambda} by adding or removing one box")]
    NotAdjacent { lambda: Partition, mu: Partition },

    #[error("{mu} is not in S({lambda})")]
    NotInS { lambda: Partition, mu: Partition },

    #[error("{lambda} is not in the hook set H(1,{n})")]
    NotInHook { lambda: Partition, n: usize },

    #[error("degenerate parameters building J_{target} from {parent}: {reason}")]
    DegenerateParameters {
        parent: Partition,
        target: Partition,
        reason: String,
    },

    #[error("coefficient of {monomial} in the specialization of {lambda} has a pole at k = -1")]
    PoleAtLimit { lambda: Partition, monomial: String },

    #[error("parameter t = {t} is excluded for singular diagram {lambda}")]
    ExcludedParameter { lambda: Partition, t: String },

    #[error("weight {0} has more than one atypical root")]
    MultipleAtypicalRoots(String),

    #[error("singular diagram {lambda} has several witnesses {witnesses:?}")]
    AmbiguousWitness {
        lambda: Partition,
        witnesses: Vec<usize>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
