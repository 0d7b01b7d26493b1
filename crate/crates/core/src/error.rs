use thiserror::Error;

use crate::subset::SubsetMask;

/// Why an explicit set family failed to be a greedoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// The empty set is not in the family.
    EmptySetMissing,
    /// `x` cannot be augmented from the larger `y`.
    Exchange { x: SubsetMask, y: SubsetMask },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set has {0} elements; at most {max} are supported", max = crate::subset::MAX_ELEMENTS)]
    SizeLimit(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("greedoid axiom violated: {0:?}")]
    AxiomViolation(Violation),
    #[error("set {0} is not feasible")]
    NotFeasible(SubsetMask),
    #[error("no augmenting element exists; the family is not a greedoid")]
    NoWitness,
    #[error("contracted set {0} is not feasible after deletion")]
    ContractNotFeasible(SubsetMask),
    #[error("greedoid is not an interval greedoid")]
    NotInterval,
    #[error("greedoid is not a local poset greedoid")]
    NotLocalPoset,
    #[error("greedoid is not a local forest greedoid")]
    NotLocalForest,
    #[error("set {0} is not subfeasible")]
    NotSubfeasible(SubsetMask),
    #[error("set {0} is not a path")]
    NotAPath(SubsetMask),
    #[error("bad arguments: {0}")]
    BadArgs(String),
    #[error("objective undefined: {0}")]
    ObjectiveUndefined(String),
    #[error("weight of element {0} is negative")]
    NegativeWeight(String),
    #[error("the given triple does not violate the exchange optimality condition")]
    NotAViolation,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("validation error{}: {message}", line.map(|l| format!(" near line {l}")).unwrap_or_default())]
    Validation { line: Option<usize>, message: String },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
