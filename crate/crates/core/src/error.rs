use thiserror::Error;

use crate::linalg::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: RingSpec },
    #[error("no canonical ring map {from} -> {to}")]
    UnsupportedBaseChange { from: RingSpec, to: RingSpec },
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("operation not supported over {ring}: {what}")]
    UnsupportedRing { ring: RingSpec, what: &'static str },
    #[error("smith normal form is not defined over the field {0}; use row reduction")]
    UseRowReduction(RingSpec),
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("image generator {column} is not contained in the kernel span")]
    ContainmentViolation { column: usize },
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("characteristic mismatch: expected {expected}, ring {ring} has characteristic {found}")]
    CharacteristicMismatch { expected: u64, found: u64, ring: RingSpec },
    #[error("Hopf ideal condition `{condition}` fails for generator {generator}")]
    HopfIdealViolation { condition: &'static str, generator: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("theorem violated ({0}); the input data is corrupt")]
    TheoremViolation(String),
    #[error("complex of rank {rank} exceeds the size limit {limit} (set HOPFCOH_MAX_RANK to override)")]
    SizeLimit { rank: usize, limit: usize },
    #[error("degree {requested} exceeds the computed range 0..={available}")]
    DegreeOverflow { requested: usize, available: usize },
    #[error("sequence is not short exact: {0}")]
    NotExact(String),
    #[error("no solution to the linear system")]
    NoSolution,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
