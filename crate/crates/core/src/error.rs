use thiserror::Error;

use crate::geometry::Coord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid coordinate literal `{0}`")]
pub struct ParseCoordError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("instance has no groups")]
    NoGroups,
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("exact solver is limited to {limit} terminals, got {got}")]
    SizeLimit { limit: usize, got: usize },
    #[error("exact two-level solver is limited to {limit} groups, got {got}")]
    GroupLimit { limit: usize, got: usize },
    #[error("expected {expected} connection points, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange { name: &'static str, value: Box<Coord>, lo: Box<Coord>, hi: Box<Coord> },
    #[error("k = {0} is below the minimum of 2")]
    TooFewGroups(usize),
    #[error("group has a complete bounding box; no canonical frame applies")]
    CompleteGroup,
    #[error("lifting height {k} is below the bounding-box semiperimeter {min}")]
    LiftTooSmall { k: Box<Coord>, min: Box<Coord> },
    #[error("invalid lifted tree: {0}")]
    InvalidLiftedTree(String),
    #[error("flow network has no vertex {0}")]
    MissingFlowVertex(usize),
    #[error("source and sink coincide")]
    SourceIsSink,
    #[error("coordinates are too fine-grained for integer scaling")]
    CoordinateOverflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
