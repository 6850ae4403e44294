use thiserror::Error;

use crate::game::{GameState, Move};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{kind} needs at least {min} vertices, got {n}")]
    TooSmall { kind: &'static str, n: usize, min: usize },
    #[error("unsupported enumeration size {n} (supported: {min}..={max})")]
    EnumerationRange { n: usize, min: usize, max: usize },
}

/// Failure while reading one of the supported text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 data has length {got}, expected {expected} for {n} vertices")]
    BadLength { n: usize, expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("bad generator spec `{spec}`: {msg}")]
    Generator { spec: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("vertex {0} is isolated; games need an isolate-free graph")]
    IsolatedVertex(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("graph has {0} vertices; the engine supports at most 64")]
    TooLarge(usize),
    #[error("illegal move {mv} at ply {ply}")]
    IllegalMove { mv: Move, ply: usize },
    #[error("game is already over")]
    GameOver,
}

#[derive(Debug, Clone, Error)]
pub enum StrategyError {
    #[error("strategy `{strategy}` is not applicable: {reason}")]
    NotApplicable { strategy: String, reason: String },
    #[error("strategy `{strategy}` found no compliant move: {reason}")]
    Violation {
        strategy: String,
        reason: String,
        state: Box<GameState>,
    },
    #[error("strategy `{strategy}` asked to move for the wrong player")]
    WrongTurn { strategy: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("instance has {n} vertices, above the solver cap of {cap} (set DOMGAME_STATE_CAP to raise it)")]
    VertexCap { n: usize, cap: usize },
    #[error("transposition table reached its limit of {0} entries")]
    TableFull(usize),
    #[error("game is already over")]
    Terminal,
    #[error(transparent)]
    Game(#[from] GameError),
}
