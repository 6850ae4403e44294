//! JSON-lines replay format: one object per ply, fields in a fixed order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Color, GameConfig, GameState, Move, Player, Status};
use crate::error::GameError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusTag {
    Ongoing,
    DomWin,
    SepyWin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub v: usize,
    pub c: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub ply: usize,
    pub actor: Player,
    #[serde(rename = "move")]
    pub mv: Move,
    pub status: StatusTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl From<Status> for StatusTag {
    fn from(s: Status) -> Self {
        match s {
            Status::Ongoing(_) => StatusTag::Ongoing,
            Status::DomWin => StatusTag::DomWin,
            Status::SepyWin { .. } => StatusTag::SepyWin,
        }
    }
}

/// Replay `state`'s history from the initial position and record the status after each ply.
pub fn trace_records(state: &GameState) -> Vec<TraceRecord> {
    let mut replay = GameState::new(*state.config(), state.shared_graph()).expect("state was valid");
    let mut out = Vec::with_capacity(state.history().len());
    for (i, ply) in state.history().iter().enumerate() {
        replay.apply(ply.mv).expect("history replays");
        let status = replay.status();
        out.push(TraceRecord {
            ply: i + 1,
            actor: ply.actor,
            mv: ply.mv,
            status: status.into(),
            witness: match status {
                Status::SepyWin { witness, color } => Some(Witness { v: witness, c: color }),
                _ => None,
            },
        });
    }
    out
}

pub fn trace_to_jsonl(state: &GameState) -> String {
    trace_records(state)
        .iter()
        .map(|r| serde_json::to_string(r).expect("plain data") + "\n")
        .collect()
}

/// Re-run a trace through the engine, checking actors and recorded statuses.
pub fn replay_trace(
    config: GameConfig,
    graph: Arc<Graph>,
    records: &[TraceRecord],
) -> Result<GameState, GameError> {
    let mut state = GameState::new(config, graph)?;
    for r in records {
        if state.actor() != r.actor {
            return Err(GameError::IllegalMove { mv: r.mv, ply: r.ply });
        }
        state.apply(r.mv)?;
        if StatusTag::from(state.status()) != r.status {
            return Err(GameError::IllegalMove { mv: r.mv, ply: r.ply });
        }
    }
    Ok(state)
}
