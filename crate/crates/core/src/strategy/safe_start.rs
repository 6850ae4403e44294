//! Dom-start play on graphs with a dominated closed neighbourhood: open on the
//! dominating vertex, then answer with opposite neighbours.

use super::{onsp_move, violation, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameState, Move};
use crate::graph::Graph;

/// Least `v` having some `u != v` with `N[u] ⊆ N[v]`.
pub fn safe_start_vertex(g: &Graph) -> Option<usize> {
    g.dominated_pairs().into_iter().map(|(_, v)| v).min()
}

pub fn dom_start_safe_move(state: &GameState) -> Result<Move, StrategyError> {
    if state.any_move_made() {
        return onsp_move(state);
    }
    safe_start_vertex(state.graph())
        .map(|v| Move::select(v, Color::Purple))
        .ok_or_else(|| violation(StrategyId::DomStartSafe, state, "no dominated closed neighbourhood"))
}
