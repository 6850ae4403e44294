//! Exact game values by memoised negamax over the win/lose lattice, and exhaustive
//! certification of fixed strategies.

mod verify;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::SolveError;
use crate::game::{GameConfig, GameState, Move, Player, Variant};
use crate::graph::Graph;

pub use verify::{verify_built, verify_strategy, VerificationReport};

/// Default bound on the number of vertices the solver accepts.
pub const DEFAULT_VERTEX_CAP: usize = 14;
/// Default bound on transposition-table entries.
pub const DEFAULT_TABLE_CAP: usize = 40_000_000;
/// Environment variable overriding [`DEFAULT_VERTEX_CAP`].
pub const STATE_CAP_ENV: &str = "DOMGAME_STATE_CAP";

/// Canonical position key: the colouring as base-3 digits (0 = uncoloured, 1 = purple,
/// 2 = blue) followed by actor, selections made this turn and the first-move flag.
/// In the Disjoint game the key is the smaller of a position and its palette swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateKey(pub u128);

fn raw_key(state: &GameState, swap: bool) -> u128 {
    let mut code: u128 = 0;
    for v in (0..state.n()).rev() {
        let digit = match state.color_of(v) {
            None => 0,
            Some(c) => 1 + (c.index() ^ swap as usize) as u128,
        };
        code = code * 3 + digit;
    }
    let meta = ((state.actor() == Player::Sepy) as u128)
        | (state.selections_this_turn() as u128) << 1
        | (state.any_move_made() as u128) << 9;
    code << 10 | meta
}

/// Key used by the solver: palette-swap minimised in the Disjoint game only.
pub fn encode_state(state: &GameState) -> StateKey {
    let plain = raw_key(state, false);
    if state.config().variant == Variant::Ddg {
        StateKey(plain.min(raw_key(state, true)))
    } else {
        StateKey(plain)
    }
}

/// Key without palette minimisation.
pub fn encode_state_exact(state: &GameState) -> StateKey {
    StateKey(raw_key(state, false))
}

#[derive(Clone, Copy, Debug)]
pub struct SolverLimits {
    pub max_vertices: usize,
    pub max_entries: usize,
}

impl Default for SolverLimits {
    /// Vertex cap from `DOMGAME_STATE_CAP` when set, otherwise 14.
    fn default() -> Self {
        let max_vertices = std::env::var(STATE_CAP_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_VERTEX_CAP);
        SolverLimits { max_vertices, max_entries: DEFAULT_TABLE_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BestMove {
    #[serde(rename = "move")]
    pub mv: Move,
    /// False when every move loses for the player to move.
    pub winning: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub winner: Player,
    pub best_move: Option<Move>,
    pub nodes_expanded: u64,
    pub pv: Vec<Move>,
}

/// Negamax solver with an optional transposition table. One solver may be reused for
/// many positions of the same game (same graph and configuration).
pub struct Solver {
    table: FxHashMap<StateKey, Player>,
    memo: bool,
    limits: SolverLimits,
    nodes: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Self::new(SolverLimits::default())
    }
}

impl Solver {
    pub fn new(limits: SolverLimits) -> Self {
        Solver { table: FxHashMap::default(), memo: true, limits, nodes: 0 }
    }

    /// Plain game-tree search, no transposition table.
    pub fn without_memo(limits: SolverLimits) -> Self {
        Solver { memo: false, ..Self::new(limits) }
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    fn check(&self, state: &GameState) -> Result<(), SolveError> {
        if state.n() > self.limits.max_vertices {
            return Err(SolveError::VertexCap { n: state.n(), cap: self.limits.max_vertices });
        }
        Ok(())
    }

    /// Winner from `state` under optimal play by both sides.
    pub fn value(&mut self, state: &GameState) -> Result<Player, SolveError> {
        self.check(state)?;
        self.search(state)
    }

    fn search(&mut self, state: &GameState) -> Result<Player, SolveError> {
        if let Some(w) = state.status().winner() {
            return Ok(w);
        }
        let key = encode_state(state);
        if self.memo {
            if let Some(&w) = self.table.get(&key) {
                return Ok(w);
            }
        }
        self.nodes += 1;
        let me = state.actor();
        let mut result = me.other();
        let moves = state.legal_moves();
        debug_assert!(!moves.is_empty(), "ongoing state without legal moves: {state:?}");
        for mv in moves {
            let child = state.after(mv).expect("legal move applies");
            if self.search(&child)? == me {
                result = me;
                break;
            }
        }
        if self.memo {
            if self.table.len() >= self.limits.max_entries {
                return Err(SolveError::TableFull(self.limits.max_entries));
            }
            self.table.insert(key, result);
        }
        Ok(result)
    }

    /// First move (in legal-move order) that achieves the position's value.
    pub fn best_move(&mut self, state: &GameState) -> Result<BestMove, SolveError> {
        self.check(state)?;
        if state.is_over() {
            return Err(SolveError::Terminal);
        }
        let me = state.actor();
        let moves = state.legal_moves();
        for &mv in &moves {
            let child = state.after(mv).expect("legal move applies");
            if self.search(&child)? == me {
                return Ok(BestMove { mv, winning: true });
            }
        }
        Ok(BestMove { mv: moves[0], winning: false })
    }

    /// Best moves for both sides from `state` to the end of the game.
    pub fn principal_variation(&mut self, state: &GameState) -> Result<Vec<Move>, SolveError> {
        let mut pv = Vec::new();
        let mut cur = state.clone();
        while !cur.is_over() {
            let bm = self.best_move(&cur)?;
            pv.push(bm.mv);
            cur.apply(bm.mv).expect("legal");
        }
        Ok(pv)
    }
}

/// Solve the game `config` on `g` from its initial position.
pub fn solve(config: GameConfig, g: &Graph) -> Result<SolveResult, SolveError> {
    solve_with(config, g, SolverLimits::default())
}

pub fn solve_with(config: GameConfig, g: &Graph, limits: SolverLimits) -> Result<SolveResult, SolveError> {
    let state = GameState::new(config, g.clone())?;
    let mut solver = Solver::new(limits);
    let winner = solver.value(&state)?;
    let nodes_expanded = solver.nodes_expanded();
    let pv = solver.principal_variation(&state)?;
    Ok(SolveResult { winner, best_move: pv.first().copied(), nodes_expanded, pv })
}

/// Optimal move for the actor of `state` (a position of the game `config` on `g`).
pub fn best_move(config: GameConfig, g: &Graph, state: &GameState) -> Result<BestMove, SolveError> {
    debug_assert_eq!(state.config(), &config);
    debug_assert_eq!(state.graph(), g);
    Solver::default().best_move(state)
}

/// Map a move through a palette swap.
pub fn swap_move(mv: Move) -> Move {
    match mv {
        Move::Select { v, c } => Move::Select { v, c: c.complement() },
        Move::Pass => Move::Pass,
    }
}
