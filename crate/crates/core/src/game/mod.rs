//! Rules engine for the Disjoint Domination Game (DDG) and the Bicolored Domination
//! Game (BDG), including (d:s) biased turns and single-player pass rights.
//!
//! A [`GameState`] is value-like: cloning it is the undo mechanism. Every selection
//! updates a per-vertex, per-colour domination ledger incrementally and re-evaluates
//! the game status, so a win in the middle of a biased turn ends the game at once.

mod trace;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::GameError;
use crate::graph::Graph;

pub use trace::{replay_trace, trace_records, trace_to_jsonl, StatusTag, TraceRecord};

/// Largest graph the engine accepts.
pub const MAX_GAME_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Purple,
    Blue,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::Purple, Color::Blue];

    #[inline]
    pub fn complement(self) -> Color {
        match self {
            Color::Purple => Color::Blue,
            Color::Blue => Color::Purple,
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Purple => "purple",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Dom,
    Sepy,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Dom => Player::Sepy,
            Player::Sepy => Player::Dom,
        }
    }

    /// The private colour of this player in the Bicolored game.
    pub fn private_color(self) -> Color {
        match self {
            Player::Dom => Color::Purple,
            Player::Sepy => Color::Blue,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Dom => "dom",
            Player::Sepy => "sepy",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Ddg,
    Bdg,
}

/// Which player, if any, may skip a turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PassRights {
    None,
    Dom,
    Sepy,
}

impl PassRights {
    pub fn holder(self) -> Option<Player> {
        match self {
            PassRights::None => None,
            PassRights::Dom => Some(Player::Dom),
            PassRights::Sepy => Some(Player::Sepy),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub variant: Variant,
    pub starter: Player,
    /// Dom's selections per turn.
    pub dom_picks: u8,
    /// Upper bound on Sepy's selections per turn.
    pub sepy_picks: u8,
    pub pass: PassRights,
    /// Lift the ban on a whole-turn pass as the first move of the game.
    #[serde(default)]
    pub allow_first_turn_pass: bool,
}

impl GameConfig {
    pub fn ddg(starter: Player) -> Self {
        GameConfig {
            variant: Variant::Ddg,
            starter,
            dom_picks: 1,
            sepy_picks: 1,
            pass: PassRights::None,
            allow_first_turn_pass: false,
        }
    }

    pub fn bdg(starter: Player) -> Self {
        GameConfig { variant: Variant::Bdg, ..Self::ddg(starter) }
    }

    /// The (d:s) game. Sepy may pass whole turns, as that game allows.
    pub fn biased(starter: Player, d: u8, s: u8) -> Self {
        GameConfig {
            dom_picks: d,
            sepy_picks: s,
            pass: PassRights::Sepy,
            ..Self::ddg(starter)
        }
    }

    pub fn with_pass(mut self, pass: PassRights) -> Self {
        self.pass = pass;
        self
    }

    pub fn picks(&self, p: Player) -> u8 {
        match p {
            Player::Dom => self.dom_picks,
            Player::Sepy => self.sepy_picks,
        }
    }

    pub fn validate(&self) -> Result<(), GameError> {
        let bad = |msg: &str| Err(GameError::InvalidConfig(msg.to_string()));
        if self.dom_picks == 0 || self.sepy_picks == 0 {
            return bad("selections per turn must be at least 1");
        }
        if self.variant == Variant::Bdg && (self.dom_picks != 1 || self.sepy_picks != 1) {
            return bad("the bicolored game is played with d = s = 1");
        }
        if self.pass == PassRights::Dom && self.dom_picks != 1 {
            return bad("Dom may not pass in a biased game");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Select { v: usize, c: Color },
    /// Whole-turn pass, or (for Sepy with s > 1) ending a turn after some selections.
    Pass,
}

impl Move {
    pub fn select(v: usize, c: Color) -> Self {
        Move::Select { v, c }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Select { v, c } => write!(f, "{v}:{c}"),
            Move::Pass => f.write_str("pass"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MoveRepr {
    Select { v: usize, c: Color },
    Pass(String),
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Move::Select { v, c } => MoveRepr::Select { v, c }.serialize(s),
            Move::Pass => s.serialize_str("pass"),
        }
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match MoveRepr::deserialize(d)? {
            MoveRepr::Select { v, c } => Ok(Move::Select { v, c }),
            MoveRepr::Pass(s) if s == "pass" => Ok(Move::Pass),
            MoveRepr::Pass(s) => Err(serde::de::Error::custom(format!("unknown move `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Ongoing(Player),
    /// `N[witness]` is entirely coloured `color`.
    SepyWin { witness: usize, color: Color },
    DomWin,
}

impl Status {
    pub fn winner(&self) -> Option<Player> {
        match self {
            Status::Ongoing(_) => None,
            Status::SepyWin { .. } => Some(Player::Sepy),
            Status::DomWin => Some(Player::Dom),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ply {
    pub actor: Player,
    #[serde(rename = "move")]
    pub mv: Move,
}

#[derive(Clone)]
pub struct GameState {
    graph: Arc<Graph>,
    config: GameConfig,
    colors: Vec<Option<Color>>,
    ledger: Vec<[u8; 2]>,
    /// Number of vertices dominated in both colours.
    doubly: usize,
    actor: Player,
    selections: u8,
    any_move_made: bool,
    history: Vec<Ply>,
    status: Status,
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let board: String = self
            .colors
            .iter()
            .map(|c| match c {
                None => '.',
                Some(Color::Purple) => 'p',
                Some(Color::Blue) => 'b',
            })
            .collect();
        f.debug_struct("GameState")
            .field("graph", &self.graph)
            .field("board", &board)
            .field("actor", &self.actor)
            .field("selections", &self.selections)
            .field("status", &self.status)
            .field("history", &self.history.iter().map(|p| format!("{}:{}", p.actor, p.mv)).collect::<Vec<_>>())
            .finish()
    }
}

impl GameState {
    pub fn new(config: GameConfig, graph: impl Into<Arc<Graph>>) -> Result<Self, GameError> {
        let graph = graph.into();
        Self::validate(&config, &graph)?;
        let n = graph.n();
        let mut state = GameState {
            graph,
            config,
            colors: vec![None; n],
            ledger: vec![[0; 2]; n],
            doubly: 0,
            actor: config.starter,
            selections: 0,
            any_move_made: false,
            history: Vec::new(),
            status: Status::Ongoing(config.starter),
        };
        state.refresh_status();
        Ok(state)
    }

    /// A position given directly by its colouring, with `actor` to move at the start of a turn.
    /// History is empty; the position need not be reachable by legal play.
    pub fn from_position(
        config: GameConfig,
        graph: impl Into<Arc<Graph>>,
        colors: &[Option<Color>],
        actor: Player,
    ) -> Result<Self, GameError> {
        let mut state = Self::new(config, graph)?;
        assert_eq!(colors.len(), state.graph.n(), "colouring length must equal n");
        state.colors = colors.to_vec();
        state.ledger = state.recompute_ledger();
        state.doubly = state.ledger.iter().filter(|l| l[0] > 0 && l[1] > 0).count();
        state.any_move_made = colors.iter().any(Option::is_some);
        state.actor = actor;
        state.status = match state.find_monochromatic() {
            Some((witness, color)) => Status::SepyWin { witness, color },
            None => Status::Ongoing(actor),
        };
        if state.status.winner().is_none() {
            state.refresh_status();
        }
        Ok(state)
    }

    fn validate(config: &GameConfig, g: &Graph) -> Result<(), GameError> {
        config.validate()?;
        if g.n() == 0 {
            return Err(GameError::InvalidConfig("graph has no vertices".into()));
        }
        if g.n() > MAX_GAME_VERTICES {
            return Err(GameError::TooLarge(g.n()));
        }
        if let Some(v) = g.first_isolated() {
            return Err(GameError::IsolatedVertex(v));
        }
        Ok(())
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    #[inline]
    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn color_of(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// `|N[v] ∩ V_c|`.
    #[inline]
    pub fn ledger(&self, v: usize, c: Color) -> u8 {
        self.ledger[v][c.index()]
    }

    #[inline]
    pub fn dominated(&self, v: usize, c: Color) -> bool {
        self.ledger[v][c.index()] > 0
    }

    /// Number of colours (0, 1 or 2) dominating `v`.
    pub fn domination_degree(&self, v: usize) -> usize {
        self.ledger[v].iter().filter(|&&k| k > 0).count()
    }

    pub fn doubly_dominated_count(&self) -> usize {
        self.doubly
    }

    #[inline]
    pub fn actor(&self) -> Player {
        self.actor
    }

    pub fn selections_this_turn(&self) -> u8 {
        self.selections
    }

    /// Selections the actor still owes (Dom) or may still make (Sepy) this turn.
    pub fn selections_left(&self) -> u8 {
        self.config.picks(self.actor) - self.selections
    }

    pub fn any_move_made(&self) -> bool {
        self.any_move_made
    }

    pub fn history(&self) -> &[Ply] {
        &self.history
    }

    #[inline]
    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_over(&self) -> bool {
        self.status.winner().is_some()
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_none()).count()
    }

    /// Most recent selection and who made it.
    pub fn last_select(&self) -> Option<(Player, usize, Color)> {
        self.history.iter().rev().find_map(|p| match p.mv {
            Move::Select { v, c } => Some((p.actor, v, c)),
            Move::Pass => None,
        })
    }

    /// Most recent selection made by `player`.
    pub fn last_select_by(&self, player: Player) -> Option<(usize, Color)> {
        self.history.iter().rev().find_map(|p| match p.mv {
            Move::Select { v, c } if p.actor == player => Some((v, c)),
            _ => None,
        })
    }

    /// Rules (i) and (ii): `v` is uncoloured and some `u ∈ N[v]` is not yet dominated in `c`.
    /// Ignores whose turn it is and private colours.
    #[inline]
    pub fn can_select(&self, v: usize, c: Color) -> bool {
        self.colors[v].is_none() && self.graph.closed_iter(v).any(|u| self.ledger[u][c.index()] == 0)
    }

    fn allowed_color(&self, player: Player, c: Color) -> bool {
        self.config.variant == Variant::Ddg || player.private_color() == c
    }

    /// Whether `player` would have any legal selection in the current colouring.
    pub fn has_legal_select(&self, player: Player) -> bool {
        Color::ALL.into_iter().filter(|&c| self.allowed_color(player, c)).any(|c| {
            (0..self.n()).any(|u| {
                self.ledger[u][c.index()] == 0 && self.graph.closed_iter(u).any(|w| self.colors[w].is_none())
            })
        })
    }

    pub fn is_legal(&self, mv: &Move) -> bool {
        if self.is_over() {
            return false;
        }
        match *mv {
            Move::Select { v, c } => v < self.n() && self.allowed_color(self.actor, c) && self.can_select(v, c),
            Move::Pass => self.pass_allowed(),
        }
    }

    fn pass_allowed(&self) -> bool {
        if self.selections > 0 {
            // ending a turn early: only Sepy, whose bound is "at most s"
            return self.actor == Player::Sepy;
        }
        self.config.pass.holder() == Some(self.actor)
            && (self.any_move_made || self.config.allow_first_turn_pass)
    }

    /// Legal moves: vertex ascending, purple before blue, `Pass` last.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        if self.is_over() {
            return out;
        }
        for v in 0..self.n() {
            if self.colors[v].is_some() {
                continue;
            }
            for c in Color::ALL {
                if self.allowed_color(self.actor, c) && self.can_select(v, c) {
                    out.push(Move::Select { v, c });
                }
            }
        }
        if self.pass_allowed() {
            out.push(Move::Pass);
        }
        out
    }

    /// Apply `mv` in place. Illegal moves leave the state untouched.
    pub fn apply(&mut self, mv: Move) -> Result<(), GameError> {
        if self.is_over() {
            return Err(GameError::GameOver);
        }
        if !self.is_legal(&mv) {
            return Err(GameError::IllegalMove { mv, ply: self.history.len() });
        }
        let mover = self.actor;
        self.history.push(Ply { actor: mover, mv });
        self.any_move_made = true;
        match mv {
            Move::Select { v, c } => {
                self.color(v, c);
                self.selections += 1;
                if let Some(witness) = self.new_monochromatic(v, c) {
                    self.status = Status::SepyWin { witness, color: c };
                    return Ok(());
                }
                if self.config.variant == Variant::Ddg && self.doubly == self.n() {
                    self.status = Status::DomWin;
                    return Ok(());
                }
                let turn_over =
                    self.selections >= self.config.picks(mover) || !self.has_legal_select(mover);
                if turn_over {
                    self.end_turn();
                }
            }
            Move::Pass => self.end_turn(),
        }
        self.refresh_status();
        Ok(())
    }

    /// Clone-and-apply.
    pub fn after(&self, mv: Move) -> Result<GameState, GameError> {
        let mut next = self.clone();
        next.apply(mv)?;
        Ok(next)
    }

    fn color(&mut self, v: usize, c: Color) {
        self.colors[v] = Some(c);
        let ci = c.index();
        let graph = Arc::clone(&self.graph);
        for u in graph.closed_iter(v) {
            let l = &mut self.ledger[u];
            l[ci] += 1;
            if l[ci] == 1 && l[1 - ci] > 0 {
                self.doubly += 1;
            }
        }
    }

    /// After colouring `v` with `c`, the least `u ∈ N[v]` whose closed neighbourhood is all `c`.
    fn new_monochromatic(&self, v: usize, c: Color) -> Option<usize> {
        self.graph
            .closed_iter(v)
            .filter(|&u| self.ledger[u][c.index()] as usize == self.graph.degree(u) + 1)
            .min()
    }

    /// Least vertex with a monochromatic closed neighbourhood, scanning everything.
    pub fn find_monochromatic(&self) -> Option<(usize, Color)> {
        (0..self.n()).find_map(|u| {
            Color::ALL
                .into_iter()
                .find(|&c| self.ledger[u][c.index()] as usize == self.graph.degree(u) + 1)
                .map(|c| (u, c))
        })
    }

    fn end_turn(&mut self) {
        self.actor = self.actor.other();
        self.selections = 0;
    }

    fn refresh_status(&mut self) {
        if self.config.variant == Variant::Bdg {
            let here = self.has_legal_select(self.actor);
            let there = self.has_legal_select(self.actor.other());
            if !here && !there {
                debug_assert!(self.bicolored_dom_condition(), "BDG terminal state without <d**>: {self:?}");
                self.status = Status::DomWin;
                return;
            }
            if !here && self.selections == 0 {
                self.actor = self.actor.other();
            }
        } else if self.doubly == self.n() {
            self.status = Status::DomWin;
            return;
        }
        self.status = Status::Ongoing(self.actor);
    }

    /// `<d**>`: some colour class dominates every vertex and no `N[v]` lies inside it.
    pub fn bicolored_dom_condition(&self) -> bool {
        self.find_monochromatic().is_none()
            && Color::ALL
                .into_iter()
                .any(|c| (0..self.n()).all(|v| self.dominated(v, c)))
    }

    /// The ledger rebuilt from the colouring alone.
    pub fn recompute_ledger(&self) -> Vec<[u8; 2]> {
        let mut ledger = vec![[0u8; 2]; self.n()];
        for (v, slot) in ledger.iter_mut().enumerate() {
            for u in self.graph.closed_iter(v) {
                if let Some(c) = self.colors[u] {
                    slot[c.index()] += 1;
                }
            }
        }
        ledger
    }

    pub fn ledger_consistent(&self) -> bool {
        self.recompute_ledger() == self.ledger
            && self.doubly == self.ledger.iter().filter(|l| l[0] > 0 && l[1] > 0).count()
    }

    /// The same position with purple and blue exchanged (history included).
    pub fn palette_swapped(&self) -> GameState {
        let mut s = self.clone();
        for c in s.colors.iter_mut().flatten() {
            *c = c.complement();
        }
        for l in &mut s.ledger {
            l.swap(0, 1);
        }
        for p in &mut s.history {
            if let Move::Select { c, .. } = &mut p.mv {
                *c = c.complement();
            }
        }
        if let Status::SepyWin { witness, color } = s.status {
            s.status = Status::SepyWin { witness, color: color.complement() };
        }
        s
    }

    /// Vertices dominated by exactly `k` colours.
    pub fn dominated_by(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.domination_degree(v) == k)
    }
}
