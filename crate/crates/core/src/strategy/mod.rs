//! Constructive strategies for Dom and Sepy, each a deterministic function of the
//! current state (history included) plus memory fixed when the strategy is built.

mod baseline;
mod bdg;
mod biased;
mod cycle;
mod ons;
mod pass;
mod safe_start;
mod subdiv;

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::error::StrategyError;
use crate::formats::GraphSource;
use crate::game::{GameConfig, GameState, Move, Player};
use crate::solver::{Solver, SolverLimits};

pub use baseline::{greedy_win_move, random_move, winning_moves};
pub use bdg::{bdg_general_move, bdg_matching_move, BdgPlan};
pub use biased::{biased_dom_move, component_safe};
pub use cycle::{cycle_order, sepy_cycle_move, CycleMemory};
pub use ons::{ons_move, onsp_move, opposite_neighbor_move};
pub use pass::DomPass;
pub use safe_start::{dom_start_safe_move, safe_start_vertex};
pub use subdiv::sepy_subdiv_move;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrategyId {
    Ons,
    Onsp,
    DomStartSafe,
    DomPass,
    BiasedDom,
    BdgMatching,
    BdgGeneral,
    SepyCycle,
    SepySubdiv,
    Random(u64),
    GreedyWin(u64),
}

impl StrategyId {
    /// The seat this strategy is written for; `None` for the baseline adversaries.
    pub fn role(self) -> Option<Player> {
        use StrategyId::*;
        match self {
            Ons | Onsp | DomStartSafe | DomPass | BiasedDom | BdgMatching | BdgGeneral => Some(Player::Dom),
            SepyCycle | SepySubdiv => Some(Player::Sepy),
            Random(_) | GreedyWin(_) => None,
        }
    }

    pub fn name(self) -> &'static str {
        use StrategyId::*;
        match self {
            Ons => "ons",
            Onsp => "onsp",
            DomStartSafe => "dom-start-safe",
            DomPass => "dom-pass",
            BiasedDom => "biased-dom",
            BdgMatching => "bdg-matching",
            BdgGeneral => "bdg-general",
            SepyCycle => "sepy-cycle",
            SepySubdiv => "sepy-subdiv",
            Random(_) => "random",
            GreedyWin(_) => "greedy",
        }
    }

    /// Replace the seed of a seeded baseline.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            StrategyId::Random(_) => StrategyId::Random(seed),
            StrategyId::GreedyWin(_) => StrategyId::GreedyWin(seed),
            other => other,
        }
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyId {
    type Err = String;

    /// Accepts the names above, `_` in place of `-`, and the short forms `cycle`/`subdiv`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use StrategyId::*;
        Ok(match s.replace('_', "-").as_str() {
            "ons" => Ons,
            "onsp" => Onsp,
            "dom-start-safe" | "safe-start" => DomStartSafe,
            "dom-pass" => DomPass,
            "biased-dom" | "biased" => BiasedDom,
            "bdg-matching" => BdgMatching,
            "bdg-general" => BdgGeneral,
            "sepy-cycle" | "cycle" => SepyCycle,
            "sepy-subdiv" | "subdiv" => SepySubdiv,
            "random" => Random(0),
            "greedy" | "greedy-win" => GreedyWin(0),
            other => return Err(format!("unknown strategy `{other}`")),
        })
    }
}

/// A move-selection rule for one seat.
pub trait Strategy: Send + Sync {
    fn id(&self) -> StrategyId;

    fn choose(&self, state: &GameState) -> Result<Move, StrategyError>;

    /// Digest of the history facts the strategy reads beyond the position itself.
    /// `Some` promises that every decision in the subtree below `state` depends only
    /// on the position and this digest, which lets verifiers share subtrees.
    fn context_key(&self, _state: &GameState) -> Option<u64> {
        None
    }

    /// Invariant the strategy promises right after each of its own moves.
    fn check_after(&self, _state: &GameState) -> Result<(), String> {
        Ok(())
    }
}

pub(crate) fn not_applicable(id: StrategyId, reason: impl Into<String>) -> StrategyError {
    StrategyError::NotApplicable { strategy: id.name().to_string(), reason: reason.into() }
}

pub(crate) fn violation(id: StrategyId, state: &GameState, reason: impl Into<String>) -> StrategyError {
    StrategyError::Violation {
        strategy: id.name().to_string(),
        reason: reason.into(),
        state: Box::new(state.clone()),
    }
}

pub(crate) fn select_digest(sel: Option<(Player, usize, crate::game::Color)>) -> u64 {
    match sel {
        None => 0,
        Some((p, v, c)) => 1 + ((v as u64) << 2 | (c.index() as u64) << 1 | (p == Player::Sepy) as u64),
    }
}

/// Sepy's selection in the immediately preceding ply, if the previous ply was one.
pub(crate) fn sepy_just_selected(state: &GameState) -> Option<(usize, crate::game::Color)> {
    match state.history().last() {
        Some(p) if p.actor == Player::Sepy => match p.mv {
            Move::Select { v, c } => Some((v, c)),
            Move::Pass => None,
        },
        _ => None,
    }
}

struct Simple {
    id: StrategyId,
    pick: fn(&GameState) -> Result<Move, StrategyError>,
    context: fn(&GameState) -> Option<u64>,
    check: fn(&GameState) -> Result<(), String>,
}

fn no_check(_: &GameState) -> Result<(), String> {
    Ok(())
}

impl Strategy for Simple {
    fn id(&self) -> StrategyId {
        self.id
    }
    fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        (self.pick)(state)
    }
    fn context_key(&self, state: &GameState) -> Option<u64> {
        (self.context)(state)
    }
    fn check_after(&self, state: &GameState) -> Result<(), String> {
        (self.check)(state)
    }
}

struct Seeded {
    id: StrategyId,
    seed: u64,
}

impl Strategy for Seeded {
    fn id(&self) -> StrategyId {
        self.id
    }
    fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        let mv = match self.id {
            StrategyId::GreedyWin(_) => greedy_win_move(state, self.seed),
            _ => random_move(state, self.seed),
        };
        mv.ok_or_else(|| violation(self.id, state, "no legal move"))
    }
}

/// Optimal play via the exact solver; a seat option for `play`, not a constructive strategy.
pub struct SolverPlayer {
    solver: Mutex<Solver>,
}

impl SolverPlayer {
    pub fn new(limits: SolverLimits) -> Self {
        SolverPlayer { solver: Mutex::new(Solver::new(limits)) }
    }

    pub fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        let mut solver = self.solver.lock().expect("solver lock");
        Ok(solver.best_move(state)?.mv)
    }
}

/// Check applicability of `id` for `role` in the game `config` on `source`, and build it.
pub fn build(
    id: StrategyId,
    role: Player,
    config: &GameConfig,
    source: &GraphSource,
) -> Result<Box<dyn Strategy>, StrategyError> {
    if let Some(r) = id.role() {
        if r != role {
            return Err(not_applicable(id, format!("written for {r}, not {role}")));
        }
    }
    let g = &source.graph;
    GameState::new(*config, g.clone()).map_err(|e| not_applicable(id, e.to_string()))?;
    use crate::game::{PassRights, Variant};
    let ddg = config.variant == Variant::Ddg;
    let unbiased = config.dom_picks == 1 && config.sepy_picks == 1;
    let need = |ok: bool, why: &str| if ok { Ok(()) } else { Err(not_applicable(id, why)) };
    let strategy: Box<dyn Strategy> = match id {
        StrategyId::Ons => {
            need(ddg && unbiased, "needs the unbiased Disjoint game")?;
            need(config.pass == PassRights::None, "ONS assumes no passing; use onsp")?;
            need(config.starter == Player::Sepy, "needs the Sepy-start game")?;
            need(g.is_connected(), "needs a connected graph")?;
            Box::new(Simple { id, pick: ons_move, context: ons::ons_context, check: ons::opposite_neighbor_invariant })
        }
        StrategyId::Onsp => {
            need(ddg && unbiased, "needs the unbiased Disjoint game")?;
            need(config.pass != PassRights::Dom, "Dom never passes under onsp")?;
            need(config.starter == Player::Sepy, "needs the Sepy-start game")?;
            need(g.is_connected(), "needs a connected graph")?;
            Box::new(Simple { id, pick: onsp_move, context: ons::onsp_context, check: ons::opposite_neighbor_invariant })
        }
        StrategyId::DomStartSafe => {
            need(ddg && unbiased, "needs the unbiased Disjoint game")?;
            need(config.pass != PassRights::Dom, "Dom never passes under this strategy")?;
            need(config.starter == Player::Dom, "needs the Dom-start game")?;
            need(g.is_connected(), "needs a connected graph")?;
            need(safe_start_vertex(g).is_some(), "no vertices u != v with N[u] ⊆ N[v]")?;
            Box::new(Simple { id, pick: dom_start_safe_move, context: ons::onsp_context, check: no_check })
        }
        StrategyId::DomPass => Box::new(DomPass::new(config, g)?),
        StrategyId::BiasedDom => {
            need(ddg, "needs the Disjoint game")?;
            need(config.dom_picks >= 2 && config.sepy_picks == 1, "needs a (d:1) game with d >= 2")?;
            Box::new(Simple { id, pick: biased_dom_move, context: ons::onsp_context, check: no_check })
        }
        StrategyId::BdgMatching => Box::new(BdgPlan::new(id, config, g)?),
        StrategyId::BdgGeneral => Box::new(BdgPlan::new(id, config, g)?),
        StrategyId::SepyCycle => {
            need(ddg && unbiased, "needs the unbiased Disjoint game")?;
            need(config.starter == Player::Dom, "needs the Dom-start game")?;
            need(config.pass == PassRights::None, "needs a game without passing")?;
            match cycle_order(g) {
                Some(order) if order.len() >= 8 => {}
                _ => return Err(not_applicable(id, "graph is not a cycle of length at least 8")),
            }
            Box::new(Simple { id, pick: cycle::sepy_cycle_pick, context: cycle::cycle_context, check: no_check })
        }
        StrategyId::SepySubdiv => Box::new(subdiv::SepySubdiv::new(config, source)?),
        StrategyId::Random(seed) | StrategyId::GreedyWin(seed) => Box::new(Seeded { id, seed }),
    };
    Ok(strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_generator;

    #[test]
    fn ids_round_trip() {
        for id in [
            StrategyId::Ons,
            StrategyId::Onsp,
            StrategyId::DomStartSafe,
            StrategyId::DomPass,
            StrategyId::BiasedDom,
            StrategyId::BdgMatching,
            StrategyId::BdgGeneral,
            StrategyId::SepyCycle,
            StrategyId::SepySubdiv,
        ] {
            assert_eq!(id.name().parse::<StrategyId>().unwrap(), id);
        }
        assert_eq!("cycle".parse::<StrategyId>().unwrap(), StrategyId::SepyCycle);
        assert_eq!("bdg_general".parse::<StrategyId>().unwrap(), StrategyId::BdgGeneral);
        assert!("minimax".parse::<StrategyId>().is_err());
    }

    #[test]
    fn applicability() {
        let src = parse_generator("cycle:8").unwrap();
        let dom = GameConfig::ddg(Player::Dom);
        assert!(matches!(
            build(StrategyId::DomStartSafe, Player::Dom, &dom, &src),
            Err(StrategyError::NotApplicable { .. })
        ));
        assert!(build(StrategyId::SepyCycle, Player::Sepy, &dom, &src).is_ok());
        assert!(build(StrategyId::SepyCycle, Player::Dom, &dom, &src).is_err());
        let p3 = parse_generator("path:3").unwrap();
        assert!(build(StrategyId::BdgMatching, Player::Dom, &GameConfig::bdg(Player::Dom), &p3).is_err());
        let c7 = parse_generator("cycle:7").unwrap();
        assert!(build(StrategyId::SepyCycle, Player::Sepy, &dom, &c7).is_err());
        assert!(build(StrategyId::Random(3), Player::Sepy, &dom, &c7).is_ok());
    }
}
