//! Dom with pass rights on a possibly disconnected graph: follow Sepy into the
//! component of his latest selection and pass when nothing is left there.

use std::sync::{Arc, Mutex};

use super::{not_applicable, opposite_neighbor_move, select_digest, violation, Strategy, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameConfig, GameState, Move, PassRights, Player, Variant};
use crate::graph::Graph;
use crate::solver::{Solver, SolverLimits};

/// Largest component the opening classification will solve.
pub const OPENER_COMPONENT_CAP: usize = 12;

/// A component Dom opens himself, played by exact search as its own Dom-start game.
struct Opener {
    comp: usize,
    sub: Arc<Graph>,
    /// `ids[i]` is the vertex of the whole graph behind vertex `i` of `sub`.
    ids: Vec<usize>,
    solver: Mutex<Solver>,
}

impl Opener {
    fn local_state(&self, state: &GameState) -> GameState {
        let colors: Vec<_> = self.ids.iter().map(|&v| state.color_of(v)).collect();
        GameState::from_position(GameConfig::ddg(Player::Dom), Arc::clone(&self.sub), &colors, Player::Dom)
            .expect("component of a valid game")
    }

    fn best(&self, state: &GameState) -> Result<Move, StrategyError> {
        let local = self.local_state(state);
        let bm = self.solver.lock().expect("solver lock").best_move(&local)?;
        Ok(match bm.mv {
            Move::Select { v, c } => Move::select(self.ids[v], c),
            Move::Pass => Move::Pass,
        })
    }
}

pub struct DomPass {
    labels: Vec<usize>,
    comps: Vec<Vec<usize>>,
    opener: Option<Opener>,
}

impl DomPass {
    pub fn new(config: &GameConfig, g: &Graph) -> Result<Self, StrategyError> {
        let id = StrategyId::DomPass;
        if config.variant != Variant::Ddg || config.dom_picks != 1 || config.sepy_picks != 1 {
            return Err(not_applicable(id, "needs the unbiased Disjoint game"));
        }
        if config.pass != PassRights::Dom {
            return Err(not_applicable(id, "needs pass rights for Dom"));
        }
        let comps = g.components();
        let labels = g.component_labels();
        let mut opener = None;
        if config.starter == Player::Dom {
            for (i, comp) in comps.iter().enumerate() {
                if comp.len() > OPENER_COMPONENT_CAP {
                    continue;
                }
                let (sub, ids) = g.induced(comp);
                let sub = Arc::new(sub);
                let limits = SolverLimits { max_vertices: OPENER_COMPONENT_CAP, ..SolverLimits::default() };
                let mut solver = Solver::new(limits);
                let start = GameState::new(GameConfig::ddg(Player::Dom), Arc::clone(&sub))
                    .map_err(|e| not_applicable(id, e.to_string()))?;
                if solver.value(&start)? == Player::Dom {
                    opener = Some(Opener { comp: i, sub, ids, solver: Mutex::new(solver) });
                    break;
                }
            }
            if opener.is_none() {
                return Err(not_applicable(id, "no component is a Dom win when Dom starts"));
            }
        }
        Ok(DomPass { labels, comps, opener })
    }

    /// The component Dom opens in the Dom-start game.
    pub fn opening_component(&self) -> Option<&[usize]> {
        self.opener.as_ref().map(|o| self.comps[o.comp].as_slice())
    }
}

impl Strategy for DomPass {
    fn id(&self) -> StrategyId {
        StrategyId::DomPass
    }

    fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        let id = self.id();
        if state.actor() != Player::Dom || state.is_over() {
            return Err(StrategyError::WrongTurn { strategy: id.name().to_string() });
        }
        let Some((v, c)) = state.last_select_by(Player::Sepy) else {
            return match &self.opener {
                Some(o) if !state.any_move_made() => o.best(state),
                _ => Err(violation(id, state, "nothing to follow")),
            };
        };
        let k = self.labels[v];
        let open = self.comps[k]
            .iter()
            .any(|&u| Color::ALL.into_iter().any(|c| state.can_select(u, c)));
        if !open {
            return Ok(Move::Pass);
        }
        if let Some(o) = self.opener.as_ref().filter(|o| o.comp == k) {
            return o.best(state);
        }
        let region: Vec<bool> = self.labels.iter().map(|&l| l == k).collect();
        opposite_neighbor_move(state, Some((v, c)), Some(&region))
            .ok_or_else(|| violation(id, state, "no opposite-neighbour move in the component"))
    }

    fn context_key(&self, state: &GameState) -> Option<u64> {
        Some(select_digest(state.last_select_by(Player::Sepy).map(|(v, c)| (Player::Sepy, v, c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::{Blue, Purple};

    fn c4_c8() -> Graph {
        Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(8).unwrap())
    }

    #[test]
    fn follows_sepy_into_the_big_cycle() {
        let cfg = GameConfig::ddg(Player::Sepy).with_pass(PassRights::Dom);
        let dp = DomPass::new(&cfg, &c4_c8()).unwrap();
        let s = GameState::new(cfg, c4_c8()).unwrap().after(Move::select(6, Purple)).unwrap();
        let mv = dp.choose(&s).unwrap();
        assert_eq!(mv, Move::select(5, Blue));
    }

    #[test]
    fn passes_when_component_is_finished() {
        let cfg = GameConfig::ddg(Player::Sepy).with_pass(PassRights::Dom);
        let dp = DomPass::new(&cfg, &c4_c8()).unwrap();
        let mut s = GameState::new(cfg, c4_c8()).unwrap();
        let line = [(0, Purple), (5, Purple), (1, Blue), (6, Blue), (3, Blue)];
        for (v, c) in line {
            s.apply(Move::select(v, c)).unwrap();
        }
        // the C4 still needs purple at 2, so Dom answers there
        assert_eq!(dp.choose(&s).unwrap(), Move::select(2, Purple));
        s.apply(Move::select(7, Purple)).unwrap();
        s.apply(Move::select(2, Purple)).unwrap();
        assert_eq!((0..4).filter(|&v| s.domination_degree(v) == 2).count(), 4);
        assert_eq!(dp.choose(&s).unwrap(), Move::Pass);
    }

    #[test]
    fn dom_start_opens_the_small_cycle() {
        let cfg = GameConfig::ddg(Player::Dom).with_pass(PassRights::Dom);
        let dp = DomPass::new(&cfg, &c4_c8()).unwrap();
        assert_eq!(dp.opening_component(), Some(&[0, 1, 2, 3][..]));
        let s = GameState::new(cfg, c4_c8()).unwrap();
        let Move::Select { v, .. } = dp.choose(&s).unwrap() else { panic!() };
        assert!(v < 4);
        let only_c8 = GameConfig::ddg(Player::Dom).with_pass(PassRights::Dom);
        assert!(DomPass::new(&only_c8, &Graph::cycle(8).unwrap()).is_err());
    }
}
