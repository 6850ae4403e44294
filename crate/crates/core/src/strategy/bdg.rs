//! Dom's strategies for the Bicolored game, built on a maximum matching.

use super::{not_applicable, select_digest, sepy_just_selected, violation, Strategy, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameConfig, GameState, Move, Player, Variant};
use crate::graph::Graph;
use crate::matching::{matching_structure, EdgeKind, MatchingStructure};

const P: Color = Color::Purple;

/// Matching computed once per game; the record of which endpoints Dom has taken
/// is read off the board, since Dom's vertices are exactly the purple ones.
pub struct BdgPlan {
    id: StrategyId,
    matching: MatchingStructure,
}

impl BdgPlan {
    pub fn new(id: StrategyId, config: &GameConfig, g: &Graph) -> Result<Self, StrategyError> {
        if config.variant != Variant::Bdg {
            return Err(not_applicable(id, "needs the Bicolored game"));
        }
        let matching = matching_structure(g);
        if id == StrategyId::BdgMatching && !matching.is_perfect() {
            return Err(not_applicable(id, "graph has no perfect matching"));
        }
        Ok(BdgPlan { id, matching })
    }

    pub fn matching(&self) -> &MatchingStructure {
        &self.matching
    }
}

impl Strategy for BdgPlan {
    fn id(&self) -> StrategyId {
        self.id
    }

    fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        if state.actor() != Player::Dom || state.is_over() {
            return Err(StrategyError::WrongTurn { strategy: self.id.name().to_string() });
        }
        match self.id {
            StrategyId::BdgMatching => bdg_matching_move(state, &self.matching),
            _ => bdg_general_move(state, &self.matching),
        }
    }

    fn context_key(&self, state: &GameState) -> Option<u64> {
        Some(select_digest(sepy_just_selected(state).map(|(v, c)| (Player::Sepy, v, c))))
    }

    fn check_after(&self, state: &GameState) -> Result<(), String> {
        if let Some(&(u, v)) = self
            .matching
            .pairs
            .iter()
            .find(|&&(u, v)| state.color_of(u) == Some(P) && state.color_of(v) == Some(P))
        {
            return Err(format!("Dom holds both ends of matching edge {u}-{v}"));
        }
        if self.id == StrategyId::BdgGeneral {
            if let Some(b) = (0..state.n()).find(|&b| state.color_of(b) == Some(Color::Blue) && !state.dominated(b, P)) {
                return Err(format!("blue vertex {b} has no purple neighbour"));
            }
        }
        Ok(())
    }
}

/// The partner of the vertex Sepy just took, when Dom may still colour it.
fn partner_reply(state: &GameState, m: &MatchingStructure) -> Option<Move> {
    let (v, _) = sepy_just_selected(state)?;
    let p = m.mate[v]?;
    state.can_select(p, P).then(|| Move::select(p, P))
}

pub fn bdg_matching_move(state: &GameState, m: &MatchingStructure) -> Result<Move, StrategyError> {
    if let Some(mv) = partner_reply(state, m) {
        return Ok(mv);
    }
    (0..state.n())
        .find(|&v| {
            m.mate[v].is_some_and(|p| state.color_of(p).is_none()) && state.can_select(v, P)
        })
        .map(|v| Move::select(v, P))
        .ok_or_else(|| violation(StrategyId::BdgMatching, state, "no legal vertex in an untouched pair"))
}

/// After Dom colours `v`, every blue vertex is dominated in purple.
fn keeps_blue_covered(state: &GameState, v: usize) -> bool {
    let g = state.graph();
    (0..state.n()).all(|b| state.color_of(b) != Some(Color::Blue) || state.dominated(b, P) || g.has_edge(v, b))
}

/// Matching vertex `v` may be taken under the centre and incompleteness rules.
fn matching_vertex_ok(state: &GameState, m: &MatchingStructure, v: usize) -> bool {
    let (Some(p), Some(e)) = (m.mate[v], m.edge_of[v]) else { return false };
    match state.color_of(p) {
        Some(P) => false,
        Some(_) => true,
        None => match m.kinds.get(e) {
            Some(EdgeKind::Star { center }) => *center == v,
            _ => true,
        },
    }
}

/// Partner reply first; then the least matching vertex allowed by the centre,
/// incompleteness and neighbour rules; external vertices only as a last resort.
pub fn bdg_general_move(state: &GameState, m: &MatchingStructure) -> Result<Move, StrategyError> {
    if let Some(mv) = partner_reply(state, m) {
        return Ok(mv);
    }
    let legal = |v: usize| state.can_select(v, P) && keeps_blue_covered(state, v);
    if let Some(v) = (0..state.n()).find(|&v| matching_vertex_ok(state, m, v) && legal(v)) {
        return Ok(Move::select(v, P));
    }
    m.external
        .iter()
        .copied()
        .find(|&v| legal(v))
        .map(|v| Move::select(v, P))
        .ok_or_else(|| violation(StrategyId::BdgGeneral, state, "no move keeps the four rules"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::Blue;

    fn plan(id: StrategyId, g: &Graph) -> BdgPlan {
        BdgPlan::new(id, &GameConfig::bdg(Player::Dom), g).unwrap()
    }

    #[test]
    fn matching_strategy_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let p = plan(StrategyId::BdgMatching, &c4);
        let s = GameState::new(GameConfig::bdg(Player::Dom), c4.clone()).unwrap();
        assert_eq!(p.choose(&s).unwrap(), Move::select(0, P));
        let t = GameState::new(GameConfig::bdg(Player::Sepy), c4.clone()).unwrap().after(Move::select(0, Blue)).unwrap();
        let mate = p.matching().mate[0].unwrap();
        assert_eq!(p.choose(&t).unwrap(), Move::select(mate, P));
        assert!(BdgPlan::new(StrategyId::BdgMatching, &GameConfig::bdg(Player::Dom), &Graph::path(3).unwrap()).is_err());
    }

    #[test]
    fn center_rule_on_path() {
        let p3 = Graph::path(3).unwrap();
        let p = plan(StrategyId::BdgGeneral, &p3);
        assert_eq!(p.matching().kinds[0], EdgeKind::Star { center: 1 });
        let s = GameState::new(GameConfig::bdg(Player::Dom), p3).unwrap();
        assert_eq!(p.choose(&s).unwrap(), Move::select(1, P));
    }

    #[test]
    fn neighbor_rule_reply() {
        // P4 has the perfect matching {0-1, 2-3}; Sepy takes 2, Dom must answer 3
        let p4 = Graph::path(4).unwrap();
        let p = plan(StrategyId::BdgGeneral, &p4);
        let s = GameState::new(GameConfig::bdg(Player::Sepy), p4).unwrap().after(Move::select(2, Blue)).unwrap();
        assert_eq!(p.choose(&s).unwrap(), Move::select(3, P));
        assert!(p.check_after(&s.after(Move::select(3, P)).unwrap()).is_ok());
    }

    #[test]
    fn externals_wait() {
        // star K1,3: centre 0 matched with 1; externals 2 and 3 hang on the centre
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = plan(StrategyId::BdgGeneral, &g);
        assert_eq!(p.matching().external, vec![2, 3]);
        let s = GameState::new(GameConfig::bdg(Player::Sepy), g).unwrap().after(Move::select(0, Blue)).unwrap();
        // partner 1 is the reply; the externals are not touched while it is available
        assert_eq!(p.choose(&s).unwrap(), Move::select(1, P));
    }
}
