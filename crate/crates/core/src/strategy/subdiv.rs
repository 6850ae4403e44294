//! Sepy's local win on 3-subdivided graphs of minimum degree at least 2.

use super::{not_applicable, select_digest, violation, winning_moves, Strategy, StrategyId};
use crate::error::StrategyError;
use crate::formats::GraphSource;
use crate::game::{GameConfig, GameState, Move, PassRights, Player, Variant};
use crate::graph::{SubdivisionMap, SubdivisionRole};

/// Take an immediate win if there is one. Otherwise, if Dom opened an interior vertex
/// `x` of `w–x–y–z`, colour `y` alike (threatening both `w` and `z`); if Dom opened an
/// original vertex `w`, colour its spokes `x_i` alike one at a time, each a threat
/// through `y_i`.
pub fn sepy_subdiv_move(state: &GameState, map: &SubdivisionMap) -> Result<Move, StrategyError> {
    let id = StrategyId::SepySubdiv;
    if state.actor() != Player::Sepy || state.is_over() {
        return Err(StrategyError::WrongTurn { strategy: id.name().to_string() });
    }
    if let Some(&mv) = winning_moves(state).first() {
        return Ok(mv);
    }
    let (a, c) = match state.history().first().map(|p| (p.actor, p.mv)) {
        Some((Player::Dom, Move::Select { v, c })) => (v, c),
        _ => return Err(violation(id, state, "Dom has not opened")),
    };
    let mv = match map.role(a) {
        SubdivisionRole::Interior { partner, .. } => {
            Some(Move::select(partner, c)).filter(|_| state.can_select(partner, c))
        }
        SubdivisionRole::Base(w) => {
            let spokes = map.spokes(map.base_ids[w]);
            let open = |x: usize| state.color_of(x).is_none() && state.can_select(x, c);
            spokes
                .iter()
                .find(|&&(x, y, z)| open(x) && state.color_of(y).is_none() && !state.dominated(z, c))
                .or_else(|| spokes.iter().find(|&&(x, _, _)| open(x)))
                .map(|&(x, _, _)| Move::select(x, c))
        }
    };
    mv.ok_or_else(|| violation(id, state, "no threat left to make"))
}

pub struct SepySubdiv {
    map: SubdivisionMap,
}

impl SepySubdiv {
    pub fn new(config: &GameConfig, source: &GraphSource) -> Result<Self, StrategyError> {
        let id = StrategyId::SepySubdiv;
        let Some(map) = source.subdivision.clone() else {
            return Err(not_applicable(id, "graph is not a 3-subdivision (use subdiv2:<base>)"));
        };
        if map.base.min_degree().unwrap_or(0) < 2 {
            return Err(not_applicable(id, "base graph has a vertex of degree below 2"));
        }
        if config.variant != Variant::Ddg
            || config.starter != Player::Dom
            || config.dom_picks != 1
            || config.sepy_picks != 1
            || config.pass != PassRights::None
        {
            return Err(not_applicable(id, "needs the Dom-start Disjoint game without passing"));
        }
        Ok(SepySubdiv { map })
    }
}

impl Strategy for SepySubdiv {
    fn id(&self) -> StrategyId {
        StrategyId::SepySubdiv
    }

    fn choose(&self, state: &GameState) -> Result<Move, StrategyError> {
        sepy_subdiv_move(state, &self.map)
    }

    fn context_key(&self, state: &GameState) -> Option<u64> {
        let first = state.history().first().and_then(|p| match p.mv {
            Move::Select { v, c } => Some((p.actor, v, c)),
            Move::Pass => None,
        });
        Some(select_digest(first))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_generator;
    use crate::game::Color::Purple;

    fn start(spec: &str) -> (GameState, SepySubdiv) {
        let src = parse_generator(spec).unwrap();
        let cfg = GameConfig::ddg(Player::Dom);
        (GameState::new(cfg, src.graph.clone()).unwrap(), SepySubdiv::new(&cfg, &src).unwrap())
    }

    #[test]
    fn interior_opening_gets_partner() {
        let (s, st) = start("subdiv2:complete:4");
        assert_eq!(s.n(), 16);
        // vertex 4 is the interior vertex next to 0 on edge 0-1; its partner is 5
        let s = s.after(Move::select(4, Purple)).unwrap();
        assert_eq!(st.choose(&s).unwrap(), Move::select(5, Purple));
    }

    #[test]
    fn base_opening_threatens_spokes() {
        let (s, st) = start("subdiv2:cycle:4");
        let s = s.after(Move::select(0, Purple)).unwrap();
        let first = st.choose(&s).unwrap();
        let spokes: Vec<usize> = st.map.spokes(0).iter().map(|t| t.0).collect();
        let Move::Select { v, c } = first else { panic!() };
        assert!(spokes.contains(&v));
        assert_eq!(c, Purple);
    }

    #[test]
    fn rejects_plain_graphs() {
        let cfg = GameConfig::ddg(Player::Dom);
        assert!(SepySubdiv::new(&cfg, &parse_generator("cycle:9").unwrap()).is_err());
        assert!(SepySubdiv::new(&cfg, &parse_generator("subdiv2:path:3").unwrap()).is_err());
    }
}
