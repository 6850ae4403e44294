//! Dom's strategy for the (d:1) game, d >= 2: open fresh components with two
//! consecutive choices, otherwise answer the latest selection with an opposite neighbour.

use super::{opposite_neighbor_move, violation, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameState, Move, Player};

/// A component is safe when it is already dominated in both colours everywhere, or a
/// single legal selection inside it would make it so. No continuation can then
/// produce a monochromatic closed neighbourhood inside it.
pub fn component_safe(state: &GameState, comp: &[usize]) -> bool {
    let g = state.graph();
    let missing: Vec<usize> = comp.iter().copied().filter(|&w| state.domination_degree(w) < 2).collect();
    if missing.is_empty() {
        return true;
    }
    comp.iter().any(|&u| {
        state.color_of(u).is_none()
            && Color::ALL.into_iter().any(|c| {
                missing
                    .iter()
                    .all(|&w| state.dominated(w, c.complement()) && (w == u || g.has_edge(u, w)))
            })
    })
}

pub fn biased_dom_move(state: &GameState) -> Result<Move, StrategyError> {
    let id = StrategyId::BiasedDom;
    if state.actor() != Player::Dom || state.is_over() {
        return Err(StrategyError::WrongTurn { strategy: id.name().to_string() });
    }
    let comps = state.graph().components();
    let touched = |c: &[usize]| c.iter().any(|&v| state.color_of(v).is_some());
    let fresh = comps.iter().find(|c| !touched(c));
    let settled = comps.iter().filter(|c| touched(c)).all(|c| component_safe(state, c));
    if let Some(f) = fresh {
        // with two choices left and every opened component safe, start a new one
        if state.selections_left() >= 2 && settled {
            return Ok(Move::select(f[0], Color::Purple));
        }
    }
    if let Some((_, v, c)) = state.last_select() {
        if let Some(mv) = opposite_neighbor_move(state, Some((v, c)), None) {
            return Ok(mv);
        }
    }
    match fresh {
        Some(f) => Ok(Move::select(f[0], Color::Purple)),
        None => Err(violation(id, state, "no move under any rule")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::{Blue, Purple};
    use crate::game::GameConfig;
    use crate::graph::Graph;

    fn c4_state(moves: &[(usize, Color)]) -> GameState {
        let cfg = GameConfig::ddg(Player::Dom).with_pass(crate::game::PassRights::Sepy);
        let colors: Vec<Option<Color>> =
            (0..4).map(|v| moves.iter().find(|m| m.0 == v).map(|m| m.1)).collect();
        GameState::from_position(cfg, Graph::cycle(4).unwrap(), &colors, Player::Dom).unwrap()
    }

    /// Exhaustive oracle: no continuation inside `comp` reaches a monochromatic N[v].
    fn never_mono(s: &GameState) -> bool {
        if s.find_monochromatic().is_some() {
            return false;
        }
        (0..s.n()).all(|u| {
            Color::ALL.into_iter().filter(|&c| s.can_select(u, c)).all(|c| {
                let colors: Vec<_> =
                    (0..s.n()).map(|v| if v == u { Some(c) } else { s.color_of(v) }).collect();
                let t = GameState::from_position(*s.config(), s.shared_graph(), &colors, Player::Dom).unwrap();
                never_mono(&t)
            })
        })
    }

    #[test]
    fn safety_examples() {
        let all = [0, 1, 2, 3];
        let s = c4_state(&[(0, Purple), (2, Blue), (1, Purple)]);
        assert!(component_safe(&s, &all));
        assert!(never_mono(&s));
        assert!(!component_safe(&c4_state(&[]), &all));
        let done = c4_state(&[(0, Purple), (1, Blue), (2, Blue), (3, Purple)]);
        assert!(component_safe(&done, &all));
    }

    #[test]
    fn opens_then_answers_itself() {
        let g = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(6).unwrap());
        let mut s = GameState::new(GameConfig::biased(Player::Dom, 2, 1), g).unwrap();
        let first = biased_dom_move(&s).unwrap();
        assert_eq!(first, Move::select(0, Purple));
        s.apply(first).unwrap();
        assert_eq!(biased_dom_move(&s).unwrap(), Move::select(1, Blue));
        s.apply(Move::select(1, Blue)).unwrap();
        assert_eq!(s.actor(), Player::Sepy);
    }

    #[test]
    fn leaves_safe_component_for_fresh_one() {
        // C4 ⊎ C4 with the first C4 one blue move short of done: open the second
        let g = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(4).unwrap());
        let mut colors = vec![None; 8];
        colors[0] = Some(Purple);
        colors[2] = Some(Blue);
        colors[1] = Some(Purple);
        let s = GameState::from_position(GameConfig::biased(Player::Dom, 2, 1), g, &colors, Player::Dom).unwrap();
        assert_eq!(biased_dom_move(&s).unwrap(), Move::select(4, Purple));
    }
}
