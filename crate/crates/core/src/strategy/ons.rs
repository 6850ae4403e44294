//! Opposite-neighbour play: answer the anchor vertex with a neighbour in the other
//! colour, else find a move whose vertex sits next to the opposite colour.

use super::{select_digest, violation, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameState, Move, Player};

fn has_neighbor_colored(state: &GameState, u: usize, c: Color) -> bool {
    state.graph().neighbors(u).iter().any(|&w| state.color_of(w) == Some(c))
}

/// `(u, c)` is legal and `u` already has a neighbour coloured `c̄`.
fn second_rule_ok(state: &GameState, u: usize, c: Color) -> bool {
    state.can_select(u, c) && has_neighbor_colored(state, u, c.complement())
}

/// The single dominating colour of a vertex dominated by exactly one colour.
fn sole_color(state: &GameState, u: usize) -> Option<Color> {
    match (state.dominated(u, Color::Purple), state.dominated(u, Color::Blue)) {
        (true, false) => Some(Color::Purple),
        (false, true) => Some(Color::Blue),
        _ => None,
    }
}

/// Opposite-neighbour move anchored on `anchor`, restricted to the vertices marked in
/// `region` when one is given.
///
/// First rule: the least neighbour `u` of the anchor that can take the anchor's
/// complementary colour. Second rule, searched frontier-first: an uncoloured vertex
/// next to an undominated one, then a vertex dominated in one colour only (or its
/// least uncoloured neighbour), then any move next to the opposite colour.
pub fn opposite_neighbor_move(
    state: &GameState,
    anchor: Option<(usize, Color)>,
    region: Option<&[bool]>,
) -> Option<Move> {
    let g = state.graph();
    let inside = |v: usize| region.map_or(true, |r| r[v]);
    if let Some((v, c)) = anchor {
        let want = c.complement();
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| inside(u) && state.can_select(u, want)) {
            return Some(Move::select(u, want));
        }
    }
    let n = state.n();
    for u in (0..n).filter(|&u| inside(u)) {
        if state.color_of(u).is_some() || state.domination_degree(u) == 0 {
            continue;
        }
        if g.neighbors(u).iter().any(|&w| state.domination_degree(w) == 0) {
            if let Some(c) = Color::ALL.into_iter().find(|&c| second_rule_ok(state, u, c)) {
                return Some(Move::select(u, c));
            }
        }
    }
    for u in (0..n).filter(|&u| inside(u)) {
        let Some(c) = sole_color(state, u) else { continue };
        let want = c.complement();
        if state.color_of(u).is_none() {
            if second_rule_ok(state, u, want) {
                return Some(Move::select(u, want));
            }
        } else if let Some(&w) = g
            .neighbors(u)
            .iter()
            .find(|&&w| inside(w) && second_rule_ok(state, w, want))
        {
            return Some(Move::select(w, want));
        }
    }
    (0..n)
        .filter(|&u| inside(u))
        .flat_map(|u| Color::ALL.into_iter().map(move |c| (u, c)))
        .find(|&(u, c)| second_rule_ok(state, u, c))
        .map(|(u, c)| Move::select(u, c))
}

fn dom_to_move(id: StrategyId, state: &GameState) -> Result<(), StrategyError> {
    if state.actor() != Player::Dom || state.is_over() {
        return Err(StrategyError::WrongTurn { strategy: id.name().to_string() });
    }
    Ok(())
}

/// Opposite-neighbour strategy keyed to Sepy's latest selection.
pub fn ons_move(state: &GameState) -> Result<Move, StrategyError> {
    dom_to_move(StrategyId::Ons, state)?;
    let anchor = state
        .last_select_by(Player::Sepy)
        .ok_or_else(|| violation(StrategyId::Ons, state, "Sepy has not selected yet"))?;
    opposite_neighbor_move(state, Some(anchor), None)
        .ok_or_else(|| violation(StrategyId::Ons, state, "no opposite-neighbour move"))
}

/// Pass-aware variant keyed to the latest selection by either player.
pub fn onsp_move(state: &GameState) -> Result<Move, StrategyError> {
    dom_to_move(StrategyId::Onsp, state)?;
    let (_, v, c) = state
        .last_select()
        .ok_or_else(|| violation(StrategyId::Onsp, state, "no selection to answer"))?;
    opposite_neighbor_move(state, Some((v, c)), None)
        .ok_or_else(|| violation(StrategyId::Onsp, state, "no opposite-neighbour move"))
}

pub(crate) fn ons_context(state: &GameState) -> Option<u64> {
    Some(select_digest(state.last_select_by(Player::Sepy).map(|(v, c)| (Player::Sepy, v, c))))
}

pub(crate) fn onsp_context(state: &GameState) -> Option<u64> {
    Some(select_digest(state.last_select()))
}

/// Every coloured vertex has a neighbour of the complementary colour.
pub(crate) fn opposite_neighbor_invariant(state: &GameState) -> Result<(), String> {
    for v in 0..state.n() {
        if let Some(c) = state.color_of(v) {
            if !has_neighbor_colored(state, v, c.complement()) {
                return Err(format!("vertex {v} ({c}) has no {} neighbour", c.complement()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::{Blue, Purple};
    use crate::game::{GameConfig, PassRights};
    use crate::graph::Graph;

    fn play(g: Graph, cfg: GameConfig, moves: &[Move]) -> GameState {
        let mut s = GameState::new(cfg, g).unwrap();
        for &m in moves {
            s.apply(m).unwrap();
        }
        s
    }

    #[test]
    fn answers_with_opposite_neighbor() {
        let s = play(Graph::cycle(4).unwrap(), GameConfig::ddg(Player::Sepy), &[Move::select(0, Purple)]);
        assert_eq!(ons_move(&s).unwrap(), Move::select(1, Blue));
        let s = play(Graph::path(3).unwrap(), GameConfig::ddg(Player::Sepy), &[Move::select(1, Blue)]);
        assert_eq!(ons_move(&s).unwrap(), Move::select(0, Purple));
    }

    fn first_rule_applies(s: &GameState) -> bool {
        let (v, c) = s.last_select_by(Player::Sepy).unwrap();
        s.graph().neighbors(v).iter().any(|&u| s.can_select(u, c.complement()))
    }

    /// Depth-first over Sepy's replies to ONS until a position needs the second rule.
    fn find_second_rule(s: &GameState) -> Option<GameState> {
        for mv in s.legal_moves() {
            let t = s.after(mv).unwrap();
            if t.is_over() {
                continue;
            }
            if !first_rule_applies(&t) {
                return Some(t);
            }
            let u = t.after(ons_move(&t).unwrap()).unwrap();
            if !u.is_over() {
                if let Some(found) = find_second_rule(&u) {
                    return Some(found);
                }
            }
        }
        None
    }

    #[test]
    fn second_rule_when_anchor_is_covered() {
        let start = GameState::new(GameConfig::ddg(Player::Sepy), Graph::cycle(6).unwrap()).unwrap();
        let s = find_second_rule(&start).expect("C6 has such a position");
        let mv = ons_move(&s).unwrap();
        let Move::Select { v, c } = mv else { panic!("expected a selection") };
        assert!(s.is_legal(&mv));
        assert!(has_neighbor_colored(&s, v, c.complement()));
    }

    #[test]
    fn onsp_answers_own_vertex_after_pass() {
        let cfg = GameConfig::ddg(Player::Sepy).with_pass(PassRights::Sepy);
        let s = play(
            Graph::cycle(6).unwrap(),
            cfg,
            &[Move::select(0, Purple), Move::select(1, Blue), Move::Pass],
        );
        assert_eq!(onsp_move(&s).unwrap(), Move::select(2, Purple));
        let t = play(Graph::cycle(6).unwrap(), cfg, &[Move::select(0, Purple)]);
        assert_eq!(onsp_move(&t).unwrap(), ons_move(&t).unwrap());
    }

    #[test]
    fn region_limits_the_search() {
        let g = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(4).unwrap());
        let s = play(g, GameConfig::ddg(Player::Sepy), &[Move::select(5, Purple)]);
        let region: Vec<bool> = (0..8).map(|v| v >= 4).collect();
        assert_eq!(opposite_neighbor_move(&s, None, Some(&region)), Some(Move::select(4, Blue)));
        let left: Vec<bool> = (0..8).map(|v| v < 4).collect();
        assert_eq!(opposite_neighbor_move(&s, None, Some(&left)), None);
    }
}
