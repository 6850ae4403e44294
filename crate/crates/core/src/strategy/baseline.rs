//! Seeded baseline adversaries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{GameState, Move};

/// Uniform over the legal moves; the generator is reseeded from `seed` and the ply
/// number, so the choice is a pure function of the state.
pub fn random_move(state: &GameState, seed: u64) -> Option<Move> {
    let moves = state.legal_moves();
    if moves.is_empty() {
        return None;
    }
    let ply = state.history().len() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ply.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    Some(moves[rng.gen_range(0..moves.len())])
}

/// Legal moves that end the game in the mover's favour at once.
pub fn winning_moves(state: &GameState) -> Vec<Move> {
    let me = state.actor();
    state
        .legal_moves()
        .into_iter()
        .filter(|&mv| state.after(mv).map_or(false, |t| t.status().winner() == Some(me)))
        .collect()
}

/// An immediately winning move if there is one, otherwise [`random_move`].
pub fn greedy_win_move(state: &GameState, seed: u64) -> Option<Move> {
    winning_moves(state).first().copied().or_else(|| random_move(state, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::{Blue, Purple};
    use crate::game::{GameConfig, Player};
    use crate::graph::Graph;

    #[test]
    fn deterministic() {
        let s = GameState::new(GameConfig::ddg(Player::Dom), Graph::cycle(8).unwrap()).unwrap();
        assert_eq!(random_move(&s, 7), random_move(&s, 7));
        assert!(s.is_legal(&random_move(&s, 7).unwrap()));
        assert_eq!(greedy_win_move(&s, 7), random_move(&s, 7));
    }

    #[test]
    fn greedy_takes_the_win() {
        // C8: 0p 1p 3b, then 7p closes N[0]
        let mut s = GameState::new(GameConfig::ddg(Player::Dom), Graph::cycle(8).unwrap()).unwrap();
        for mv in [Move::select(0, Purple), Move::select(1, Purple), Move::select(3, Blue)] {
            s.apply(mv).unwrap();
        }
        assert!(winning_moves(&s).contains(&Move::select(7, Purple)));
        let mv = greedy_win_move(&s, 3).unwrap();
        assert_eq!(s.after(mv).unwrap().status().winner(), Some(Player::Sepy));
    }
}
