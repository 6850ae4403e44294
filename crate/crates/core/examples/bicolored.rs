//! The Bicolored game: matching structure of a graph and Dom's matching-based play.

use domgame::formats::parse_generator;
use domgame::game::{GameConfig, Player};
use domgame::matching::matching_structure;
use domgame::solver::verify_strategy;
use domgame::strategy::StrategyId;

fn main() {
    for spec in ["path:4", "path:5", "complete:4", "petersen", "union:path:3+cycle:5"] {
        let src = parse_generator(spec).unwrap();
        let m = matching_structure(&src.graph);
        let id = if m.is_perfect() { StrategyId::BdgMatching } else { StrategyId::BdgGeneral };
        let verdicts: Vec<bool> = [Player::Dom, Player::Sepy]
            .into_iter()
            .map(|s| verify_strategy(id, Player::Dom, GameConfig::bdg(s), &src).unwrap().verified)
            .collect();
        println!("{spec:<22} pairs={:?} external={:?} kinds={:?}", m.pairs, m.external, m.kinds);
        println!("{:<22} {id}: verified {verdicts:?}", "");
    }
}
