//! Check the opposite-neighbour strategy for Dom on every connected graph up to six vertices.

use domgame::enumerate::{corpus_of, CorpusKind};
use domgame::formats::{emit_graph6, GraphSource};
use domgame::game::{GameConfig, Player};
use domgame::solver::verify_strategy;
use domgame::strategy::StrategyId;

fn main() {
    let cfg = GameConfig::ddg(Player::Sepy);
    let mut nodes = 0;
    let graphs = corpus_of(CorpusKind::Connected, 2..=6).unwrap();
    for g in &graphs {
        let src = GraphSource::plain(emit_graph6(g), g.clone());
        let r = verify_strategy(StrategyId::Ons, Player::Dom, cfg, &src).unwrap();
        assert!(r.verified, "{}", src.name);
        nodes += r.nodes;
    }
    println!("ons verified on {} connected graphs ({nodes} positions expanded)", graphs.len());
}
