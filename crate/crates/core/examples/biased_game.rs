//! The (2:1) game: Dom colours two vertices per turn and wins on every isolate-free graph.

use domgame::enumerate::{corpus_of, CorpusKind};
use domgame::formats::{emit_graph6, GraphSource};
use domgame::game::{GameConfig, Player};
use domgame::solver::verify_strategy;
use domgame::strategy::StrategyId;

fn main() {
    let graphs = corpus_of(CorpusKind::IsolateFree, 2..=6).unwrap();
    for start in [Player::Dom, Player::Sepy] {
        let cfg = GameConfig::biased(start, 2, 1);
        let ok = graphs
            .iter()
            .filter(|g| {
                let src = GraphSource::plain(emit_graph6(g), (*g).clone());
                verify_strategy(StrategyId::BiasedDom, Player::Dom, cfg, &src).unwrap().verified
            })
            .count();
        println!("{start}-start: biased-dom verified on {ok}/{} graphs", graphs.len());
    }
}
