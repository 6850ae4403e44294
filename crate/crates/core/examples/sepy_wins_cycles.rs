//! Sepy's cycle strategy against every Dom line, and one sample game.

use domgame::formats::parse_generator;
use domgame::game::{trace_to_jsonl, GameConfig, GameState, Player};
use domgame::solver::verify_strategy;
use domgame::strategy::{build, random_move, StrategyId};

fn main() {
    let cfg = GameConfig::ddg(Player::Dom);
    for n in 8..=12 {
        let src = parse_generator(&format!("cycle:{n}")).unwrap();
        let r = verify_strategy(StrategyId::SepyCycle, Player::Sepy, cfg, &src).unwrap();
        println!("C{n}: verified={} branches={}", r.verified, r.branches);
    }
    let src = parse_generator("cycle:10").unwrap();
    let sepy = build(StrategyId::SepyCycle, Player::Sepy, &cfg, &src).unwrap();
    let mut s = GameState::new(cfg, src.graph.clone()).unwrap();
    while !s.is_over() {
        let mv = match s.actor() {
            Player::Dom => random_move(&s, 7).unwrap(),
            Player::Sepy => sepy.choose(&s).unwrap(),
        };
        s.apply(mv).unwrap();
    }
    print!("{}", trace_to_jsonl(&s));
}
