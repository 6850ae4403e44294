//! Pass rights on C4 + C8: a pass for Sepy flips the Sepy-start game, a pass for Dom wins.

use domgame::formats::parse_generator;
use domgame::game::{GameConfig, PassRights, Player};
use domgame::solver::{solve, verify_strategy};
use domgame::strategy::StrategyId;

fn main() {
    let src = parse_generator("union:cycle:4+cycle:8").unwrap();
    for (label, cfg) in [
        ("Sepy-start, no pass", GameConfig::ddg(Player::Sepy)),
        ("Sepy-start, Sepy may pass", GameConfig::ddg(Player::Sepy).with_pass(PassRights::Sepy)),
        ("Dom-start, Dom may pass", GameConfig::ddg(Player::Dom).with_pass(PassRights::Dom)),
    ] {
        let r = solve(cfg, &src.graph).unwrap();
        println!("{label:<28} winner {} ({} nodes)", r.winner, r.nodes_expanded);
    }
    let cfg = GameConfig::ddg(Player::Dom).with_pass(PassRights::Dom);
    let r = verify_strategy(StrategyId::DomPass, Player::Dom, cfg, &src).unwrap();
    println!("dom-pass verified: {}", r.verified);
}
