//! Exact winners of the Disjoint game on cycles, for both starting players.

use domgame::game::{GameConfig, Player};
use domgame::graph::Graph;
use domgame::solver::solve;

fn main() {
    println!("{:>4} {:>10} {:>10}", "n", "Dom-start", "Sepy-start");
    for n in 3..=12 {
        let g = Graph::cycle(n).unwrap();
        let dom = solve(GameConfig::ddg(Player::Dom), &g).unwrap();
        let sepy = solve(GameConfig::ddg(Player::Sepy), &g).unwrap();
        println!("{n:>4} {:>10} {:>10}", dom.winner.to_string(), sepy.winner.to_string());
    }
}
