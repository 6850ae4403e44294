//! Generator specs, graph6 and edge lists, and the small-graph enumeration.

use domgame::enumerate::enumerate_connected_graphs;
use domgame::formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_generator, parse_graph6};
use domgame::matching::maximum_matching;

fn main() {
    let src = parse_generator("subdiv2:cycle:3").unwrap();
    let g6 = emit_graph6(&src.graph);
    println!("{} -> {g6}", src.name);
    assert_eq!(parse_graph6(&g6).unwrap(), src.graph);
    let edges = emit_edge_list(&src.graph);
    assert_eq!(parse_edge_list(&edges).unwrap(), src.graph);
    print!("{edges}");
    for n in 2..=7 {
        println!("connected graphs on {n} vertices: {}", enumerate_connected_graphs(n).unwrap().len());
    }
    println!("Petersen matching size: {}", maximum_matching(&parse_generator("petersen").unwrap().graph).size());
}
