//! Sepy's win on long cycles when Dom starts.

use super::{select_digest, violation, StrategyId};
use crate::error::StrategyError;
use crate::game::{Color, GameState, Move, Player};
use crate::graph::Graph;

/// Vertices of a cycle graph in cyclic order starting from 0, or `None` if `g` is
/// not a single cycle.
pub fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
    while cur != 0 {
        order.push(cur);
        let next = if g.neighbors(cur)[0] == prev { g.neighbors(cur)[1] } else { g.neighbors(cur)[0] };
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Maps the live game onto the labelling where Dom opened `v_1` in purple:
/// canonical `v_i` is `order[offset ± (i - 1)]`, and colours are exchanged when
/// Dom opened in blue. `v_2` is the lower-numbered neighbour of Dom's opener.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMemory {
    order: Vec<usize>,
    pub offset: usize,
    pub reflect: bool,
    pub swap: bool,
}

impl CycleMemory {
    pub fn from_opening(g: &Graph, v: usize, c: Color) -> Option<Self> {
        let order = cycle_order(g)?;
        let n = order.len();
        let offset = order.iter().position(|&u| u == v)?;
        let reflect = order[(offset + n - 1) % n] < order[(offset + 1) % n];
        Some(CycleMemory { order, offset, reflect, swap: c == Color::Blue })
    }

    /// The vertex playing canonical `v_i`, 1-based.
    pub fn vertex(&self, i: usize) -> usize {
        let n = self.order.len();
        let step = (i - 1) % n;
        let pos = if self.reflect { (self.offset + n - step) % n } else { (self.offset + step) % n };
        self.order[pos]
    }

    /// Canonical 1-based index of a live vertex.
    pub fn index(&self, v: usize) -> usize {
        (1..=self.order.len()).find(|&i| self.vertex(i) == v).expect("vertex on the cycle")
    }

    /// The live colour standing for canonical `c`.
    pub fn color(&self, c: Color) -> Color {
        if self.swap {
            c.complement()
        } else {
            c
        }
    }
}

fn select_at(state: &GameState, ply: usize) -> Option<(usize, Color)> {
    match state.history().get(ply)?.mv {
        Move::Select { v, c } => Some((v, c)),
        Move::Pass => None,
    }
}

/// Reply `v_2` to the opener; then `v_n` if Dom's second vertex is `v_3`, `v_4` or
/// `v_5`, otherwise `v_3`, all in the opener's colour.
pub fn sepy_cycle_move(state: &GameState, mem: &CycleMemory) -> Result<Move, StrategyError> {
    let id = StrategyId::SepyCycle;
    if state.actor() != Player::Sepy || state.is_over() {
        return Err(StrategyError::WrongTurn { strategy: id.name().to_string() });
    }
    let purple = mem.color(Color::Purple);
    let n = state.n();
    let target = match state.history().len() {
        1 => mem.vertex(2),
        3 => {
            let (second, _) = select_at(state, 2).ok_or_else(|| violation(id, state, "Dom passed"))?;
            if (3..=5).contains(&mem.index(second)) {
                mem.vertex(n)
            } else {
                mem.vertex(3)
            }
        }
        _ => return Err(violation(id, state, "game should have ended by the fourth ply")),
    };
    let mv = Move::select(target, purple);
    if state.is_legal(&mv) {
        Ok(mv)
    } else {
        Err(violation(id, state, format!("planned move {mv} is illegal")))
    }
}

pub(crate) fn sepy_cycle_pick(state: &GameState) -> Result<Move, StrategyError> {
    let (v, c) = select_at(state, 0)
        .filter(|_| state.history()[0].actor == Player::Dom)
        .ok_or_else(|| violation(StrategyId::SepyCycle, state, "Dom has not opened"))?;
    let mem = CycleMemory::from_opening(state.graph(), v, c)
        .ok_or_else(|| violation(StrategyId::SepyCycle, state, "graph is not a cycle"))?;
    sepy_cycle_move(state, &mem)
}

pub(crate) fn cycle_context(state: &GameState) -> Option<u64> {
    let d = |i| select_digest(select_at(state, i).map(|(v, c)| (Player::Dom, v, c)));
    Some(d(0) | d(2) << 16)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Color::{Blue, Purple};
    use crate::game::{GameConfig, Status};

    fn run(n: usize, dom: [Move; 2]) -> GameState {
        let mut s = GameState::new(GameConfig::ddg(Player::Dom), Graph::cycle(n).unwrap()).unwrap();
        for mv in dom {
            s.apply(mv).unwrap();
            if s.is_over() {
                break;
            }
            s.apply(sepy_cycle_pick(&s).unwrap()).unwrap();
        }
        s
    }

    #[test]
    fn canonical_lines() {
        // v_i is vertex i - 1 here
        let s = run(8, [Move::select(0, Purple), Move::select(3, Blue)]);
        assert_eq!(s.history()[1].mv, Move::select(1, Purple));
        assert_eq!(s.history()[3].mv, Move::select(7, Purple));
        assert_eq!(s.status(), Status::SepyWin { witness: 0, color: Purple });
        let t = run(8, [Move::select(0, Purple), Move::select(5, Purple)]);
        assert_eq!(t.history()[3].mv, Move::select(2, Purple));
        assert_eq!(t.status(), Status::SepyWin { witness: 1, color: Purple });
    }

    #[test]
    fn normalisation() {
        let g = Graph::cycle(8).unwrap();
        let mem = CycleMemory::from_opening(&g, 2, Blue).unwrap();
        assert_eq!(mem.vertex(1), 2);
        assert_eq!(mem.vertex(2), 1);
        assert_eq!(mem.vertex(3), 0);
        assert_eq!(mem.vertex(8), 3);
        assert_eq!(mem.color(Purple), Blue);
        let s = run(8, [Move::select(2, Blue), Move::select(5, Purple)]);
        assert_eq!(s.history()[1].mv, Move::select(1, Blue));
        assert_eq!(s.status().winner(), Some(Player::Sepy));
    }

    #[test]
    fn cycle_order_rejects_other_graphs() {
        assert_eq!(cycle_order(&Graph::cycle(5).unwrap()), Some(vec![0, 1, 2, 3, 4]));
        assert!(cycle_order(&Graph::path(5).unwrap()).is_none());
        let two = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap());
        assert!(cycle_order(&two).is_none());
    }
}
