//! Exhaustive check that a fixed strategy wins against every line of opposing play.

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::encode_state_exact;
use crate::error::StrategyError;
use crate::formats::{emit_graph6, GraphSource};
use crate::game::{trace_records, GameConfig, GameState, Player, TraceRecord};
use crate::strategy::{build, Strategy, StrategyId};

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub strategy: String,
    pub role: Player,
    pub config: GameConfig,
    /// graph6 encoding of the board.
    pub graph: String,
    pub verified: bool,
    /// Plies leading to the first failure found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<TraceRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Finished games examined.
    pub branches: u64,
    /// Positions expanded.
    pub nodes: u64,
}

struct Walker<'a> {
    strategy: &'a dyn Strategy,
    role: Player,
    seen: FxHashSet<(u128, u64)>,
    branches: u64,
    nodes: u64,
    failure: Option<(GameState, String)>,
}

impl Walker<'_> {
    fn fail(&mut self, state: &GameState, reason: String) -> bool {
        self.failure = Some((state.clone(), reason));
        false
    }

    /// True when the strategy's side wins every continuation of `state`.
    fn walk(&mut self, state: &GameState) -> bool {
        if let Some(w) = state.status().winner() {
            self.branches += 1;
            return w == self.role || self.fail(state, format!("{w} wins"));
        }
        let memo = self.strategy.context_key(state).map(|ctx| (encode_state_exact(state).0, ctx));
        if let Some(key) = memo {
            if self.seen.contains(&key) {
                return true;
            }
        }
        self.nodes += 1;
        let ok = if state.actor() == self.role {
            self.follow(state)
        } else {
            state.legal_moves().into_iter().all(|mv| {
                let child = state.after(mv).expect("legal move applies");
                self.walk(&child)
            })
        };
        if ok {
            if let Some(key) = memo {
                self.seen.insert(key);
            }
        }
        ok
    }

    fn follow(&mut self, state: &GameState) -> bool {
        let mv = match self.strategy.choose(state) {
            Ok(mv) => mv,
            Err(StrategyError::Violation { reason, .. }) => return self.fail(state, reason),
            Err(e) => return self.fail(state, e.to_string()),
        };
        let child = match state.after(mv) {
            Ok(child) => child,
            Err(e) => return self.fail(state, format!("strategy chose {mv}: {e}")),
        };
        if let Err(reason) = self.strategy.check_after(&child) {
            return self.fail(&child, reason);
        }
        self.walk(&child)
    }
}

/// Verify an already-built strategy on the game `config` over `source`.
pub fn verify_built(
    strategy: &dyn Strategy,
    role: Player,
    config: GameConfig,
    source: &GraphSource,
) -> Result<VerificationReport, StrategyError> {
    let root = GameState::new(config, source.graph.clone())
        .map_err(|e| StrategyError::NotApplicable { strategy: strategy.id().name().into(), reason: e.to_string() })?;
    let mut w = Walker { strategy, role, seen: FxHashSet::default(), branches: 0, nodes: 0, failure: None };
    let verified = w.walk(&root);
    let (counterexample, reason) = match w.failure {
        Some((state, reason)) => (Some(trace_records(&state)), Some(reason)),
        None => (None, None),
    };
    Ok(VerificationReport {
        strategy: strategy.id().name().to_string(),
        role,
        config,
        graph: emit_graph6(&source.graph),
        verified,
        counterexample,
        reason,
        branches: w.branches,
        nodes: w.nodes,
    })
}

/// Build `id` for `role` and verify it: the opponent ranges over every legal move
/// (passes included where allowed), the strategy's side plays the strategy's move.
pub fn verify_strategy(
    id: StrategyId,
    role: Player,
    config: GameConfig,
    source: &GraphSource,
) -> Result<VerificationReport, StrategyError> {
    let strategy = build(id, role, &config, source)?;
    verify_built(strategy.as_ref(), role, config, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_generator;
    use crate::game::{replay_trace, PassRights};

    fn src(s: &str) -> GraphSource {
        parse_generator(s).unwrap()
    }

    #[test]
    fn known_outcomes() {
        let r = verify_strategy(StrategyId::SepyCycle, Player::Sepy, GameConfig::ddg(Player::Dom), &src("cycle:8")).unwrap();
        assert!(r.verified, "{r:?}");
        let r = verify_strategy(StrategyId::Ons, Player::Dom, GameConfig::ddg(Player::Sepy), &src("petersen")).unwrap();
        assert!(r.verified, "{r:?}");
        assert!(matches!(
            verify_strategy(StrategyId::DomStartSafe, Player::Dom, GameConfig::ddg(Player::Dom), &src("cycle:8")),
            Err(StrategyError::NotApplicable { .. })
        ));
    }

    #[test]
    fn losing_strategy_yields_replayable_counterexample() {
        // Dom starting on C8 loses whatever he does; a random Dom must be caught
        let s = src("cycle:8");
        let cfg = GameConfig::ddg(Player::Dom);
        let r = verify_strategy(StrategyId::Random(1), Player::Dom, cfg, &s).unwrap();
        assert!(!r.verified);
        let trace = r.counterexample.unwrap();
        let end = replay_trace(cfg, s.graph.clone().into(), &trace).unwrap();
        assert_eq!(end.status().winner(), Some(Player::Sepy));
    }

    #[test]
    fn opponent_passes_are_explored() {
        let s = src("cycle:6");
        let plain = GameConfig::ddg(Player::Sepy);
        let passing = plain.with_pass(PassRights::Sepy);
        let a = verify_strategy(StrategyId::Onsp, Player::Dom, plain, &s).unwrap();
        let b = verify_strategy(StrategyId::Onsp, Player::Dom, passing, &s).unwrap();
        assert!(a.verified && b.verified);
        assert!(b.nodes > a.nodes);
    }
}
