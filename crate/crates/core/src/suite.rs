//! The acceptance battery: every theorem-level claim checked exactly on desk-scale
//! instances, one numbered criterion at a time.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::enumerate::{corpus_of, enumerate_connected_graphs, enumerate_graphs, random_corpus, CorpusKind};
use crate::formats::{emit_graph6, parse_generator, parse_graph6, GraphSource};
use crate::game::{GameConfig, GameState, Move, PassRights, Player, Status, Variant};
use crate::graph::Graph;
use crate::matching::{classify_matching, maximum_matching};
use crate::solver::{encode_state_exact, solve, swap_move, verify_strategy, Solver, SolverLimits};
use crate::strategy::{random_move, safe_start_vertex, StrategyId};

type Check = Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub group: &'static str,
    pub title: &'static str,
    run: fn() -> Check,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub group: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:>2} [{}] {}: {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.group,
            self.title,
            self.detail,
            self.seconds
        )
    }
}

pub static CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, group: "cycles", title: "Sepy wins Dom-start on C8..C11", run: c1_cycles },
    Criterion { id: 2, group: "connected", title: "ONS wins Sepy-start on connected n<=6", run: c2_connected },
    Criterion { id: 3, group: "passing", title: "ONSP wins when Sepy may pass", run: c3_sepy_pass },
    Criterion { id: 4, group: "dom-pass", title: "Dom wins with pass rights", run: c4_dom_pass },
    Criterion { id: 5, group: "union", title: "Sepy's pass decides C4+C8", run: c5_union },
    Criterion { id: 6, group: "safe-start", title: "Dom-start wins from a dominated neighbourhood", run: c6_safe_start },
    Criterion { id: 7, group: "subdivision", title: "Sepy wins on 3-subdivisions", run: c7_subdivision },
    Criterion { id: 8, group: "biased", title: "Dom wins the (2:1) game", run: c8_biased },
    Criterion { id: 9, group: "perfect-matching", title: "Matching strategy wins the Bicolored game", run: c9_perfect_matching },
    Criterion { id: 10, group: "bicolored", title: "Dom wins the Bicolored game everywhere", run: c10_bicolored },
    Criterion { id: 11, group: "properties", title: "Engine and solver properties", run: c11_properties },
    Criterion { id: 12, group: "graph-core", title: "Graph oracles", run: c12_graph_core },
];

/// Run one criterion, timing it.
pub fn run_criterion(c: &Criterion) -> CriterionResult {
    let t = Instant::now();
    let outcome = (c.run)();
    let seconds = t.elapsed().as_secs_f64();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id: c.id, group: c.group, title: c.title, passed, detail, seconds }
}

/// Criteria selected by a comma-separated list of ids or group names; all when `None`.
pub fn select(only: Option<&str>) -> Result<Vec<&'static Criterion>, String> {
    let Some(only) = only else { return Ok(CRITERIA.iter().collect()) };
    let mut out = Vec::new();
    for tok in only.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let hits: Vec<_> = CRITERIA
            .iter()
            .filter(|c| c.group == tok || tok.parse::<u8>().is_ok_and(|i| i == c.id))
            .collect();
        if hits.is_empty() {
            return Err(format!("no criterion matches `{tok}`"));
        }
        for c in hits {
            if !out.iter().any(|o: &&Criterion| o.id == c.id) {
                out.push(c);
            }
        }
    }
    out.sort_by_key(|c| c.id);
    Ok(out)
}

fn source(g: &Graph) -> GraphSource {
    GraphSource::plain(emit_graph6(g), g.clone())
}

fn gen(spec: &str) -> GraphSource {
    parse_generator(spec).expect("built-in generator spec")
}

fn name(src: &GraphSource) -> String {
    src.name.clone()
}

fn expect_winner(cfg: GameConfig, src: &GraphSource, want: Player) -> Result<(), String> {
    let got = solve(cfg, &src.graph).map_err(|e| format!("{}: {e}", name(src)))?.winner;
    if got == want {
        Ok(())
    } else {
        Err(format!("solver says {got} wins on {} ({cfg:?}), expected {want}", name(src)))
    }
}

fn expect_verified(id: StrategyId, role: Player, cfg: GameConfig, src: &GraphSource) -> Result<u64, String> {
    let r = verify_strategy(id, role, cfg, src).map_err(|e| format!("{}: {e}", name(src)))?;
    if r.verified {
        Ok(r.nodes)
    } else {
        Err(format!(
            "{id} fails on {} ({cfg:?}): {} after {:?}",
            name(src),
            r.reason.unwrap_or_default(),
            r.counterexample.unwrap_or_default().iter().map(|t| t.mv.to_string()).collect::<Vec<_>>()
        ))
    }
}

/// Run `f` over `items` in parallel; the first failure in input order wins.
fn all_ok<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<(), String> + Sync + Send) -> Result<(), String> {
    let results: Vec<_> = items.par_iter().map(f).collect();
    results.into_iter().collect()
}

fn c1_cycles() -> Check {
    let cfg = GameConfig::ddg(Player::Dom);
    let ns: Vec<usize> = (8..=11).collect();
    all_ok(&ns, |&n| {
        let src = gen(&format!("cycle:{n}"));
        expect_winner(cfg, &src, Player::Sepy)?;
        expect_verified(StrategyId::SepyCycle, Player::Sepy, cfg, &src).map(|_| ())
    })?;
    Ok("C8..C11: solver Sepy, sepy-cycle verified".into())
}

fn connected_upto6() -> Vec<GraphSource> {
    corpus_of(CorpusKind::Connected, 2..=6).expect("in range").iter().map(source).collect()
}

fn c2_connected() -> Check {
    let cfg = GameConfig::ddg(Player::Sepy);
    let graphs = connected_upto6();
    all_ok(&graphs, |src| {
        expect_winner(cfg, src, Player::Dom)?;
        expect_verified(StrategyId::Ons, Player::Dom, cfg, src).map(|_| ())
    })?;
    Ok(format!("{} connected graphs: solver Dom, ons verified", graphs.len()))
}

fn c3_sepy_pass() -> Check {
    let cfg = GameConfig::ddg(Player::Sepy).with_pass(PassRights::Sepy);
    let graphs = connected_upto6();
    all_ok(&graphs, |src| {
        expect_winner(cfg, src, Player::Dom)?;
        expect_verified(StrategyId::Onsp, Player::Dom, cfg, src).map(|_| ())
    })?;
    Ok(format!("{} connected graphs: solver Dom, onsp verified", graphs.len()))
}

fn c4_dom_pass() -> Check {
    let c4c8 = gen("union:cycle:4+cycle:8");
    let dom_start = GameConfig::ddg(Player::Dom).with_pass(PassRights::Dom);
    expect_winner(dom_start, &c4c8, Player::Dom)?;
    expect_verified(StrategyId::DomPass, Player::Dom, dom_start, &c4c8)?;
    let mut unions = Vec::new();
    for a in 2..=4 {
        for b in a..=(8 - a) {
            let left = enumerate_connected_graphs(a).expect("in range");
            let right = enumerate_connected_graphs(b).expect("in range");
            for (i, g) in left.iter().enumerate() {
                for (j, h) in right.iter().enumerate() {
                    if a == b && j < i {
                        continue;
                    }
                    unions.push(source(&g.disjoint_union(h)));
                }
            }
        }
    }
    let sepy_start = GameConfig::ddg(Player::Sepy).with_pass(PassRights::Dom);
    all_ok(&unions, |src| expect_verified(StrategyId::DomPass, Player::Dom, sepy_start, src).map(|_| ()))?;
    Ok(format!("C4+C8 Dom-start solved and verified; {} two-component unions verified", unions.len()))
}

fn c5_union() -> Check {
    let c4c8 = gen("union:cycle:4+cycle:8");
    let cfg = GameConfig::ddg(Player::Sepy);
    expect_winner(cfg.with_pass(PassRights::Sepy), &c4c8, Player::Sepy)?;
    expect_winner(cfg, &c4c8, Player::Dom)?;
    Ok("C4+C8 Sepy-start: Sepy wins with passing, Dom wins without".into())
}

fn c6_safe_start() -> Check {
    let cfg = GameConfig::ddg(Player::Dom);
    let mut graphs: Vec<GraphSource> = (2..=6).map(|n| gen(&format!("complete:{n}"))).collect();
    graphs.extend((2..=7).map(|n| gen(&format!("path:{n}"))));
    let corpus: Vec<_> = connected_upto6().into_iter().filter(|s| safe_start_vertex(&s.graph).is_some()).collect();
    let extra = corpus.len();
    graphs.extend(corpus);
    all_ok(&graphs, |src| {
        expect_verified(StrategyId::DomStartSafe, Player::Dom, cfg, src)?;
        expect_winner(cfg, src, Player::Dom)
    })?;
    Ok(format!("K2..K6, P2..P7 and {extra} corpus graphs verified; solver agrees"))
}

fn c7_subdivision() -> Check {
    let cfg = GameConfig::ddg(Player::Dom);
    expect_winner(cfg, &gen("subdiv2:cycle:3"), Player::Sepy)?;
    let specs = ["subdiv2:cycle:3", "subdiv2:cycle:4", "subdiv2:complete:4"];
    all_ok(&specs, |s| expect_verified(StrategyId::SepySubdiv, Player::Sepy, cfg, &gen(s)).map(|_| ()))?;
    Ok("C9 solved; sepy-subdiv verified on C3, C4, K4 subdivisions".into())
}

/// Seed for the random corpora beyond exhaustive enumeration.
const RANDOM_SEED: u64 = 20_240_601;

fn c8_biased() -> Check {
    let starts = [Player::Dom, Player::Sepy];
    let small: Vec<_> = corpus_of(CorpusKind::IsolateFree, 2..=6).expect("in range").iter().map(source).collect();
    all_ok(&small, |src| {
        for s in starts {
            expect_verified(StrategyId::BiasedDom, Player::Dom, GameConfig::biased(s, 2, 1), src)?;
        }
        Ok(())
    })?;
    let mut solved: Vec<_> = corpus_of(CorpusKind::IsolateFree, 2..=8).expect("in range").iter().map(source).collect();
    solved.extend(random_corpus(RANDOM_SEED, 200, 9..=10).iter().map(source));
    all_ok(&solved, |src| {
        for s in starts {
            expect_winner(GameConfig::biased(s, 2, 1), src, Player::Dom)?;
        }
        Ok(())
    })?;
    Ok(format!(
        "biased-dom verified on {} isolate-free graphs (both starts); solver Dom on {} graphs up to n=10",
        small.len(),
        solved.len()
    ))
}

fn c9_perfect_matching() -> Check {
    let mut graphs = Vec::new();
    for n in [2, 4, 6] {
        graphs.extend(corpus_of(CorpusKind::PerfectMatching, n..=n).expect("in range").iter().map(source));
    }
    all_ok(&graphs, |src| {
        for s in [Player::Dom, Player::Sepy] {
            expect_verified(StrategyId::BdgMatching, Player::Dom, GameConfig::bdg(s), src)?;
        }
        Ok(())
    })?;
    Ok(format!("bdg-matching verified on {} graphs with a perfect matching", graphs.len()))
}

fn c10_bicolored() -> Check {
    let graphs: Vec<_> = corpus_of(CorpusKind::IsolateFree, 2..=6).expect("in range").iter().map(source).collect();
    all_ok(&graphs, |src| {
        for s in [Player::Dom, Player::Sepy] {
            expect_verified(StrategyId::BdgGeneral, Player::Dom, GameConfig::bdg(s), src)?;
            expect_winner(GameConfig::bdg(s), src, Player::Dom)?;
        }
        Ok(())
    })?;
    let random: Vec<_> = random_corpus(RANDOM_SEED + 1, 100, 2..=10).iter().map(source).collect();
    all_ok(&random, |src| {
        for s in [Player::Dom, Player::Sepy] {
            expect_winner(GameConfig::bdg(s), src, Player::Dom)?;
        }
        Ok(())
    })?;
    Ok(format!("bdg-general verified and solved on {} graphs; solver Dom on 100 random graphs", graphs.len()))
}

/// Every configuration the engine supports on small boards.
fn all_variants() -> Vec<GameConfig> {
    let mut out = Vec::new();
    for s in [Player::Dom, Player::Sepy] {
        for p in [PassRights::None, PassRights::Dom, PassRights::Sepy] {
            out.push(GameConfig::ddg(s).with_pass(p));
        }
        out.push(GameConfig::bdg(s));
        out.push(GameConfig::biased(s, 2, 1));
        out.push(GameConfig::biased(s, 1, 2));
    }
    out
}

/// Per-position checks: ledger, no stuck ongoing state, no double win, the Bicolored
/// end condition. Per-move check: the selected vertex's own neighbourhood never
/// becomes monochromatic.
fn position_ok(s: &GameState) -> Result<(), String> {
    if !s.ledger_consistent() {
        return Err(format!("ledger drift at {s:?}"));
    }
    let mono = s.find_monochromatic().is_some();
    let all_double = s.doubly_dominated_count() == s.n();
    if s.config().variant == Variant::Ddg && mono && all_double {
        return Err(format!("both win conditions hold at {s:?}"));
    }
    match s.status() {
        Status::Ongoing(_) if s.legal_moves().is_empty() => Err(format!("ongoing without moves at {s:?}")),
        Status::DomWin if s.config().variant == Variant::Bdg && !s.bicolored_dom_condition() => {
            Err(format!("Bicolored end without its condition at {s:?}"))
        }
        Status::SepyWin { .. } if !mono => Err(format!("Sepy win without witness at {s:?}")),
        _ => Ok(()),
    }
}

fn move_ok(before: &GameState, mv: Move, after: &GameState) -> Result<(), String> {
    if let Move::Select { v, c } = mv {
        if after.graph().closed_iter(v).all(|u| after.color_of(u) == Some(c)) {
            return Err(format!("{mv} closed its own neighbourhood after {before:?}"));
        }
    }
    Ok(())
}

fn walk_tree(s: &GameState, seen: &mut FxHashSet<u128>, count: &mut u64) -> Result<(), String> {
    if !seen.insert(encode_state_exact(s).0) {
        return Ok(());
    }
    *count += 1;
    position_ok(s)?;
    for mv in s.legal_moves() {
        let t = s.after(mv).map_err(|e| e.to_string())?;
        move_ok(s, mv, &t)?;
        if !t.is_over() {
            walk_tree(&t, seen, count)?;
        } else {
            position_ok(&t)?;
        }
    }
    Ok(())
}

fn random_playout(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=12);
    let g = random_corpus(seed, 1, n..=n).remove(0);
    let variants = all_variants();
    let cfg = variants[rng.gen_range(0..variants.len())];
    let mut s = GameState::new(cfg, g).map_err(|e| e.to_string())?;
    let mut plies = 0;
    while !s.is_over() {
        position_ok(&s)?;
        let mv = random_move(&s, seed).ok_or_else(|| format!("no move at {s:?}"))?;
        let t = s.after(mv).map_err(|e| e.to_string())?;
        move_ok(&s, mv, &t)?;
        s = t;
        plies += 1;
        if plies > 4 * s.n() + 4 {
            return Err(format!("game did not terminate: {s:?}"));
        }
    }
    position_ok(&s)
}

/// Random positions reached by seeded play, for the swap and relabelling checks.
fn sample_positions(cfg: GameConfig, g: &Graph, seed: u64, count: usize) -> Vec<GameState> {
    let mut out = Vec::new();
    for k in 0..count as u64 {
        let mut s = GameState::new(cfg, g.clone()).expect("valid fixture");
        let depth = (k as usize) % 4;
        for _ in 0..depth {
            if s.is_over() {
                break;
            }
            let mv = random_move(&s, seed ^ k).expect("ongoing");
            s.apply(mv).expect("legal");
        }
        if !s.is_over() {
            out.push(s);
        }
    }
    out
}

fn c11_properties() -> Check {
    let small: Vec<Graph> = corpus_of(CorpusKind::IsolateFree, 2..=5).expect("in range");
    let variants = all_variants();
    let jobs: Vec<(usize, GameConfig)> =
        (0..small.len()).flat_map(|i| variants.iter().map(move |&v| (i, v))).collect();
    let counts: Vec<Result<u64, String>> = jobs
        .par_iter()
        .map(|&(i, cfg)| {
            let s = GameState::new(cfg, small[i].clone()).map_err(|e| e.to_string())?;
            let mut count = 0;
            walk_tree(&s, &mut FxHashSet::default(), &mut count)?;
            let memo = Solver::default().value(&s).map_err(|e| e.to_string())?;
            let plain = Solver::without_memo(SolverLimits::default()).value(&s).map_err(|e| e.to_string())?;
            if memo != plain {
                return Err(format!("memo {memo} vs plain {plain} on {} {cfg:?}", emit_graph6(&small[i])));
            }
            Ok(count)
        })
        .collect();
    let positions: u64 = counts.into_iter().collect::<Result<Vec<_>, _>>()?.iter().sum();

    let seeds: Vec<u64> = (0..10_000).collect();
    all_ok(&seeds, |&seed| random_playout(seed))?;

    // palette swap: value unchanged, and the swapped best move still wins
    let fixtures = ["cycle:8", "path:5", "union:cycle:3+path:2", "petersen", "complete:4"];
    let ddg: Vec<_> = fixtures
        .iter()
        .flat_map(|f| [Player::Dom, Player::Sepy].map(|p| (gen(f).graph, GameConfig::ddg(p))))
        .collect();
    all_ok(&ddg, |(g, cfg)| {
        for s in sample_positions(*cfg, g, 11, 20) {
            let mut solver = Solver::default();
            let swapped = s.palette_swapped();
            let v = solver.value(&s).map_err(|e| e.to_string())?;
            if Solver::default().value(&swapped).map_err(|e| e.to_string())? != v {
                return Err(format!("palette swap changes the winner at {s:?}"));
            }
            let bm = solver.best_move(&s).map_err(|e| e.to_string())?;
            if bm.winning {
                let t = swapped.after(swap_move(bm.mv)).map_err(|e| e.to_string())?;
                if Solver::default().value(&t).map_err(|e| e.to_string())? != s.actor() {
                    return Err(format!("swapped best move loses at {s:?}"));
                }
            }
        }
        Ok(())
    })?;

    // relabelling: 100 random vertex permutations per fixture
    let iso_fixtures: Vec<(&str, GameConfig)> = vec![
        ("cycle:8", GameConfig::ddg(Player::Dom)),
        ("path:6", GameConfig::ddg(Player::Dom)),
        ("union:cycle:4+path:3", GameConfig::ddg(Player::Sepy).with_pass(PassRights::Sepy)),
        ("complete:5", GameConfig::bdg(Player::Sepy)),
        ("union:cycle:3+cycle:4", GameConfig::biased(Player::Dom, 2, 1)),
    ];
    all_ok(&iso_fixtures, |(spec, cfg)| {
        let g = gen(spec).graph;
        let want = solve(*cfg, &g).map_err(|e| e.to_string())?.winner;
        let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let h = g.permuted(&perm);
            let got = solve(*cfg, &h).map_err(|e| e.to_string())?.winner;
            if got != want {
                return Err(format!("relabelling {perm:?} of {spec} changes the winner"));
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{positions} positions over {} game trees, 10000 playouts, swap and relabelling checks clean",
        jobs.len()
    ))
}

/// Brute-force matching number, written independently of the blossom code.
fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, used: u32) -> usize {
        let Some(v) = (0..g.n()).find(|&v| used & (1 << v) == 0) else { return 0 };
        let skip = go(g, used | 1 << v);
        g.neighbors(v)
            .iter()
            .filter(|&&u| used & (1 << u) == 0)
            .map(|&u| 1 + go(g, used | 1 << v | 1 << u))
            .fold(skip, usize::max)
    }
    go(g, 0)
}

fn c12_graph_core() -> Check {
    let mut checked = 0;
    for n in 1..=8 {
        let graphs = enumerate_graphs(n).map_err(|e| e.to_string())?;
        let bad: Vec<_> = graphs
            .par_iter()
            .filter(|g| maximum_matching(g).size() != brute_matching(g))
            .map(|g| emit_graph6(g))
            .collect();
        if let Some(g) = bad.first() {
            return Err(format!("matching size differs from brute force on {g}"));
        }
        checked += graphs.len();
        if n <= 7 {
            for g in graphs.iter().filter(|g| g.first_isolated().is_none()) {
                let m = maximum_matching(g);
                classify_matching(g, &m.pairs).map_err(|e| format!("{}: {e}", emit_graph6(g)))?;
            }
        }
    }
    let petersen = maximum_matching(&Graph::petersen()).size();
    if petersen != 5 {
        return Err(format!("Petersen matching has size {petersen}"));
    }
    for n in 1..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            let text = emit_graph6(g);
            let back = parse_graph6(&text).map_err(|e| e.to_string())?;
            if back != *g || emit_graph6(&back) != text {
                return Err(format!("graph6 round trip fails on {text}"));
            }
        }
    }
    let counts: Vec<usize> = (2..=6).map(|n| enumerate_connected_graphs(n).map(|v| v.len()).unwrap_or(0)).collect();
    if counts != [1, 2, 6, 21, 112] {
        return Err(format!("connected graph counts {counts:?}"));
    }
    Ok(format!("matching matches brute force on {checked} graphs; Petersen 5; graph6 round trip; counts {counts:?}"))
}
