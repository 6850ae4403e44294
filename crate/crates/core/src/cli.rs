//! The `domgame` command line: gen, solve, verify, play and suite.

use std::io::{BufRead, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::corpus;
use crate::error::{SolveError, StrategyError};
use crate::formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_generator, parse_graph6, GraphSource};
use crate::game::{
    trace_records, Color, GameConfig, GameState, Move, PassRights, Player, TraceRecord,
};
use crate::solver::{solve_with, verify_strategy, SolverLimits, VerificationReport};
use crate::strategy::{build, SolverPlayer, Strategy, StrategyId};
use crate::suite;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_RESOURCE: u8 = 2;
pub const EXIT_NOT_APPLICABLE: u8 = 3;
pub const EXIT_EOF: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "domgame", version, about = "Disjoint and Bicolored Domination Games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print graphs from a generator spec or a corpus, one per line.
    Gen(GenArgs),
    /// Solve a game exactly and print the result as JSON.
    Solve(SolveArgs),
    /// Check that a strategy wins against every opposing line.
    Verify(VerifyArgs),
    /// Play one game between two seats and print its trace.
    Play(PlayArgs),
    /// Run the acceptance battery.
    Suite(SuiteArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Generator spec (`cycle:8`, `union:cycle:4+cycle:8`, `subdiv2:complete:4`, `g6:<code>`),
    /// a graph6 line, or a file holding graph6 or an edge list.
    #[arg(long, conflicts_with = "corpus")]
    pub graph: Option<String>,
    /// Every graph of a kind up to a size: `connected:6`, `isolatefree:6`, `perfectmatching:6`.
    #[arg(long)]
    pub corpus: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Side {
    Dom,
    Sepy,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::Dom => Player::Dom,
            Side::Sepy => Player::Sepy,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum PassFlag {
    None,
    Dom,
    Sepy,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum VariantFlag {
    Ddg,
    Bdg,
}

#[derive(Args, Debug, Clone)]
pub struct GameFlags {
    #[arg(long, value_enum, default_value = "ddg")]
    pub variant: VariantFlag,
    #[arg(long, value_enum, default_value = "dom")]
    pub start: Side,
    /// Which player may skip a turn; the (d:s) game defaults to `sepy`, the others to `none`.
    #[arg(long, value_enum)]
    pub pass: Option<PassFlag>,
    /// Dom's selections per turn.
    #[arg(long, default_value_t = 1)]
    pub d: u8,
    /// Sepy's selections per turn (at most).
    #[arg(long, default_value_t = 1)]
    pub s: u8,
    /// Allow a whole-turn pass as the very first move.
    #[arg(long)]
    pub first_turn_pass: bool,
}

impl GameFlags {
    pub fn config(&self) -> Result<GameConfig, String> {
        let starter = self.start.into();
        let mut cfg = match self.variant {
            VariantFlag::Bdg => GameConfig::bdg(starter),
            VariantFlag::Ddg if self.d != 1 || self.s != 1 => GameConfig::biased(starter, self.d, self.s),
            VariantFlag::Ddg => GameConfig::ddg(starter),
        };
        if matches!(self.variant, VariantFlag::Bdg) && (self.d != 1 || self.s != 1) {
            return Err("the Bicolored game is unbiased".into());
        }
        if let Some(p) = self.pass {
            cfg = cfg.with_pass(match p {
                PassFlag::None => PassRights::None,
                PassFlag::Dom => PassRights::Dom,
                PassFlag::Sepy => PassRights::Sepy,
            });
        }
        cfg.allow_first_turn_pass = self.first_turn_pass;
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: Source,
    /// Output format.
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GenFormat,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum GenFormat {
    Graph6,
    Edges,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub game: GameFlags,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub game: GameFlags,
    #[arg(long)]
    pub strategy: StrategyId,
    /// Seat the strategy plays; defaults to the seat it was written for.
    #[arg(long, value_enum)]
    pub role: Option<Side>,
    /// Write failing reports (with counterexample traces) here as JSON lines.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct PlayArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub game: GameFlags,
    /// Dom's seat: a strategy id, `solver` or `human`.
    #[arg(long, default_value = "random")]
    pub dom: String,
    /// Sepy's seat: a strategy id, `solver` or `human`.
    #[arg(long, default_value = "random")]
    pub sepy: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Comma-separated criterion ids or group names.
    #[arg(long)]
    pub only: Option<String>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, msg: msg.into() }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::VertexCap { .. } | SolveError::TableFull(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<StrategyError> for Failure {
    fn from(e: StrategyError) -> Self {
        let code = match e {
            StrategyError::NotApplicable { .. } => EXIT_NOT_APPLICABLE,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

/// Resolve one `--graph` value: a file, a generator spec, or a bare graph6 line.
pub fn load_graph(arg: &str) -> Result<GraphSource, String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        let line = text.trim();
        let g = match parse_graph6(line) {
            Ok(g) if !line.contains(char::is_whitespace) => g,
            _ => parse_edge_list(&text).map_err(|e| format!("{arg}: {e}"))?,
        };
        return Ok(GraphSource::plain(arg, g));
    }
    match parse_generator(arg) {
        Ok(src) => Ok(src),
        Err(gen_err) => parse_graph6(arg)
            .map(|g| GraphSource::plain(arg, g))
            .map_err(|_| gen_err.to_string()),
    }
}

fn sources(s: &Source) -> Result<Vec<GraphSource>, Failure> {
    match (&s.graph, &s.corpus) {
        (Some(g), None) => Ok(vec![load_graph(g).map_err(usage)?]),
        (None, Some(c)) => Ok(corpus(c)
            .map_err(usage)?
            .into_iter()
            .map(|g| GraphSource::plain(emit_graph6(&g), g))
            .collect()),
        _ => Err(usage("give exactly one of --graph or --corpus")),
    }
}

#[derive(Serialize)]
struct SolveJson {
    graph: String,
    config: GameConfig,
    winner: Player,
    nodes: u64,
    pv: Vec<Move>,
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data")
}

fn cmd_gen(a: &GenArgs) -> Result<(), Failure> {
    for src in sources(&a.source)? {
        match a.format {
            GenFormat::Graph6 => println!("{}", emit_graph6(&src.graph)),
            GenFormat::Edges => print!("{}", emit_edge_list(&src.graph)),
        }
    }
    Ok(())
}

fn cmd_solve(a: &SolveArgs) -> Result<(), Failure> {
    let cfg = a.game.config().map_err(usage)?;
    for src in sources(&a.source)? {
        let r = solve_with(cfg, &src.graph, SolverLimits::default())?;
        let out = SolveJson { graph: emit_graph6(&src.graph), config: cfg, winner: r.winner, nodes: r.nodes_expanded, pv: r.pv };
        println!("{}", json_line(&out));
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> Result<(), Failure> {
    let cfg = a.game.config().map_err(usage)?;
    let role = match (a.role, a.strategy.role()) {
        (Some(r), _) => r.into(),
        (None, Some(r)) => r,
        (None, None) => return Err(usage("--role is required for baseline strategies")),
    };
    let srcs = sources(&a.source)?;
    let reports: Vec<Result<VerificationReport, StrategyError>> = {
        use rayon::prelude::*;
        srcs.par_iter().map(|src| verify_strategy(a.strategy, role, cfg, src)).collect()
    };
    let mut failed = Vec::new();
    let mut verified = 0;
    for r in reports {
        let r = r?;
        if r.verified {
            verified += 1;
        } else {
            failed.push(r);
        }
    }
    if srcs.len() == 1 || !failed.is_empty() {
        for r in &failed {
            println!("{}", json_line(r));
        }
    }
    if let Some(path) = &a.out {
        let body: String = failed.iter().map(|r| json_line(r) + "\n").collect();
        std::fs::write(path, body).map_err(|e| Failure { code: EXIT_RESOURCE, msg: format!("{path}: {e}") })?;
    }
    println!(
        "{}",
        json_line(&serde_json::json!({
            "strategy": a.strategy.name(),
            "role": role,
            "graphs": srcs.len(),
            "verified": verified,
            "failed": failed.len(),
        }))
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure { code: EXIT_USAGE, msg: format!("{} of {} graphs not verified", failed.len(), srcs.len()) })
    }
}

enum Seat {
    Strategy(Box<dyn Strategy>),
    Solver(SolverPlayer),
    Human,
}

fn seat(name: &str, role: Player, cfg: &GameConfig, src: &GraphSource, seed: u64) -> Result<Seat, Failure> {
    match name {
        "human" => Ok(Seat::Human),
        "solver" => Ok(Seat::Solver(SolverPlayer::new(SolverLimits::default()))),
        other => {
            let id: StrategyId = other.parse().map_err(usage)?;
            // give the two seats different streams when both are seeded baselines
            let seed = seed.wrapping_add(if role == Player::Sepy { 0x5EB7 } else { 0 });
            Ok(Seat::Strategy(build(id.with_seed(seed), role, cfg, src)?))
        }
    }
}

fn board(state: &GameState) -> String {
    let cells: Vec<String> = (0..state.n())
        .map(|v| match state.color_of(v) {
            None => format!("{v}:."),
            Some(c) => format!("{v}:{}", &c.name()[..1]),
        })
        .collect();
    format!("{} to move | {}", state.actor(), cells.join(" "))
}

fn parse_human(line: &str) -> Option<Move> {
    let mut it = line.split_whitespace();
    let first = it.next()?;
    if first == "pass" {
        return it.next().is_none().then_some(Move::Pass);
    }
    let v: usize = first.parse().ok()?;
    let c = match it.next()? {
        "p" | "purple" => Color::Purple,
        "b" | "blue" => Color::Blue,
        _ => return None,
    };
    it.next().is_none().then_some(Move::select(v, c))
}

fn human_move(state: &GameState, input: &mut impl BufRead) -> Result<Move, Failure> {
    loop {
        eprintln!("{}", board(state));
        eprint!("move (`v purple|blue` or `pass`): ");
        let _ = std::io::stderr().flush();
        let mut line = String::new();
        let read = input.read_line(&mut line).map_err(|e| Failure { code: EXIT_EOF, msg: e.to_string() })?;
        if read == 0 {
            return Err(Failure { code: EXIT_EOF, msg: "end of input".into() });
        }
        match parse_human(&line) {
            Some(mv) if state.is_legal(&mv) => return Ok(mv),
            Some(mv) => eprintln!("{mv} is not legal here"),
            None => eprintln!("could not read `{}`", line.trim()),
        }
    }
}

/// Play one game to the end; returns the final state.
pub fn play_game(
    cfg: GameConfig,
    src: &GraphSource,
    dom: &str,
    sepy: &str,
    seed: u64,
    input: &mut impl BufRead,
) -> Result<GameState, Failure> {
    let seats = [seat(dom, Player::Dom, &cfg, src, seed)?, seat(sepy, Player::Sepy, &cfg, src, seed)?];
    let mut state = GameState::new(cfg, src.graph.clone()).map_err(|e| usage(e.to_string()))?;
    while !state.is_over() {
        let idx = usize::from(state.actor() == Player::Sepy);
        let mv = match &seats[idx] {
            Seat::Strategy(s) => s.choose(&state)?,
            Seat::Solver(s) => s.choose(&state)?,
            Seat::Human => human_move(&state, input)?,
        };
        state.apply(mv).map_err(|e| usage(e.to_string()))?;
    }
    Ok(state)
}

#[derive(Serialize)]
struct WinnerLine {
    winner: Player,
    plies: usize,
}

fn cmd_play(a: &PlayArgs) -> Result<(), Failure> {
    let cfg = a.game.config().map_err(usage)?;
    let srcs = sources(&a.source)?;
    let [src] = srcs.as_slice() else { return Err(usage("play needs a single --graph")) };
    let stdin = std::io::stdin();
    let state = play_game(cfg, src, &a.dom, &a.sepy, a.seed, &mut stdin.lock())?;
    let records: Vec<TraceRecord> = trace_records(&state);
    let mut body: String = records.iter().map(|r| json_line(r) + "\n").collect();
    let winner = state.status().winner().expect("game finished");
    body += &json_line(&WinnerLine { winner, plies: records.len() });
    body.push('\n');
    match &a.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure { code: EXIT_RESOURCE, msg: format!("{path}: {e}") }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_suite(a: &SuiteArgs) -> Result<(), Failure> {
    let chosen = suite::select(a.only.as_deref()).map_err(usage)?;
    let mut failed = Vec::new();
    for c in chosen {
        let r = suite::run_criterion(c);
        println!("{r}");
        if !r.passed {
            failed.push(r.id.to_string());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(usage(format!("failing criteria: {}", failed.join(","))))
    }
}

pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Play(a) => cmd_play(a),
        Command::Suite(a) => cmd_suite(a),
    }
}

/// Parse arguments, run, and map failures to exit codes.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("domgame: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_input() {
        assert_eq!(parse_human("3 p\n"), Some(Move::select(3, Color::Purple)));
        assert_eq!(parse_human("0 blue"), Some(Move::select(0, Color::Blue)));
        assert_eq!(parse_human("pass"), Some(Move::Pass));
        assert_eq!(parse_human("3"), None);
        assert_eq!(parse_human("x p"), None);
    }

    #[test]
    fn flags_build_configs() {
        let cli = Cli::try_parse_from(["domgame", "solve", "--graph", "cycle:4", "--start", "sepy", "--pass", "sepy"]).unwrap();
        let Command::Solve(a) = cli.command else { panic!() };
        assert_eq!(a.game.config().unwrap(), GameConfig::ddg(Player::Sepy).with_pass(PassRights::Sepy));
        let cli = Cli::try_parse_from(["domgame", "solve", "--graph", "cycle:4", "--d", "2"]).unwrap();
        let Command::Solve(a) = cli.command else { panic!() };
        assert_eq!(a.game.config().unwrap(), GameConfig::biased(Player::Dom, 2, 1));
    }

    #[test]
    fn graph_arguments() {
        assert_eq!(load_graph("cycle:5").unwrap().graph.n(), 5);
        assert_eq!(load_graph("Cr").unwrap().graph.n(), 4);
        assert!(load_graph("nonsense:5").is_err());
    }
}
