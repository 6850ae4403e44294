fn main() -> std::process::ExitCode {
    domgame::cli::main_with_args(std::env::args_os())
}
