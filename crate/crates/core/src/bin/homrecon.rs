fn main() {
    std::process::exit(homrecon::cli::run_cli(std::env::args()));
}
