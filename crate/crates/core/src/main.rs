fn main() {
    std::process::exit(fraccount::cli::run_cli(std::env::args_os()));
}
