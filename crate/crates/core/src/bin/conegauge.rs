fn main() {
    std::process::exit(conegauge::cli::main_with_args(std::env::args_os()));
}
