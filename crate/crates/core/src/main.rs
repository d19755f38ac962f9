fn main() {
    std::process::exit(hyperlimit::cli::run(std::env::args()));
}
