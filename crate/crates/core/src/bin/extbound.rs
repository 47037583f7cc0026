fn main() {
    std::process::exit(extbound::cli::run(std::env::args().collect()));
}
