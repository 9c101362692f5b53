fn main() {
    std::process::exit(smashkit::cli::run(std::env::args()));
}
