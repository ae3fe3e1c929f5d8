fn main() {
    std::process::exit(proplab::cli::run());
}
