fn main() {
    std::process::exit(cec::cli::run());
}
