fn main() {
    std::process::exit(reverse_schwarz::cli::run());
}
