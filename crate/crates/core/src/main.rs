fn main() {
    std::process::exit(leibniz::cli::main());
}
