fn main() {
    std::process::exit(flowhom::cli::main());
}
