fn main() {
    std::process::exit(knotinv::cli::main());
}
