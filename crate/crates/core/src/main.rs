fn main() {
    std::process::exit(orbifold_ring::cli::run(std::env::args_os()));
}
