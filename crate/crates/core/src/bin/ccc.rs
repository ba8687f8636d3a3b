fn main() {
    std::process::exit(cyclic_coloring::cli::run(std::env::args_os()));
}
