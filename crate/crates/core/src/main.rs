fn main() {
    std::process::exit(assoc_poly::cli::run(std::env::args_os()));
}
