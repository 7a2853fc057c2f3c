fn main() {
    std::process::exit(decomp::cli::run(std::env::args_os()));
}
