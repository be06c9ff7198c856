fn main() {
    std::process::exit(emlab::cli::run(std::env::args_os()));
}
