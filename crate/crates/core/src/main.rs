fn main() {
    std::process::exit(fracevo::cli::run(std::env::args_os()));
}
