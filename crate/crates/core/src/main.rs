fn main() {
    std::process::exit(hyperchess::cli::run(std::env::args_os()));
}
