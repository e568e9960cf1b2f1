fn main() {
    std::process::exit(higher_specht::cli::run(std::env::args_os()));
}
