fn main() {
    std::process::exit(donoghue::cli::run(std::env::args_os()));
}
