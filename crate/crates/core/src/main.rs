fn main() {
    std::process::exit(sgspec::cli::run(std::env::args_os()));
}
