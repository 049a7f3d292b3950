fn main() {
    std::process::exit(yokonuma::cli::main_with_args(std::env::args_os()));
}
