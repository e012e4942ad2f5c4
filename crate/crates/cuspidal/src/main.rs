fn main() {
    std::process::exit(cuspidal::cli::main_with_args(std::env::args_os()));
}
