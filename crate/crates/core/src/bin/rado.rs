fn main() {
    std::process::exit(rado_core::cli::main_with_args(std::env::args_os()));
}
