fn main() {
    std::process::exit(triarray::cli::main_with_args(std::env::args_os()));
}
