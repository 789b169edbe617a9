fn main() {
    std::process::exit(quartica::cli::main_with_args(std::env::args_os()));
}
