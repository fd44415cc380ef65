fn main() {
    std::process::exit(jetclosure_cli::main_with(std::env::args_os()));
}
