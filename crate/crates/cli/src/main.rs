fn main() {
    std::process::exit(rlcdoc_cli::run(std::env::args_os()));
}
