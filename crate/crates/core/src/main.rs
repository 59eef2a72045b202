fn main() {
    let code = lazyhom::cli::run(std::env::args_os());
    std::process::exit(code);
}
