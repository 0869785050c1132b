fn main() {
    let code = aksch::cli::run(std::env::args(), &mut std::io::stdout());
    std::process::exit(code);
}
