fn main() {
    let outcome = chebvar_cli::run(std::env::args_os());
    std::process::exit(chebvar_cli::finish(&outcome));
}
