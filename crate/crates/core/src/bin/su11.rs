fn main() {
    std::process::exit(su11_multilayer::cli::run(std::env::args_os()));
}
