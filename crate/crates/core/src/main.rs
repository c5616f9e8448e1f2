fn main() {
    std::process::exit(boolnet::cli::run(std::env::args_os()));
}
