fn main() {
    std::process::exit(voganscan::cli::run(std::env::args_os()));
}
