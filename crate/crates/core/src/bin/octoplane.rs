fn main() {
    std::process::exit(octoplane::cli::dispatch(std::env::args_os()));
}
