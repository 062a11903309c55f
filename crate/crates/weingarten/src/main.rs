fn main() {
    std::process::exit(weingarten::cli::run());
}
