fn main() {
    std::process::exit(realgroups::cli::run());
}
