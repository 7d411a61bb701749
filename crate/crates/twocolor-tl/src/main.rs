fn main() {
    std::process::exit(twocolor_tl::cli::run(std::env::args()));
}
