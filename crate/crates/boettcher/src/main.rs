fn main() {
    std::process::exit(boettcher::cli::run());
}
