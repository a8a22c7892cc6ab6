fn main() {
    std::process::exit(skewes::cli::main_entry());
}
