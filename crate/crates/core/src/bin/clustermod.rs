fn main() {
    std::process::exit(clustermod::cli::main_entry());
}
