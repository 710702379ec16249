fn main() { std::process::exit(pnbundles::cli::main_exit_code()) }
