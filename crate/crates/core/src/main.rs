fn main() {
    std::process::exit(primal_deduct::cli::main_with_env());
}
